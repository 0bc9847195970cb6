#pragma once

#include "hsa/scalar.hpp"

#include <optional>
#include <vector>

namespace hsa {

using Vec = std::vector<Scalar>;

// Dense matrix over the Scalar field.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c) {}
    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Mat operator*(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Scalar& s) const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

  private:
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

// Reduce to row echelon form in place; returns pivot column indices.
std::vector<size_t> rref(Mat& m);
size_t rank(Mat m);
// Basis of the right nullspace {v : Av = 0}.
std::vector<Vec> nullspace(const Mat& a);
// One solution of Ax = b, if any.
std::optional<Vec> solve(const Mat& a, const Vec& b);
// Do the given vectors span v?
bool in_span(const std::vector<Vec>& basis, const Vec& v);

} // namespace hsa
