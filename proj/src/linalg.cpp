#include "hsa/linalg.hpp"

namespace hsa {

Mat Mat::operator*(const Mat& o) const {
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

Vec Mat::operator*(const Vec& v) const {
    Vec r(rows_, Scalar(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Mat Mat::operator*(const Scalar& s) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        // prefer a constant pivot to limit rational-function growth
        size_t best = m.rows();
        for (size_t i = row; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            if (best == m.rows() || (m.at(i, col).is_constant() && !m.at(best, col).is_constant()))
                best = i;
        }
        if (best == m.rows()) continue;
        // swap rows
        if (best != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(best, j), m.at(row, j));
        Scalar inv = m.at(row, col).inv();
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(Mat m) { return rref(m).size(); }

std::vector<Vec> nullspace(const Mat& a) {
    Mat m = a;
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), Scalar(0));
        v[free] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    Mat aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt; // inconsistent
    Vec x(a.cols(), Scalar(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    Mat m(v.size(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < v.size(); ++i) m.at(i, j) = basis[j][i];
    return solve(m, v).has_value();
}

} // namespace hsa
