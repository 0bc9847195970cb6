#pragma once

#include "hsa/hopf.hpp"

#include <string>
#include <vector>

namespace hsa {

// Sparse square matrix over Scalar with both orientations kept for fast
// column and row access.
struct SparseMat {
    size_t n = 0;
    std::vector<std::vector<std::pair<int, Scalar>>> col; // col[j]: (row, coeff)
    std::vector<std::vector<std::pair<int, Scalar>>> row; // row[i]: (col, coeff)

    SparseMat() = default;
    explicit SparseMat(size_t dim) : n(dim), col(dim), row(dim) {}
    void add(int i, int j, Scalar c) {
        if (c.is_zero()) return;
        col[(size_t)j].emplace_back(i, c);
        row[(size_t)i].emplace_back(j, std::move(c));
    }
    static SparseMat unit_entry(size_t dim, int i, int j, Scalar c = Scalar(1)) {
        SparseMat m(dim);
        m.add(i, j, std::move(c));
        return m;
    }
    bool is_zero() const {
        for (const auto& c : col)
            if (!c.empty()) return false;
        return true;
    }
    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    SparseMat operator+(const SparseMat& o) const;
    SparseMat scaled(const Scalar& s) const;
    Scalar entry(int i, int j) const;
    void compress(); // merge duplicate entries, drop zeros
};

// Graded matrix representation of a presented algebra.
struct Rep {
    size_t dim = 0;
    std::vector<int> parity;           // basis parities
    std::vector<SparseMat> mats;       // per generator id
    std::vector<std::string> basis_labels;

    SparseMat of_word(const Word& w) const;
    SparseMat of_element(const Element& e) const;
};

struct RepCheckResult {
    bool ok = true;
    std::string witness;
};

// every rule lhs - rhs maps to the zero matrix
RepCheckResult rep_check(const Rep& r, const Presentation& p);

} // namespace hsa
