#include "hsa/rep.hpp"

#include "hsa/errors.hpp"

#include <map>

namespace hsa {

void SparseMat::compress() {
    auto squeeze = [](std::vector<std::vector<std::pair<int, Scalar>>>& adj) {
        for (auto& lst : adj) {
            std::map<int, Scalar> acc;
            for (auto& [k, c] : lst) {
                auto it = acc.find(k);
                if (it == acc.end())
                    acc.emplace(k, c);
                else
                    it->second += c;
            }
            lst.clear();
            for (auto& [k, c] : acc)
                if (!c.is_zero()) lst.emplace_back(k, c);
        }
    };
    squeeze(col);
    squeeze(row);
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
    SparseMat r(n);
    for (size_t j = 0; j < n; ++j)
        for (const auto& [k, c1] : o.col[j])
            for (const auto& [i, c2] : col[(size_t)k]) r.add(i, (int)j, c2 * c1);
    r.compress();
    return r;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
    SparseMat r = *this;
    for (size_t j = 0; j < n; ++j)
        for (const auto& [i, c] : o.col[j]) r.add(i, (int)j, -c);
    r.compress();
    return r;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
    SparseMat r = *this;
    for (size_t j = 0; j < n; ++j)
        for (const auto& [i, c] : o.col[j]) r.add(i, (int)j, c);
    r.compress();
    return r;
}

SparseMat SparseMat::scaled(const Scalar& s) const {
    SparseMat r(n);
    if (s.is_zero()) return r;
    for (size_t j = 0; j < n; ++j)
        for (const auto& [i, c] : col[j]) r.add(i, (int)j, c * s);
    return r;
}

Scalar SparseMat::entry(int i, int j) const {
    Scalar acc(0);
    for (const auto& [r, c] : col[(size_t)j])
        if (r == i) acc += c;
    return acc;
}

SparseMat Rep::of_word(const Word& w) const {
    SparseMat acc(dim);
    for (size_t i = 0; i < dim; ++i) acc.add((int)i, (int)i, Scalar(1));
    for (unsigned char g : w) acc = acc * mats[g];
    return acc;
}

SparseMat Rep::of_element(const Element& e) const {
    SparseMat acc(dim);
    for (const auto& [w, c] : e.terms()) acc = acc + of_word(w).scaled(c);
    return acc;
}

RepCheckResult rep_check(const Rep& r, const Presentation& p) {
    // parity block structure of the generator matrices
    for (size_t g = 0; g < p.size(); ++g) {
        int gp = p.gen((int)g).parity;
        for (size_t j = 0; j < r.dim; ++j)
            for (const auto& [i, c] : r.mats[g].col[j]) {
                (void)c;
                if (((r.parity[(size_t)i] + r.parity[j]) & 1) != gp)
                    return {false, "matrix of " + p.gen((int)g).name + " breaks the grading"};
            }
    }
    for (const Rule& rule : p.rules()) {
        SparseMat diff = r.of_word(rule.lhs) - r.of_element(rule.rhs);
        if (!diff.is_zero())
            return {false, "rule " + p.word_str(rule.lhs) + " -> " + p.element_str(rule.rhs) +
                               " violated"};
    }
    return {true, ""};
}

} // namespace hsa
