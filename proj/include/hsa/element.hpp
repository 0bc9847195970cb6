#pragma once

#include "hsa/scalar.hpp"

#include <map>
#include <string>

namespace hsa {

// A word in generator ids; ids are assigned in rank order, so byte-wise
// lexicographic comparison agrees with rank-lexicographic comparison.
using Word = std::basic_string<unsigned char>;

inline Word word_of(std::initializer_list<int> gens) {
    Word w;
    for (int g : gens) w.push_back((unsigned char)g);
    return w;
}

// Finite Scalar-linear combination of words; the universal value type for
// elements of presented algebras. Zero coefficients are never stored.
class Element {
  public:
    Element() = default;
    explicit Element(Scalar c) {
        if (!c.is_zero()) terms_[Word()] = std::move(c);
    }
    static Element unit() { return Element(Scalar(1)); }
    static Element generator(int g) {
        Element e;
        e.terms_[Word(1, (unsigned char)g)] = Scalar(1);
        return e;
    }
    static Element from_word(Word w, Scalar c = Scalar(1)) {
        Element e;
        if (!c.is_zero()) e.terms_[std::move(w)] = std::move(c);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element operator+(const Element& o) const {
        Element r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    Element operator-(const Element& o) const {
        Element r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
        return r;
    }
    Element& operator+=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    Element operator-() const {
        Element r;
        for (const auto& [w, c] : terms_) r.terms_[w] = -c;
        return r;
    }
    Element operator*(const Scalar& s) const {
        Element r;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : terms_) r.terms_[w] = c * s;
        return r;
    }
    // free concatenation product, no reduction
    Element operator*(const Element& o) const {
        Element r;
        for (const auto& [w1, c1] : terms_)
            for (const auto& [w2, c2] : o.terms_) r.add_term(w1 + w2, c1 * c2);
        return r;
    }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

  private:
    std::map<Word, Scalar> terms_;
};

inline Element operator*(const Scalar& s, const Element& e) { return e * s; }

} // namespace hsa
