#pragma once

#include "hsa/presentation.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace hsa {

// Element of the k-fold graded tensor power of a presented algebra.
class TensorElement {
  public:
    using Key = std::vector<Word>;

    explicit TensorElement(size_t arity = 2) : arity_(arity) {}
    static TensorElement unit(size_t arity) {
        TensorElement t(arity);
        t.terms_[Key(arity)] = Scalar(1);
        return t;
    }

    size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    void add_term(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end())
            terms_.emplace(k, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorElement operator+(const TensorElement& o) const {
        TensorElement r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    TensorElement operator-(const TensorElement& o) const {
        TensorElement r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
        return r;
    }
    TensorElement operator*(const Scalar& s) const {
        TensorElement r(arity_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
        return r;
    }

    bool operator==(const TensorElement& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

  private:
    size_t arity_;
    std::map<Key, Scalar> terms_;
};

// Coproduct, counit and antipode values on generators; extended
// (anti-)homomorphically with Koszul signs by the free functions below.
struct HopfData {
    std::vector<TensorElement> delta; // arity 2, per generator
    std::vector<Scalar> eps;
    std::vector<Element> antipode;

    void set(int gen, TensorElement d, Scalar e, Element s) {
        if ((int)delta.size() <= gen) {
            delta.resize(gen + 1, TensorElement(2));
            eps.resize(gen + 1, Scalar(0));
            antipode.resize(gen + 1);
        }
        delta[gen] = std::move(d);
        eps[gen] = std::move(e);
        antipode[gen] = std::move(s);
    }

    static TensorElement primitive(int gen) {
        TensorElement t(2);
        t.add_term({Word(1, (unsigned char)gen), Word()}, Scalar(1));
        t.add_term({Word(), Word(1, (unsigned char)gen)}, Scalar(1));
        return t;
    }
    static TensorElement grouplike(int gen) {
        TensorElement t(2);
        t.add_term({Word(1, (unsigned char)gen), Word(1, (unsigned char)gen)}, Scalar(1));
        return t;
    }
};

// (a1⊗…⊗ak)(b1⊗…⊗bk) with the Koszul sign (-1)^(sum_{i<j} [b_i][a_j]),
// components reduced to normal form.
TensorElement tensor_multiply(const TensorElement& s, const TensorElement& t,
                              const Presentation& p,
                              uint64_t max_steps = Presentation::kDefaultMaxSteps);

// graded flip a⊗b -> (-1)^([a][b]) b⊗a
TensorElement graded_flip(const TensorElement& t, const Presentation& p);

TensorElement coproduct(const Element& x, const Presentation& p, const HopfData& h,
                        uint64_t max_steps = Presentation::kDefaultMaxSteps);
Scalar counit(const Element& x, const Presentation& p, const HopfData& h);
Element antipode(const Element& x, const Presentation& p, const HopfData& h,
                 uint64_t max_steps = Presentation::kDefaultMaxSteps);
// k+1-fold Sweedler expansion (k = 0 returns x itself as a 1-tensor)
TensorElement iterated_coproduct(const Element& x, const Presentation& p, const HopfData& h,
                                 size_t k, uint64_t max_steps = Presentation::kDefaultMaxSteps);

struct HopfAxiomReport {
    bool ok = true;
    std::string failure; // description of the first violated instance
};

// Verifies coassociativity, the counit and antipode axioms on all normal words
// up to the weight bound, and that delta/eps/antipode respect every rewrite rule.
HopfAxiomReport check_hopf_axioms(const Presentation& p, const HopfData& h, int weight_bound,
                                  uint64_t max_steps = Presentation::kDefaultMaxSteps);

} // namespace hsa
