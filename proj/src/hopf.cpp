#include "hsa/hopf.hpp"

#include "hsa/errors.hpp"

namespace hsa {



TensorElement tensor_multiply(const TensorElement& s, const TensorElement& t,
                              const Presentation& p, uint64_t max_steps) {
    if (s.arity() != t.arity()) throw domain_error("tensor arity mismatch");
    size_t k = s.arity();
    TensorElement raw(k);
    for (const auto& [ka, ca] : s.terms()) {
        // parities of the a-components, partial sums from the right
        std::vector<int> pa(k);
        for (size_t i = 0; i < k; ++i) pa[i] = p.word_parity(ka[i]);
        for (const auto& [kb, cb] : t.terms()) {
            int sign = 0;
            for (size_t i = 0; i < k; ++i)
                for (size_t j = i + 1; j < k; ++j) sign += p.word_parity(kb[i]) * pa[j];
            TensorElement::Key key(k);
            for (size_t i = 0; i < k; ++i) key[i] = ka[i] + kb[i];
            Scalar c = ca * cb;
            if (sign & 1) c = -c;
            raw.add_term(key, c);
        }
    }
    // reduce components
    TensorElement out(k);
    for (const auto& [key, c] : raw.terms()) {
        std::vector<Element> comps(k);
        bool zero = false;
        for (size_t i = 0; i < k; ++i) {
            comps[i] = p.normal_form(Element::from_word(key[i]), max_steps);
            if (comps[i].is_zero()) {
                zero = true;
                break;
            }
        }
        if (zero) continue;
        // expand the product of reduced components
        std::vector<std::pair<TensorElement::Key, Scalar>> acc{{TensorElement::Key(k), c}};
        for (size_t i = 0; i < k; ++i) {
            std::vector<std::pair<TensorElement::Key, Scalar>> next;
            for (const auto& [pk, pc] : acc)
                for (const auto& [w, wc] : comps[i].terms()) {
                    TensorElement::Key nk = pk;
                    nk[i] = w;
                    next.emplace_back(std::move(nk), pc * wc);
                }
            acc = std::move(next);
        }
        for (auto& [kk, cc] : acc) out.add_term(kk, cc);
    }
    return out;
}

TensorElement graded_flip(const TensorElement& t, const Presentation& p) {
    if (t.arity() != 2) throw domain_error("graded_flip needs arity 2");
    TensorElement out(2);
    for (const auto& [k, c] : t.terms()) {
        int sign = p.word_parity(k[0]) * p.word_parity(k[1]);
        out.add_term({k[1], k[0]}, (sign & 1) ? -c : c);
    }
    return out;
}

TensorElement coproduct(const Element& x, const Presentation& p, const HopfData& h,
                        uint64_t max_steps) {
    TensorElement out(2);
    for (const auto& [w, c] : x.terms()) {
        TensorElement acc = TensorElement::unit(2) * c;
        for (unsigned char g : w) acc = tensor_multiply(acc, h.delta[g], p, max_steps);
        out = out + acc;
    }
    return out;
}

Scalar counit(const Element& x, const Presentation& p, const HopfData& h) {
    (void)p;
    Scalar out(0);
    for (const auto& [w, c] : x.terms()) {
        Scalar v = c;
        for (unsigned char g : w) {
            v *= h.eps[g];
            if (v.is_zero()) break;
        }
        out += v;
    }
    return out;
}

Element antipode(const Element& x, const Presentation& p, const HopfData& h,
                 uint64_t max_steps) {
    Element out;
    for (const auto& [w, c] : x.terms()) {
        // S(g1...gr) = (-1)^(sum_{i<j} [gi][gj]) S(gr)...S(g1)
        int sign = 0;
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                sign += p.gen(w[i]).parity * p.gen(w[j]).parity;
        Element acc = Element::unit();
        for (size_t i = w.size(); i-- > 0;) acc = acc * h.antipode[w[i]];
        out += acc * ((sign & 1) ? -c : c);
    }
    return p.normal_form(out, max_steps);
}

TensorElement iterated_coproduct(const Element& x, const Presentation& p, const HopfData& h,
                                 size_t k, uint64_t max_steps) {
    if (k == 0) {
        TensorElement t(1);
        Element nf = p.normal_form(x, max_steps);
        for (const auto& [w, c] : nf.terms()) t.add_term({w}, c);
        return t;
    }
    TensorElement cur = coproduct(x, p, h, max_steps);
    for (size_t step = 1; step < k; ++step) {
        // expand the first slot; delta is an even map, so no Koszul sign
        TensorElement next(cur.arity() + 1);
        for (const auto& [key, c] : cur.terms()) {
            TensorElement d = coproduct(Element::from_word(key[0]), p, h, max_steps);
            for (const auto& [dk, dc] : d.terms()) {
                TensorElement::Key nk;
                nk.reserve(key.size() + 1);
                nk.push_back(dk[0]);
                nk.push_back(dk[1]);
                for (size_t i = 1; i < key.size(); ++i) nk.push_back(key[i]);
                next.add_term(nk, c * dc);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

HopfAxiomReport check_hopf_axioms(const Presentation& p, const HopfData& h, int weight_bound,
                                  uint64_t max_steps) {
    HopfAxiomReport rep;
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        rep.failure = what;
        return rep;
    };

    if (h.delta.size() < p.size()) return fail("HopfData does not cover all generators");
    // parity consistency of the structure maps
    for (size_t g = 0; g < p.size(); ++g) {
        int gp = p.gen((int)g).parity;
        for (const auto& [k, c] : h.delta[g].terms()) {
            (void)c;
            if (((p.word_parity(k[0]) + p.word_parity(k[1])) & 1) != gp)
                return fail("delta not parity-homogeneous on " + p.gen((int)g).name);
        }
        int sp = p.element_parity(h.antipode[g]);
        if (!h.antipode[g].is_zero() && sp != gp)
            return fail("antipode not parity-homogeneous on " + p.gen((int)g).name);
        if (gp == 1 && !h.eps[g].is_zero())
            return fail("counit nonzero on odd generator " + p.gen((int)g).name);
    }

    auto words = p.normal_words_up_to(weight_bound);
    for (const Word& w : words) {
        Element x = Element::from_word(w);
        TensorElement d = coproduct(x, p, h, max_steps);
        // counit axiom
        Element left, right;
        for (const auto& [k, c] : d.terms()) {
            Scalar e0 = counit(Element::from_word(k[0]), p, h);
            Scalar e1 = counit(Element::from_word(k[1]), p, h);
            left += Element::from_word(k[1], c * e0);
            right += Element::from_word(k[0], c * e1);
        }
        if (left != x || right != x)
            return fail("counit axiom fails on " + p.word_str(w));
        // coassociativity
        TensorElement l3(3), r3(3);
        for (const auto& [k, c] : d.terms()) {
            TensorElement da = coproduct(Element::from_word(k[0]), p, h, max_steps);
            for (const auto& [dk, dc] : da.terms()) l3.add_term({dk[0], dk[1], k[1]}, c * dc);
            TensorElement db = coproduct(Element::from_word(k[1]), p, h, max_steps);
            for (const auto& [dk, dc] : db.terms()) r3.add_term({k[0], dk[0], dk[1]}, c * dc);
        }
        if (l3 != r3) return fail("coassociativity fails on " + p.word_str(w));
        // antipode axiom
        Element conv_l, conv_r;
        for (const auto& [k, c] : d.terms()) {
            conv_l += (antipode(Element::from_word(k[0]), p, h, max_steps) *
                       Element::from_word(k[1])) * c;
            conv_r += (Element::from_word(k[0]) *
                       antipode(Element::from_word(k[1]), p, h, max_steps)) * c;
        }
        Element target(counit(x, p, h));
        if (p.normal_form(conv_l, max_steps) != target ||
            p.normal_form(conv_r, max_steps) != target)
            return fail("antipode axiom fails on " + p.word_str(w));
    }

    // well-definedness on the quotient: the structure maps respect every rule
    for (const Rule& r : p.rules()) {
        Element lhs = Element::from_word(r.lhs);
        if (coproduct(lhs, p, h, max_steps) != coproduct(r.rhs, p, h, max_steps))
            return fail("delta does not respect rule " + p.word_str(r.lhs));
        if (counit(lhs, p, h) != counit(r.rhs, p, h))
            return fail("eps does not respect rule " + p.word_str(r.lhs));
        if (antipode(lhs, p, h, max_steps) != antipode(r.rhs, p, h, max_steps))
            return fail("antipode does not respect rule " + p.word_str(r.lhs));
    }
    return rep;
}

} // namespace hsa
