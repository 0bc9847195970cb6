#include "hsa/derive.hpp"

#include "hsa/errors.hpp"

#include <algorithm>

namespace hsa {

int QuantumBuilder::add_root_gen(const std::string& name, int parity, std::vector<int> wt) {
    int g = p_.add_generator(name, parity, 1);
    GenInfo gi;
    gi.wt = std::move(wt);
    info_.push_back(std::move(gi));
    return g;
}

std::pair<int, int> QuantumBuilder::add_k_pair(const std::string& name, std::vector<int> alpha) {
    int k = p_.add_generator(name, 0, 0);
    GenInfo gi;
    gi.is_k = true;
    gi.alpha = alpha;
    gi.wt.assign(alpha.size(), 0);
    info_.push_back(gi);
    int ki = p_.add_generator(name + "^-1", 0, 0);
    GenInfo gj;
    gj.is_k = true;
    gj.k_sign = -1;
    gj.alpha = std::move(alpha);
    gj.wt.assign(gi.wt.size(), 0);
    info_.push_back(std::move(gj));
    return {k, ki};
}

void QuantumBuilder::set_composite(int g, int a, int b, Scalar c_ab, Scalar c_ba) {
    GenInfo& gi = info_[(size_t)g];
    gi.a = a;
    gi.b = b;
    gi.c_ab = c_ab;
    gi.c_ba = c_ba;
    // consistency: declared weight must match the sum of the constituents
    for (size_t i = 0; i < gi.wt.size(); ++i)
        if (gi.wt[i] != info_[(size_t)a].wt[i] + info_[(size_t)b].wt[i])
            throw domain_error("composite weight mismatch for " + p_.gen(g).name);
    // defining rule, oriented on the descending word of the pair
    Element X = Element::generator(g);
    if (a > b) {
        Element rhs = Element::from_word(word_of({b, a}), -gi.c_ba / gi.c_ab) + X * gi.c_ab.inv();
        p_.add_rule(word_of({a, b}), rhs);
    } else {
        Element rhs = Element::from_word(word_of({a, b}), -gi.c_ab / gi.c_ba) + X * gi.c_ba.inv();
        p_.add_rule(word_of({b, a}), rhs);
    }
}

int QuantumBuilder::inner(const std::vector<int>& u, const std::vector<int>& v) const {
    int s = 0;
    for (size_t i = 0; i < form_.size(); ++i) s += u[i] * v[i] * form_[i];
    return s;
}

Element QuantumBuilder::def_element(int g) const {
    const GenInfo& gi = info_[(size_t)g];
    if (gi.a < 0) throw domain_error("not a composite generator");
    return Element::from_word(word_of({gi.a, gi.b}), gi.c_ab) +
           Element::from_word(word_of({gi.b, gi.a}), gi.c_ba);
}

void QuantumBuilder::add_cartan_rules() {
    int ngen = (int)p_.size();
    for (int k = 0; k < ngen; ++k) {
        if (!info_[(size_t)k].is_k) continue;
        // pair inverse: the partner is adjacent by construction
        for (int j = 0; j < ngen; ++j) {
            if (!info_[(size_t)j].is_k || j == k) continue;
            if (info_[(size_t)j].alpha == info_[(size_t)k].alpha &&
                info_[(size_t)j].k_sign == -info_[(size_t)k].k_sign) {
                p_.add_rule(word_of({k, j}), Element::unit());
            } else if (j < k) {
                p_.add_rule(word_of({k, j}), Element::from_word(word_of({j, k})));
            }
        }
        // k-moves over every root generator
        for (int x = 0; x < ngen; ++x) {
            if (info_[(size_t)x].is_k) continue;
            int e = inner(info_[(size_t)k].alpha, info_[(size_t)x].wt) * info_[(size_t)k].k_sign;
            p_.add_rule(word_of({k, x}), Element::from_word(word_of({x, k}), Scalar::q(e)));
        }
    }
}

bool QuantumBuilder::has_pair_rule(int x, int y) const {
    Word w = word_of({x, y});
    for (const Rule& r : p_.rules())
        if (r.lhs == w) return true;
    return false;
}

int QuantumBuilder::height(int g) const {
    const GenInfo& gi = info_[(size_t)g];
    if (gi.a < 0) return 1;
    return height(gi.a) + height(gi.b);
}

std::vector<std::string> QuantumBuilder::derive_remaining(bool allow_partial) {
    struct Pending {
        int x, y, h;
    };
    std::vector<Pending> pending;
    int ngen = (int)p_.size();
    for (int x = 0; x < ngen; ++x) {
        if (info_[(size_t)x].is_k) continue; // k-moves already present
        for (int y = 0; y <= x; ++y) {
            if (info_[(size_t)y].is_k) continue;
            if (x == y && (p_.gen(x).parity == 0)) continue; // even squares are normal
            if (has_pair_rule(x, y)) continue;
            pending.push_back({x, y, height(x) + height(y)});
        }
    }
    std::sort(pending.begin(), pending.end(),
              [](const Pending& a, const Pending& b) { return a.h < b.h; });

    auto word_sorted = [&](const Element& e) {
        for (const auto& [w, c] : e.terms()) {
            (void)c;
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1] && !has_pair_rule(w[i], w[i + 1])) return false;
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] == w[i + 1] && p_.gen(w[i]).parity == 1 &&
                    !has_pair_rule(w[i], w[i]))
                    return false;
        }
        return true;
    };

    bool progress = true;
    int scans = 0;
    while (progress && !pending.empty()) {
        progress = false;
        std::vector<Pending> next;
        for (const Pending& pr : pending) {
            const GenInfo& gx = info_[(size_t)pr.x];
            const GenInfo& gy = info_[(size_t)pr.y];
            Element expr;
            if (gx.a >= 0)
                expr = def_element(pr.x) * Element::generator(pr.y);
            else if (gy.a >= 0)
                expr = Element::generator(pr.x) * def_element(pr.y);
            else {
                if (allow_partial) {
                    next.push_back(pr);
                    continue;
                }
                throw domain_error("no base rule for simple pair " + p_.gen(pr.x).name + ", " +
                                   p_.gen(pr.y).name);
            }
            // expr equals x*y in the algebra; its normal form may reconstitute
            // the unknown word x y via the defining rules, so solve
            // (1 - lambda) x y = rest.
            Word pair_word = word_of({pr.x, pr.y});
            auto try_rule = [&](const Element& nf, bool reversed) {
                Scalar lambda(0);
                Element rest;
                for (const auto& [w, c] : nf.terms()) {
                    if (w == pair_word) {
                        lambda = c;
                        continue;
                    }
                    if (w.find(pair_word) != Word::npos) return false;
                    rest.add_term(w, c);
                }
                Element rhs;
                if (!reversed) {
                    if (lambda == Scalar(1)) return false;
                    rhs = rest * (Scalar(1) - lambda).inv();
                } else {
                    // nf is an expansion of the (normal) word y x, so
                    // y x = lambda x y + rest, i.e. x y = (y x - rest)/lambda
                    if (lambda.is_zero()) return false;
                    rhs = (Element::from_word(word_of({pr.y, pr.x})) - rest) * lambda.inv();
                }
                for (const auto& [w, c] : rhs.terms()) {
                    (void)c;
                    if (!p_.word_less(w, pair_word)) return false;
                }
                if (!word_sorted(rhs)) return false;
                p_.add_rule(pair_word, rhs);
                return true;
            };
            try {
                if (try_rule(p_.normal_form(expr, 200000), false)) {
                    progress = true;
                    continue;
                }
                // reverse expansion of y x
                if (pr.x != pr.y) {
                    Element expr_rev;
                    if (gy.a >= 0)
                        expr_rev = def_element(pr.y) * Element::generator(pr.x);
                    else if (gx.a >= 0)
                        expr_rev = Element::generator(pr.y) * def_element(pr.x);
                    if (!expr_rev.is_zero() && try_rule(p_.normal_form(expr_rev, 200000), true)) {
                        progress = true;
                        continue;
                    }
                }
            } catch (const step_budget_exceeded&) {
            }
            next.push_back(pr);
        }
        pending = std::move(next);
        if (!progress && !pending.empty() && scans < (allow_partial ? 2 : 64)) {
            ++scans;
            // stalled: harvest unresolved overlap ambiguities of the current
            // rules; an ambiguity whose leading word is a pending pair word is
            // exactly the missing straightening identity
            std::vector<std::pair<Word, Element>> found;
            auto already = [&](const Word& lead) {
                for (const auto& [w, e] : found) {
                    (void)e;
                    if (w == lead) return true;
                }
                return false;
            };
            size_t nrules = p_.rules().size();
            auto one_step = [&](const Word& w, size_t pos, size_t ri) {
                const Rule& rule = p_.rules()[ri];
                Element out;
                Word prefix = w.substr(0, pos);
                Word suffix = w.substr(pos + rule.lhs.size());
                for (const auto& [rw, rc] : rule.rhs.terms()) out.add_term(prefix + rw + suffix, rc);
                return out;
            };
            for (size_t a = 0; a < nrules; ++a) {
                for (size_t b = 0; b < nrules; ++b) {
                    Word A = p_.rules()[a].lhs, B = p_.rules()[b].lhs;
                    for (size_t s = 1; s < A.size(); ++s) {
                        size_t ov = A.size() - s;
                        if (ov >= B.size()) continue;
                        if (A.compare(s, ov, B, 0, ov) != 0) continue;
                        Word w = A + B.substr(ov);
                        if (p_.word_weight(w) > 4) continue;
                        Element diff;
                        try {
                            diff = p_.normal_form(one_step(w, 0, a), 20000) -
                                   p_.normal_form(one_step(w, s, b), 20000);
                        } catch (const step_budget_exceeded&) {
                            continue;
                        }
                        if (diff.is_zero()) continue;
                        Word lead;
                        Scalar lead_c;
                        for (const auto& [dw, dc] : diff.terms())
                            if (lead.empty() || p_.word_less(lead, dw)) {
                                lead = dw;
                                lead_c = dc;
                            }
                        auto match =
                            std::find_if(pending.begin(), pending.end(), [&](const Pending& pr) {
                                return lead == word_of({pr.x, pr.y});
                            });
                        if (match == pending.end() || already(lead)) continue;
                        Element rhs;
                        bool ok = true;
                        for (const auto& [dw, dc] : diff.terms()) {
                            if (dw == lead) continue;
                            if (dw.find(lead) != Word::npos) ok = false;
                            rhs.add_term(dw, -dc / lead_c);
                        }
                        for (const auto& [dw, dc] : rhs.terms()) {
                            (void)dc;
                            if (!p_.word_less(dw, lead)) ok = false;
                        }
                        if (!ok || !word_sorted(rhs)) continue;
                        found.emplace_back(lead, rhs);
                    }
                }
            }
            for (auto& [lead, rhs] : found) {
                p_.add_rule(lead, std::move(rhs));
                pending.erase(std::find_if(pending.begin(), pending.end(), [&](const Pending& pr) {
                    return lead == word_of({pr.x, pr.y});
                }));
                progress = true;
            }
        }
    }
    std::vector<std::string> unresolved;
    for (const Pending& pr : pending)
        unresolved.push_back(p_.gen(pr.x).name + " * " + p_.gen(pr.y).name);
    if (!unresolved.empty() && !allow_partial)
        throw domain_error("straightening derivation stuck at " + unresolved.front());
    return unresolved;
}

} // namespace hsa
