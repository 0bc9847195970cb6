#include "hsa/pairing.hpp"

#include "hsa/errors.hpp"

namespace hsa {

const Rep& EvalContext::rep(int i) const {
    if (i < 0 || (size_t)i >= reps_.size() || !reps_[(size_t)i])
        throw index_out_of_range("no representation with tag " + std::to_string(i));
    return *reps_[(size_t)i];
}

const std::vector<EvalContext::SweedlerTerm>& EvalContext::sweedler(int gen, size_t arity) const {
    auto key = std::make_pair(gen, arity);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    TensorElement t = iterated_coproduct(Element::generator(gen), *p_, *h_, arity - 1);
    std::vector<SweedlerTerm> terms;
    for (const auto& [k, c] : t.terms()) terms.push_back(SweedlerTerm{k, c});
    return cache_.emplace(key, std::move(terms)).first->second;
}

int midx_parity(const EvalContext& ctx, const std::vector<int>& slots, const MIdx& m) {
    int s = 0;
    for (size_t i = 0; i < m.size(); ++i) s += ctx.rep(slots[i]).parity[m[i]];
    return s & 1;
}

namespace {

// apply a word of generators to one slot basis vector: returns (index, coeff) list
void slot_apply_word(const Rep& r, const Word& w, int basis,
                     std::vector<std::pair<int, Scalar>>& out) {
    out.clear();
    out.emplace_back(basis, Scalar(1));
    for (size_t pos = w.size(); pos-- > 0;) {
        const SparseMat& m = r.mats[w[pos]];
        std::vector<std::pair<int, Scalar>> next;
        for (const auto& [b, c] : out)
            for (const auto& [i, mc] : m.col[(size_t)b]) next.emplace_back(i, c * mc);
        out = std::move(next);
        if (out.empty()) return;
    }
}

void slot_apply_word_transpose(const Rep& r, const Word& w, int basis,
                               std::vector<std::pair<int, Scalar>>& out) {
    out.clear();
    out.emplace_back(basis, Scalar(1));
    for (size_t pos = 0; pos < w.size(); ++pos) {
        const SparseMat& m = r.mats[w[pos]];
        std::vector<std::pair<int, Scalar>> next;
        for (const auto& [a, c] : out)
            for (const auto& [j, mc] : m.row[(size_t)a]) next.emplace_back(j, c * mc);
        out = std::move(next);
        if (out.empty()) return;
    }
}

void sparse_add(SparseVec& v, const MIdx& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = v.find(k);
    if (it == v.end())
        v.emplace(k, c);
    else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

} // namespace

SparseVec tensor_apply_gen(const EvalContext& ctx, const std::vector<int>& slots, int gen,
                           const SparseVec& v) {
    size_t k = slots.size();
    const auto& terms = ctx.sweedler(gen, k == 0 ? 1 : k);
    SparseVec out;
    if (k == 0) return out; // empty tensor space: only eps acts; callers handle arity 0
    std::vector<std::pair<int, Scalar>> slot_out;
    for (const auto& [midx, vc] : v) {
        // prefix parities of the source basis vector
        std::vector<int> pre(k + 1, 0);
        for (size_t i = 0; i < k; ++i)
            pre[i + 1] = pre[i] + ctx.rep(slots[i]).parity[midx[i]];
        for (const auto& term : terms) {
            int sign = 0;
            for (size_t j = 0; j < k; ++j)
                sign += ctx.pres().word_parity(term.comps[j]) * pre[j];
            // build the product of per-slot applications
            std::vector<std::pair<MIdx, Scalar>> acc{{MIdx(), vc * term.coeff}};
            if (sign & 1)
                for (auto& [m, c] : acc) c = -c;
            bool dead = false;
            for (size_t j = 0; j < k && !dead; ++j) {
                slot_apply_word(ctx.rep(slots[j]), term.comps[j], midx[j], slot_out);
                if (slot_out.empty()) {
                    dead = true;
                    break;
                }
                std::vector<std::pair<MIdx, Scalar>> next;
                for (const auto& [m, c] : acc)
                    for (const auto& [i, sc] : slot_out) {
                        MIdx nm = m;
                        nm.push_back((unsigned char)i);
                        next.emplace_back(std::move(nm), c * sc);
                    }
                acc = std::move(next);
            }
            if (dead) continue;
            for (auto& [m, c] : acc) sparse_add(out, m, c);
        }
    }
    return out;
}

SparseVec tensor_apply(const EvalContext& ctx, const std::vector<int>& slots, const Element& x,
                       const SparseVec& v) {
    SparseVec out;
    for (const auto& [w, c] : x.terms()) {
        SparseVec cur = v;
        for (size_t pos = w.size(); pos-- > 0;) {
            cur = tensor_apply_gen(ctx, slots, w[pos], cur);
            if (cur.empty()) break;
        }
        for (const auto& [m, vc] : cur) sparse_add(out, m, vc * c);
    }
    return out;
}

SparseVec tensor_apply_transpose(const EvalContext& ctx, const std::vector<int>& slots,
                                 const Element& x, const SparseVec& v) {
    size_t k = slots.size();
    SparseVec out;
    std::vector<std::pair<int, Scalar>> slot_out;
    for (const auto& [w, wc] : x.terms()) {
        SparseVec cur = v;
        for (size_t pos = 0; pos < w.size() && !cur.empty(); ++pos) {
            const auto& terms = ctx.sweedler(w[pos], k == 0 ? 1 : k);
            SparseVec next;
            for (const auto& [midx, vc] : cur) {
                for (const auto& term : terms) {
                    // enumerate source indices B with rho(gen)_{midx,B} != 0
                    std::vector<std::pair<MIdx, Scalar>> acc{{MIdx(), vc * term.coeff}};
                    bool dead = false;
                    for (size_t j = 0; j < k && !dead; ++j) {
                        slot_apply_word_transpose(ctx.rep(slots[j]), term.comps[j], midx[j],
                                                  slot_out);
                        if (slot_out.empty()) {
                            dead = true;
                            break;
                        }
                        std::vector<std::pair<MIdx, Scalar>> nxt;
                        for (const auto& [m, c] : acc)
                            for (const auto& [bj, sc] : slot_out) {
                                MIdx nm = m;
                                nm.push_back((unsigned char)bj);
                                nxt.emplace_back(std::move(nm), c * sc);
                            }
                        acc = std::move(nxt);
                    }
                    if (dead) continue;
                    // Koszul sign from the *source* basis parities
                    for (auto& [bm, c] : acc) {
                        std::vector<int> pre(k + 1, 0);
                        for (size_t i = 0; i < k; ++i)
                            pre[i + 1] = pre[i] + ctx.rep(slots[i]).parity[bm[i]];
                        int sign = 0;
                        for (size_t j = 0; j < k; ++j)
                            sign += ctx.pres().word_parity(term.comps[j]) * pre[j];
                        sparse_add(next, bm, (sign & 1) ? -c : c);
                    }
                }
            }
            cur = std::move(next);
        }
        for (const auto& [m, c] : cur) sparse_add(out, m, c * wc);
    }
    return out;
}

int pairing_twist_sign(const EvalContext& ctx, const MatrixWord& w) {
    // (-1)^(sum_{i<j} p_j [a_i]) with p_j the parity of the j-th factor
    int sign = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        const Rep& ri = ctx.rep(w[i].rep);
        int ai = ri.parity[(size_t)w[i].row];
        for (size_t j = i + 1; j < w.size(); ++j) {
            const Rep& rj = ctx.rep(w[j].rep);
            int pj = (rj.parity[(size_t)w[j].row] + rj.parity[(size_t)w[j].col]) & 1;
            sign += pj * ai;
        }
    }
    return (sign & 1) ? -1 : 1;
}

Scalar pair_matrix_word(const EvalContext& ctx, const MatrixWord& w, const Element& u) {
    if (w.empty()) return counit(u, ctx.pres(), ctx.hopf());
    std::vector<int> slots;
    MIdx A, B;
    for (const auto& f : w) {
        const Rep& r = ctx.rep(f.rep);
        if (f.row < 0 || (size_t)f.row >= r.dim || f.col < 0 || (size_t)f.col >= r.dim)
            throw index_out_of_range("matrix word index out of range");
        slots.push_back(f.rep);
        A.push_back((unsigned char)f.row);
        B.push_back((unsigned char)f.col);
    }
    SparseVec v{{B, Scalar(1)}};
    SparseVec img = tensor_apply(ctx, slots, u, v);
    auto it = img.find(A);
    Scalar raw = it == img.end() ? Scalar(0) : it->second;
    return pairing_twist_sign(ctx, w) == 1 ? raw : -raw;
}

Scalar pair_matrix_word_sweedler(const EvalContext& ctx, const MatrixWord& w, const Element& u) {
    if (w.empty()) return counit(u, ctx.pres(), ctx.hopf());
    size_t k = w.size();
    TensorElement t = iterated_coproduct(u, ctx.pres(), ctx.hopf(), k - 1);
    Scalar acc(0);
    for (const auto& [comps, c] : t.terms()) {
        // convolution sign: (-1)^(sum_{i<j} p_j [u_(i)])
        int sign = 0;
        for (size_t i = 0; i < k; ++i) {
            int ui = ctx.pres().word_parity(comps[i]);
            for (size_t j = i + 1; j < k; ++j) {
                const Rep& rj = ctx.rep(w[j].rep);
                int pj = (rj.parity[(size_t)w[j].row] + rj.parity[(size_t)w[j].col]) & 1;
                sign += pj * ui;
            }
        }
        Scalar prod = c;
        for (size_t i = 0; i < k && !prod.is_zero(); ++i) {
            const Rep& r = ctx.rep(w[i].rep);
            prod *= r.of_word(comps[i]).entry(w[i].row, w[i].col);
        }
        acc += (sign & 1) ? -prod : prod;
    }
    return acc;
}

Rep tensor_rep(const EvalContext& ctx, const std::vector<int>& slots) {
    size_t dim = 1;
    for (int s : slots) dim *= ctx.rep(s).dim;
    Rep out;
    out.dim = dim;
    out.parity.resize(dim);
    // enumerate multi-indices in row-major order
    std::vector<MIdx> basis(dim);
    for (size_t idx = 0; idx < dim; ++idx) {
        size_t rem = idx;
        MIdx m(slots.size(), 0);
        for (size_t j = slots.size(); j-- > 0;) {
            size_t d = ctx.rep(slots[j]).dim;
            m[j] = (unsigned char)(rem % d);
            rem /= d;
        }
        basis[idx] = m;
        out.parity[idx] = midx_parity(ctx, slots, m);
    }
    std::map<MIdx, size_t> lookup;
    for (size_t i = 0; i < dim; ++i) lookup[basis[i]] = i;
    out.mats.resize(ctx.pres().size(), SparseMat(dim));
    for (size_t g = 0; g < ctx.pres().size(); ++g) {
        SparseMat m(dim);
        for (size_t bidx = 0; bidx < dim; ++bidx) {
            SparseVec v{{basis[bidx], Scalar(1)}};
            SparseVec img = tensor_apply_gen(ctx, slots, (int)g, v);
            for (const auto& [mi, c] : img) m.add((int)lookup.at(mi), (int)bidx, c);
        }
        out.mats[g] = std::move(m);
    }
    return out;
}

Rep dual_rep(const Rep& r, const Presentation& p, const HopfData& h) {
    for (int variant = 0; variant < 2; ++variant) {
        Rep d;
        d.dim = r.dim;
        d.parity = r.parity;
        d.mats.resize(p.size(), SparseMat(r.dim));
        for (size_t g = 0; g < p.size(); ++g) {
            int gp = p.gen((int)g).parity;
            SparseMat sm = r.of_element(antipode(Element::generator((int)g), p, h));
            SparseMat out(r.dim);
            for (size_t j = 0; j < r.dim; ++j)
                for (const auto& [i, c] : sm.col[j]) {
                    // tbar(x)_{ab} = (-1)^(sign) t(S(x))_{ba}
                    int a = (int)j, b = i;
                    int sign = variant == 0 ? gp * r.parity[(size_t)b] : gp * r.parity[(size_t)a];
                    out.add(a, b, (sign & 1) ? -c : c);
                }
            d.mats[g] = std::move(out);
        }
        // verify the orthogonality identity over normal words of weight <= 3,
        // materializing the 2-slot action of each word once
        std::vector<const Rep*> reps{&r, &d};
        EvalContext ctx(p, h, reps);
        std::vector<int> slots{1, 0};
        bool ok = true;
        auto words = p.normal_words_up_to(3);
        for (const Word& uw : words) {
            if (!ok) break;
            Element u = Element::from_word(uw);
            Scalar eps_u = counit(u, p, h);
            std::map<MIdx, SparseVec> images;
            for (int a = 0; a < (int)r.dim; ++a)
                for (int b = 0; b < (int)r.dim; ++b) {
                    MIdx B;
                    B.push_back((unsigned char)a);
                    B.push_back((unsigned char)b);
                    images[B] = tensor_apply(ctx, slots, u, SparseVec{{B, Scalar(1)}});
                }
            for (int a = 0; a < (int)r.dim && ok; ++a)
                for (int b = 0; b < (int)r.dim && ok; ++b) {
                    Scalar acc(0);
                    for (int c = 0; c < (int)r.dim; ++c) {
                        // factors (tbar, row c, col a), (t, row c, col b)
                        MatrixWord mw{{1, c, a}, {0, c, b}};
                        MIdx A, B;
                        A.push_back((unsigned char)c);
                        A.push_back((unsigned char)c);
                        B.push_back((unsigned char)a);
                        B.push_back((unsigned char)b);
                        auto it = images.at(B).find(A);
                        if (it == images.at(B).end()) continue;
                        Scalar term = it->second;
                        if (pairing_twist_sign(ctx, mw) < 0) term = -term;
                        int sg = ((r.parity[(size_t)a] + r.parity[(size_t)c]) & 1) *
                                 ((r.parity[(size_t)b] + 1) & 1);
                        acc += (sg & 1) ? -term : term;
                    }
                    Scalar expect = a == b ? eps_u : Scalar(0);
                    if (acc != expect) ok = false;
                }
        }
        if (ok) return d;
    }
    throw duality_check_failed("no graded-transpose sign satisfies the orthogonality identity");
}

} // namespace hsa
