#include "hsa/haar.hpp"

#include "hsa/errors.hpp"

namespace hsa {

namespace {

int slot_par(const EvalContext& ctx, const std::vector<int>& slots, size_t i, unsigned char idx) {
    return ctx.rep(slots[i]).parity[idx];
}

// per-factor coproduct sign kappa(a,c,b) = (-1)^(([a]+[c])([c]+[b]))
int sigma_hat(const EvalContext& ctx, const std::vector<int>& slots, const MIdx& I, const MIdx& K,
              const MIdx& J) {
    size_t k = slots.size();
    int sign = 0;
    for (size_t i = 0; i < k; ++i) {
        int a = slot_par(ctx, slots, i, I[i]);
        int c = slot_par(ctx, slots, i, K[i]);
        int b = slot_par(ctx, slots, i, J[i]);
        sign += ((a + c) & 1) * ((c + b) & 1);
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            int left = (slot_par(ctx, slots, i, K[i]) + slot_par(ctx, slots, i, J[i])) & 1;
            int right = (slot_par(ctx, slots, j, I[j]) + slot_par(ctx, slots, j, K[j])) & 1;
            sign += left * right;
        }
    return (sign & 1) ? -1 : 1;
}

// <w_AB, u> = pair_twist(A,B) rho(u)_AB
int pair_twist(const EvalContext& ctx, const std::vector<int>& slots, const MIdx& A,
               const MIdx& B) {
    size_t k = slots.size();
    int sign = 0;
    for (size_t i = 0; i < k; ++i) {
        int ai = slot_par(ctx, slots, i, A[i]);
        for (size_t j = i + 1; j < k; ++j)
            sign += ((slot_par(ctx, slots, j, A[j]) + slot_par(ctx, slots, j, B[j])) & 1) * ai;
    }
    return (sign & 1) ? -1 : 1;
}

size_t flat_index(const EvalContext& ctx, const std::vector<int>& slots, const MIdx& m) {
    size_t idx = 0;
    for (size_t i = 0; i < slots.size(); ++i) idx = idx * ctx.rep(slots[i]).dim + m[i];
    return idx;
}

size_t tensor_dim(const EvalContext& ctx, const std::vector<int>& slots) {
    size_t d = 1;
    for (int s : slots) d *= ctx.rep(s).dim;
    return d;
}

MIdx unflatten(const EvalContext& ctx, const std::vector<int>& slots, size_t idx) {
    MIdx m(slots.size(), 0);
    for (size_t i = slots.size(); i-- > 0;) {
        size_t d = ctx.rep(slots[i]).dim;
        m[i] = (unsigned char)(idx % d);
        idx /= d;
    }
    return m;
}

// dense matrix of (rho(X) - eps(X)) for generator g on the tensor space
Mat shifted_action(const EvalContext& ctx, const SupergroupPreset& P,
                   const std::vector<int>& slots, int g) {
    size_t dim = tensor_dim(ctx, slots);
    Mat m(dim, dim);
    const Scalar& eps = P.gen_eps[(size_t)g];
    for (size_t b = 0; b < dim; ++b) {
        MIdx mb = unflatten(ctx, slots, b);
        SparseVec v{{mb, Scalar(1)}};
        SparseVec img = tensor_apply_gen(ctx, slots, g, v);
        for (const auto& [mi, c] : img) m.at(flat_index(ctx, slots, mi), b) += c;
        if (!eps.is_zero()) m.at(b, b) -= eps;
    }
    return m;
}

} // namespace

int integral_sigma(const EvalContext& ctx, const std::vector<int>& slots, const MIdx& I,
                   const MIdx& K, const MIdx& J) {
    return sigma_hat(ctx, slots, I, K, J) * pair_twist(ctx, slots, I, K) *
           pair_twist(ctx, slots, K, J);
}

InvarianceReport invariance_check(const Element& z, const SupergroupPreset& P,
                                  uint64_t max_steps) {
    InvarianceReport rep;
    // Thm 1: an integral is even or odd; z must be parity-homogeneous
    if (P.pres.element_parity(z) == -1) {
        rep.ok = false;
        rep.witness = "z is not parity-homogeneous";
        return rep;
    }
    if (P.pres.in_left_ideal_J(z, P.is_tail, P.gen_eps, max_steps)) {
        rep.ok = false;
        rep.witness = "z lies in J";
        return rep;
    }
    for (size_t g = 0; g < P.pres.size(); ++g) {
        Element x = Element::generator((int)g);
        Element resid = x * z - z * P.hopf.eps[g];
        if (!P.pres.in_left_ideal_J(resid, P.is_tail, P.gen_eps, max_steps)) {
            rep.ok = false;
            rep.witness = "generator " + P.pres.gen((int)g).name + ": x z - eps(x) z not in J";
            return rep;
        }
    }
    return rep;
}

Mat invariants_projector(const SupergroupPreset& P, const std::vector<int>& slots) {
    EvalContext ctx = P.context();
    size_t dim = tensor_dim(ctx, slots);
    std::vector<int> tail;
    for (size_t g = 0; g < P.pres.size(); ++g)
        if (P.is_tail[g]) tail.push_back((int)g);
    if (tail.empty()) return Mat::identity(dim);

    std::vector<Mat> ops;
    for (int g : tail) ops.push_back(shifted_action(ctx, P, slots, g));
    // Inv = joint kernel
    Mat stacked(ops.size() * dim, dim);
    for (size_t o = 0; o < ops.size(); ++o)
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) stacked.at(o * dim + i, j) = ops[o].at(i, j);
    std::vector<Vec> inv = nullspace(stacked);
    // complement span: independent columns of the shifted actions
    Mat allcols(dim, ops.size() * dim);
    for (size_t o = 0; o < ops.size(); ++o)
        for (size_t j = 0; j < dim; ++j)
            for (size_t i = 0; i < dim; ++i) allcols.at(i, o * dim + j) = ops[o].at(i, j);
    Mat reduced = allcols;
    std::vector<size_t> pivots = rref(reduced);
    std::vector<Vec> comp;
    for (size_t c : pivots) {
        Vec v(dim, Scalar(0));
        for (size_t i = 0; i < dim; ++i) v[i] = allcols.at(i, c);
        comp.push_back(std::move(v));
    }
    if (inv.size() + comp.size() != dim)
        throw not_completely_reducible("invariants and generator images do not complement");
    Mat B(dim, dim);
    for (size_t j = 0; j < inv.size(); ++j)
        for (size_t i = 0; i < dim; ++i) B.at(i, j) = inv[j][i];
    for (size_t j = 0; j < comp.size(); ++j)
        for (size_t i = 0; i < dim; ++i) B.at(i, inv.size() + j) = comp[j][i];
    // P = B diag(1..1,0..0) B^{-1}
    Mat aug = B;
    std::vector<size_t> piv = rref(aug);
    if (piv.size() != dim)
        throw not_completely_reducible("invariants and generator images do not complement");
    Mat proj(dim, dim);
    for (size_t col = 0; col < dim; ++col) {
        Vec e(dim, Scalar(0));
        e[col] = Scalar(1);
        auto x = solve(B, e);
        if (!x) throw not_completely_reducible("projector solve failed");
        // keep only the Inv components
        for (size_t j = 0; j < inv.size(); ++j)
            for (size_t i = 0; i < dim; ++i) proj.at(i, col) += inv[j][i] * (*x)[j];
    }
    return proj;
}

SparseVec projector_column_krylov(const SupergroupPreset& P, const std::vector<int>& slots,
                                  const MIdx& J) {
    if (!P.has_laplacian)
        throw not_completely_reducible("no invariant Laplacian available for " + P.name);
    EvalContext ctx = P.context();
    // Krylov sequence v_i = A^i e_J with incremental dependence detection
    std::vector<SparseVec> vs{SparseVec{{J, Scalar(1)}}};
    // reduced echelon copies with coordinates over the original vectors
    std::vector<SparseVec> reduced;
    std::vector<Vec> reduced_coords;
    std::vector<Scalar> mu; // dependence coefficients, found below
    for (;;) {
        SparseVec v = vs.back();
        Vec coords(vs.size(), Scalar(0));
        coords[vs.size() - 1] = Scalar(1);
        for (size_t r = 0; r < reduced.size(); ++r) {
            if (v.empty()) break;
            const auto& lead = *reduced[r].begin();
            auto it = v.find(lead.first);
            if (it == v.end()) continue;
            Scalar f = it->second / lead.second;
            for (const auto& [k, c] : reduced[r]) {
                auto jt = v.find(k);
                if (jt == v.end()) {
                    Scalar nc = -f * c;
                    if (!nc.is_zero()) v.emplace(k, nc);
                } else {
                    jt->second -= f * c;
                    if (jt->second.is_zero()) v.erase(jt);
                }
            }
            for (size_t i = 0; i < reduced_coords[r].size(); ++i)
                coords[i] -= f * reduced_coords[r][i];
        }
        if (v.empty()) {
            mu = coords;
            break;
        }
        reduced.push_back(std::move(v));
        reduced_coords.push_back(std::move(coords));
        if (vs.size() > 200) throw not_completely_reducible("Krylov space too large");
        vs.push_back(tensor_apply(ctx, slots, P.laplacian, vs.back()));
    }
    // mu is the monic relative minimal polynomial of A at e_J
    size_t deg = mu.size() - 1;
    // squarefree check: gcd(mu, mu') must be constant
    {
        BigInt den(1);
        for (const auto& c : mu) {
            if (!c.is_laurent() || !c.is_constant()) throw domain_error("non-rational Krylov");
            den = den * c.den().trailing() / BigInt::gcd(den, c.den().trailing());
        }
        Laurent poly;
        for (size_t i = 0; i <= deg; ++i) {
            Rational ci = mu[i].specialize(Rational(0)); // constant scalar
            BigInt scaled = ci.num() * (den / ci.den());
            poly += Laurent::monomial(scaled, (int)i);
        }
        Laurent g = Laurent::gcd(poly, poly.derivative());
        if (!g.is_constant())
            throw not_completely_reducible("tail action not semisimple on the Krylov space");
    }
    SparseVec out;
    if (!mu[0].is_zero()) return out; // no invariant component
    const Scalar& g0 = mu[1];
    if (g0.is_zero()) throw not_completely_reducible("repeated zero eigenvalue");
    for (size_t i = 1; i <= deg; ++i) {
        if (mu[i].is_zero()) continue;
        Scalar f = mu[i] / g0;
        for (const auto& [k, c] : vs[i - 1]) {
            auto it = out.find(k);
            if (it == out.end()) {
                Scalar nc = f * c;
                if (!nc.is_zero()) out.emplace(k, nc);
            } else {
                it->second += f * c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    // certify invariance of the result
    for (size_t g = 0; g < P.pres.size(); ++g) {
        if (!P.is_tail[g]) continue;
        SparseVec img = tensor_apply_gen(ctx, slots, (int)g, out);
        if (!P.gen_eps[g].is_zero())
            for (const auto& [k, c] : out) {
                auto it = img.find(k);
                Scalar have = it == img.end() ? Scalar(0) : it->second;
                if (have != P.gen_eps[g] * c)
                    throw not_completely_reducible("Krylov column failed the invariance check");
            }
        else if (!img.empty())
            throw not_completely_reducible("Krylov column failed the invariance check");
    }
    return out;
}

std::vector<Vec> tail_invariant_vectors(const SupergroupPreset& P,
                                        const std::vector<int>& slots) {
    EvalContext ctx = P.context();
    size_t dim = tensor_dim(ctx, slots);
    std::vector<int> tail;
    for (size_t g = 0; g < P.pres.size(); ++g)
        if (P.is_tail[g]) tail.push_back((int)g);
    Mat stacked(tail.size() * dim, dim);
    for (size_t o = 0; o < tail.size(); ++o) {
        Mat m = shifted_action(ctx, P, slots, tail[o]);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) stacked.at(o * dim + i, j) = m.at(i, j);
    }
    return nullspace(stacked);
}

Rep quotient_module_rep(const SupergroupPreset& P) {
    // basis: normal words with no tail letters
    int wmax = 0;
    for (size_t g = 0; g < P.pres.size(); ++g)
        if (!P.is_tail[g]) wmax += P.pres.gen((int)g).weight;
    std::vector<Word> basis;
    for (const Word& w : P.pres.normal_words_up_to(wmax)) {
        bool head_only = true;
        for (unsigned char g : w) head_only = head_only && !P.is_tail[g];
        if (head_only) basis.push_back(w);
    }
    std::map<Word, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = (int)i;
    Rep r;
    r.dim = basis.size();
    r.parity.resize(r.dim);
    r.basis_labels.resize(r.dim);
    for (size_t i = 0; i < r.dim; ++i) {
        r.parity[i] = P.pres.word_parity(basis[i]);
        r.basis_labels[i] = P.pres.word_str(basis[i]);
    }
    r.mats.assign(P.pres.size(), SparseMat(r.dim));
    for (size_t g = 0; g < P.pres.size(); ++g) {
        SparseMat m(r.dim);
        for (size_t b = 0; b < basis.size(); ++b) {
            Element img =
                P.pres.normal_form(Element::generator((int)g) * Element::from_word(basis[b]));
            for (const auto& [w, c] : img.terms()) {
                size_t split = w.size();
                for (size_t i = 0; i < w.size(); ++i)
                    if (P.is_tail[w[i]]) {
                        split = i;
                        break;
                    }
                Scalar eps(1);
                for (size_t i = split; i < w.size(); ++i) {
                    eps *= P.gen_eps[w[i]];
                    if (eps.is_zero()) break;
                }
                if (eps.is_zero()) continue;
                m.add(index.at(w.substr(0, split)), (int)b, c * eps);
            }
        }
        m.compress();
        r.mats[g] = std::move(m);
    }
    return r;
}

JCertificate j_membership_certificate(const Element& x, const SupergroupPreset& P, bool exact_ok,
                                      int rep_bound) {
    JCertificate cert;
    if (exact_ok) {
        cert.exact = true;
        cert.pass = P.pres.in_left_ideal_J(x, P.is_tail, P.gen_eps);
        return cert;
    }
    cert.exact = false;
    cert.bound = rep_bound;
    cert.pass = true;
    EvalContext ctx = P.context();
    for (int r = 0; r <= rep_bound; ++r)
        for (int s = 0; r + s <= rep_bound; ++s) {
            if (r + s == 0) continue;
            std::vector<int> slots;
            for (int i = 0; i < r; ++i) slots.push_back(0);
            for (int i = 0; i < s; ++i) slots.push_back(1);
            for (const Vec& v : tail_invariant_vectors(P, slots)) {
                SparseVec sv;
                for (size_t i = 0; i < v.size(); ++i)
                    if (!v[i].is_zero()) sv.emplace(unflatten(ctx, slots, i), v[i]);
                SparseVec img = tensor_apply(ctx, slots, x, sv);
                if (!img.empty()) {
                    cert.pass = false;
                    return cert;
                }
            }
        }
    return cert;
}

IntegralSpec::IntegralSpec(const SupergroupPreset& preset, Element z, bool check)
    : preset_(&preset), ctx_(preset.context()), z_(std::move(z)) {
    if (check) {
        InvarianceReport rep = invariance_check(z_, preset);
        if (!rep.ok) throw invariance_not_verified(preset.name + ": " + rep.witness);
    }
}

IntegralSpec IntegralSpec::for_gamma(const SupergroupPreset& preset, bool check) {
    return IntegralSpec(preset, preset.gamma, check);
}

const Mat& IntegralSpec::projector(const std::vector<int>& slots) {
    auto it = projector_cache_.find(slots);
    if (it != projector_cache_.end()) return it->second;
    Mat p = invariants_projector(*preset_, slots);
    return projector_cache_.emplace(slots, std::move(p)).first->second;
}

Scalar IntegralSpec::eval_with(const std::vector<int>& slots, const MIdx& I, const MIdx& J) {
    if (slots.empty()) return counit(z_, preset_->pres, preset_->hopf);
    SparseVec row = tensor_apply_transpose(ctx_, slots, z_, SparseVec{{I, Scalar(1)}});
    if (row.empty()) return Scalar(0);
    bool no_tail = true;
    for (size_t g = 0; g < preset_->pres.size(); ++g) no_tail = no_tail && !preset_->is_tail[g];
    Scalar acc(0);
    size_t dim = tensor_dim(ctx_, slots);
    if (no_tail) {
        auto it = row.find(J);
        if (it == row.end()) return Scalar(0);
        return Scalar(integral_sigma(ctx_, slots, I, J, J)) * it->second;
    }
    if (dim <= 300) {
        const Mat& proj = projector(slots);
        size_t jf = flat_index(ctx_, slots, J);
        for (const auto& [K, c] : row) {
            const Scalar& p = proj.at(flat_index(ctx_, slots, K), jf);
            if (p.is_zero()) continue;
            acc += Scalar(integral_sigma(ctx_, slots, I, K, J)) * c * p;
        }
        return acc;
    }
    SparseVec colv = projector_column_krylov(*preset_, slots, J);
    for (const auto& [K, c] : row) {
        auto it = colv.find(K);
        if (it == colv.end()) continue;
        acc += Scalar(integral_sigma(ctx_, slots, I, K, J)) * c * it->second;
    }
    return acc;
}

Scalar IntegralSpec::eval(const MatrixWord& w) {
    std::vector<int> slots;
    MIdx I, J;
    for (const auto& f : w) {
        slots.push_back(f.rep);
        I.push_back((unsigned char)f.row);
        J.push_back((unsigned char)f.col);
    }
    return eval_with(slots, I, J);
}

Scalar IntegralSpec::eval(const std::string& word_text) {
    return eval(preset_->parse_matrix_word(word_text));
}

bool IntegralSpec::left_invariance_test(int L, int d) {
    auto words_u = preset_->pres.normal_words_up_to(d);
    std::vector<MatrixWord> frontier{MatrixWord{}};
    for (int len = 1; len <= L; ++len) {
        std::vector<MatrixWord> next;
        for (const auto& w : frontier)
            for (const auto& l : preset_->word_letters) {
                MatrixWord nw = w;
                nw.push_back(l);
                next.push_back(std::move(nw));
            }
        for (const auto& w : next) {
            std::vector<int> slots;
            MIdx I, J;
            for (const auto& f : w) {
                slots.push_back(f.rep);
                I.push_back((unsigned char)f.row);
                J.push_back((unsigned char)f.col);
            }
            std::map<MIdx, Scalar> int_cache;
            auto integral_KJ = [&](const MIdx& K) {
                auto it = int_cache.find(K);
                if (it != int_cache.end()) return it->second;
                Scalar v = eval_with(slots, K, J);
                int_cache.emplace(K, v);
                return v;
            };
            Scalar int_IJ = eval_with(slots, I, J);
            int zpar = preset_->pres.element_parity(z_);
            for (const Word& uw : words_u) {
                Element u = Element::from_word(uw);
                SparseVec row = tensor_apply_transpose(ctx_, slots, u, SparseVec{{I, Scalar(1)}});
                Scalar lhs(0);
                for (const auto& [K, c] : row) {
                    Scalar ik = integral_KJ(K);
                    if (ik.is_zero()) continue;
                    int sg = sigma_hat(ctx_, slots, I, K, J) * pair_twist(ctx_, slots, I, K);
                    // odd integrals pass the first tensor factor with a sign
                    if (zpar == 1) {
                        int pik = 0;
                        for (size_t i = 0; i < slots.size(); ++i)
                            pik += slot_par(ctx_, slots, i, I[i]) + slot_par(ctx_, slots, i, K[i]);
                        if (pik & 1) sg = -sg;
                    }
                    lhs += Scalar(sg) * c * ik;
                }
                Scalar rhs = counit(u, preset_->pres, preset_->hopf) * int_IJ;
                if (lhs != rhs) return false;
            }
        }
        frontier = std::move(next);
    }
    return true;
}

bool IntegralSpec::right_invariance_test(int L, int d) {
    auto words_u = preset_->pres.normal_words_up_to(d);
    std::vector<MatrixWord> frontier{MatrixWord{}};
    for (int len = 1; len <= L; ++len) {
        std::vector<MatrixWord> next;
        for (const auto& w : frontier)
            for (const auto& l : preset_->word_letters) {
                MatrixWord nw = w;
                nw.push_back(l);
                next.push_back(std::move(nw));
            }
        for (const auto& w : next) {
            std::vector<int> slots;
            MIdx I, J;
            for (const auto& f : w) {
                slots.push_back(f.rep);
                I.push_back((unsigned char)f.row);
                J.push_back((unsigned char)f.col);
            }
            std::map<MIdx, Scalar> int_cache;
            auto integral_IK = [&](const MIdx& K) {
                auto it = int_cache.find(K);
                if (it != int_cache.end()) return it->second;
                Scalar v = eval_with(slots, I, K);
                int_cache.emplace(K, v);
                return v;
            };
            Scalar int_IJ = eval_with(slots, I, J);
            for (const Word& uw : words_u) {
                Element u = Element::from_word(uw);
                SparseVec colv = tensor_apply(ctx_, slots, u, SparseVec{{J, Scalar(1)}});
                Scalar lhs(0);
                for (const auto& [K, c] : colv) {
                    Scalar ik = integral_IK(K);
                    if (ik.is_zero()) continue;
                    int sg = sigma_hat(ctx_, slots, I, K, J) * pair_twist(ctx_, slots, K, J);
                    lhs += Scalar(sg) * c * ik;
                }
                Scalar rhs = counit(u, preset_->pres, preset_->hopf) * int_IJ;
                if (lhs != rhs) return false;
            }
        }
        frontier = std::move(next);
    }
    return true;
}

} // namespace hsa
