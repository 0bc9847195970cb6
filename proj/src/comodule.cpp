#include "hsa/comodule.hpp"

#include "hsa/errors.hpp"

namespace hsa {

void Comodule::check() const {
    size_t n = dim(), d = H->dim();
    // counit law: sum_b eps(t[b][a]) v_b = v_a
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            Scalar e = H->apply_eps(t[b][a]);
            if (e != (a == b ? Scalar(1) : Scalar(0)))
                throw axiom_check_failed("comodule counit law fails");
        }
    // coassociativity: sum_b t[c][b] (x) t[b][a] = Delta(t[c][a])
    for (size_t a = 0; a < n; ++a)
        for (size_t c = 0; c < n; ++c) {
            Mat lhs(d, d);
            for (size_t b = 0; b < n; ++b)
                for (size_t x = 0; x < d; ++x) {
                    if (t[c][b][x].is_zero()) continue;
                    for (size_t y = 0; y < d; ++y)
                        if (!t[b][a][y].is_zero()) lhs.at(x, y) += t[c][b][x] * t[b][a][y];
                }
            if (!(lhs - H->coproduct_of(t[c][a])).is_zero())
                throw axiom_check_failed("comodule coassociativity fails");
        }
    // parity: t[b][a] homogeneous of parity [a]+[b]
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            bool nonzero = false;
            for (const auto& c : t[b][a]) nonzero = nonzero || !c.is_zero();
            if (!nonzero) continue;
            if (H->graded && H->vec_parity(t[b][a]) != ((parity[a] + parity[b]) & 1))
                throw axiom_check_failed("comodule matrix element parity mismatch");
        }
}

Comodule regular_comodule(const FinDimHopf& H) {
    size_t d = H.dim();
    Comodule C;
    C.H = &H;
    C.parity = H.parity;
    C.t.assign(d, std::vector<Vec>(d, Vec(d, Scalar(0))));
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b)
            for (size_t k = 0; k < d; ++k) C.t[b][a][k] = H.delta[a].at(b, k);
    C.check();
    return C;
}

Comodule z2_comodule(const FinDimHopf& H, const std::vector<int>& parities) {
    if (H.dim() != 2) throw domain_error("z2_comodule expects the C Z2 Hopf algebra");
    Comodule C;
    C.H = &H;
    C.parity = parities;
    size_t n = parities.size();
    C.t.assign(n, std::vector<Vec>(n, Vec(2, Scalar(0))));
    for (size_t a = 0; a < n; ++a) {
        size_t g = parities[a] ? (H.unit == 0 ? 1 : 0) : H.unit;
        C.t[a][a][g] = Scalar(1);
    }
    C.check();
    return C;
}

Comodule dual_comodule(const Comodule& V) {
    const FinDimHopf& H = *V.H;
    size_t n = V.dim();
    // candidate sign conventions for tbar_{ba} = (+-) S(t_{ab})
    for (int variant = 0; variant < 2; ++variant) {
        Comodule D;
        D.H = V.H;
        D.parity = V.parity;
        D.t.assign(n, std::vector<Vec>(n, Vec(H.dim(), Scalar(0))));
        for (size_t b = 0; b < n; ++b)
            for (size_t a = 0; a < n; ++a) {
                int pa = V.parity[a], pb = V.parity[b];
                int sign = variant == 0 ? pa * ((pa + pb) & 1) : pb * ((pa + pb) & 1);
                Vec s = H.apply_antipode(V.t[a][b]);
                if (sign & 1)
                    for (auto& c : s) c = -c;
                D.t[b][a] = std::move(s);
            }
        // dual-pairing identity: sum_b (-1)^{([b]+[a])[b]} tbar_{ba} t_{bc} = delta_ac 1
        bool ok = true;
        for (size_t a = 0; a < n && ok; ++a)
            for (size_t c = 0; c < n && ok; ++c) {
                Vec acc(H.dim(), Scalar(0));
                for (size_t b = 0; b < n; ++b) {
                    Vec prod = H.mul(D.t[b][a], V.t[b][c]);
                    int sg = ((V.parity[b] + V.parity[a]) & 1) * V.parity[b];
                    for (size_t k = 0; k < H.dim(); ++k)
                        acc[k] += (sg & 1) ? -prod[k] : prod[k];
                }
                Vec expect(H.dim(), Scalar(0));
                if (a == c) expect[H.unit] = Scalar(1);
                ok = acc == expect;
            }
        if (ok) {
            D.check();
            return D;
        }
    }
    throw duality_check_failed("no sign convention satisfies the dual-pairing identity");
}

Comodule end_comodule(const Comodule& V) {
    const FinDimHopf& H = *V.H;
    Comodule Vd = dual_comodule(V);
    size_t n = V.dim();
    Comodule E;
    E.H = V.H;
    E.parity.resize(n * n);
    E.t.assign(n * n, std::vector<Vec>(n * n, Vec(H.dim(), Scalar(0))));
    auto id2 = [&](size_t i, size_t j) { return i * n + j; };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) E.parity[id2(i, j)] = (V.parity[i] + V.parity[j]) & 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) {
                    // delta(v_i (x) v*_j) picks up the Koszul sign of moving
                    // t_{ki} past v*_l
                    int sg = ((V.parity[k] + V.parity[i]) & 1) * V.parity[l];
                    Vec prod = H.mul(V.t[k][i], Vd.t[l][j]);
                    if (sg & 1)
                        for (auto& c : prod) c = -c;
                    E.t[id2(k, l)][id2(i, j)] = std::move(prod);
                }
    E.check();
    return E;
}

bool is_coinvariant(const Comodule& C, const Vec& v) {
    size_t n = C.dim(), d = C.H->dim();
    for (size_t b = 0; b < n; ++b) {
        Vec acc(d, Scalar(0));
        for (size_t a = 0; a < n; ++a) {
            if (v[a].is_zero()) continue;
            for (size_t k = 0; k < d; ++k) acc[k] += v[a] * C.t[b][a][k];
        }
        Vec expect(d, Scalar(0));
        expect[C.H->unit] = v[b];
        if (acc != expect) return false;
    }
    return true;
}

Mat phi_map(const Comodule& V, const LinearForm& integral, const Mat& P) {
    size_t n = V.dim();
    Comodule E = end_comodule(V);
    auto id2 = [&](size_t i, size_t j) { return i * n + j; };
    Mat out(n, n);
    for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) {
            Scalar acc(0);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    if (P.at(i, j).is_zero()) continue;
                    const Vec& coeff = E.t[id2(k, l)][id2(i, j)];
                    Scalar val(0);
                    for (size_t x = 0; x < coeff.size(); ++x)
                        if (!coeff[x].is_zero()) val += coeff[x] * integral.coeffs[x];
                    acc += P.at(i, j) * val;
                }
            out.at(k, l) = acc;
        }
    // Lemma 3: the image of Phi consists of coinvariants
    Vec flat(n * n, Scalar(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) flat[id2(i, j)] = out.at(i, j);
    if (!is_coinvariant(E, flat)) throw axiom_check_failed("Phi(P) is not coinvariant");
    return out;
}

MaschkeResult maschke_split(const Comodule& V, const std::vector<Vec>& v1_basis,
                            const LinearForm& s) {
    size_t n = V.dim(), d = V.H->dim();
    // V1 must be a subcomodule: ann(V1) applied to omega(V1) vanishes
    Mat span(n, v1_basis.size());
    for (size_t j = 0; j < v1_basis.size(); ++j)
        for (size_t i = 0; i < n; ++i) span.at(i, j) = v1_basis[j][i];
    Mat spanT(v1_basis.size(), n);
    for (size_t j = 0; j < v1_basis.size(); ++j)
        for (size_t i = 0; i < n; ++i) spanT.at(j, i) = v1_basis[j][i];
    std::vector<Vec> ann = nullspace(spanT);
    for (const Vec& u : v1_basis)
        for (const Vec& xi : ann) {
            Vec acc(d, Scalar(0));
            for (size_t b = 0; b < n; ++b) {
                if (xi[b].is_zero()) continue;
                for (size_t a = 0; a < n; ++a) {
                    if (u[a].is_zero()) continue;
                    for (size_t k = 0; k < d; ++k) acc[k] += xi[b] * u[a] * V.t[b][a][k];
                }
            }
            for (const auto& c : acc)
                if (!c.is_zero()) throw not_subcomodule("V1 is not a subcomodule");
        }
    // projection onto V1 along a coordinate completion
    std::vector<Vec> cols = v1_basis;
    for (size_t i = 0; i < n && cols.size() < n; ++i) {
        Vec e(n, Scalar(0));
        e[i] = Scalar(1);
        if (!in_span(cols, e)) cols.push_back(std::move(e));
    }
    if (cols.size() != n) throw domain_error("V1 basis is linearly dependent");
    Mat B(n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) B.at(i, j) = cols[j][i];
    // P = B * diag(1..1,0..0) * B^{-1}
    Mat Binv(n, n);
    for (size_t j = 0; j < n; ++j) {
        Vec e(n, Scalar(0));
        e[j] = Scalar(1);
        auto x = solve(B, e);
        if (!x) throw domain_error("basis completion not invertible");
        for (size_t i = 0; i < n; ++i) Binv.at(i, j) = (*x)[i];
    }
    Mat D(n, n);
    for (size_t j = 0; j < v1_basis.size(); ++j) D.at(j, j) = Scalar(1);
    Mat P = B * D * Binv;

    MaschkeResult res;
    res.phi = phi_map(V, s, P);
    Scalar s1 = s.coeffs[V.H->unit];
    if (s1.is_zero()) {
        res.split = false;
        return res;
    }
    Mat Q = res.phi * s1.inv();
    // Q restricted to V1 is the identity
    for (const Vec& u : v1_basis)
        if (Q * u != u) throw axiom_check_failed("Phi(P) does not restrict to id on V1");
    res.complement = nullspace(Q);
    // the kernel complements V1
    std::vector<Vec> all = v1_basis;
    for (const Vec& v : res.complement) all.push_back(v);
    Mat full(n, all.size());
    for (size_t j = 0; j < all.size(); ++j)
        for (size_t i = 0; i < n; ++i) full.at(i, j) = all[j][i];
    if (all.size() != n || rank(full) != n)
        throw axiom_check_failed("kernel of Phi(P) does not complement V1");
    // and is a subcomodule
    std::vector<Vec> ann2;
    {
        Mat ct(res.complement.size(), n);
        for (size_t j = 0; j < res.complement.size(); ++j)
            for (size_t i = 0; i < n; ++i) ct.at(j, i) = res.complement[j][i];
        ann2 = nullspace(ct);
    }
    for (const Vec& u : res.complement)
        for (const Vec& xi : ann2) {
            Vec acc(d, Scalar(0));
            for (size_t b = 0; b < n; ++b) {
                if (xi[b].is_zero()) continue;
                for (size_t a = 0; a < n; ++a) {
                    if (u[a].is_zero()) continue;
                    for (size_t k = 0; k < d; ++k) acc[k] += xi[b] * u[a] * V.t[b][a][k];
                }
            }
            for (const auto& c : acc)
                if (!c.is_zero()) throw axiom_check_failed("complement is not a subcomodule");
        }
    res.split = true;
    return res;
}

} // namespace hsa
