#include "hsa/findim.hpp"

#include "hsa/errors.hpp"

#include <algorithm>
#include <map>

namespace hsa {

int FinDimHopf::vec_parity(const Vec& v) const {
    int p = -2;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (p == -2)
            p = parity[i];
        else if (p != parity[i])
            return -1;
    }
    return p == -2 ? 0 : p;
}

Vec FinDimHopf::mul(const Vec& a, const Vec& b) const {
    Vec r(dim(), Scalar(0));
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            const Vec& m = mult[i][j];
            for (size_t k = 0; k < dim(); ++k)
                if (!m[k].is_zero()) r[k] += c * m[k];
        }
    }
    return r;
}

Vec FinDimHopf::apply_antipode(const Vec& a) const {
    Vec r(dim(), Scalar(0));
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t k = 0; k < dim(); ++k)
            if (!antipode[i][k].is_zero()) r[k] += a[i] * antipode[i][k];
    }
    return r;
}

Scalar FinDimHopf::apply_eps(const Vec& a) const {
    Scalar r(0);
    for (size_t i = 0; i < dim(); ++i)
        if (!a[i].is_zero()) r += a[i] * eps[i];
    return r;
}

Mat FinDimHopf::coproduct_of(const Vec& a) const {
    Mat d(dim(), dim());
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j)
            for (size_t k = 0; k < dim(); ++k)
                if (!delta[i].at(j, k).is_zero()) d.at(j, k) += a[i] * delta[i].at(j, k);
    }
    return d;
}

void FinDimHopf::check() const {
    size_t d = dim();
    auto fail = [](const std::string& w) { throw axiom_check_failed(w); };
    auto basis = [&](size_t i) {
        Vec v(d, Scalar(0));
        v[i] = Scalar(1);
        return v;
    };
    // parity homogeneity
    if (graded)
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                bool nonzero = false;
                for (const auto& c : mult[i][j]) nonzero = nonzero || !c.is_zero();
                if (!nonzero) continue;
                int p = vec_parity(mult[i][j]);
                if (p != ((parity[i] + parity[j]) & 1)) fail("product not parity-homogeneous");
            }
    // unit
    for (size_t i = 0; i < d; ++i) {
        if (mult[unit][i] != basis(i) || mult[i][unit] != basis(i)) fail("unit law fails");
    }
    // associativity
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k)
                if (mul(mult[i][j], basis(k)) != mul(basis(i), mult[j][k]))
                    fail("associativity fails");
    // counit/coassociativity
    for (size_t i = 0; i < d; ++i) {
        Vec left(d, Scalar(0)), right(d, Scalar(0));
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k) {
                const Scalar& c = delta[i].at(j, k);
                if (c.is_zero()) continue;
                left[k] += c * eps[j];
                right[j] += c * eps[k];
            }
        if (left != basis(i) || right != basis(i)) fail("counit law fails");
        // (Delta x id)Delta = (id x Delta)Delta, as 3-tensors
        std::map<std::tuple<size_t, size_t, size_t>, Scalar> l3, r3;
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k) {
                const Scalar& c = delta[i].at(j, k);
                if (c.is_zero()) continue;
                for (size_t a = 0; a < d; ++a)
                    for (size_t b = 0; b < d; ++b) {
                        if (!delta[j].at(a, b).is_zero()) l3[{a, b, k}] += c * delta[j].at(a, b);
                        if (!delta[k].at(a, b).is_zero()) r3[{j, a, b}] += c * delta[k].at(a, b);
                    }
            }
        for (auto& [key, v] : l3) {
            auto it = r3.find(key);
            if ((it == r3.end() && !v.is_zero()) || (it != r3.end() && it->second != v))
                fail("coassociativity fails");
        }
        for (auto& [key, v] : r3)
            if (!v.is_zero() && l3.find(key) == l3.end()) fail("coassociativity fails");
    }
    // Delta and eps are algebra maps (with the graded tensor product when graded)
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            Mat lhs = coproduct_of(mult[i][j]);
            Mat rhs(d, d);
            for (size_t a = 0; a < d; ++a)
                for (size_t b = 0; b < d; ++b) {
                    const Scalar& c1 = delta[i].at(a, b);
                    if (c1.is_zero()) continue;
                    for (size_t x = 0; x < d; ++x)
                        for (size_t y = 0; y < d; ++y) {
                            const Scalar& c2 = delta[j].at(x, y);
                            if (c2.is_zero()) continue;
                            Scalar c = c1 * c2;
                            if (graded && (parity[b] & parity[x] & 1)) c = -c;
                            const Vec& pm = mult[a][x];
                            const Vec& qm = mult[b][y];
                            for (size_t u = 0; u < d; ++u) {
                                if (pm[u].is_zero()) continue;
                                for (size_t v = 0; v < d; ++v)
                                    if (!qm[v].is_zero()) rhs.at(u, v) += c * pm[u] * qm[v];
                            }
                        }
                }
            if (!(lhs - rhs).is_zero()) fail("coproduct is not an algebra map");
            Scalar el = apply_eps(mult[i][j]);
            if (el != eps[i] * eps[j]) fail("counit is not an algebra map");
        }
    // antipode axiom
    for (size_t i = 0; i < d; ++i) {
        Vec conv_l(d, Scalar(0)), conv_r(d, Scalar(0));
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k) {
                const Scalar& c = delta[i].at(j, k);
                if (c.is_zero()) continue;
                Vec l = mul(apply_antipode(basis(j)), basis(k));
                Vec r = mul(basis(j), apply_antipode(basis(k)));
                for (size_t u = 0; u < d; ++u) {
                    conv_l[u] += c * l[u];
                    conv_r[u] += c * r[u];
                }
            }
        Vec target(d, Scalar(0));
        target[unit] = eps[i];
        if (conv_l != target || conv_r != target) fail("antipode axiom fails");
    }
}

FinDimHopf findim_from_presentation(const Presentation& p, const HopfData& h, int weight_bound) {
    std::vector<Word> words = p.normal_words_up_to(weight_bound);
    std::map<Word, size_t> index;
    for (size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
    size_t d = words.size();

    FinDimHopf H;
    H.labels.resize(d);
    H.parity.resize(d);
    for (size_t i = 0; i < d; ++i) {
        H.labels[i] = p.word_str(words[i]);
        H.parity[i] = p.word_parity(words[i]);
        if (words[i].empty()) H.unit = i;
    }
    auto to_vec = [&](const Element& e) {
        Vec v(d, Scalar(0));
        for (const auto& [w, c] : e.terms()) {
            auto it = index.find(w);
            if (it == index.end())
                throw domain_error("presentation is not finite at the given bound: " +
                                   p.word_str(w));
            v[it->second] = c;
        }
        return v;
    };
    H.mult.assign(d, std::vector<Vec>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            H.mult[i][j] = to_vec(p.normal_form(Element::from_word(words[i] + words[j])));
    H.delta.reserve(d);
    H.eps.resize(d);
    H.antipode.resize(d);
    for (size_t i = 0; i < d; ++i) {
        TensorElement t = coproduct(Element::from_word(words[i]), p, h);
        Mat m(d, d);
        for (const auto& [k, c] : t.terms()) {
            auto a = index.find(k[0]), b = index.find(k[1]);
            if (a == index.end() || b == index.end())
                throw domain_error("coproduct leaves the finite basis");
            m.at(a->second, b->second) += c;
        }
        H.delta.push_back(std::move(m));
        H.eps[i] = counit(Element::from_word(words[i]), p, h);
        H.antipode[i] = to_vec(antipode(Element::from_word(words[i]), p, h));
    }
    H.check();
    return H;
}

bool is_left_integral(const FinDimHopf& H, const Vec& s) {
    size_t d = H.dim();
    // sum a_(1) s(a_(2)) = s(a) 1 for all basis a
    for (size_t i = 0; i < d; ++i) {
        Vec lhs(d, Scalar(0));
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k) {
                const Scalar& c = H.delta[i].at(j, k);
                if (!c.is_zero() && !s[k].is_zero()) lhs[j] += c * s[k];
            }
        Vec rhs(d, Scalar(0));
        rhs[H.unit] = s[i];
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<LinearForm> left_integral_space(const FinDimHopf& H) {
    size_t d = H.dim();
    // unknowns s_k; equations indexed by (i, j)
    Mat sys(d * d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            for (size_t k = 0; k < d; ++k) sys.at(i * d + j, k) = H.delta[i].at(j, k);
            if (j == H.unit) sys.at(i * d + j, i) -= Scalar(1);
        }
    std::vector<Vec> sols = nullspace(sys);
    // split into parity-homogeneous components and re-extract a basis
    std::vector<Vec> homog;
    for (const Vec& s : sols) {
        for (int par = 0; par <= 1; ++par) {
            Vec v(d, Scalar(0));
            bool nz = false;
            for (size_t k = 0; k < d; ++k)
                if (H.parity[k] == par && !s[k].is_zero()) {
                    v[k] = s[k];
                    nz = true;
                }
            if (nz) homog.push_back(std::move(v));
        }
    }
    std::vector<LinearForm> out;
    std::vector<Vec> kept;
    for (const Vec& v : homog) {
        if (in_span(kept, v)) continue;
        if (!is_left_integral(H, v)) throw not_an_integral("homogeneous component not integral");
        kept.push_back(v);
        out.push_back(LinearForm{v, H.vec_parity(v)});
    }
    return out;
}

Vec modular_grouplike(const FinDimHopf& H, const LinearForm& s) {
    size_t d = H.dim();
    bool nz = false;
    for (const auto& c : s.coeffs) nz = nz || !c.is_zero();
    if (!nz || !is_left_integral(H, s.coeffs)) throw not_an_integral("modular_grouplike needs a nonzero left integral");
    // g(e_i) = sum s(e_j) e_k over Delta(e_i)
    std::vector<Vec> g(d, Vec(d, Scalar(0)));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            if (s.coeffs[j].is_zero()) continue;
            for (size_t k = 0; k < d; ++k) {
                const Scalar& c = H.delta[i].at(j, k);
                if (!c.is_zero()) g[i][k] += c * s.coeffs[j];
            }
        }
    size_t witness = d;
    for (size_t i = 0; i < d; ++i)
        if (!s.coeffs[i].is_zero()) {
            witness = i;
            break;
        }
    Vec a0 = g[witness];
    Scalar inv = s.coeffs[witness].inv();
    for (auto& c : a0) c *= inv;
    // verify g = int(.) a0, group-likeness and evenness
    for (size_t i = 0; i < d; ++i) {
        Vec expect = a0;
        for (auto& c : expect) c *= s.coeffs[i];
        if (g[i] != expect) throw grouplike_check_failed("g is not proportional to the integral");
    }
    Mat d0 = H.coproduct_of(a0);
    Mat outer(d, d);
    for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < d; ++k) outer.at(j, k) = a0[j] * a0[k];
    if (!(d0 - outer).is_zero()) throw grouplike_check_failed("Delta(a0) != a0 (x) a0");
    if (H.vec_parity(a0) != 0) throw grouplike_check_failed("a0 not even");
    return a0;
}

FinDimHopf bosonize(const FinDimHopf& H) {
    size_t d = H.dim();
    size_t D = 2 * d;
    auto idx = [&](size_t i, int alpha) { return i + d * (size_t)(alpha & 1); };
    auto tau = [](int a, int b) { return (a & b & 1) ? Scalar(-1) : Scalar(1); };
    FinDimHopf B;
    B.graded = false;
    B.labels.resize(D);
    B.parity.assign(D, 0);
    B.unit = idx(H.unit, 0);
    for (size_t i = 0; i < d; ++i)
        for (int a = 0; a <= 1; ++a)
            B.labels[idx(i, a)] = H.labels[i] + (a ? "(x)g1" : "(x)g0");
    B.mult.assign(D, std::vector<Vec>(D, Vec(D, Scalar(0))));
    for (size_t i = 0; i < d; ++i)
        for (int a = 0; a <= 1; ++a)
            for (size_t j = 0; j < d; ++j)
                for (int b = 0; b <= 1; ++b) {
                    Scalar sign = tau(a, H.parity[j]);
                    for (size_t k = 0; k < d; ++k)
                        if (!H.mult[i][j][k].is_zero())
                            B.mult[idx(i, a)][idx(j, b)][idx(k, (a + b) & 1)] =
                                sign * H.mult[i][j][k];
                }
    B.delta.assign(D, Mat(D, D));
    B.eps.assign(D, Scalar(0));
    B.antipode.assign(D, Vec(D, Scalar(0)));
    for (size_t i = 0; i < d; ++i)
        for (int a = 0; a <= 1; ++a) {
            size_t me = idx(i, a);
            for (size_t j = 0; j < d; ++j)
                for (size_t k = 0; k < d; ++k) {
                    const Scalar& c = H.delta[i].at(j, k);
                    if (c.is_zero()) continue;
                    B.delta[me].at(idx(j, (H.parity[k] + a) & 1), idx(k, a)) += c;
                }
            B.eps[me] = H.eps[i];
            // S_bar(a (x) g_alpha) = tau([a], alpha + [a]) S(a) (x) g_{-alpha-[a]}
            int pa = H.parity[i];
            Scalar sign = tau(pa, (a + pa) & 1);
            int target = (-(int)a - pa) & 1;
            for (size_t k = 0; k < d; ++k)
                if (!H.antipode[i][k].is_zero())
                    B.antipode[me][idx(k, target)] = sign * H.antipode[i][k];
        }
    B.check();
    return B;
}

Vec bosonized_integral(const FinDimHopf& H, const LinearForm& s) {
    size_t d = H.dim();
    Vec out(2 * d, Scalar(0));
    for (size_t i = 0; i < d; ++i) out[i + d * (size_t)(s.parity & 1)] = s.coeffs[i];
    return out;
}

} // namespace hsa
