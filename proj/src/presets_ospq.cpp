#include "hsa/derive.hpp"
#include "hsa/errors.hpp"
#include "hsa/presets.hpp"

#include <map>

namespace hsa {

void quantum_bracket_rule(Presentation& p, int x, int y, const Element& bracket);
void quantum_serre_rule(Presentation& p, int x, int y, int r, const Scalar& qi);

namespace {

// All scalars of the osp presets live in the internal variable s with q = s^2,
// so that t(k_0) = q^(H_0/2) has polynomial entries.
struct OspData {
    int n;
    std::vector<int> d;                  // symmetrizers: q_i = s^(2 d_i)
    std::vector<std::vector<int>> alpha; // simple roots in the delta basis
    std::vector<int> form;               // (delta_i, delta_i)
    int inner(const std::vector<int>& u, const std::vector<int>& v) const {
        int s = 0;
        for (size_t i = 0; i < form.size(); ++i) s += u[i] * v[i] * form[i];
        return s;
    }
};

OspData osp_data(int n) {
    OspData D;
    D.n = n;
    D.form.assign((size_t)n + 1, -1);
    D.form[0] = 1;
    D.alpha.assign((size_t)n + 1, std::vector<int>((size_t)n + 1, 0));
    for (int i = 0; i < n; ++i) {
        D.alpha[(size_t)i][(size_t)i] = 1;
        D.alpha[(size_t)i][(size_t)i + 1] = -1;
    }
    D.alpha[(size_t)n][(size_t)n] = 2;
    D.d.assign((size_t)n + 1, -1);
    D.d[0] = 1;
    D.d[(size_t)n] = -2;
    return D;
}

} // namespace

SupergroupPreset uq_osp(int n) {
    if (n < 1 || n > 2) throw unsupported_rank("ospq(n) shipped for n in {1,2}");
    OspData D = osp_data(n);
    QuantumBuilder qb(D.form);
    auto wt_delta0 = [&](int j, int sign) {
        // delta_0 - sign*delta_j
        std::vector<int> w((size_t)n + 1, 0);
        w[0] = 1;
        w[(size_t)j] = -sign;
        return w;
    };

    // rank order: negative odd (phi side), positive odd (psi side), even tail,
    // Cartan pairs. phi(1) = f_0 and psi(1) = e_0 are the simple odd ones.
    std::map<std::string, int> gid;
    auto add_gen = [&](const std::string& nm, int parity, std::vector<int> wt) {
        gid[nm] = qb.add_root_gen(nm, parity, std::move(wt));
        return gid[nm];
    };
    {
        std::vector<int> w = wt_delta0(1, 1);
        for (auto& c : w) c = -c;
        add_gen("f(0)", 1, w);
    }
    for (int i = 2; i <= n; ++i) {
        std::vector<int> w = wt_delta0(i, 1);
        for (auto& c : w) c = -c;
        add_gen("phi(" + std::to_string(i) + ")", 1, w);
    }
    for (int i = n; i >= 1; --i) {
        std::vector<int> w = wt_delta0(i, -1);
        for (auto& c : w) c = -c;
        add_gen("phi(-" + std::to_string(i) + ")", 1, w);
    }
    add_gen("e(0)", 1, wt_delta0(1, 1));
    for (int i = 2; i <= n; ++i) add_gen("psi(" + std::to_string(i) + ")", 1, wt_delta0(i, 1));
    for (int i = n; i >= 1; --i) add_gen("psi(-" + std::to_string(i) + ")", 1, wt_delta0(i, -1));
    size_t tail_start = qb.pres().size();
    for (int i = 1; i <= n; ++i) add_gen("e(" + std::to_string(i) + ")", 0, D.alpha[(size_t)i]);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> w = D.alpha[(size_t)i];
        for (auto& c : w) c = -c;
        add_gen("f(" + std::to_string(i) + ")", 0, std::move(w));
    }
    if (n == 2) {
        // sp(4) composite root vectors E_{1,bar2} (delta1+delta2), E_{1,bar1} (2 delta1)
        add_gen("Ep(1,-2)", 0, {0, 1, 1});
        add_gen("Ep(1,-1)", 0, {0, 2, 0});
        add_gen("Fp(-2,1)", 0, {0, -1, -1});
        add_gen("Fp(-1,1)", 0, {0, -2, 0});
    }
    std::vector<int> kid((size_t)n + 1), kiid((size_t)n + 1);
    for (int i = 0; i <= n; ++i) {
        // exponent scale: k_i X k_i^{-1} = s^((alpha_i, wt X)); alpha with the
        // symmetrizer folded in is exactly (alpha_i, .)
        auto [k, ki] = qb.add_k_pair("k(" + std::to_string(i) + ")", D.alpha[(size_t)i]);
        kid[(size_t)i] = k;
        kiid[(size_t)i] = ki;
    }
    qb.add_cartan_rules();

    Presentation& p = qb.pres();
    auto q_i = [&](int i) { return Scalar::q(2 * D.d[(size_t)i]); };
    auto ename = [&](int i) { return i == 0 ? std::string("e(0)") : "e(" + std::to_string(i) + ")"; };
    auto fname = [&](int i) { return i == 0 ? std::string("f(0)") : "f(" + std::to_string(i) + ")"; };
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            int e = gid.at(ename(i)), f = gid.at(fname(j));
            if (i == j) {
                Element kk = Element::from_word(word_of({kid[(size_t)i], kid[(size_t)i]})) -
                             Element::from_word(word_of({kiid[(size_t)i], kiid[(size_t)i]}));
                quantum_bracket_rule(p, e, f, kk * (q_i(i) - q_i(i).inv()).inv());
            } else {
                quantum_bracket_rule(p, e, f, Element());
            }
        }
    p.add_rule(word_of({gid.at("e(0)"), gid.at("e(0)")}), Element());
    p.add_rule(word_of({gid.at("f(0)"), gid.at("f(0)")}), Element());
    // commuting and Serre pairs from the Cartan integers
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int aij = D.inner(D.alpha[(size_t)i], D.alpha[(size_t)j]);
            if (aij == 0) {
                quantum_bracket_rule(p, gid.at(ename(i)), gid.at(ename(j)), Element());
                quantum_bracket_rule(p, gid.at(fname(i)), gid.at(fname(j)), Element());
            }
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            int num = 2 * D.inner(D.alpha[(size_t)i], D.alpha[(size_t)j]);
            int den = D.inner(D.alpha[(size_t)i], D.alpha[(size_t)i]);
            int aij = num / den;
            if (aij == 0) continue;
            quantum_serre_rule(p, gid.at(ename(i)), gid.at(ename(j)), 1 - aij, q_i(i));
            quantum_serre_rule(p, gid.at(fname(i)), gid.at(fname(j)), 1 - aij, q_i(i));
        }
    // psi/phi recursions (paper, with q = s^2); psi(1) = e(0), phi(1) = f(0)
    auto psi = [&](int i) {
        return i == 1 ? gid.at("e(0)") : gid.at("psi(" + std::to_string(i) + ")");
    };
    auto phi = [&](int i) {
        return i == 1 ? gid.at("f(0)") : gid.at("phi(" + std::to_string(i) + ")");
    };
    Scalar q2 = Scalar::q(2), q4 = Scalar::q(4);
    for (int i = 1; i < n; ++i)
        qb.set_composite(gid.at("psi(" + std::to_string(i + 1) + ")"), psi(i),
                         gid.at(ename(i)), Scalar(1), -q2);
    qb.set_composite(gid.at("psi(-" + std::to_string(n) + ")"), psi(n), gid.at(ename(n)),
                     Scalar(1), -q4);
    for (int i = n - 1; i >= 1; --i)
        qb.set_composite(gid.at("psi(-" + std::to_string(i) + ")"),
                         gid.at("psi(-" + std::to_string(i + 1) + ")"), gid.at(ename(i)),
                         Scalar(1), -q2);
    for (int i = 1; i < n; ++i)
        qb.set_composite(gid.at("phi(" + std::to_string(i + 1) + ")"), gid.at(fname(i)), phi(i),
                         Scalar(1), -q2.inv());
    qb.set_composite(gid.at("phi(-" + std::to_string(n) + ")"), gid.at(fname(n)), phi(n),
                     Scalar(1), -q4.inv());
    for (int i = n - 1; i >= 1; --i)
        qb.set_composite(gid.at("phi(-" + std::to_string(i) + ")"), gid.at(fname(i)),
                         gid.at("phi(-" + std::to_string(i + 1) + ")"), Scalar(1), -q2.inv());
    if (n == 2) {
        qb.set_composite(gid.at("Ep(1,-2)"), gid.at("e(1)"), gid.at("e(2)"), Scalar(1), -q4);
        qb.set_composite(gid.at("Ep(1,-1)"), gid.at("Ep(1,-2)"), gid.at("e(1)"), q2.inv(), -q2);
        qb.set_composite(gid.at("Fp(-2,1)"), gid.at("f(2)"), gid.at("f(1)"), Scalar(1),
                         -q4.inv());
        qb.set_composite(gid.at("Fp(-1,1)"), gid.at("f(1)"), gid.at("Fp(-2,1)"), q2,
                         -q2.inv());
    }
    qb.derive_remaining(n >= 2);

    SupergroupPreset P;
    P.name = "ospq(" + std::to_string(n) + ")";
    P.quantum = true;
    P.half_power_q = true;
    P.pres = std::move(qb.pres());
    P.is_tail.assign(P.pres.size(), false);
    P.gen_eps.assign(P.pres.size(), Scalar(0));
    for (size_t g = tail_start; g < P.pres.size(); ++g) P.is_tail[g] = true;
    for (int i = 0; i <= n; ++i) {
        P.gen_eps[(size_t)kid[(size_t)i]] = Scalar(1);
        P.gen_eps[(size_t)kiid[(size_t)i]] = Scalar(1);
    }

    HopfData& h = P.hopf;
    for (size_t g = 0; g < P.pres.size(); ++g)
        h.set((int)g, TensorElement(2), Scalar(0), Element());
    for (int i = 0; i <= n; ++i) {
        int k = kid[(size_t)i], ki = kiid[(size_t)i];
        h.set(k, HopfData::grouplike(k), Scalar(1), Element::generator(ki));
        h.set(ki, HopfData::grouplike(ki), Scalar(1), Element::generator(k));
        for (const std::string& nm : {ename(i), fname(i)}) {
            int g = gid.at(nm);
            TensorElement d(2);
            d.add_term({Word(1, (unsigned char)g), Word(1, (unsigned char)k)}, Scalar(1));
            d.add_term({Word(1, (unsigned char)ki), Word(1, (unsigned char)g)}, Scalar(1));
            Element s = P.pres.normal_form(Element::from_word(word_of({k, g, ki}), Scalar(-1)));
            h.set(g, d, Scalar(0), s);
        }
    }
    // composites in declaration (dependency) order
    for (size_t g = 0; g < P.pres.size(); ++g) {
        const auto& gi = qb.info((int)g);
        if (gi.a < 0) continue;
        TensorElement d =
            tensor_multiply(h.delta[(size_t)gi.a], h.delta[(size_t)gi.b], P.pres) * gi.c_ab +
            tensor_multiply(h.delta[(size_t)gi.b], h.delta[(size_t)gi.a], P.pres) * gi.c_ba;
        Element def = Element::from_word(word_of({gi.a, gi.b}), gi.c_ab) +
                      Element::from_word(word_of({gi.b, gi.a}), gi.c_ba);
        h.set((int)g, d, Scalar(0), antipode(def, P.pres, h));
    }

    // vector representation on indices (0..n, bar0..barn); bars at n+1+i
    size_t dim = 2 * (size_t)(n + 1);
    auto row = [&](int i, bool bar) { return bar ? n + 1 + i : i; };
    Rep t;
    t.dim = dim;
    t.parity.assign(dim, 1);
    t.parity[(size_t)row(0, false)] = 0;
    t.parity[(size_t)row(0, true)] = 0;
    t.mats.assign(P.pres.size(), SparseMat(dim));
    {
        SparseMat e0(dim), f0(dim);
        e0.add(row(0, false), row(1, false), Scalar(1));
        e0.add(row(1, true), row(0, true), Scalar(1));
        f0.add(row(1, false), row(0, false), Scalar(1));
        f0.add(row(0, true), row(1, true), Scalar(-1));
        t.mats[(size_t)gid.at("e(0)")] = std::move(e0);
        t.mats[(size_t)gid.at("f(0)")] = std::move(f0);
    }
    for (int i = 1; i < n; ++i) {
        SparseMat ei(dim), fi(dim);
        ei.add(row(i, false), row(i + 1, false), Scalar(1));
        ei.add(row(i + 1, true), row(i, true), Scalar(-1));
        fi.add(row(i + 1, false), row(i, false), Scalar(1));
        fi.add(row(i, true), row(i + 1, true), Scalar(-1));
        t.mats[(size_t)gid.at("e(" + std::to_string(i) + ")")] = std::move(ei);
        t.mats[(size_t)gid.at("f(" + std::to_string(i) + ")")] = std::move(fi);
    }
    {
        SparseMat en(dim), fn(dim);
        en.add(row(n, false), row(n, true), Scalar(1));
        fn.add(row(n, true), row(n, false), Scalar(1));
        t.mats[(size_t)gid.at("e(" + std::to_string(n) + ")")] = std::move(en);
        t.mats[(size_t)gid.at("f(" + std::to_string(n) + ")")] = std::move(fn);
    }
    for (int i = 0; i <= n; ++i) {
        // t(k_i) = q_i^{H_i/2} = s^{d_i H_i}
        std::vector<int> H(dim, 0);
        if (i == 0) {
            H[(size_t)row(0, false)] = 1;
            H[(size_t)row(1, false)] = 1;
            H[(size_t)row(0, true)] = -1;
            H[(size_t)row(1, true)] = -1;
        } else if (i < n) {
            H[(size_t)row(i, false)] = 1;
            H[(size_t)row(i + 1, false)] = -1;
            H[(size_t)row(i, true)] = -1;
            H[(size_t)row(i + 1, true)] = 1;
        } else {
            H[(size_t)row(n, false)] = 1;
            H[(size_t)row(n, true)] = -1;
        }
        SparseMat km(dim), kim(dim);
        for (size_t c = 0; c < dim; ++c) {
            km.add((int)c, (int)c, Scalar::q(D.d[(size_t)i] * H[c]));
            kim.add((int)c, (int)c, Scalar::q(-D.d[(size_t)i] * H[c]));
        }
        t.mats[(size_t)kid[(size_t)i]] = std::move(km);
        t.mats[(size_t)kiid[(size_t)i]] = std::move(kim);
    }
    for (size_t g = 0; g < P.pres.size(); ++g) {
        const auto& gi = qb.info((int)g);
        if (gi.a < 0) continue;
        t.mats[g] = t.mats[(size_t)gi.a] * t.mats[(size_t)gi.b].scaled(gi.c_ab) +
                    t.mats[(size_t)gi.b] * t.mats[(size_t)gi.a].scaled(gi.c_ba);
    }
    P.reps.push_back(std::move(t));
    P.tags["T"] = SupergroupPreset::TagSpec{0, 0};
    if (n == 1) {
        // the dual representation and its pinning sweep are only used by the
        // rank-1 acceptance checks
        P.reps.push_back(dual_rep(P.reps[0], P.pres, P.hopf));
        P.tags["Tb"] = SupergroupPreset::TagSpec{1, 0};
    }
    for (int i = 0; i <= n; ++i) {
        P.index_of[i] = row(i, false);
        P.index_of[-(i + 1)] = row(i, true); // barred index i encoded as -(i+1)
    }
    for (size_t a = 0; a < dim; ++a)
        for (size_t b = 0; b < dim; ++b) {
            P.word_letters.push_back(MWFactor{0, (int)a, (int)b});
            if (n == 1) P.word_letters.push_back(MWFactor{1, (int)a, (int)b});
        }

    // E = psi_1 ... psi_n psi_{-n} ... psi_{-1}, F = phi_{-1} ... phi_{-n} phi_n ... phi_1
    Word ew, fw;
    for (int i = 1; i <= n; ++i) ew.push_back((unsigned char)psi(i));
    for (int i = n; i >= 1; --i)
        ew.push_back((unsigned char)gid.at("psi(-" + std::to_string(i) + ")"));
    for (int i = 1; i <= n; ++i)
        fw.push_back((unsigned char)gid.at("phi(-" + std::to_string(i) + ")"));
    for (int i = n; i >= 1; --i) fw.push_back((unsigned char)phi(i));
    P.gamma = Element::from_word(ew + fw);
    // Lambda = t_{bar1 bar0} ... t_{barn bar0} t_{n bar0} ... t_{1 bar0}
    //          t_{bar1 0} ... t_{barn 0} t_{n 0} ... t_{1 0}
    MatrixWord lambda;
    for (int i = 1; i <= n; ++i) lambda.push_back(MWFactor{0, (int)row(i, true), (int)row(0, true)});
    for (int i = n; i >= 1; --i) lambda.push_back(MWFactor{0, (int)row(i, false), (int)row(0, true)});
    for (int i = 1; i <= n; ++i) lambda.push_back(MWFactor{0, (int)row(i, true), (int)row(0, false)});
    for (int i = n; i >= 1; --i) lambda.push_back(MWFactor{0, (int)row(i, false), (int)row(0, false)});
    P.named_words["Lambda"] = lambda;
    return P;
}

// Example 3: the classical OSP(2|2n) preset, realized as the s -> 1 limit of
// the quantum data with explicit Cartan generators H_i.
SupergroupPreset u_osp2_2n(int n) {
    if (n < 1 || n > 2) throw unsupported_rank("osp22(n) shipped for n in {1,2}");
    SupergroupPreset Q = uq_osp(n);
    size_t dim = 2 * (size_t)(n + 1);
    auto row = [&](int i, bool bar) { return bar ? n + 1 + i : i; };

    SupergroupPreset P;
    P.name = "osp22(" + std::to_string(n) + ")";
    std::vector<Mat> mats;
    std::vector<int> parities;
    std::vector<int> old_gen; // quantum generator providing the matrix, -1 for H
    // root generators in the quantum rank order, skipping the Cartan pairs
    for (size_t g = 0; g < Q.pres.size(); ++g) {
        if (Q.pres.gen((int)g).weight == 0) continue; // k generators
        const SparseMat& sm = Q.reps[0].mats[g];
        Mat m(dim, dim);
        bool zero = true;
        for (size_t j = 0; j < dim; ++j)
            for (const auto& [i, c] : sm.col[j]) {
                m.at((size_t)i, j) = Scalar(c.specialize(Rational(1)));
                zero = zero && c.specialize(Rational(1)).is_zero();
            }
        if (zero) throw domain_error("degenerate classical limit for " + Q.pres.gen((int)g).name);
        P.pres.add_generator(Q.pres.gen((int)g).name, Q.pres.gen((int)g).parity);
        mats.push_back(std::move(m));
        parities.push_back(Q.pres.gen((int)g).parity);
        old_gen.push_back((int)g);
    }
    size_t tail_start = 0;
    for (size_t g = 0; g < P.pres.size(); ++g)
        if (Q.is_tail[(size_t)old_gen[g]] && tail_start == 0) tail_start = g;
    for (int i = 0; i <= n; ++i) {
        P.pres.add_generator("H(" + std::to_string(i) + ")", 0);
        Mat m(dim, dim);
        if (i == 0) {
            m.at((size_t)row(0, false), (size_t)row(0, false)) = Scalar(1);
            m.at((size_t)row(1, false), (size_t)row(1, false)) = Scalar(1);
            m.at((size_t)row(0, true), (size_t)row(0, true)) = Scalar(-1);
            m.at((size_t)row(1, true), (size_t)row(1, true)) = Scalar(-1);
        } else if (i < n) {
            m.at((size_t)row(i, false), (size_t)row(i, false)) = Scalar(1);
            m.at((size_t)row(i + 1, false), (size_t)row(i + 1, false)) = Scalar(-1);
            m.at((size_t)row(i, true), (size_t)row(i, true)) = Scalar(-1);
            m.at((size_t)row(i + 1, true), (size_t)row(i + 1, true)) = Scalar(1);
        } else {
            m.at((size_t)row(n, false), (size_t)row(n, false)) = Scalar(1);
            m.at((size_t)row(n, true), (size_t)row(n, true)) = Scalar(-1);
        }
        mats.push_back(std::move(m));
        parities.push_back(0);
    }
    classical_rules_from_matrices(P.pres, mats, parities);
    P.hopf = classical_hopf(P.pres);
    P.is_tail.assign(P.pres.size(), false);
    for (size_t g = tail_start; g < P.pres.size(); ++g) P.is_tail[g] = true;
    P.gen_eps.assign(P.pres.size(), Scalar(0));

    Rep t;
    t.dim = dim;
    t.parity.assign(dim, 1);
    t.parity[(size_t)row(0, false)] = 0;
    t.parity[(size_t)row(0, true)] = 0;
    t.mats.resize(P.pres.size());
    for (size_t g = 0; g < P.pres.size(); ++g) {
        SparseMat sm(dim);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j)
                if (!mats[g].at(i, j).is_zero()) sm.add((int)i, (int)j, mats[g].at(i, j));
        t.mats[g] = std::move(sm);
    }
    P.reps.push_back(std::move(t));
    P.reps.push_back(dual_rep(P.reps[0], P.pres, P.hopf));
    P.tags["T"] = SupergroupPreset::TagSpec{0, 0};
    P.tags["Tb"] = SupergroupPreset::TagSpec{1, 0};
    for (int i = 0; i <= n; ++i) {
        P.index_of[i] = row(i, false);
        P.index_of[-(i + 1)] = row(i, true);
    }
    for (size_t a = 0; a < dim; ++a)
        for (size_t b = 0; b < dim; ++b) {
            P.word_letters.push_back(MWFactor{0, (int)a, (int)b});
            P.word_letters.push_back(MWFactor{1, (int)a, (int)b});
        }
    // gamma = E F with the same factor words as the quantum preset
    Element gamma;
    {
        Word w;
        for (const auto& [qw, qc] : Q.gamma.terms()) {
            (void)qc;
            for (unsigned char g : qw) {
                int ng = P.pres.gen_by_name(Q.pres.gen((int)g).name);
                w.push_back((unsigned char)ng);
            }
        }
        gamma = Element::from_word(w);
    }
    P.gamma = gamma;
    // Theta: the product of all 4n odd matrix elements t_{0a}, t_{bar0 a} in
    // index order
    MatrixWord theta;
    for (int i = 1; i <= n; ++i) theta.push_back(MWFactor{0, (int)row(0, false), (int)row(i, false)});
    for (int i = 1; i <= n; ++i) theta.push_back(MWFactor{0, (int)row(0, false), (int)row(i, true)});
    for (int i = 1; i <= n; ++i) theta.push_back(MWFactor{0, (int)row(0, true), (int)row(i, false)});
    for (int i = 1; i <= n; ++i) theta.push_back(MWFactor{0, (int)row(0, true), (int)row(i, true)});
    P.named_words["Theta"] = theta;
    return P;
}

} // namespace hsa
