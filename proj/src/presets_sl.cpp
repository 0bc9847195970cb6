#include "hsa/errors.hpp"
#include "hsa/presets.hpp"

namespace hsa {

namespace {

Mat unit_mat(size_t d, int i, int j) {
    Mat m(d, d);
    m.at((size_t)i, (size_t)j) = Scalar(1);
    return m;
}

} // namespace

SupergroupPreset u_sl(int m, int n) {
    if (m < 1 || n < 1 || m * n > 4) throw unsupported_rank("sl(m|n) shipped for mn <= 4");
    const int N = m + n;
    auto par = [&](int a) { return a > m ? 1 : 0; }; // 1-based index parity

    SupergroupPreset P;
    P.name = "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";

    // generators in rank order: negative odd, positive odd, then the even tail
    std::vector<Mat> mats;
    std::vector<int> parities;
    auto add_E = [&](int a, int b) {
        P.pres.add_generator("E(" + std::to_string(a) + "," + std::to_string(b) + ")",
                             (par(a) + par(b)) & 1);
        mats.push_back(unit_mat((size_t)N, a - 1, b - 1));
        parities.push_back((par(a) + par(b)) & 1);
    };
    for (int mu = m + 1; mu <= N; ++mu)
        for (int i = 1; i <= m; ++i) add_E(mu, i);
    for (int i = 1; i <= m; ++i)
        for (int mu = m + 1; mu <= N; ++mu) add_E(i, mu);
    size_t tail_start = P.pres.size();
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (i != j) add_E(i, j);
    for (int mu = m + 1; mu <= N; ++mu)
        for (int nu = m + 1; nu <= N; ++nu)
            if (mu != nu) add_E(mu, nu);
    for (int a = 1; a < N; ++a) {
        P.pres.add_generator("h(" + std::to_string(a) + ")", 0);
        Mat h(N, N);
        h.at((size_t)a - 1, (size_t)a - 1) = Scalar(1);
        h.at((size_t)a, (size_t)a) = a == m ? Scalar(1) : Scalar(-1);
        mats.push_back(h);
        parities.push_back(0);
    }
    classical_rules_from_matrices(P.pres, mats, parities);
    P.hopf = classical_hopf(P.pres);
    P.is_tail.assign(P.pres.size(), false);
    for (size_t g = tail_start; g < P.pres.size(); ++g) P.is_tail[g] = true;
    P.gen_eps.assign(P.pres.size(), Scalar(0));

    // vector representation t and its dual
    Rep t;
    t.dim = (size_t)N;
    t.parity.resize((size_t)N);
    for (int a = 1; a <= N; ++a) t.parity[(size_t)a - 1] = par(a);
    t.mats.resize(P.pres.size());
    for (size_t g = 0; g < P.pres.size(); ++g) {
        SparseMat sm((size_t)N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (!mats[g].at((size_t)i, (size_t)j).is_zero())
                    sm.add(i, j, mats[g].at((size_t)i, (size_t)j));
        t.mats[g] = std::move(sm);
    }
    P.reps.push_back(std::move(t));
    P.reps.push_back(dual_rep(P.reps[0], P.pres, P.hopf));
    P.tags["T"] = SupergroupPreset::TagSpec{0, 0};
    P.tags["Tb"] = SupergroupPreset::TagSpec{1, 0};
    for (int a = 1; a <= N; ++a) P.index_of[a] = a - 1;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            P.word_letters.push_back(MWFactor{0, a - 1, b - 1});
            P.word_letters.push_back(MWFactor{1, a - 1, b - 1});
        }

    // E = E_m E_{m-1} ... E_1 with E_i = E(i,m+1) E(i,m+2) ... E(i,m+n)
    // F = F_1 F_2 ... F_m with F_i = E(m+n,i) E(m+n-1,i) ... E(m+1,i)
    auto gen_id = [&](int a, int b) {
        int g = P.pres.gen_by_name("E(" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (g < 0) throw domain_error("missing generator");
        return g;
    };
    Word ew, fw;
    for (int i = m; i >= 1; --i)
        for (int mu = m + 1; mu <= N; ++mu) ew.push_back((unsigned char)gen_id(i, mu));
    for (int i = 1; i <= m; ++i)
        for (int mu = N; mu >= m + 1; --mu) fw.push_back((unsigned char)gen_id(mu, i));
    P.gamma = Element::from_word(ew + fw);

    // Theta_i = t_{i,m+n} ... t_{i,m+1}; Theta = Theta_m ... Theta_1
    MatrixWord theta, theta_bar;
    for (int i = m; i >= 1; --i)
        for (int mu = N; mu >= m + 1; --mu) {
            theta.push_back(MWFactor{0, i - 1, mu - 1});
            theta_bar.push_back(MWFactor{1, i - 1, mu - 1});
        }
    P.named_words["Theta"] = theta;
    P.named_words["ThetaBar"] = theta_bar;
    MatrixWord ttb = theta;
    for (const auto& f : theta_bar) ttb.push_back(f);
    P.named_words["ThetaThetaBar"] = ttb;
    if (n == 1) {
        MatrixWord det;
        for (int rep = 0; rep < m; ++rep) {
            det.push_back(MWFactor{0, N - 1, N - 1});
            det.push_back(MWFactor{1, N - 1, N - 1});
        }
        P.named_words["detdet_m"] = det;
    }

    // invariant Laplacian of the tail: sl(m) and sl(n) Casimirs plus the
    // squared gl(1) center
    auto diag_element = [&](const std::vector<Rational>& d) {
        // solve sum x_a h_a = diag(d) (str d = 0)
        Mat sys((size_t)N, (size_t)(N - 1));
        for (int a = 1; a < N; ++a) {
            sys.at((size_t)a - 1, (size_t)a - 1) = Scalar(1);
            sys.at((size_t)a, (size_t)a - 1) = a == m ? Scalar(1) : Scalar(-1);
        }
        Vec rhs((size_t)N);
        for (int i = 0; i < N; ++i) rhs[(size_t)i] = Scalar(d[(size_t)i]);
        auto x = solve(sys, rhs);
        if (!x) throw domain_error("diagonal not in the Cartan span");
        Element out;
        for (int a = 1; a < N; ++a) {
            int g = P.pres.gen_by_name("h(" + std::to_string(a) + ")");
            if (!(*x)[(size_t)a - 1].is_zero())
                out += Element::generator(g) * (*x)[(size_t)a - 1];
        }
        return out;
    };
    Element lap;
    auto add_block = [&](int lo, int hi) {
        int k = hi - lo + 1;
        if (k < 2) return;
        for (int i = lo; i <= hi; ++i)
            for (int j = lo; j <= hi; ++j)
                if (i != j)
                    lap += Element::generator(gen_id(i, j)) * Element::generator(gen_id(j, i));
        for (int i = lo; i <= hi; ++i)
            for (int j = i + 1; j <= hi; ++j) {
                std::vector<Rational> d((size_t)N, Rational(0));
                d[(size_t)i - 1] = Rational(1);
                d[(size_t)j - 1] = Rational(-1);
                Element hd = diag_element(d);
                lap += (hd * hd) * Scalar(Rational(1, k));
            }
    };
    add_block(1, m);
    add_block(m + 1, N);
    std::vector<Rational> zd((size_t)N, Rational(0));
    for (int i = 1; i <= m; ++i) zd[(size_t)i - 1] = Rational(n);
    for (int mu = m + 1; mu <= N; ++mu) zd[(size_t)mu - 1] = Rational(m);
    Element z = diag_element(zd);
    lap += z * z;
    P.laplacian = lap;
    P.has_laplacian = true;
    return P;
}

} // namespace hsa
