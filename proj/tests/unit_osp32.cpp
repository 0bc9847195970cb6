#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "hsa/haar.hpp"

using namespace hsa;

namespace {

Mat to_dense(const SparseMat& m) {
    Mat out(m.n, m.n);
    for (size_t j = 0; j < m.n; ++j)
        for (const auto& [i, c] : m.col[j]) out.at((size_t)i, j) += c;
    return out;
}

} // namespace

TEST_CASE("osp(3|2): structure constants, confluence, rep") {
    SupergroupPreset P = u_osp32();
    CHECK(P.pres.size() == 12);
    CHECK(rep_check(P.reps[0], P.pres).ok);
    CHECK(rep_check(P.reps[1], P.pres).ok);
    CHECK(P.pres.check_local_confluence(3).empty());
    CHECK(check_hopf_axioms(P.pres, P.hopf, 2).ok);
}

TEST_CASE("osp(3|2): Casimir is central and decomposes as C_o + C_e") {
    SupergroupPreset P = u_osp32();
    const Element& C = P.named_elements.at("C");
    const Element& Co = P.named_elements.at("C_o");
    for (size_t g = 0; g < P.pres.size(); ++g) {
        Element comm = Element::generator((int)g) * C - C * Element::generator((int)g);
        CHECK(P.pres.normal_form(comm).is_zero());
    }
    // C - C_o lies in U(g_0): every monomial is a tail word
    Element Ce = P.pres.normal_form(C - Co);
    for (const auto& [w, c] : Ce.terms()) {
        (void)c;
        for (unsigned char g : w) CHECK(P.is_tail[g]);
    }
    // C_o is quadratic in the odd generators
    for (const auto& [w, c] : Co.terms()) {
        (void)c;
        REQUIRE(w.size() == 2);
        CHECK(!P.is_tail[w[0]]);
        CHECK(!P.is_tail[w[1]]);
    }
}

TEST_CASE("osp(3|2): Casimir spectrum on W reproduces the Example 5 table") {
    SupergroupPreset P = u_osp32();
    const Element& C = P.named_elements.at("C");
    Rep W = quotient_module_rep(P);
    REQUIRE(W.dim == 64);
    SparseMat cw(W.dim);
    for (const auto& [w, c] : C.terms()) cw = cw + W.of_word(w).scaled(c);
    auto kernel_of = [&](const Scalar& shift, int pow) {
        SparseMat sh = cw;
        for (size_t j = 0; j < W.dim; ++j) sh.col[j].emplace_back((int)j, shift);
        sh.compress();
        SparseMat acc = sh;
        for (int i = 1; i < pow; ++i) acc = acc * sh;
        return nullspace(to_dense(acc));
    };
    auto w6 = kernel_of(Scalar(6), 1);  // eigenvalue -6
    auto w2 = kernel_of(Scalar(-2), 1); // eigenvalue 2
    auto w0 = kernel_of(Scalar(0), 3);  // nilpotent block
    CHECK(w6.size() == 20);
    CHECK(w2.size() == 12);
    CHECK(w0.size() == 32);
    // C_W restricted to W_0 is nilpotent but nonzero (Example 5's remark)
    bool nonzero_on_w0 = false;
    for (const Vec& v : w0) {
        Vec img(W.dim, Scalar(0));
        for (size_t j = 0; j < W.dim; ++j)
            if (!v[j].is_zero())
                for (const auto& [i, c] : cw.col[j]) img[(size_t)i] += c * v[j];
        for (const auto& c : img) nonzero_on_w0 = nonzero_on_w0 || !c.is_zero();
    }
    CHECK(nonzero_on_w0);

    // W_{-6} is an explicit 20-dimensional g-submodule on which C = -6
    // (the [0,3/2] reference module); build the restricted matrices and
    // verify every presentation rule on them
    Mat basis(W.dim, w6.size());
    for (size_t j = 0; j < w6.size(); ++j)
        for (size_t i = 0; i < W.dim; ++i) basis.at(i, j) = w6[j][i];
    Rep R;
    R.dim = w6.size();
    R.parity.assign(R.dim, 0); // parities mixed; rep_check grading not used here
    R.mats.resize(P.pres.size(), SparseMat(R.dim));
    for (size_t g = 0; g < P.pres.size(); ++g) {
        SparseMat m(R.dim);
        for (size_t b = 0; b < w6.size(); ++b) {
            Vec img(W.dim, Scalar(0));
            for (size_t j = 0; j < W.dim; ++j)
                if (!w6[b][j].is_zero())
                    for (const auto& [i, c] : W.mats[g].col[j]) img[(size_t)i] += c * w6[b][j];
            auto x = solve(basis, img);
            REQUIRE(x.has_value()); // submodule property
            for (size_t i = 0; i < w6.size(); ++i)
                if (!(*x)[i].is_zero()) m.add((int)i, (int)b, (*x)[i]);
        }
        R.mats[g] = std::move(m);
    }
    for (const Rule& rule : P.pres.rules()) {
        SparseMat diff = R.of_word(rule.lhs) - R.of_element(rule.rhs);
        CHECK(diff.is_zero());
    }
    // C acts by exactly -6 on it
    SparseMat c20(R.dim);
    for (const auto& [w, c] : C.terms()) c20 = c20 + R.of_word(w).scaled(c);
    for (size_t i = 0; i < R.dim; ++i)
        for (size_t j = 0; j < R.dim; ++j)
            CHECK(c20.entry((int)i, (int)j) == (i == j ? Scalar(-6) : Scalar(0)));
}

TEST_CASE("osp(3|2): z and z_o agree mod J; invariance of z_o") {
    SupergroupPreset P = u_osp32();
    const Element& z = P.named_elements.at("z");
    CHECK(P.pres.in_left_ideal_J(z - P.gamma, P.is_tail, P.gen_eps));
    auto inv = invariance_check(P.gamma, P);
    CHECK_MESSAGE(inv.ok, inv.witness);
    // z_o not in J is part of invariance_check; double-check directly
    CHECK(!P.pres.in_left_ideal_J(P.gamma, P.is_tail, P.gen_eps));
}

TEST_CASE("osp(3|2): trivial module eigenvalue 0") {
    SupergroupPreset P = u_osp32();
    // the counit realizes the trivial module: eps(C) = 0
    CHECK(counit(P.named_elements.at("C"), P.pres, P.hopf).is_zero());
}
