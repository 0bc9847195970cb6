#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "hsa/haar.hpp"

using namespace hsa;
using namespace fixtures;

TEST_CASE("Berezin integral: top word 1, lower words 0, empty word eps(z)") {
    for (int n = 1; n <= 4; ++n) {
        SupergroupPreset P = grassmann_preset(n);
        IntegralSpec spec = IntegralSpec::for_gamma(P);
        // all strictly increasing words
        for (int mask = 1; mask < (1 << n); ++mask) {
            MatrixWord w;
            int k = 0;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) {
                    w.push_back(MWFactor{0, P.theta_row[(size_t)i], P.unit_row});
                    ++k;
                }
            Scalar expect = k == n ? Scalar(1) : Scalar(0);
            CHECK(spec.eval(w) == expect);
        }
        CHECK(spec.eval(MatrixWord{}) == Scalar(0)); // eps(z) = 0 for the top form
    }
}

TEST_CASE("Berezin translational invariance (left and right)") {
    SupergroupPreset P = grassmann_preset(2);
    IntegralSpec spec = IntegralSpec::for_gamma(P);
    CHECK(spec.left_invariance_test(2, 2));
    CHECK(spec.right_invariance_test(2, 2));
}

TEST_CASE("invariance_check examples") {
    SupergroupPreset P = u_sl(1, 1);
    CHECK(invariance_check(P.gamma, P).ok);
    // an odd element is rejected
    Element e12 = P.pres.parse_element("E(1,2)");
    CHECK(!invariance_check(e12, P).ok);
    // an element of J is rejected (z in J)
    Element h = P.pres.parse_element("h(1)");
    CHECK(!invariance_check(h, P).ok);
    SupergroupPreset O = u_osp12();
    CHECK(invariance_check(O.gamma, O).ok);
}

TEST_CASE("sl(1|1): integral of Theta ThetaBar is -1, det-word projects to 1") {
    SupergroupPreset P = u_sl(1, 1);
    IntegralSpec spec = IntegralSpec::for_gamma(P);
    CHECK(spec.eval(P.named_words.at("ThetaThetaBar")) == Scalar(-1));
    // int_0 P((det t)(det tbar))^m = 1 realized as a projector entry
    const MatrixWord& det = P.named_words.at("detdet_m");
    std::vector<int> slots;
    MIdx I, J;
    for (const auto& f : det) {
        slots.push_back(f.rep);
        I.push_back((unsigned char)f.row);
        J.push_back((unsigned char)f.col);
    }
    EvalContext ctx = P.context();
    Mat proj = invariants_projector(P, slots);
    size_t fi = 0, fj = 0, dim = 1;
    for (size_t i = 0; i < slots.size(); ++i) dim *= ctx.rep(slots[i]).dim;
    for (size_t i = 0; i < slots.size(); ++i) {
        fi = fi * ctx.rep(slots[i]).dim + I[i];
        fj = fj * ctx.rep(slots[i]).dim + J[i];
    }
    (void)dim;
    CHECK(proj.at(fi, fj) == Scalar(1));
    CHECK(spec.eval(MatrixWord{}) == Scalar(0)); // eps(Gamma) = 0
}

TEST_CASE("sl(1|1): left and right invariance at small size") {
    SupergroupPreset P = u_sl(1, 1);
    IntegralSpec spec = IntegralSpec::for_gamma(P);
    CHECK(spec.left_invariance_test(2, 2));
    CHECK(spec.right_invariance_test(2, 2));
}

TEST_CASE("osp(1|2): integral of 1 is 1") {
    SupergroupPreset P = u_osp12();
    IntegralSpec spec = IntegralSpec::for_gamma(P);
    CHECK(spec.eval(MatrixWord{}) == Scalar(1)); // eps(1+ef) = 1
    CHECK(spec.left_invariance_test(1, 2));
    CHECK(spec.right_invariance_test(1, 2));
}

TEST_CASE("integral vanishes on odd-parity words (z even)") {
    SupergroupPreset P = u_sl(1, 1);
    IntegralSpec spec = IntegralSpec::for_gamma(P);
    EvalContext ctx = P.context();
    for (const auto& l1 : P.word_letters) {
        int par = (ctx.rep(l1.rep).parity[(size_t)l1.row] +
                   ctx.rep(l1.rep).parity[(size_t)l1.col]) & 1;
        if (par == 1) CHECK(spec.eval(MatrixWord{l1}).is_zero());
    }
}

TEST_CASE("representative independence: z -> z + j leaves the values unchanged") {
    SupergroupPreset P = u_sl(1, 1);
    IntegralSpec spec = IntegralSpec::for_gamma(P);
    Rng rng(5150);
    std::vector<MatrixWord> panel;
    panel.push_back(P.named_words.at("ThetaThetaBar"));
    panel.push_back(MatrixWord{P.word_letters[0], P.word_letters[3]});
    for (int iter = 0; iter < 10; ++iter) {
        // j = u * g with g a tail generator
        Element u = random_element(P.pres, rng, 2, 2);
        int h = P.pres.gen_by_name("h(1)");
        Element j = u * Element::generator(h);
        IntegralSpec spec2(P, P.gamma + j, false);
        for (const auto& w : panel) CHECK(spec.eval(w) == spec2.eval(w));
    }
}

TEST_CASE("projector fixtures: trivial, no invariants, non-reducible") {
    SupergroupPreset P = u_sl(1, 1);
    // empty slots list would be the trivial case; use the unit 1x1 logic via
    // a single even slot with no tail action instead: Grassmann preset
    SupergroupPreset G = grassmann_preset(2);
    Mat id = invariants_projector(G, {0});
    CHECK(id == Mat::identity(4));
    // single t slot of sl(1|1): h acts by 1 everywhere, no invariants
    Mat zero = invariants_projector(P, {0});
    CHECK(zero.is_zero());

    // Jordan-block fixture: tail generator acting non-semisimply
    SupergroupPreset bad;
    bad.name = "jordan";
    bad.pres.add_generator("n", 0);
    bad.hopf = classical_hopf(bad.pres);
    bad.is_tail = {true};
    bad.gen_eps = {Scalar(0)};
    Rep r;
    r.dim = 2;
    r.parity = {0, 0};
    SparseMat m(2);
    m.add(0, 1, Scalar(1));
    r.mats.push_back(m);
    bad.reps.push_back(std::move(r));
    CHECK_THROWS_AS(invariants_projector(bad, {0}), not_completely_reducible);
}

TEST_CASE("Krylov projector column agrees with the direct projector") {
    SupergroupPreset P = u_sl(2, 1);
    EvalContext ctx = P.context();
    const MatrixWord& det = P.named_words.at("detdet_m");
    std::vector<int> slots;
    MIdx J;
    for (const auto& f : det) {
        slots.push_back(f.rep);
        J.push_back((unsigned char)f.col);
    }
    Mat direct = invariants_projector(P, slots);
    SparseVec col = projector_column_krylov(P, slots, J);
    size_t dim = 1, fj = 0;
    for (size_t i = 0; i < slots.size(); ++i) dim *= ctx.rep(slots[i]).dim;
    for (size_t i = 0; i < slots.size(); ++i) fj = fj * ctx.rep(slots[i]).dim + J[i];
    for (size_t k = 0; k < dim; ++k) {
        MIdx K;
        size_t rem = k;
        std::vector<unsigned char> digits(slots.size());
        for (size_t i = slots.size(); i-- > 0;) {
            digits[i] = (unsigned char)(rem % ctx.rep(slots[i]).dim);
            rem /= ctx.rep(slots[i]).dim;
        }
        for (auto d : digits) K.push_back(d);
        auto it = col.find(K);
        Scalar kv = it == col.end() ? Scalar(0) : it->second;
        CHECK(direct.at(k, fj) == kv);
    }
}

TEST_CASE("sl(2|1): invariance, Theta ThetaBar value, det projector") {
    SupergroupPreset P = u_sl(2, 1);
    CHECK(invariance_check(P.gamma, P).ok);
    IntegralSpec spec = IntegralSpec::for_gamma(P);
    // mn = 2: (-1)^(2*3/2) = -1
    CHECK(spec.eval(P.named_words.at("ThetaThetaBar")) == Scalar(-1));
    EvalContext ctx = P.context();
    const MatrixWord& det = P.named_words.at("detdet_m");
    std::vector<int> slots;
    MIdx I, J;
    for (const auto& f : det) {
        slots.push_back(f.rep);
        I.push_back((unsigned char)f.row);
        J.push_back((unsigned char)f.col);
    }
    Mat proj = invariants_projector(P, slots);
    size_t fi = 0, fj = 0;
    for (size_t i = 0; i < slots.size(); ++i) {
        fi = fi * ctx.rep(slots[i]).dim + I[i];
        fj = fj * ctx.rep(slots[i]).dim + J[i];
    }
    CHECK(proj.at(fi, fj) == Scalar(1));
}

TEST_CASE("J certificates: exact and rep-bound modes") {
    SupergroupPreset P = u_sl(1, 1);
    Element h = P.pres.parse_element("h(1)");
    Element e = P.pres.parse_element("E(1,2)");
    auto exact = j_membership_certificate(e * h, P, true);
    CHECK(exact.exact);
    CHECK(exact.pass);
    auto bound = j_membership_certificate(e * h, P, false, 2);
    CHECK(!bound.exact);
    CHECK(bound.pass);
    auto fail = j_membership_certificate(e, P, true);
    CHECK(!fail.pass);
}
