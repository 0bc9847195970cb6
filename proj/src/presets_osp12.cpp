#include "hsa/errors.hpp"
#include "hsa/presets.hpp"

namespace hsa {

// osp(1|2) in its defining (1|2)-dimensional representation: basis index 0 is
// the even direction, 1 and 2 the symplectic pair.
SupergroupPreset u_osp12() {
    SupergroupPreset P;
    P.name = "osp12";
    int f = P.pres.add_generator("f", 1);
    int e = P.pres.add_generator("e", 1);
    int E = P.pres.add_generator("E", 0);
    int F = P.pres.add_generator("F", 0);
    int h = P.pres.add_generator("h", 0);
    (void)f;
    (void)e;

    auto mk = [&](std::initializer_list<std::tuple<int, int, long long>> entries) {
        Mat m(3, 3);
        for (auto [i, j, v] : entries) m.at((size_t)i, (size_t)j) = Scalar(v);
        return m;
    };
    // e: v0 -> v1, v2 -> -v0 ; f: v0 -> v2, v1 -> v0
    std::vector<Mat> mats(5);
    std::vector<int> parities{1, 1, 0, 0, 0};
    mats[(size_t)f] = mk({{2, 0, 1}, {0, 1, 1}});
    mats[(size_t)e] = mk({{1, 0, 1}, {0, 2, -1}});
    mats[(size_t)E] = mk({{1, 2, -2}});
    mats[(size_t)F] = mk({{2, 1, 2}});
    mats[(size_t)h] = mk({{1, 1, 1}, {2, 2, -1}});
    classical_rules_from_matrices(P.pres, mats, parities);
    P.hopf = classical_hopf(P.pres);
    P.is_tail = {false, false, true, true, true};
    P.gen_eps.assign(5, Scalar(0));
    P.gamma = Element::unit() + Element::generator(e) * Element::generator(f);

    Rep t;
    t.dim = 3;
    t.parity = {0, 1, 1};
    t.mats.resize(5);
    for (size_t g = 0; g < 5; ++g) {
        SparseMat sm(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!mats[g].at((size_t)i, (size_t)j).is_zero())
                    sm.add(i, j, mats[g].at((size_t)i, (size_t)j));
        t.mats[g] = std::move(sm);
    }
    P.reps.push_back(std::move(t));
    P.reps.push_back(dual_rep(P.reps[0], P.pres, P.hopf));
    P.tags["T"] = SupergroupPreset::TagSpec{0, 0};
    P.tags["Tb"] = SupergroupPreset::TagSpec{1, 0};
    for (int a = 1; a <= 3; ++a) P.index_of[a] = a - 1;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            P.word_letters.push_back(MWFactor{0, a, b});
            P.word_letters.push_back(MWFactor{1, a, b});
        }
    return P;
}

} // namespace hsa
