#pragma once

// Small hand-built presentations used by several unit test binaries.

#include "hsa/hopf.hpp"
#include "hsa/presentation.hpp"

#include <cstdint>

namespace fixtures {

using namespace hsa;

// xorshift rng for seeded property tests
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 1) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int range(int lo, int hi) { return lo + (int)(next() % (uint64_t)(hi - lo + 1)); }
};

inline Element random_element(const Presentation& p, Rng& rng, int max_deg, int terms) {
    Element e;
    for (int t = 0; t < terms; ++t) {
        Word w;
        int len = rng.range(0, max_deg);
        for (int i = 0; i < len; ++i) w.push_back((unsigned char)rng.range(0, (int)p.size() - 1));
        e.add_term(w, Scalar(rng.range(-4, 4)));
    }
    return e;
}

// Grassmann algebra on n anticommuting odd generators xi(i).
inline Presentation grassmann(int n) {
    Presentation p;
    for (int i = 1; i <= n; ++i) p.add_generator("xi(" + std::to_string(i) + ")", 1);
    for (int i = 0; i < n; ++i) {
        p.add_rule(word_of({i, i}), Element());
        for (int j = i + 1; j < n; ++j)
            p.add_rule(word_of({j, i}), Element::from_word(word_of({i, j}), Scalar(-1)));
    }
    return p;
}

inline HopfData grassmann_hopf(const Presentation& p) {
    HopfData h;
    for (int g = 0; g < (int)p.size(); ++g)
        h.set(g, HopfData::primitive(g), Scalar(0), Element::generator(g) * Scalar(-1));
    return h;
}

// U(sl(1|1)): generators E(2,1) < E(1,2) < h(1); h central, E F + F E = h.
struct Sl11 {
    Presentation p;
    int F, E, H;
};

inline Sl11 sl11() {
    Sl11 f;
    f.F = f.p.add_generator("E(2,1)", 1);
    f.E = f.p.add_generator("E(1,2)", 1);
    f.H = f.p.add_generator("h(1)", 0);
    f.p.add_rule(word_of({f.E, f.E}), Element());
    f.p.add_rule(word_of({f.F, f.F}), Element());
    f.p.add_rule(word_of({f.E, f.F}),
                 Element::from_word(word_of({f.F, f.E}), Scalar(-1)) + Element::generator(f.H));
    f.p.add_rule(word_of({f.H, f.E}), Element::from_word(word_of({f.E, f.H})));
    f.p.add_rule(word_of({f.H, f.F}), Element::from_word(word_of({f.F, f.H})));
    return f;
}

inline HopfData sl11_hopf(const Sl11& f) {
    HopfData h;
    for (int g = 0; g < 3; ++g)
        h.set(g, HopfData::primitive(g), Scalar(0), Element::generator(g) * Scalar(-1));
    return h;
}

} // namespace fixtures
