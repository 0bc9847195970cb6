#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hsa/gl1dual.hpp"

#include <cstdint>

using namespace hsa;

namespace {
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

Gl1Dual random_elem(Rng& rng) {
    Gl1Dual e;
    int terms = rng.range(1, 3);
    for (int t = 0; t < terms; ++t)
        e.add_term({Rational(rng.range(-3, 3), rng.range(1, 2)), rng.range(0, 3)},
                   Scalar(rng.range(-4, 4)));
    return e;
}
} // namespace

TEST_CASE("product rule u^r_a u^s_b = u^{r+s}_{a+b}") {
    Gl1Dual x = gd_mul(Gl1Dual::u(Rational(0), 1), Gl1Dual::u(Rational(3), 2));
    CHECK(x == Gl1Dual::u(Rational(3), 3));
    CHECK(gd_mul(Gl1Dual::unit(), x) == x);
}

TEST_CASE("coproduct is the binomial expansion") {
    auto d = gd_coproduct(Gl1Dual::u(Rational(2), 2));
    // u^0 (x) u^2 + 2 u^1 (x) u^1 + u^2 (x) u^0, all at a = 2
    REQUIRE(d.size() == 3);
    CHECK(d.at({{Rational(2), 0}, {Rational(2), 2}}) == Scalar(1));
    CHECK(d.at({{Rational(2), 1}, {Rational(2), 1}}) == Scalar(2));
    CHECK(d.at({{Rational(2), 2}, {Rational(2), 0}}) == Scalar(1));
}

TEST_CASE("counit and antipode formulas") {
    CHECK(gd_counit(Gl1Dual::u(Rational(5), 0)) == Scalar(1));
    CHECK(gd_counit(Gl1Dual::u(Rational(5), 2)) == Scalar(0));
    CHECK(gd_antipode(Gl1Dual::u(Rational(5), 3)) == Gl1Dual::u(Rational(-5), 3) * Scalar(-1));
    CHECK(gd_antipode(Gl1Dual::u(Rational(5), 2)) == Gl1Dual::u(Rational(-5), 2));
}

TEST_CASE("integral on K: int u^0_a = delta_{a,0}; no integral beyond K") {
    CHECK(gd_integral(Gl1Dual::u(Rational(5), 0)) == Scalar(0));
    CHECK(gd_integral(Gl1Dual::u(Rational(0), 0)) == Scalar(1));
    CHECK_THROWS_AS(gd_integral(Gl1Dual::u(Rational(0), 1)), not_in_k);
}

TEST_CASE("pairing against powers of X matches the derivative formula") {
    // <u^2_1, X^2> = 2
    CHECK(gd_pair_power(Rational(1), 2, 2) == Rational(2));
    for (int r = 0; r <= 5; ++r)
        for (int s = 0; s <= 5; ++s) {
            // oracle: d^r X^s / dX^r = s(s-1)...(s-r+1) X^{s-r}
            Rational a(3, 2);
            Rational expect(1);
            if (r > s)
                expect = Rational(0);
            else {
                for (int i = 0; i < r; ++i) expect *= Rational(s - i);
                for (int i = 0; i < s - r; ++i) expect *= a;
            }
            CHECK(gd_pair_power(a, r, s) == expect);
        }
}

TEST_CASE("bialgebra compatibility on random pairs") {
    Rng rng(321);
    for (int iter = 0; iter < 50; ++iter) {
        Gl1Dual u = random_elem(rng), v = random_elem(rng);
        auto duv = gd_coproduct(gd_mul(u, v));
        // Delta(u)Delta(v) with componentwise products (everything even here)
        std::map<std::pair<Gl1Dual::Key, Gl1Dual::Key>, Scalar> prod;
        auto du = gd_coproduct(u), dv = gd_coproduct(v);
        for (const auto& [ku, cu] : du)
            for (const auto& [kv, cv] : dv) {
                Gl1Dual::Key l{ku.first.first + kv.first.first, ku.first.second + kv.first.second};
                Gl1Dual::Key r{ku.second.first + kv.second.first,
                               ku.second.second + kv.second.second};
                auto key = std::make_pair(l, r);
                auto it = prod.find(key);
                Scalar c = cu * cv;
                if (it == prod.end())
                    prod.emplace(key, c);
                else
                    it->second += c;
            }
        for (auto it = prod.begin(); it != prod.end();)
            it = it->second.is_zero() ? prod.erase(it) : std::next(it);
        CHECK(duv == prod);
    }
}

TEST_CASE("K is closed under all the Hopf operations") {
    Rng rng(55);
    for (int iter = 0; iter < 20; ++iter) {
        Gl1Dual u = Gl1Dual::u(Rational(rng.range(-4, 4)), 0);
        Gl1Dual v = Gl1Dual::u(Rational(rng.range(-4, 4)), 0);
        Gl1Dual uv = gd_mul(u, v);
        for (const auto& [k, c] : uv.terms()) {
            (void)c;
            CHECK(k.second == 0);
        }
        for (const auto& [k, c] : gd_antipode(u).terms()) {
            (void)c;
            CHECK(k.second == 0);
        }
        for (const auto& [kk, c] : gd_coproduct(u)) {
            (void)c;
            CHECK(kk.first.second == 0);
            CHECK(kk.second.second == 0);
        }
    }
}

TEST_CASE("the integral on K is two-sided (convolution check)") {
    // sum int(u_(1)) u_(2) = int(u) 1 and mirror, on a sample
    for (int a = -3; a <= 3; ++a) {
        Gl1Dual u = Gl1Dual::u(Rational(a), 0);
        auto d = gd_coproduct(u);
        Gl1Dual left, right;
        for (const auto& [kk, c] : d) {
            left = left + Gl1Dual::u(kk.second.first, kk.second.second) *
                              (c * gd_integral(Gl1Dual::u(kk.first.first, kk.first.second)));
            right = right + Gl1Dual::u(kk.first.first, kk.first.second) *
                                (c * gd_integral(Gl1Dual::u(kk.second.first, kk.second.second)));
        }
        Gl1Dual expect = Gl1Dual::unit() * gd_integral(u);
        CHECK(left == expect);
        CHECK(right == expect);
    }
}
