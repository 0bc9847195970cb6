#pragma once

#include "hsa/rational.hpp"
#include "hsa/scalar.hpp"

#include <map>
#include <string>

namespace hsa {

// Element of U(gl(1))° = C[X]°: a finite combination of the forms u^r_a with
// <u^r_a, P> = (d^r P / dX^r)(a), i.e. Y^r exp(aY) under the power-series
// identification.
class Gl1Dual {
  public:
    using Key = std::pair<Rational, int>; // (a, r)

    Gl1Dual() = default;
    static Gl1Dual u(const Rational& a, int r) {
        Gl1Dual e;
        e.terms_[{a, r}] = Scalar(1);
        return e;
    }
    static Gl1Dual unit() { return u(Rational(0), 0); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    void add_term(const Key& k, const Scalar& c);

    Gl1Dual operator+(const Gl1Dual& o) const;
    Gl1Dual operator-(const Gl1Dual& o) const;
    Gl1Dual operator*(const Scalar& s) const;
    bool operator==(const Gl1Dual& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

  private:
    std::map<Key, Scalar> terms_;
};

// u^r_a u^s_b = u^{r+s}_{a+b}
Gl1Dual gd_mul(const Gl1Dual& x, const Gl1Dual& y);
// Delta(u^r_a) = sum_s binom(r,s) u^s_a (x) u^{r-s}_a
std::map<std::pair<Gl1Dual::Key, Gl1Dual::Key>, Scalar> gd_coproduct(const Gl1Dual& x);
// eps(u^r_a) = delta_{r,0}
Scalar gd_counit(const Gl1Dual& x);
// S(u^r_a) = (-1)^r u^r_{-a}
Gl1Dual gd_antipode(const Gl1Dual& x);
// integral on the character subalgebra K = span{u^0_a}: int u^0_a = delta_{a,0};
// throws not_in_k when the argument has support outside K
Scalar gd_integral(const Gl1Dual& x);
// <u^r_a, X^s> = (d^r X^s/dX^r)(a)
Rational gd_pair_power(const Rational& a, int r, int s);

} // namespace hsa
