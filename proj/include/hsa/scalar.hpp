#pragma once

#include "hsa/laurent.hpp"
#include "hsa/rational.hpp"

#include <string>

namespace hsa {

// Element of the rational-function field Q(q), kept in reduced canonical form:
// num is a Laurent polynomial, den an ordinary polynomial with nonzero constant
// term and positive leading coefficient, num/den integer-content-free and coprime.
class Scalar {
  public:
    Scalar() : num_(), den_(Laurent::constant(BigInt(1))) {}
    Scalar(long long v) : num_(Laurent::constant(BigInt(v))), den_(Laurent::constant(BigInt(1))) {}
    Scalar(const Rational& r)
        : num_(Laurent::constant(r.num())), den_(Laurent::constant(r.den())) {
        normalize();
    }
    Scalar(Laurent num, Laurent den);

    static Scalar q(int exp = 1) { return Scalar(Laurent::monomial(BigInt(1), exp), Laurent(1)); }
    static Scalar from_laurent(Laurent l) { return Scalar(std::move(l), Laurent(1)); }
    static Scalar from_string(const std::string& s, const std::string& var = "q");

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_laurent() const { return den_.is_constant(); }
    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inv() const;
    Scalar pow(int e) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const {
        return num_ != o.num_ ? num_ < o.num_ : den_ < o.den_;
    }

    // Exact evaluation at q = v of the reduced function; pole_error if den(v)=0.
    Rational specialize(const Rational& v) const;
    // Substitute q -> q^k (k != 0); used for the q = s^2 convention of the osp presets.
    Scalar substitute_power(int k) const;

    std::string to_string(const std::string& var = "q") const;

  private:
    Laurent num_, den_;
    void normalize();
};

Scalar q_int(int n);                       // [n]_q = (q^n - q^-n)/(q - q^-1)
Scalar q_factorial(int n);
Scalar q_binomial(int n, int k);           // symmetric convention, Laurent polynomial
Scalar q_int_base(int n, const Scalar& qi);        // [n] with q replaced by given base
Scalar q_binomial_base(int n, int k, const Scalar& qi);

} // namespace hsa
