#pragma once

#include "hsa/bigint.hpp"
#include "hsa/rational.hpp"

#include <string>
#include <vector>

namespace hsa {

// Laurent polynomial in one variable with BigInt coefficients.
// Invariant: coeffs empty (zero) or both ends nonzero; value = sum coeffs[i] * q^(lo+i).
class Laurent {
  public:
    Laurent() = default;
    Laurent(long long c) { *this = constant(BigInt(c)); }
    static Laurent constant(BigInt c);
    static Laurent monomial(BigInt c, int exp);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const { return is_zero() || (lo_ == 0 && coeffs_.size() == 1); }
    bool is_monomial() const { return coeffs_.size() == 1; }
    int low_exp() const { return lo_; }                              // requires nonzero
    int high_exp() const { return lo_ + (int)coeffs_.size() - 1; }   // requires nonzero
    const BigInt& leading() const { return coeffs_.back(); }         // requires nonzero
    const BigInt& trailing() const { return coeffs_.front(); }       // requires nonzero
    BigInt coeff(int exp) const;

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent shifted(int k) const; // * q^k

    bool operator==(const Laurent& o) const { return lo_ == o.lo_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    bool operator<(const Laurent& o) const; // arbitrary total order for map keys

    // Integer-coefficient content (gcd), nonnegative.
    BigInt content() const;
    Laurent divided_by_content(const BigInt& c) const;

    // Polynomial helpers: treat as element of Z[q] (requires lo_ >= 0, callers shift first).
    // Exact division; requires divisibility.
    static Laurent div_exact(const Laurent& a, const Laurent& b);
    // Primitive gcd in Z[q] of the polynomial parts (ignores q-power factors),
    // normalized with positive leading coefficient.
    static Laurent gcd(const Laurent& a, const Laurent& b);

    Rational eval(const Rational& v) const;
    Laurent derivative() const;

    std::string to_string(const std::string& var = "q") const;

  private:
    int lo_ = 0;
    std::vector<BigInt> coeffs_;
    void trim();
};

} // namespace hsa
