#include "hsa/scalar.hpp"

#include "hsa/errors.hpp"

#include <cctype>

namespace hsa {

Scalar::Scalar(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Scalar::normalize() {
    if (den_.is_zero()) throw division_by_zero();
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    if (den_.is_one()) return;
    // move the q-power of den into num
    int shift = den_.low_exp();
    if (shift != 0) {
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
    }
    // cancel the polynomial gcd (den has a nonzero constant term, so the gcd
    // carries no q-power); monomial numerators share only constants with den
    if (!den_.is_constant() && !num_.is_monomial()) {
        Laurent g = Laurent::gcd(num_, den_);
        if (!g.is_one() && !g.is_constant()) {
            int nlo = num_.low_exp();
            num_ = Laurent::div_exact(num_.shifted(-nlo), g).shifted(nlo);
            den_ = Laurent::div_exact(den_, g);
        }
    }
    // integer content and sign
    if (den_.is_constant() && den_.trailing().is_one()) return;
    BigInt c = BigInt::gcd(num_.content(), den_.content());
    if (den_.leading().is_negative()) c = -c;
    if (!c.is_one()) {
        num_ = num_.divided_by_content(c);
        den_ = den_.divided_by_content(c);
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::inv() const {
    if (is_zero()) throw division_by_zero();
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
    if (e == 0) return Scalar(1);
    Scalar base = e > 0 ? *this : inv();
    int n = e > 0 ? e : -e;
    Scalar r(1);
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

Rational Scalar::specialize(const Rational& v) const {
    Rational d = den_.eval(v);
    if (d.is_zero()) throw pole_error("pole at q = " + v.to_string());
    return num_.eval(v) / d;
}

Scalar Scalar::substitute_power(int k) const {
    auto sub = [&](const Laurent& l) {
        Laurent out;
        if (l.is_zero()) return out;
        for (int e = l.low_exp(); e <= l.high_exp(); ++e) {
            BigInt c = l.coeff(e);
            if (!c.is_zero()) out += Laurent::monomial(c, e * k);
        }
        return out;
    };
    return Scalar(sub(num_), sub(den_));
}

std::string Scalar::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    if (den_.is_one()) {
        // print as a sum of coef*q^e terms, highest power first
        std::string out;
        for (int e = num_.high_exp(); e >= num_.low_exp(); --e) {
            BigInt c = num_.coeff(e);
            if (c.is_zero()) continue;
            std::string sep;
            if (!out.empty()) {
                sep = c.is_negative() ? " - " : " + ";
                if (c.is_negative()) c = -c;
            } else if (c.is_negative()) {
                sep = "-";
                c = -c;
            }
            out += sep;
            if (e == 0)
                out += c.to_string();
            else {
                if (!c.is_one()) out += c.to_string() + "*";
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }
    if (den_.is_constant())
        return "(" + num_.to_string(var) + ")/" + den_.trailing().to_string();
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

namespace {

struct ScalarParser {
    const std::string& s;
    const std::string& var;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    bool at_end() {
        skip_ws();
        return pos == s.size();
    }

    BigInt parse_integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == digits) throw parse_error("expected integer in scalar at '" + s.substr(start) + "'");
        return BigInt::from_string(s.substr(start, pos - start));
    }

    int parse_exponent() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == digits) throw parse_error("expected exponent in scalar");
        return (int)std::stol(s.substr(start, pos - start));
    }

    bool var_ahead() {
        skip_ws();
        return s.compare(pos, var.size(), var) == 0;
    }

    // factor := integer [/ integer] | var [^ exp] | ( expr )
    Scalar parse_factor() {
        skip_ws();
        if (eat('(')) {
            Scalar inner = parse_expr();
            if (!eat(')')) throw parse_error("missing ')' in scalar");
            return inner;
        }
        if (var_ahead()) {
            pos += var.size();
            int e = 1;
            if (eat('^')) e = parse_exponent();
            return Scalar::q(e);
        }
        BigInt n = parse_integer();
        if (eat('/')) {
            // rational literal or division by a parenthesized denominator
            skip_ws();
            if (peek('(')) {
                ++pos;
                Scalar d = parse_expr();
                if (!eat(')')) throw parse_error("missing ')' in scalar");
                return Scalar(Rational(n)) / d;
            }
            BigInt d = parse_integer();
            return Scalar(Rational(n, d));
        }
        return Scalar(Rational(n));
    }

    Scalar parse_term() {
        Scalar acc = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                acc *= parse_factor();
            } else if (eat('/')) {
                acc /= parse_factor();
            } else if (var_ahead()) { // implicit product like "3q^2"
                acc *= parse_factor();
            } else
                break;
        }
        return acc;
    }

    Scalar parse_expr() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Scalar acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }
};

} // namespace

Scalar Scalar::from_string(const std::string& s, const std::string& var) {
    ScalarParser p{s, var};
    Scalar r = p.parse_expr();
    if (!p.at_end()) throw parse_error("trailing characters in scalar: '" + s.substr(p.pos) + "'");
    return r;
}

Scalar q_int(int n) { return q_int_base(n, Scalar::q()); }

Scalar q_int_base(int n, const Scalar& qi) {
    if (n < 0) throw domain_error("q_int: negative argument");
    Scalar acc(0);
    // [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)
    for (int e = n - 1; e >= 1 - n; e -= 2) acc += qi.pow(e);
    return acc;
}

Scalar q_factorial(int n) {
    Scalar acc(1);
    for (int i = 2; i <= n; ++i) acc *= q_int(i);
    return acc;
}

Scalar q_binomial(int n, int k) { return q_binomial_base(n, k, Scalar::q()); }

Scalar q_binomial_base(int n, int k, const Scalar& qi) {
    if (k < 0 || n < 0 || k > n) throw domain_error("q_binomial: requires 0 <= k <= n");
    Scalar num(1), den(1);
    for (int i = 0; i < k; ++i) {
        num *= q_int_base(n - i, qi);
        den *= q_int_base(i + 1, qi);
    }
    return num / den;
}

} // namespace hsa
