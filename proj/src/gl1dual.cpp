#include "hsa/gl1dual.hpp"

#include "hsa/errors.hpp"

namespace hsa {

void Gl1Dual::add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end())
        terms_.emplace(k, c);
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Gl1Dual Gl1Dual::operator+(const Gl1Dual& o) const {
    Gl1Dual r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

Gl1Dual Gl1Dual::operator-(const Gl1Dual& o) const {
    Gl1Dual r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

Gl1Dual Gl1Dual::operator*(const Scalar& s) const {
    Gl1Dual r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
    return r;
}

std::string Gl1Dual::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*u[" + k.first.to_string() + "," +
               std::to_string(k.second) + "]";
    }
    return out;
}

Gl1Dual gd_mul(const Gl1Dual& x, const Gl1Dual& y) {
    Gl1Dual r;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms())
            r.add_term({kx.first + ky.first, kx.second + ky.second}, cx * cy);
    return r;
}

std::map<std::pair<Gl1Dual::Key, Gl1Dual::Key>, Scalar> gd_coproduct(const Gl1Dual& x) {
    std::map<std::pair<Gl1Dual::Key, Gl1Dual::Key>, Scalar> out;
    for (const auto& [k, c] : x.terms()) {
        const auto& [a, r] = k;
        Rational binom(1);
        for (int s = 0; s <= r; ++s) {
            Gl1Dual::Key l{a, s}, rr{a, r - s};
            auto key = std::make_pair(l, rr);
            Scalar v = c * Scalar(binom);
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(key, v);
            else
                it->second += v;
            binom = binom * Rational(r - s) / Rational(s + 1);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Scalar gd_counit(const Gl1Dual& x) {
    Scalar out(0);
    for (const auto& [k, c] : x.terms())
        if (k.second == 0) out += c;
    return out;
}

Gl1Dual gd_antipode(const Gl1Dual& x) {
    Gl1Dual r;
    for (const auto& [k, c] : x.terms())
        r.add_term({-k.first, k.second}, (k.second & 1) ? -c : c);
    return r;
}

Scalar gd_integral(const Gl1Dual& x) {
    Scalar out(0);
    for (const auto& [k, c] : x.terms()) {
        if (k.second != 0)
            throw not_in_k("no integral exists outside the character subalgebra K");
        if (k.first.is_zero()) out += c;
    }
    return out;
}

Rational gd_pair_power(const Rational& a, int r, int s) {
    if (r > s) return Rational(0);
    Rational coeff(1);
    for (int i = 0; i < r; ++i) coeff *= Rational(s - i);
    Rational pw(1);
    for (int i = 0; i < s - r; ++i) pw *= a;
    return coeff * pw;
}

} // namespace hsa
