#include "hsa/laurent.hpp"

#include "hsa/errors.hpp"

#include <algorithm>

namespace hsa {

void Laurent::trim() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    size_t tail = coeffs_.size();
    while (coeffs_[tail - 1].is_zero()) --tail;
    if (lead > 0 || tail < coeffs_.size()) {
        coeffs_ = std::vector<BigInt>(coeffs_.begin() + lead, coeffs_.begin() + tail);
        lo_ += (int)lead;
    }
}

Laurent Laurent::constant(BigInt c) {
    Laurent r;
    if (!c.is_zero()) {
        r.lo_ = 0;
        r.coeffs_.push_back(std::move(c));
    }
    return r;
}

Laurent Laurent::monomial(BigInt c, int exp) {
    Laurent r = constant(std::move(c));
    r.lo_ = r.coeffs_.empty() ? 0 : exp;
    return r;
}

bool Laurent::is_one() const {
    return lo_ == 0 && coeffs_.size() == 1 && coeffs_[0].is_one();
}

BigInt Laurent::coeff(int exp) const {
    if (is_zero() || exp < lo_ || exp > high_exp()) return BigInt(0);
    return coeffs_[exp - lo_];
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int lo = std::min(lo_, o.lo_);
    int hi = std::max(high_exp(), o.high_exp());
    Laurent r;
    r.lo_ = lo;
    r.coeffs_.assign(hi - lo + 1, BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[lo_ - lo + i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[o.lo_ - lo + i] += o.coeffs_[i];
    r.trim();
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    if (is_zero() || o.is_zero()) return Laurent();
    Laurent r;
    r.lo_ = lo_ + o.lo_;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
}

bool Laurent::operator<(const Laurent& o) const {
    if (lo_ != o.lo_) return lo_ < o.lo_;
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
    return false;
}

BigInt Laurent::content() const {
    BigInt g(0);
    for (const auto& c : coeffs_) {
        g = BigInt::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Laurent Laurent::divided_by_content(const BigInt& c) const {
    Laurent r = *this;
    for (auto& x : r.coeffs_) x = x / c;
    return r;
}

Laurent Laurent::div_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw division_by_zero();
    if (a.is_zero()) return Laurent();
    Laurent r;
    r.lo_ = a.lo_ - b.lo_;
    std::vector<BigInt> rem = a.coeffs_;
    int db = (int)b.coeffs_.size() - 1;
    int dq = (int)rem.size() - 1 - db;
    if (dq < 0) throw domain_error("non-exact polynomial division");
    std::vector<BigInt> q(dq + 1, BigInt(0));
    for (int k = dq; k >= 0; --k) {
        BigInt lead = rem[k + db];
        if (lead.is_zero()) continue;
        BigInt qq, rr;
        BigInt::divrem(lead, b.coeffs_.back(), qq, rr);
        if (!rr.is_zero()) throw domain_error("non-exact polynomial division");
        q[k] = qq;
        for (int i = 0; i <= db; ++i) rem[k + i] -= qq * b.coeffs_[i];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw domain_error("non-exact polynomial division");
    r.coeffs_ = std::move(q);
    r.trim();
    return r;
}

// primitive PRS gcd on the polynomial parts
Laurent Laurent::gcd(const Laurent& a0, const Laurent& b0) {
    if (a0.is_zero()) return b0.is_zero() ? Laurent() : b0.shifted(-b0.lo_);
    if (b0.is_zero()) return a0.shifted(-a0.lo_);
    auto primitive = [](Laurent p) {
        p = p.shifted(-p.lo_);
        BigInt c = p.content();
        p = p.divided_by_content(p.leading().is_negative() ? -c : c);
        return p;
    };
    Laurent a = primitive(a0), b = primitive(b0);
    if ((int)a.coeffs_.size() < (int)b.coeffs_.size()) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        int da = (int)a.coeffs_.size() - 1, db = (int)b.coeffs_.size() - 1;
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        Laurent rem = a * Laurent::constant(b.leading().pow((unsigned)(da - db + 1)));
        for (int k = da - db; k >= 0; --k) {
            int deg_needed = k + db;
            if (deg_needed >= (int)rem.coeffs_.size() + rem.lo_ || rem.is_zero()) continue;
            BigInt lead = rem.coeff(deg_needed);
            if (lead.is_zero()) continue;
            BigInt factor = lead / b.leading();
            rem = rem - b.shifted(k) * Laurent::constant(factor);
        }
        a = b;
        b = rem.is_zero() ? Laurent() : primitive(rem);
    }
    return primitive(a);
}

Rational Laurent::eval(const Rational& v) const {
    if (is_zero()) return Rational(0);
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + Rational(coeffs_[i]);
    if (lo_ != 0) {
        if (v.is_zero()) {
            if (lo_ > 0) return Rational(0); // acc * 0^lo, acc finite
            throw pole_error("negative power of zero");
        }
        Rational p(1);
        int e = lo_ > 0 ? lo_ : -lo_;
        for (int i = 0; i < e; ++i) p *= v;
        acc = lo_ > 0 ? acc * p : acc / p;
    }
    return acc;
}

Laurent Laurent::derivative() const {
    Laurent r;
    if (is_zero()) return r;
    for (int e = lo_; e <= high_exp(); ++e) {
        if (e == 0) continue;
        r += Laurent::monomial(coeff(e) * BigInt(e), e - 1);
    }
    return r;
}

std::string Laurent::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = high_exp(); e >= lo_; --e) {
        BigInt c = coeff(e);
        if (c.is_zero()) continue;
        if (!out.empty()) {
            out += c.is_negative() ? " - " : " + ";
            if (c.is_negative()) c = -c;
        } else if (c.is_negative()) {
            out += "-";
            c = -c;
        }
        bool unit = c.is_one();
        if (e == 0) {
            out += c.to_string();
        } else {
            if (!unit) out += c.to_string() + "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace hsa
