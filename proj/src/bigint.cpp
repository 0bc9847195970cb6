#include "hsa/bigint.hpp"

#include "hsa/errors.hpp"

#include <algorithm>

namespace hsa {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    neg_ = v < 0;
    unsigned long long m = neg_ ? -(unsigned long long)v : (unsigned long long)v;
    while (m) {
        mag_.push_back((uint32_t)(m & 0xffffffffu));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = (uint32_t)s;
        carry = s >> 32;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = (int64_t)a[i] - borrow - (i < b.size() ? (int64_t)b[i] : 0);
        if (d < 0) {
            d += (int64_t)1 << 32;
            borrow = 1;
        } else
            borrow = 0;
        r[i] = (uint32_t)d;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.neg_ = neg_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = sub_mag(mag_, o.mag_);
            r.neg_ = neg_;
        } else {
            r.mag_ = sub_mag(o.mag_, mag_);
            r.neg_ = o.neg_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            uint64_t cur = (uint64_t)mag_[i] * o.mag_[j] + r.mag_[i + j] + carry;
            r.mag_[i + j] = (uint32_t)cur;
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry) {
            uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = (uint32_t)cur;
            carry = cur >> 32;
            ++k;
        }
    }
    r.neg_ = neg_ != o.neg_;
    r.trim();
    return r;
}

void BigInt::divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw division_by_zero();
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) {
        q = BigInt();
        r = a;
        return;
    }
    if (b.mag_.size() == 1) {
        uint64_t d = b.mag_[0];
        std::vector<uint32_t> qm(a.mag_.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.mag_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a.mag_[i];
            qm[i] = (uint32_t)(cur / d);
            rem = cur % d;
        }
        q.mag_ = std::move(qm);
        q.neg_ = a.neg_ != b.neg_;
        q.trim();
        r.mag_.clear();
        if (rem) r.mag_.push_back((uint32_t)rem);
        r.neg_ = a.neg_ && rem != 0;
        r.trim();
        return;
    }
    // Knuth algorithm D with normalization.
    int shift = 0;
    uint32_t top = b.mag_.back();
    while (!(top & 0x80000000u)) {
        top <<= 1;
        ++shift;
    }
    auto shl = [&](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] |= v[i] << shift;
            if (shift) out[i + 1] = v[i] >> (32 - shift);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<uint32_t> u = shl(a.mag_), v = shl(b.mag_);
    size_t n = v.size(), m = u.size() - n;
    u.push_back(0);
    std::vector<uint32_t> qm(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = ((uint64_t)u[j + n] << 32) | u[j + n - 1];
        uint64_t qhat = num / v[n - 1];
        uint64_t rhat = num % v[n - 1];
        while (qhat >= ((uint64_t)1 << 32) ||
               (n >= 2 && qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2]))) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= ((uint64_t)1 << 32)) break;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = (int64_t)u[i + j] - (int64_t)(uint32_t)p - borrow;
            borrow = t < 0;
            u[i + j] = (uint32_t)t;
        }
        int64_t t = (int64_t)u[j + n] - (int64_t)carry - borrow;
        u[j + n] = (uint32_t)t;
        if (t < 0) { // add back
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = (uint64_t)u[i + j] + v[i] + c2;
                u[i + j] = (uint32_t)s;
                c2 = s >> 32;
            }
            u[j + n] = (uint32_t)((uint64_t)u[j + n] + c2);
        }
        qm[j] = (uint32_t)qhat;
    }
    q.mag_ = std::move(qm);
    q.neg_ = a.neg_ != b.neg_;
    q.trim();
    // remainder = u >> shift, first n limbs
    u.resize(n);
    std::vector<uint32_t> rm(n, 0);
    for (size_t i = 0; i < n; ++i) {
        rm[i] = u[i] >> shift;
        if (shift && i + 1 < n) rm[i] |= u[i + 1] << (32 - shift);
    }
    r.mag_ = std::move(rm);
    r.neg_ = a.neg_;
    r.trim();
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divrem(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divrem(*this, o, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divrem(a, b, q, r);
        a = b;
        b = r;
        a.neg_ = false;
        b.neg_ = false;
    }
    return a;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

BigInt BigInt::pow(unsigned e) const {
    BigInt base = *this, r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_;
    int c = cmp_mag(mag_, o.mag_);
    return neg_ ? c > 0 : c < 0;
}

bool BigInt::fits_longlong() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    uint64_t v = ((uint64_t)mag_[1] << 32) | mag_[0];
    return neg_ ? v <= ((uint64_t)1 << 63) : v < ((uint64_t)1 << 63);
}

long long BigInt::to_longlong() const {
    uint64_t v = 0;
    if (mag_.size() >= 1) v |= mag_[0];
    if (mag_.size() >= 2) v |= (uint64_t)mag_[1] << 32;
    return neg_ ? -(long long)v : (long long)v;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    std::vector<uint32_t> m = mag_;
    while (!m.empty()) {
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = (uint32_t)(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back((char)('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    if (i == s.size()) throw parse_error("empty integer literal");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw parse_error("bad integer literal: " + s);
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (neg) r = -r;
    return r;
}

} // namespace hsa
