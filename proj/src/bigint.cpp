#include "frieze/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "frieze/errors.hpp"

namespace frieze {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInteger::BigInteger(long long v) {
    neg_ = v < 0;
    // Avoid UB on LLONG_MIN negation.
    std::uint64_t mag = neg_ ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

void BigInteger::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

std::uint64_t BigInteger::magnitude_u64() const {
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

bool BigInteger::fits_i64() const {
    if (limbs_.size() > 2) return false;
    std::uint64_t m = magnitude_u64();
    return neg_ ? m <= (1ull << 63) : m < (1ull << 63);
}

long long BigInteger::as_i64() const {
    std::uint64_t m = magnitude_u64();
    return neg_ ? -static_cast<long long>(m) : static_cast<long long>(m);
}

BigInteger BigInteger::from_string(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size()) throw ParseError("BigInteger: empty numeral");
    BigInteger r;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("BigInteger: bad digit in '" + std::string(s) + "'");
        r *= BigInteger(10);
        r += BigInteger(s[i] - '0');
    }
    r.neg_ = neg && !r.limbs_.empty();
    return r;
}

int BigInteger::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInteger::add_mag(const std::vector<std::uint32_t>& a,
                                               const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r;
    r.reserve(big.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::vector<std::uint32_t> BigInteger::sub_mag(const std::vector<std::uint32_t>& a,
                                               const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(d));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInteger::mul_mag(const std::vector<std::uint32_t>& a,
                                               const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Shift-subtract long division on magnitudes. Values in this codebase are
// small (a handful of limbs), so the simple quadratic scheme is plenty.
void BigInteger::divmod_mag(const std::vector<std::uint32_t>& a,
                            const std::vector<std::uint32_t>& b, std::vector<std::uint32_t>& q,
                            std::vector<std::uint32_t>& r) {
    q.assign(a.size(), 0);
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        q.clear();
        return;
    }
    // Fast path: single-limb divisor.
    if (b.size() == 1) {
        std::uint64_t d = b[0];
        std::uint64_t rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }
    std::vector<std::uint32_t> rem;
    int total_bits = static_cast<int>(a.size()) * 32;
    for (int bit = total_bits - 1; bit >= 0; --bit) {
        // rem = rem*2 + bit(a, bit)
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < rem.size(); ++i) {
            std::uint32_t nxt = rem[i] >> 31;
            rem[i] = (rem[i] << 1) | carry;
            carry = nxt;
        }
        if (carry) rem.push_back(carry);
        if ((a[bit / 32] >> (bit % 32)) & 1u) {
            if (rem.empty())
                rem.push_back(1);
            else
                rem[0] |= 1u;
        }
        if (cmp_mag(rem, b) >= 0) {
            rem = sub_mag(rem, b);
            q[bit / 32] |= (1u << (bit % 32));
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r = std::move(rem);
}

BigInteger BigInteger::operator-() const {
    BigInteger r = *this;
    if (!r.limbs_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInteger BigInteger::abs() const {
    BigInteger r = *this;
    r.neg_ = false;
    return r;
}

BigInteger& BigInteger::operator+=(const BigInteger& o) {
    if (neg_ == o.neg_) {
        limbs_ = add_mag(limbs_, o.limbs_);
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) {
            limbs_.clear();
            neg_ = false;
        } else if (c > 0) {
            limbs_ = sub_mag(limbs_, o.limbs_);
        } else {
            limbs_ = sub_mag(o.limbs_, limbs_);
            neg_ = o.neg_;
        }
    }
    trim();
    return *this;
}

BigInteger& BigInteger::operator-=(const BigInteger& o) { return *this += -o; }

BigInteger& BigInteger::operator*=(const BigInteger& o) {
    bool n = neg_ != o.neg_;
    limbs_ = mul_mag(limbs_, o.limbs_);
    neg_ = n && !limbs_.empty();
    return *this;
}

BigInteger operator*(const BigInteger& a, const BigInteger& b) {
    BigInteger r = a;
    r *= b;
    return r;
}

void BigInteger::divmod(const BigInteger& a, const BigInteger& b, BigInteger& q, BigInteger& r) {
    if (b.is_zero()) throw DivisionByZeroError("BigInteger: division by zero");
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    q.neg_ = (a.neg_ != b.neg_) && !q.limbs_.empty();
    r.limbs_ = std::move(rm);
    r.neg_ = a.neg_ && !r.limbs_.empty();
}

BigInteger operator/(const BigInteger& a, const BigInteger& b) {
    BigInteger q, r;
    BigInteger::divmod(a, b, q, r);
    return q;
}

BigInteger operator%(const BigInteger& a, const BigInteger& b) {
    BigInteger q, r;
    BigInteger::divmod(a, b, q, r);
    return r;
}

BigInteger BigInteger::div_exact(const BigInteger& a, const BigInteger& b) {
    BigInteger q, r;
    divmod(a, b, q, r);
    if (!r.is_zero())
        throw InexactDivisionError("BigInteger: inexact division " + a.to_string() + " / " +
                                   b.to_string());
    return q;
}

BigInteger BigInteger::gcd(BigInteger a, BigInteger b) {
    a.neg_ = false;
    b.neg_ = false;
    // u64 fast path covers nearly all values seen in practice.
    if (a.fits_u64() && b.fits_u64()) {
        std::uint64_t x = a.magnitude_u64(), y = b.magnitude_u64();
        while (y) {
            std::uint64_t t = x % y;
            x = y;
            y = t;
        }
        BigInteger r;
        while (x) {
            r.limbs_.push_back(static_cast<std::uint32_t>(x & 0xffffffffu));
            x >>= 32;
        }
        return r;
    }
    while (!b.is_zero()) {
        BigInteger q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInteger BigInteger::pow(const BigInteger& base, unsigned exp) {
    BigInteger r(1), acc = base;
    while (exp) {
        if (exp & 1u) r *= acc;
        exp >>= 1;
        if (exp) acc *= acc;
    }
    return r;
}

int BigInteger::compare(const BigInteger& o) const {
    if (neg_ != o.neg_) return neg_ ? -1 : 1;
    int c = cmp_mag(limbs_, o.limbs_);
    return neg_ ? -c : c;
}

std::string BigInteger::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> mag = limbs_;
    std::string digits;
    const std::vector<std::uint32_t> ten{10};
    // Repeated division by 1e9 would be faster; digit-at-a-time is fine here.
    std::vector<std::uint32_t> billion{1000000000u};
    while (!mag.empty()) {
        std::vector<std::uint32_t> q, r;
        divmod_mag(mag, billion, q, r);
        std::uint64_t chunk = r.empty() ? 0 : r[0];
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        mag = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::ostream& operator<<(std::ostream& os, const BigInteger& v) { return os << v.to_string(); }

std::size_t BigInteger::hash() const {
    std::size_t h = neg_ ? 0x9e3779b97f4a7c15ull : 0;
    for (std::uint32_t limb : limbs_) h = h * 1000003u + limb;
    return h;
}

}  // namespace frieze
