#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace frieze {

// Arbitrary-precision signed integer, sign + magnitude.
// Canonical form: no leading zero limbs, and zero is stored with
// positive sign (neg_ == false, limbs_ empty).
class BigInteger {
public:
    BigInteger() = default;
    BigInteger(long long v);
    BigInteger(int v) : BigInteger(static_cast<long long>(v)) {}

    static BigInteger from_string(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_negative() const { return neg_; }
    int sign() const { return limbs_.empty() ? 0 : (neg_ ? -1 : 1); }

    // True iff the magnitude fits in an unsigned 64-bit word.
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t magnitude_u64() const;
    // Value as long long; only valid when it fits.
    bool fits_i64() const;
    long long as_i64() const;

    BigInteger operator-() const;
    BigInteger abs() const;

    BigInteger& operator+=(const BigInteger& o);
    BigInteger& operator-=(const BigInteger& o);
    BigInteger& operator*=(const BigInteger& o);

    friend BigInteger operator+(BigInteger a, const BigInteger& b) { return a += b; }
    friend BigInteger operator-(BigInteger a, const BigInteger& b) { return a -= b; }
    friend BigInteger operator*(const BigInteger& a, const BigInteger& b);

    // Truncated division (quotient rounds toward zero, remainder has
    // the sign of the dividend). Throws DivisionByZeroError.
    static void divmod(const BigInteger& a, const BigInteger& b, BigInteger& q, BigInteger& r);
    friend BigInteger operator/(const BigInteger& a, const BigInteger& b);
    friend BigInteger operator%(const BigInteger& a, const BigInteger& b);

    // Exact division: throws InexactDivisionError when b does not divide a.
    static BigInteger div_exact(const BigInteger& a, const BigInteger& b);

    static BigInteger gcd(BigInteger a, BigInteger b);
    static BigInteger pow(const BigInteger& base, unsigned exp);

    int compare(const BigInteger& o) const;
    friend bool operator==(const BigInteger& a, const BigInteger& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInteger& a, const BigInteger& b) { return !(a == b); }
    friend bool operator<(const BigInteger& a, const BigInteger& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInteger& a, const BigInteger& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInteger& a, const BigInteger& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInteger& a, const BigInteger& b) { return a.compare(b) >= 0; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigInteger& v);

    std::size_t hash() const;

private:
    // Little-endian base-2^32 magnitude.
    bool neg_ = false;
    std::vector<std::uint32_t> limbs_;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

}  // namespace frieze
