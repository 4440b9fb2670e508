#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "frieze/bigint.hpp"

namespace frieze {

// Exact rational number. Invariants: denominator > 0, gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInteger n) : num_(std::move(n)), den_(1) {}
    Rational(BigInteger n, BigInteger d);

    static Rational from_string(std::string_view s);

    const BigInteger& num() const { return num_; }
    const BigInteger& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const;
    static Rational pow(const Rational& base, long long exp);

    int compare(const Rational& o) const;
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

    // "p" when integral, "p/q" otherwise.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    BigInteger num_;
    BigInteger den_;

    void reduce();
};

}  // namespace frieze
