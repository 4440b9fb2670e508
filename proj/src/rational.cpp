#include "frieze/rational.hpp"

#include <ostream>

#include "frieze/errors.hpp"

namespace frieze {

Rational::Rational(BigInteger n, BigInteger d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DivisionByZeroError("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInteger(1);
        return;
    }
    BigInteger g = BigInteger::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = BigInteger::div_exact(num_, g);
        den_ = BigInteger::div_exact(den_, g);
    }
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInteger::from_string(s));
    return Rational(BigInteger::from_string(s.substr(0, slash)),
                    BigInteger::from_string(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZeroError("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZeroError("Rational: inverse of zero");
    return Rational(den_, num_);
}

Rational Rational::pow(const Rational& base, long long exp) {
    if (exp < 0) return pow(base.inverse(), -exp);
    Rational r(1), acc = base;
    while (exp) {
        if (exp & 1) r *= acc;
        exp >>= 1;
        if (exp) acc *= acc;
    }
    return r;
}

int Rational::compare(const Rational& o) const {
    return (num_ * o.den_).compare(o.num_ * den_);
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace frieze
