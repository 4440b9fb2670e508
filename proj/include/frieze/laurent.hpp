#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "frieze/rational.hpp"

namespace frieze {

// Laurent monomial: sparse map variable-index -> nonzero signed exponent,
// kept sorted by variable index with no zero exponents stored.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> factors);
    static Monomial variable(int var, int exp = 1);

    bool is_unit() const { return factors_.empty(); }
    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    int exponent(int var) const;

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int e) const;
    bool divides_in_polynomial_ring(const Monomial& o) const;  // all exps <= o's

    // Group order: lexicographic in the exponent vector (variables ascending,
    // missing exponent = 0); translation invariant, so leading terms are
    // multiplicative. Also the canonical order for printing and map keys.
    int compare(const Monomial& o) const;
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.compare(b) < 0; }

private:
    std::vector<std::pair<int, int>> factors_;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.compare(b) < 0; }
};

// Names a variable index for printing/parsing. Default is x1, x2, ...
using VariableNames = std::function<std::string(int)>;
std::string default_variable_name(int var);

// Exact multivariate Laurent polynomial with rational coefficients.
// Canonical: no zero coefficients stored; equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { *this = constant(Rational(c)); }
    static LaurentPoly constant(const Rational& c);
    static LaurentPoly variable(int var, int exp = 1);
    static LaurentPoly term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational, MonomialLess>& terms() const { return terms_; }

    std::vector<int> variables() const;
    // Per-variable minimum exponent over all terms (variables present only).
    std::map<int, int> min_exponents() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly shifted(const Monomial& m) const;  // multiply by a monomial
    LaurentPoly pow(unsigned e) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    bool operator<(const LaurentPoly& o) const;  // arbitrary total order for containers

    // Deterministic canonical serialization; parse() round-trips it.
    std::string to_string(const VariableNames& names = default_variable_name) const;
    static LaurentPoly parse(std::string_view text);

    // Pretty "numerator / denominator-monomial" rendering, e.g. (1+x2)/x1.
    std::string to_fraction_string(const VariableNames& names = default_variable_name) const;

    // Exact evaluation. Missing variable -> UnassignedVariableError; a zero
    // value on a negatively-occurring variable -> ZeroAssignedToInvertedVariableError.
    Rational eval(const std::map<int, Rational>& assignment) const;

private:
    std::map<Monomial, Rational, MonomialLess> terms_;

    void add_term(const Monomial& m, const Rational& c);
    friend LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b);
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

// Returns q with q*b == a; throws DivisionByZeroError / InexactDivisionError.
LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b);

Rational poly_eval(const LaurentPoly& p, const std::map<int, Rational>& assignment);

}  // namespace frieze
