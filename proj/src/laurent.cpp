#include "frieze/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "frieze/errors.hpp"

namespace frieze {

Monomial::Monomial(std::vector<std::pair<int, int>> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    std::vector<std::pair<int, int>> merged;
    for (auto& [v, e] : factors_) {
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.push_back({v, e});
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& f) { return f.second == 0; }),
                 merged.end());
    factors_ = std::move(merged);
}

Monomial Monomial::variable(int var, int exp) {
    Monomial m;
    if (exp != 0) m.factors_.push_back({var, exp});
    return m;
}

int Monomial::exponent(int var) const {
    for (const auto& [v, e] : factors_)
        if (v == var) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < factors_.size() || j < o.factors_.size()) {
        if (j == o.factors_.size() ||
            (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
            r.factors_.push_back(factors_[i++]);
        } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
            r.factors_.push_back(o.factors_[j++]);
        } else {
            int e = factors_[i].second + o.factors_[j].second;
            if (e != 0) r.factors_.push_back({factors_[i].first, e});
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& [v, e] : r.factors_) e = -e;
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.inverse(); }

Monomial Monomial::pow(int e) const {
    Monomial r;
    if (e == 0) return r;
    r = *this;
    for (auto& [v, exp] : r.factors_) exp *= e;
    return r;
}

bool Monomial::divides_in_polynomial_ring(const Monomial& o) const {
    for (const auto& [v, e] : factors_)
        if (e > o.exponent(v)) return false;
    return true;
}

// Graded order, ties broken at the first differing variable: the larger
// exponent there sorts first. Gives 1 < x1 < x2 < x1^2 < x1*x2 < ...
int Monomial::compare(const Monomial& o) const {
    long long da = 0, db = 0;
    for (const auto& [v, e] : factors_) da += e;
    for (const auto& [v, e] : o.factors_) db += e;
    if (da != db) return da < db ? -1 : 1;
    std::size_t i = 0, j = 0;
    while (i < factors_.size() || j < o.factors_.size()) {
        int va = i < factors_.size() ? factors_[i].first : INT32_MAX;
        int vb = j < o.factors_.size() ? o.factors_[j].first : INT32_MAX;
        int v = std::min(va, vb);
        int ea = va == v ? factors_[i].second : 0;
        int eb = vb == v ? o.factors_[j].second : 0;
        if (ea != eb) return ea > eb ? -1 : 1;
        if (va == v) ++i;
        if (vb == v) ++j;
    }
    return 0;
}

std::string default_variable_name(int var) { return "x" + std::to_string(var + 1); }

LaurentPoly LaurentPoly::constant(const Rational& c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial(), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int var, int exp) {
    LaurentPoly p;
    p.terms_.emplace(Monomial::variable(var, exp), Rational(1));
    return p;
}

LaurentPoly LaurentPoly::term(const Rational& c, const Monomial& m) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second.is_one();
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::vector<int> LaurentPoly::variables() const {
    std::vector<int> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

std::map<int, int> LaurentPoly::min_exponents() const {
    std::map<int, int> mins;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            for (const auto& [v, e] : m.factors()) mins[v] = e;
        }
        // Variables absent from a term have exponent 0 there.
        for (auto& [v, lo] : mins) lo = std::min(lo, m.exponent(v));
        for (const auto& [v, e] : m.factors()) {
            auto it = mins.find(v);
            if (it == mins.end()) mins[v] = std::min(e, 0);
        }
        first = false;
    }
    return mins;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
    LaurentPoly r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r = constant(Rational(1));
    LaurentPoly acc = *this;
    while (e) {
        if (e & 1u) r = r * acc;
        e >>= 1;
        if (e) acc = acc * acc;
    }
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        int c = it->first.compare(jt->first);
        if (c != 0) return c < 0;
        int cc = it->second.compare(jt->second);
        if (cc != 0) return cc < 0;
    }
    return it == terms_.end() && jt != o.terms_.end();
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r += b;
    return r;
}

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("poly_div_exact: division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();

    // Shift both operands into the polynomial cone. Exactness of a Laurent
    // quotient is equivalent to exactness there, with quotient re-shifted by
    // the difference of the minimal exponents.
    auto shift_of = [](const std::map<int, int>& mins) {
        std::vector<std::pair<int, int>> f;
        for (const auto& [v, lo] : mins)
            if (lo != 0) f.push_back({v, -lo});
        return Monomial(std::move(f));
    };
    Monomial sa = shift_of(a.min_exponents());
    Monomial sb = shift_of(b.min_exponents());
    LaurentPoly A = a.shifted(sa);
    LaurentPoly B = b.shifted(sb);

    const auto& ltB = *B.terms().rbegin();
    LaurentPoly Q;
    while (!A.is_zero()) {
        const auto& ltA = *A.terms().rbegin();
        Monomial qm = ltA.first / ltB.first;
        bool divisible = true;
        for (const auto& [v, e] : qm.factors())
            if (e < 0) divisible = false;
        if (!divisible) throw InexactDivisionError("poly_div_exact: inexact division");
        Rational qc = ltA.second / ltB.second;
        LaurentPoly t = LaurentPoly::term(qc, qm);
        Q += t;
        A -= t * B;
    }
    return Q.shifted(sb / sa);
}

Rational poly_eval(const LaurentPoly& p, const std::map<int, Rational>& assignment) {
    return p.eval(assignment);
}

Rational LaurentPoly::eval(const std::map<int, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw UnassignedVariableError("poly_eval: variable " + default_variable_name(v) +
                                              " unassigned");
            if (it->second.is_zero() && e < 0)
                throw ZeroAssignedToInvertedVariableError(
                    "poly_eval: zero assigned to inverted variable " + default_variable_name(v));
            t *= Rational::pow(it->second, e);
        }
        total += t;
    }
    return total;
}

namespace {

std::string term_string(const Monomial& m, const Rational& c, const VariableNames& names,
                        bool plain_sign) {
    Rational cc = plain_sign ? c : (c.sign() < 0 ? -c : c);
    std::string s;
    if (m.is_unit()) return cc.to_string();
    if (cc.is_one()) {
        s = "";
    } else if ((-cc).is_one()) {
        s = "-";
    } else {
        s = cc.to_string() + "*";
    }
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (!first) s += "*";
        s += names(v);
        if (e != 1) s += "^" + std::to_string(e);
        first = false;
    }
    return s;
}

}  // namespace

std::string LaurentPoly::to_string(const VariableNames& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            s += term_string(m, c, names, /*plain_sign=*/true);
        } else {
            s += c.sign() < 0 ? " - " : " + ";
            s += term_string(m, c, names, /*plain_sign=*/false);
        }
        first = false;
    }
    return s;
}

std::string LaurentPoly::to_fraction_string(const VariableNames& names) const {
    if (terms_.empty()) return "0";
    std::map<int, int> mins = min_exponents();
    std::vector<std::pair<int, int>> denom;
    for (const auto& [v, lo] : mins)
        if (lo < 0) denom.push_back({v, -lo});
    LaurentPoly num = shifted(Monomial(std::vector<std::pair<int, int>>(denom)));

    std::string ns;
    bool first = true;
    for (const auto& [m, c] : num.terms_) {
        if (first) {
            ns += term_string(m, c, names, true);
        } else {
            ns += c.sign() < 0 ? "-" : "+";
            ns += term_string(m, c, names, false);
        }
        first = false;
    }
    if (denom.empty()) return ns;
    if (num.terms_.size() > 1) ns = "(" + ns + ")";
    std::string ds;
    for (std::size_t i = 0; i < denom.size(); ++i) {
        if (i) ds += "*";
        ds += names(denom[i].first);
        if (denom[i].second != 1) ds += "^" + std::to_string(denom[i].second);
    }
    if (denom.size() > 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("LaurentPoly: expected integer at position " + std::to_string(start));
        long long v = 0;
        bool neg = s[start] == '-';
        std::size_t d = s[start] == '-' || s[start] == '+' ? start + 1 : start;
        for (; d < s.size() && std::isdigit(static_cast<unsigned char>(s[d])); ++d)
            v = v * 10 + (s[d] - '0');
        pos = d;
        return neg ? -v : v;
    }

    // number | var[^exp], where var is x<k>.
    LaurentPoly parse_factor() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("LaurentPoly: unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            BigInteger num = BigInteger::from_string(s.substr(start, pos - start));
            if (eat('/')) {
                std::size_t dstart = pos;
                skip_ws();
                dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == dstart) throw ParseError("LaurentPoly: expected denominator");
                BigInteger den = BigInteger::from_string(s.substr(dstart, pos - dstart));
                return LaurentPoly::constant(Rational(num, den));
            }
            return LaurentPoly::constant(Rational(num));
        }
        if (s[pos] == 'x') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) throw ParseError("LaurentPoly: expected variable index after 'x'");
            int var = 0;
            for (std::size_t d = start; d < pos; ++d) var = var * 10 + (s[d] - '0');
            int exp = 1;
            if (eat('^')) exp = static_cast<int>(parse_int());
            return LaurentPoly::variable(var - 1, exp);
        }
        throw ParseError(std::string("LaurentPoly: unexpected character '") + s[pos] + "'");
    }

    LaurentPoly parse_term() {
        LaurentPoly p = parse_factor();
        while (eat('*')) p = p * parse_factor();
        return p;
    }

    LaurentPoly parse_expr() {
        LaurentPoly total;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPoly t = parse_term();
        total += neg ? -t : t;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+')) {
                total += parse_term();
            } else if (eat('-')) {
                total -= parse_term();
            } else {
                throw ParseError("LaurentPoly: expected '+' or '-' at position " +
                                 std::to_string(pos));
            }
        }
        return total;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    Parser p{text};
    p.skip_ws();
    if (p.pos >= text.size()) throw ParseError("LaurentPoly: empty input");
    if (text == "0") return LaurentPoly();
    return p.parse_expr();
}

}  // namespace frieze
