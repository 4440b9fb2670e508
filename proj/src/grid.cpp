#include "frieze/grid.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace frieze {

template class BasicFriezeGrid<BigInteger>;
template class BasicFriezeGrid<LaurentPoly>;

namespace {

template <class T>
bool ring_is_zero(const T& v) {
    return v.is_zero();
}
template <class T>
bool ring_is_one(const T& v) {
    return v.is_one();
}

template <class T>
ValidationReport validate_impl(const BasicFriezeGrid<T>& f) {
    ValidationReport rep;
    const int k = f.order(), w = f.width(), n = f.period();
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        if (rep.failures.size() < 32) rep.failures.push_back(msg);
    };

    for (int i = 1; i <= n; ++i) {
        for (int d = f.dmin(); d <= f.dmax(); ++d) {
            const T& v = f.at(i, i + d);
            bool zero_row = (d < 0) || (d >= w + 2);
            bool ones_row = (d == 0) || (d == w + 1);
            if (zero_row && !ring_is_zero(v))
                fail(rep.boundary_ok, "nonzero entry in zero row d=" + std::to_string(d));
            if (ones_row && !ring_is_one(v))
                fail(rep.boundary_ok, "non-one entry in ones row d=" + std::to_string(d));
            if (!zero_row && !ones_row) {
                if (ring_is_zero(v))
                    fail(rep.boundary_ok, "zero interior entry at (" + std::to_string(i) + "," +
                                              std::to_string(i + d) + ")");
                if constexpr (std::is_same_v<T, BigInteger>) {
                    if (v.sign() <= 0)
                        fail(rep.positivity_ok, "non-positive interior entry at (" +
                                                    std::to_string(i) + "," +
                                                    std::to_string(i + d) + ")");
                }
            }
        }
    }

    // One period of windows suffices by horizontal periodicity.
    for (int i = 1; i <= n; ++i) {
        for (int D = 0; D <= w + 1; ++D) {
            T det = diamond_det(f, i, i + D, k);
            if (!ring_is_one(det))
                fail(rep.frieze_ok, "k-diamond at (" + std::to_string(i) + "," +
                                        std::to_string(i + D) + ") has determinant != 1");
        }
        for (int D = 1; D <= w; ++D) {
            T det = diamond_det(f, i, i + D, k + 1);
            if (!ring_is_zero(det))
                fail(rep.tame_ok, "(k+1)-diamond at (" + std::to_string(i) + "," +
                                      std::to_string(i + D) + ") has determinant != 0");
        }
    }
    return rep;
}

}  // namespace

ValidationReport validate(const FriezeGrid& f) { return validate_impl(f); }
ValidationReport validate(const LaurentFriezeGrid& f) { return validate_impl(f); }

FriezeGrid frieze_from_quiddity(const std::vector<long long>& quiddity) {
    const int n = static_cast<int>(quiddity.size());
    if (n < 3) throw Error("frieze_from_quiddity: need at least 3 entries");
    const int w = n - 3;
    auto window = [&](long long start, int len) {  // a_{start}, ..., a_{start+len-1}
        std::vector<BigInteger> ys;
        ys.reserve(len);
        for (int t = 0; t < len; ++t) {
            long long idx = (start - 1 + t) % n;
            if (idx < 0) idx += n;
            ys.emplace_back(quiddity[idx]);
        }
        return ys;
    };

    // Closure: P_{n-2} over every window must be 1 and P_{n-1} must vanish.
    for (int i = 1; i <= n; ++i) {
        BigInteger pn2 = continuant(window(i + 1, n - 2));
        if (!pn2.is_one())
            throw NotClosingError("quiddity does not close: P_" + std::to_string(n - 2) +
                                      " at index " + std::to_string(i) + " is " + pn2.to_string(),
                                  i);
        BigInteger pn1 = continuant(window(i + 1, n - 1));
        if (!pn1.is_zero())
            throw NotClosingError("quiddity does not close: P_" + std::to_string(n - 1) +
                                      " at index " + std::to_string(i) + " is " + pn1.to_string(),
                                  i);
    }

    FriezeGrid f(2, w);
    for (int i = 1; i <= n; ++i) {
        for (int d = 1; d <= w; ++d) {
            BigInteger v = continuant(window(i + 1, d));
            if (v.sign() <= 0)
                throw NonPositiveEntryError("frieze entry t(" + std::to_string(i) + "," +
                                            std::to_string(i + d) + ") = " + v.to_string());
            f.entry(i, i + d) = std::move(v);
        }
    }
    return f;
}

FriezeGrid frieze_from_quiddity_by_propagation(const std::vector<long long>& quiddity) {
    const int n = static_cast<int>(quiddity.size());
    if (n < 3) throw Error("frieze_from_quiddity_by_propagation: need at least 3 entries");
    const int w = n - 3;
    FriezeGrid f(2, w);
    if (w == 0) {
        for (long long a : quiddity)
            if (a != 1) throw NotClosingError("triangle quiddity must be all ones", 1);
        return f;
    }
    for (int i = 1; i <= n; ++i) f.entry(i, i + 1) = BigInteger(quiddity[i % n]);

    // t(i, j+1) = (t(i,j) t(i+1,j+1) - 1) / t(i+1,j), filling row by row.
    auto solve = [&](long long i, long long j) {
        BigInteger num = f.at(i, j) * f.at(i + 1, j + 1) - BigInteger(1);
        const BigInteger& den = f.at(i + 1, j);
        if (den.is_zero()) throw NotClosingError("propagation hit a zero divisor", i);
        BigInteger q, r;
        BigInteger::divmod(num, den, q, r);
        if (!r.is_zero()) throw NotClosingError("propagation produced a non-integer entry", i);
        return q;
    };
    for (int d = 2; d <= w; ++d)
        for (int i = 1; i <= n; ++i) f.entry(i, i + d) = solve(i, i + d - 1);
    // Closing rows must come out as ones then zeros.
    for (int d = w + 1; d <= w + 2; ++d) {
        for (int i = 1; i <= n; ++i) {
            BigInteger v = solve(i, i + d - 1);
            const BigInteger& expect = f.at(i, i + d);
            if (v != expect)
                throw NotClosingError("propagated closing row disagrees at index " +
                                          std::to_string(i),
                                      i);
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int d = 1; d <= w; ++d)
            if (f.at(i, i + d).sign() <= 0)
                throw NonPositiveEntryError("non-positive propagated entry");
    return f;
}

template <class T>
bool check_coefficient_frieze(const BasicFriezeGrid<T>& f,
                              const BasicCoefficientSequence<T>& coeffs) {
    if (f.order() != 2) throw ShapeMismatchError("check_coefficient_frieze: k must be 2");
    const int n = f.period(), w = f.width();
    if (static_cast<int>(coeffs.values.size()) != n)
        throw ShapeMismatchError("check_coefficient_frieze: coefficient sequence length");
    for (int i = 1; i <= n; ++i)
        if (coeffs.c(i).is_zero()) return false;

    for (int i = 1; i <= n; ++i) {
        if (!f.at(i, i - 1).is_zero()) return false;       // m_{i,i} = 0
        if (!(f.at(i, i) == coeffs.c(i))) return false;    // m_{i,i+1} = c_{i,i+1}
        if (!(f.at(i, i + w + 1) == coeffs.c(i - 1))) return false;  // m_{i,i+w+2} = c_{i-1,i}
        if (!f.at(i, i + w + 2).is_zero()) return false;   // m_{i,i+w+3} = 0
        for (int d = 1; d <= w; ++d)
            if (f.at(i, i + d).is_zero()) return false;
    }
    // Twisted diamond rule.
    for (int i = 1; i <= n; ++i) {
        for (int D = 0; D <= w + 1; ++D) {
            long long j = i + D;
            T lhs = f.at(i, j) * f.at(i + 1, j + 1) - f.at(i + 1, j) * f.at(i, j + 1);
            T rhs = coeffs.c(i) * coeffs.c(j + 1);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

template bool check_coefficient_frieze<BigInteger>(const FriezeGrid&, const CoefficientSequence&);
template bool check_coefficient_frieze<LaurentPoly>(const LaurentFriezeGrid&,
                                                    const LaurentCoefficientSequence&);

template <class T>
bool glide_check_any(const BasicFriezeGrid<T>& f) {
    if (f.order() != 2) throw OrderMismatchError("glide_check: k must be 2");
    const int n = f.period();
    for (int i = 1; i <= n; ++i)
        for (int d = f.dmin(); d <= f.dmax(); ++d)
            if (!(f.at(i, i + d) == f.at(i + d + 1, i + n - 1))) return false;
    return true;
}

template bool glide_check_any<BigInteger>(const FriezeGrid&);
template bool glide_check_any<LaurentPoly>(const LaurentFriezeGrid&);

bool glide_check(const FriezeGrid& f) { return glide_check_any(f); }

std::string to_text(const FriezeGrid& f) {
    std::size_t cell = 1;
    for (int d = f.dmin(); d <= f.dmax(); ++d)
        for (int i = 1; i <= f.period(); ++i)
            cell = std::max(cell, f.at(i, i + d).to_string().size());
    cell += 2;
    std::ostringstream os;
    for (int d = f.dmin(); d <= f.dmax(); ++d) {
        std::string line(static_cast<std::size_t>(d - f.dmin()) * cell / 2, ' ');
        for (int i = 1; i <= f.period(); ++i) {
            std::string e = f.at(i, i + d).to_string();
            line += e;
            line += std::string(cell - e.size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

std::string to_json(const FriezeGrid& f) {
    nlohmann::json j;
    j["k"] = f.order();
    j["w"] = f.width();
    j["n"] = f.period();
    nlohmann::json rows = nlohmann::json::array();
    for (int d = f.dmin(); d <= f.dmax(); ++d) {
        nlohmann::json row = nlohmann::json::array();
        for (int i = 1; i <= f.period(); ++i) {
            const BigInteger& v = f.at(i, i + d);
            if (v.fits_i64())
                row.push_back(v.as_i64());
            else
                row.push_back(v.to_string());
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

FriezeGrid frieze_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int k = j.at("k").get<int>();
    int w = j.at("w").get<int>();
    FriezeGrid f(k, w);
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != w + 2 * k)
        throw ParseError("frieze_from_json: wrong number of rows");
    for (int d = f.dmin(); d <= f.dmax(); ++d) {
        const auto& row = rows.at(d - f.dmin());
        for (int i = 1; i <= f.period(); ++i) {
            const auto& cell = row.at(i - 1);
            f.entry(i, i + d) = cell.is_string()
                                    ? BigInteger::from_string(cell.get<std::string>())
                                    : BigInteger(cell.get<long long>());
        }
    }
    return f;
}

std::string canonical_key(const FriezeGrid& f) {
    std::ostringstream os;
    os << f.order() << "/" << f.width() << ":";
    for (int d = 1; d <= f.width(); ++d)
        for (int i = 1; i <= f.period(); ++i) os << f.at(i, i + d).to_string() << ",";
    return os.str();
}

}  // namespace frieze
