#include <random>

#include "doctest.h"
#include "frieze/bigint.hpp"
#include "frieze/continuant.hpp"
#include "frieze/errors.hpp"
#include "frieze/laurent.hpp"
#include "frieze/rational.hpp"

using namespace frieze;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }

// Independent oracle: determinant of the tri-diagonal matrix with unit
// off-diagonals, by fraction-free Gaussian elimination over long long.
long long tridiagonal_det(const std::vector<long long>& ys) {
    const int n = static_cast<int>(ys.size());
    if (n == 0) return 1;
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = ys[i];
        if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
    }
    // Bareiss fraction-free elimination with row pivoting.
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Plain Laplace expansion determinant; slower but trivially correct.
long long laplace_det(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<long long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        long long term = m[0][c] * laplace_det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace

TEST_CASE("bigint arithmetic basics") {
    BigInteger a(123456789), b(-987654321);
    CHECK((a + b).to_string() == "-864197532");
    CHECK((a * b).to_string() == "-121932631112635269");
    CHECK(BigInteger::from_string("-121932631112635269") == a * b);
    CHECK((a - a).is_zero());
    CHECK(BigInteger(0).to_string() == "0");
    CHECK((-BigInteger(0)).sign() == 0);

    BigInteger big = BigInteger::pow(BigInteger(10), 40) + BigInteger(7);
    CHECK(big.to_string() == "10000000000000000000000000000000000000007");
    BigInteger q, r;
    BigInteger::divmod(big, BigInteger(1000000007), q, r);
    CHECK(q * BigInteger(1000000007) + r == big);
}

TEST_CASE("bigint divmod truncates toward zero") {
    BigInteger q, r;
    BigInteger::divmod(BigInteger(-7), BigInteger(2), q, r);
    CHECK(q == BigInteger(-3));
    CHECK(r == BigInteger(-1));
    BigInteger::divmod(BigInteger(7), BigInteger(-2), q, r);
    CHECK(q == BigInteger(-3));
    CHECK(r == BigInteger(1));
    CHECK_THROWS_AS(BigInteger::divmod(q, BigInteger(0), q, r), DivisionByZeroError);
}

TEST_CASE("bigint random add/mul/div round trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        long long x = static_cast<long long>(rng() % 2000001) - 1000000;
        long long y = static_cast<long long>(rng() % 2000001) - 1000000;
        BigInteger bx(x), by(y);
        CHECK((bx + by).fits_i64());
        CHECK((bx + by).as_i64() == x + y);
        CHECK((bx * by).as_i64() == x * y);
        if (y != 0) {
            BigInteger q, r;
            BigInteger::divmod(bx, by, q, r);
            CHECK(q.as_i64() == x / y);
            CHECK(r.as_i64() == x % y);
        }
    }
}

TEST_CASE("gcd and rational reduction") {
    CHECK(BigInteger::gcd(BigInteger(48), BigInteger(-18)) == BigInteger(6));
    Rational r(BigInteger(-6), BigInteger(-8));
    CHECK(r.num() == BigInteger(3));
    CHECK(r.den() == BigInteger(4));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK(Rational(5, -10).to_string() == "-1/2");
    CHECK_THROWS_AS(Rational(BigInteger(1), BigInteger(0)), DivisionByZeroError);
}

TEST_CASE("poly_add identities") {
    CHECK(poly_add(P("x1"), LaurentPoly()) == P("x1"));
    CHECK(poly_add(P("x1"), P("-x1")).is_zero());
    CHECK(poly_add(P("1 + x2"), P("x1")) == P("1 + x1 + x2"));
}

TEST_CASE("poly_mul identities") {
    CHECK(poly_mul(P("x1^-1"), P("x1")).is_one());
    CHECK(poly_mul(P("1 + x2"), P("x1^-1")) == P("x1^-1 + x1^-1*x2"));
    CHECK(poly_mul(LaurentPoly(), P("1 + x1 + x2^-3")).is_zero());
}

TEST_CASE("poly_div_exact examples") {
    CHECK(poly_div_exact(P("1 + x2"), P("x1")) == P("x1^-1 + x1^-1*x2"));
    CHECK(poly_div_exact(P("x1*x2 + x1"), P("x2 + 1")) == P("x1"));
    CHECK(poly_div_exact(P("x1 + 1"), P("x2")) == P("x2^-1*x1 + x2^-1"));
    CHECK_THROWS_AS(poly_div_exact(P("x1"), LaurentPoly()), DivisionByZeroError);
    CHECK_THROWS_AS(poly_div_exact(P("x1 + 1"), P("x2 + 1")), InexactDivisionError);
    CHECK_THROWS_AS(poly_div_exact(P("1"), P("1 + x1")), InexactDivisionError);
}

TEST_CASE("poly_eval") {
    std::map<int, Rational> ones{{0, Rational(1)}, {1, Rational(1)}};
    CHECK(poly_eval(P("1 + x1 + x2"), ones) == Rational(3));
    CHECK(poly_eval(P("x1^-1*x2^-1 + x2^-1 + x1^-1*x2^-1*x2"), ones) == Rational(3));
    // (1 + x1 + x2)/(x1 x2) at ones evaluates to 3.
    CHECK(poly_eval(poly_div_exact(P("1 + x1 + x2"), P("x1*x2")), ones) == Rational(3));
    CHECK(poly_eval(P("x1^-1"), {{0, Rational(2)}}) == Rational(1, 2));
    CHECK_THROWS_AS(poly_eval(P("x1 + x2"), {{0, Rational(1)}}), UnassignedVariableError);
    CHECK_THROWS_AS(poly_eval(P("x1^-1"), {{0, Rational(0)}}),
                    ZeroAssignedToInvertedVariableError);
    CHECK(poly_eval(P("x1"), {{0, Rational(0)}}) == Rational(0));
}

TEST_CASE("poly ring axioms on random small polynomials") {
    std::mt19937_64 rng(11);
    auto random_poly = [&]() {
        LaurentPoly p;
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            Monomial m({{static_cast<int>(rng() % 3), static_cast<int>(rng() % 5) - 2}});
            long long c = static_cast<long long>(rng() % 7) - 3;
            p += LaurentPoly::term(Rational(c), m);
        }
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(poly_add(a, b) == poly_add(b, a));
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c)));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
        CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
        if (!b.is_zero()) CHECK(poly_div_exact(poly_mul(a, b), b) == a);
    }
}

TEST_CASE("poly serialization round-trips") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly p;
        int terms = static_cast<int>(rng() % 4);
        for (int t = 0; t < terms; ++t) {
            Monomial m({{static_cast<int>(rng() % 4), static_cast<int>(rng() % 9) - 4},
                        {static_cast<int>(rng() % 4), static_cast<int>(rng() % 9) - 4}});
            long long num = static_cast<long long>(rng() % 19) - 9;
            long long den = 1 + static_cast<long long>(rng() % 5);
            p += LaurentPoly::term(Rational(BigInteger(num), BigInteger(den)), m);
        }
        CHECK(LaurentPoly::parse(p.to_string()) == p);
    }
    CHECK(P("2*x1^2*x2^-1 + 1/2").to_string() == "1/2 + 2*x1^2*x2^-1");
    CHECK(P("-x1 - 1").to_string() == "-1 - x1");
}

TEST_CASE("fraction rendering") {
    CHECK(poly_div_exact(P("1 + x2"), P("x1")).to_fraction_string() == "(1+x2)/x1");
    CHECK(P("x2").to_fraction_string() == "x2");
    CHECK(poly_div_exact(P("1 + x1 + x2"), P("x1*x2")).to_fraction_string() ==
          "(1+x1+x2)/(x1*x2)");
}

TEST_CASE("continuant base cases") {
    CHECK(continuant(std::vector<long long>{}) == 1);
    CHECK(continuant(std::vector<long long>{5}) == 5);
    CHECK(continuant(std::vector<long long>{1, 2}) == 1);   // det [1 1; 1 2]
    CHECK(continuant(std::vector<long long>{2, 2, 2}) == 4);
}

TEST_CASE("continuant equals tri-diagonal determinant, all sequences len <= 8") {
    // Lengths 0..5 exhaustively here; the acceptance suite extends to 8.
    for (int len = 0; len <= 5; ++len) {
        std::vector<long long> ys(len, -3);
        while (true) {
            CHECK(continuant(ys) == tridiagonal_det(ys));
            int pos = 0;
            while (pos < len && ys[pos] == 3) {
                ys[pos] = -3;
                ++pos;
            }
            if (pos == len) break;
            ++ys[pos];
        }
        if (len == 0) continue;
    }
    // Cross-check the Bareiss oracle itself against Laplace on random data.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        std::vector<long long> ys;
        for (int i = 0; i < n; ++i) ys.push_back(static_cast<long long>(rng() % 7) - 3);
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) {
            m[i][i] = ys[i];
            if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
        }
        CHECK(tridiagonal_det(ys) == laplace_det(m));
    }
}

TEST_CASE("continuant symmetry under reversal") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        int n = static_cast<int>(rng() % 8);
        std::vector<long long> ys;
        for (int i = 0; i < n; ++i) ys.push_back(static_cast<long long>(rng() % 7) - 3);
        std::vector<long long> rev(ys.rbegin(), ys.rend());
        CHECK(continuant(ys) == continuant(rev));
    }
}

TEST_CASE("continuant over other rings") {
    std::vector<Rational> rys{Rational(1, 2), Rational(3), Rational(2, 5)};
    Rational p1 = rys[0];
    Rational p2 = rys[1] * p1 - Rational(1);
    Rational p3 = rys[2] * p2 - p1;
    CHECK(continuant(rys) == p3);

    std::vector<LaurentPoly> pys{P("x1"), P("x2"), P("x3")};
    CHECK(continuant(pys) == P("x1*x2*x3 - x1 - x3"));
}
