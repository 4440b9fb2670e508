// Acceptance suite: one pass/fail line per criterion, timings included.
// Exit code equals the number of failed criteria. The two hour-scale
// censuses (E8 mesh friezes, Gr(3,8)) are opt-in via FRIEZE_ACCEPT_E8=1 /
// FRIEZE_ACCEPT_GR38=1 and do not gate the result.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "frieze/cli.hpp"
#include "frieze/cluster.hpp"
#include "frieze/grassmann.hpp"
#include "frieze/grid.hpp"
#include "frieze/infgon.hpp"
#include "frieze/mesh.hpp"
#include "frieze/polygon.hpp"
#include "frieze/slk_enumerate.hpp"

using namespace frieze;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& fn) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label;
    if (!detail.empty()) line << " [" << detail << "]";
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

long long catalan(int m) {
    std::vector<long long> c{1};
    for (int i = 1; i <= m; ++i) {
        long long v = 0;
        for (int j = 0; j < i; ++j) v += c[j] * c[i - 1 - j];
        c.push_back(v);
    }
    return c[m];
}

bool cyclically_equal(std::vector<long long> a, const std::vector<long long>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t s = 0; s < a.size(); ++s) {
        std::rotate(a.begin(), a.begin() + 1, a.end());
        if (a == b) return true;
    }
    return false;
}

std::vector<long long> row_values(const FriezeGrid& f, int d) {
    std::vector<long long> out;
    for (int i = 1; i <= f.period(); ++i) out.push_back(f.at(i, i + d).as_i64());
    return out;
}

FriezeGrid all_twos_sl3() {
    FriezeGrid f(3, 2);
    for (int i = 1; i <= 6; ++i) {
        f.entry(i, i + 1) = BigInteger(2);
        f.entry(i, i + 2) = BigInteger(2);
    }
    return f;
}

// Bareiss determinant of the tri-diagonal matrix with unit off-diagonals.
long long tridiagonal_det(const std::vector<long long>& ys) {
    const int n = static_cast<int>(ys.size());
    if (n == 0) return 1;
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = ys[i];
        if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
    }
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

Rational minor_det(const std::vector<std::vector<Rational>>& m, const std::vector<int>& cols) {
    const std::size_t k = cols.size();
    if (k == 1) return m[0][cols[0] - 1];
    Rational total(0);
    for (std::size_t r = 0; r < k; ++r) {
        if (m[0][cols[r] - 1].is_zero()) continue;
        std::vector<int> rest;
        for (std::size_t t = 0; t < k; ++t)
            if (t != r) rest.push_back(cols[t]);
        std::vector<std::vector<Rational>> sub(m.begin() + 1, m.end());
        Rational term = m[0][cols[r] - 1] * minor_det(sub, rest);
        if (r % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

ExtendedExchangeMatrix linear_a_matrix(int rank) {
    ExtendedExchangeMatrix m;
    m.n_mutable = rank;
    m.b.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i + 1 < rank; ++i) {
        m.b[i][i + 1] = 1;
        m.b[i + 1][i] = -1;
    }
    return m;
}

bool env_flag(const char* name) {
    const char* v = std::getenv(name);
    return v && *v && std::string(v) != "0";
}

}  // namespace

int main() {
    criterion(1, "CC counts match Catalan(m-2) for m = 4..12 via the CLI", [](std::string& d) {
        for (int m = 4; m <= 12; ++m) {
            std::ostringstream out, err;
            int code = run_cli({"enumerate", "--kind", "cc", "--n", std::to_string(m),
                                "--count-only"},
                               out, err);
            if (code != 0) return false;
            long long got = std::stoll(out.str());
            if (got != catalan(m - 2)) {
                d = "m=" + std::to_string(m) + " gave " + std::to_string(got);
                return false;
            }
        }
        return true;
    });

    criterion(2, "quiddity (1,2,2,2,1,4) reproduces the width-3 frieze", [](std::string& d) {
        FriezeGrid f = frieze_from_quiddity({1, 2, 2, 2, 1, 4});
        if (!cyclically_equal(row_values(f, 2), {1, 3, 3, 1, 3, 3})) return false;
        if (!cyclically_equal(row_values(f, 3), {1, 4, 1, 2, 2, 2})) return false;
        for (int i = 1; i <= 6; ++i) {
            if (!f.at(i, i + 4).is_one()) return false;   // closing ones row
            if (!f.at(i, i + 5).is_zero()) return false;  // closing zeros row
        }
        d = "rows and closing rows exact";
        return validate(f).ok();
    });

    criterion(3, "frieze_of and triangulation_of invert each other, n <= 11", [](std::string& d) {
        std::size_t cases = 0, largest = 0;
        for (int n = 4; n <= 11; ++n) {
            std::size_t here = 0;
            for (const Triangulation& t : enumerate_triangulations(n)) {
                FriezeGrid f = frieze_of(t);
                if (!(triangulation_of(f).diagonals == t.diagonals)) return false;
                if (!(frieze_of(triangulation_of(f)) == f)) return false;
                ++cases;
                ++here;
            }
            largest = here;
        }
        d = std::to_string(cases) + " round trips, " + std::to_string(largest) +
            " at the largest polygon";
        return largest == 4862;
    });

    criterion(4, "SL3 grid enumeration: width 2 -> 51, width 3 -> 868, no pruning",
              [](std::string& d) {
                  SlkEnumerationReport r2;
                  std::vector<FriezeGrid> w2 = enumerate_slk_grid(3, 2, 14, &r2, 2);
                  if (w2.size() != 51) {
                      d = "width 2 gave " + std::to_string(w2.size());
                      return false;
                  }
                  // Count stability at the derived max entry and beyond.
                  long long b0 = r2.max_interior;
                  for (long long b : {b0, b0 + 1, b0 + 5}) {
                      SlkEnumerationReport rep;
                      if (enumerate_slk_grid(3, 2, b, &rep, 2).size() != 51) {
                          d = "width 2 unstable at bound " + std::to_string(b);
                          return false;
                      }
                  }
                  SlkEnumerationReport r3;
                  std::vector<FriezeGrid> w3 = enumerate_slk_grid(3, 3, 28, &r3, 2);
                  if (w3.size() != 868) {
                      d = "width 3 gave " + std::to_string(w3.size());
                      return false;
                  }
                  if (r3.bound_ceiling_reached || r3.overflow_rejects > 0) {
                      d = "width 3 bound report shows possible pruning";
                      return false;
                  }
                  d = "width-2 max entry " + std::to_string(b0) + "; width-3 max branched " +
                      std::to_string(r3.max_branched);
                  return true;
              });

    criterion(5, "mesh friezes: A3 -> 14, D4 -> 51, E6 -> 868", [](std::string& d) {
        for (const auto& [type, expect] :
             std::vector<std::pair<std::string, std::size_t>>{{"A3", 14}, {"D4", 51}, {"E6", 868}}) {
            MeshEnumerationReport rep;
            std::vector<MeshFrieze> fs =
                mesh_frieze_enumerate_stable(dynkin_translation_quiver(type), &rep, 8, 2);
            if (fs.size() != expect) {
                d = type + " gave " + std::to_string(fs.size());
                return false;
            }
        }
        if (env_flag("FRIEZE_ACCEPT_E8")) {
            MeshEnumerationReport rep;
            std::vector<MeshFrieze> fs =
                mesh_frieze_enumerate_stable(dynkin_translation_quiver("E8"), &rep, 8, 2);
            if (fs.size() != 26952) {
                d = "E8 gave " + std::to_string(fs.size());
                return false;
            }
            d = "including E8 -> 26952";
        } else {
            d = "E8 skipped (set FRIEZE_ACCEPT_E8=1 to run)";
        }
        return true;
    });

    criterion(6, "unitary censuses: Gr(3,6) -> 50, Gr(3,7) -> 833; missing frieze is all-2s",
              [](std::string& d) {
                  GrassmannContext g36 = build_grassmann_context(3, 6);
                  UnitaryCensus c36 = unitary_census(g36);
                  if (c36.clusters != 50 || c36.distinct.size() != 50) {
                      d = "Gr(3,6): " + std::to_string(c36.clusters) + " clusters, " +
                          std::to_string(c36.distinct.size()) + " friezes";
                      return false;
                  }
                  std::set<std::string> unitary_keys;
                  for (const FriezeGrid& f : c36.distinct) unitary_keys.insert(canonical_key(f));
                  std::vector<FriezeGrid> grid51 = enumerate_slk_grid(3, 2, 14, nullptr, 2);
                  std::vector<FriezeGrid> missing;
                  for (const FriezeGrid& f : grid51)
                      if (!unitary_keys.count(canonical_key(f))) missing.push_back(f);
                  if (missing.size() != 1 || !(missing[0] == all_twos_sl3())) {
                      d = "non-unitary difference is not exactly the all-2s frieze";
                      return false;
                  }
                  UnitaryCensus c37 = unitary_census(3, 7);
                  if (c37.clusters != 833 || c37.distinct.size() != 833) {
                      d = "Gr(3,7): " + std::to_string(c37.clusters) + " clusters, " +
                          std::to_string(c37.distinct.size()) + " friezes";
                      return false;
                  }
                  if (env_flag("FRIEZE_ACCEPT_GR38")) {
                      UnitaryCensus c38 = unitary_census(3, 8);
                      if (c38.distinct.size() != 25080) {
                          d = "Gr(3,8) gave " + std::to_string(c38.distinct.size());
                          return false;
                      }
                      d = "including Gr(3,8) -> 25080";
                  }
                  return true;
              });

    criterion(7, "all seven rows of the A2 mutation table", [](std::string& d) {
        ExtendedExchangeMatrix a2;
        a2.n_mutable = 2;
        a2.b = {{0, 1}, {-1, 0}};
        Seed s0 = Seed::initial(a2);
        auto P = [](const char* s) { return LaurentPoly::parse(s); };
        LaurentPoly x1 = P("x1"), x2 = P("x2");
        LaurentPoly f1 = poly_div_exact(P("1 + x2"), P("x1"));
        LaurentPoly f2 = poly_div_exact(P("1 + x1"), P("x2"));
        LaurentPoly f12 = poly_div_exact(P("1 + x1 + x2"), P("x1*x2"));

        Seed m1 = mutate_seed(s0, 1);
        Seed m2 = mutate_seed(s0, 2);
        Seed m11 = mutate_seed(m1, 1);
        Seed m22 = mutate_seed(m2, 2);
        Seed m12 = mutate_seed(m2, 1);  // mu_1 after mu_2
        Seed m21 = mutate_seed(m1, 2);  // mu_2 after mu_1

        bool ok = s0.vars[0] == x1 && s0.vars[1] == x2;
        ok = ok && m1.vars[0] == f1 && m1.vars[1] == x2;
        ok = ok && m2.vars[0] == x1 && m2.vars[1] == f2;
        ok = ok && m11.vars[0] == x1 && m11.vars[1] == x2;
        ok = ok && m22.vars[0] == x1 && m22.vars[1] == x2;
        ok = ok && m12.vars[0] == f12 && m12.vars[1] == f2;
        ok = ok && m21.vars[0] == f1 && m21.vars[1] == f12;
        d = "canonical Laurent forms compared exactly";
        return ok;
    });

    criterion(8, "property suites", [](std::string& d) {
        std::mt19937_64 rng(97);
        // Matrix mutation involution, 500 random cases.
        for (int trial = 0; trial < 500; ++trial) {
            int n = 2 + static_cast<int>(rng() % 3);
            int m = n + static_cast<int>(rng() % 3);
            ExtendedExchangeMatrix b;
            b.n_mutable = n;
            b.b.assign(m, std::vector<int>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int v = static_cast<int>(rng() % 5) - 2;
                    b.b[i][j] = v;
                    b.b[j][i] = -v;
                }
            for (int i = n; i < m; ++i)
                for (int j = 0; j < n; ++j) b.b[i][j] = static_cast<int>(rng() % 5) - 2;
            int k = 1 + static_cast<int>(rng() % n);
            if (!(mutate_matrix(mutate_matrix(b, k), k).b == b.b)) {
                d = "matrix involution failed";
                return false;
            }
        }
        // Laurent phenomenon along random 20-step paths.
        std::vector<Seed> seeds{Seed::initial(linear_a_matrix(2)), Seed::initial(linear_a_matrix(3)),
                                grassmann_seed(3, 6).seed};
        for (const Seed& s : seeds) {
            for (int trial = 0; trial < 3; ++trial) {
                Seed cur = s;
                for (int step = 0; step < 20; ++step) {
                    int k = 1 + static_cast<int>(rng() % cur.matrix.n_mutable);
                    try {
                        cur = mutate_seed(cur, k);
                    } catch (const LaurentViolationError&) {
                        d = "inexact exchange division";
                        return false;
                    }
                }
            }
        }
        // Continuant vs determinant oracle, all sequences len <= 8 in [-3,3].
        for (int len = 0; len <= 8; ++len) {
            std::vector<long long> ys(len, -3);
            while (true) {
                if (continuant(ys) != BigInteger(tridiagonal_det(ys))) {
                    d = "continuant/determinant mismatch";
                    return false;
                }
                int pos = 0;
                while (pos < len && ys[pos] == 3) {
                    ys[pos] = -3;
                    ++pos;
                }
                if (pos == len) break;
                ++ys[pos];
            }
        }
        // Pluecker relations vanish on maximal minors of 200 random matrices.
        for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}}) {
            std::vector<PlueckerRelation> rels = pluecker_relations(k, n);
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<std::vector<Rational>> m(k, std::vector<Rational>(n));
                for (int r = 0; r < k; ++r)
                    for (int c = 0; c < n; ++c)
                        m[r][c] = Rational(static_cast<long long>(rng() % 19) - 9,
                                           1 + static_cast<long long>(rng() % 4));
                std::map<std::vector<int>, Rational> minors;
                for (const auto& rel : rels) {
                    Rational total(0);
                    for (const auto& t : rel.terms) {
                        if (!minors.count(t.first)) minors[t.first] = minor_det(m, t.first);
                        if (!minors.count(t.second)) minors[t.second] = minor_det(m, t.second);
                        Rational term = minors[t.first] * minors[t.second];
                        total += t.sign < 0 ? -term : term;
                    }
                    if (!total.is_zero()) {
                        d = "a Pluecker relation did not vanish";
                        return false;
                    }
                }
            }
        }
        // Glide symmetry on all CC friezes with n <= 9.
        for (int n = 4; n <= 9; ++n)
            for (const Triangulation& t : enumerate_triangulations(n))
                if (!glide_check(frieze_of(t))) {
                    d = "glide symmetry failed";
                    return false;
                }
        return true;
    });

    criterion(9, "cluster character agrees with frieze entries, n <= 8", [](std::string& d) {
        std::size_t checked = 0;
        for (int n = 4; n <= 8; ++n) {
            for (const Triangulation& t : enumerate_triangulations(n)) {
                ClusterTiltingObject cto;
                cto.diagonals = t;
                TiltingFrieze tf = frieze_of_tilting(cto);
                FriezeGrid expect = frieze_of(t);
                if (!(tf.specialized == expect)) {
                    d = "frieze_of_tilting mismatch at n=" + std::to_string(n);
                    return false;
                }
                for (int a = 1; a <= n; ++a) {
                    for (int b = a + 2; b <= n; ++b) {
                        Arc m(a, b);
                        if (m.is_boundary(n) || t.contains(m)) continue;
                        if (submodule_count(cto, RankOneObject{n, m}) !=
                            expect.arc_entry(a, b).as_i64()) {
                            d = "submodule count mismatch at " + m.to_string();
                            return false;
                        }
                        ++checked;
                    }
                }
            }
        }
        d = std::to_string(checked) + " submodule counts cross-checked";
        return true;
    });

    criterion(10, "half-frieze of the fountain example", [](std::string& d) {
        FountainTriangulation t = FountainTriangulation::parse(
            "fountain=0; arcs=(0,2n)|n not in {0,1,-1}; arcs=(2n,2n+2); window=-12..12");
        HalfFriezeWindow h = half_frieze(t, 4);
        if (h.quiddity.at(1) != 1 || h.quiddity.at(2) != 3 || h.quiddity.at(4) != 4) {
            d = "quiddity values differ";
            return false;
        }
        std::size_t diamonds = 0;
        for (const auto& [key, val] : h.entries) {
            auto [i, r] = key;
            if (!h.has(i + 1, r) || !h.has(i, r + 1)) continue;
            long long top = r == 1 ? 1 : (h.has(i + 1, r - 1) ? h.at(i + 1, r - 1) : -1);
            if (top < 0) continue;
            if (val * h.at(i + 1, r) - top * h.at(i, r + 1) != 1) {
                d = "diamond rule violated";
                return false;
            }
            ++diamonds;
        }
        std::vector<int> bits = penrose_diagonal(h, DiagonalDir::DownRight, 0);
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i] != (i % 2 == 0 ? 1 : 0)) {
                d = "index sequence does not alternate";
                return false;
            }
        d = std::to_string(diamonds) + " complete diamonds checked";
        return diamonds > 0;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures;
}
