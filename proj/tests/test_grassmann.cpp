#include <random>
#include <set>

#include "doctest.h"
#include "frieze/grassmann.hpp"
#include "frieze/polygon.hpp"

using namespace frieze;

namespace {

std::vector<long long> row_values(const FriezeGrid& f, int d) {
    std::vector<long long> out;
    for (int i = 1; i <= f.period(); ++i) out.push_back(f.at(i, i + d).as_i64());
    return out;
}

bool cyclically_equal(std::vector<long long> a, const std::vector<long long>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t s = 0; s < a.size(); ++s) {
        std::rotate(a.begin(), a.begin() + 1, a.end());
        if (a == b) return true;
    }
    return false;
}

// Exact maximal minors of a rational k x n matrix.
Rational minor_det(const std::vector<std::vector<Rational>>& m, const std::vector<int>& cols) {
    const std::size_t k = cols.size();
    if (k == 1) return m[0][cols[0] - 1];
    Rational total(0);
    for (std::size_t r = 0; r < k; ++r) {
        std::vector<int> rest;
        for (std::size_t t = 0; t < k; ++t)
            if (t != r) rest.push_back(cols[t]);
        std::vector<std::vector<Rational>> sub(m.begin() + 1, m.end());
        // Expand along the first row.
        Rational term = m[0][cols[r] - 1];
        if (term.is_zero()) continue;
        std::vector<std::vector<Rational>> subm;
        for (std::size_t rr = 1; rr < m.size(); ++rr) subm.push_back(m[rr]);
        Rational minor = minor_det(subm, rest);
        Rational signed_term = term * minor;
        if (r % 2 == 1) signed_term = -signed_term;
        total += signed_term;
    }
    return total;
}

std::vector<std::vector<Rational>> random_matrix(int k, int n, std::mt19937_64& rng) {
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(n));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c)
            m[r][c] = Rational(static_cast<long long>(rng() % 19) - 9,
                               1 + static_cast<long long>(rng() % 4));
    return m;
}

}  // namespace

TEST_CASE("consecutive and almost consecutive subsets") {
    CHECK(is_consecutive(KSubset(6, {1, 5, 6})));
    CHECK(is_consecutive(KSubset(6, {1, 2, 3})));
    CHECK_FALSE(is_consecutive(KSubset(6, {1, 2, 5})));
    CHECK(is_almost_consecutive(KSubset(6, {1, 2, 5})));
    CHECK_FALSE(is_almost_consecutive(KSubset(6, {1, 3, 5})));
    CHECK_FALSE(is_almost_consecutive(KSubset(6, {2, 4, 6})));
    CHECK(is_almost_consecutive(KSubset(6, {1, 4})));  // k = 2: every pair
}

TEST_CASE("crossing_k") {
    CHECK(crossing_k(KSubset(6, {1, 3}), KSubset(6, {2, 4})));
    CHECK(crossing_k(KSubset(6, {1, 2, 4}), KSubset(6, {2, 3, 5})));
    CHECK_FALSE(crossing_k(KSubset(6, {1, 2, 4}), KSubset(6, {1, 2, 4})));
    CHECK_FALSE(crossing_k(KSubset(6, {1, 2, 3}), KSubset(6, {4, 5, 6})));
}

TEST_CASE("pluecker relations vanish on maximal minors") {
    std::mt19937_64 rng(37);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}}) {
        std::vector<PlueckerRelation> rels = pluecker_relations(k, n);
        for (int trial = 0; trial < 25; ++trial) {
            auto m = random_matrix(k, n, rng);
            std::map<std::vector<int>, Rational> minors;
            for (const auto& rel : rels) {
                for (const auto& t : rel.terms) {
                    if (!minors.count(t.first)) minors[t.first] = minor_det(m, t.first);
                    if (!minors.count(t.second)) minors[t.second] = minor_det(m, t.second);
                }
            }
            for (const auto& rel : rels) {
                Rational total(0);
                for (const auto& t : rel.terms) {
                    Rational term = minors[t.first] * minors[t.second];
                    total += t.sign < 0 ? -term : term;
                }
                CHECK(total.is_zero());
            }
        }
    }
}

TEST_CASE("the k=2 three-term relation has the textbook shape") {
    // p13 p24 = p12 p34 + p14 p23, i.e. the relation for J' = {1}, J = {2,3,4}.
    std::vector<PlueckerRelation> rels = pluecker_relations(2, 4);
    bool found = false;
    for (const auto& rel : rels) {
        if (rel.small == std::vector<int>{1} && rel.big == std::vector<int>{2, 3, 4}) {
            REQUIRE(rel.terms.size() == 3);
            CHECK(rel.terms[0].first == std::vector<int>{1, 2});
            CHECK(rel.terms[0].second == std::vector<int>{3, 4});
            CHECK(rel.terms[0].sign == 1);
            CHECK(rel.terms[1].first == std::vector<int>{1, 3});
            CHECK(rel.terms[1].second == std::vector<int>{2, 4});
            CHECK(rel.terms[1].sign == -1);
            CHECK(rel.terms[2].first == std::vector<int>{1, 4});
            CHECK(rel.terms[2].second == std::vector<int>{2, 3});
            CHECK(rel.terms[2].sign == 1);
            found = true;
        }
    }
    CHECK(found);
    // Terms with repeated indices are dropped as zero.
    for (const auto& rel : pluecker_relations(2, 4))
        for (const auto& t : rel.terms) {
            CHECK(t.first.size() == 2);
            CHECK(t.first[0] != t.first[1]);
        }
}

TEST_CASE("frieze_index reproduces the (3,6) grid rows") {
    std::multiset<std::string> row_m4, row_m5;
    for (int r = 1; r <= 6; ++r) {
        row_m4.insert(frieze_index(3, 6, r, 4).name());
        row_m5.insert(frieze_index(3, 6, r, 5).name());
    }
    CHECK(row_m5 == std::multiset<std::string>{"p146", "p125", "p236", "p134", "p245", "p356"});
    CHECK(row_m4 == std::multiset<std::string>{"p124", "p235", "p346", "p145", "p256", "p136"});
    // Adjacent-to-boundary rows are consecutive subsets; extremes collide.
    for (int r = 1; r <= 6; ++r) {
        CHECK(is_consecutive(frieze_index(3, 6, r, 3)));
        CHECK(is_consecutive(frieze_index(3, 6, r, 6)));
        CHECK_FALSE(frieze_index_opt(3, 6, r, 1).has_value());
        CHECK_FALSE(frieze_index_opt(3, 6, r, 8).has_value());
        CHECK(is_almost_consecutive(frieze_index(3, 6, r, 4)));
        CHECK(is_almost_consecutive(frieze_index(3, 6, r, 5)));
    }
    CHECK_THROWS_AS(frieze_index(3, 6, 1, 1), IndexCollisionError);
}

TEST_CASE("frieze_index for k=2 matches the arc coordinates") {
    for (int i = 1; i <= 5; ++i)
        for (int d = 1; d <= 2; ++d) {
            KSubset s = frieze_index(2, 5, i, d + 2);
            int a = (i - 1) % 5 + 1;
            int b = (i + d) % 5 + 1;
            std::vector<int> expect{std::min(a, b), std::max(a, b)};
            CHECK(s.elems == expect);
        }
}

TEST_CASE("pluecker frieze text shows labels and zero rows") {
    PlueckerFrieze pf{3, 6, false};
    std::string text = pf.to_text();
    CHECK(text.find("p146") != std::string::npos);
    CHECK(text.find("p124") != std::string::npos);
    PlueckerFrieze spf{3, 6, true};
    std::string stext = spf.to_text();
    CHECK(stext.find("p123") == std::string::npos);  // consecutive entries become 1
    CHECK(stext.find("p124") != std::string::npos);
}

TEST_CASE("grassmann expansions evaluate to minors") {
    std::mt19937_64 rng(41);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 6}, {3, 6}}) {
        GrassmannContext ctx = build_grassmann_context(k, n);
        for (int trial = 0; trial < 5; ++trial) {
            auto m = random_matrix(k, n, rng);
            // Assign each seed variable its own minor value; skip degenerate
            // matrices where some seed minor vanishes.
            std::map<int, Rational> assign;
            bool degenerate = false;
            for (std::size_t v = 0; v < ctx.seed.labels.size(); ++v) {
                Rational val = minor_det(m, ctx.seed.labels[v].elems);
                if (val.is_zero()) degenerate = true;
                assign[static_cast<int>(v)] = val;
            }
            if (degenerate) continue;
            for (std::size_t idx = 0; idx < ctx.all_subsets.size(); ++idx) {
                Rational expect = minor_det(m, ctx.all_subsets[idx].elems);
                CHECK(poly_eval(ctx.expansions[idx], assign) == expect);
            }
        }
    }
}

TEST_CASE("Gr(3,6) exploration closes at 50 clusters with all Plueckers collected") {
    GrassmannContext ctx = build_grassmann_context(3, 6);
    CHECK(ctx.graph.cluster_count() == 50);
    // 16 distinct mutable cluster variables: 14 non-consecutive Pluecker
    // coordinates plus two quadratic variables.
    CHECK(ctx.graph.variable_count() == 16);
    int pluecker_vars = 0;
    for (std::size_t idx = 0; idx < ctx.all_subsets.size(); ++idx) {
        CHECK(ctx.subset_variable[idx] >= 0);  // every coordinate is collected
        if (!is_consecutive(ctx.all_subsets[idx])) ++pluecker_vars;
    }
    CHECK(pluecker_vars == 14);
}

TEST_CASE("unitary friezes of Gr(2,6) reproduce the triangulation friezes") {
    GrassmannContext ctx = build_grassmann_context(2, 6);
    CHECK(ctx.graph.cluster_count() == 14);
    // The initial seed is the fan at vertex 1.
    FriezeGrid from_cluster = unitary_frieze(ctx, 0);
    FriezeGrid from_fan = frieze_of(fan_triangulation(6, 1));
    CHECK(from_cluster == from_fan);

    UnitaryCensus census = unitary_census(ctx);
    CHECK(census.clusters == 14);
    CHECK(census.distinct.size() == 14);
    std::set<std::string> triangulation_keys;
    for (const Triangulation& t : enumerate_triangulations(6))
        triangulation_keys.insert(canonical_key(frieze_of(t)));
    std::set<std::string> census_keys;
    for (const FriezeGrid& f : census.distinct) census_keys.insert(canonical_key(f));
    CHECK(census_keys == triangulation_keys);
}

TEST_CASE("the Fig. 8 cluster specializes to the unitary SL3 frieze") {
    GrassmannContext ctx = build_grassmann_context(3, 6);
    // Cluster {p245, p145, p124, p125} plus the frozen consecutive variables.
    std::vector<int> ids;
    for (const std::string& name : {"p245", "p145", "p124", "p125"}) {
        int idx = -1;
        for (std::size_t i = 0; i < ctx.all_subsets.size(); ++i)
            if (ctx.all_subsets[i].name() == name) idx = static_cast<int>(i);
        REQUIRE(idx >= 0);
        REQUIRE(ctx.subset_variable[idx] >= 0);
        ids.push_back(ctx.subset_variable[idx]);
    }
    std::sort(ids.begin(), ids.end());
    int node = ctx.graph.find_cluster(ids);
    REQUIRE(node >= 0);
    FriezeGrid f = unitary_frieze(ctx, node);
    CHECK(cyclically_equal(row_values(f, 1), {1, 2, 4, 1, 2, 4}));
    CHECK(cyclically_equal(row_values(f, 2), {2, 1, 4, 2, 1, 4}));
    CHECK(validate(f).ok());
}

TEST_CASE("Laurent phenomenon on random paths from the Gr(3,6) seed") {
    std::mt19937_64 rng(43);
    GrassmannSeed gs = grassmann_seed(3, 6);
    for (int trial = 0; trial < 5; ++trial) {
        Seed cur = gs.seed;
        for (int step = 0; step < 20; ++step) {
            int k = 1 + static_cast<int>(rng() % cur.matrix.n_mutable);
            CHECK_NOTHROW(cur = mutate_seed(cur, k));
        }
    }
}

TEST_CASE("frieze_index images are almost consecutive across (k,n)") {
    for (int k = 2; k <= 3; ++k) {
        for (int n = 2 * k; n <= 8; ++n) {
            for (int r = -n; r <= 2 * n; ++r) {
                for (int m = 1; m <= n + k - 1; ++m) {
                    auto s = frieze_index_opt(k, n, r, m);
                    if (!s) {
                        // Degenerate positions occur exactly in the zero rows.
                        CHECK((m <= k - 1 || m >= n + 1));
                        continue;
                    }
                    CHECK(is_almost_consecutive(*s));
                    if (m == k || m == n) CHECK(is_consecutive(*s));
                }
            }
        }
    }
}

TEST_CASE("unitary census of Gr(2,7) counts the heptagon triangulations") {
    UnitaryCensus c = unitary_census(2, 7);
    CHECK(c.clusters == 42);
    CHECK(c.distinct.size() == 42);
}

TEST_CASE("the (3,6) relation for J'={1,2}, J={3,4,5,6} has four terms") {
    for (const auto& rel : pluecker_relations(3, 6)) {
        if (rel.small == std::vector<int>{1, 2} && rel.big == std::vector<int>{3, 4, 5, 6}) {
            CHECK(rel.terms.size() == 4);
            return;
        }
    }
    FAIL("relation instance not found");
}
