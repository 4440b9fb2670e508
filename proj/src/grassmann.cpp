#include "frieze/grassmann.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "frieze/errors.hpp"

namespace frieze {

KSubset::KSubset(int n_, std::vector<int> e) : n(n_), elems(std::move(e)) {
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 1 || elems[i] > n) throw Error("KSubset: element out of range");
        if (i && elems[i] == elems[i - 1]) throw Error("KSubset: repeated element");
    }
}

std::string KSubset::name() const {
    if (n <= 9) {
        std::string s = "p";
        for (int e : elems) s += static_cast<char>('0' + e);
        return s;
    }
    std::string s = "p(";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(elems[i]);
    }
    return s + ")";
}

bool is_consecutive(const KSubset& s) {
    const int k = s.k(), n = s.n;
    if (k == 0 || k == n) return true;
    for (int r = 0; r < n; ++r) {
        std::vector<int> run;
        for (int t = 0; t < k; ++t) run.push_back((r + t) % n + 1);
        std::sort(run.begin(), run.end());
        if (run == s.elems) return true;
    }
    return false;
}

bool is_almost_consecutive(const KSubset& s) {
    const int k = s.k();
    if (k <= 1) return true;
    for (int drop = 0; drop < k; ++drop) {
        std::vector<int> rest;
        for (int i = 0; i < k; ++i)
            if (i != drop) rest.push_back(s.elems[i]);
        if (is_consecutive(KSubset(s.n, rest))) return true;
    }
    return false;
}

bool crossing_k(const KSubset& a, const KSubset& b) {
    if (a.n != b.n || a.k() != b.k()) throw Error("crossing_k: mismatched subsets");
    std::vector<std::pair<int, int>> diff;  // (element, side)
    for (int e : a.elems)
        if (!std::binary_search(b.elems.begin(), b.elems.end(), e)) diff.push_back({e, 0});
    for (int e : b.elems)
        if (!std::binary_search(a.elems.begin(), a.elems.end(), e)) diff.push_back({e, 1});
    std::sort(diff.begin(), diff.end());
    // Crossing iff the side pattern alternates at least four runs.
    int runs = 0, last = -1;
    for (const auto& [e, side] : diff) {
        if (side != last) {
            ++runs;
            last = side;
        }
    }
    return runs >= 4;
}

std::vector<PlueckerRelation> pluecker_relations(int k, int n, int window_lo, int window_hi) {
    if (k < 2) throw Error("pluecker_relations: k >= 2 required");
    if (window_hi < 0) window_hi = n;
    std::vector<int> universe;
    for (int v = window_lo; v <= window_hi; ++v) universe.push_back(v);

    std::vector<std::vector<int>> smalls, bigs;
    std::vector<int> cur;
    auto gen = [&](auto&& self, std::size_t start, int want, std::vector<std::vector<int>>& out) -> void {
        if (static_cast<int>(cur.size()) == want) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < universe.size(); ++i) {
            cur.push_back(universe[i]);
            self(self, i + 1, want, out);
            cur.pop_back();
        }
    };
    gen(gen, 0, k - 1, smalls);
    gen(gen, 0, k + 1, bigs);

    std::vector<PlueckerRelation> rels;
    for (const auto& jp : smalls) {
        for (const auto& j : bigs) {
            PlueckerRelation rel;
            rel.small = jp;
            rel.big = j;
            for (int r = 0; r <= k; ++r) {
                PlueckerRelation::Term t;
                // first = J' + j_r with the alternating sign of the sort.
                std::vector<int> first = jp;
                int jr = j[r];
                if (std::find(first.begin(), first.end(), jr) != first.end()) continue;
                int above = 0;
                for (int e : first)
                    if (e > jr) ++above;
                first.push_back(jr);
                std::sort(first.begin(), first.end());
                t.sign = ((r + above) % 2 == 0) ? 1 : -1;
                t.first = std::move(first);
                for (int s = 0; s <= k; ++s)
                    if (s != r) t.second.push_back(j[s]);
                rel.terms.push_back(std::move(t));
            }
            if (!rel.terms.empty()) rels.push_back(std::move(rel));
        }
    }
    return rels;
}

std::optional<KSubset> frieze_index_opt(int k, int n, long long r, long long m) {
    if (m < 1 || m > n + k - 1)
        throw Error("frieze_index: m out of range [1, n+k-1]");
    auto reduce = [&](long long v) {
        long long x = v % n;
        if (x <= 0) x += n;
        return static_cast<int>(x);
    };
    int rp = reduce(r);
    int mp = reduce(m + rp - 1);
    std::vector<int> elems;
    for (int t = 0; t < k - 1; ++t) elems.push_back(reduce(rp + t));
    if (std::find(elems.begin(), elems.end(), mp) != elems.end()) return std::nullopt;
    elems.push_back(mp);
    return KSubset(n, std::move(elems));
}

KSubset frieze_index(int k, int n, long long r, long long m) {
    auto s = frieze_index_opt(k, n, r, m);
    if (!s)
        throw IndexCollisionError("frieze_index: degenerate position (r=" + std::to_string(r) +
                                  ", m=" + std::to_string(m) + ")");
    return *s;
}

std::optional<KSubset> PlueckerFrieze::label(long long r, long long m) const {
    return frieze_index_opt(k, n, r, m);
}

std::string PlueckerFrieze::to_text() const {
    std::size_t cell = 1;
    auto cell_text = [&](long long r, long long m) -> std::string {
        auto s = frieze_index_opt(k, n, r, m);
        if (!s) return "0";
        if (specialized && is_consecutive(*s)) return "1";
        return s->name();
    };
    for (long long m = 1; m <= n + k - 1; ++m)
        for (long long r = 1; r <= n; ++r) cell = std::max(cell, cell_text(r, m).size());
    cell += 2;
    std::ostringstream os;
    for (long long m = n + k - 1; m >= 1; --m) {
        std::string line(static_cast<std::size_t>(n + k - 1 - m) * cell / 2, ' ');
        for (long long r = 1; r <= n; ++r) {
            std::string e = cell_text(r, m);
            line += e;
            line += std::string(cell - e.size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

namespace {

// Grid positions (i,j), 0 <= i <= k, 0 <= j <= n-k, labeled by the k-subset
// [1, k-i] u [k-i+j+1, k+j]. Row i = 0 and column j = 0 both collapse to the
// consecutive subset {1..k}; row k and column n-k are the remaining frozen
// (consecutive) labels.
std::vector<int> grid_subset(int k, int n, int i, int j) {
    std::vector<int> e;
    for (int v = 1; v <= k - i; ++v) e.push_back(v);
    for (int v = k - i + j + 1; v <= k + j; ++v) e.push_back(v);
    (void)n;
    return e;
}

}  // namespace

GrassmannSeed grassmann_seed(int k, int n) {
    if (k < 2 || 2 * k > n) throw Error("grassmann_seed: need 2 <= k <= n/2");
    GrassmannSeed gs;
    gs.k = k;
    gs.n = n;

    struct Pos {
        int i, j;
    };
    std::vector<Pos> mutables, frozens;
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= n - k - 1; ++j) mutables.push_back({i, j});
    frozens.push_back({0, 0});                                   // corner {1..k}
    for (int j = 1; j <= n - k; ++j) frozens.push_back({k, j});  // bottom row
    for (int i = k - 1; i >= 1; --i) frozens.push_back({i, n - k});

    std::map<std::pair<int, int>, int> id_of;  // grid pos -> vertex id (1-based)
    Quiver q;
    auto add_vertex = [&](Pos p, bool frozen) {
        KSubset s(n, grid_subset(k, n, p.i, p.j));
        QuiverVertex v;
        v.id = static_cast<int>(q.vertices.size()) + 1;
        v.frozen = frozen;
        v.label = s.name();
        q.vertices.push_back(v);
        id_of[{p.i, p.j}] = v.id;
        gs.labels.push_back(std::move(s));
    };
    for (Pos p : mutables) add_vertex(p, false);
    for (Pos p : frozens) add_vertex(p, true);

    auto id_at = [&](int i, int j) -> int {
        if (i == 0 || j == 0) return id_of.at({0, 0});
        auto it = id_of.find({i, j});
        return it == id_of.end() ? 0 : it->second;
    };
    // Right / down / anti-diagonal arrows around each mutable cell, plus the
    // corner arrow into (1,1); frozen-frozen arrows are omitted.
    for (Pos p : mutables) {
        int me = id_at(p.i, p.j);
        q.arrows.push_back({me, id_at(p.i, p.j + 1)});
        q.arrows.push_back({me, id_at(p.i + 1, p.j)});
        q.arrows.push_back({id_at(p.i + 1, p.j + 1), me});
    }
    q.arrows.push_back({id_at(0, 0), id_at(1, 1)});
    std::sort(q.arrows.begin(), q.arrows.end());

    ExtendedExchangeMatrix m = quiver_to_matrix(q);
    std::vector<std::string> names;
    for (const auto& s : gs.labels) names.push_back(s.name());
    gs.seed = Seed::initial(std::move(m), std::move(names));
    return gs;
}

int GrassmannContext::subset_index(const KSubset& s) const {
    auto it = std::lower_bound(all_subsets.begin(), all_subsets.end(), s);
    if (it == all_subsets.end() || !(*it == s)) return -1;
    return static_cast<int>(it - all_subsets.begin());
}

const LaurentPoly& GrassmannContext::expansion(const KSubset& s) const {
    int idx = subset_index(s);
    if (idx < 0) throw Error("GrassmannContext: unknown subset");
    return expansions[idx];
}

GrassmannContext build_grassmann_context(int k, int n, std::size_t max_seeds) {
    GrassmannContext ctx;
    ctx.seed = grassmann_seed(k, n);
    ctx.graph = explore(ctx.seed.seed, max_seeds);

    // All k-subsets, sorted.
    std::vector<int> cur;
    auto gen = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            ctx.all_subsets.emplace_back(n, cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    gen(gen, 1);
    std::sort(ctx.all_subsets.begin(), ctx.all_subsets.end());

    // Seed the expansions with the initial variables, then solve relations
    // with a single unknown coordinate until no progress remains.
    const int total = static_cast<int>(ctx.all_subsets.size());
    ctx.expansions.assign(total, LaurentPoly());
    std::vector<bool> known(total, false);
    for (std::size_t v = 0; v < ctx.seed.labels.size(); ++v) {
        int idx = ctx.subset_index(ctx.seed.labels[v]);
        if (idx < 0) throw Error("grassmann seed label missing");
        ctx.expansions[idx] = LaurentPoly::variable(static_cast<int>(v));
        known[idx] = true;
    }
    std::vector<PlueckerRelation> rels = pluecker_relations(k, n);
    auto idx_of = [&](const std::vector<int>& elems) {
        return ctx.subset_index(KSubset(n, elems));
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& rel : rels) {
            int unknown_idx = -1, unknown_count = 0;
            for (const auto& t : rel.terms) {
                int fi = idx_of(t.first), si = idx_of(t.second);
                if (!known[fi]) {
                    ++unknown_count;
                    unknown_idx = fi;
                }
                if (!known[si]) {
                    ++unknown_count;
                    unknown_idx = si;
                }
            }
            if (unknown_count != 1) continue;
            // Solve sign*p_u*partner + rest = 0 for p_u.
            LaurentPoly rest;
            LaurentPoly partner;
            int usign = 1;
            for (const auto& t : rel.terms) {
                int fi = idx_of(t.first), si = idx_of(t.second);
                if (fi == unknown_idx || si == unknown_idx) {
                    int other = fi == unknown_idx ? si : fi;
                    partner = ctx.expansions[other];
                    usign = t.sign;
                } else {
                    LaurentPoly prod = ctx.expansions[fi] * ctx.expansions[si];
                    if (t.sign < 0)
                        rest -= prod;
                    else
                        rest += prod;
                }
            }
            if (partner.is_zero()) continue;
            LaurentPoly num = usign < 0 ? rest : -rest;
            ctx.expansions[unknown_idx] = poly_div_exact(num, partner);
            known[unknown_idx] = true;
            progress = true;
        }
    }
    for (int i = 0; i < total; ++i)
        if (!known[i]) throw Error("grassmann expansions did not close at " +
                                   ctx.all_subsets[i].name());

    ctx.subset_variable.assign(total, -1);
    for (int i = 0; i < total; ++i)
        ctx.subset_variable[i] = ctx.graph.find_variable(ctx.expansions[i]);
    return ctx;
}

FriezeGrid unitary_frieze(const GrassmannContext& ctx, int node) {
    const int k = ctx.seed.k, n = ctx.seed.n;
    const int w = n - k - 1;
    std::vector<Rational> values = specialize_cluster_to_one(ctx.graph, node);
    FriezeGrid f(k, w);
    for (int i = 1; i <= n; ++i) {
        for (int d = 1; d <= w; ++d) {
            auto sub = frieze_index_opt(k, n, i, d + k);
            if (!sub) throw Error("unitary_frieze: unexpected degenerate interior position");
            int idx = ctx.subset_index(*sub);
            int var = ctx.subset_variable[idx];
            if (var < 0)
                throw UnmatchedPlueckerError("unitary_frieze: " + sub->name() +
                                             " is not a collected cluster or frozen variable");
            const Rational& v = values[var];
            if (!v.is_integer() || v.sign() <= 0)
                throw Error("unitary_frieze: non-positive-integer specialization of " +
                            sub->name());
            f.entry(i, i + d) = v.num();
        }
    }
    ValidationReport rep = validate(f);
    if (!rep.ok()) throw Error("unitary_frieze: specialized grid failed validation");
    return f;
}

UnitaryCensus unitary_census(const GrassmannContext& ctx) {
    UnitaryCensus out;
    out.clusters = ctx.graph.nodes.size();
    std::map<std::string, FriezeGrid> distinct;
    for (std::size_t node = 0; node < ctx.graph.nodes.size(); ++node) {
        FriezeGrid f = unitary_frieze(ctx, static_cast<int>(node));
        distinct.emplace(canonical_key(f), std::move(f));
    }
    for (auto& [key, f] : distinct) out.distinct.push_back(std::move(f));
    return out;
}

UnitaryCensus unitary_census(int k, int n) {
    GrassmannContext ctx = build_grassmann_context(k, n);
    return unitary_census(ctx);
}

}  // namespace frieze
