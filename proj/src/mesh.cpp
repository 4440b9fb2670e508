#include "frieze/mesh.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "dynkin_data.hpp"
#include "frieze/errors.hpp"

namespace frieze {

std::vector<std::vector<int>> TranslationQuiver::out_neighbors() const {
    std::vector<std::vector<int>> out(size());
    for (const auto& [s, t] : arrows) out[s].push_back(t);
    for (auto& v : out) std::sort(v.begin(), v.end());
    return out;
}

std::vector<std::vector<int>> TranslationQuiver::in_neighbors() const {
    std::vector<std::vector<int>> in(size());
    for (const auto& [s, t] : arrows) in[t].push_back(s);
    for (auto& v : in) std::sort(v.begin(), v.end());
    return in;
}

void TranslationQuiver::validate() const {
    const int V = static_cast<int>(size());
    if (static_cast<int>(tau.size()) != V || static_cast<int>(proj_inj.size()) != V)
        throw Error("TranslationQuiver: field sizes disagree");
    for (const auto& [s, t] : arrows)
        if (s < 0 || s >= V || t < 0 || t >= V)
            throw Error("TranslationQuiver: arrow endpoint out of range");
    auto in = in_neighbors();
    auto out = out_neighbors();
    for (int c = 0; c < V; ++c) {
        if (proj_inj[c]) {
            if (tau[c] != -1) throw Error("TranslationQuiver: tau defined on projective");
            continue;
        }
        if (tau[c] < 0 || tau[c] >= V)
            throw Error("TranslationQuiver: missing tau at vertex " + labels[c]);
        if (in[c] != out[tau[c]])
            throw Error("TranslationQuiver: malformed mesh at vertex " + labels[c]);
    }
}

std::string TranslationQuiver::to_tq() const {
    std::ostringstream os;
    for (std::size_t v = 0; v < size(); ++v) {
        os << "vertex " << labels[v];
        if (proj_inj[v]) os << " pi";
        os << "\n";
    }
    for (const auto& [s, t] : arrows) os << "arrow " << labels[s] << " " << labels[t] << "\n";
    for (std::size_t v = 0; v < size(); ++v)
        if (tau[v] >= 0) os << "tau " << labels[v] << " " << labels[tau[v]] << "\n";
    return os.str();
}

TranslationQuiver TranslationQuiver::from_tq(const std::string& text) {
    TranslationQuiver q;
    std::map<std::string, int> index;
    std::istringstream is(text);
    std::string line;
    auto vertex_of = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) throw ParseError("translation quiver: unknown vertex " + name);
        return it->second;
    };
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind.empty() || kind[0] == '#') continue;
        if (kind == "vertex") {
            std::string name, flag;
            ls >> name;
            bool pi = (ls >> flag) && flag == "pi";
            index[name] = static_cast<int>(q.labels.size());
            q.labels.push_back(name);
            q.proj_inj.push_back(pi);
            q.tau.push_back(-1);
        } else if (kind == "arrow") {
            std::string a, b;
            ls >> a >> b;
            q.arrows.push_back({vertex_of(a), vertex_of(b)});
        } else if (kind == "tau") {
            std::string c, a;
            ls >> c >> a;
            q.tau[vertex_of(c)] = vertex_of(a);
        } else {
            throw ParseError("translation quiver: unknown line kind '" + kind + "'");
        }
    }
    q.validate();
    return q;
}

TranslationQuiver ar_quiver_c2n(int n) {
    if (n < 4) throw Error("ar_quiver_c2n: n >= 4 required");
    TranslationQuiver q;
    std::map<std::pair<int, int>, int> index;
    auto norm = [&](long long a, long long b) {
        int x = static_cast<int>(((a - 1) % n + n) % n) + 1;
        int y = static_cast<int>(((b - 1) % n + n) % n) + 1;
        return std::pair<int, int>(std::min(x, y), std::max(x, y));
    };
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            index[{a, b}] = static_cast<int>(q.labels.size());
            q.labels.push_back("M_" + std::to_string(a) + "_" + std::to_string(b));
            q.proj_inj.push_back(Arc(a, b).is_boundary(n));
            q.tau.push_back(-1);
        }
    for (const auto& [pair, v] : index) {
        auto [a, b] = pair;
        auto up = norm(a, b + 1);
        if (up.first != up.second) q.arrows.push_back({v, index.at(up)});
        auto right = norm(a + 1, b);
        if (right.first != right.second) q.arrows.push_back({v, index.at(right)});
        if (!q.proj_inj[v]) q.tau[v] = index.at(norm(a - 1, b - 1));
    }
    std::sort(q.arrows.begin(), q.arrows.end());
    q.validate();
    return q;
}

TranslationQuiver stable_part(const TranslationQuiver& q) {
    TranslationQuiver r;
    std::vector<int> remap(q.size(), -1);
    for (std::size_t v = 0; v < q.size(); ++v) {
        if (q.proj_inj[v]) continue;
        remap[v] = static_cast<int>(r.labels.size());
        r.labels.push_back(q.labels[v]);
        r.proj_inj.push_back(false);
        r.tau.push_back(-1);
    }
    for (const auto& [s, t] : q.arrows)
        if (remap[s] >= 0 && remap[t] >= 0) r.arrows.push_back({remap[s], remap[t]});
    for (std::size_t v = 0; v < q.size(); ++v)
        if (remap[v] >= 0 && q.tau[v] >= 0 && remap[q.tau[v]] >= 0)
            r.tau[remap[v]] = remap[q.tau[v]];
    r.validate();
    return r;
}

TranslationQuiver dynkin_translation_quiver(const std::string& type) {
    if (!type.empty() && (type[0] == 'A' || type[0] == 'a')) {
        int m = std::stoi(type.substr(1));
        if (m < 1) throw UnknownTypeError("dynkin_translation_quiver: bad rank " + type);
        return stable_part(ar_quiver_c2n(m + 3));
    }
    std::string t;
    for (char c : type) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (t == "D4") return TranslationQuiver::from_tq(kDynkinD4Tq);
    if (t == "E6") return TranslationQuiver::from_tq(kDynkinE6Tq);
    if (t == "E8") return TranslationQuiver::from_tq(kDynkinE8Tq);
    throw UnknownTypeError("dynkin_translation_quiver: unknown type " + type);
}

std::map<std::string, long long> MeshFrieze::by_label(const TranslationQuiver& q) const {
    std::map<std::string, long long> out;
    for (std::size_t v = 0; v < values.size(); ++v) out[q.labels[v]] = values[v];
    return out;
}

std::string MeshFrieze::to_json(const TranslationQuiver& q) const {
    nlohmann::json j;
    for (const auto& [label, v] : by_label(q)) j[label] = v;
    return j.dump();
}

namespace {

constexpr long long kMeshValueLimit = 1000000000000LL;

struct SolveStep {
    int center;   // non-projective vertex whose mesh is used
    int unknown;  // the single unknown vertex of that mesh
};

struct MeshPlan {
    // Knitting schedule: steps [0, phase[0]) need no slice values; steps
    // [phase[t], phase[t+1]) become solvable once slice[t] is assigned.
    std::vector<int> slice;
    std::vector<SolveStep> steps;
    std::vector<std::size_t> phase;  // length slice.size() + 1
    // When rooted at a one-middle mesh A*C = B + 1, slice[0] is B and
    // slice[1] is A, whose values range over the divisors of B + 1.
    bool divisor_root = false;
};

// Greedy generating set. Meshes are solved for whichever single vertex is
// still unknown (start, end, or a middle); when stuck, the next slice member
// is the unknown vertex with the most known neighbours so that divisibility
// checks prune the search as early as possible.
MeshPlan make_plan(const TranslationQuiver& q, int rotation) {
    const int V = static_cast<int>(q.size());
    auto in = q.in_neighbors();
    auto out = q.out_neighbors();
    std::vector<bool> known(V, false);
    for (int v = 0; v < V; ++v) known[v] = q.proj_inj[v];
    MeshPlan plan;
    int remaining = static_cast<int>(std::count(known.begin(), known.end(), false));

    auto knit_everything_possible = [&]() {
        bool progress = true;
        while (progress) {
            progress = false;
            for (int c = 0; c < V; ++c) {
                if (q.proj_inj[c] || q.tau[c] < 0) continue;
                int unknown = -1, count = 0;
                auto consider = [&](int v) {
                    if (!known[v]) {
                        ++count;
                        if (unknown == -1) unknown = v;
                        else if (unknown != v) unknown = -2;
                    }
                };
                consider(q.tau[c]);
                consider(c);
                for (int b : in[c]) consider(b);
                // A middle repeated among the unknowns cannot be solved
                // multiplicatively in one step.
                if (count != 1 || unknown < 0) continue;
                known[unknown] = true;
                plan.steps.push_back({c, unknown});
                --remaining;
                progress = true;
            }
        }
    };

    knit_everything_possible();
    plan.phase.push_back(plan.steps.size());
    // Root the search at a one-middle mesh when possible: its three values
    // satisfy A*C = B + 1, so the second coordinate ranges over divisors
    // rather than the whole bound interval.
    for (int c = 0; c < V && remaining > 0; ++c) {
        if (q.proj_inj[c] || q.tau[c] < 0) continue;
        if (in[c].size() != 1) continue;
        int a = q.tau[c], b = in[c][0];
        if (known[a] || known[b] || known[c]) continue;
        if (a == b || b == c) continue;
        plan.divisor_root = true;
        plan.slice.push_back(b);
        known[b] = true;
        --remaining;
        knit_everything_possible();
        plan.phase.push_back(plan.steps.size());
        plan.slice.push_back(a);
        known[a] = true;
        --remaining;
        knit_everything_possible();
        plan.phase.push_back(plan.steps.size());
        break;
    }
    // Mesh participant lists (with multiplicity) for the pick lookahead.
    std::vector<std::vector<int>> mesh_members;
    for (int c = 0; c < V; ++c) {
        if (q.proj_inj[c] || q.tau[c] < 0) continue;
        std::vector<int> members{q.tau[c], c};
        for (int b : in[c]) members.push_back(b);
        mesh_members.push_back(std::move(members));
    }
    while (remaining > 0) {
        // Prefer the unknown vertex whose assignment turns the most meshes
        // into single-unknown solve steps; earlier propagation means earlier
        // pruning during the value search.
        int pick = -1, best_solves = -1, best_degree = -1;
        for (int off = 0; off < V; ++off) {
            int v = (off + rotation) % V;
            if (known[v]) continue;
            int solves = 0;
            for (const auto& members : mesh_members) {
                int unknown_occurrences = 0, mine = 0;
                for (int u : members) {
                    if (!known[u]) ++unknown_occurrences;
                    if (u == v) ++mine;
                }
                if (mine >= 1 && unknown_occurrences - mine == 1) ++solves;
            }
            int degree = 0;
            for (int u : in[v]) degree += known[u];
            for (int u : out[v]) degree += known[u];
            if (q.tau[v] >= 0) degree += known[q.tau[v]];
            if (solves > best_solves || (solves == best_solves && degree > best_degree)) {
                best_solves = solves;
                best_degree = degree;
                pick = v;
            }
        }
        if (pick < 0) throw NoSliceFoundError("mesh enumeration: no slice found");
        plan.slice.push_back(pick);
        known[pick] = true;
        --remaining;
        knit_everything_possible();
        plan.phase.push_back(plan.steps.size());
    }
    return plan;
}

}  // namespace

std::vector<MeshFrieze> mesh_frieze_enumerate(const TranslationQuiver& q, long long bound,
                                              MeshEnumerationReport* report, int slice_rotation,
                                              int threads) {
    q.validate();
    const int V = static_cast<int>(q.size());
    auto in = q.in_neighbors();
    MeshPlan plan = make_plan(q, slice_rotation);
    const std::size_t S = plan.slice.size();

    struct Worker {
        std::vector<long long> value;
        std::vector<MeshFrieze> out;
        MeshEnumerationReport rep;
    };
    int nthreads = static_cast<int>(std::max<long long>(1, std::min<long long>(threads, bound)));
    std::vector<Worker> workers(nthreads);

    auto knit_range = [&](Worker& wk, std::size_t lo, std::size_t hi) -> bool {
        for (std::size_t t = lo; t < hi; ++t) {
            const SolveStep& step = plan.steps[t];
            int c = step.center;
            int a = q.tau[c];
            long long num, den;
            if (step.unknown == c || step.unknown == a) {
                long long prod = 1;
                for (int b : in[c]) {
                    prod *= wk.value[b];
                    if (prod > kMeshValueLimit) {
                        ++wk.rep.overflow_rejects;
                        return false;
                    }
                }
                num = prod + 1;
                den = wk.value[step.unknown == c ? a : c];
            } else {
                long long prod = 1;
                bool skipped = false;
                for (int b : in[c]) {
                    if (b == step.unknown && !skipped) {
                        skipped = true;
                        continue;
                    }
                    prod *= wk.value[b];
                    if (prod > kMeshValueLimit) {
                        ++wk.rep.overflow_rejects;
                        return false;
                    }
                }
                if (wk.value[a] > kMeshValueLimit / wk.value[c]) {
                    ++wk.rep.overflow_rejects;
                    return false;
                }
                num = wk.value[a] * wk.value[c] - 1;
                den = prod;
            }
            if (num <= 0 || num % den != 0) return false;
            wk.value[step.unknown] = num / den;
        }
        return true;
    };

    auto final_check = [&](Worker& wk) -> bool {
        for (int c = 0; c < V; ++c) {
            if (q.proj_inj[c]) {
                if (wk.value[c] != 1) return false;
                continue;
            }
            long long prod = 1;
            for (int b : in[c]) {
                prod *= wk.value[b];
                if (prod > kMeshValueLimit) return false;
            }
            if (wk.value[q.tau[c]] * wk.value[c] != prod + 1) return false;
        }
        return true;
    };

    auto divisors_upto = [&](long long k, long long cap) {
        std::vector<long long> out;
        for (long long d = 1; d * d <= k; ++d) {
            if (k % d != 0) continue;
            if (d <= cap) out.push_back(d);
            long long e = k / d;
            if (e != d && e <= cap) out.push_back(e);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    // Values v in [1, cap] with v * a = c (mod m).
    auto progression = [&](long long a, long long c, long long m, long long cap) {
        std::vector<long long> out;
        a %= m;
        if (a < 0) a += m;
        c %= m;
        if (c < 0) c += m;
        std::function<long long(long long, long long, long long&, long long&)> ext =
            [&](long long x, long long y, long long& s, long long& t2) -> long long {
            if (y == 0) {
                s = 1;
                t2 = 0;
                return x;
            }
            long long s1, t1;
            long long g = ext(y, x % y, s1, t1);
            s = t1;
            t2 = s1 - (x / y) * t1;
            return g;
        };
        long long s, tt;
        long long g = ext(a == 0 ? m : a, m, s, tt);
        if (a == 0) {
            if (c != 0) return out;
            for (long long v = 1; v <= cap; ++v) out.push_back(v);
            return out;
        }
        if (c % g != 0) return out;
        long long step = m / g;
        long long v0 = ((__int128)(s % step) * ((c / g) % step)) % step;
        if (v0 <= 0) v0 += step;
        for (long long v = v0; v <= cap; v += step) out.push_back(v);
        return out;
    };

    // Admissible values for slice[t]: the first solve step it enables pins a
    // divisor set or an arithmetic progression; plain interval otherwise.
    auto slice_candidates = [&](Worker& wk, std::size_t t) -> std::vector<long long> {
        int v = plan.slice[t];
        if (plan.phase[t] >= plan.phase[t + 1]) {
            std::vector<long long> all;
            for (long long x = 1; x <= bound; ++x) all.push_back(x);
            return all;
        }
        const SolveStep& step = plan.steps[plan.phase[t]];
        int c = step.center;
        int a = q.tau[c];
        int u = step.unknown;
        bool v_end = (v == a || v == c);
        bool u_end = (u == a || u == c);
        int v_mid_count = 0;
        for (int b : in[c]) v_mid_count += (b == v);
        // Fall back when v is not a simple single participant of the mesh.
        if ((!v_end && v_mid_count != 1) || (v_end && v_mid_count > 0) || v == u) {
            std::vector<long long> all;
            for (long long x = 1; x <= bound; ++x) all.push_back(x);
            return all;
        }
        if (v_end && u_end) {
            long long k = 1;
            for (int b : in[c]) {
                k *= wk.value[b];
                if (k > kMeshValueLimit) return {};
            }
            return divisors_upto(k + 1, bound);
        }
        if (v_end && !u_end) {
            // (v * other_end - 1) must be divisible by the other middles.
            long long other_end = wk.value[v == a ? c : a];
            long long d = 1;
            bool skipped = false;
            for (int b : in[c]) {
                if (b == u && !skipped) {
                    skipped = true;
                    continue;
                }
                d *= wk.value[b];
                if (d > kMeshValueLimit) return {};
            }
            return progression(other_end, 1, d, bound);
        }
        if (!v_end && u_end) {
            // (v * rest + 1) must be divisible by the known endpoint.
            long long known_end = wk.value[u == a ? c : a];
            long long r = 1;
            bool skipped = false;
            for (int b : in[c]) {
                if (b == v && !skipped) {
                    skipped = true;
                    continue;
                }
                r *= wk.value[b];
                if (r > kMeshValueLimit) return {};
            }
            return progression(r, -1, known_end, bound);
        }
        // Both middles: v * u * rest = A*C - 1.
        long long k = wk.value[a] * wk.value[c] - 1;
        if (k <= 0) return {};
        long long r = 1;
        bool skip_u = false, skip_v = false;
        for (int b : in[c]) {
            if (b == u && !skip_u) {
                skip_u = true;
                continue;
            }
            if (b == v && !skip_v) {
                skip_v = true;
                continue;
            }
            r *= wk.value[b];
            if (r > kMeshValueLimit) return {};
        }
        if (k % r != 0) return {};
        return divisors_upto(k / r, bound);
    };

    auto dfs = [&](auto&& self, Worker& wk, std::size_t t, long long first_lo,
                   long long first_hi) -> void {
        if (t == S) {
            if (!final_check(wk)) return;
            MeshFrieze f;
            f.values = wk.value;
            long long mx = 0;
            for (std::size_t si = 0; si < plan.slice.size(); ++si) {
                if (plan.divisor_root && si == 1) continue;  // divisor-driven, complete
                mx = std::max(mx, wk.value[plan.slice[si]]);
            }
            wk.rep.max_seed_value = std::max(wk.rep.max_seed_value, mx);
            if (mx == bound) wk.rep.bound_ceiling_reached = true;
            wk.out.push_back(std::move(f));
            return;
        }
        std::vector<long long> candidates;
        if (t == 0) {
            for (long long v = first_lo; v <= first_hi; ++v) candidates.push_back(v);
        } else {
            candidates = slice_candidates(wk, t);
        }
        for (long long v : candidates) {
            wk.value[plan.slice[t]] = v;
            // Knit everything that this slice value just made solvable.
            if (!knit_range(wk, plan.phase[t], plan.phase[t + 1])) continue;
            self(self, wk, t + 1, first_lo, first_hi);
        }
    };

    auto run = [&](int tid) {
        Worker& wk = workers[tid];
        wk.value.assign(V, 1);  // projective-injectives pinned to one
        if (!knit_range(wk, 0, plan.phase[0])) return;  // slice-independent prefix
        if (S == 0) {
            if (tid == 0 && final_check(wk)) {
                MeshFrieze f;
                f.values = wk.value;
                wk.out.push_back(std::move(f));
            }
            return;
        }
        for (long long v = 1 + tid; v <= bound; v += nthreads)
            dfs(dfs, wk, 0, v, v);
    };

    if (nthreads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    std::vector<MeshFrieze> out;
    MeshEnumerationReport rep;
    rep.bound = bound;
    rep.slice = plan.slice;
    rep.phases = plan.phase;
    for (Worker& wk : workers) {
        for (auto& f : wk.out) out.push_back(std::move(f));
        rep.max_seed_value = std::max(rep.max_seed_value, wk.rep.max_seed_value);
        rep.bound_ceiling_reached = rep.bound_ceiling_reached || wk.rep.bound_ceiling_reached;
        rep.overflow_rejects += wk.rep.overflow_rejects;
    }
    std::sort(out.begin(), out.end(),
              [](const MeshFrieze& a, const MeshFrieze& b) { return a.values < b.values; });
    rep.count = out.size();
    if (report) *report = rep;
    return out;
}

std::vector<MeshFrieze> mesh_frieze_enumerate_stable(const TranslationQuiver& q,
                                                     MeshEnumerationReport* report, long long start,
                                                     int threads) {
    long long bound = start;
    std::vector<MeshFrieze> prev;
    bool have_prev = false;
    while (true) {
        MeshEnumerationReport rep;
        std::vector<MeshFrieze> cur = mesh_frieze_enumerate(q, bound, &rep, 0, threads);
        if (have_prev && prev.size() == cur.size() && !rep.bound_ceiling_reached) {
            if (report) *report = rep;
            return cur;
        }
        prev = std::move(cur);
        have_prev = true;
        bound *= 2;
        if (bound > (1LL << 22))
            throw BoundExceededError("mesh enumeration: count did not stabilize");
    }
}

bool ext_vanishes(const RankOneObject& x, const RankOneObject& y) {
    if (x.n != y.n) throw Error("ext_vanishes: mismatched n");
    if (x.pair.is_boundary(x.n) || y.pair.is_boundary(y.n)) return true;
    return !crossing(x.pair, y.pair);
}

ClusterTiltingObject ClusterTiltingObject::from_summands(int n, const std::vector<Arc>& summands) {
    std::vector<Arc> boundary_expected;
    for (int i = 1; i < n; ++i) boundary_expected.push_back(Arc(i, i + 1));
    boundary_expected.push_back(Arc(1, n));
    std::sort(boundary_expected.begin(), boundary_expected.end());

    std::vector<Arc> diags, boundary;
    for (const Arc& a : summands)
        (a.is_boundary(n) ? boundary : diags).push_back(a);
    std::sort(boundary.begin(), boundary.end());
    if (boundary != boundary_expected)
        throw InvalidTiltingError("ClusterTiltingObject: boundary summands must be all n pairs");
    if (static_cast<int>(summands.size()) != 2 * n - 3)
        throw InvalidTiltingError("ClusterTiltingObject: expected 2n-3 summands");
    try {
        ClusterTiltingObject t;
        t.diagonals = Triangulation(n, std::move(diags));
        return t;
    } catch (const Error& e) {
        throw InvalidTiltingError(std::string("ClusterTiltingObject: ") + e.what());
    }
}

TiltingFrieze frieze_of_tilting(const ClusterTiltingObject& t) {
    const Triangulation& T = t.diagonals;
    const int n = T.n, w = n - 3;

    // Variable ids: diagonals (sorted) then boundary arcs (sorted).
    std::vector<Arc> all_arcs = T.diagonals;
    std::vector<Arc> boundary;
    for (int i = 1; i < n; ++i) boundary.push_back(Arc(i, i + 1));
    boundary.push_back(Arc(1, n));
    std::sort(boundary.begin(), boundary.end());
    all_arcs.insert(all_arcs.end(), boundary.begin(), boundary.end());
    std::map<Arc, int> var_of;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < all_arcs.size(); ++i) {
        var_of[all_arcs[i]] = static_cast<int>(i);
        names.push_back("p" + std::to_string(all_arcs[i].a) + std::to_string(all_arcs[i].b));
    }

    LaurentFriezeGrid g(2, w);
    LaurentCoefficientSequence coeffs(n);
    for (int i = 1; i <= n; ++i) {
        Arc b = i < n ? Arc(i, i + 1) : Arc(1, n);
        coeffs.c_mut(i) = LaurentPoly::variable(var_of.at(b));
    }
    // Coefficient rows replace the 1-rows: t(i,i) = c_{i,i+1}, shifted below.
    for (int i = 1; i <= n; ++i) {
        g.entry(i, i) = coeffs.c(i);
        g.entry(i, i + w + 1) = coeffs.c(i - 1);
    }
    // Summand diagonals carry their own variable; every other arc picks up
    // its character by walking the flip graph with seed mutation (the seed
    // position of a flipped diagonal holds exactly that arc's value).
    std::map<Arc, LaurentPoly> zeta;
    for (const Arc& d : T.diagonals) zeta[d] = LaurentPoly::variable(var_of.at(d));

    const std::size_t want = static_cast<std::size_t>(n) * (n - 3) / 2;
    if (zeta.size() < want) {
        Seed seed0 = Seed::initial(quiver_to_matrix(quiver_of(T, true)), names);
        struct Node {
            Triangulation t;
            std::vector<Arc> arcs;  // mutable position -> diagonal
            Seed seed;
        };
        std::deque<Node> queue;
        std::set<std::string> seen{T.to_string()};
        queue.push_back({T, T.diagonals, seed0});
        while (!queue.empty() && zeta.size() < want) {
            Node cur = std::move(queue.front());
            queue.pop_front();
            for (int k = 0; k < n - 3 && zeta.size() < want; ++k) {
                auto [next, flipped] = flip(cur.t, cur.arcs[k]);
                if (!seen.insert(next.to_string()).second) continue;
                Seed mutated = mutate_seed(cur.seed, k + 1);
                if (!zeta.count(flipped)) zeta.emplace(flipped, mutated.vars[k]);
                std::vector<Arc> arcs = cur.arcs;
                arcs[k] = flipped;
                queue.push_back({std::move(next), std::move(arcs), std::move(mutated)});
            }
        }
        if (zeta.size() < want) throw Error("frieze_of_tilting: flip walk did not close");
    }

    auto arc_at = [&](long long i, long long j) {  // vertex pair of m_{i, j+1}
        int a = g.mod_n(i - 1) + 1;
        int b = g.mod_n(j) + 1;
        return Arc(a, b);
    };
    for (int i = 1; i <= n; ++i)
        for (int d = 1; d <= w; ++d) g.entry(i, i + d) = zeta.at(arc_at(i, i + d));

    TiltingFrieze out{std::move(g), std::move(coeffs), names, FriezeGrid(2, w)};
    std::map<int, Rational> ones;
    for (std::size_t v = 0; v < all_arcs.size(); ++v) ones[static_cast<int>(v)] = Rational(1);
    for (int i = 1; i <= n; ++i) {
        for (int d = 1; d <= w; ++d) {
            Rational val = out.symbolic.at(i, i + d).eval(ones);
            if (!val.is_integer() || val.sign() <= 0)
                throw Error("frieze_of_tilting: non-positive-integer specialization");
            out.specialized.entry(i, i + d) = val.num();
        }
    }
    return out;
}

long long submodule_count(const ClusterTiltingObject& t, const RankOneObject& m) {
    const Triangulation& T = t.diagonals;
    if (m.n != T.n) throw Error("submodule_count: mismatched n");
    if (t.is_summand(m.pair))
        throw SummandHasNoModuleError("submodule_count: " + m.pair.to_string() +
                                      " is a summand of T");
    std::vector<Arc> crossed;
    for (const Arc& d : T.diagonals)
        if (crossing(d, m.pair)) crossed.push_back(d);
    if (crossed.empty())
        throw SummandHasNoModuleError("submodule_count: position crosses no diagonal");

    // Order the crossed diagonals into the string via shared faces.
    auto fs = faces(T);
    auto share_face = [&](const Arc& x, const Arc& y) {
        for (const auto& f : fs) {
            Arc sides[3] = {Arc(f[0], f[1]), Arc(f[1], f[2]), Arc(f[0], f[2])};
            bool hx = false, hy = false;
            for (const Arc& s : sides) {
                if (s == x) hx = true;
                if (s == y) hy = true;
            }
            if (hx && hy) return true;
        }
        return false;
    };
    const std::size_t L = crossed.size();
    std::vector<std::vector<std::size_t>> adj(L);
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = i + 1; j < L; ++j)
            if (share_face(crossed[i], crossed[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<std::size_t> order;
    if (L == 1) {
        order.push_back(0);
    } else {
        std::size_t start = L;
        for (std::size_t i = 0; i < L; ++i)
            if (adj[i].size() == 1) {
                start = i;
                break;
            }
        if (start == L) throw Error("submodule_count: crossed diagonals do not form a string");
        std::vector<bool> used(L, false);
        order.push_back(start);
        used[start] = true;
        while (order.size() < L) {
            std::size_t cur = order.back();
            std::size_t next = L;
            for (std::size_t cand : adj[cur])
                if (!used[cand]) next = cand;
            if (next == L) throw Error("submodule_count: string walk got stuck");
            order.push_back(next);
            used[next] = true;
        }
    }

    // Arrow direction between consecutive string vertices from the quiver.
    Quiver q = quiver_of(T, false);
    std::map<Arc, int> vid;
    for (std::size_t i = 0; i < T.diagonals.size(); ++i) vid[T.diagonals[i]] = static_cast<int>(i) + 1;
    auto arrow_forward = [&](const Arc& x, const Arc& y) {
        int sx = vid.at(x), sy = vid.at(y);
        for (const auto& [s, tt] : q.arrows)
            if (s == sx && tt == sy) return true;
        return false;
    };

    // Count downward-closed subsets of the fence: arrow u -> v forces
    // (u in S => v in S).
    long long none = 1, taken = 1;  // ideals of the prefix with last not in / in S
    for (std::size_t t2 = 1; t2 < order.size(); ++t2) {
        bool fwd = arrow_forward(crossed[order[t2 - 1]], crossed[order[t2]]);
        long long n_none, n_taken;
        if (fwd) {
            // prev in S forces cur in S
            n_taken = none + taken;
            n_none = none;
        } else {
            // cur in S forces prev in S
            n_taken = taken;
            n_none = none + taken;
        }
        none = n_none;
        taken = n_taken;
    }
    return none + taken;
}

std::pair<CutSide, CutSide> iy_cut(const Triangulation& t, const Arc& d) {
    if (d.is_boundary(t.n) || d.a < 1 || d.b > t.n || d.b - d.a < 2 || (d.a == 1 && d.b == t.n))
        throw NotADiagonalError("iy_cut: " + d.to_string() + " is not a diagonal");
    FriezeGrid full = frieze_of(t);
    bool in_t = t.contains(d);
    BigInteger cut_value = full.arc_entry(d.a, d.b);

    auto build_side = [&](std::vector<int> verts) {
        CutSide side;
        side.vertex_map = verts;
        const int n1 = static_cast<int>(verts.size());
        const int w1 = n1 - 3;
        side.with_coefficients = !in_t;
        side.coeffs = CoefficientSequence(n1);
        side.coeffs.c_mut(n1) = cut_value;  // the cut edge (n1, 1)
        if (in_t) {
            std::vector<Arc> diags;
            for (const Arc& x : t.diagonals) {
                if (x == d) continue;
                auto pa = std::find(verts.begin(), verts.end(), x.a);
                auto pb = std::find(verts.begin(), verts.end(), x.b);
                if (pa != verts.end() && pb != verts.end()) {
                    Arc relabeled(static_cast<int>(pa - verts.begin()) + 1,
                                  static_cast<int>(pb - verts.begin()) + 1);
                    if (!relabeled.is_boundary(n1)) diags.push_back(relabeled);
                }
            }
            side.grid = frieze_of(Triangulation(n1, std::move(diags)));
            return side;
        }
        // Restriction of the original frieze, with the cut arc's value in the
        // coefficient rows.
        FriezeGrid g(2, w1);
        auto orig = [&](long long v) {  // sub-vertex (any integer) -> original label
            long long m = (v - 1) % n1;
            if (m < 0) m += n1;
            return verts[static_cast<std::size_t>(m)];
        };
        for (int i = 1; i <= n1; ++i) {
            for (int dd = 0; dd <= w1 + 1; ++dd) {
                long long u = i, v = i + dd + 1;  // arc of m_{u,v}
                int ou = orig(u), ov = orig(v);
                if (ou == ov) throw Error("iy_cut: degenerate arc");
                g.entry(i, i + dd) = full.arc_entry(std::min(ou, ov), std::max(ou, ov));
            }
        }
        side.grid = std::move(g);
        return side;
    };

    std::vector<int> side1, side2;
    for (int v = d.a; v <= d.b; ++v) side1.push_back(v);
    for (int v = d.b; v <= t.n; ++v) side2.push_back(v);
    for (int v = 1; v <= d.a; ++v) side2.push_back(v);
    return {build_side(std::move(side1)), build_side(std::move(side2))};
}

}  // namespace frieze
