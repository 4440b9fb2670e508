#include "frieze/cluster.hpp"

#include <algorithm>
#include <deque>
#include <iostream>

#include "json.hpp"

#include "frieze/errors.hpp"

namespace frieze {

void ExtendedExchangeMatrix::check() const {
    const int N = n_mutable, M = total();
    if (N < 0 || M < N) throw Error("ExtendedExchangeMatrix: bad dimensions");
    for (const auto& row : b)
        if (static_cast<int>(row.size()) != N)
            throw Error("ExtendedExchangeMatrix: ragged rows");
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (b[i][j] != -b[j][i])
                throw Error("ExtendedExchangeMatrix: top block is not skew-symmetric");
}

ExtendedExchangeMatrix mutate_matrix(const ExtendedExchangeMatrix& m, int k) {
    if (k < 1 || k > m.n_mutable)
        throw FrozenDirectionError("mutate_matrix: direction " + std::to_string(k) +
                                   " is not mutable");
    const int kk = k - 1;
    ExtendedExchangeMatrix r = m;
    for (int i = 0; i < m.total(); ++i) {
        for (int j = 0; j < m.n_mutable; ++j) {
            if (i == kk || j == kk) {
                r.b[i][j] = -m.b[i][j];
            } else {
                // b_ij + sgn(b_ik) [b_ik b_kj]_+
                int bik = m.b[i][kk], bkj = m.b[kk][j];
                int prod = bik * bkj;
                int sgn = bik > 0 ? 1 : (bik < 0 ? -1 : 0);
                r.b[i][j] = m.b[i][j] + (prod > 0 ? sgn * prod : 0);
            }
        }
    }
    return r;
}

ExtendedExchangeMatrix quiver_to_matrix(const Quiver& q) {
    const int M = static_cast<int>(q.vertices.size());
    int N = 0;
    for (const auto& v : q.vertices) {
        if (!v.frozen) {
            if (v.id != N + 1)
                throw Error("quiver_to_matrix: mutable vertices must come first, ids 1..N");
            ++N;
        }
    }
    ExtendedExchangeMatrix m;
    m.n_mutable = N;
    m.b.assign(M, std::vector<int>(N, 0));
    auto frozen = [&](int id) { return q.vertices[id - 1].frozen; };
    for (const auto& [s, t] : q.arrows) {
        if (s == t) throw LoopOrTwoCycleError("quiver_to_matrix: loop at vertex");
        if (!frozen(t)) m.b[s - 1][t - 1] += 1;
        if (!frozen(s)) m.b[t - 1][s - 1] -= 1;
    }
    // Reject 2-cycles: opposite arrow pairs must not both survive.
    for (const auto& [s, t] : q.arrows) {
        long long forward = std::count(q.arrows.begin(), q.arrows.end(), std::make_pair(s, t));
        long long backward = std::count(q.arrows.begin(), q.arrows.end(), std::make_pair(t, s));
        if (forward > 0 && backward > 0)
            throw LoopOrTwoCycleError("quiver_to_matrix: 2-cycle between vertices");
    }
    m.check();
    return m;
}

Quiver matrix_to_quiver(const ExtendedExchangeMatrix& m) {
    m.check();
    Quiver q;
    for (int i = 0; i < m.total(); ++i) {
        QuiverVertex v;
        v.id = i + 1;
        v.frozen = i >= m.n_mutable;
        q.vertices.push_back(v);
    }
    for (int j = 0; j < m.n_mutable; ++j) {
        for (int i = j + 1; i < m.total(); ++i) {
            int v = m.b[i][j];
            for (int c = 0; c < v; ++c) q.arrows.push_back({i + 1, j + 1});
            for (int c = 0; c < -v; ++c) q.arrows.push_back({j + 1, i + 1});
        }
    }
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

Seed Seed::initial(ExtendedExchangeMatrix m, std::vector<std::string> names) {
    m.check();
    Seed s;
    s.matrix = std::move(m);
    const int M = s.matrix.total();
    for (int i = 0; i < M; ++i) s.vars.push_back(LaurentPoly::variable(i));
    if (names.empty()) {
        for (int i = 0; i < M; ++i) names.push_back(default_variable_name(i));
    }
    if (static_cast<int>(names.size()) != M) throw Error("Seed: wrong number of names");
    s.var_names = std::move(names);
    return s;
}

std::string Seed::name_of(int var) const {
    if (var >= 0 && var < static_cast<int>(var_names.size())) return var_names[var];
    return default_variable_name(var);
}

Seed mutate_seed(const Seed& s, int k) {
    const int N = s.matrix.n_mutable;
    if (k < 1 || k > N)
        throw FrozenDirectionError("mutate_seed: direction " + std::to_string(k) +
                                   " is not mutable");
    const int kk = k - 1;
    LaurentPoly plus = LaurentPoly::constant(Rational(1));
    LaurentPoly minus = LaurentPoly::constant(Rational(1));
    for (int i = 0; i < s.matrix.total(); ++i) {
        int bik = s.matrix.b[i][kk];
        if (bik > 0) plus *= s.vars[i].pow(static_cast<unsigned>(bik));
        if (bik < 0) minus *= s.vars[i].pow(static_cast<unsigned>(-bik));
    }
    LaurentPoly xk;
    try {
        xk = poly_div_exact(plus + minus, s.vars[kk]);
    } catch (const InexactDivisionError&) {
        throw LaurentViolationError("mutate_seed: exchange division was inexact");
    }
    Seed r = s;
    r.vars[kk] = std::move(xk);
    r.matrix = mutate_matrix(s.matrix, k);
    return r;
}

std::string seed_to_json(const Seed& s) {
    nlohmann::json j;
    j["B"] = s.matrix.b;
    j["n_mutable"] = s.matrix.n_mutable;
    j["var_names"] = s.var_names;
    return j.dump();
}

Seed seed_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ExtendedExchangeMatrix m;
    m.n_mutable = j.at("n_mutable").get<int>();
    m.b = j.at("B").get<std::vector<std::vector<int>>>();
    std::vector<std::string> names;
    if (j.contains("var_names")) names = j.at("var_names").get<std::vector<std::string>>();
    return Seed::initial(std::move(m), std::move(names));
}

std::size_t MutationGraph::variable_count() const {
    return variables.size() - frozen_ids.size();
}

int MutationGraph::find_cluster(const std::vector<int>& sorted_ids) const {
    auto it = cluster_index.find(sorted_ids);
    return it == cluster_index.end() ? -1 : it->second;
}

int MutationGraph::find_variable(const LaurentPoly& p) const {
    auto it = variable_index.find(p.to_string());
    return it == variable_index.end() ? -1 : it->second;
}

MutationGraph explore(const Seed& s0, std::size_t max_seeds) {
    s0.matrix.check();
    MutationGraph g;
    g.n_mutable = s0.matrix.n_mutable;
    g.var_names = s0.var_names;

    auto intern = [&](const LaurentPoly& p) {
        std::string key = p.to_string();
        auto it = g.variable_index.find(key);
        if (it != g.variable_index.end()) return it->second;
        int id = static_cast<int>(g.variables.size());
        g.variables.push_back(p);
        g.variable_index.emplace(std::move(key), id);
        return id;
    };

    const int N = g.n_mutable, M = s0.matrix.total();
    std::vector<int> ids;
    for (int i = 0; i < M; ++i) ids.push_back(intern(s0.vars[i]));
    for (int i = N; i < M; ++i) g.frozen_ids.push_back(ids[i]);

    // Seeds keyed by sorted mutable variable ids; frozen part is shared.
    auto cluster_key = [&](const std::vector<int>& var_ids) {
        std::vector<int> key(var_ids.begin(), var_ids.begin() + N);
        std::sort(key.begin(), key.end());
        return key;
    };

    std::vector<Seed> seeds;  // aligned with g.nodes during BFS
    MutationGraph::Node root;
    root.var_ids = ids;
    root.cluster = cluster_key(ids);
    root.matrix = s0.matrix;
    root.neighbor.assign(N, -1);
    g.cluster_index.emplace(root.cluster, 0);
    g.nodes.push_back(std::move(root));
    seeds.push_back(s0);

    std::deque<int> queue{0};
    std::size_t processed = 0;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (++processed % 5000 == 0)
            std::cerr << "explore: " << g.nodes.size() << " clusters so far\n";
        for (int k = 1; k <= N; ++k) {
            if (g.nodes[cur].neighbor[k - 1] != -1) continue;
            Seed next = mutate_seed(seeds[cur], k);
            std::vector<int> nids;
            for (const auto& v : next.vars) nids.push_back(intern(v));
            std::vector<int> key = cluster_key(nids);
            auto it = g.cluster_index.find(key);
            int target;
            if (it != g.cluster_index.end()) {
                target = it->second;
            } else {
                if (g.nodes.size() >= max_seeds)
                    throw BoundExceededError("explore: mutation graph not closed within " +
                                             std::to_string(max_seeds) + " seeds");
                target = static_cast<int>(g.nodes.size());
                MutationGraph::Node node;
                node.var_ids = nids;
                node.cluster = key;
                node.matrix = next.matrix;
                node.parent = cur;
                node.parent_dir = k;
                node.neighbor.assign(N, -1);
                g.cluster_index.emplace(key, target);
                g.nodes.push_back(std::move(node));
                seeds.push_back(std::move(next));
                queue.push_back(target);
            }
            g.nodes[cur].neighbor[k - 1] = target;
        }
        // Only frontier seeds are needed from here on.
        seeds[cur] = Seed();
    }
    return g;
}

std::string mutation_graph_to_json(const MutationGraph& g) {
    nlohmann::json j;
    j["n_mutable"] = g.n_mutable;
    j["clusters"] = nlohmann::json::array();
    j["adjacency"] = nlohmann::json::array();
    for (const auto& node : g.nodes) {
        j["clusters"].push_back(node.cluster);
        j["adjacency"].push_back(node.neighbor);
    }
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : g.variables) vars.push_back(v.to_string());
    j["variables"] = std::move(vars);
    j["frozen_ids"] = g.frozen_ids;
    return j.dump();
}

namespace {

// Exchange on numeric tuples: value of the variable replaced at direction k.
Rational exchange_value(const ExtendedExchangeMatrix& m, const std::vector<Rational>& vals,
                        int k) {
    Rational plus(1), minus(1);
    for (int i = 0; i < m.total(); ++i) {
        int bik = m.b[i][k - 1];
        if (bik > 0) plus *= Rational::pow(vals[i], bik);
        if (bik < 0) minus *= Rational::pow(vals[i], -bik);
    }
    return (plus + minus) / vals[k - 1];
}

}  // namespace

std::vector<Rational> specialize_cluster_to_one(const MutationGraph& g, int node) {
    if (node < 0 || node >= static_cast<int>(g.nodes.size()))
        throw UnknownClusterError("specialize_cluster_to_one: no such cluster");
    const int N = g.n_mutable;
    const int M = N + static_cast<int>(g.frozen_ids.size());

    std::vector<std::vector<int>> children(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (g.nodes[i].parent >= 0) children[g.nodes[i].parent].push_back(static_cast<int>(i));

    std::vector<Rational> values(g.variables.size(), Rational(0));
    std::vector<bool> known(g.variables.size(), false);
    auto record = [&](int id, const Rational& v) {
        if (known[id]) {
            if (values[id] != v)
                throw Error("specialize_cluster_to_one: inconsistent propagated value");
            return;
        }
        if (v.sign() <= 0) throw Error("specialize_cluster_to_one: non-positive value");
        known[id] = true;
        values[id] = v;
    };

    // Tuples per BFS-tree node, rooted at the chosen cluster (all ones there).
    std::vector<std::vector<Rational>> tuple(g.nodes.size());
    std::vector<bool> done(g.nodes.size(), false);
    tuple[node].assign(M, Rational(1));
    done[node] = true;
    for (int i = 0; i < M; ++i) record(g.nodes[node].var_ids[i], tuple[node][i]);

    std::deque<int> queue{node};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        auto visit = [&](int other, int dir, const ExtendedExchangeMatrix& mat_of_known) {
            if (done[other]) return;
            std::vector<Rational> t = tuple[cur];
            t[dir - 1] = exchange_value(mat_of_known, tuple[cur], dir);
            tuple[other] = std::move(t);
            done[other] = true;
            for (int i = 0; i < M; ++i) record(g.nodes[other].var_ids[i], tuple[other][i]);
            queue.push_back(other);
        };
        // Tree edges downward and the one upward edge; mutation is an
        // involution, so the known side's matrix drives the exchange.
        for (int c : children[cur]) visit(c, g.nodes[c].parent_dir, g.nodes[cur].matrix);
        if (g.nodes[cur].parent >= 0)
            visit(g.nodes[cur].parent, g.nodes[cur].parent_dir, g.nodes[cur].matrix);
        tuple[cur].clear();  // free memory as we go
    }

    for (std::size_t id = 0; id < values.size(); ++id)
        if (!known[id]) throw Error("specialize_cluster_to_one: unreached variable");
    return values;
}

std::vector<Rational> specialize_cluster_to_one(const MutationGraph& g,
                                                const std::vector<int>& cluster_sorted_ids) {
    int node = g.find_cluster(cluster_sorted_ids);
    if (node < 0) throw UnknownClusterError("specialize_cluster_to_one: unknown cluster");
    return specialize_cluster_to_one(g, node);
}

}  // namespace frieze
