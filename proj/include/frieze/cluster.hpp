#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frieze/laurent.hpp"
#include "frieze/polygon.hpp"

namespace frieze {

// M x N integer matrix, N mutable rows first; top N x N block skew-symmetric.
struct ExtendedExchangeMatrix {
    int n_mutable = 0;
    std::vector<std::vector<int>> b;  // M rows, N columns

    int total() const { return static_cast<int>(b.size()); }
    void check() const;

    friend bool operator==(const ExtendedExchangeMatrix& x, const ExtendedExchangeMatrix& y) {
        return x.n_mutable == y.n_mutable && x.b == y.b;
    }
};

// Mutation in direction k (1-based, mutable). Involution.
ExtendedExchangeMatrix mutate_matrix(const ExtendedExchangeMatrix& m, int k);

// b_ij = #arrows(i->j) - #arrows(j->i); frozen vertices occupy rows N+1..M.
ExtendedExchangeMatrix quiver_to_matrix(const Quiver& q);
Quiver matrix_to_quiver(const ExtendedExchangeMatrix& m);

struct Seed {
    ExtendedExchangeMatrix matrix;
    std::vector<LaurentPoly> vars;        // M entries, expansions in the initial variables
    std::vector<std::string> var_names;   // names of the M initial variables

    static Seed initial(ExtendedExchangeMatrix m, std::vector<std::string> names = {});
    std::string name_of(int var) const;
};

Seed mutate_seed(const Seed& s, int k);

std::string seed_to_json(const Seed& s);
Seed seed_from_json(const std::string& text);

// Mutation graph explored by BFS from an initial seed; seeds are identified
// by the unordered set of their mutable variables in canonical form.
struct MutationGraph {
    struct Node {
        std::vector<int> cluster;        // sorted mutable variable ids (identity key)
        std::vector<int> var_ids;        // M ids in seed order
        ExtendedExchangeMatrix matrix;
        int parent = -1;                 // BFS tree edge
        int parent_dir = 0;              // 1-based direction used from parent
        std::vector<int> neighbor;       // per direction, -1 until known
    };

    int n_mutable = 0;
    std::vector<Node> nodes;
    std::vector<LaurentPoly> variables;  // variable id -> expansion in initial variables
    std::vector<int> frozen_ids;
    std::vector<std::string> var_names;

    std::size_t cluster_count() const { return nodes.size(); }
    std::size_t variable_count() const;  // distinct mutable cluster variables

    int find_cluster(const std::vector<int>& sorted_ids) const;
    int find_variable(const LaurentPoly& p) const;

    std::map<std::vector<int>, int> cluster_index;
    std::map<std::string, int> variable_index;  // canonical string -> id
};

MutationGraph explore(const Seed& s0, std::size_t max_seeds = 1000000);

// Adjacency-list export: clusters by id with their variable sets and the
// per-direction neighbor ids.
std::string mutation_graph_to_json(const MutationGraph& g);

// epsilon_x for the cluster at `node`: every collected variable (and every
// frozen variable) evaluated with the members of that cluster set to 1.
// Returned by variable id. All values are positive rationals.
std::vector<Rational> specialize_cluster_to_one(const MutationGraph& g, int node);
std::vector<Rational> specialize_cluster_to_one(const MutationGraph& g,
                                                const std::vector<int>& cluster_sorted_ids);

}  // namespace frieze
