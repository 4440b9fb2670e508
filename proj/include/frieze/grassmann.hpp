#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frieze/cluster.hpp"
#include "frieze/grid.hpp"

namespace frieze {

// Strictly increasing k-tuple in [n].
struct KSubset {
    int n = 0;
    std::vector<int> elems;

    KSubset() = default;
    KSubset(int n_, std::vector<int> e);
    int k() const { return static_cast<int>(elems.size()); }
    std::string name() const;  // p124 for single-digit n, p(1,2,10) otherwise
    friend bool operator==(const KSubset& a, const KSubset& b) {
        return a.n == b.n && a.elems == b.elems;
    }
    friend bool operator<(const KSubset& a, const KSubset& b) { return a.elems < b.elems; }
};

// Cyclically consecutive elements modulo n.
bool is_consecutive(const KSubset& s);
// Consecutive (k-1)-subset plus one extra element.
bool is_almost_consecutive(const KSubset& s);

// Interleaving test on I \ J and J \ I.
bool crossing_k(const KSubset& a, const KSubset& b);

// One short Pluecker relation: sum of signed quadratic monomials that
// vanishes identically on maximal minors.
struct PlueckerRelation {
    std::vector<int> small;  // (k-1)-subset J'
    std::vector<int> big;    // (k+1)-subset J
    struct Term {
        int sign;                // +1 / -1 after sorting bookkeeping
        std::vector<int> first;  // sorted k-subset J' + j_r
        std::vector<int> second; // sorted k-subset J - j_r
    };
    std::vector<Term> terms;
};

// All relations with J' and J drawn from [window_lo, window_hi] (defaults to
// all of [n]). Terms with repeated indices are dropped as zero.
std::vector<PlueckerRelation> pluecker_relations(int k, int n, int window_lo = 1,
                                                 int window_hi = -1);

// Index map of the Pluecker frieze: (r, m) -> o([r']^{k-1}, m'); nullopt on
// the degenerate positions where m' collides with the consecutive block
// (rendered as the zero rows).
std::optional<KSubset> frieze_index_opt(int k, int n, long long r, long long m);
KSubset frieze_index(int k, int n, long long r, long long m);  // throws IndexCollisionError

// Symbolic Pluecker frieze view of type (k,n).
struct PlueckerFrieze {
    int k = 0, n = 0;
    bool specialized = false;  // consecutive coordinates rendered as 1
    std::optional<KSubset> label(long long r, long long m) const;
    std::string to_text() const;
};

// Initial seed whose variables are Pluecker coordinates (grid seed for
// general k, which for k = 2 is the fan-triangulation seed up to sign).
struct GrassmannSeed {
    int k = 0, n = 0;
    Seed seed;
    std::vector<KSubset> labels;  // per seed variable
};
GrassmannSeed grassmann_seed(int k, int n);

// Everything needed to evaluate Pluecker coordinates under cluster
// specializations: explored mutation graph plus Laurent expansions of all
// Pluecker coordinates in the initial variables (derived by solving short
// relations with a single unknown).
struct GrassmannContext {
    GrassmannSeed seed;
    MutationGraph graph;
    std::vector<KSubset> all_subsets;
    std::vector<LaurentPoly> expansions;    // aligned with all_subsets
    std::vector<int> subset_variable;       // graph variable id or -1

    int subset_index(const KSubset& s) const;
    const LaurentPoly& expansion(const KSubset& s) const;
};

GrassmannContext build_grassmann_context(int k, int n, std::size_t max_seeds = 1000000);

// Integral tame SL_k frieze from specializing the cluster at `node` to one.
// Throws UnmatchedPlueckerError if some almost-consecutive coordinate is not
// a collected cluster or frozen variable.
FriezeGrid unitary_frieze(const GrassmannContext& ctx, int node);

struct UnitaryCensus {
    std::size_t clusters = 0;
    std::vector<FriezeGrid> distinct;  // sorted by canonical key
};
UnitaryCensus unitary_census(const GrassmannContext& ctx);
UnitaryCensus unitary_census(int k, int n);

}  // namespace frieze
