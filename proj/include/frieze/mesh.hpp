#pragma once

#include <map>
#include <string>
#include <vector>

#include "frieze/grassmann.hpp"
#include "frieze/polygon.hpp"

namespace frieze {

// Finite translation quiver: vertices, arrow multiset, partial translation
// tau, projective-injective marks. Well-formedness: for every vertex c with
// tau defined, the in-arrows of c match the out-arrows of tau(c).
struct TranslationQuiver {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> arrows;
    std::vector<int> tau;        // -1 when undefined
    std::vector<bool> proj_inj;

    std::size_t size() const { return labels.size(); }
    std::vector<std::vector<int>> out_neighbors() const;
    std::vector<std::vector<int>> in_neighbors() const;
    void validate() const;

    // Text format: "vertex <id> [pi]", "arrow <src> <dst>", "tau <c> <a>".
    std::string to_tq() const;
    static TranslationQuiver from_tq(const std::string& text);
};

// AR quiver of the rank-one combinatorial model of C(2,n): vertices are the
// 2-subsets {a,b} of [n], arrows {a,b} -> {a,b+1} and {a,b} -> {a+1,b}
// (mod n), tau{a,b} = {a-1,b-1}; boundary pairs are projective-injective.
TranslationQuiver ar_quiver_c2n(int n);

// Drops the projective-injective vertices.
TranslationQuiver stable_part(const TranslationQuiver& q);

// A<m> is derived from ar_quiver_c2n(m+3); D4/E6/E8 are shipped data tables.
TranslationQuiver dynkin_translation_quiver(const std::string& type);

struct MeshFrieze {
    std::vector<long long> values;  // per vertex
    std::map<std::string, long long> by_label(const TranslationQuiver& q) const;
    std::string to_json(const TranslationQuiver& q) const;
};

struct MeshEnumerationReport {
    std::size_t count = 0;
    long long bound = 0;
    long long max_seed_value = 0;  // largest slice value over accepted friezes
    bool bound_ceiling_reached = false;
    unsigned long long overflow_rejects = 0;
    std::vector<int> slice;
    std::vector<std::size_t> phases;  // solve steps available after each slice member
};

// All mesh friezes with slice values in [1, bound]. The slice is a greedy
// generating set (deterministic given `slice_rotation`); knitted values are
// not capped by the bound.
std::vector<MeshFrieze> mesh_frieze_enumerate(const TranslationQuiver& q, long long bound,
                                              MeshEnumerationReport* report = nullptr,
                                              int slice_rotation = 0, int threads = 1);

// Doubles the bound from `start` until the count is stable across two
// consecutive bounds and no accepted frieze touches the ceiling.
std::vector<MeshFrieze> mesh_frieze_enumerate_stable(const TranslationQuiver& q,
                                                     MeshEnumerationReport* report = nullptr,
                                                     long long start = 8, int threads = 1);

// Rank-one object of the C(2,n) model: a pair (a,b).
struct RankOneObject {
    int n = 0;
    Arc pair;
    bool projective_injective() const { return pair.is_boundary(n); }
};

bool ext_vanishes(const RankOneObject& x, const RankOneObject& y);

// Cluster tilting object: the n-3 diagonals of a triangulation plus all n
// boundary pairs (2n-3 summands).
struct ClusterTiltingObject {
    Triangulation diagonals;
    static ClusterTiltingObject from_summands(int n, const std::vector<Arc>& summands);
    int n() const { return diagonals.n; }
    bool is_summand(const Arc& a) const {
        return a.is_boundary(diagonals.n) || diagonals.contains(a);
    }
};

struct TiltingFrieze {
    LaurentFriezeGrid symbolic;           // entries zeta_T(M_{ij}) over the summand variables
    LaurentCoefficientSequence coeffs;    // c_{i,i+1} = boundary variable p_{i,i+1}
    std::vector<std::string> var_names;   // variable index -> arc name
    FriezeGrid specialized;               // all summand variables set to 1
};

// Cluster-character frieze of a tilting object, built by propagating the
// twisted diamond rule from the summand positions; the specialization equals
// frieze_of(T).
TiltingFrieze frieze_of_tilting(const ClusterTiltingObject& t);

// Number of submodules of the string module at position m over the
// cluster-tilted algebra of T: order ideals of the crossed-diagonal fence.
long long submodule_count(const ClusterTiltingObject& t, const RankOneObject& m);

struct CutSide {
    FriezeGrid grid;
    CoefficientSequence coeffs;
    bool with_coefficients = false;
    std::vector<int> vertex_map;  // sub-polygon vertex (1-based) -> original vertex
};

// Cuts the polygon along diagonal d. For d in T both sides are plain CC
// friezes; otherwise the restricted grids carry the cut arc's frieze value
// as a coefficient.
std::pair<CutSide, CutSide> iy_cut(const Triangulation& t, const Arc& d);

}  // namespace frieze
