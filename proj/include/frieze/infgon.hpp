#pragma once

#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "frieze/errors.hpp"

namespace frieze {

// Marked points of the completed infinity-gon are the integers plus one
// accumulation point, which compares greater than every integer.
constexpr long long kInfVertex = std::numeric_limits<long long>::max();

struct InfArc {
    long long a = 0;
    long long b = 0;  // kInfVertex for the infinite arc
    InfArc() = default;
    InfArc(long long x, long long y) : a(std::min(x, y)), b(std::max(x, y)) {}
    bool infinite() const { return b == kInfVertex; }
    bool boundary() const { return !infinite() && b == a + 1; }
    friend bool operator==(const InfArc& l, const InfArc& r) { return l.a == r.a && l.b == r.b; }
    friend bool operator<(const InfArc& l, const InfArc& r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    }
    std::string to_string() const;
};

bool crossing_inf(const InfArc& x, const InfArc& y);

// One parametric family of finite arcs (e1(t), e2(t)) with integer t,
// excluding finitely many parameter values.
struct ArcFamily {
    long long m1 = 0, c1 = 0;  // first endpoint m1*t + c1
    long long m2 = 0, c2 = 0;
    std::set<long long> excluded;
};

// Fountain triangulation given by a fountain point, arc families, and the
// materialization window. Boundary arcs (i, i+1) and the arc
// (fountain, infinity) are implicit.
struct FountainTriangulation {
    long long fountain = 0;
    long long lo = 0, hi = 0;
    std::vector<ArcFamily> families;

    bool contains(long long x, long long y) const;  // finite arcs only
    std::vector<InfArc> materialize() const;        // finite arcs within the window
    void validate_window() const;

    // Mini-language, e.g.
    //   fountain=0; arcs=(0,2n)|n not in {0,1,-1}; arcs=(2n,2n+2); window=-12..12
    static FountainTriangulation parse(const std::string& spec);
};

// Triangle counts per countable non-fountain vertex. A vertex is countable
// when its boundary arcs lie in the window and every angular face between
// consecutive incident arcs closes with a materialized arc.
std::map<long long, long long> quiddity_window(const FountainTriangulation& t);

// Frieze-rule array below the quiddity row. Entry (i, r) is the depth-r
// value of the window starting after vertex i (a_{i+1} .. a_{i+r}); absent
// wherever the window reaches the fountain column or leaves the countable
// range.
struct HalfFriezeWindow {
    long long lo = 0, hi = 0, fountain = 0;
    int depth = 0;
    std::map<long long, long long> quiddity;
    std::map<std::pair<long long, int>, long long> entries;

    bool has(long long i, int r) const { return entries.count({i, r}) > 0; }
    long long at(long long i, int r) const { return entries.at({i, r}); }
    std::string to_text() const;  // blanks rendered as a mid-dot
};

HalfFriezeWindow half_frieze(const FountainTriangulation& t, int depth);

enum class DiagonalDir { DownRight, DownLeft };

// 1-indicator sequence along a diagonal of the half-frieze, in depth order.
std::vector<int> penrose_diagonal(const HalfFriezeWindow& h, DiagonalDir dir, long long index);

}  // namespace frieze
