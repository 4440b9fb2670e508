#pragma once

#include <array>
#include <string>
#include <vector>

#include "frieze/grid.hpp"

namespace frieze {

// Chord of the n-gon with vertices 1..n (clockwise). Normalized a < b.
struct Arc {
    int a = 0, b = 0;
    Arc() = default;
    Arc(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}
    bool is_boundary(int n) const { return b - a == 1 || (a == 1 && b == n); }
    friend bool operator==(const Arc& l, const Arc& r) { return l.a == r.a && l.b == r.b; }
    friend bool operator<(const Arc& l, const Arc& r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    }
    std::string to_string() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
};

// True iff the endpoints interleave cyclically (strictly).
bool crossing(const Arc& x, const Arc& y);

// Maximal set of pairwise non-crossing diagonals: |diagonals| = n - 3.
struct Triangulation {
    int n = 0;
    std::vector<Arc> diagonals;  // sorted, non-boundary

    Triangulation() = default;
    Triangulation(int n_, std::vector<Arc> diags);

    bool contains(const Arc& d) const;
    std::string to_string() const;
};

// All triangulations of the n-gon; count = Catalan(n-2).
std::vector<Triangulation> enumerate_triangulations(int n);

// Fan at a vertex: diagonals (v, x) for all non-adjacent x.
Triangulation fan_triangulation(int n, int apex = 1);

// The n-2 triangular faces, each as increasing vertex triples.
std::vector<std::array<int, 3>> faces(const Triangulation& t);

// a_i = number of triangles incident to vertex i.
std::vector<long long> quiddity(const Triangulation& t);

FriezeGrid frieze_of(const Triangulation& t);

// Diagonals recovered from the 1-entries of a CC frieze (k = 2).
Triangulation triangulation_of(const FriezeGrid& f);

// Replaces d by the other diagonal of its quadrilateral; returns (T', d').
std::pair<Triangulation, Arc> flip(const Triangulation& t, const Arc& d);

struct QuiverVertex {
    int id = 0;  // 1-based
    std::string label;
    bool frozen = false;
};

// Finite quiver without loops or 2-cycles; arrows form a multiset.
struct Quiver {
    std::vector<QuiverVertex> vertices;
    std::vector<std::pair<int, int>> arrows;  // (source id, target id)

    int mutable_count() const;
    std::string to_json() const;
    static Quiver from_json(const std::string& text);
};

// Quiver of a triangulation: vertices are diagonals (boundary arcs appended
// as frozen when include_frozen); each triangular face {x<y<z} contributes
// cyclic arrows (x,y) -> (y,z) -> (z,x) -> (x,y) between the sides present
// as vertices. Arrows between two frozen vertices are dropped.
//
// Worked example, fan hexagon T = {(1,3),(1,4),(1,5)}: the faces are
// {1,2,3}, {1,3,4}, {1,4,5}, {1,5,6}. Face {1,3,4} contributes
// (1,3)->(3,4)->(1,4)->(1,3), so between the diagonals the arrow is
// (1,4)->(1,3); face {1,4,5} likewise gives (1,5)->(1,4). Without frozen
// vertices the result is the linear quiver (1,5)->(1,4)->(1,3), and
// mutation at (1,4) exchanges along the quadrilateral 1,3,4,5:
// z((1,4)) * z((3,5)) = z((1,3)) z((4,5)) + z((1,5)) z((3,4)).
Quiver quiver_of(const Triangulation& t, bool include_frozen);

std::string triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const std::string& text);

}  // namespace frieze
