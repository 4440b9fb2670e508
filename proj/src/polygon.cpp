#include "frieze/polygon.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace frieze {

bool crossing(const Arc& x, const Arc& y) {
    // a < c < b < d or c < a < d < b with both arcs normalized.
    return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

Triangulation::Triangulation(int n_, std::vector<Arc> diags) : n(n_), diagonals(std::move(diags)) {
    std::sort(diagonals.begin(), diagonals.end());
    if (n < 3) throw Error("Triangulation: polygon needs at least 3 vertices");
    if (static_cast<int>(diagonals.size()) != n - 3)
        throw Error("Triangulation: expected " + std::to_string(n - 3) + " diagonals, got " +
                    std::to_string(diagonals.size()));
    for (const Arc& d : diagonals) {
        if (d.a < 1 || d.b > n || d.a == d.b)
            throw Error("Triangulation: arc " + d.to_string() + " out of range");
        if (d.is_boundary(n))
            throw Error("Triangulation: boundary arc " + d.to_string() + " is not a diagonal");
    }
    for (std::size_t i = 0; i < diagonals.size(); ++i)
        for (std::size_t j = i + 1; j < diagonals.size(); ++j)
            if (crossing(diagonals[i], diagonals[j]))
                throw Error("Triangulation: crossing diagonals " + diagonals[i].to_string() +
                            " and " + diagonals[j].to_string());
}

bool Triangulation::contains(const Arc& d) const {
    return std::binary_search(diagonals.begin(), diagonals.end(), d);
}

std::string Triangulation::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < diagonals.size(); ++i) {
        if (i) s += ",";
        s += diagonals[i].to_string();
    }
    return s + "}";
}

namespace {

// Triangulations of the sub-polygon on vertices verts[0..m-1] (a convex
// interval in cyclic order), with verts.front()-verts.back() as base edge.
void enumerate_interval(const std::vector<int>& verts, std::vector<Arc>& acc,
                        std::vector<std::vector<Arc>>& out) {
    std::size_t m = verts.size();
    if (m <= 2) {
        out.push_back(acc);
        return;
    }
    // Apex of the triangle on the base edge (first, last).
    for (std::size_t k = 1; k + 1 < m; ++k) {
        std::size_t added = 0;
        if (k > 1) {
            acc.push_back(Arc(verts[0], verts[k]));
            ++added;
        }
        if (k + 2 < m) {
            acc.push_back(Arc(verts[k], verts[m - 1]));
            ++added;
        }
        std::vector<int> left(verts.begin(), verts.begin() + k + 1);
        std::vector<int> right(verts.begin() + k, verts.end());
        // Recurse on both sides; collect cartesian product via nested calls.
        std::vector<std::vector<Arc>> lefts;
        std::vector<Arc> tmp;
        enumerate_interval(left, tmp, lefts);
        for (const auto& l : lefts) {
            std::vector<Arc> acc2 = acc;
            acc2.insert(acc2.end(), l.begin(), l.end());
            std::vector<std::vector<Arc>> rights;
            std::vector<Arc> tmp2;
            enumerate_interval(right, tmp2, rights);
            for (const auto& r : rights) {
                std::vector<Arc> full = acc2;
                full.insert(full.end(), r.begin(), r.end());
                out.push_back(std::move(full));
            }
        }
        while (added--) acc.pop_back();
    }
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
    if (n < 3) throw Error("enumerate_triangulations: n >= 3 required");
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i + 1;
    std::vector<std::vector<Arc>> raw;
    std::vector<Arc> acc;
    enumerate_interval(verts, acc, raw);
    std::vector<Triangulation> out;
    out.reserve(raw.size());
    for (auto& arcs : raw) out.emplace_back(n, std::move(arcs));
    std::sort(out.begin(), out.end(), [](const Triangulation& a, const Triangulation& b) {
        return a.diagonals < b.diagonals;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Triangulation& a, const Triangulation& b) {
                              return a.diagonals == b.diagonals;
                          }),
              out.end());
    return out;
}

Triangulation fan_triangulation(int n, int apex) {
    std::vector<Arc> diags;
    for (int x = 1; x <= n; ++x) {
        Arc a(apex, x);
        if (x != apex && !a.is_boundary(n)) diags.push_back(a);
    }
    return Triangulation(n, std::move(diags));
}

namespace {

bool edge_present(const Triangulation& t, int x, int y) {
    Arc a(x, y);
    return a.is_boundary(t.n) || t.contains(a);
}

void faces_interval(const Triangulation& t, int lo, int hi,
                    std::vector<std::array<int, 3>>& out) {
    if (hi - lo < 2) return;
    for (int k = lo + 1; k < hi; ++k) {
        if (edge_present(t, lo, k) && edge_present(t, k, hi)) {
            out.push_back({lo, k, hi});
            faces_interval(t, lo, k, out);
            faces_interval(t, k, hi, out);
            return;
        }
    }
    throw Error("faces: no apex found; triangulation invalid");
}

}  // namespace

std::vector<std::array<int, 3>> faces(const Triangulation& t) {
    std::vector<std::array<int, 3>> out;
    faces_interval(t, 1, t.n, out);
    if (static_cast<int>(out.size()) != t.n - 2)
        throw Error("faces: expected " + std::to_string(t.n - 2) + " faces");
    return out;
}

std::vector<long long> quiddity(const Triangulation& t) {
    std::vector<long long> q(t.n, 0);
    for (const auto& f : faces(t))
        for (int v : f) ++q[v - 1];
    long long total = 0;
    for (long long v : q) total += v;
    if (total != 3LL * (t.n - 2)) throw Error("quiddity: corner count mismatch");
    return q;
}

FriezeGrid frieze_of(const Triangulation& t) { return frieze_from_quiddity(quiddity(t)); }

Triangulation triangulation_of(const FriezeGrid& f) {
    if (f.order() != 2) throw NotACCFriezeError("triangulation_of: k must be 2");
    ValidationReport rep = validate(f);
    if (!rep.ok()) throw NotACCFriezeError("triangulation_of: grid is not a valid CC frieze");
    const int n = f.period();
    std::set<Arc> diags;
    for (int i = 1; i <= n; ++i) {
        for (int d = 1; d <= f.width(); ++d) {
            if (f.at(i, i + d).is_one()) {
                // Interior 1 at t(i, i+d) is the arc entry m_{i, i+d+1}.
                int a = f.mod_n(i - 1) + 1;
                int b = f.mod_n(i + d) + 1;
                diags.insert(Arc(a, b));
            }
        }
    }
    return Triangulation(n, std::vector<Arc>(diags.begin(), diags.end()));
}

std::pair<Triangulation, Arc> flip(const Triangulation& t, const Arc& d) {
    if (!t.contains(d)) throw NotADiagonalError("flip: " + d.to_string() + " not in T");
    // The two faces containing d form the quadrilateral.
    std::vector<int> apexes;
    for (const auto& f : faces(t)) {
        int cnt = 0;
        int other = 0;
        for (int v : f) {
            if (v == d.a || v == d.b)
                ++cnt;
            else
                other = v;
        }
        if (cnt == 2) apexes.push_back(other);
    }
    if (apexes.size() != 2) throw Error("flip: diagonal not in exactly two faces");
    Arc nd(apexes[0], apexes[1]);
    std::vector<Arc> diags;
    for (const Arc& x : t.diagonals)
        if (!(x == d)) diags.push_back(x);
    diags.push_back(nd);
    return {Triangulation(t.n, std::move(diags)), nd};
}

int Quiver::mutable_count() const {
    int c = 0;
    for (const auto& v : vertices)
        if (!v.frozen) ++c;
    return c;
}

std::string Quiver::to_json() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : vertices) {
        nlohmann::json vj;
        vj["id"] = v.id;
        vj["frozen"] = v.frozen;
        if (!v.label.empty()) vj["label"] = v.label;
        j["vertices"].push_back(vj);
    }
    j["arrows"] = nlohmann::json::array();
    for (const auto& [s, t] : arrows) j["arrows"].push_back({s, t});
    return j.dump();
}

Quiver Quiver::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Quiver q;
    for (const auto& vj : j.at("vertices")) {
        QuiverVertex v;
        v.id = vj.at("id").get<int>();
        v.frozen = vj.value("frozen", false);
        v.label = vj.value("label", std::string());
        q.vertices.push_back(v);
    }
    for (const auto& aj : j.at("arrows"))
        q.arrows.push_back({aj.at(0).get<int>(), aj.at(1).get<int>()});
    return q;
}

Quiver quiver_of(const Triangulation& t, bool include_frozen) {
    Quiver q;
    std::map<Arc, int> vertex_id;
    for (const Arc& d : t.diagonals) {
        QuiverVertex v;
        v.id = static_cast<int>(q.vertices.size()) + 1;
        v.label = d.to_string();
        v.frozen = false;
        vertex_id[d] = v.id;
        q.vertices.push_back(v);
    }
    if (include_frozen) {
        std::vector<Arc> boundary;
        for (int i = 1; i < t.n; ++i) boundary.push_back(Arc(i, i + 1));
        boundary.push_back(Arc(1, t.n));
        std::sort(boundary.begin(), boundary.end());
        for (const Arc& b : boundary) {
            QuiverVertex v;
            v.id = static_cast<int>(q.vertices.size()) + 1;
            v.label = b.to_string();
            v.frozen = true;
            vertex_id[b] = v.id;
            q.vertices.push_back(v);
        }
    }
    auto frozen_of = [&](int id) { return q.vertices[id - 1].frozen; };
    for (const auto& f : faces(t)) {
        // Cyclic arrows (x,y) -> (y,z) -> (z,x) -> (x,y) between sides.
        Arc sides[3] = {Arc(f[0], f[1]), Arc(f[1], f[2]), Arc(f[0], f[2])};
        for (int s = 0; s < 3; ++s) {
            auto it = vertex_id.find(sides[s]);
            auto jt = vertex_id.find(sides[(s + 1) % 3]);
            if (it == vertex_id.end() || jt == vertex_id.end()) continue;
            if (frozen_of(it->second) && frozen_of(jt->second)) continue;
            q.arrows.push_back({it->second, jt->second});
        }
    }
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

std::string triangulation_to_json(const Triangulation& t) {
    nlohmann::json j;
    j["n"] = t.n;
    j["diagonals"] = nlohmann::json::array();
    for (const Arc& d : t.diagonals) j["diagonals"].push_back({d.a, d.b});
    return j.dump();
}

Triangulation triangulation_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Arc> diags;
    for (const auto& dj : j.at("diagonals"))
        diags.push_back(Arc(dj.at(0).get<int>(), dj.at(1).get<int>()));
    return Triangulation(j.at("n").get<int>(), std::move(diags));
}

}  // namespace frieze
