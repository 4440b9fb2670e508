// Generates the shipped translation-quiver tables (data/*.tq) for the
// finite-type cases beyond type A. The stable quiver is the orbit quiver
// ZDelta / <F>: modules of the path algebra are knitted slice by slice from
// the projectives, one extra slice of shifted projectives is prepended, and
// the gluing F identifies the slice left of it with the injectives.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <vector>

#include "frieze/mesh.hpp"

using frieze::TranslationQuiver;

namespace {

struct DynkinTree {
    std::string name;
    int rank;
    std::vector<std::pair<int, int>> edges;  // oriented parent -> child
    int positive_roots;
};

DynkinTree make_tree(const std::string& name) {
    // Built from arms hanging off a center vertex 0.
    auto arms = [&](std::vector<int> lens) {
        DynkinTree t;
        t.name = name;
        t.rank = 1;
        for (int len : lens) {
            int prev = 0;
            for (int i = 0; i < len; ++i) {
                t.edges.push_back({prev, t.rank});
                prev = t.rank;
                ++t.rank;
            }
        }
        return t;
    };
    if (name == "D4") {
        DynkinTree t = arms({1, 1, 1});
        t.positive_roots = 12;
        return t;
    }
    if (name == "E6") {
        DynkinTree t = arms({1, 2, 2});
        t.positive_roots = 36;
        return t;
    }
    if (name == "E8") {
        DynkinTree t = arms({1, 2, 4});
        t.positive_roots = 120;
        return t;
    }
    if (name == "A3") {  // cross-check type only
        DynkinTree t;
        t.name = name;
        t.rank = 3;
        t.edges = {{0, 1}, {1, 2}};
        t.positive_roots = 6;
        return t;
    }
    throw std::runtime_error("unknown type " + name);
}

using DimVec = std::vector<int>;

struct Pos {
    int p, v;
    bool operator<(const Pos& o) const { return p != o.p ? p < o.p : v < o.v; }
    bool operator==(const Pos& o) const { return p == o.p && v == o.v; }
};

TranslationQuiver build(const DynkinTree& tree) {
    const int R = tree.rank;
    std::vector<std::vector<int>> succ(R), pred(R);  // oriented edges
    for (auto [a, b] : tree.edges) {
        succ[a].push_back(b);
        pred[b].push_back(a);
    }
    // dim P_i (paths i -> j) and dim I_i (paths j -> i); trees have at most
    // one directed path between two vertices.
    auto reach = [&](int from, const std::vector<std::vector<int>>& next) {
        DimVec d(R, 0);
        std::vector<int> stack{from};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (d[v]) continue;
            d[v] = 1;
            for (int u : next[v]) stack.push_back(u);
        }
        return d;
    };
    std::map<DimVec, int> injective_of;
    for (int i = 0; i < R; ++i) injective_of[reach(i, pred)] = i;

    // Knit the module slices of ZQ.
    std::map<Pos, DimVec> dims;
    std::vector<int> row_end(R, -1), nu(R, -1);
    for (int i = 0; i < R; ++i) dims[{0, i}] = reach(i, succ);

    // Topological order: parents before children.
    std::vector<int> topo;
    {
        std::vector<int> indeg(R, 0);
        for (auto [a, b] : tree.edges) ++indeg[b];
        std::vector<int> stack;
        for (int i = 0; i < R; ++i)
            if (indeg[i] == 0) stack.push_back(i);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            topo.push_back(v);
            for (int u : succ[v])
                if (--indeg[u] == 0) stack.push_back(u);
        }
    }

    int alive = R;
    for (int p = 0; alive > 0; ++p) {
        // Mark rows whose current module is an injective.
        for (int v = 0; v < R; ++v) {
            auto it = dims.find({p, v});
            if (it == dims.end() || row_end[v] >= 0) continue;
            auto inj = injective_of.find(it->second);
            if (inj != injective_of.end()) {
                row_end[v] = p;
                nu[v] = inj->second;
                --alive;
            }
        }
        if (alive == 0) break;
        // In ZQ the irreducible maps run (p, j) -> (p, i) for each arrow
        // i -> j of Q and (p, i) -> (p+1, j); so the mesh ending at (p+1, v)
        // has middles {(p+1, j) : v -> j} and {(p, i) : i -> v}. Children
        // must be knitted before parents within a slice.
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            int v = *it;
            if (row_end[v] >= 0 || dims.find({p, v}) == dims.end()) continue;
            DimVec next(R, 0);
            auto add = [&](const Pos& pos) {
                auto jt = dims.find(pos);
                if (jt == dims.end()) return;
                for (int t = 0; t < R; ++t) next[t] += jt->second[t];
            };
            for (int u : succ[v]) add({p + 1, u});
            for (int w : pred[v]) add({p, w});
            const DimVec& cur = dims.at({p, v});
            bool ok = true;
            for (int t = 0; t < R; ++t) {
                next[t] -= cur[t];
                if (next[t] < 0) ok = false;
            }
            if (!ok) throw std::runtime_error("knitting produced a negative dimension");
            dims[{p + 1, v}] = next;
        }
    }
    if (static_cast<int>(dims.size()) != tree.positive_roots)
        throw std::runtime_error(tree.name + ": expected " +
                                 std::to_string(tree.positive_roots) + " modules, got " +
                                 std::to_string(dims.size()));

    // Orbit quiver ZDelta / <F>. Row v ends with the injective I_{nu(v)}, so
    // I_i sits at (row_end[nu^-1(i)], nu^-1(i)) and the gluing pinned by
    // tau(P_i[1]) = I_i is F(p, i) = (p + 2 + row_end[nu^-1(i)], nu^-1(i)).
    // Canonical transversal: orbit elements with 0 <= p < 2 + row_end[v].
    std::vector<int> nu_inv(R, -1);
    for (int v = 0; v < R; ++v) nu_inv[nu[v]] = v;
    auto Fmap = [&](Pos pos) {
        int w = nu_inv[pos.v];
        return Pos{pos.p + 2 + row_end[w], w};
    };
    auto Finv = [&](Pos pos) { return Pos{pos.p - 2 - row_end[pos.v], nu[pos.v]}; };
    auto rep = [&](Pos pos) {
        while (pos.p < 0) pos = Fmap(pos);
        while (pos.p >= 2 + row_end[pos.v]) pos = Finv(pos);
        return pos;
    };
    std::set<Pos> verts;
    for (int v = 0; v < R; ++v)
        for (int p = 0; p < 2 + row_end[v]; ++p) verts.insert({p, v});
    if (static_cast<int>(verts.size()) != tree.positive_roots + R)
        throw std::runtime_error("transversal size mismatch");
    for (const Pos& pos : verts)
        if (!(rep(pos) == pos)) throw std::runtime_error("fundamental domain overlap");
    // F must be an automorphism: arrow images must be arrows.
    for (const Pos& pos : verts) {
        for (int w : pred[pos.v]) {
            Pos a = Fmap(pos), b = Fmap({pos.p, w});
            bool ok = (a.p == b.p && std::find(pred[a.v].begin(), pred[a.v].end(), b.v) !=
                                          pred[a.v].end()) ||
                      (b.p == a.p + 1 && std::find(succ[a.v].begin(), succ[a.v].end(), b.v) !=
                                             succ[a.v].end());
            if (!ok) throw std::runtime_error("gluing is not an automorphism");
        }
        for (int u : succ[pos.v]) {
            Pos a = Fmap(pos), b = Fmap({pos.p + 1, u});
            bool ok = (b.p == a.p + 1 && std::find(succ[a.v].begin(), succ[a.v].end(), b.v) !=
                                             succ[a.v].end()) ||
                      (b.p == a.p && std::find(pred[a.v].begin(), pred[a.v].end(), b.v) !=
                                         pred[a.v].end());
            if (!ok) throw std::runtime_error("gluing is not an automorphism");
        }
    }

    TranslationQuiver q;
    std::map<Pos, int> index;
    for (const Pos& pos : verts) {
        index[pos] = static_cast<int>(q.labels.size());
        q.labels.push_back("Z" + std::to_string(pos.p + 1) + "_" + std::to_string(pos.v));
        q.proj_inj.push_back(false);
        q.tau.push_back(-1);
    }
    std::set<std::pair<int, int>> arrow_set;
    for (const Pos& pos : verts) {
        for (int w : pred[pos.v]) arrow_set.insert({index[pos], index[rep({pos.p, w})]});
        for (int u : succ[pos.v]) arrow_set.insert({index[pos], index[rep({pos.p + 1, u})]});
        q.tau[index[pos]] = index[rep({pos.p - 1, pos.v})];
    }
    q.arrows.assign(arrow_set.begin(), arrow_set.end());
    q.validate();
    return q;
}

}  // namespace

int main(int argc, char** argv) {
    std::string outdir = argc > 1 ? argv[1] : "data";
    if (outdir == "--check-a3") {
        TranslationQuiver a3 = build(make_tree("A3"));
        std::cout << "A3 generated: " << a3.size() << " vertices\n";
        std::cout << a3.to_tq();
        return 0;
    }
    for (const std::string& name : {"D4", "E6", "E8"}) {
        TranslationQuiver q = build(make_tree(name));
        std::string lower;
        for (char c : name) lower += static_cast<char>(std::tolower(c));
        std::ofstream out(outdir + "/" + lower + ".tq");
        out << "# stable translation quiver of type " << name << " (" << q.size()
            << " vertices)\n";
        out << q.to_tq();
        std::cout << name << ": " << q.size() << " vertices, " << q.arrows.size()
                  << " arrows\n";
    }
    return 0;
}
