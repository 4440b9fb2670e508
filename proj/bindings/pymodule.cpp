#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "frieze/cli.hpp"
#include "frieze/cluster.hpp"
#include "frieze/grassmann.hpp"
#include "frieze/grid.hpp"
#include "frieze/infgon.hpp"
#include "frieze/mesh.hpp"
#include "frieze/polygon.hpp"
#include "frieze/slk_enumerate.hpp"

namespace py = pybind11;
using namespace frieze;

namespace {

std::vector<std::vector<long long>> grid_rows(const FriezeGrid& f) {
    std::vector<std::vector<long long>> rows;
    for (int d = f.dmin(); d <= f.dmax(); ++d) {
        std::vector<long long> row;
        for (int i = 1; i <= f.period(); ++i) row.push_back(f.at(i, i + d).as_i64());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::pair<int, int>> arcs_of(const Triangulation& t) {
    std::vector<std::pair<int, int>> out;
    for (const Arc& a : t.diagonals) out.push_back({a.a, a.b});
    return out;
}

}  // namespace

PYBIND11_MODULE(_friezelab, m) {
    m.doc() = "Exact frieze patterns, polygon triangulations, and cluster mutation";

    m.def("quiddity_frieze", [](const std::vector<long long>& q) {
        return grid_rows(frieze_from_quiddity(q));
    },
          "Rows of the CC frieze of a quiddity sequence, top to bottom");

    m.def("frieze_is_valid", [](const std::vector<long long>& q) {
        try {
            return validate(frieze_from_quiddity(q)).ok();
        } catch (const Error&) {
            return false;
        }
    });

    m.def("triangulations", [](int n) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const Triangulation& t : enumerate_triangulations(n)) out.push_back(arcs_of(t));
        return out;
    });

    m.def("quiddity_of", [](int n, const std::vector<std::pair<int, int>>& diagonals) {
        std::vector<Arc> arcs;
        for (auto [a, b] : diagonals) arcs.push_back(Arc(a, b));
        return quiddity(Triangulation(n, std::move(arcs)));
    });

    m.def("triangulation_of_quiddity", [](const std::vector<long long>& q) {
        return arcs_of(triangulation_of(frieze_from_quiddity(q)));
    });

    m.def("flip", [](int n, const std::vector<std::pair<int, int>>& diagonals,
                     std::pair<int, int> d) {
        std::vector<Arc> arcs;
        for (auto [a, b] : diagonals) arcs.push_back(Arc(a, b));
        auto [t, nd] = flip(Triangulation(n, std::move(arcs)), Arc(d.first, d.second));
        return std::make_pair(arcs_of(t), std::make_pair(nd.a, nd.b));
    });

    m.def("mutate_path", [](const std::string& builtin, const std::vector<int>& path) {
        std::ostringstream out, err;
        std::string dirs;
        for (std::size_t i = 0; i < path.size(); ++i)
            dirs += (i ? "," : "") + std::to_string(path[i]);
        int code = run_cli({"mutate", "--seed", builtin, "--path", dirs}, out, err);
        if (code != 0) throw std::runtime_error(err.str());
        std::string s = out.str();
        if (!s.empty() && s.back() == '\n') s.pop_back();
        return s;
    },
          "Cluster after a mutation path on a builtin seed, as printed by the CLI");

    m.def("slk_frieze_count", [](int k, int w, long long bound) {
        return enumerate_slk_grid(k, w, bound, nullptr, 1).size();
    });

    m.def("mesh_frieze_count", [](const std::string& type) {
        return mesh_frieze_enumerate_stable(dynkin_translation_quiver(type), nullptr).size();
    });

    m.def("unitary_census", [](int k, int n) {
        UnitaryCensus c = frieze::unitary_census(k, n);
        return std::make_pair(c.clusters, c.distinct.size());
    });

    m.def("half_frieze_rows", [](const std::string& spec, int depth) {
        HalfFriezeWindow h = half_frieze(FountainTriangulation::parse(spec), depth);
        std::map<std::string, long long> out;
        for (const auto& [key, val] : h.entries)
            out[std::to_string(key.first) + "," + std::to_string(key.second)] = val;
        return out;
    });

    m.def("poly_eval_at_ones", [](const std::string& text) {
        LaurentPoly p = LaurentPoly::parse(text);
        std::map<int, Rational> ones;
        for (int v : p.variables()) ones[v] = Rational(1);
        return p.eval(ones).to_string();
    });

    m.def("poly_mul", [](const std::string& a, const std::string& b) {
        return (LaurentPoly::parse(a) * LaurentPoly::parse(b)).to_string();
    });

    m.def("poly_div_exact", [](const std::string& a, const std::string& b) {
        return frieze::poly_div_exact(LaurentPoly::parse(a), LaurentPoly::parse(b)).to_string();
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
