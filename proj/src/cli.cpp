#include "frieze/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "frieze/cluster.hpp"
#include "frieze/grassmann.hpp"
#include "frieze/grid.hpp"
#include "frieze/infgon.hpp"
#include "frieze/mesh.hpp"
#include "frieze/polygon.hpp"
#include "frieze/slk_enumerate.hpp"

namespace frieze {

namespace {

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

Seed builtin_seed(const std::string& name) {
    if (name == "a2") {
        ExtendedExchangeMatrix m;
        m.n_mutable = 2;
        m.b = {{0, 1}, {-1, 0}};
        return Seed::initial(std::move(m));
    }
    if (name == "a3") {
        ExtendedExchangeMatrix m;
        m.n_mutable = 3;
        m.b = {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
        return Seed::initial(std::move(m));
    }
    // The Grassmannian seeds are the standard grid seeds whose variables are
    // Pluecker coordinates (for k = 2 this is the fan-triangulation seed).
    if (name == "gr26") return grassmann_seed(2, 6).seed;
    if (name == "gr36") return grassmann_seed(3, 6).seed;
    if (name == "gr37") return grassmann_seed(3, 7).seed;
    throw Error("unknown builtin seed '" + name + "' (a2, a3, gr26, gr36, gr37)");
}

int cmd_quiddity(const std::vector<long long>& q, const std::string& format, std::ostream& out,
                 std::ostream& err) {
    for (long long a : q)
        if (a <= 0) {
            err << "error: quiddity entries must be positive integers\n";
            return 1;
        }
    try {
        FriezeGrid f = frieze_from_quiddity(q);
        out << (format == "json" ? to_json(f) + "\n" : to_text(f));
        return 0;
    } catch (const NotClosingError& e) {
        err << "error: " << e.what() << " (failing continuant index " << e.failing_index << ")\n";
        return 1;
    } catch (const NonPositiveEntryError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_enumerate(const std::string& kind, int n, int k, int width, const std::string& type,
                  long long bound, bool count_only, bool allow_long, int threads,
                  std::ostream& out, std::ostream& err) {
    if (kind == "cc") {
        if (n < 3) {
            err << "error: --n >= 3 required\n";
            return 1;
        }
        std::vector<Triangulation> ts = enumerate_triangulations(n);
        std::map<std::string, FriezeGrid> friezes;  // canonical serialization sort
        for (const Triangulation& t : ts) {
            FriezeGrid f = frieze_of(t);
            friezes.emplace(canonical_key(f), std::move(f));
        }
        if (count_only) {
            out << friezes.size() << "\n";
            return 0;
        }
        for (const auto& [key, f] : friezes) out << to_json(f) << "\n";
        return 0;
    }
    if (kind == "sl3" || kind == "slk") {
        int kk = kind == "sl3" ? 3 : k;
        if (kk < 2 || width < 1) {
            err << "error: need --k >= 2 and --width >= 1\n";
            return 1;
        }
        if (bound <= 0) {
            // Defaults cover the derived max entries (6 at width 2, 26 at
            // width 3) with margin.
            if (width <= 2)
                bound = 14;
            else if (width == 3)
                bound = 28;
            else {
                err << "error: pass an explicit --bound for width > 3\n";
                return 1;
            }
        }
        SlkEnumerationReport rep;
        std::vector<FriezeGrid> fs = enumerate_slk_grid(kk, width, bound, &rep, threads);
        err << "bound=" << bound << " max_interior=" << rep.max_interior
            << " max_branched=" << rep.max_branched
            << (rep.bound_ceiling_reached ? " (bound ceiling reached: possible pruning)"
                                          : " (no pruning at this bound)")
            << "\n";
        if (count_only) {
            out << fs.size() << "\n";
            return 0;
        }
        for (const FriezeGrid& f : fs) out << to_json(f) << "\n";
        return 0;
    }
    if (kind == "mesh") {
        TranslationQuiver q = dynkin_translation_quiver(type);
        if (type == "E8" && !allow_long) {
            err << "error: the E8 census runs for hours; pass --allow-long to enable it\n";
            return 1;
        }
        MeshEnumerationReport rep;
        std::vector<MeshFrieze> fs =
            bound > 0 ? mesh_frieze_enumerate(q, bound, &rep, 0, threads)
                      : mesh_frieze_enumerate_stable(q, &rep, 8, threads);
        err << "bound=" << rep.bound << " slice_size=" << rep.slice.size()
            << " max_seed_value=" << rep.max_seed_value
            << (rep.bound_ceiling_reached ? " (ceiling reached)" : " (stable)") << "\n";
        if (count_only) {
            out << fs.size() << "\n";
            return 0;
        }
        for (const MeshFrieze& f : fs) out << f.to_json(q) << "\n";
        return 0;
    }
    if (kind == "unitary") {
        if ((k == 3 && n == 8) && !allow_long) {
            err << "error: the Gr(3,8) census is long-running; pass --allow-long\n";
            return 1;
        }
        UnitaryCensus c = unitary_census(k, n);
        if (count_only) {
            out << c.distinct.size() << "\n";
            return 0;
        }
        for (const FriezeGrid& f : c.distinct) out << to_json(f) << "\n";
        return 0;
    }
    err << "error: unknown kind '" << kind << "'\n";
    return 1;
}

int cmd_mutate(const std::string& seed_name, const std::string& seed_file,
               const std::string& path, bool graph, std::ostream& out, std::ostream& err) {
    Seed s = seed_file.empty() ? builtin_seed(seed_name) : [&] {
        std::ifstream in(seed_file);
        if (!in) throw Error("cannot open seed file " + seed_file);
        std::stringstream ss;
        ss << in.rdbuf();
        return seed_from_json(ss.str());
    }();
    if (graph) {
        out << mutation_graph_to_json(explore(s)) << "\n";
        return 0;
    }
    std::vector<long long> dirs = parse_int_list(path);
    try {
        for (long long k : dirs) s = mutate_seed(s, static_cast<int>(k));
    } catch (const FrozenDirectionError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    VariableNames names = [&s](int v) { return s.name_of(v); };
    for (int i = 0; i < s.matrix.n_mutable; ++i) {
        if (i) out << ", ";
        out << s.vars[i].to_fraction_string(names);
    }
    out << "\n";
    return 0;
}

int cmd_halffrieze(const std::string& spec, int depth, const std::string& diagonal,
                   std::ostream& out, std::ostream& err) {
    try {
        FountainTriangulation t = FountainTriangulation::parse(spec);
        HalfFriezeWindow h = half_frieze(t, depth);
        out << h.to_text();
        if (!diagonal.empty()) {
            auto colon = diagonal.find(':');
            if (colon == std::string::npos || (diagonal.substr(0, colon) != "dr" &&
                                               diagonal.substr(0, colon) != "dl")) {
                err << "usage error: --diagonal expects dr:<i> or dl:<j>\n";
                return 2;
            }
            DiagonalDir dir = diagonal.substr(0, colon) == "dr" ? DiagonalDir::DownRight
                                                                : DiagonalDir::DownLeft;
            std::vector<int> bits =
                penrose_diagonal(h, dir, std::stoll(diagonal.substr(colon + 1)));
            out << "index sequence:";
            for (int b : bits) out << " " << b;
            out << "\n";
        }
        return 0;
    } catch (const WindowTooNarrowError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DiagonalOutOfWindowError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_pluecker_frieze(int k, int n, bool specialize, std::ostream& out) {
    PlueckerFrieze pf{k, n, specialize};
    out << pf.to_text();
    return 0;
}

int cmd_unitary_census(int k, int n, bool json, bool allow_long, std::ostream& out,
                       std::ostream& err) {
    if (k == 3 && n == 8 && !allow_long) {
        err << "error: the Gr(3,8) census is long-running; pass --allow-long\n";
        return 1;
    }
    UnitaryCensus c = unitary_census(k, n);
    if (json) {
        nlohmann::json j;
        j["clusters"] = c.clusters;
        j["distinct_friezes"] = c.distinct.size();
        out << j.dump() << "\n";
    } else {
        out << "clusters " << c.clusters << "\n";
        out << "distinct_friezes " << c.distinct.size() << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"frieze patterns, triangulations, and cluster mutation"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for enumerations");

    // quiddity
    std::string quiddity_list, quiddity_format = "text";
    auto* quid = app.add_subcommand("quiddity", "build the CC frieze of a quiddity sequence");
    quid->add_option("sequence", quiddity_list, "comma-separated positive integers")->required();
    quid->add_option("--format", quiddity_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // enumerate
    std::string kind, mesh_type = "D4";
    int en_n = 0, en_k = 3, en_width = 0;
    long long en_bound = 0;
    bool count_only = false, allow_long = false;
    auto* en = app.add_subcommand("enumerate", "enumerate friezes of a given kind");
    en->add_option("--kind", kind, "cc|sl3|slk|mesh|unitary")->required();
    en->add_option("--n", en_n, "polygon size / Grassmannian n");
    en->add_option("--k", en_k, "frieze order k");
    en->add_option("--width", en_width, "frieze width w");
    en->add_option("--type", mesh_type, "translation quiver type (A<m>, D4, E6, E8)");
    en->add_option("--bound", en_bound, "entry bound (0 = stabilize automatically)");
    en->add_flag("--count-only", count_only, "print only the count");
    en->add_flag("--allow-long", allow_long, "enable hour-scale enumerations");

    // mutate
    std::string seed_name = "a2", seed_file, path;
    bool mu_graph = false;
    auto* mu = app.add_subcommand("mutate", "apply a mutation path to a seed");
    mu->add_option("--seed", seed_name, "builtin seed: a2, a3, gr26, gr36, gr37");
    mu->add_option("--seed-file", seed_file, "seed JSON file");
    mu->add_option("--path", path, "comma-separated directions, e.g. 1,2,1");
    mu->add_flag("--graph", mu_graph, "explore and print the mutation graph as JSON");

    // halffrieze
    std::string hf_spec, hf_diagonal;
    int hf_depth = 3;
    auto* hf = app.add_subcommand("halffrieze", "half-frieze of a fountain triangulation");
    hf->add_option("--spec", hf_spec, "triangulation mini-language")->required();
    hf->add_option("--depth", hf_depth, "rows below the quiddity row");
    hf->add_option("--diagonal", hf_diagonal,
                   "also print the 1-indicator sequence of a diagonal, e.g. dr:0");

    // pluecker-frieze
    int pf_k = 3, pf_n = 6;
    bool pf_specialize = false;
    auto* pf = app.add_subcommand("pluecker-frieze", "symbolic Pluecker frieze of type (k,n)");
    pf->add_option("--k", pf_k)->required();
    pf->add_option("--n", pf_n)->required();
    pf->add_flag("--specialize", pf_specialize, "substitute consecutive coordinates with 1");

    // unitary-census
    int uc_k = 3, uc_n = 6;
    bool uc_json = false, uc_allow_long = false;
    auto* uc = app.add_subcommand("unitary-census", "count clusters and distinct unitary friezes");
    uc->add_option("--k", uc_k)->required();
    uc->add_option("--n", uc_n)->required();
    uc->add_flag("--json", uc_json);
    uc->add_flag("--allow-long", uc_allow_long);

    std::vector<std::string> args = argv;
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (quid->parsed()) return cmd_quiddity(parse_int_list(quiddity_list), quiddity_format, out, err);
        if (en->parsed())
            return cmd_enumerate(kind, en_n, en_k, en_width, mesh_type, en_bound, count_only,
                                 allow_long, threads, out, err);
        if (mu->parsed()) return cmd_mutate(seed_name, seed_file, path, mu_graph, out, err);
        if (hf->parsed()) return cmd_halffrieze(hf_spec, hf_depth, hf_diagonal, out, err);
        if (pf->parsed()) return cmd_pluecker_frieze(pf_k, pf_n, pf_specialize, out);
        if (uc->parsed()) return cmd_unitary_census(uc_k, uc_n, uc_json, uc_allow_long, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace frieze
