#include <sstream>

#include "doctest.h"
#include "frieze/cli.hpp"

using namespace frieze;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("quiddity subcommand prints the frieze") {
    Run r = cli({"quiddity", "1,2,2,2,1,4"});
    CHECK(r.code == 0);
    CHECK(r.out.find('4') != std::string::npos);
    CHECK(r.out.find('3') != std::string::npos);

    Run j = cli({"quiddity", "1,2,2,2,1,4", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"rows\"") != std::string::npos);

    Run trivial = cli({"quiddity", "1,1,1"});
    CHECK(trivial.code == 0);
}

TEST_CASE("quiddity reports the failing continuant index on NotClosing") {
    Run r = cli({"quiddity", "1,1,1,1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("failing continuant index") != std::string::npos);

    Run bad = cli({"quiddity", "1,0,1"});
    CHECK(bad.code == 1);
}

TEST_CASE("enumerate cc count") {
    Run r = cli({"enumerate", "--kind", "cc", "--n", "6", "--count-only"});
    CHECK(r.code == 0);
    CHECK(r.out == "14\n");
}

TEST_CASE("enumerate sl3 width 2 reports the bound status") {
    Run r = cli({"enumerate", "--kind", "sl3", "--width", "2", "--bound", "16", "--count-only"});
    CHECK(r.code == 0);
    CHECK(r.out == "51\n");
    CHECK(r.err.find("no pruning") != std::string::npos);
}

TEST_CASE("enumerate mesh counts") {
    Run a3 = cli({"enumerate", "--kind", "mesh", "--type", "A3", "--count-only"});
    CHECK(a3.code == 0);
    CHECK(a3.out == "14\n");
    Run d4 = cli({"enumerate", "--kind", "mesh", "--type", "D4", "--count-only"});
    CHECK(d4.code == 0);
    CHECK(d4.out == "51\n");
    Run e8 = cli({"enumerate", "--kind", "mesh", "--type", "E8", "--count-only"});
    CHECK(e8.code == 1);  // opt-in flag required
}

TEST_CASE("mutate reproduces the A2 table rows") {
    Run r1 = cli({"mutate", "--seed", "a2", "--path", "1"});
    CHECK(r1.code == 0);
    CHECK(r1.out == "(1+x2)/x1, x2\n");

    Run r11 = cli({"mutate", "--seed", "a2", "--path", "1,1"});
    CHECK(r11.out == "x1, x2\n");

    Run r21 = cli({"mutate", "--seed", "a2", "--path", "1,2"});
    CHECK(r21.out == "(1+x2)/x1, (1+x1+x2)/(x1*x2)\n");

    Run frozen = cli({"mutate", "--seed", "a2", "--path", "3"});
    CHECK(frozen.code == 1);
}

TEST_CASE("halffrieze subcommand") {
    Run r = cli({"halffrieze", "--spec",
                 "fountain=0; arcs=(0,2n)|n not in {0,1,-1}; arcs=(2n,2n+2); window=-12..12",
                 "--depth", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find('4') != std::string::npos);
    CHECK(r.out.find("\xC2\xB7") != std::string::npos);

    Run narrow = cli({"halffrieze", "--spec",
                      "fountain=0; arcs=(0,2n)|n not in {0,1,-1}; arcs=(2n,2n+2); window=0..2",
                      "--depth", "3"});
    CHECK(narrow.code == 1);
    CHECK(narrow.err.find("widen the window") != std::string::npos);
}

TEST_CASE("pluecker-frieze subcommand") {
    Run r = cli({"pluecker-frieze", "--k", "3", "--n", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("p146") != std::string::npos);
    Run s = cli({"pluecker-frieze", "--k", "3", "--n", "6", "--specialize"});
    CHECK(s.out.find("p123") == std::string::npos);
}

TEST_CASE("unitary-census json") {
    Run r = cli({"unitary-census", "--k", "2", "--n", "6", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"clusters\":14") != std::string::npos);
    CHECK(r.out.find("\"distinct_friezes\":14") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs and thread counts") {
    Run a = cli({"enumerate", "--kind", "sl3", "--width", "2", "--bound", "12"});
    Run b = cli({"enumerate", "--kind", "sl3", "--width", "2", "--bound", "12"});
    CHECK(a.out == b.out);
    Run c = cli({"--threads", "2", "enumerate", "--kind", "sl3", "--width", "2", "--bound", "12"});
    CHECK(a.out == c.out);

    Run m1 = cli({"enumerate", "--kind", "mesh", "--type", "D4", "--bound", "16"});
    Run m2 = cli({"--threads", "2", "enumerate", "--kind", "mesh", "--type", "D4", "--bound", "16"});
    CHECK(m1.out == m2.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({"enumerate"}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("mutation graph export") {
    Run r = cli({"mutate", "--seed", "a2", "--graph"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"adjacency\"") != std::string::npos);
    CHECK(r.out.find("\"clusters\"") != std::string::npos);
}

TEST_CASE("halffrieze diagonal selector") {
    Run r = cli({"halffrieze", "--spec",
                 "fountain=0; arcs=(0,2n)|n not in {0,1,-1}; arcs=(2n,2n+2); window=-12..12",
                 "--depth", "6", "--diagonal", "dr:0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("index sequence: 1 0 1 0") != std::string::npos);

    Run bad = cli({"halffrieze", "--spec",
                   "fountain=0; arcs=(0,2n)|n not in {0,1,-1}; arcs=(2n,2n+2); window=-12..12",
                   "--depth", "2", "--diagonal", "sideways:0"});
    CHECK(bad.code == 2);
}

TEST_CASE("sl3 enumeration default bound is derived") {
    Run r = cli({"enumerate", "--kind", "sl3", "--width", "2", "--count-only"});
    CHECK(r.code == 0);
    CHECK(r.out == "51\n");
}

TEST_CASE("enumerate kind unitary") {
    Run r = cli({"enumerate", "--kind", "unitary", "--k", "3", "--n", "6", "--count-only"});
    CHECK(r.code == 0);
    CHECK(r.out == "50\n");
}
