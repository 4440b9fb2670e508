#include "frieze/infgon.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "frieze/bigint.hpp"
#include "frieze/continuant.hpp"

namespace frieze {

std::string InfArc::to_string() const {
    return "(" + std::to_string(a) + "," + (infinite() ? "inf" : std::to_string(b)) + ")";
}

bool crossing_inf(const InfArc& x, const InfArc& y) {
    if (x.a == y.a || x.b == y.b) return false;
    if (x.a == y.b || x.b == y.a) return false;
    // The accumulation point is the largest element; the usual strict
    // interleaving test then covers all cases.
    auto lt = [](long long u, long long v) { return u < v; };
    return (lt(x.a, y.a) && lt(y.a, x.b) && lt(x.b, y.b)) ||
           (lt(y.a, x.a) && lt(x.a, y.b) && lt(y.b, x.b));
}

bool FountainTriangulation::contains(long long x, long long y) const {
    if (x > y) std::swap(x, y);
    if (x == y) return false;
    if (y == x + 1) return true;  // boundary arcs are implicit
    auto match = [&](const ArcFamily& f, long long u, long long v) {
        // Solve e1(t) = u, e2(t) = v for a common integer t.
        bool t_known = false;
        long long t = 0;
        if (f.m1 == 0) {
            if (f.c1 != u) return false;
        } else {
            if ((u - f.c1) % f.m1 != 0) return false;
            t = (u - f.c1) / f.m1;
            t_known = true;
        }
        if (f.m2 == 0) {
            if (f.c2 != v) return false;
        } else {
            long long t2;
            if ((v - f.c2) % f.m2 != 0) return false;
            t2 = (v - f.c2) / f.m2;
            if (t_known && t2 != t) return false;
            t = t2;
            t_known = true;
        }
        if (!t_known) return u == f.c1 && v == f.c2;
        return f.excluded.count(t) == 0;
    };
    for (const ArcFamily& f : families)
        if (match(f, x, y) || match(f, y, x)) return true;
    return false;
}

std::vector<InfArc> FountainTriangulation::materialize() const {
    std::set<InfArc> arcs;
    for (long long v = lo; v < hi; ++v) arcs.insert(InfArc(v, v + 1));
    long long span = hi - lo;
    for (const ArcFamily& f : families) {
        long long reach = span + std::abs(f.c1) + std::abs(f.c2) + 8;
        for (long long t = -reach; t <= reach; ++t) {
            if (f.excluded.count(t)) continue;
            long long x = f.m1 * t + f.c1;
            long long y = f.m2 * t + f.c2;
            if (x == y) continue;
            if (std::min(x, y) < lo || std::max(x, y) > hi) continue;
            arcs.insert(InfArc(x, y));
        }
    }
    return std::vector<InfArc>(arcs.begin(), arcs.end());
}

void FountainTriangulation::validate_window() const {
    if (lo >= hi)
        throw WindowTooNarrowError("FountainTriangulation: empty window; widen the window");
    if (fountain <= lo || fountain >= hi)
        throw WindowTooNarrowError(
            "FountainTriangulation: the fountain must lie strictly inside; widen the window");
    std::vector<InfArc> arcs = materialize();
    // Fountain arcs must reach both window edges.
    long long left = fountain, right = fountain;
    for (const InfArc& a : arcs) {
        if (a.a == fountain || a.b == fountain) {
            left = std::min(left, a.a);
            right = std::max(right, a.b);
        }
    }
    if (left > lo + 1 || right < hi - 1)
        throw WindowTooNarrowError(
            "FountainTriangulation: fountain arcs do not reach the window edges; widen the window");
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j)
            if (crossing_inf(arcs[i], arcs[j]))
                throw Error("FountainTriangulation: crossing arcs " + arcs[i].to_string() +
                            " and " + arcs[j].to_string());
}

namespace {

struct SpecParser {
    std::string s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(const std::string& tok) {
        skip_ws();
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw ParseError("fountain spec: expected integer at " + std::to_string(start));
        return std::stoll(s.substr(start, pos - start));
    }

    // Linear form in n: [coef] ['n'] [+/- const] or plain integer.
    std::pair<long long, long long> linear() {  // (m, c) for m*n + c
        skip_ws();
        long long m = 0, c = 0;
        bool neg = false;
        if (eat("-")) neg = true;
        std::size_t save = pos;
        long long first = 1;
        bool have_digits = false;
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            first = integer();
            have_digits = true;
        }
        skip_ws();
        if (pos < s.size() && s[pos] == 'n') {
            ++pos;
            m = neg ? -first : first;
            skip_ws();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                bool cneg = s[pos] == '-';
                ++pos;
                long long cc = integer();
                c = cneg ? -cc : cc;
            }
        } else {
            if (!have_digits) {
                pos = save;
                throw ParseError("fountain spec: expected linear form");
            }
            c = neg ? -first : first;
        }
        return {m, c};
    }
};

}  // namespace

FountainTriangulation FountainTriangulation::parse(const std::string& spec) {
    FountainTriangulation t;
    bool have_fountain = false, have_window = false;
    std::stringstream ss(spec);
    std::string clause;
    while (std::getline(ss, clause, ';')) {
        SpecParser p{clause};
        p.skip_ws();
        if (p.pos >= clause.size()) continue;
        if (p.eat("fountain")) {
            if (!p.eat("=")) throw ParseError("fountain spec: expected '='");
            t.fountain = p.integer();
            have_fountain = true;
        } else if (p.eat("window")) {
            if (!p.eat("=")) throw ParseError("fountain spec: expected '='");
            t.lo = p.integer();
            if (!p.eat("..")) throw ParseError("fountain spec: expected '..'");
            t.hi = p.integer();
            have_window = true;
        } else if (p.eat("arcs")) {
            if (!p.eat("=") || !p.eat("("))
                throw ParseError("fountain spec: expected 'arcs=('");
            ArcFamily f;
            auto [m1, c1] = p.linear();
            f.m1 = m1;
            f.c1 = c1;
            if (!p.eat(",")) throw ParseError("fountain spec: expected ','");
            auto [m2, c2] = p.linear();
            f.m2 = m2;
            f.c2 = c2;
            if (!p.eat(")")) throw ParseError("fountain spec: expected ')'");
            if (p.eat("|")) {
                if (!p.eat("n")) throw ParseError("fountain spec: expected 'n'");
                bool negated = p.eat("not in");
                if (!negated && !p.eat("in"))
                    throw ParseError("fountain spec: expected 'in' or 'not in'");
                if (!negated) throw ParseError("fountain spec: only 'not in' is supported");
                if (!p.eat("{")) throw ParseError("fountain spec: expected '{'");
                while (true) {
                    f.excluded.insert(p.integer());
                    if (p.eat("}")) break;
                    if (!p.eat(",")) throw ParseError("fountain spec: expected ',' or '}'");
                }
            }
            t.families.push_back(std::move(f));
        } else {
            throw ParseError("fountain spec: unknown clause '" + clause + "'");
        }
    }
    if (!have_fountain || !have_window)
        throw ParseError("fountain spec: fountain= and window= are required");
    return t;
}

std::map<long long, long long> quiddity_window(const FountainTriangulation& t) {
    t.validate_window();
    std::vector<InfArc> arcs = t.materialize();
    std::set<InfArc> arc_set(arcs.begin(), arcs.end());
    std::map<long long, std::vector<long long>> incident;
    for (const InfArc& a : arcs) {
        incident[a.a].push_back(a.b);
        incident[a.b].push_back(a.a);
    }

    std::map<long long, long long> q;
    for (long long v = t.lo; v <= t.hi; ++v) {
        if (v == t.fountain) continue;
        if (v - 1 < t.lo || v + 1 > t.hi) continue;  // boundary arcs must exist
        auto it = incident.find(v);
        if (it == incident.end()) continue;
        // Angular order around v: neighbors below v descending, then
        // neighbors above v descending (coming back from the accumulation
        // point side).
        std::vector<long long> below, above;
        for (long long u : it->second) (u < v ? below : above).push_back(u);
        std::sort(below.rbegin(), below.rend());
        std::sort(above.rbegin(), above.rend());
        std::vector<long long> angular = below;
        angular.insert(angular.end(), above.begin(), above.end());
        // Every consecutive angular pair must close a triangle with an arc.
        bool complete = true;
        for (std::size_t i = 0; i + 1 < angular.size(); ++i) {
            InfArc closing(angular[i], angular[i + 1]);
            if (!arc_set.count(closing)) {
                complete = false;
                break;
            }
        }
        if (!complete) continue;
        q[v] = static_cast<long long>(angular.size()) - 1;
    }
    return q;
}

HalfFriezeWindow half_frieze(const FountainTriangulation& t, int depth) {
    if (depth < 1) throw Error("half_frieze: depth >= 1 required");
    HalfFriezeWindow h;
    h.lo = t.lo;
    h.hi = t.hi;
    h.fountain = t.fountain;
    h.depth = depth;
    h.quiddity = quiddity_window(t);

    for (int r = 1; r <= depth; ++r) {
        bool any = false;
        for (long long i = t.lo; i <= t.hi; ++i) {
            // window a_{i+1} .. a_{i+r}
            std::vector<BigInteger> ys;
            bool ok = true;
            for (long long v = i + 1; v <= i + r; ++v) {
                auto it = h.quiddity.find(v);
                if (it == h.quiddity.end()) {
                    ok = false;
                    break;
                }
                ys.emplace_back(it->second);
            }
            if (!ok) continue;
            BigInteger val = continuant(ys);
            if (val.sign() <= 0)
                throw NonIntegralEntryError("half_frieze: non-positive entry at (" +
                                            std::to_string(i) + "," + std::to_string(r) + ")");
            if (!val.fits_i64())
                throw Error("half_frieze: entry at depth " + std::to_string(r) +
                            " exceeds the 64-bit range");
            h.entries[{i, r}] = val.as_i64();
            any = true;
        }
        if (!any)
            throw WindowTooNarrowError(
                "half_frieze: no computable entries at depth " + std::to_string(r) +
                "; widen the window by at least " + std::to_string(r + 1) + " columns");
    }
    // Every complete diamond must satisfy the frieze rule exactly.
    for (const auto& [key, val] : h.entries) {
        auto [i, r] = key;
        if (!h.has(i + 1, r) || !h.has(i, r + 1) || r + 1 > depth) continue;
        long long bottom = h.at(i, r + 1);
        long long right = h.at(i + 1, r);
        long long top = r == 1 ? 1 : (h.has(i + 1, r - 1) ? h.at(i + 1, r - 1) : -1);
        if (top < 0) continue;
        if (val * right - top * bottom != 1)
            throw NonIntegralEntryError("half_frieze: diamond rule violated at (" +
                                        std::to_string(i) + "," + std::to_string(r) + ")");
    }
    return h;
}

std::string HalfFriezeWindow::to_text() const {
    // Entry (i, r) sits at half-column 2i + r + 1; rows are r = -1 (zeros),
    // r = 0 (ones), then 1..depth.
    long long half_lo = 2 * lo;
    long long half_hi = 2 * hi + 2;
    std::size_t cell = 1;
    for (const auto& [key, val] : entries)
        cell = std::max(cell, std::to_string(val).size());
    cell += 2;
    std::ostringstream os;
    auto emit_row = [&](int r, auto value_at) {
        std::string line;
        for (long long hc = half_lo; hc <= half_hi; ++hc) {
            if ((hc - r - 1) % 2 != 0) continue;
            long long i = (hc - r - 1) / 2;
            std::string text = value_at(i);
            std::size_t col = static_cast<std::size_t>(hc - half_lo) * cell / 2;
            if (line.size() < col) line += std::string(col - line.size(), ' ');
            line += text;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    };
    emit_row(-1, [&](long long) { return std::string("0"); });
    emit_row(0, [&](long long) { return std::string("1"); });
    for (int r = 1; r <= depth; ++r) {
        emit_row(r, [&](long long i) {
            auto it = entries.find({i, r});
            return it == entries.end() ? std::string("\xC2\xB7") : std::to_string(it->second);
        });
    }
    return os.str();
}

std::vector<int> penrose_diagonal(const HalfFriezeWindow& h, DiagonalDir dir, long long index) {
    std::vector<int> bits;
    for (int r = 1; r <= h.depth; ++r) {
        long long i = dir == DiagonalDir::DownRight ? index : index - r - 1;
        if (!h.has(i, r)) continue;
        bits.push_back(h.at(i, r) == 1 ? 1 : 0);
    }
    if (bits.empty())
        throw DiagonalOutOfWindowError("penrose_diagonal: diagonal has no entries in window");
    return bits;
}

}  // namespace frieze
