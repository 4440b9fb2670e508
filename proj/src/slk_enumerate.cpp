#include "frieze/slk_enumerate.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace frieze {

namespace {

using i128 = __int128;

constexpr long long kValueLimit = 1000000000000LL;  // overflow guard, far above any frieze entry

// One determinant constraint: an l x l diamond window with fixed target.
struct Constraint {
    int l = 0;
    long long target = 0;
    // Cell index per matrix slot, or -1 with a fixed 0/1 value.
    std::vector<int> cells;        // l*l entries
    std::vector<long long> fixed;  // used where cells[t] == -1
};

struct Engine {
    int k, w, n;
    long long bound;
    std::vector<Constraint> constraints;
    std::vector<std::vector<int>> touching;  // cell -> constraint indices
    std::vector<int> branch_order;           // cells branched in this order
    std::vector<bool> is_branch_cell;

    std::vector<long long> value;
    std::vector<bool> assigned;
    std::vector<bool> dfs_branched;
    SlkEnumerationReport rep;
    std::vector<std::string> keys;  // canonical keys of accepted friezes
    std::vector<FriezeGrid> out;

    Engine(int k_, int w_, long long bound_) : k(k_), w(w_), n(w_ + k_ + 1), bound(bound_) {
        const int cells = w * n;
        value.assign(cells, 0);
        assigned.assign(cells, false);
        dfs_branched.assign(cells, false);
        is_branch_cell.assign(cells, false);
        build_constraints();
        for (int i = 1; i <= n; ++i)
            for (int d = 1; d <= std::min(w, k - 1); ++d) {
                branch_order.push_back(cell_id(i, d));
                is_branch_cell[cell_id(i, d)] = true;
            }
    }

    int cell_id(long long i, int d) const {  // interior cell t(i, i+d), d in [1,w]
        long long col = (i - 1) % n;
        if (col < 0) col += n;
        return static_cast<int>((d - 1) * n + col);
    }

    // Cell index or fixed value of t(i, j).
    std::pair<int, long long> slot(long long i, long long j) const {
        long long d = j - i;
        if (d >= 1 && d <= w) return {cell_id(i, static_cast<int>(d)), 0};
        if (d == 0 || d == w + 1) return {-1, 1};
        return {-1, 0};  // zero rows
    }

    void build_constraints() {
        auto add = [&](long long i, long long D, int l, long long target) {
            Constraint c;
            c.l = l;
            c.target = target;
            for (int a = 0; a < l; ++a)
                for (int b = 0; b < l; ++b) {
                    auto [cell, fixed] = slot(i + a, i + D + b);
                    c.cells.push_back(cell);
                    c.fixed.push_back(fixed);
                }
            constraints.push_back(std::move(c));
        };
        for (int i = 1; i <= n; ++i) {
            for (int D = 0; D <= w + 1; ++D) add(i, D, k, 1);
            for (int D = 1; D <= w; ++D) add(i, D, k + 1, 0);
        }
        touching.assign(w * n, {});
        for (std::size_t ci = 0; ci < constraints.size(); ++ci)
            for (int cell : constraints[ci].cells)
                if (cell >= 0) touching[cell].push_back(static_cast<int>(ci));
        for (auto& t : touching) {
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
        }
    }

    // det of the constraint matrix with the single unassigned cell (if any)
    // treated as u: det = base + u * coef.
    void linearize(const Constraint& c, int ucell, i128& base, i128& coef) const {
        const int l = c.l;
        auto entry = [&](int a, int b, bool zero_u) -> i128 {
            int idx = a * l + b;
            int cell = c.cells[idx];
            if (cell < 0) return c.fixed[idx];
            if (cell == ucell) return zero_u ? i128(0) : i128(1);
            return value[cell];
        };
        // Recursive Laplace on the first row; l <= k+1 <= small.
        auto det = [&](auto&& self, std::vector<int>& rows, std::vector<int>& cols,
                       bool zero_u) -> i128 {
            std::size_t m = rows.size();
            if (m == 0) return 1;
            if (m == 1) return entry(rows[0], cols[0], zero_u);
            i128 total = 0;
            int r0 = rows[0];
            std::vector<int> subrows(rows.begin() + 1, rows.end());
            for (std::size_t cpos = 0; cpos < m; ++cpos) {
                i128 e = entry(r0, cols[cpos], zero_u);
                if (e != 0) {
                    std::vector<int> subcols;
                    subcols.reserve(m - 1);
                    for (std::size_t t = 0; t < m; ++t)
                        if (t != cpos) subcols.push_back(cols[t]);
                    i128 minor = self(self, subrows, subcols, zero_u);
                    total += (cpos % 2 == 0 ? e : -e) * minor;
                }
            }
            return total;
        };
        std::vector<int> rows(l), cols(l);
        for (int t = 0; t < l; ++t) rows[t] = cols[t] = t;
        base = det(det, rows, cols, /*zero_u=*/true);
        if (ucell < 0) {
            coef = 0;
            return;
        }
        i128 with_one = det(det, rows, cols, /*zero_u=*/false);
        coef = with_one - base;
    }

    // Returns false on contradiction. When a cell gets forced, pushes it on
    // the trail and returns its id via `forced`.
    enum class Prop { Ok, Conflict };
    Prop examine(int ci, std::vector<int>& trail) {
        const Constraint& c = constraints[ci];
        // Window slots are pairwise distinct cells (l <= k+1 < n), so the
        // determinant is linear in a single unassigned cell.
        int ucell = -1;
        for (int cell : c.cells) {
            if (cell >= 0 && !assigned[cell]) {
                if (ucell == -1)
                    ucell = cell;
                else if (ucell != cell)
                    return Prop::Ok;  // two unknowns: no information yet
            }
        }
        i128 base, coef;
        linearize(c, ucell, base, coef);
        if (ucell == -1) return base == c.target ? Prop::Ok : Prop::Conflict;
        if (coef == 0) return base == c.target ? Prop::Ok : Prop::Conflict;
        i128 num = i128(c.target) - base;
        if (num % coef != 0) return Prop::Conflict;
        i128 u = num / coef;
        if (u < 1 || u > kValueLimit) {
            if (u > kValueLimit) ++rep.overflow_rejects;
            return Prop::Conflict;
        }
        value[ucell] = static_cast<long long>(u);
        assigned[ucell] = true;
        trail.push_back(ucell);
        return Prop::Ok;
    }

    bool propagate_from(int cell, std::vector<int>& trail) {
        std::vector<int> queue{cell};
        while (!queue.empty()) {
            int cur = queue.back();
            queue.pop_back();
            for (int ci : touching[cur]) {
                std::size_t before = trail.size();
                if (examine(ci, trail) == Prop::Conflict) return false;
                for (std::size_t t = before; t < trail.size(); ++t) queue.push_back(trail[t]);
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            assigned[trail.back()] = false;
            trail.pop_back();
        }
    }

    void accept() {
        FriezeGrid f(k, w);
        long long max_interior = 0, max_branched = 0;
        for (int i = 1; i <= n; ++i)
            for (int d = 1; d <= w; ++d) {
                long long v = value[cell_id(i, d)];
                f.entry(i, i + d) = BigInteger(v);
                max_interior = std::max(max_interior, v);
                if (dfs_branched[cell_id(i, d)]) max_branched = std::max(max_branched, v);
            }
        for (const Constraint& c : constraints) {
            i128 base, coef;
            linearize(c, -1, base, coef);
            if (base != c.target) return;  // full re-check; discard inconsistent leaves
        }
        std::string key = canonical_key(f);
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) return;
        keys.push_back(key);
        out.push_back(std::move(f));
        ++rep.count;
        rep.max_interior = std::max(rep.max_interior, max_interior);
        rep.max_branched = std::max(rep.max_branched, max_branched);
        if (max_branched == bound) rep.bound_ceiling_reached = true;
    }

    int next_unassigned() const {
        for (int cell : branch_order)
            if (!assigned[cell]) return cell;
        for (int cell = 0; cell < static_cast<int>(value.size()); ++cell)
            if (!assigned[cell]) return cell;
        return -1;
    }

    void dfs(std::vector<int>& trail, int first_cell, long long first_lo, long long first_hi) {
        int cell = next_unassigned();
        if (cell < 0) {
            accept();
            return;
        }
        ++rep.nodes;
        long long lo = 1, hi = bound;
        if (cell == first_cell) {
            lo = first_lo;
            hi = first_hi;
        }
        dfs_branched[cell] = true;
        for (long long v = lo; v <= hi; ++v) {
            std::size_t mark = trail.size();
            value[cell] = v;
            assigned[cell] = true;
            trail.push_back(cell);
            if (propagate_from(cell, trail)) dfs(trail, first_cell, first_lo, first_hi);
            undo(trail, mark);
        }
        dfs_branched[cell] = false;
    }
};

}  // namespace

std::vector<FriezeGrid> enumerate_slk_grid(int k, int w, long long bound,
                                           SlkEnumerationReport* report, int threads) {
    if (k < 2 || w < 1) throw Error("enumerate_slk_grid: need k >= 2 and w >= 1");
    if (bound < 1) throw Error("enumerate_slk_grid: bound >= 1 required");

    int first_cell = Engine(k, w, bound).branch_order.front();
    int nthreads = static_cast<int>(std::max<long long>(1, std::min<long long>(threads, bound)));

    std::vector<Engine> engines;
    engines.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) engines.emplace_back(k, w, bound);

    auto run = [&](int t) {
        Engine& e = engines[t];
        std::vector<int> trail;
        // Ranges of the first branched value are split across workers.
        for (long long v = 1 + t; v <= bound; v += nthreads) {
            trail.clear();
            std::fill(e.assigned.begin(), e.assigned.end(), false);
            std::fill(e.dfs_branched.begin(), e.dfs_branched.end(), false);
            e.dfs(trail, first_cell, v, v);
        }
    };
    if (nthreads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    std::map<std::string, FriezeGrid> merged;
    SlkEnumerationReport rep;
    for (Engine& e : engines) {
        for (std::size_t i = 0; i < e.out.size(); ++i) merged.emplace(e.keys[i], e.out[i]);
        rep.max_interior = std::max(rep.max_interior, e.rep.max_interior);
        rep.max_branched = std::max(rep.max_branched, e.rep.max_branched);
        rep.bound_ceiling_reached = rep.bound_ceiling_reached || e.rep.bound_ceiling_reached;
        rep.overflow_rejects += e.rep.overflow_rejects;
        rep.nodes += e.rep.nodes;
    }
    std::vector<FriezeGrid> out;
    for (auto& [key, f] : merged) out.push_back(std::move(f));
    rep.count = out.size();
    if (report) *report = rep;
    return out;
}

}  // namespace frieze
