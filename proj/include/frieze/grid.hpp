#pragma once

#include <string>
#include <vector>

#include "frieze/bigint.hpp"
#include "frieze/continuant.hpp"
#include "frieze/errors.hpp"
#include "frieze/laurent.hpp"

namespace frieze {

// One period of a closed frieze band in tiling-matrix coordinates.
// Entries t(i,j) live on the band d = j - i in [-(k-1), w+k]:
//   d in [-(k-1),-1] : zeros          d = 0 and d = w+1 : ones
//   d in [1,w]       : interior       d in [w+2, w+k]   : zeros
// Horizontal periodicity t(i+n, j+n) = t(i,j) with n = w+k+1.
// The classical arc coordinates m_{a,b} (with m_{a,a} = 0, m_{a,a+1} = 1)
// are recovered as m_{a,b} = t(a, b-1); see arc_entry().
template <class T>
class BasicFriezeGrid {
public:
    BasicFriezeGrid() : BasicFriezeGrid(2, 0) {}
    BasicFriezeGrid(int k, int w) : k_(k), w_(w), n_(w + k + 1) {
        if (k < 2 || w < 0) throw Error("FriezeGrid: need k >= 2 and w >= 0");
        rows_.assign(w_ + 2 * k_, std::vector<T>(n_, T(0)));
        for (int i = 0; i < n_; ++i) {
            row(0)[i] = T(1);
            row(w_ + 1)[i] = T(1);
        }
    }

    int order() const { return k_; }
    int width() const { return w_; }
    int period() const { return n_; }
    int dmin() const { return -(k_ - 1); }
    int dmax() const { return w_ + k_; }
    bool in_band(long long d) const { return d >= dmin() && d <= dmax(); }

    std::vector<T>& row(int d) { return rows_[d - dmin()]; }
    const std::vector<T>& row(int d) const { return rows_[d - dmin()]; }

    const T& at(long long i, long long j) const {
        long long d = j - i;
        if (!in_band(d)) throw WindowOutOfBandError("FriezeGrid: t(" + std::to_string(i) + "," +
                                                    std::to_string(j) + ") outside band");
        return rows_[d - dmin()][mod_n(i)];
    }
    T& entry(long long i, long long j) {
        long long d = j - i;
        if (!in_band(d)) throw WindowOutOfBandError("FriezeGrid: t(" + std::to_string(i) + "," +
                                                    std::to_string(j) + ") outside band");
        return rows_[d - dmin()][mod_n(i)];
    }
    // m_{a,b} in arc coordinates, a < b arbitrary integers.
    const T& arc_entry(long long a, long long b) const { return at(a, b - 1); }

    int mod_n(long long i) const {
        long long m = i % n_;
        if (m < 0) m += n_;
        return static_cast<int>(m);
    }

    friend bool operator==(const BasicFriezeGrid& a, const BasicFriezeGrid& b) {
        return a.k_ == b.k_ && a.w_ == b.w_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const BasicFriezeGrid& a, const BasicFriezeGrid& b) {
        return !(a == b);
    }

private:
    int k_, w_, n_;
    std::vector<std::vector<T>> rows_;
};

using FriezeGrid = BasicFriezeGrid<BigInteger>;
using LaurentFriezeGrid = BasicFriezeGrid<LaurentPoly>;

// c_{i,i+1} for i = 1..n (cyclic: index n wraps to c_{n,1}).
template <class T>
struct BasicCoefficientSequence {
    BasicCoefficientSequence() = default;
    explicit BasicCoefficientSequence(int n) : values(n, T(1)) {}
    std::vector<T> values;
    const T& c(long long i) const {  // c_{i,i+1}
        long long m = (i - 1) % static_cast<long long>(values.size());
        if (m < 0) m += values.size();
        return values[m];
    }
    T& c_mut(long long i) {
        long long m = (i - 1) % static_cast<long long>(values.size());
        if (m < 0) m += values.size();
        return values[m];
    }
};

using CoefficientSequence = BasicCoefficientSequence<BigInteger>;
using LaurentCoefficientSequence = BasicCoefficientSequence<LaurentPoly>;

namespace detail {
// Determinant by cofactor expansion; exact over any commutative ring.
template <class T>
T ring_det(std::vector<std::vector<T>> m) {
    std::size_t sz = m.size();
    if (sz == 0) return T(1);
    if (sz == 1) return m[0][0];
    T total(0);
    for (std::size_t c = 0; c < sz; ++c) {
        std::vector<std::vector<T>> minor;
        minor.reserve(sz - 1);
        for (std::size_t r = 1; r < sz; ++r) {
            std::vector<T> row;
            row.reserve(sz - 1);
            for (std::size_t cc = 0; cc < sz; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        T cof = m[0][c] * ring_det(std::move(minor));
        if (c % 2 == 0)
            total += cof;
        else
            total -= cof;
    }
    return total;
}
}  // namespace detail

// det of the l x l window M[a][b] = t(i+a, j+b), 1 <= l <= k+1.
template <class T>
T diamond_det(const BasicFriezeGrid<T>& f, long long i, long long j, int l) {
    if (l < 1 || l > f.order() + 1)
        throw WindowOutOfBandError("diamond_det: size " + std::to_string(l) + " out of range");
    long long d = j - i;
    if (!f.in_band(d - (l - 1)) || !f.in_band(d + (l - 1)))
        throw WindowOutOfBandError("diamond_det: window at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") leaves the band");
    std::vector<std::vector<T>> m(l, std::vector<T>(l, T(0)));
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b) m[a][b] = f.at(i + a, j + b);
    return detail::ring_det(std::move(m));
}

struct ValidationReport {
    bool boundary_ok = true;
    bool frieze_ok = true;      // all k x k diamonds have determinant 1
    bool tame_ok = true;        // all (k+1) x (k+1) diamonds have determinant 0
    bool positivity_ok = true;  // integer ring only
    std::vector<std::string> failures;
    bool ok() const { return boundary_ok && frieze_ok && tame_ok && positivity_ok; }
};

ValidationReport validate(const FriezeGrid& f);
ValidationReport validate(const LaurentFriezeGrid& f);

// Builds the CC frieze (k = 2) from a quiddity sequence via continuants.
// Throws NotClosingError / NonPositiveEntryError.
FriezeGrid frieze_from_quiddity(const std::vector<long long>& quiddity);

// Same grid computed by forward diamond-rule propagation from the quiddity
// row; used as an independent cross-check of frieze_from_quiddity.
FriezeGrid frieze_from_quiddity_by_propagation(const std::vector<long long>& quiddity);

// Def.-style check of a width-w frieze with coefficients (k = 2 shape with
// the 1-rows replaced by the coefficient rows, c_{i,i+1} at t(i,i) and
// c_{i-1,i} at t(i, i+w+1)): zeros, coefficient rows, nonzero interior, and
// the twisted rule t(i,j)t(i+1,j+1) - t(i+1,j)t(i,j+1) = c_{i,i+1}c_{j+1,j+2}.
template <class T>
bool check_coefficient_frieze(const BasicFriezeGrid<T>& f,
                              const BasicCoefficientSequence<T>& coeffs);

// Glide symmetry m_{a,b} = m_{b, a+n}, i.e. t(i,j) = t(j+1, i+n-1). k = 2 only.
bool glide_check(const FriezeGrid& f);
template <class T>
bool glide_check_any(const BasicFriezeGrid<T>& f);

std::string to_text(const FriezeGrid& f);
std::string to_json(const FriezeGrid& f);
FriezeGrid frieze_from_json(const std::string& text);
std::string canonical_key(const FriezeGrid& f);

extern template class BasicFriezeGrid<BigInteger>;
extern template class BasicFriezeGrid<LaurentPoly>;

}  // namespace frieze
