#pragma once

#include <vector>

namespace frieze {

// Continuant P_n over any commutative ring with 1: P_0 = 1, P_1(y1) = y1,
// P_n = y_n * P_{n-1} - P_{n-2}. Equals the determinant of the tri-diagonal
// matrix with diagonal y_1..y_n and unit off-diagonals.
template <class T>
T continuant(const std::vector<T>& ys) {
    T prev2(1);
    if (ys.empty()) return prev2;
    T prev1 = ys[0];
    for (std::size_t i = 1; i < ys.size(); ++i) {
        T cur = ys[i] * prev1 - prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

template <class T, class It>
T continuant_window(It begin, It end) {
    std::vector<T> ys(begin, end);
    return continuant<T>(ys);
}

}  // namespace frieze
