#pragma once

#include <cstdint>
#include <vector>

#include "frieze/grid.hpp"

namespace frieze {

struct SlkEnumerationReport {
    std::size_t count = 0;
    long long max_interior = 0;       // largest interior entry over accepted friezes
    long long max_branched = 0;       // largest branched-cell value over accepted friezes
    bool bound_ceiling_reached = false;  // some accepted frieze branched at the bound
    unsigned long long overflow_rejects = 0;
    unsigned long long nodes = 0;
};

// All n-periodic tame integral SL_k friezes of width w with interior entries
// in [1, bound], n = w + k + 1. Backtracking over the first k-1 interior
// rows with single-unknown determinant propagation for the rest; the bound
// caps branched cells only, so the report can certify no undercount.
std::vector<FriezeGrid> enumerate_slk_grid(int k, int w, long long bound,
                                           SlkEnumerationReport* report = nullptr,
                                           int threads = 1);

}  // namespace frieze
