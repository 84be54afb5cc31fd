#pragma once

#include <stdexcept>

#include "oplab/frobenius.hpp"
#include "oplab/path.hpp"

namespace oplab {

// The i-th peak from the right becomes column i: a type-0 peak (even number
// of East steps to its left) maps through
//   s = (x + a - y + u)/2,  t = (x - a + y - 2 - u)/2,
// a type-1 peak through
//   s = (x + a + y - 1 + u)/2,  t = (x - a - y - 1 - u)/2,
// with a = k - i the start height; t is overlined for a NESE peak.
FrobeniusSymbol path_to_frobenius(const LatticePath& p, int k, int i);

// Inverse; requires every successive rank in [-i+2, 2k-i-1], otherwise
// throws rank_out_of_window carrying the offending column.
struct rank_out_of_window : std::invalid_argument {
    int column;  // 1-based
    rank_out_of_window(int col, const std::string& msg)
        : std::invalid_argument(msg), column(col) {}
};

LatticePath frobenius_to_path(const FrobeniusSymbol& f, int k, int i);

}  // namespace oplab
