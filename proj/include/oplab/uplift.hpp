#pragma once

#include <vector>

#include "oplab/path.hpp"

namespace oplab {

// Staging data for building a (k,i)-path out of a shorter-ceiling path with
// no South steps: the base carries the peaks of relative height >= 2 of the
// result, lambda picks which peaks become NESE, b drives the rightward moves
// of the inserted relative-height-one peaks.
struct UpliftCertificate {
    LatticePath base;
    std::vector<int> lambda;  // distinct, strictly decreasing, within [0, n1-1]
    std::vector<int> b;       // nonincreasing, nonnegative
    int k = 2;
    int i = 1;

    friend bool operator==(const UpliftCertificate&, const UpliftCertificate&) = default;
};

// Insert a NES spike at every peak apex; every relative height rises by one.
LatticePath volcanic_uplift(const LatticePath& base);

// Prepend `count` NES spikes at the path start.
LatticePath prepend_nes_peaks(const LatticePath& p, int count);

// For each entry c of lambda, turn the (c+1)-th peak from the right from NES
// into NESE (its S becomes SE, shifting the tail).
LatticePath mark_peaks_nese(const LatticePath& p, const std::vector<int>& lambda);

// Moves the peak with left-to-right index `idx` one unit right, first
// sliding along a chain of met peaks to its rightmost member.  Returns the
// index of the peak that physically moved.
int move_peak_right(LatticePath& p, int idx);

// Mirror move; transfers along met chains to the leftmost member first.
// Returns the moved index, or -1 when the move is blocked (path start, or
// the height ceiling k-1).
int move_peak_left(LatticePath& p, int idx, int k);

LatticePath uplift(const UpliftCertificate& c);
UpliftCertificate uplift_inverse(const LatticePath& p, int k, int i);

}  // namespace oplab
