#pragma once

#include <optional>
#include <vector>

#include "oplab/overpartition.hpp"

namespace oplab {

// Largest N with (#overlined parts) + #(non-overlined parts >= N) >= N.
int generalized_durfee_size(const Overpartition& op);

// Generalized variant offset by n: greatest N with
// #(overlined parts > n) + #(non-overlined parts >= N+n) >= N-n.
// Always returns N >= n.
int n_durfee_size(const Overpartition& op, int n);

// Dissection block sizes n_1 >= ... >= n_{k-1} >= 0.
struct DurfeeProfile {
    int k = 2;
    std::vector<int> sizes;  // k-1 entries

    friend bool operator==(const DurfeeProfile&, const DurfeeProfile&) = default;
};

// Rows of the stacked representation used for dissection: all overlined
// parts (descending) above the non-overlined parts (descending).
std::vector<Part> stacked_rows(const Overpartition& op);

// Dissects into i-1 successive Durfee squares followed by k-i successive
// Durfee rectangles (first block generalized).  Succeeds only when the
// remainder after block k-1 is empty and every rectangle satisfies the side
// condition that the partition to its right has at most d parts, i.e. the
// (d+1)-th block row is exactly d.  Returns the profile, or nothing.
std::optional<DurfeeProfile> durfee_dissection(const Overpartition& op, int k, int i);

// Greedy block-by-block trace of the same procedure, not limited to k-1
// blocks: block sizes taken until the remainder is empty or a block fails.
// schedule_squares = number of leading square blocks (rest are rectangles,
// negative means squares forever).  Returns block sizes plus whatever
// remainder the procedure could not consume.
struct DissectionTrace {
    std::vector<int> blocks;
    std::vector<int> leftover;  // unconsumed partition rows
    bool failed = false;        // a rectangle side condition failed
};
DissectionTrace durfee_blocks(const Overpartition& op, int schedule_squares);

}  // namespace oplab
