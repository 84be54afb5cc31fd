#pragma once

#include <string>
#include <vector>

#include "oplab/overpartition.hpp"

namespace oplab {

enum class Step { NE, SE, S, E };

const char* step_name(Step s);
Step step_from_name(const std::string& name);

// First-quadrant walk from (0, start_height) to the x-axis.  South steps
// only follow North-East steps, East steps only run along height 0, and a
// nonempty path ends with a South-East or South step at height 0.
struct LatticePath {
    int start_height = 0;
    std::vector<Step> steps;

    bool empty() const { return steps.empty(); }
    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

// A vertex preceded by NE and followed by S (a NES peak) or SE (a NESE peak).
struct Peak {
    int x = 0;
    int y = 0;
    int u = 0;  // South steps strictly to the left
    bool nes = false;
    int east_parity = 0;  // parity of East steps to the left

    friend bool operator==(const Peak&, const Peak&) = default;
};

// Structural invariants alone (no start/ceiling conditions).
bool structurally_valid(const LatticePath& p);

// Structural validity plus start height k-i and height < k.
bool validate(const LatticePath& p, int k, int i);

int max_height(const LatticePath& p);
std::vector<Peak> peaks(const LatticePath& p);
int major_index(const LatticePath& p);
int south_count(const LatticePath& p);

// Per-peak relative heights, left to right: the largest h admitting flanking
// vertices (x', y-h) and (x'', y-h) with x' < x <= x'' such that no peak
// between them exceeds height y and every height-y peak between them has
// abscissa >= x.
std::vector<int> relative_heights(const LatticePath& p);

std::string to_string(const LatticePath& p);

// All paths satisfying the (k,i)-conditions with major index exactly n.
// Deterministic depth-first order over the step alphabet NE < SE < S < E.
std::vector<LatticePath> enumerate_paths(int k, int i, int n);

}  // namespace oplab
