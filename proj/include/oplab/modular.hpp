#pragma once

#include <vector>

#include "oplab/overpartition.hpp"

namespace oplab {

// Ferrers diagram filled with 2s, except that rows ending in a marked corner
// end with a 1.  Stored through its overpartition shape; a row for the part
// v weighs 2v - 1 when the part is overlined and 2v otherwise.
struct TwoModularDiagram {
    Overpartition shape;

    friend bool operator==(const TwoModularDiagram&, const TwoModularDiagram&) = default;
};

int weight(const TwoModularDiagram& d);
int ones_count(const TwoModularDiagram& d);
std::vector<int> row_weights(const TwoModularDiagram& d);

// Erase one 2 per cell, turn each 1 into a marked corner: the overpartition
// of weight (n+j)/2 with j overlined parts.
Overpartition phi_two_modular(const TwoModularDiagram& d);
TwoModularDiagram phi_two_modular_inverse(const Overpartition& op);

// Reconstructs the diagram from its row weights (each row 2v or 2v-1, v >= 1).
TwoModularDiagram diagram_from_row_weights(const std::vector<int>& rows);

}  // namespace oplab
