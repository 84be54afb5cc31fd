#pragma once

#include "oplab/frobenius.hpp"
#include "oplab/overpartition.hpp"

namespace oplab {

// Hook algorithm, processing columns right to left: overlined bottom entries
// merge the hook h(a_i, b_i) into the plain pile, the rest feed the conjugate
// pile and the distinct pile that becomes the overlined parts.
Overpartition frobenius_to_overpartition(const FrobeniusSymbol& f);
FrobeniusSymbol overpartition_to_frobenius(const Overpartition& op);

// Pile states after each processed column, rightmost first.
struct HookStep {
    std::vector<int> alpha;
    std::vector<int> beta;

    friend bool operator==(const HookStep&, const HookStep&) = default;
};
std::vector<HookStep> hook_algorithm_trace(const FrobeniusSymbol& f);

// Intermediate data of the square-decomposition correspondence, exposed for
// inspection: beta = top row + 1, delta and alpha split off the bottom row,
// gamma the recombined overpartition whose non-overlined parts are >= N.
struct DurfeeMapTrace {
    std::vector<int> beta;
    std::vector<int> delta;
    std::vector<int> alpha;
    Overpartition gamma;
};

// Square-decomposition map: sends a symbol with N columns and j overlined
// bottom entries to an overpartition with generalized Durfee square N and
// N-j overlined parts.
Overpartition durfee_frobenius(const FrobeniusSymbol& f);
DurfeeMapTrace durfee_frobenius_trace(const FrobeniusSymbol& f);
FrobeniusSymbol durfee_frobenius_inverse(const Overpartition& op);

}  // namespace oplab
