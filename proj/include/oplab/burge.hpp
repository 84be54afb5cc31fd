#pragma once

#include "oplab/multiplicity.hpp"

namespace oplab {

// One application of the weight-reducing move to a single multuple
// (f_m, ..., f_{m+l}): shuffle the overline toward f_m, decrement f_{m+l},
// increment f_m.  Returns the transformed slice (same start, same span).
Multuple burge_f_multuple(const Multuple& mu);

// Applies the move to every multuple of the division; a resulting part 0 is
// discarded.  Weight drops by the division length.
MultiplicitySequence burge_f(const MultiplicitySequence& ms);

// True when the division of ms contains a multuple anchored at f_0.
bool has_anchored_multuple(const MultiplicitySequence& ms);
// For an anchored multuple, its length and whether its final entry is an
// overlined 1 (the branch data of the recursive classification).
struct AnchoredInfo {
    bool present = false;
    int length = 0;
    bool final_is_overlined_one = false;
};
AnchoredInfo anchored_multuple_info(const MultiplicitySequence& ms);

}  // namespace oplab
