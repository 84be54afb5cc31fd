#pragma once

#include <vector>

#include "oplab/overpartition.hpp"

namespace oplab {

// Multiplicity of one part value: its occurrence count, marked when the
// value carries an overlined occurrence.  overlined implies count > 0.
struct Mult {
    int count = 0;
    bool overlined = false;

    friend bool operator==(const Mult&, const Mult&) = default;
};

// The sequence (f_0, f_1, ..., f_M): f_j is the multiplicity of the part j.
// f_0 is always materialized as (0,false); trailing zero entries beyond it
// are trimmed.
class MultiplicitySequence {
  public:
    MultiplicitySequence() : f_(1) {}
    explicit MultiplicitySequence(std::vector<Mult> f);

    // f(j) is total: 0 beyond the stored range.
    const Mult& f(int j) const;
    int max_value() const { return static_cast<int>(f_.size()) - 1; }
    const std::vector<Mult>& entries() const { return f_; }

    friend bool operator==(const MultiplicitySequence&, const MultiplicitySequence&) = default;

  private:
    std::vector<Mult> f_;
};

MultiplicitySequence multiplicity_sequence(const Overpartition& op);
Overpartition overpartition_from_multiplicities(const MultiplicitySequence& ms);
int weight(const MultiplicitySequence& ms);

// A maximal right-anchored slice (f_m, ..., f_{m+l}) of a multiplicity
// sequence: f_{m+l} > 0, f_m not overlined, interior entries all overlined.
struct Multuple {
    int start = 0;
    std::vector<Mult> entries;  // size l+1

    int length() const { return static_cast<int>(entries.size()) - 1; }
    int weight() const;

    friend bool operator==(const Multuple&, const Multuple&) = default;
};

struct MultupleDivision {
    std::vector<Multuple> multuples;  // left to right
    int length = 0;                   // sum of multuple lengths
};

// Right-to-left parenthesization: close after each positive entry, open at
// the nearest non-overlined entry to its left.
MultupleDivision multuple_division(const MultiplicitySequence& ms);

// The two equivalent forms of the gap condition with modulus k, plus the
// boundary bound on parts equal to 1.
bool gap_condition_parts(const Overpartition& op, int k);
bool gap_condition_mults(const MultiplicitySequence& ms, int k);
bool in_b_class(const Overpartition& op, int k, int i);

}  // namespace oplab
