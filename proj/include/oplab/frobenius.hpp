#pragma once

#include <string>
#include <vector>

#include "oplab/overpartition.hpp"

namespace oplab {

// Two-rowed array: top row a strictly decreasing partition into distinct
// nonnegative parts, bottom row nonnegative parts in overpartition style
// where the first occurrence of a value may be overlined (canonical storage:
// overlined copy first among equal values).  Weight is N + sum of all
// entries.
class FrobeniusSymbol {
  public:
    FrobeniusSymbol() = default;
    FrobeniusSymbol(std::vector<int> top, std::vector<Part> bottom);

    const std::vector<int>& top() const { return top_; }
    const std::vector<Part>& bottom() const { return bottom_; }
    int columns() const { return static_cast<int>(top_.size()); }
    bool empty() const { return top_.empty(); }

    friend bool operator==(const FrobeniusSymbol&, const FrobeniusSymbol&) = default;

  private:
    std::vector<int> top_;
    std::vector<Part> bottom_;
};

int weight(const FrobeniusSymbol& f);
int non_overlined_bottom_count(const FrobeniusSymbol& f);
std::string to_string(const FrobeniusSymbol& f);

// r_i = a_i - b_i - #(non-overlined entries among b_{i+1}..b_N).
std::vector<int> successive_ranks(const FrobeniusSymbol& f);

bool ranks_in_window(const FrobeniusSymbol& f, int k, int i);

// All symbols of weight n, each exactly once, deterministic order.
std::vector<FrobeniusSymbol> enumerate_frobenius_symbols(int n);

}  // namespace oplab
