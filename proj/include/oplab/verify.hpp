#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace oplab {

// Refined tallies of one family: (weight, mark count, refinement statistic)
// -> count.  The statistic is the family's own: multiplicity-sequence length,
// Frobenius columns, leading Durfee block size, or peak count.
struct CountTable {
    char family = '?';  // 'B', 'C', 'D', 'E'
    int k = 0, i = 0, nmax = 0;
    std::map<std::tuple<int, int, int>, long long> cells;

    long long at(int n, int j, int N) const;
    std::map<int, long long> weight_marginal() const;
};

// Resource ceilings; OPLAB_MAX_N / OPLAB_MAX_K / OPLAB_MAX_QMAX override.
struct ResourceLimits {
    int max_n = 40;
    int max_k = 8;
    int max_qmax = 120;
};
ResourceLimits resource_limits();
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CountTable count_family(char family, int k, int i, int nmax);

struct Discrepancy {
    bool found = false;
    std::string left, right;
    int n = 0, j = 0, N = 0;
    long long left_count = 0, right_count = 0;
};

struct VerifyReport {
    std::string identity;
    int k = 0, i = 0, nmax = 0;
    bool pass = false;
    Discrepancy first;
    double elapsed_ms = 0.0;
};

// Four-way table equality including the refinement statistic.
VerifyReport verify_main(int k, int i, int nmax);

// Five-way count equality transported through the 2-modular correspondence.
VerifyReport verify_prop71(int k, int i, int nmax);
// Class sums against congruence-restricted superpartition counts.
VerifyReport verify_thm72(int k, int i, int nmax);
// Gap-conditioned superpartitions against two congruence products.
VerifyReport verify_thm73(int k, int i, int nmax);

VerifyReport verify_section7(const std::string& which, int k, int i, int nmax);

}  // namespace oplab
