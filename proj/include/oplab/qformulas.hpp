#pragma once

#include <vector>

#include "oplab/series.hpp"

namespace oplab {

// (z; q^base)_count.
TruncatedSeries poch_base(int qmax, int xmax, const Monomial& z, int count, int base);

// (q^r, q^{m-r}, q^m; q^m)_infinity.
TruncatedSeries triple_product(int r, int m, int qmax);

// Both sides of the triple-product identity for z = c q^e (c = +-1, e <= 0)
// under the base substitution q -> q^m, compared through qmax.
bool jacobi_triple_product_check(int c, int e, int m, int qmax);

// Generating function of overpartitions, a marking overlines.
TruncatedSeries overpartition_gf(int qmax);

// Bivariate generating function over the (k,i)-conditioned paths: a marks
// South steps, q the major index.
TruncatedSeries path_series(int k, int i, int qmax);

// Closed forms for the refinement by peak count N, and the auxiliary family
// obtained by beheading the NE-opening paths of the (i+1)-class.
TruncatedSeries npeaks_series(int k, int i, int N, int qmax);
TruncatedSeries npeaks_aux_series(int k, int i, int N, int qmax);

// The same two families evaluated purely from their mutual recurrences.
struct RecurrenceTables {
    // e[i][N] valid for 1 <= i <= k; g[i][N] valid for 0 <= i <= k-1.
    std::vector<std::vector<TruncatedSeries>> e, g;
};
RecurrenceTables npeaks_by_recurrence(int k, int nmax, int qmax);

// Nested-profile generating function of the Durfee dissection classes.
TruncatedSeries durfee_series(int k, int i, int qmax);

// Andrews-style H/J hierarchy: x marks the number of parts.
TruncatedSeries h_series(int k, int i, int qmax, int xmax);
TruncatedSeries j_series(int k, int i, int qmax, int xmax);
int default_xmax(int k, int qmax);

// Generating function of overpartitions with a fixed n-offset Durfee size N.
TruncatedSeries durfee_stratum_series(int n, int N, int qmax);
// Sum over N of the strata against the full overpartition gf; returns the
// first differing q exponent, or -1 on success.
int durfee_stratification_check(int n, int qmax);

// The four specializations with closed product forms.
enum class ProductFamily {
    andrews_gordon,         // a -> 0
    gollnitz_gordon,        // a -> 1/q, q -> q^2
    gordon_overpartitions,  // a -> 1
    gordon_shifted          // a -> 1/q
};

TruncatedSeries product_series(ProductFamily f, int k, int i, int qmax);
TruncatedSeries specialized_path_series(ProductFamily f, int k, int i, int qmax);

}  // namespace oplab
