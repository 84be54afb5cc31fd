#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oplab/durfee.hpp"
#include "oplab/multiplicity.hpp"
#include "oplab/overpartition.hpp"
#include "oplab/qformulas.hpp"

using namespace oplab;

TEST_CASE("path series basics") {
    for (int k = 2; k <= 4; ++k)
        for (int i = 1; i <= k; ++i) {
            const TruncatedSeries e = path_series(k, i, 12);
            CHECK(e.coeff(0, 0, 0) == 1);
            for (int q = 0; q <= 12; ++q) CHECK(e.coeff(q).min_a() >= 0);
        }
}

TEST_CASE("fixed-peak closed forms against the recurrences") {
    const int qmax = 30, nmax = 6;
    for (int k = 2; k <= 4; ++k) {
        const RecurrenceTables t = npeaks_by_recurrence(k, nmax, qmax);
        for (int N = 0; N <= nmax; ++N) {
            for (int i = 1; i <= k; ++i)
                CHECK(npeaks_series(k, i, N, qmax).first_difference(
                          t.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(N)]) == -1);
            for (int i = 0; i <= k - 1; ++i)
                CHECK(npeaks_aux_series(k, i, N, qmax).first_difference(
                          t.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(N)]) == -1);
        }
    }
}

TEST_CASE("fixed-peak boundary values") {
    CHECK(npeaks_series(3, 2, 0, 20) == TruncatedSeries::one(20));
    CHECK(npeaks_aux_series(3, 0, 2, 20).first_difference(TruncatedSeries::zero(20)) == 0);
    // the aux family vanishes identically at i = 0
    RecurrenceTables t = npeaks_by_recurrence(3, 4, 20);
    for (int N = 0; N <= 4; ++N) CHECK(t.g[0][static_cast<std::size_t>(N)].is_zero());
}

TEST_CASE("summing the fixed-peak series recovers the path series") {
    const int qmax = 30;
    for (int k = 2; k <= 4; ++k)
        for (int i = 1; i <= k; ++i) {
            TruncatedSeries sum(qmax, 0);
            for (int N = 0; N * (N + 1) / 2 <= qmax; ++N) sum += npeaks_series(k, i, N, qmax);
            CHECK(sum.first_difference(path_series(k, i, qmax)) == -1);
        }
}

TEST_CASE("profile series equals path series") {
    const int qmax = 30;
    for (int k = 2; k <= 4; ++k)
        for (int i = 1; i <= k; ++i)
            CHECK(durfee_series(k, i, qmax).first_difference(path_series(k, i, qmax)) == -1);
}

TEST_CASE("stratified identity") {
    for (int n = 0; n <= 4; ++n) {
        CHECK(durfee_stratification_check(n, 30) == -1);
        CHECK(durfee_stratification_check(-n, 30) == -1);
    }
    // Strata agree with direct enumeration by offset Durfee size.
    for (int off : {0, 1, 2}) {
        std::map<std::tuple<int, int, int>, long long> tally;  // (w, j, N)
        for (int w = 0; w <= 16; ++w)
            for (const Overpartition& op : enumerate_overpartitions(w))
                tally[{w, overline_count(op), n_durfee_size(op, off)}] += 1;
        for (int N = off; N * (N + 1) / 2 - off * (off + 1) / 2 <= 16; ++N) {
            const TruncatedSeries s = durfee_stratum_series(off, N, 16);
            for (int w = 0; w <= 16; ++w)
                for (int j = 0; j <= w; ++j)
                    CHECK(s.coeff(w, j, 0) == BigInt(tally[{w, j, N}]));
        }
    }
}

TEST_CASE("corollary products match the specializations") {
    const int qmax = 25;  // acceptance runs deeper
    for (int k = 2; k <= 3; ++k)
        for (int i = 1; i <= k; ++i)
            for (ProductFamily f : {ProductFamily::andrews_gordon, ProductFamily::gollnitz_gordon,
                                    ProductFamily::gordon_overpartitions, ProductFamily::gordon_shifted}) {
                const TruncatedSeries lhs = specialized_path_series(f, k, i, qmax);
                const TruncatedSeries rhs = product_series(f, k, i, qmax);
                CHECK(lhs.first_difference(rhs) == -1);
            }
}

TEST_CASE("first classical product specializes to the Rogers-Ramanujan shape") {
    // (k,i) = (2,2): product (q^2, q^3, q^5; q^5)_inf / (q)_inf.
    const int qmax = 30;
    const TruncatedSeries rr =
        triple_product(2, 5, qmax).divided_by(poch(qmax, Monomial{1, 0, 0, 1}, -1));
    CHECK(product_series(ProductFamily::andrews_gordon, 2, 2, qmax).first_difference(rr) == -1);
}

TEST_CASE("adjacent class sums telescope to a single congruence product") {
    const int qmax = 30;
    for (int k = 2; k <= 3; ++k)
        for (int i = 1; i <= k - 1; ++i) {
            TruncatedSeries lhs = path_series(k, i, qmax).specialize_a_one() +
                                  path_series(k, i + 1, qmax).specialize_a_one();
            TruncatedSeries rhs = poch(qmax, Monomial{-1, 0, 0, 0}, -1)
                                      .divided_by(poch(qmax, Monomial{1, 0, 0, 1}, -1)) *
                                  triple_product(i, 2 * k, qmax);
            CHECK(lhs.first_difference(rhs) == -1);
        }
}

TEST_CASE("part-count refinement against the gap-conditioned tallies") {
    const int nmax = 10;
    for (int k = 2; k <= 3; ++k)
        for (int i = 1; i <= k; ++i) {
            const TruncatedSeries j_raw = j_series(k, i, nmax, default_xmax(k, nmax));
            std::map<std::tuple<int, int, int>, long long> tally;  // (n, overlines, parts)
            for (int n = 0; n <= nmax; ++n)
                for (const Overpartition& op : enumerate_overpartitions(n))
                    if (in_b_class(op, k, i))
                        tally[{n, overline_count(op), op.size()}] += 1;
            for (int n = 0; n <= nmax; ++n)
                for (int j = 0; j <= n; ++j)
                    for (int p = 0; p <= n; ++p) {
                        const BigInt got = j_raw.coeff(n, j, p) * ((j % 2 == 0) ? 1 : -1);
                        CHECK(got == BigInt(tally[{n, j, p}]));
                    }
        }
}

TEST_CASE("J-hierarchy boundary identities") {
    const int qmax = 12;
    for (int k = 2; k <= 3; ++k) {
        const int xmax = default_xmax(k, qmax);
        for (int i = 1; i <= k; ++i) {
            const TruncatedSeries j = j_series(k, i, qmax, xmax);
            // x -> 0 leaves the constant 1.
            for (int q = 0; q <= qmax; ++q)
                for (const auto& t : j.coeff(q).terms())
                    if (t.x == 0) CHECK(((q == 0 && t.a == 0 && t.c == 1) || t.x != 0));
            CHECK(j.coeff(0, 0, 0) == 1);
        }
        CHECK(j_series(k, 1, qmax, xmax)
                  .first_difference(j_series(k, k, qmax, xmax).substitute_x_with_xq()) == -1);
        CHECK(h_series(k, 0, qmax, xmax).is_zero());
    }
}
