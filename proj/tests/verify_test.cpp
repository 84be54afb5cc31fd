#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oplab/frobenius.hpp"
#include "oplab/qformulas.hpp"
#include "oplab/verify.hpp"

using namespace oplab;

TEST_CASE("family tables at small sizes") {
    const CountTable e = count_family('E', 2, 2, 6);
    CHECK(e.at(0, 0, 0) == 1);
    CHECK(e.at(1, 0, 0) == 0);

    // the gap-conditioned family marginal matches overpartitions into parts
    // not divisible by 2: product of (1+q^v)/(1-q^v) over odd v
    const CountTable b = count_family('B', 2, 2, 10);
    const auto marg = b.weight_marginal();
    TruncatedSeries direct = TruncatedSeries::one(10);
    for (int v = 1; v <= 10; v += 2) {
        TruncatedSeries f = TruncatedSeries::one(10);
        f.add_term(v, 0, 0, 1);  // (1 + q^v) for the overline choice
        direct = direct * f;
        direct = direct.divided_by(poch(10, Monomial{1, 0, 0, v}, 1));  // 1/(1-q^v)
    }
    for (int n = 0; n <= 10; ++n) {
        auto it = marg.find(n);
        const long long have = it == marg.end() ? 0 : it->second;
        CHECK(BigInt(have) == direct.coeff(n, 0, 0));
    }
}

TEST_CASE("main verification passes at (2,2) and (3,1)") {
    CHECK(verify_main(2, 2, 10).pass);
    CHECK(verify_main(3, 1, 9).pass);
}

TEST_CASE("a corrupted rank window is caught and located") {
    // shrink the window by hand: compare the honest B table against a C table
    // computed with ranks in [-i+2, 2k-i-2]
    const int k = 2, i = 2, nmax = 8;
    const CountTable b = count_family('B', k, i, nmax);
    CountTable c{'C', k, i, nmax, {}};
    for (int n = 0; n <= nmax; ++n)
        for (const FrobeniusSymbol& f : enumerate_frobenius_symbols(n)) {
            bool ok = true;
            for (int r : successive_ranks(f))
                if (r < -i + 2 || r > 2 * k - i - 2) ok = false;
            if (ok) c.cells[{n, non_overlined_bottom_count(f), f.columns()}] += 1;
        }
    bool mismatch = false;
    for (const auto& [key, v] : b.cells)
        if (c.cells.find(key) == c.cells.end() || c.cells.at(key) != v) mismatch = true;
    CHECK(mismatch);
}

TEST_CASE("section 7 identities at small sizes") {
    CHECK(verify_prop71(2, 2, 12).pass);
    CHECK(verify_thm72(3, 1, 10).pass);
    CHECK(verify_thm73(3, 2, 10).pass);
    CHECK(verify_section7("prop71", 2, 1, 10).pass);
    CHECK_THROWS(verify_section7("nope", 2, 1, 10));
    CHECK_THROWS((void)verify_thm72(3, 3, 10));
}

TEST_CASE("resource guard trips") {
    CHECK_THROWS_AS((void)count_family('B', 2, 2, 500), resource_limit_error);
}
