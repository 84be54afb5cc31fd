#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "oplab/burge.hpp"
#include "oplab/durfee.hpp"
#include "oplab/hook.hpp"
#include "oplab/multiplicity.hpp"
#include "oplab/ranks.hpp"

using namespace oplab;

namespace {

const FrobeniusSymbol worked_symbol() {
    return FrobeniusSymbol({7, 5, 4, 2, 0},
                           {{6, false}, {4, true}, {4, false}, {3, false}, {1, true}});
}

const Overpartition worked_overpartition() {
    return make_overpartition({{8, true},
                               {7, false},
                               {5, false},
                               {5, false},
                               {5, true},
                               {4, false},
                               {3, false},
                               {3, true},
                               {1, false}});
}

}  // namespace

TEST_CASE("hook algorithm worked example") {
    CHECK(frobenius_to_overpartition(worked_symbol()) == worked_overpartition());
    CHECK(frobenius_to_overpartition(FrobeniusSymbol{}) == Overpartition{});
    CHECK(overpartition_to_frobenius(worked_overpartition()) == worked_symbol());
    CHECK(overpartition_to_frobenius(Overpartition{}) == FrobeniusSymbol{});
}

TEST_CASE("hook algorithm is a weight-preserving bijection") {
    for (int n = 0; n <= 12; ++n) {
        std::set<Overpartition> seen;
        const auto symbols = enumerate_frobenius_symbols(n);
        for (const FrobeniusSymbol& f : symbols) {
            const Overpartition op = frobenius_to_overpartition(f);
            CHECK(weight(op) == n);
            CHECK(seen.insert(op).second);
            CHECK(overpartition_to_frobenius(op) == f);
            // overline counts swap roles across the correspondence
            CHECK(overline_count(op) == f.columns() - non_overlined_bottom_count(f));
        }
        CHECK(seen.size() == enumerate_overpartitions(n).size());
    }
}

TEST_CASE("square-decomposition map and its intermediates") {
    const DurfeeMapTrace tr = durfee_frobenius_trace(worked_symbol());
    CHECK(tr.beta == std::vector<int>{8, 6, 5, 3, 1});
    CHECK(tr.delta == std::vector<int>{4, 1});
    CHECK(tr.alpha == std::vector<int>{4, 3, 3, 2, 1});
    CHECK(tr.gamma == make_overpartition({{8, true}, {7, false}, {5, false}, {5, true}, {3, true}}));
    const Overpartition out = durfee_frobenius(worked_symbol());
    CHECK(out == worked_overpartition());
    CHECK(generalized_durfee_size(out) == 5);
    CHECK(overline_count(out) == 3);
    CHECK(durfee_frobenius(FrobeniusSymbol{}) == Overpartition{});
}

TEST_CASE("square-decomposition statistics transport exhaustively") {
    for (int n = 0; n <= 12; ++n) {
        std::set<Overpartition> seen;
        for (const FrobeniusSymbol& f : enumerate_frobenius_symbols(n)) {
            const Overpartition op = durfee_frobenius(f);
            CHECK(weight(op) == n);
            CHECK(generalized_durfee_size(op) == f.columns());
            CHECK(overline_count(op) == non_overlined_bottom_count(f));
            CHECK(seen.insert(op).second);
            CHECK(durfee_frobenius_inverse(op) == f);
        }
    }
}

TEST_CASE("path-to-ranks worked example") {
    const LatticePath p{2, {Step::SE, Step::SE, Step::NE, Step::NE, Step::NE, Step::NE,
                            Step::SE, Step::SE, Step::NE, Step::S,  Step::SE, Step::NE,
                            Step::NE, Step::SE, Step::SE, Step::SE, Step::E,  Step::NE,
                            Step::NE, Step::SE, Step::NE, Step::NE, Step::NE, Step::S,
                            Step::SE, Step::SE, Step::SE}};
    const FrobeniusSymbol expect({14, 11, 6, 4, 2},
                                 {{7, false}, {6, true}, {5, true}, {4, false}, {3, true}});
    CHECK(path_to_frobenius(p, 5, 3) == expect);
    CHECK(weight(expect) == major_index(p));
    CHECK(non_overlined_bottom_count(expect) == south_count(p));
    CHECK(frobenius_to_path(expect, 5, 3) == p);

    CHECK(path_to_frobenius(LatticePath{}, 3, 3) == FrobeniusSymbol{});
    CHECK(frobenius_to_path(FrobeniusSymbol{}, 3, 3) == LatticePath{});
    CHECK(frobenius_to_path(FrobeniusSymbol{}, 3, 1) ==
          LatticePath{2, {Step::SE, Step::SE}});
}

TEST_CASE("rank window rejection names the column") {
    // ranks of (5 / 0) are (5); for k=2, i=2 the window is [0, 1]
    const FrobeniusSymbol f({5}, {{0, false}});
    CHECK_THROWS_AS((void)frobenius_to_path(f, 2, 2), rank_out_of_window);
    try {
        (void)frobenius_to_path(f, 2, 2);
    } catch (const rank_out_of_window& e) {
        CHECK(e.column == 1);
    }
}

TEST_CASE("path-to-ranks round trips exhaustively") {
    for (int k = 2; k <= 4; ++k)
        for (int i = 1; i <= k; ++i)
            for (int n = 0; n <= 12; ++n)
                for (const LatticePath& p : enumerate_paths(k, i, n)) {
                    const FrobeniusSymbol f = path_to_frobenius(p, k, i);
                    CHECK(weight(f) == n);
                    CHECK(f.columns() == static_cast<int>(peaks(p).size()));
                    for (int r : successive_ranks(f)) {
                        CHECK(r >= -i + 2);
                        CHECK(r <= 2 * k - i - 1);
                    }
                    CHECK(frobenius_to_path(f, k, i) == p);
                }
}

TEST_CASE("ranks-in-window symbols all come from paths") {
    for (int k = 2; k <= 3; ++k)
        for (int i = 1; i <= k; ++i)
            for (int n = 0; n <= 10; ++n) {
                long long in_window = 0;
                for (const FrobeniusSymbol& f : enumerate_frobenius_symbols(n)) {
                    if (!ranks_in_window(f, k, i)) continue;
                    ++in_window;
                    const LatticePath p = frobenius_to_path(f, k, i);
                    CHECK(path_to_frobenius(p, k, i) == f);
                }
                CHECK(in_window == static_cast<long long>(enumerate_paths(k, i, n).size()));
            }
}

TEST_CASE("single-multuple move") {
    const Multuple mu{1, {{1, false}, {1, true}, {3, true}}};
    const Multuple moved = burge_f_multuple(mu);
    CHECK(moved.entries == std::vector<Mult>{{2, true}, {1, false}, {2, true}});
    CHECK(moved.weight() == 10);
    CHECK(mu.weight() - moved.weight() == mu.length());
}

TEST_CASE("full move on the worked multiplicity sequence") {
    // (0, (0,1~), (1,1~,3~)) of weight 24 -> (0,1~,0,2~,1,2~) of weight 21.
    const MultiplicitySequence before(
        {{0, false}, {0, false}, {1, true}, {1, false}, {1, true}, {3, true}});
    CHECK(weight(before) == 24);
    CHECK(multuple_division(before).length == 3);
    const MultiplicitySequence after = burge_f(before);
    CHECK(after.entries() == std::vector<Mult>{{0, false},
                                               {1, true},
                                               {0, false},
                                               {2, true},
                                               {1, false},
                                               {2, true}});
    CHECK(weight(after) == 21);
    CHECK(multuple_division(after).length == 3);

    CHECK(burge_f(MultiplicitySequence{}) == MultiplicitySequence{});
}

TEST_CASE("the move respects weight, length and the gap condition") {
    for (int k = 2; k <= 3; ++k)
        for (int n = 0; n <= 16; ++n)
            for (const Overpartition& op : enumerate_overpartitions(n)) {
                if (!gap_condition_parts(op, k)) continue;
                const MultiplicitySequence ms = multiplicity_sequence(op);
                const auto div = multuple_division(ms);
                if (div.length == 0) continue;
                const MultiplicitySequence out = burge_f(ms);
                CHECK(weight(out) == n - div.length);
                const int new_len = multuple_division(out).length;
                CHECK((new_len == div.length || new_len == div.length - 1));
                CHECK(gap_condition_mults(out, k));
            }
}

TEST_CASE("class recurrences driven by the move") {
    // Tally maps (n, j) per (class, i, N); nmax deep enough for the shifts.
    const int k = 3, nmax = 14, lenmax = 6;
    using Key = std::tuple<int, int>;
    std::map<int, std::map<int, std::map<Key, long long>>> B, G;  // [i][N]
    for (int n = 0; n <= nmax + lenmax; ++n)
        for (const Overpartition& op : enumerate_overpartitions(n)) {
            const MultiplicitySequence ms = multiplicity_sequence(op);
            const auto div = multuple_division(ms);
            if (div.length > lenmax + 1) continue;
            for (int i = 1; i <= k; ++i) {
                if (!in_b_class(op, k, i)) continue;
                B[i][div.length][{n, overline_count(op)}] += 1;
                // feed G_{k,i-1}: members of the (k,i) class whose anchored
                // multuple has span one and final entry differing from an
                // overlined 1, pushed through the move
                const AnchoredInfo info = anchored_multuple_info(ms);
                if (i >= 2 && info.present && info.length == 1 && !info.final_is_overlined_one) {
                    const MultiplicitySequence moved = burge_f(ms);
                    G[i - 1][div.length][{n - div.length,
                                          overline_count(overpartition_from_multiplicities(moved))}] += 1;
                }
            }
        }
    auto b_at = [&](int i, int N, int n, int j) -> long long {
        auto& m = B[i][N];
        auto it = m.find({n, j});
        return it == m.end() ? 0 : it->second;
    };
    auto g_at = [&](int i, int N, int n, int j) -> long long {
        auto& m = G[i][N];
        auto it = m.find({n, j});
        return it == m.end() ? 0 : it->second;
    };
    for (int N = 1; N <= lenmax; ++N)
        for (int n = 0; n <= nmax; ++n)
            for (int j = 0; j <= n; ++j) {
                CHECK(b_at(1, N, n, j) == b_at(2, N, n - N, j));
                for (int i = 2; i <= k; ++i)
                    CHECK(b_at(i, N, n, j) == b_at(i + 1 > k ? k : i + 1, N, n - N, j) +
                                                  g_at(i - 1, N, n - N, j) +
                                                  b_at(i, N - 1, n - N, j - 1));
                CHECK(g_at(1, N, n, j) == b_at(2, N - 1, n - N + 1, j));
                for (int i = 2; i <= k - 1; ++i)
                    CHECK(g_at(i, N, n, j) == b_at(i + 1, N - 1, n - N + 1, j) +
                                                  g_at(i - 1, N, n - N, j) +
                                                  b_at(i, N - 1, n - N, j - 1));
            }
    for (int i = 1; i <= k; ++i) {
        CHECK(b_at(i, 0, 0, 0) == 1);
        for (int n = 1; n <= nmax; ++n)
            for (int j = 0; j <= n; ++j) CHECK(b_at(i, 0, n, j) == 0);
    }
}
