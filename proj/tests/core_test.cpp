#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oplab/durfee.hpp"
#include "oplab/frobenius.hpp"
#include "oplab/modular.hpp"
#include "oplab/multiplicity.hpp"
#include "oplab/overpartition.hpp"
#include "oplab/qformulas.hpp"

using namespace oplab;

TEST_CASE("weight") {
    CHECK(weight(make_overpartition({{5, true}, {4, false}, {3, false}, {3, true}})) == 15);
    CHECK(weight(Overpartition{}) == 0);
    CHECK(weight(make_overpartition({{3, false}, {1, false}, {1, false}, {1, true}})) == 6);
}

TEST_CASE("canonical storage order") {
    const Overpartition op = make_overpartition({{3, true}, {5, false}, {3, false}});
    CHECK(op.parts() == std::vector<Part>{{5, false}, {3, false}, {3, true}});
    CHECK_THROWS(make_overpartition({{2, true}, {2, true}}));
    CHECK_THROWS(make_overpartition({{0, false}}));
}

TEST_CASE("enumerate_overpartitions of 3 lists the eight objects in order") {
    const auto all = enumerate_overpartitions(3);
    REQUIRE(all.size() == 8);
    CHECK(all[0] == make_overpartition({{3, false}}));
    CHECK(all[1] == make_overpartition({{3, true}}));
    CHECK(all[2] == make_overpartition({{2, false}, {1, false}}));
    CHECK(all[3] == make_overpartition({{2, true}, {1, false}}));
    CHECK(all[4] == make_overpartition({{2, false}, {1, true}}));
    CHECK(all[5] == make_overpartition({{2, true}, {1, true}}));
    CHECK(all[6] == make_overpartition({{1, false}, {1, false}, {1, false}}));
    CHECK(all[7] == make_overpartition({{1, false}, {1, false}, {1, true}}));
    CHECK(enumerate_overpartitions(0).size() == 1);
    CHECK(enumerate_overpartitions(0)[0].empty());
}

TEST_CASE("enumeration counts match the product expansion") {
    const TruncatedSeries gf = overpartition_gf(30).specialize_a_one();
    for (int n = 0; n <= 12; ++n)
        CHECK(BigInt(enumerate_overpartitions(n).size()) == gf.coeff(n, 0, 0));
    CHECK(BigInt(enumerate_overpartitions(6).size()) == gf.coeff(6, 0, 0));
}

TEST_CASE("multiplicity sequence") {
    const Overpartition op = make_overpartition(
        {{6, false}, {6, false}, {5, false}, {4, false}, {4, false}, {4, true}, {3, false}, {1, true}});
    const MultiplicitySequence ms = multiplicity_sequence(op);
    CHECK(ms.entries() == std::vector<Mult>{{0, false},
                                            {1, true},
                                            {0, false},
                                            {1, false},
                                            {3, true},
                                            {1, false},
                                            {2, false}});
    CHECK(multiplicity_sequence(Overpartition{}).entries() == std::vector<Mult>{{0, false}});
    CHECK(multiplicity_sequence(make_overpartition({{2, false}, {2, false}, {1, false}})).entries() ==
          std::vector<Mult>{{0, false}, {1, false}, {2, false}});
    CHECK(overpartition_from_multiplicities(ms) == op);
}

TEST_CASE("multuple division") {
    // (0, 2~, 0, 2, 1~, 1) -> ((0,2~), 0, (2,1~,1)); lengths 1 and 2.
    MultiplicitySequence ms({{0, false}, {2, true}, {0, false}, {2, false}, {1, true}, {1, false}});
    const auto div = multuple_division(ms);
    REQUIRE(div.multuples.size() == 2);
    CHECK(div.multuples[0].start == 0);
    CHECK(div.multuples[0].entries == std::vector<Mult>{{0, false}, {2, true}});
    CHECK(div.multuples[0].length() == 1);
    CHECK(div.multuples[1].start == 3);
    CHECK(div.multuples[1].entries == std::vector<Mult>{{2, false}, {1, true}, {1, false}});
    CHECK(div.multuples[1].length() == 2);
    CHECK(div.length == 3);

    CHECK(multuple_division(MultiplicitySequence{}).length == 0);
    CHECK(multuple_division(MultiplicitySequence{}).multuples.empty());

    // Hand-traced right-to-left parenthesization of (0,1,1,1): close at f3,
    // anchor at f2; close at f1, anchor at f0 -> ((0,1),(1,1)), length 2.
    MultiplicitySequence m2({{0, false}, {1, false}, {1, false}, {1, false}});
    const auto d2 = multuple_division(m2);
    REQUIRE(d2.multuples.size() == 2);
    CHECK(d2.multuples[0].start == 0);
    CHECK(d2.multuples[0].entries == std::vector<Mult>{{0, false}, {1, false}});
    CHECK(d2.multuples[1].start == 2);
    CHECK(d2.multuples[1].entries == std::vector<Mult>{{1, false}, {1, false}});
    CHECK(d2.length == 2);
}

TEST_CASE("multuple weight") {
    Multuple mu{1, {{1, false}, {1, true}, {3, true}}};
    CHECK(mu.length() == 2);
    CHECK(mu.weight() == 12);
}

TEST_CASE("the two gap-condition forms agree") {
    for (int k = 2; k <= 5; ++k)
        for (int n = 0; n <= 16; ++n)
            for (const Overpartition& op : enumerate_overpartitions(n)) {
                const auto ms = multiplicity_sequence(op);
                CHECK(gap_condition_parts(op, k) == gap_condition_mults(ms, k));
            }
}

TEST_CASE("successive ranks") {
    const FrobeniusSymbol f({7, 4, 2, 0},
                            {{3, true}, {3, false}, {1, false}, {0, true}});
    CHECK(successive_ranks(f) == std::vector<int>{2, 0, 1, 0});
    CHECK(weight(f) == 4 + (7 + 4 + 2 + 0) + (3 + 3 + 1 + 0));

    CHECK(successive_ranks(FrobeniusSymbol({0}, {{0, false}})) == std::vector<int>{0});

    // By Definition: r1 = 5 - 1 - #(plain right of col 1) = 3, r2 = 2 - 1 = 1.
    const FrobeniusSymbol g({5, 2}, {{1, true}, {1, false}});
    CHECK(successive_ranks(g) == std::vector<int>{3, 1});

    CHECK(successive_ranks(FrobeniusSymbol{}).empty());
    CHECK_THROWS(FrobeniusSymbol({2, 2}, {{0, false}, {0, false}}));
    CHECK_THROWS(FrobeniusSymbol({2, 1}, {{0, false}, {0, true}}));
}

TEST_CASE("frobenius enumeration is complete") {
    // Same cardinality as overpartitions, weight by weight.
    for (int n = 0; n <= 10; ++n)
        CHECK(enumerate_frobenius_symbols(n).size() == enumerate_overpartitions(n).size());
}

TEST_CASE("generalized Durfee size") {
    CHECK(generalized_durfee_size(make_overpartition(
              {{7, true}, {4, false}, {3, false}, {3, true}, {2, false}, {1, true}})) == 4);
    CHECK(generalized_durfee_size(Overpartition{}) == 0);
    CHECK(generalized_durfee_size(make_overpartition({{8, true},
                                                      {7, false},
                                                      {5, false},
                                                      {5, false},
                                                      {5, true},
                                                      {4, false},
                                                      {3, false},
                                                      {3, true},
                                                      {1, false}})) == 5);
}

TEST_CASE("offset Durfee size") {
    const Overpartition op = make_overpartition({{8, false},
                                                 {8, false},
                                                 {6, true},
                                                 {5, false},
                                                 {5, false},
                                                 {3, false},
                                                 {3, false},
                                                 {3, true},
                                                 {1, true}});
    CHECK(n_durfee_size(op, 2) == 6);
    CHECK(n_durfee_size(Overpartition{}, 3) == 3);
    for (int n = 0; n <= 16; ++n)
        for (const Overpartition& o : enumerate_overpartitions(n))
            CHECK(n_durfee_size(o, 0) == generalized_durfee_size(o));
}

TEST_CASE("durfee dissection on the worked dissection example") {
    const Overpartition op = make_overpartition({{6, false},
                                                 {5, false},
                                                 {5, true},
                                                 {4, false},
                                                 {4, false},
                                                 {3, false},
                                                 {2, false},
                                                 {2, false},
                                                 {2, true},
                                                 {1, false}});
    // Four successive squares 4,3,2,1 exhaust it; three do not.
    const auto squares = durfee_blocks(op, -1);
    CHECK(squares.blocks == std::vector<int>{4, 3, 2, 1});
    CHECK(squares.leftover.empty());
    CHECK_FALSE(squares.failed);
    CHECK_FALSE(durfee_dissection(op, 4, 4).has_value());
    const auto k5 = durfee_dissection(op, 5, 5);
    REQUIRE(k5.has_value());
    CHECK(k5->sizes == std::vector<int>{4, 3, 2, 1});
    // Three-square schedule stops with the single leftover square row.
    const auto three = durfee_blocks(op, 3);
    CHECK(std::vector<int>(three.blocks.begin(), three.blocks.begin() + 3) ==
          std::vector<int>{4, 3, 2});
    CHECK(three.leftover == std::vector<int>{1});

    // Rectangles: 4, 2, 1 with nothing left.
    const auto rect = durfee_dissection(op, 4, 1);
    REQUIRE(rect.has_value());
    CHECK(rect->sizes == std::vector<int>{4, 2, 1});

    const auto empty = durfee_dissection(Overpartition{}, 4, 2);
    REQUIRE(empty.has_value());
    CHECK(empty->sizes == std::vector<int>{0, 0, 0});
}

TEST_CASE("dissection counts match the profile series") {
    for (int k = 2; k <= 3; ++k)
        for (int i = 1; i <= k; ++i) {
            const TruncatedSeries d = durfee_series(k, i, 12);
            std::map<std::pair<int, int>, long long> tally;
            for (int n = 0; n <= 12; ++n)
                for (const Overpartition& op : enumerate_overpartitions(n))
                    if (durfee_dissection(op, k, i)) tally[{n, overline_count(op)}] += 1;
            for (int n = 0; n <= 12; ++n)
                for (int j = 0; j <= n; ++j)
                    CHECK(d.coeff(n, j, 0) == BigInt(tally[{n, j}]));
        }
}

TEST_CASE("two-modular diagrams") {
    const Overpartition fig1 = make_overpartition({{5, true}, {4, false}, {3, false}, {3, true}});
    const TwoModularDiagram d{fig1};
    CHECK(row_weights(d) == std::vector<int>{9, 8, 6, 5});
    CHECK(weight(d) == 28);
    CHECK(ones_count(d) == 2);
    CHECK(phi_two_modular(d) == fig1);
    CHECK(weight(phi_two_modular(d)) == 15);
    CHECK(diagram_from_row_weights({9, 8, 6, 5}) == d);

    CHECK(weight(TwoModularDiagram{}) == 0);
    CHECK(phi_two_modular_inverse(Overpartition{}) == TwoModularDiagram{});

    // Weight- and mark-preserving round trip, exhaustively.
    for (int n = 0; n <= 14; ++n)
        for (const Overpartition& op : enumerate_overpartitions(n)) {
            const TwoModularDiagram m = phi_two_modular_inverse(op);
            CHECK(weight(m) == 2 * weight(op) - overline_count(op));
            CHECK(phi_two_modular(m) == op);
            CHECK(diagram_from_row_weights(row_weights(m)) == m);
        }
}

TEST_CASE("superpartitions") {
    CHECK(enumerate_superpartitions(0).size() == 2);  // empty, (0~)
    CHECK_THROWS(Superpartition({{0, false}}));
    CHECK_THROWS(Superpartition({{0, true}, {0, true}}));
    const Superpartition sp({{2, false}, {0, true}});
    CHECK(weight(sp) == 2);
    for (int n = 1; n <= 10; ++n)
        CHECK(enumerate_superpartitions(n).size() == 2 * enumerate_overpartitions(n).size());
}
