#include "toric/betti.hpp"

#include <gtest/gtest.h>

using namespace toric;

namespace {

GradedBettiTable c4_table() {
    GradedBettiTable t;
    t.add(0, 0, 1);
    t.add(1, 2, 1);
    return t;
}

// Totals 1,4,6,4,1 with β_{i,2i} = C(4,i).
GradedBettiTable diagonal_table() {
    GradedBettiTable t;
    const long binom[] = {1, 4, 6, 4, 1};
    for (int i = 0; i <= 4; ++i) t.add(i, 2 * i, binom[i]);
    return t;
}

} // namespace

TEST(BettiTable, Arithmetic) {
    GradedBettiTable t;
    EXPECT_TRUE(t.empty());
    t.add(1, 2, 3);
    t.add(1, 3, 1);
    t.add(1, 2, -3);
    EXPECT_EQ(t.get(1, 2), 0);
    EXPECT_EQ(t.entries().size(), 1u);
    EXPECT_THROW(t.add(2, 4, -1), std::logic_error);
    EXPECT_EQ(diagonal_table().totals(), (std::vector<long>{1, 4, 6, 4, 1}));
    EXPECT_EQ(diagonal_table().total(2), 6);
}

TEST(BettiTable, ModuleIdealRoundTrip) {
    const GradedBettiTable m = diagonal_table();
    const GradedBettiTable i = m.as_ideal();
    EXPECT_EQ(i.subject(), BettiSubject::ideal);
    EXPECT_EQ(i.get(0, 2), 4);
    EXPECT_EQ(i.as_module(0), m);
}

TEST(BettiTable, Collapse) {
    MultiBettiTable T;
    T.add(0, {0, 0, 0, 0}, 1);
    T.add(1, {1, 1, 1, 1}, 1);
    const GradedBettiTable by_sum = betti_graded(T, 2L);
    EXPECT_EQ(by_sum, c4_table());
    const GradedBettiTable by_vec = betti_graded(T, RatVector(4, Rational(1, 2)));
    EXPECT_EQ(by_vec, c4_table());
    EXPECT_THROW(betti_graded(T, 3L), std::invalid_argument);
    EXPECT_THROW(betti_graded(T, RatVector(4, Rational(1, 3))), std::invalid_argument);
}

TEST(BettiTable, Invariants) {
    EXPECT_EQ(regularity(diagonal_table()), 4);
    EXPECT_EQ(proj_dim(diagonal_table()), 4);
    EXPECT_EQ(regularity(c4_table()), 1);
    EXPECT_THROW(regularity(GradedBettiTable{}), std::invalid_argument);
    // (1 - t^2)^4
    const std::vector<Integer> expected{1, 0, -4, 0, 6, 0, -4, 0, 1};
    EXPECT_EQ(euler_polynomial(diagonal_table()), expected);
}

TEST(Formulas, MappingCone) {
    const GradedBettiTable t = mapping_cone_betti(c4_table(), 3);
    EXPECT_EQ(t.get(0, 0), 1);
    EXPECT_EQ(t.get(1, 2), 1);
    EXPECT_EQ(t.get(1, 3), 1);
    EXPECT_EQ(t.get(2, 5), 1);
    EXPECT_EQ(t.totals(), (std::vector<long>{1, 2, 1}));
    EXPECT_THROW(mapping_cone_betti(c4_table().as_ideal(), 3), ModeMismatch);

    MultiBettiTable m;
    m.add(0, {0, 0}, 1);
    const MultiBettiTable mc = mapping_cone_betti(m, MultiDegree{1, 2});
    EXPECT_EQ(mc.get(1, {1, 2}), 1);
    EXPECT_THROW(mapping_cone_betti(m, MultiDegree{1}), std::invalid_argument);
}

TEST(Formulas, Kunneth) {
    const GradedBettiTable k = kunneth_betti<int>({c4_table(), c4_table()});
    EXPECT_EQ(k.get(0, 0), 1);
    EXPECT_EQ(k.get(1, 2), 2);
    EXPECT_EQ(k.get(2, 4), 1);
    EXPECT_EQ(kunneth_betti<int>({c4_table(), c4_table(), c4_table(), c4_table()}), diagonal_table());
    EXPECT_EQ(kunneth_betti<int>({trivial_graded_table(), c4_table()}), c4_table());
    EXPECT_THROW(kunneth_betti<int>({c4_table(), c4_table().as_ideal()}), ModeMismatch);
    EXPECT_THROW(kunneth_betti<int>({}), std::invalid_argument);

    MultiBettiTable a, b;
    a.add(0, {0}, 1);
    a.add(1, {2}, 1);
    b.add(0, {0, 0}, 1);
    b.add(1, {1, 1}, 1);
    const MultiBettiTable ab = kunneth_betti<MultiDegree>({a, b});
    EXPECT_EQ(ab.get(2, {2, 1, 1}), 1);
}

TEST(Output, TextLayout) {
    const std::string expected = "       0 1 2 3 4\n"
                                 "total: 1 4 6 4 1\n"
                                 "    0: 1 . . . .\n"
                                 "    1: . 4 . . .\n"
                                 "    2: . . 6 . .\n"
                                 "    3: . . . 4 .\n"
                                 "    4: . . . . 1\n";
    EXPECT_EQ(format_betti(diagonal_table()), expected);

    GradedBettiTable wide;
    wide.add(0, 0, 1);
    wide.add(1, 2, 12);
    EXPECT_EQ(format_betti(wide), "       0  1\n"
                                  "total: 1 12\n"
                                  "    0: 1  .\n"
                                  "    1: . 12\n");
    EXPECT_EQ(format_betti(GradedBettiTable{}), "(empty table)\n");
}

TEST(Output, JsonAndCsv) {
    const auto j = to_json(c4_table());
    EXPECT_EQ(j["mode"], "graded");
    EXPECT_EQ(j["subject"], "R/I");
    EXPECT_EQ(j["regularity"], 1);
    EXPECT_EQ(j["projective_dimension"], 1);
    EXPECT_EQ(j["entries"].size(), 2u);
    EXPECT_EQ(to_csv(c4_table()), "i,j,beta\n0,0,1\n1,2,1\n");
    MultiBettiTable m;
    m.add(1, {1, 2}, 3);
    EXPECT_EQ(to_csv(m), "i,degree,beta\n1,1 2,3\n");
    EXPECT_EQ(to_json(m)["entries"][0]["beta"], 3);
}
