#include "toric/resolve.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

using namespace toric;
using testutil::fixture_graph;

namespace {

// Hilbert function of K[NA] in degree k by counting distinct A-images.
Integer semigroup_count(const IntMatrix& A, int k) {
    std::set<std::vector<long>> images;
    for (const auto& m : testutil::monomials_of_degree(A.cols(), k)) {
        std::vector<long> img(A.rows(), 0);
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j) img[i] += A(i, j).get_si() * m[j];
        images.insert(img);
    }
    return static_cast<unsigned long>(images.size());
}

// Coefficients 0..D of (1-t)^s Σ_k HF(k) t^k.
Polynomial numerator_from_counts(const IntMatrix& A, int D) {
    Polynomial series;
    for (int k = 0; k <= D; ++k) series.push_back(semigroup_count(A, k));
    for (std::size_t r = 0; r < A.cols(); ++r)
        for (std::size_t k = series.size(); k-- > 1;) series[k] -= series[k - 1];
    poly::trim(series);
    return series;
}

} // namespace

TEST(Polynomials, Helpers) {
    const Polynomial a{1, 1};
    EXPECT_EQ(poly::mul(a, a), (Polynomial{1, 2, 1}));
    EXPECT_EQ(poly::sub(Polynomial{1, 2, 1}, Polynomial{1, 2, 1}), Polynomial{});
    EXPECT_EQ(poly::shift(a, 2), (Polynomial{0, 0, 1, 1}));
    EXPECT_EQ(poly::one_minus_power(3), (Polynomial{1, 0, 0, -1}));
    EXPECT_EQ(poly::divide_one_minus_t(poly::one_minus_power(3)), (Polynomial{1, 1, 1}));
    EXPECT_THROW(poly::divide_one_minus_t(Polynomial{1, 1}), std::domain_error);
    EXPECT_EQ(poly::eval(Polynomial{1, 2, 1}, 1), 4);
    EXPECT_EQ(poly::to_string(Polynomial{1, 4, 6}), "1 + 4*t + 6*t^2");
    EXPECT_EQ(poly::to_string(Polynomial{1, 0, -4}), "1 - 4*t^2");
}

TEST(Hilbert, FourCycle) {
    const HilbertData h = hilbert_data(toric_ideal_of_graph(cycle_graph(4)));
    EXPECT_EQ(h.numerator, (Polynomial{1, 0, -1}));
    EXPECT_EQ(h.dimension, 3u);
    EXPECT_EQ(h.h_polynomial, (Polynomial{1, 1}));
}

TEST(Hilbert, NumeratorMatchesSemigroupCount) {
    for (const auto& name : testutil::graph_fixture_names()) {
        const ToricIdeal I = toric_ideal_of_graph(fixture_graph(name));
        const HilbertData h = hilbert_data(I);
        const int D = std::max<int>(static_cast<int>(h.numerator.size()) - 1, 0);
        EXPECT_EQ(numerator_from_counts(I.matrix, D), h.numerator) << name;
    }
}

TEST(Hilbert, StandardMonomials) {
    const ToricIdeal I = toric_ideal_of_graph(fixture_graph("even_path"));
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(Integer(static_cast<unsigned long>(standard_monomials(I.gb, k).size())), semigroup_count(I.matrix, k));
}

TEST(Hilbert, Errors) {
    EXPECT_THROW(hilbert_data(toric_ideal_of_matrix(IntMatrix{{1, 2}})), NotGradable);
}

TEST(Betti, CompleteIntersections) {
    const GradedBettiTable c4 = betti_graded_table(toric_ideal_of_graph(cycle_graph(4)));
    EXPECT_EQ(c4.totals(), (std::vector<long>{1, 1}));
    EXPECT_EQ(c4.get(1, 2), 1);
    // Two independent quadrics: Koszul complex.
    const GradedBettiTable sq = betti_graded_table(toric_ideal_of_graph(fixture_graph("two_squares")));
    EXPECT_EQ(sq.get(0, 0), 1);
    EXPECT_EQ(sq.get(1, 2), 2);
    EXPECT_EQ(sq.get(2, 4), 1);
    EXPECT_EQ(sq.entries().size(), 3u);
    // Zero ideal.
    EXPECT_EQ(betti_graded_table(toric_ideal_of_graph(cycle_graph(3))), trivial_graded_table());
}

TEST(Betti, TwistedCubic) {
    const ToricIdeal I = toric_ideal_of_matrix(IntMatrix{{3, 2, 1, 0}, {0, 1, 2, 3}});
    const GradedBettiTable t = betti_graded_table(I);
    EXPECT_EQ(t.get(1, 2), 3);
    EXPECT_EQ(t.get(2, 3), 2);
    EXPECT_EQ(t.totals(), (std::vector<long>{1, 3, 2}));
}

TEST(Betti, BackendsAgreeOnFixtures) {
    BettiOptions dc, kz;
    kz.backend = BettiBackend::koszul;
    for (const auto& name : testutil::graph_fixture_names()) {
        const ToricIdeal I = toric_ideal_of_graph(fixture_graph(name));
        EXPECT_EQ(betti_multigraded(I, dc).table, betti_multigraded(I, kz).table) << name;
    }
}

TEST(Betti, EulerPolynomialIsHilbertNumerator) {
    for (const auto& name : testutil::graph_fixture_names()) {
        const ToricIdeal I = toric_ideal_of_graph(fixture_graph(name));
        EXPECT_EQ(euler_polynomial(betti_graded_table(I)), hilbert_data(I).numerator) << name;
    }
}

TEST(Betti, StrandEnumerationsAgree) {
    BettiOptions all;
    all.all_strands = true;
    for (const auto& name : {"cycle4", "two_squares", "even_path", "theta_path", "two_triangles"}) {
        const ToricIdeal I = toric_ideal_of_graph(fixture_graph(name));
        EXPECT_EQ(betti_multigraded(I).table, betti_multigraded(I, all).table) << name;
    }
}

TEST(Betti, ModularRankAndThreads) {
    const ToricIdeal I = toric_ideal_of_graph(fixture_graph("k3_gluing"));
    const MultiBettiTable exact = betti_multigraded(I).table;
    BettiOptions mod;
    mod.rank = RankMethod::modular;
    EXPECT_EQ(betti_multigraded(I, mod).table, exact);
    BettiOptions one;
    one.threads = 1;
    EXPECT_EQ(betti_multigraded(I, one).table, exact);
    ::setenv("TORIC_SPLIT_THREADS", "2", 1);
    EXPECT_EQ(thread_budget(), 2u);
    EXPECT_EQ(betti_multigraded(I).table, exact);
    ::unsetenv("TORIC_SPLIT_THREADS");
}

TEST(Betti, DegreeBound) {
    const ToricIdeal I = toric_ideal_of_graph(fixture_graph("four_cycles_G"));
    EXPECT_EQ(taylor_degree_bound(I.gb), 8);
    BettiOptions low;
    low.max_degree = 3;
    try {
        betti_multigraded(I, low);
        FAIL() << "expected BoundTooSmall";
    } catch (const BoundTooSmall& e) {
        EXPECT_EQ(e.bound(), 3);
        EXPECT_EQ(betti_graded(e.partial(), 2L).get(1, 2), 4);
    }
    BettiOptions unchecked = low;
    unchecked.check_completeness = false;
    const BettiResult r = betti_multigraded(I, unchecked);
    EXPECT_FALSE(r.complete);
}

TEST(Betti, Errors) {
    EXPECT_THROW(betti_multigraded(toric_ideal_of_matrix(IntMatrix{{1, -1}})), GradingUnavailable);
    EXPECT_THROW(betti_graded_table(toric_ideal_of_matrix(IntMatrix{{1, 2}})), NotGradable);
}
