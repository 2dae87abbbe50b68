#include "toric/splitkit.hpp"
#include "toric/corpus.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace toric;
using testutil::bin;
using testutil::fixture_graph;

namespace {

// I_G of the first gluing, rewritten in the edge numbering of the second.
ReducedGB transport(const GlueSpec& from, const GlueSpec& to, const ReducedGB& I) {
    const GlueResult ga = glue(from), gb = glue(to);
    const std::size_t n = ga.graph.num_edges();
    std::vector<std::size_t> map(n);
    for (std::size_t e = 0; e < from.g1.num_edges(); ++e) map[ga.edge_map1[e]] = gb.edge_map1[e];
    for (std::size_t e = 0; e < from.g2.num_edges(); ++e) map[ga.edge_map2[e]] = gb.edge_map2[e];
    return buchberger(embed_generators(I, map, n), {}, n);
}

GlueSpec fixture_glue(const std::string& name) { return glue_spec_from_json(read_json_file(testutil::fixture_path(name))); }
FanSpec fixture_fan(const std::string& name) { return fan_spec_from_json(read_json_file(testutil::fixture_path(name))); }

} // namespace

// ------------------------------------------------------ two-binomial lemma

TEST(TwoBinomial, Examples) {
    // α = e1 - e2, β = e2 - e3: α + β = e1 - e3 lies in the ideal.
    auto r = two_binomial_membership({1, -1, 0}, {0, 1, -1});
    EXPECT_TRUE(r.criterion);
    EXPECT_TRUE(r.oracle);
    // Both intersections nonempty.
    r = two_binomial_membership({1, -1, 1, -1}, {-1, 1, 1, -1});
    EXPECT_FALSE(r.criterion);
    EXPECT_FALSE(r.oracle);
}

TEST(TwoBinomial, Preconditions) {
    EXPECT_THROW(two_binomial_membership({1, 0}, {0, -1}), PreconditionViolated);
    EXPECT_THROW(two_binomial_membership({1, -1}, {2, -2}), PreconditionViolated);
    EXPECT_THROW(two_binomial_membership({1, -1, 0}, {-1, 1, 1}), PreconditionViolated);
    EXPECT_THROW(two_binomial_membership({1, -1}, {1, -1, 0}), PreconditionViolated);
}

TEST(TwoBinomial, SeededCorpus) {
    std::size_t both = 0;
    for (const auto& p : corpus::two_binomial_pairs(42, 250)) {
        const auto r = two_binomial_membership(p.alpha, p.beta);
        EXPECT_EQ(r.criterion, r.oracle);
        both += r.criterion;
    }
    // Both outcomes occur.
    EXPECT_GT(both, 0u);
    EXPECT_LT(both, 250u);
}

// ------------------------------------------------------------ lattice lemma

TEST(LatticeLemma, BlockDiagonal) {
    const IntMatrix c4 = incidence_matrix(cycle_graph(4));
    const auto cert = lattice_lemma_split({c4, c4}, IntMatrix(), std::nullopt);
    EXPECT_EQ(cert.kind, SplitKind::block_diagonal);
    EXPECT_TRUE(cert.verified);
    EXPECT_EQ(cert.target.size(), 2u);
}

TEST(LatticeLemma, ExtraColumn) {
    // Blocks [1 1] and [1 1] joined by the column (1,1)^T.
    const IntMatrix b{{1, 1}};
    const IntMatrix extra{{1}, {1}};
    const auto cert = lattice_lemma_split({b, b}, extra, ExpVec{1, 0, 1, 0, -1});
    EXPECT_EQ(cert.kind, SplitKind::lattice_lemma);
    EXPECT_TRUE(cert.verified);
    EXPECT_THROW(lattice_lemma_split({b, b}, extra, ExpVec{0, 0, 0, 0, 0}), PreconditionViolated);
    // Not in the kernel.
    EXPECT_THROW(lattice_lemma_split({b, b}, extra, ExpVec{1, 0, 0, 0, -1}), HypothesisFailed);
    // Twice τ: right span, not saturated.
    EXPECT_THROW(lattice_lemma_split({b, b}, extra, ExpVec{2, 0, 2, 0, -2}), HypothesisFailed);
    // Block 1 meets both signs of τ.
    EXPECT_THROW(lattice_lemma_split({b, b}, extra, ExpVec{2, -1, 1, 0, -1}), HypothesisFailed);
    EXPECT_THROW(lattice_lemma_split({b, b}, extra, std::nullopt), PreconditionViolated);
}

// ------------------------------------------------------------ edge gluing

TEST(EdgeSplit, BipartiteSideVerifies) {
    const auto certs = edge_split_verify(fixture_graph("two_squares"));
    ASSERT_EQ(certs.size(), 1u);
    EXPECT_TRUE(certs[0].verified);
    const auto c = verify_edge_gluing(fixture_glue("glue_square_triangle"));
    EXPECT_TRUE(c.hypothesis);
    EXPECT_TRUE(c.verified);
}

TEST(EdgeSplit, TwoTrianglesFail) {
    const auto certs = edge_split_verify(fixture_graph("two_triangles"));
    ASSERT_EQ(certs.size(), 1u);
    EXPECT_FALSE(certs[0].hypothesis);
    EXPECT_FALSE(certs[0].holds);
    EXPECT_FALSE(certs[0].verified);
    EXPECT_TRUE(certs[0].claimed.is_zero_ideal());
    EXPECT_FALSE(certs[0].target.is_zero_ideal());
    EXPECT_FALSE(certs[0].diagnostics.empty());
}

TEST(EdgeSplit, AlternativeSplittingOfTheTriangleGluing) {
    // Along x1 x2 the 4-cycle x1 x8 x9 x2 is a bipartite piece.
    const auto certs = edge_split_verify(fixture_graph("k3_gluing"));
    std::size_t verified = 0;
    for (const auto& c : certs) verified += c.verified;
    EXPECT_EQ(verified, 1u);
}

TEST(EdgeSplit, SeededCorpus) {
    for (const auto& s : corpus::edge_gluings(2024, 20)) {
        const auto c = verify_edge_gluing(s);
        EXPECT_TRUE(c.hypothesis);
        EXPECT_TRUE(c.verified) << glue_spec_to_json(s).dump();
    }
}

TEST(EdgeSplit, OrientationIndependence) {
    for (const auto& s : corpus::edge_gluings(77, 12)) {
        GlueSpec flipped = s;
        std::swap(flipped.h2[0], flipped.h2[1]);
        const auto a = verify_edge_gluing(s), b = verify_edge_gluing(flipped);
        EXPECT_TRUE(a.verified && b.verified);
        const ReducedGB mapped = transport(s, flipped, a.target);
        EXPECT_TRUE(ideal_equal(mapped, b.target));
    }
}

TEST(EdgeSplit, OrientationMattersWithoutBipartiteSide) {
    const auto a = verify_edge_gluing(fixture_glue("gluing_degree5"));
    const auto b = verify_edge_gluing(fixture_glue("gluing_degree4"));
    EXPECT_FALSE(a.hypothesis);
    EXPECT_FALSE(b.hypothesis);
    EXPECT_FALSE(ideal_equal(transport(fixture_glue("gluing_degree5"), fixture_glue("gluing_degree4"), a.target), b.target));
}

// ------------------------------------------------------------ path gluing

TEST(PathSplit, EvenPathExample) {
    const Graph g = fixture_graph("even_path");
    const auto certs = path_split_verify(g, 2);
    ASSERT_EQ(certs.size(), 3u);
    const auto& c = certs[0];
    EXPECT_EQ(c.separator, (std::vector<std::string>{"x1", "x2", "x3"}));
    EXPECT_TRUE(c.verified);
    ASSERT_TRUE(c.saturating_monomial.has_value());
    EXPECT_EQ(monomial_to_string(*c.saturating_monomial), "e2");
    const ReducedGB sum = ideal_sum(buchberger({bin("e1*e3", "e2*e4", 6)}), buchberger({bin("e2*e5", "e1*e6", 6)}));
    EXPECT_FALSE(ideal_equal(sum, c.target));
    EXPECT_TRUE(ideal_membership(bin("e3*e5", "e4*e6", 6), saturate(sum, testutil::mono("e2", 6))));
    EXPECT_FALSE(ideal_membership(bin("e3*e5", "e4*e6", 6), sum));
}

TEST(PathSplit, LengthOneMatchesEdgeSplit) {
    const Graph g = fixture_graph("two_squares");
    const auto p = path_split_verify(g, 1);
    const auto e = edge_split_verify(g);
    ASSERT_EQ(p.size(), e.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        EXPECT_TRUE(ideal_equal(p[k].claimed, e[k].claimed));
        EXPECT_EQ(p[k].verified, e[k].verified);
        ASSERT_TRUE(p[k].saturating_monomial.has_value());
        EXPECT_EQ(monomial_to_string(*p[k].saturating_monomial), "1");
    }
}

TEST(PathSplit, ThetaFixture) {
    const auto certs = path_split_verify(fixture_graph("theta_path"), 3);
    ASSERT_FALSE(certs.empty());
    for (const auto& c : certs) EXPECT_TRUE(c.verified);
}

TEST(PathSplit, SeededCorpus) {
    for (const auto& s : corpus::path_gluings(99, 12)) {
        const auto c = verify_path_gluing(s);
        EXPECT_TRUE(c.hypothesis);
        EXPECT_TRUE(c.verified) << glue_spec_to_json(s).dump();
    }
}

TEST(PathSplit, SquareColonMatchesSaturation) {
    std::vector<GlueSpec> specs = corpus::path_gluings(5, 6);
    for (const auto& s : specs) {
        const auto c = verify_path_gluing(s);
        ASSERT_TRUE(c.saturating_monomial.has_value());
        const GlueResult gl = glue(s);
        std::vector<Binomial> gens = embed_generators(c.parts[0].gb, gl.edge_map1, gl.graph.num_edges());
        const auto more = embed_generators(c.parts[1].gb, gl.edge_map2, gl.graph.num_edges());
        gens.insert(gens.end(), more.begin(), more.end());
        const ReducedGB sum = buchberger(gens, {}, gl.graph.num_edges());
        EXPECT_TRUE(ideal_equal(colon_power(sum, *c.saturating_monomial, 2), saturate(sum, *c.saturating_monomial)));
    }
}

// --------------------------------------------------------------- cycle fans

TEST(CycleFan, Fixtures) {
    for (const auto& name : {"fan_c4_one_square", "fan_c6_one_square", "fan_c6_three_squares", "fan_c6_square_triangle"}) {
        const FanSpec f = fixture_fan(name);
        const CycleFanReport r = cycle_fan_check(f.cycle_length, f.attachments);
        EXPECT_TRUE(r.fan.certificate.verified) << name;
        EXPECT_TRUE(r.betti_match) << name;
        EXPECT_TRUE(r.h_match) << name;
        EXPECT_TRUE(r.reg_match) << name;
        EXPECT_TRUE(r.pdim_match) << name;
    }
}

TEST(CycleFan, FormulaValues) {
    const FanSpec one = fixture_fan("fan_c4_one_square");
    const CycleFanReport r = cycle_fan_check(one.cycle_length, one.attachments);
    EXPECT_EQ(r.formula.h_polynomial, (Polynomial{1, 2, 1}));
    EXPECT_EQ(r.formula.regularity, 2);
    EXPECT_EQ(r.formula.proj_dim, 2);
    const GlueInvariants bare = cycle_glue_invariants({}, 4);
    EXPECT_EQ(bare.h_polynomial, (Polynomial{1, 1, 1, 1}));
    EXPECT_EQ(bare.regularity, 3);
    EXPECT_EQ(bare.proj_dim, 1);
    const FanSpec three = fixture_fan("fan_c6_three_squares");
    const CycleFanReport r3 = cycle_fan_check(three.cycle_length, three.attachments);
    EXPECT_EQ(r3.formula.regularity, 5);
    EXPECT_EQ(r3.formula.proj_dim, 4);
}

TEST(CycleFan, FirstGluingShift) {
    // β(R/I_H) = β(R/I_G) + β(R/I_G) shifted by (1, 3).
    const FanSpec f = fixture_fan("fan_c6_one_square");
    const CycleFanReport r = cycle_fan_check(f.cycle_length, f.attachments);
    const GradedBettiTable c4 = betti_graded_table(toric_ideal_of_graph(cycle_graph(4)));
    GradedBettiTable expected = c4;
    for (const auto& [k, v] : c4.entries()) expected.add(k.first + 1, k.second + 3, v);
    EXPECT_EQ(r.direct, expected);
}

TEST(CycleFan, Preconditions) {
    const Graph c4 = cycle_graph(4), tri = cycle_graph(3);
    EXPECT_THROW(cycle_fan_glue(5, {}), PreconditionViolated);
    EXPECT_THROW(cycle_fan_glue(2, {}), PreconditionViolated);
    EXPECT_THROW(cycle_fan_glue(4, {{c4, {"x1", "x2"}}, {c4, {"x1", "x2"}}, {c4, {"x1", "x2"}}}), CycleTooShort);
    EXPECT_THROW(cycle_fan_glue(6, {{tri, {"x1", "x2"}}, {tri, {"x1", "x2"}}}), TooManyNonBipartite);
    EXPECT_THROW(cycle_fan_glue(6, {{c4, {"x1", "x3"}}}), PreconditionViolated);
    const Graph split = disjoint_union(path_graph(1), path_graph(1));
    EXPECT_THROW(cycle_fan_glue(6, {{split, {"x1", "x2"}}}), PreconditionViolated);
    const CycleFan bare = cycle_fan_glue(6, {});
    EXPECT_TRUE(bare.certificate.verified);
    EXPECT_EQ(bare.graph.num_edges(), 6u);
}

// ------------------------------------------------------------ tensor check

TEST(Tensor, FourCycleGluings) {
    for (const auto& name : {"four_cycles_G", "four_cycles_G_prime"}) {
        const TensorReport r = tensor_betti_check(fixture_graph(name));
        EXPECT_TRUE(r.all_equal()) << name;
        EXPECT_EQ(r.direct.totals(), (std::vector<long>{1, 4, 6, 4, 1})) << name;
    }
    const TensorReport sq = tensor_betti_check(fixture_graph("two_squares"));
    EXPECT_TRUE(sq.all_equal());
    EXPECT_EQ(sq.direct.totals(), (std::vector<long>{1, 2, 1}));
}

TEST(Tensor, NoEdgeSplitting) {
    EXPECT_THROW(tensor_betti_check(fixture_graph("four_cycles_G_double_prime")), NoEdgeSplitting);
    EXPECT_THROW(tensor_betti_check(fixture_graph("two_triangles")), NoEdgeSplitting);
}

TEST(Report, Json) {
    const auto certs = edge_split_verify(fixture_graph("two_squares"));
    const auto j = to_json(certs[0]);
    EXPECT_EQ(j["kind"], "edge-glue");
    EXPECT_EQ(j["verified"], true);
    EXPECT_EQ(j["part_gb_sizes"], nlohmann::json::array({1, 1}));
}
