#include <moyrt/diagram.hpp>
#include <moyrt/random.hpp>
#include <moyrt/samples.hpp>
#include <moyrt/skein.hpp>
#include <moyrt/state_sum.hpp>
#include <moyrt/verify.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace moyrt;

TEST(Labels, MaskRoundTrip) {
  EXPECT_EQ(mask_labels(0b101, 3), (std::vector<int>{-2, 2}));
  EXPECT_EQ(labels_to_mask({-2, 2}, 3), 0b101u);
  EXPECT_THROW(labels_to_mask({1}, 3), std::invalid_argument);
  EXPECT_THROW(labels_to_mask({0, 0}, 3), std::invalid_argument);
  EXPECT_EQ(label_sum(0b111, 3), 0);
}

TEST(Labels, PiCountAgreesOnBothRepresentations) {
  const int N = 5;
  for (Mask a = 0; a < (1u << N); ++a)
    for (Mask b = 0; b < (1u << N); ++b) {
      if (a & b) continue;
      EXPECT_EQ(pi_count(a, b), pi_count(mask_labels(a, N), mask_labels(b, N)));
      // pi(A,B) + pi(B,A) = |A||B| for disjoint sets
      EXPECT_EQ(pi_count(a, b) + pi_count(b, a), std::popcount(a) * std::popcount(b));
    }
}

TEST(Labels, VertexWeight) {
  // c1 = c2 = 1: half-unit exponent 1 - 2*pi(e1, e2)
  EXPECT_EQ(vertex_weight_exponent(1, 1, std::vector<int>{-1}, std::vector<int>{1}), 1);
  EXPECT_EQ(vertex_weight_exponent(1, 1, std::vector<int>{1}, std::vector<int>{-1}), -1);
  EXPECT_THROW(vertex_weight_exponent(1, 1, std::vector<int>{1}, std::vector<int>{1}), std::invalid_argument);
}

TEST(Diagram, ValidationReasons) {
  auto reason = [](LayeredDiagram d) {
    const auto v = validate(d);
    return v.empty() ? std::string() : v.front().reason;
  };
  EXPECT_EQ(reason(samples::theta()), "");
  EXPECT_EQ(reason({DiagramKind::graph, std::nullopt, {Cup{0, 1, Side::right}}}), "not closed");
  EXPECT_EQ(reason({DiagramKind::graph, std::nullopt, {Cup{1, 1, Side::right}}}), "position out of range");
  EXPECT_EQ(reason({DiagramKind::graph, std::nullopt, {Cup{0, 0, Side::right}}}), "color must be positive");
  EXPECT_EQ(reason({DiagramKind::graph, std::nullopt, {Cup{0, 1, Side::right}, Cap{0, Side::left}}}), "cap up_side mismatch");
  EXPECT_EQ(reason({DiagramKind::graph, std::nullopt,
                    {Cup{0, 1, Side::right}, Cup{0, 2, Side::right}, Cap{1, Side::right}, Cap{0, Side::right}}}),
            "cap color mismatch");
  auto hopf = samples::hopf(1, 1);
  hopf.kind = DiagramKind::graph;
  EXPECT_EQ(reason(hopf), "crossing in a graph diagram");
}

TEST(Diagram, EmptyDiagramIsOne) {
  EXPECT_EQ(bracket({DiagramKind::graph, std::nullopt, {}}, 3), LaurentPoly::constant(1));
}

TEST(Bracket, CirclesAreBinomials) {
  for (int N = 1; N <= 5; ++N)
    for (int m = 1; m <= N; ++m)
      for (bool ccw : {true, false}) {
        const auto c = samples::circle(m, ccw);
        EXPECT_EQ(bracket(c, N), quantum_binomial(N, m));
        EXPECT_EQ(bracket_naive(c, N), quantum_binomial(N, m));
      }
  // colors above N have no states
  EXPECT_TRUE(bracket(samples::circle(3), 2).is_zero());
}

TEST(Bracket, ThetaByHand) {
  // labels {-1, 1}; the 2-edge carries both, the two 1-edges split them in
  // two ways with vertex weights q^{+-1/2} at each vertex
  EXPECT_EQ(bracket(samples::theta(), 2).to_string(), "q^-1 + q");
  EXPECT_EQ(bracket_naive(samples::theta(), 2).to_string(), "q^-1 + q");
  EXPECT_EQ(colored_rotation_number(samples::theta()), 2);
}

TEST(Bracket, ReversalAndMirrorAreBar) {
  for (int N = 2; N <= 4; ++N) {
    const auto t = samples::theta();
    EXPECT_EQ(bracket(reverse_orientation(t), N), bracket(t, N).bar());
    EXPECT_EQ(bracket(mirror(t), N), bracket(t, N).bar());
  }
}

TEST(Bracket, DisjointUnionMultiplies) {
  const auto a = samples::theta(), b = samples::circle(2, false);
  for (int N = 2; N <= 4; ++N) EXPECT_EQ(bracket(disjoint_union(a, b), N), bracket(a, N) * bracket(b, N));
}

TEST(Bracket, DpMatchesNaiveOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const auto d = random_closed_graph(rng);
    ASSERT_TRUE(validate(d).empty());
    ASSERT_LE(d.layers.size(), 10u);
    for (int N = 1; N <= 4; ++N) EXPECT_EQ(bracket(d, N), bracket_naive(d, N)) << "graph " << i << " N=" << N;
  }
}

TEST(Bracket, PeakStatesReported) {
  EvalStats st;
  bracket(samples::circle(2), 4, &st);
  EXPECT_EQ(st.peak_states, 6u);  // 4 choose 2 subsets on one strand
  EXPECT_EQ(st.layers, 2u);
}

TEST(Bracket, RejectsLinks) {
  EXPECT_THROW(bracket(samples::hopf(1, 1), 2), std::invalid_argument);
  EXPECT_THROW(bracket(samples::theta(), 0), std::invalid_argument);
}

TEST(Rotation, Circles) {
  for (int m = 1; m <= 4; ++m) {
    EXPECT_EQ(colored_rotation_number(samples::circle(m)), m);
    EXPECT_EQ(colored_rotation_number(samples::circle(m, false)), -m);
  }
}

TEST(Skein, EveryRelationOnItsGrid) {
  for (int id = 1; id <= 7; ++id) {
    const auto grid = relation_grid(id, relation_default_max_N(id));
    EXPECT_FALSE(grid.empty());
    for (auto p : grid)
      for (bool rev : {false, true}) {
        p.reversed = rev;
        const auto c = evaluate_relation(id, p);
        EXPECT_TRUE(c.holds) << p.to_string(id) << ": " << c.lhs.to_string() << " vs " << c.rhs.to_string();
      }
  }
}

TEST(Skein, BrokenCoefficientIsDetected) {
  // sanity: the harness can fail
  RelationParams p;
  p.N = 3;
  p.m = 1;
  auto rel = build_relation(1, p);
  rel.rhs.front().coeff = rel.rhs.front().coeff * LaurentPoly::q(1);
  EXPECT_NE(evaluate_side(rel.lhs, 3), evaluate_side(rel.rhs, 3));
}

TEST(Skein, SuiteBoundsRestrictTheGrid) {
  const auto small = verify_skein({{"N", 3}, {"N1", 3}, {"colors", 2}});
  const auto full = verify_skein({});
  EXPECT_TRUE(small.ok());
  EXPECT_LT(small.items.size(), full.items.size());
}

TEST(Oracle, SuitePasses) {
  const auto r = verify_oracle({}, 5);
  EXPECT_TRUE(r.ok());
  EXPECT_GE(r.items.size(), 30u * 4u);
}
