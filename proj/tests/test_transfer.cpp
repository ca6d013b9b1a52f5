#include "gphon/graph.hpp"
#include "gphon/graphon.hpp"
#include "gphon/intervals.hpp"
#include "gphon/sampling.hpp"
#include "gphon/transfer.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gphon;

TEST_CASE("IntervalSet normalization and measures") {
  const IntervalSet s({{0.5, 0.75}, {0.0, 0.25}, {0.25, 0.3}, {0.6, 0.6}});
  REQUIRE(s.pieces().size() == 2);
  CHECK(s.pieces()[0] == Interval{0.0, 0.3});
  CHECK(s.measure() == doctest::Approx(0.55));
  CHECK(s.complement().measure() == doctest::Approx(0.45));
  CHECK(s.overlap(0.2, 0.6) == doctest::Approx(0.2));
  CHECK(s.contains(0.1, 0.3));
  CHECK_FALSE(s.contains(0.25, 0.55));
  CHECK(s.symmetric_difference(IntervalSet({{0.0, 0.3}})) == doctest::Approx(0.25));
  CHECK_THROWS_AS(IntervalSet({{0.4, 0.2}}), Error);
  CHECK_THROWS_AS(IntervalSet({{0.5, 1.2}}), Error);
}

TEST_CASE("induce_interval_set examples") {
  CHECK(induce_interval_set(SamplingSet({1, 2}, 4)) == IntervalSet({{0.25, 0.75}}));
  const IntervalSet split = induce_interval_set(SamplingSet({0, 2}, 4));
  REQUIRE(split.pieces().size() == 2);
  CHECK(split.pieces()[0] == Interval{0.0, 0.25});
  CHECK(split.pieces()[1] == Interval{0.5, 0.75});
}

TEST_CASE("algorithm1_transfer examples") {
  CHECK(algorithm1_transfer(IntervalSet({{0.25, 0.75}}), 8, 4) == SamplingSet({2, 3, 4, 5}, 8));
  // Cell 2 of 6 lies inside [0.25, 0.5); cell 1 half-overlaps and fills.
  CHECK(algorithm1_transfer(IntervalSet({{0.25, 0.5}}), 6, 2) == SamplingSet({1, 2}, 6));
  // Scanning stops once m contained cells are found.
  CHECK(algorithm1_transfer(IntervalSet({{0.25, 0.75}}), 8, 2) == SamplingSet({2, 3}, 8));

  try {
    algorithm1_transfer(IntervalSet({{0.25, 0.5}}), 6, 3);
    FAIL("expected a budget error");
  } catch (const TransferBudgetError& e) {
    CHECK(e.requested() == 3);
    CHECK(e.achievable() == 2);
  }
}

TEST_CASE("fill rules differ only in how partial cells are ordered") {
  // [0.1, 0.45) on 10 cells: cells 1..3 inside, cell 4 half covered, cell 0 none.
  const IntervalSet s({{0.1, 0.45}, {0.92, 0.95}});
  const SamplingSet by_overlap = algorithm1_transfer(s, 10, 4);
  CHECK(by_overlap == SamplingSet({1, 2, 3, 4}, 10));
  const SamplingSet by_index = algorithm1_transfer(s, 10, 4, {FillRule::Index, 0});
  CHECK(by_index == SamplingSet({1, 2, 3, 4}, 10));
  const SamplingSet five = algorithm1_transfer(s, 10, 5, {FillRule::Random, 3});
  CHECK(five == SamplingSet({1, 2, 3, 4, 9}, 10));
  CHECK(parse_fill_rule("index") == FillRule::Index);
  CHECK_THROWS_AS(parse_fill_rule("closest"), Error);
}

TEST_CASE("transfer to the same size is the identity") {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 20; ++t) {
    const Index n = 5 + t;
    const SamplingSet s(oracle::random_subset(n, rng), n);
    CHECK(algorithm1_transfer(induce_interval_set(s), n, s.size()) == s);
  }
}

TEST_CASE("coverage grows with the budget") {
  const IntervalSet s({{0.13, 0.61}});
  double previous = 0.0;
  for (Index m = 1; m <= 10; ++m) {
    const SamplingSet t = algorithm1_transfer(s, 20, m);
    CHECK(t.size() == m);
    const double covered = induce_interval_set(t).overlap(0.0, 1.0);
    CHECK(covered >= previous);
    previous = covered;
  }
}

TEST_CASE("theta bounds pinch for identical inputs") {
  std::mt19937_64 rng(109);
  const Graph g(oracle::random_adjacency(10, rng));
  const SamplingSet s({1, 4, 5}, 10);
  const ThetaReport r = theta_bounds(g, s, g, s);
  CHECK(r.operator_distance == 0.0);
  CHECK(r.hypothesis_holds);
  CHECK(r.theta1 == doctest::Approx(r.measured).epsilon(1e-12));
  CHECK(r.theta2 == doctest::Approx(r.measured).epsilon(1e-12));
}

TEST_CASE("theta bounds after dropping an edge") {
  Matrix a = Matrix::Zero(6, 6);
  for (Index i = 0; i < 6; ++i) a(i, (i + 1) % 6) = a((i + 1) % 6, i) = 1.0;
  a(0, 3) = a(3, 0) = 1.0;
  Matrix dropped = a;
  dropped(0, 3) = dropped(3, 0) = 0.0;
  const SamplingSet s({0, 2}, 6);
  const ThetaReport r = theta_bounds(Graph(a), s, Graph(dropped), s);
  CHECK(r.theta2 - r.theta1 <= 2.0 * 6.0 * r.operator_distance + 1e-12);
  CHECK(r.theta1 <= r.measured + 1e-12);
  CHECK(r.measured <= r.theta2 + 1e-12);
}

TEST_CASE("theta bounds for nested discretizations of the mean kernel") {
  const Graphon w = Graphon::builtin("linear_mean");
  const Graph g1 = discretize_gd1(w, 16);
  const Graph g2 = discretize_gd1(w, 8);
  const SamplingSet s2({2, 3, 6}, 8);
  const ThetaReport r = theta_bounds(g1, g2, s2);
  CHECK(r.s1 == SamplingSet({4, 5, 6, 7, 12, 13}, 16));
  CHECK(r.hypothesis_holds);
  CHECK(r.theta1 <= r.measured + 1e-10);
  CHECK(r.measured <= r.theta2 + 1e-10);

  double t1 = 0.0;
  double t2 = 0.0;
  theta_from_formula(16.0, 8.0, r.source_lambda, r.operator_distance, r.operator_norm, t1, t2);
  CHECK(t1 == r.theta1);
  CHECK(t2 == r.theta2);
}

TEST_CASE("theta bounds are invariant under a common relabeling of the nodes") {
  std::mt19937_64 rng(113);
  const Index n = 8;
  const Matrix a = oracle::random_adjacency(n, rng);
  const Matrix b = oracle::random_adjacency(n, rng);
  const SamplingSet s({0, 1, 2}, n);
  const ThetaReport r = theta_bounds(Graph(a), s, Graph(b), s);
  // Reverse the node order; interval sets and norms are mirrored.
  Matrix ra(n, n);
  Matrix rb(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      ra(i, j) = a(n - 1 - i, n - 1 - j);
      rb(i, j) = b(n - 1 - i, n - 1 - j);
    }
  const SamplingSet rs({5, 6, 7}, n);
  const ThetaReport q = theta_bounds(Graph(ra), rs, Graph(rb), rs);
  CHECK(q.theta1 == doctest::Approx(r.theta1).epsilon(1e-10));
  CHECK(q.theta2 == doctest::Approx(r.theta2).epsilon(1e-10));
  CHECK(q.measured == doctest::Approx(r.measured).epsilon(1e-10));
}

TEST_CASE("sequence_bounds on constant kernels") {
  const SequenceReport r =
      sequence_bounds(Graphon::constant(0.5), Graphon::constant(0.25), IntervalSet({{0.0, 0.5}}));
  const double root = std::sqrt(0.5);
  CHECK(r.operator_distance == doctest::Approx(0.25));
  CHECK(r.first.measured == doctest::Approx(0.5 * root));
  CHECK(r.second.measured == doctest::Approx(0.25 * root));
  CHECK(r.first.lower == 0.0);
  CHECK(r.first.upper == doctest::Approx(0.25 + 0.25 * root));
  CHECK(r.second.lower == doctest::Approx(0.5 * root - 0.25));
  CHECK(r.second.upper == doctest::Approx(0.25));
  CHECK_THROWS_AS(sequence_bounds(Graphon::constant(0.5), Graphon::constant(0.2), IntervalSet({{0.0, 1.0}})),
                  Error);
}

TEST_CASE("sequence_bounds hold for random step kernels") {
  std::mt19937_64 rng(127);
  std::uniform_int_distribution<Index> size(1, 16);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 30; ++t) {
    const Graphon w1 = induce_graphon(Graph(oracle::random_adjacency(size(rng), rng)));
    const Graphon w2 = induce_graphon(Graph(oracle::random_adjacency(size(rng), rng)));
    const double lo = 0.5 * unit(rng);
    const IntervalSet s({{lo, lo + 0.4 * unit(rng) + 0.05}});
    const SequenceReport r = sequence_bounds(w1, w2, s);
    for (const SandwichSide& side : {r.first, r.second}) {
      CHECK(side.lower <= side.measured + 1e-10);
      CHECK(side.measured <= side.upper + 1e-10);
    }
  }
}

TEST_CASE("convergence report for the mean kernel") {
  const IntervalSet s({{0.5, 1.0}});
  const auto records = convergence_report(Graphon::builtin("linear_mean"), {8, 16, 32, 64}, s, 512);
  REQUIRE(records.size() == 4);
  for (size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].aligned);
    CHECK(std::abs(records[i].lambda - records[i].lambda_ref) <= records[i].distance + 1e-6);
    if (i > 0) CHECK(records[i].distance < records[i - 1].distance);
  }
  const auto odd = convergence_report(Graphon::builtin("linear_mean"), {3}, s, 64);
  CHECK_FALSE(odd[0].aligned);
}
