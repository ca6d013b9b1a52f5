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

namespace {

Graph complete(Index n) {
  Matrix a = Matrix::Ones(n, n);
  a.diagonal().setZero();
  return Graph(a);
}

}  // namespace

TEST_CASE("SamplingSet normalizes and validates") {
  const SamplingSet s({3, 1, 2}, 5);
  CHECK(s.nodes() == std::vector<Index>{1, 2, 3});
  CHECK(s.complement().nodes() == std::vector<Index>{0, 4});
  CHECK(SamplingSet::all(3).size() == 3);
  CHECK_THROWS_AS(SamplingSet({1, 1}, 3), Error);
  CHECK_THROWS_AS(SamplingSet({3}, 3), Error);
  CHECK_THROWS_AS(SamplingSet({-1}, 3), Error);
}

TEST_CASE("lambda_graph examples") {
  CHECK(lambda_graph(complete(2), SamplingSet({0}, 2)).lambda == doctest::Approx(1.0));

  Matrix star = Matrix::Zero(3, 3);
  star(0, 1) = star(1, 0) = star(0, 2) = star(2, 0) = 1.0;
  CHECK(lambda_graph(Graph(star), SamplingSet({1, 2}, 3)).lambda == doctest::Approx(std::sqrt(2.0)));

  std::mt19937_64 rng(83);
  const Matrix a = oracle::random_adjacency(9, rng);
  CHECK(lambda_graph(Graph(a), SamplingSet::all(9)).lambda ==
        doctest::Approx(oracle::power_norm(a)).epsilon(1e-9));
  CHECK_THROWS_AS(lambda_graph(Graph(a), SamplingSet({}, 9)), Error);
}

TEST_CASE("lambda_graph agrees with the Gram route, is monotone and has a valid witness") {
  std::mt19937_64 rng(89);
  std::uniform_int_distribution<Index> size(2, 30);
  for (int t = 0; t < 40; ++t) {
    const Index n = size(rng);
    const Matrix a = oracle::random_adjacency(n, rng);
    const std::vector<Index> nodes = oracle::random_subset(n, rng);
    const RemovableReport r = lambda_graph(Graph(a), SamplingSet(nodes, n));
    CHECK(r.lambda == doctest::Approx(oracle::lambda_by_gram(a, nodes)).epsilon(1e-9));

    CHECK(r.witness.norm() == doctest::Approx(1.0).epsilon(1e-12));
    for (Index i = 0; i < n; ++i)
      if (!r.set.contains(i)) CHECK(r.witness(i) == 0.0);
    CHECK((a * r.witness).norm() == doctest::Approx(r.lambda).epsilon(1e-9));

    std::vector<Index> bigger = nodes;
    for (Index i = 0; i < n; ++i)
      if (!r.set.contains(i)) {
        bigger.push_back(i);
        break;
      }
    CHECK(lambda_graph(Graph(a), SamplingSet(bigger, n)).lambda >= r.lambda - 1e-12);
  }
}

TEST_CASE("lambda_graphon examples") {
  Matrix k2(2, 2);
  k2 << 0, 1, 1, 0;
  const Graphon w = induce_graphon(Graph(k2));
  const GraphonRemovableReport r = lambda_graphon(w, IntervalSet({{0.0, 0.5}}));
  CHECK(r.lambda == doctest::Approx(0.5));
  CHECK(r.witness.norm() == doctest::Approx(1.0).epsilon(1e-12));

  for (double c : {0.2, 0.7}) {
    for (double len : {0.3, 0.5, 0.9}) {
      const IntervalSet s({{0.05, 0.05 + len}});
      CHECK(lambda_graphon(Graphon::constant(c), s, 1024).lambda ==
            doctest::Approx(c * std::sqrt(len)).epsilon(1e-6));
    }
  }
}

TEST_CASE("graph and graphon constants agree up to the factor N") {
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<Index> size(1, 32);
  for (int t = 0; t < 40; ++t) {
    const Index n = size(rng);
    const Graph g(oracle::random_adjacency(n, rng));
    const SamplingSet s(oracle::random_subset(n, rng), n);
    const double graph_lambda = lambda_graph(g, s).lambda;
    const double graphon_lambda = lambda_graphon(induce_graphon(g), induce_interval_set(s)).lambda;
    CHECK(std::abs(n * graphon_lambda - graph_lambda) <= 1e-8 * std::max(1.0, graph_lambda));
  }
}

TEST_CASE("uniqueness sets") {
  const SpectralBasis k3 = spectral_decompose(complete(3));
  CHECK(is_uniqueness_set(k3, SamplingSet({0, 1}, 3), 2));
  CHECK_FALSE(is_uniqueness_set(k3, SamplingSet({1, 2}, 3), 2));
  CHECK_FALSE(is_uniqueness_set(k3, SamplingSet({0}, 3), 2));
  CHECK(is_uniqueness_set(k3, SamplingSet({2}, 3), 1));
  CHECK(restricted_sigma_min(k3, SamplingSet({}, 3), 2) == 0.0);
}

TEST_CASE("greedy and brute force agree on K3") {
  const SpectralBasis k3 = spectral_decompose(complete(3));
  CHECK(greedy_select(k3, 2, 2) == SamplingSet({0, 1}, 3));
  CHECK(brute_force_select(k3, 2, 2) == SamplingSet({0, 1}, 3));
}

TEST_CASE("greedy selection quality against exhaustive search") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<Index> size(6, 12);
  for (int t = 0; t < 15; ++t) {
    const Index n = size(rng);
    const Index m = 2 + t % 3;
    const Index k = m - 1;
    const SpectralBasis b = spectral_decompose(Graph(oracle::random_adjacency(n, rng)));
    const double greedy = restricted_sigma_min(b, greedy_select(b, m, k), k);
    const SamplingSet best_set = brute_force_select(b, m, k);
    const double best = oracle::best_sigma_min(b.leading(k), n, m);
    CHECK(restricted_sigma_min(b, best_set, k) == doctest::Approx(best).epsilon(1e-10));
    CHECK(oracle::sigma_min_by_gram(b.leading(k), greedy_select(b, m, k).nodes()) ==
          doctest::Approx(greedy).epsilon(1e-8));
    CHECK(greedy >= 0.5 * best);
  }
}

TEST_CASE("greedy selection honours a seed set and budgets") {
  std::mt19937_64 rng(103);
  const SpectralBasis b = spectral_decompose(Graph(oracle::random_adjacency(15, rng)));
  const SamplingSet seeded = greedy_select(b, 5, 4, SamplingSet({7, 11}, 15));
  CHECK(seeded.size() == 5);
  CHECK(seeded.contains(7));
  CHECK(seeded.contains(11));
  CHECK_THROWS_AS(greedy_select(b, 16, 4), Error);
  CHECK_THROWS_AS(brute_force_select(b, 7, 4, 100.0), Error);
}

TEST_CASE("random_select is uniform and deterministic") {
  const Index n = 10;
  const Index m = 3;
  const int draws = 10000;
  std::vector<int> hits(n, 0);
  for (int d = 0; d < draws; ++d) {
    const SamplingSet s = random_select(n, m, static_cast<std::uint64_t>(d) * 7919u + 1u);
    CHECK(s.size() == m);
    for (Index i : s.nodes()) ++hits[static_cast<size_t>(i)];
  }
  const double p = static_cast<double>(m) / n;
  const double mean = p * draws;
  const double sigma = std::sqrt(draws * p * (1.0 - p));
  for (int h : hits) CHECK(std::abs(h - mean) <= 3.0 * sigma);
  CHECK(random_select(50, 7, 5) == random_select(50, 7, 5));
  CHECK_THROWS_AS(random_select(5, 6, 1), Error);
}
