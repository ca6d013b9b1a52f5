#include "gphon/graph.hpp"
#include "gphon/graphon.hpp"
#include "gphon/io.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace gphon;

namespace {

Graph k2() {
  Matrix a(2, 2);
  a << 0, 1, 1, 0;
  return Graph(a);
}

}  // namespace

TEST_CASE("evaluate: constants, closed forms and step cells") {
  CHECK(evaluate(Graphon::constant(0.5), 0.3, 0.9) == 0.5);
  CHECK(evaluate(Graphon::builtin("linear_mean"), 0.2, 0.6) == doctest::Approx(0.4).epsilon(1e-15));
  const Graphon step = induce_graphon(k2());
  CHECK(evaluate(step, 0.1, 0.9) == 1.0);
  CHECK(evaluate(step, 0.1, 0.2) == 0.0);
  // Half-open cells: 0.5 belongs to the second cell, 1 to the last.
  CHECK(evaluate(step, 0.5, 0.5) == 0.0);
  CHECK(evaluate(step, 0.49, 0.5) == 1.0);
  CHECK(evaluate(step, 1.0, 0.0) == 1.0);
}

TEST_CASE("evaluate rejects out-of-domain coordinates") {
  const Graphon w = Graphon::builtin("one_minus_max");
  CHECK_THROWS_AS(evaluate(w, -0.1, 0.5), Error);
  CHECK_THROWS_AS(evaluate(w, 0.5, 1.0001), Error);
  CHECK_THROWS_AS(evaluate(induce_graphon(k2()), 1.5, 0.0), Error);
}

TEST_CASE("builtin library: ids, aliases, range and symmetry") {
  CHECK(builtin_library().size() >= 7);
  CHECK(find_builtin("W1")->id == "linear_mean");
  CHECK(find_builtin("W7")->id == "sin_cos_10");
  CHECK_FALSE(find_builtin("nope").has_value());
  CHECK_THROWS_AS(Graphon::builtin("nope"), Error);
  CHECK_THROWS_AS(Graphon::constant(1.5), Error);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& info : builtin_library()) {
    const Graphon w = Graphon::builtin(info.id);
    for (int t = 0; t < 1000; ++t) {
      const double u = unit(rng);
      const double v = unit(rng);
      const double value = w(u, v);
      CHECK(value >= 0.0);
      CHECK(value <= 1.0);
      CHECK(value == doctest::Approx(w(v, u)).epsilon(1e-14));
    }
  }
}

TEST_CASE("step graphons are exactly symmetric and validated") {
  std::mt19937_64 rng(3);
  const Graphon w = induce_graphon(Graph(oracle::random_adjacency(7, rng)));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    const double u = unit(rng);
    const double v = unit(rng);
    CHECK(w(u, v) == w(v, u));
  }
  Matrix bad(2, 2);
  bad << 0, 1, 0.5, 0;
  CHECK_THROWS_AS(Graphon::step(Partition::uniform(2), bad), Error);
  bad << 0, 2, 2, 0;
  CHECK_THROWS_AS(Graphon::step(Partition::uniform(2), bad), Error);
  CHECK_THROWS_AS(Graphon::step(Partition::uniform(3), Matrix::Zero(2, 2)), Error);
  CHECK_THROWS_AS(Partition({0.0, 0.6, 0.4, 1.0}), Error);
  CHECK_THROWS_AS(Partition({0.1, 1.0}), Error);
}

TEST_CASE("discretize_gd1 examples") {
  const Graph c = discretize_gd1(Graphon::constant(0.5), 2);
  CHECK(c.adjacency().isApprox(Matrix::Constant(2, 2, 0.5)));

  // Expected values frozen from the Gauss-Legendre oracle: cell integral * N^2.
  const Graphon lin = Graphon::builtin("linear_mean");
  Matrix expected(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      expected(i, j) = 4.0 * oracle::integrate2d([&](double u, double v) { return lin(u, v); },
                                                 i * 0.5, (i + 1) * 0.5, j * 0.5, (j + 1) * 0.5, 2);
  CHECK(expected(0, 0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(expected(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(expected(1, 1) == doctest::Approx(0.75).epsilon(1e-14));
  const Graph g = discretize_gd1(lin, 2);
  CHECK((g.adjacency() - expected).cwiseAbs().maxCoeff() < 1e-14);

  const Graph one = discretize_gd1(Graphon::builtin("product"), 1);
  CHECK(one.adjacency()(0, 0) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("discretize_gd1 approximates the cell averages of curved kernels") {
  const Graphon w = Graphon::builtin("sin_cos_10");
  const Index n = 6;
  const Graph g = discretize_gd1(w, n, Quadrature{16});
  const double h = 1.0 / n;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const double avg = oracle::integrate2d([&](double u, double v) { return w(u, v); }, i * h,
                                             (i + 1) * h, j * h, (j + 1) * h, 8) /
                         (h * h);
      CHECK(g.adjacency()(i, j) == doctest::Approx(avg).epsilon(2e-3));
    }
  CHECK(g.adjacency() == g.adjacency().transpose());
  CHECK_THROWS_AS(discretize_gd1(w, 0), Error);
}

TEST_CASE("induce_graphon and the GD1 round trip") {
  const Graphon w = induce_graphon(k2());
  CHECK(w.values() == k2().adjacency());
  CHECK(w.partition() == Partition::uniform(2));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    std::uniform_int_distribution<Index> size(1, 64);
    const Index n = size(rng);
    const Graph g(oracle::random_adjacency(n, rng));
    const Graph back = discretize_gd1(induce_graphon(g), n);
    CHECK((back.adjacency() - g.adjacency()).cwiseAbs().maxCoeff() <= 1e-12);
  }

  // Cell averages of (u+v)/2 at N=2 induce the same step graphon.
  Matrix a(2, 2);
  a << 0.25, 0.5, 0.5, 0.75;
  const Graphon from_grid = induce_graphon(Graph(a));
  const Graphon from_gd1 = induce_graphon(discretize_gd1(Graphon::builtin("linear_mean"), 2));
  CHECK(operator_distance(from_grid, from_gd1) < 1e-14);
}

TEST_CASE("operator_norm examples against independent routes") {
  CHECK(operator_norm(Graphon::constant(0.5), 64) == doctest::Approx(0.5).epsilon(1e-12));
  // uv is rank one with norm int u^2 = 1/3; the step approximation is within O(1/N^2).
  CHECK(operator_norm(Graphon::builtin("product"), 512) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(operator_norm(induce_graphon(k2())) == doctest::Approx(0.5).epsilon(1e-14));

  std::mt19937_64 rng(5);
  const Graph g(oracle::random_adjacency(12, rng));
  CHECK(operator_norm(induce_graphon(g)) ==
        doctest::Approx(oracle::power_norm(g.adjacency()) / 12.0).epsilon(1e-9));
}

TEST_CASE("operator_norm on non-uniform partitions uses the weighted grid") {
  // Constant 0.3 on an uneven partition is still the rank-one kernel 0.3.
  Partition p({0.0, 0.1, 0.45, 1.0});
  const Graphon w = Graphon::step(p, Matrix::Constant(3, 3, 0.3));
  CHECK(operator_norm(w) == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("operator_norm is invariant under refinement and bounded by one") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    const Index n = 2 + t;
    const Graphon w = induce_graphon(Graph(oracle::random_adjacency(n, rng)));
    const double base = operator_norm(w);
    CHECK(base <= 1.0 + 1e-12);
    for (Index r = 2; r <= 8; ++r) {
      const Graphon fine = refine(w, Partition::uniform(n * r));
      CHECK(std::abs(operator_norm(fine) - base) <= 1e-10);
    }
  }
  for (const auto& info : builtin_library()) CHECK(operator_norm(Graphon::builtin(info.id), 128) <= 1.0);
}

TEST_CASE("operator_distance examples") {
  CHECK(operator_distance(induce_graphon(Graph(Matrix::Constant(1, 1, 0.5))),
                          induce_graphon(Graph(Matrix::Constant(1, 1, 0.25)))) ==
        doctest::Approx(0.25).epsilon(1e-14));
  const Graphon w = induce_graphon(k2());
  CHECK(operator_distance(w, w) == 0.0);
  const Graphon half = induce_graphon(Graph(Matrix::Constant(3, 3, 0.5)));
  // Refinement of {0,1/2,1} and {0,1/3,2/3,1}; the difference is still a
  // +-0.5 checkerboard in the [0,1/2) x [1/2,1) pattern.
  CHECK(operator_distance(w, half) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("operator_distance satisfies the triangle inequality") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<Index> size(1, 12);
  for (int t = 0; t < 50; ++t) {
    const Graphon a = induce_graphon(Graph(oracle::random_adjacency(size(rng), rng)));
    const Graphon b = induce_graphon(Graph(oracle::random_adjacency(size(rng), rng)));
    const Graphon c = induce_graphon(Graph(oracle::random_adjacency(size(rng), rng)));
    CHECK(operator_distance(a, c) <= operator_distance(a, b) + operator_distance(b, c) + 1e-10);
    CHECK(operator_distance(a, b) == doctest::Approx(operator_distance(b, a)).epsilon(1e-12));
  }
}

TEST_CASE("graphon config round trip and adjacency CSV") {
  const Graphon w = Graphon::builtin("sin_cos_10");
  const Graphon back = io::graphon_from_json(io::graphon_to_json(w));
  CHECK(back.id() == "sin_cos_10");
  CHECK(back(0.3, 0.7) == w(0.3, 0.7));

  const Graphon s = induce_graphon(k2());
  const Graphon s_back = io::graphon_from_json(io::graphon_to_json(s));
  CHECK(s_back.values() == s.values());
  CHECK_THROWS_AS(io::graphon_from_json({{"breakpoints", {0.0, 1.0}}, {"values", {0.1, 0.2}}}), Error);
  CHECK_THROWS_AS(io::graphon_from_json({{"nothing", 1}}), Error);

  std::mt19937_64 rng(29);
  const Matrix a = oracle::random_adjacency(5, rng);
  std::stringstream csv;
  io::write_adjacency_csv(csv, a);
  CHECK(io::read_adjacency_csv(csv) == a);
}
