#include "gphon/graphon.hpp"

#include "gphon/graph.hpp"

#include <algorithm>
#include <cmath>

namespace gphon {

namespace {

std::function<double(double, double)> closed_form(Builtin model, const std::vector<double>& p) {
  switch (model) {
    case Builtin::LinearMean:
      return [](double u, double v) { return 0.5 * (u + v); };
    case Builtin::QuadraticMean:
      return [](double u, double v) { return 0.5 * (u * u + v * v); };
    case Builtin::OneMinusMax:
      return [](double u, double v) { return 1.0 - std::max(u, v); };
    case Builtin::MinTimesOneMinusMax:
      return [](double u, double v) { return std::min(u, v) * (1.0 - std::max(u, v)); };
    case Builtin::AbsSin: {
      const double a = p.at(0);
      return [a](double u, double v) { return std::abs(std::sin(a * (u * v))); };
    }
    case Builtin::SinCos: {
      const double a = p.at(0);
      return [a](double u, double v) {
        return 0.5 * std::abs(std::sin(a * (u * v))) + 0.5 * std::abs(std::cos(a * (u * v)));
      };
    }
    case Builtin::Constant: {
      const double c = p.at(0);
      if (!(c >= 0.0 && c <= 1.0)) throw Error("constant graphon value must lie in [0,1]");
      return [c](double, double) { return c; };
    }
    case Builtin::Product:
      return [](double u, double v) { return u * v; };
  }
  throw Error("unknown builtin graphon");
}

void check_unit(double u, double v) {
  if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0))
    throw Error("graphon coordinates must lie in [0,1]");
}

}  // namespace

const std::vector<BuiltinInfo>& builtin_library() {
  static const std::vector<BuiltinInfo> library = {
      {Builtin::LinearMean, "linear_mean", {}},
      {Builtin::QuadraticMean, "quadratic_mean", {}},
      {Builtin::OneMinusMax, "one_minus_max", {}},
      {Builtin::MinTimesOneMinusMax, "min_one_minus_max", {}},
      {Builtin::AbsSin, "abs_sin", {100.0}},
      {Builtin::SinCos, "sin_cos", {64.0}},
      {Builtin::SinCos, "sin_cos_10", {10.0}},
      {Builtin::Constant, "constant", {0.5}},
      {Builtin::Product, "product", {}},
  };
  return library;
}

std::optional<BuiltinInfo> find_builtin(std::string_view id) {
  static const std::vector<std::pair<std::string_view, std::string_view>> aliases = {
      {"W1", "linear_mean"},   {"W2", "quadratic_mean"}, {"W3", "one_minus_max"},
      {"W4", "min_one_minus_max"}, {"W5", "abs_sin"},    {"W6", "sin_cos"},
      {"W7", "sin_cos_10"},
  };
  for (const auto& [alias, target] : aliases)
    if (id == alias) id = target;
  for (const auto& info : builtin_library())
    if (info.id == id) return info;
  return std::nullopt;
}

Graphon Graphon::builtin(Builtin model, std::vector<double> params) {
  for (const auto& info : builtin_library()) {
    if (info.model != model) continue;
    if (params.empty()) params = info.default_params;
    Graphon w;
    w.id_ = std::string(info.id);
    w.model_ = model;
    w.kernel_ = closed_form(model, params);
    w.params_ = std::move(params);
    return w;
  }
  throw Error("unknown builtin graphon");
}

Graphon Graphon::builtin(std::string_view id, std::vector<double> params) {
  auto info = find_builtin(id);
  if (!info) throw Error("unknown builtin graphon id: " + std::string(id));
  if (params.empty()) params = info->default_params;
  Graphon w = builtin(info->model, params);
  w.id_ = std::string(info->id);
  return w;
}

Graphon Graphon::constant(double c) { return builtin(Builtin::Constant, {c}); }

Graphon Graphon::step(Partition partition, Matrix values) {
  const Index k = partition.cells();
  if (values.rows() != k || values.cols() != k)
    throw Error("step graphon value grid must be K x K for K cells");
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) {
      if (values(i, j) != values(j, i)) throw Error("step graphon values must be symmetric");
      if (!(values(i, j) >= 0.0 && values(i, j) <= 1.0))
        throw Error("step graphon values must lie in [0,1]");
    }
  Graphon w;
  w.id_ = "step";
  w.step_ = StepData{std::move(partition), std::move(values)};
  return w;
}

Graphon Graphon::custom(std::string id, std::function<double(double, double)> kernel) {
  Graphon w;
  w.id_ = std::move(id);
  w.kernel_ = std::move(kernel);
  return w;
}

const Partition& Graphon::partition() const {
  if (!step_) throw Error("graphon is not a step kernel");
  return step_->partition;
}

const Matrix& Graphon::values() const {
  if (!step_) throw Error("graphon is not a step kernel");
  return step_->values;
}

double Graphon::operator()(double u, double v) const {
  check_unit(u, v);
  if (step_) return step_->values(step_->partition.locate(u), step_->partition.locate(v));
  return kernel_(u, v);
}

double evaluate(const Graphon& w, double u, double v) { return w(u, v); }

Graph discretize_gd1(const Graphon& w, Index n, Quadrature quadrature) {
  if (n < 1) throw Error("discretization needs N >= 1");
  const int q = quadrature.points_per_axis;
  if (q < 1) throw Error("quadrature needs at least one point per axis");
  const double nd = static_cast<double>(n);
  const double h = 1.0 / (nd * q);

  // Quadrature nodes of cell i are (i*q + a + 1/2) * h, a = 0..q-1.
  std::vector<double> nodes(static_cast<size_t>(n) * q);
  for (Index i = 0; i < n; ++i)
    for (int a = 0; a < q; ++a)
      nodes[static_cast<size_t>(i * q + a)] = (static_cast<double>(i * q + a) + 0.5) * h;

  Matrix adjacency(n, n);
  const double scale = 1.0 / (static_cast<double>(q) * q);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      double sum = 0.0;
      for (int a = 0; a < q; ++a) {
        const double u = nodes[static_cast<size_t>(i * q + a)];
        for (int b = 0; b < q; ++b) sum += w(u, nodes[static_cast<size_t>(j * q + b)]);
      }
      const double mean = std::clamp(sum * scale, 0.0, 1.0);
      adjacency(i, j) = mean;
      adjacency(j, i) = mean;
    }
  }
  return Graph(std::move(adjacency));
}

Graphon induce_graphon(const Graph& graph) {
  return Graphon::step(Partition::uniform(graph.size()), graph.adjacency());
}

Graphon refine(const Graphon& step, const Partition& fine) {
  const auto parent = step.partition().embed(fine);
  const Index k = fine.cells();
  Matrix values(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      values(i, j) = step.values()(parent[static_cast<size_t>(i)], parent[static_cast<size_t>(j)]);
  return Graphon::step(fine, std::move(values));
}

Matrix weighted_grid(const Graphon& step) {
  const Vector root = step.partition().widths().cwiseSqrt();
  return root.asDiagonal() * step.values() * root.asDiagonal();
}

namespace {

// Spectral norm of a symmetric matrix: the largest |eigenvalue|.
double symmetric_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

Graphon as_step(const Graphon& w, Index resolution, Quadrature quadrature) {
  if (w.is_step()) return w;
  return induce_graphon(discretize_gd1(w, resolution, quadrature));
}

double operator_norm(const Graphon& w, Index resolution) {
  if (!w.is_step()) {
    if (resolution < 1) throw Error("resolution must be positive");
    const Graph g = discretize_gd1(w, resolution);
    return symmetric_norm(g.adjacency()) / static_cast<double>(resolution);
  }
  if (w.partition().is_uniform())
    return symmetric_norm(w.values()) / static_cast<double>(w.partition().cells());
  return symmetric_norm(weighted_grid(w));
}

double operator_distance(const Graphon& w1, const Graphon& w2) {
  const Partition common = Partition::common_refinement(w1.partition(), w2.partition());
  const Graphon r1 = refine(w1, common);
  const Graphon r2 = refine(w2, common);
  const Vector root = common.widths().cwiseSqrt();
  const Matrix diff = root.asDiagonal() * (r1.values() - r2.values()) * root.asDiagonal();
  return symmetric_norm(diff);
}

}  // namespace gphon
