#pragma once

#include "gphon/common.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gphon {

class Graph;

/// Closed-form kernels available by id. The first seven are the experiment
/// family; `constant` (param c) and `product` (uv) are reference kernels.
enum class Builtin {
  LinearMean,           // (u+v)/2
  QuadraticMean,        // (u^2+v^2)/2
  OneMinusMax,          // 1 - max(u,v)
  MinTimesOneMinusMax,  // min(u,v) * (1 - max(u,v))
  AbsSin,               // |sin(a uv)|, a = 100 by default
  SinCos,               // |sin(a uv)|/2 + |cos(a uv)|/2, a = 64 or 10
  Constant,             // c
  Product,              // uv
};

struct BuiltinInfo {
  Builtin model;
  std::string_view id;
  std::vector<double> default_params;
};

/// All builtin ids with their default parameters.
const std::vector<BuiltinInfo>& builtin_library();

/// Lookup by id; also accepts the aliases W1..W7 for the experiment family.
std::optional<BuiltinInfo> find_builtin(std::string_view id);

struct Quadrature {
  int points_per_axis = 8;  // composite midpoint subpoints per cell axis
};

/// A symmetric kernel on [0,1]^2 with values in [0,1]; either a closed form
/// or a step function on a partition.
class Graphon {
 public:
  static Graphon builtin(Builtin model, std::vector<double> params = {});
  static Graphon builtin(std::string_view id, std::vector<double> params = {});
  static Graphon constant(double c);
  /// Step kernel; `values` must be symmetric with entries in [0,1].
  static Graphon step(Partition partition, Matrix values);
  /// Arbitrary analytic kernel (used for custom experiments and tests).
  static Graphon custom(std::string id, std::function<double(double, double)> kernel);

  bool is_step() const { return step_.has_value(); }
  const std::string& id() const { return id_; }
  const std::vector<double>& params() const { return params_; }
  std::optional<Builtin> model() const { return model_; }

  /// Step-only accessors; throw for analytic kernels.
  const Partition& partition() const;
  const Matrix& values() const;

  /// W(u,v) for u, v in [0,1].
  double operator()(double u, double v) const;

 private:
  struct StepData {
    Partition partition;
    Matrix values;
  };

  std::string id_;
  std::vector<double> params_;
  std::optional<Builtin> model_;
  std::function<double(double, double)> kernel_;
  std::optional<StepData> step_;
};

double evaluate(const Graphon& w, double u, double v);

/// GD1: entry (i,j) is the mean of W over I_i x I_j of the regular
/// n-partition, by composite midpoint quadrature. Exactly symmetric.
Graph discretize_gd1(const Graphon& w, Index n, Quadrature quadrature = {});

/// Step graphon W_G on the regular N-partition with cell values A(i,j).
Graphon induce_graphon(const Graph& graph);

/// Step graphon whose partition is `fine`, carrying the same kernel.
Graphon refine(const Graphon& step, const Partition& fine);

/// B(i,j) = A(i,j) sqrt(w_i w_j); isometric to T_W on L2[0,1].
Matrix weighted_grid(const Graphon& step);

/// ||T_W||_2. Exact for step kernels; analytic kernels are discretized at
/// `resolution` first.
double operator_norm(const Graphon& w, Index resolution = 512);

/// ||T_W1 - T_W2||_2 for step kernels, on the common refinement.
double operator_distance(const Graphon& w1, const Graphon& w2);

/// Step kernel as-is; analytic kernels through GD1 at `resolution`.
Graphon as_step(const Graphon& w, Index resolution, Quadrature quadrature = {});

}  // namespace gphon
