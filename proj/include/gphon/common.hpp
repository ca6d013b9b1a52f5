#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gphon {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Raised when an operation's precondition is violated or its result is
/// undefined for the given input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Breakpoints 0 = b_0 < b_1 < ... < b_K = 1 of a partition of [0,1] into
/// half-open cells [b_i, b_{i+1}); the last cell is closed at 1.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<double> breakpoints);

  /// Regular partition into n cells of width 1/n.
  static Partition uniform(Index n);

  Index cells() const { return static_cast<Index>(breaks_.size()) - 1; }
  const std::vector<double>& breakpoints() const { return breaks_; }
  double lower(Index i) const { return breaks_[static_cast<size_t>(i)]; }
  double upper(Index i) const { return breaks_[static_cast<size_t>(i) + 1]; }
  double width(Index i) const { return upper(i) - lower(i); }
  Vector widths() const;

  /// Cell containing u under the half-open convention.
  Index locate(double u) const;

  /// True when every cell has the same width 1/cells() (to rounding).
  bool is_uniform() const;

  /// Sorted union of both breakpoint sets; points closer than 1e-14 merge.
  static Partition common_refinement(const Partition& a, const Partition& b);

  /// Partition with the extra points inserted as breakpoints.
  Partition with_points(const std::vector<double>& points) const;

  /// For each cell of `fine`, the index of the cell of *this containing it.
  /// Throws if `fine` does not refine *this.
  std::vector<Index> embed(const Partition& fine) const;

  bool operator==(const Partition& other) const = default;

 private:
  static Partition from_sorted_unchecked(std::vector<double> sorted);

  std::vector<double> breaks_{0.0, 1.0};
};

/// Round-half-to-even for nonnegative reals, used for sample budgets.
Index round_half_even(double x);

/// Deterministic 64-bit mixing of a seed with a salt (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// FNV-1a over a byte string; stable across platforms and runs.
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace gphon
