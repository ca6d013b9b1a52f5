#pragma once

#include "gphon/common.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace gphon {

/// Undirected weighted graph; the adjacency is the shift operator.
class Graph {
 public:
  /// Throws unless `adjacency` is square, exactly symmetric, in [0,1].
  explicit Graph(Matrix adjacency);

  Index size() const { return adjacency_.rows(); }
  const Matrix& adjacency() const { return adjacency_; }

 private:
  Matrix adjacency_;
};

/// Eigenpairs of a symmetric matrix, ordered by |lambda| descending. Ties in
/// |lambda| go to the larger signed value, then to the lower index.
/// Eigenvectors are orthonormal columns whose first entry of magnitude
/// above 1e-12 is positive.
struct SpectralBasis {
  Vector eigenvalues;
  Matrix eigenvectors;
  /// Solver column each ordered eigenpair came from. Members of a degenerate
  /// eigenspace record the solver columns of that space in order.
  std::vector<Index> order;

  Index size() const { return eigenvalues.size(); }
  /// Leading k columns, spanning PW for the k-th frequency.
  Matrix leading(Index k) const;
};

/// Ordered, sign-fixed eigendecomposition of any symmetric matrix.
/// Eigenvalues within `1e-9 * max(1, max|lambda|)` of each other form one
/// eigenspace, whose basis is rebuilt by projecting e_0, e_1, ... onto it.
SpectralBasis symmetric_spectrum(const Matrix& symmetric);

SpectralBasis spectral_decompose(const Graph& graph);

Vector gft(const SpectralBasis& basis, const Vector& x);
Vector igft(const SpectralBasis& basis, const Vector& coefficients);

/// sum_k h_k A^k x by Horner's rule.
Vector graph_filter(const Matrix& shift, std::span<const double> h, const Vector& x);
Vector graph_filter(const Graph& graph, std::span<const double> h, const Vector& x);

enum class BandwidthModel { BWM1, BWM2, BWM3, BWM4 };

BandwidthModel parse_bandwidth_model(std::string_view name);
std::string_view to_string(BandwidthModel model);

/// k_omega for a sample budget m: m, round(0.9m), round(0.85m), round(0.9m).
Index bandwidth_count(BandwidthModel model, Index m);

/// Out-of-band attenuation h(k) for BWM4, k 1-based.
double bwm4_attenuation(Index k, Index k_omega);

/// Random bandlimited signal: Gaussian(1, 0.52) Fourier coefficients on the
/// leading k_omega modes (BWM1-3), or on all modes attenuated by h(k) (BWM4).
Vector generate_bandlimited(const SpectralBasis& basis, BandwidthModel model, Index m,
                            std::uint64_t seed);

inline constexpr double kCoefficientMean = 1.0;
inline constexpr double kCoefficientStd = 0.52;

/// |lambda_{k}| with k 1-based.
double bandwidth_omega(const SpectralBasis& basis, Index k_omega);

}  // namespace gphon
