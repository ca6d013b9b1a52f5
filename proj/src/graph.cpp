#include "gphon/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace gphon {

Graph::Graph(Matrix adjacency) : adjacency_(std::move(adjacency)) {
  if (adjacency_.rows() < 1 || adjacency_.rows() != adjacency_.cols())
    throw Error("adjacency must be a nonempty square array");
  const Index n = adjacency_.rows();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (adjacency_(i, j) != adjacency_(j, i)) throw Error("adjacency must be symmetric");
      if (!(adjacency_(i, j) >= 0.0 && adjacency_(i, j) <= 1.0))
        throw Error("adjacency entries must lie in [0,1]");
    }
}

Matrix SpectralBasis::leading(Index k) const {
  if (k < 0 || k > size()) throw Error("band size outside [0, N]");
  return eigenvectors.leftCols(k);
}

namespace {

constexpr double kClusterTolerance = 1e-9;
constexpr double kSignThreshold = 1e-12;

void fix_sign(Eigen::Ref<Vector> v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > kSignThreshold) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

// Orthonormal basis of span(space) built from the projections of e_0, e_1, ...
// in index order.
Matrix canonical_eigenspace_basis(const Matrix& space) {
  const Index n = space.rows();
  const Index dim = space.cols();
  Matrix basis(n, dim);
  Index found = 0;
  for (Index i = 0; i < n && found < dim; ++i) {
    Vector v = space * space.row(i).transpose();
    for (int pass = 0; pass < 2; ++pass)
      for (Index j = 0; j < found; ++j) v -= basis.col(j).dot(v) * basis.col(j);
    const double norm = v.norm();
    if (norm < 1e-6) continue;
    basis.col(found++) = v / norm;
  }
  if (found != dim) throw Error("failed to rebuild a degenerate eigenspace");
  return basis;
}

}  // namespace

SpectralBasis symmetric_spectrum(const Matrix& symmetric) {
  const Index n = symmetric.rows();
  if (n != symmetric.cols()) throw Error("matrix must be square");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric);
  if (solver.info() != Eigen::Success) throw Error("eigensolver failed");
  const Vector& raw_values = solver.eigenvalues();  // ascending
  const Matrix& raw_vectors = solver.eigenvectors();

  const double scale = std::max(1.0, raw_values.cwiseAbs().maxCoeff());
  const double tol = kClusterTolerance * scale;

  // Eigenspaces: runs of ascending eigenvalues with consecutive gaps <= tol.
  struct Cluster {
    Index begin;
    Index end;
    double value;
  };
  std::vector<Cluster> clusters;
  for (Index i = 0; i < n;) {
    Index j = i + 1;
    while (j < n && raw_values(j) - raw_values(j - 1) <= tol) ++j;
    clusters.push_back({i, j, raw_values.segment(i, j - i).mean()});
    i = j;
  }

  // |lambda| descending; near-equal magnitudes go to the larger value.
  std::stable_sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    return std::abs(a.value) > std::abs(b.value);
  });
  for (size_t g = 0; g < clusters.size();) {
    size_t h = g + 1;
    while (h < clusters.size() &&
           std::abs(clusters[g].value) - std::abs(clusters[h].value) <= tol)
      ++h;
    std::stable_sort(clusters.begin() + static_cast<std::ptrdiff_t>(g),
                     clusters.begin() + static_cast<std::ptrdiff_t>(h),
                     [](const Cluster& a, const Cluster& b) { return a.value > b.value; });
    g = h;
  }

  SpectralBasis basis;
  basis.eigenvalues.resize(n);
  basis.eigenvectors.resize(n, n);
  basis.order.reserve(static_cast<size_t>(n));
  Index col = 0;
  for (const auto& c : clusters) {
    const Index dim = c.end - c.begin;
    if (dim == 1) {
      basis.eigenvalues(col) = raw_values(c.begin);
      basis.eigenvectors.col(col) = raw_vectors.col(c.begin);
      fix_sign(basis.eigenvectors.col(col));
      basis.order.push_back(c.begin);
      ++col;
      continue;
    }
    const Matrix rebuilt = canonical_eigenspace_basis(raw_vectors.middleCols(c.begin, dim));
    for (Index d = 0; d < dim; ++d) {
      basis.eigenvalues(col) = c.value;
      basis.eigenvectors.col(col) = rebuilt.col(d);
      fix_sign(basis.eigenvectors.col(col));
      basis.order.push_back(c.begin + d);
      ++col;
    }
  }
  return basis;
}

SpectralBasis spectral_decompose(const Graph& graph) { return symmetric_spectrum(graph.adjacency()); }

Vector gft(const SpectralBasis& basis, const Vector& x) {
  if (x.size() != basis.size()) throw Error("signal length does not match the basis");
  return basis.eigenvectors.transpose() * x;
}

Vector igft(const SpectralBasis& basis, const Vector& coefficients) {
  if (coefficients.size() != basis.size())
    throw Error("coefficient count does not match the basis");
  return basis.eigenvectors * coefficients;
}

Vector graph_filter(const Matrix& shift, std::span<const double> h, const Vector& x) {
  if (x.size() != shift.rows()) throw Error("signal length does not match the graph");
  if (h.empty()) return Vector::Zero(x.size());
  Vector y = h.back() * x;
  for (auto k = static_cast<std::ptrdiff_t>(h.size()) - 2; k >= 0; --k)
    y = shift * y + h[static_cast<size_t>(k)] * x;
  return y;
}

Vector graph_filter(const Graph& graph, std::span<const double> h, const Vector& x) {
  return graph_filter(graph.adjacency(), h, x);
}

BandwidthModel parse_bandwidth_model(std::string_view name) {
  if (name == "BWM1" || name == "bwm1") return BandwidthModel::BWM1;
  if (name == "BWM2" || name == "bwm2") return BandwidthModel::BWM2;
  if (name == "BWM3" || name == "bwm3") return BandwidthModel::BWM3;
  if (name == "BWM4" || name == "bwm4") return BandwidthModel::BWM4;
  throw Error("unknown bandwidth model: " + std::string(name));
}

std::string_view to_string(BandwidthModel model) {
  switch (model) {
    case BandwidthModel::BWM1: return "BWM1";
    case BandwidthModel::BWM2: return "BWM2";
    case BandwidthModel::BWM3: return "BWM3";
    case BandwidthModel::BWM4: return "BWM4";
  }
  return "?";
}

Index bandwidth_count(BandwidthModel model, Index m) {
  switch (model) {
    case BandwidthModel::BWM1: return m;
    case BandwidthModel::BWM2:
    case BandwidthModel::BWM4: return round_half_even(0.9 * static_cast<double>(m));
    case BandwidthModel::BWM3: return round_half_even(0.85 * static_cast<double>(m));
  }
  return 0;
}

double bwm4_attenuation(Index k, Index k_omega) {
  return k <= k_omega ? 1.0 : std::exp(-4.0 * static_cast<double>(k - k_omega));
}

Vector generate_bandlimited(const SpectralBasis& basis, BandwidthModel model, Index m,
                            std::uint64_t seed) {
  const Index n = basis.size();
  if (m < 0 || m > n) throw Error("sample budget must lie in [0, N]");
  const Index k_omega = bandwidth_count(model, m);
  if (k_omega < 1) throw Error("bandwidth model yields k_omega = 0");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gaussian(kCoefficientMean, kCoefficientStd);
  Vector coefficients = Vector::Zero(n);
  if (model == BandwidthModel::BWM4) {
    for (Index k = 0; k < n; ++k) coefficients(k) = gaussian(rng) * bwm4_attenuation(k + 1, k_omega);
  } else {
    for (Index k = 0; k < k_omega; ++k) coefficients(k) = gaussian(rng);
  }
  return igft(basis, coefficients);
}

double bandwidth_omega(const SpectralBasis& basis, Index k_omega) {
  if (k_omega < 1 || k_omega > basis.size()) throw Error("k_omega must lie in [1, N]");
  return std::abs(basis.eigenvalues(k_omega - 1));
}

}  // namespace gphon
