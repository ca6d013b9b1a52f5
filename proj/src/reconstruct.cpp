#include "gphon/reconstruct.hpp"

#include <cmath>
#include <random>

namespace gphon {

Vector take_samples(const Vector& x, const SamplingSet& set) {
  if (set.graph_size() != x.size()) throw Error("sampling set belongs to another graph");
  Vector out(set.size());
  for (Index r = 0; r < set.size(); ++r) out(r) = x(set.nodes()[static_cast<size_t>(r)]);
  return out;
}

NoisySamples add_noise(const Vector& samples, const NoiseSpec& spec) {
  if (samples.size() == 0) throw Error("cannot add noise to an empty sample list");
  if (std::isinf(spec.snr_db) && spec.snr_db > 0.0) return {samples, false};
  const double power = samples.squaredNorm() / static_cast<double>(samples.size());
  if (power == 0.0) return {samples, true};
  const double sigma = std::sqrt(power / std::pow(10.0, spec.snr_db / 10.0));
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> noise(0.0, sigma);
  Vector out = samples;
  for (Index i = 0; i < out.size(); ++i) out(i) += noise(rng);
  return {std::move(out), false};
}

Reconstruction reconstruct_ls(const SpectralBasis& basis, Index k_omega, const SamplingSet& set,
                              const Vector& samples) {
  if (samples.size() != set.size()) throw Error("sample count does not match the set");
  if (set.graph_size() != basis.size()) throw Error("sampling set belongs to another graph");
  const Matrix band = basis.leading(k_omega);
  Matrix restricted(set.size(), k_omega);
  for (Index r = 0; r < set.size(); ++r) restricted.row(r) = band.row(set.nodes()[static_cast<size_t>(r)]);

  Reconstruction out;
  if (set.size() == 0 || k_omega == 0) {
    out.signal = Vector::Zero(basis.size());
    out.rank_deficient = k_omega > 0;
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(restricted, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& s = svd.singularValues();
  const double cutoff = 1e-12 * s(0);
  Vector inv = Vector::Zero(s.size());
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff) {
      inv(i) = 1.0 / s(i);
      ++out.rank;
    }
  const Vector coefficients =
      svd.matrixV() * inv.asDiagonal() * (svd.matrixU().transpose() * samples);
  out.signal = band * coefficients;
  out.rank_deficient = out.rank < k_omega;
  return out;
}

double mse(const Vector& x, const Vector& x_rec) {
  if (x.size() != x_rec.size()) throw Error("signal lengths differ");
  if (x.size() == 0) throw Error("mse of empty signals");
  return (x - x_rec).squaredNorm() / static_cast<double>(x.size());
}

}  // namespace gphon
