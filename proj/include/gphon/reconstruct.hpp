#pragma once

#include "gphon/common.hpp"
#include "gphon/graph.hpp"
#include "gphon/sampling.hpp"

#include <cstdint>
#include <limits>

namespace gphon {

struct NoiseSpec {
  double snr_db = 20.0;  // +infinity means noiseless
  std::uint64_t seed = 0;
};

inline constexpr double kNoiseless = std::numeric_limits<double>::infinity();

struct NoisySamples {
  Vector values;
  bool zero_power = false;  // samples were all zero; returned unchanged
};

/// x(S) = M x, entries in sorted node order.
Vector take_samples(const Vector& x, const SamplingSet& set);

/// i.i.d. N(0, P / 10^(snr/10)) with P the mean square of the samples.
NoisySamples add_noise(const Vector& samples, const NoiseSpec& spec);

struct Reconstruction {
  Vector signal;
  Index rank = 0;
  bool rank_deficient = false;
};

/// x_rec = U_k (M U_k)^+ samples; singular values below 1e-12 sigma_max are
/// treated as zero.
Reconstruction reconstruct_ls(const SpectralBasis& basis, Index k_omega, const SamplingSet& set,
                              const Vector& samples);

double mse(const Vector& x, const Vector& x_rec);

}  // namespace gphon
