#pragma once

#include "gphon/common.hpp"
#include "gphon/graph.hpp"
#include "gphon/graphon.hpp"

#include <span>

namespace gphon {

/// Piecewise-constant function on a partition of [0,1].
struct StepSignal {
  Partition partition;
  Vector values;

  /// Squared L2[0,1] norm, sum of values^2 weighted by cell widths.
  double norm_squared() const;
  double norm() const;

  /// Same function expressed on a finer partition.
  StepSignal refined(const Partition& fine) const;
};

/// step(x): value x(i) on cell [i/N, (i+1)/N).
StepSignal step_signal(const Vector& x);

/// L2 inner product of two step signals (common refinement).
double inner_product(const StepSignal& a, const StepSignal& b);

/// (T_W x)(u) = int W(u,v) x(v) dv, exact for step kernels. The result lives
/// on the common refinement of both partitions.
StepSignal apply_tw(const Graphon& w, const StepSignal& x);

/// sum_k h_k T_W^k x.
StepSignal graphon_filter(const Graphon& w, std::span<const double> h, const StepSignal& x);

struct GraphonSpectrum {
  Partition partition;
  Vector eigenvalues;
  /// Column j holds the cell values of eigenfunction j (orthonormal in L2).
  Matrix eigenfunctions;

  Index size() const { return eigenvalues.size(); }
  StepSignal eigenfunction(Index j) const;
};

/// Spectrum of T_W through the width-weighted grid; ordering and signs
/// follow symmetric_spectrum.
GraphonSpectrum graphon_spectrum(const Graphon& w);

/// Coefficients <x, phi_j>. Throws if the spectrum partition does not refine
/// the signal's partition.
Vector graphon_fourier(const GraphonSpectrum& spectrum, const StepSignal& x);

/// Step signal with the given coefficients on the leading eigenfunctions.
StepSignal graphon_synthesis(const GraphonSpectrum& spectrum, const Vector& coefficients);

/// Number of modes with |lambda| >= omega, ties included.
Index band_size(const GraphonSpectrum& spectrum, double omega);

/// ||T_W x|| - omega ||x||; nonnegative for omega-bandlimited x.
double bernstein_margin(const Graphon& w, const StepSignal& x, double omega);

}  // namespace gphon
