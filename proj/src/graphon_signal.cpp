#include "gphon/graphon_signal.hpp"

#include <cmath>

namespace gphon {

double StepSignal::norm_squared() const {
  return (values.array().square() * partition.widths().array()).sum();
}

double StepSignal::norm() const { return std::sqrt(norm_squared()); }

StepSignal StepSignal::refined(const Partition& fine) const {
  if (values.size() != partition.cells()) throw Error("step signal has the wrong number of values");
  const auto parent = partition.embed(fine);
  Vector out(fine.cells());
  for (Index i = 0; i < fine.cells(); ++i) out(i) = values(parent[static_cast<size_t>(i)]);
  return {fine, std::move(out)};
}

StepSignal step_signal(const Vector& x) {
  if (x.size() < 1) throw Error("cannot step an empty signal");
  return {Partition::uniform(x.size()), x};
}

double inner_product(const StepSignal& a, const StepSignal& b) {
  const Partition common = Partition::common_refinement(a.partition, b.partition);
  const StepSignal ra = a.refined(common);
  const StepSignal rb = b.refined(common);
  return (ra.values.array() * rb.values.array() * common.widths().array()).sum();
}

StepSignal apply_tw(const Graphon& w, const StepSignal& x) {
  if (!w.is_step()) throw Error("apply_tw needs a step graphon");
  const Partition common = Partition::common_refinement(w.partition(), x.partition);
  const Graphon kernel = common == w.partition() ? w : refine(w, common);
  const StepSignal signal = common == x.partition ? x : x.refined(common);
  if (common.is_uniform()) {
    return {common, kernel.values() * signal.values / static_cast<double>(common.cells())};
  }
  const Vector weighted = signal.values.cwiseProduct(common.widths());
  return {common, kernel.values() * weighted};
}

StepSignal graphon_filter(const Graphon& w, std::span<const double> h, const StepSignal& x) {
  if (!w.is_step()) throw Error("graphon_filter needs a step graphon");
  const Partition common = Partition::common_refinement(w.partition(), x.partition);
  const StepSignal signal = x.refined(common);
  if (h.empty()) return {common, Vector::Zero(common.cells())};
  StepSignal y{common, h.back() * signal.values};
  for (auto k = static_cast<std::ptrdiff_t>(h.size()) - 2; k >= 0; --k) {
    y = apply_tw(w, y);
    y.values += h[static_cast<size_t>(k)] * signal.values;
  }
  return y;
}

StepSignal GraphonSpectrum::eigenfunction(Index j) const {
  return {partition, eigenfunctions.col(j)};
}

GraphonSpectrum graphon_spectrum(const Graphon& w) {
  if (!w.is_step()) throw Error("graphon_spectrum needs a step graphon");
  const SpectralBasis basis = symmetric_spectrum(weighted_grid(w));
  const Vector inv_root = w.partition().widths().cwiseSqrt().cwiseInverse();
  return {w.partition(), basis.eigenvalues, inv_root.asDiagonal() * basis.eigenvectors};
}

Vector graphon_fourier(const GraphonSpectrum& spectrum, const StepSignal& x) {
  StepSignal signal = x;
  if (!(x.partition == spectrum.partition)) {
    try {
      signal = x.refined(spectrum.partition);
    } catch (const Error&) {
      throw Error("signal partition is incompatible with the spectrum partition");
    }
  }
  const Vector weighted = signal.values.cwiseProduct(spectrum.partition.widths());
  return spectrum.eigenfunctions.transpose() * weighted;
}

StepSignal graphon_synthesis(const GraphonSpectrum& spectrum, const Vector& coefficients) {
  if (coefficients.size() > spectrum.size()) throw Error("more coefficients than eigenfunctions");
  return {spectrum.partition, spectrum.eigenfunctions.leftCols(coefficients.size()) * coefficients};
}

Index band_size(const GraphonSpectrum& spectrum, double omega) {
  const double tol = 1e-12 * std::max(1.0, std::abs(omega));
  Index k = 0;
  while (k < spectrum.size() && std::abs(spectrum.eigenvalues(k)) >= omega - tol) ++k;
  return k;
}

double bernstein_margin(const Graphon& w, const StepSignal& x, double omega) {
  return apply_tw(w, x).norm() - omega * x.norm();
}

}  // namespace gphon
