#include "gphon/common.hpp"

#include <algorithm>
#include <cmath>

namespace gphon {

namespace {
constexpr double kMergeTolerance = 1e-14;
}

Partition::Partition(std::vector<double> breakpoints) : breaks_(std::move(breakpoints)) {
  if (breaks_.size() < 2) throw Error("partition needs at least two breakpoints");
  if (breaks_.front() != 0.0 || breaks_.back() != 1.0)
    throw Error("partition must start at 0 and end at 1");
  for (size_t i = 1; i < breaks_.size(); ++i)
    if (!(breaks_[i] > breaks_[i - 1])) throw Error("partition breakpoints must increase strictly");
}

Partition Partition::uniform(Index n) {
  if (n < 1) throw Error("uniform partition needs n >= 1");
  std::vector<double> b(static_cast<size_t>(n) + 1);
  for (Index i = 0; i <= n; ++i) b[static_cast<size_t>(i)] = static_cast<double>(i) / static_cast<double>(n);
  return Partition(std::move(b));
}

Vector Partition::widths() const {
  Vector w(cells());
  for (Index i = 0; i < cells(); ++i) w(i) = width(i);
  return w;
}

Index Partition::locate(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw Error("coordinate outside [0,1]");
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), u);
  auto cell = static_cast<Index>(it - breaks_.begin()) - 1;
  return std::min(cell, cells() - 1);
}

bool Partition::is_uniform() const {
  const double h = 1.0 / static_cast<double>(cells());
  for (Index i = 0; i < cells(); ++i)
    if (std::abs(width(i) - h) > 1e-13) return false;
  return true;
}

Partition Partition::common_refinement(const Partition& a, const Partition& b) {
  std::vector<double> merged;
  merged.reserve(a.breaks_.size() + b.breaks_.size());
  std::merge(a.breaks_.begin(), a.breaks_.end(), b.breaks_.begin(), b.breaks_.end(),
             std::back_inserter(merged));
  std::vector<double> out;
  out.reserve(merged.size());
  for (double x : merged)
    if (out.empty() || x - out.back() > kMergeTolerance) out.push_back(x);
  out.back() = 1.0;
  return Partition(std::move(out));
}

Partition Partition::with_points(const std::vector<double>& points) const {
  std::vector<double> sorted;
  for (double p : points)
    if (p > 0.0 && p < 1.0) sorted.push_back(p);
  std::sort(sorted.begin(), sorted.end());
  sorted.insert(sorted.begin(), 0.0);
  sorted.push_back(1.0);
  return common_refinement(*this, Partition::from_sorted_unchecked(std::move(sorted)));
}

Partition Partition::from_sorted_unchecked(std::vector<double> sorted) {
  std::vector<double> out;
  for (double x : sorted)
    if (out.empty() || x - out.back() > kMergeTolerance) out.push_back(x);
  out.back() = 1.0;
  return Partition(std::move(out));
}

std::vector<Index> Partition::embed(const Partition& fine) const {
  std::vector<Index> parent(static_cast<size_t>(fine.cells()));
  for (Index i = 0; i < fine.cells(); ++i) {
    const Index p = locate(0.5 * (fine.lower(i) + fine.upper(i)));
    if (fine.lower(i) < lower(p) - kMergeTolerance || fine.upper(i) > upper(p) + kMergeTolerance)
      throw Error("partition is not a refinement");
    parent[static_cast<size_t>(i)] = p;
  }
  return parent;
}

Index round_half_even(double x) {
  return static_cast<Index>(std::nearbyint(x));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace gphon
