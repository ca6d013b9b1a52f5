#include "gphon/intervals.hpp"

#include <algorithm>

namespace gphon {

IntervalSet::IntervalSet(std::vector<Interval> pieces) {
  for (const auto& p : pieces) {
    if (!(p.lo >= 0.0 && p.hi <= 1.0)) throw Error("interval outside [0,1]");
    if (p.lo > p.hi) throw Error("interval with lo > hi");
  }
  std::erase_if(pieces, [](const Interval& p) { return p.hi - p.lo <= kIntervalSlack; });
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const auto& p : pieces) {
    if (!pieces_.empty() && p.lo <= pieces_.back().hi + kIntervalSlack)
      pieces_.back().hi = std::max(pieces_.back().hi, p.hi);
    else
      pieces_.push_back(p);
  }
}

double IntervalSet::measure() const {
  double total = 0.0;
  for (const auto& p : pieces_) total += p.length();
  return total;
}

IntervalSet IntervalSet::complement() const {
  std::vector<Interval> out;
  double cursor = 0.0;
  for (const auto& p : pieces_) {
    if (p.lo > cursor) out.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < 1.0) out.push_back({cursor, 1.0});
  return IntervalSet(std::move(out));
}

double IntervalSet::overlap(double lo, double hi) const {
  double total = 0.0;
  for (const auto& p : pieces_) total += std::max(0.0, std::min(hi, p.hi) - std::max(lo, p.lo));
  return total;
}

bool IntervalSet::contains(double lo, double hi) const {
  for (const auto& p : pieces_)
    if (p.lo <= lo + kIntervalSlack && hi <= p.hi + kIntervalSlack) return true;
  return false;
}

double IntervalSet::symmetric_difference(const IntervalSet& other) const {
  double shared = 0.0;
  for (const auto& p : other.pieces_) shared += overlap(p.lo, p.hi);
  return measure() + other.measure() - 2.0 * shared;
}

std::vector<double> IntervalSet::endpoints() const {
  std::vector<double> out;
  for (const auto& p : pieces_) {
    out.push_back(p.lo);
    out.push_back(p.hi);
  }
  return out;
}

std::vector<Index> IntervalSet::covered_cells(const Partition& partition) const {
  std::vector<Index> cells;
  for (Index i = 0; i < partition.cells(); ++i) {
    const double lo = partition.lower(i);
    const double hi = partition.upper(i);
    const double inside = overlap(lo, hi);
    if (inside >= hi - lo - kIntervalSlack) {
      cells.push_back(i);
    } else if (inside > kIntervalSlack) {
      throw Error("partition does not resolve the interval set");
    }
  }
  return cells;
}

}  // namespace gphon
