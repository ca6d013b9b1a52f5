#pragma once

#include "gphon/common.hpp"

#include <utility>
#include <vector>

namespace gphon {

struct Interval {
  double lo;
  double hi;  // exclusive, except that hi == 1 closes the domain

  double length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Finite union of disjoint half-open subintervals of [0,1], kept sorted with
/// touching pieces merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Normalizes: drops empty pieces, sorts, merges overlaps and contacts.
  /// Throws on pieces outside [0,1] or with lo > hi.
  explicit IntervalSet(std::vector<Interval> pieces);

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  double measure() const;

  /// [0,1] minus this set.
  IntervalSet complement() const;

  /// |[lo,hi) ∩ this|.
  double overlap(double lo, double hi) const;
  /// [lo,hi) lies inside one piece (half-open, 1e-12 slack on endpoints).
  bool contains(double lo, double hi) const;

  /// Measure of the symmetric difference.
  double symmetric_difference(const IntervalSet& other) const;

  /// All piece endpoints, for refining partitions.
  std::vector<double> endpoints() const;

  /// Cells of `partition` lying inside the set. The partition must have every
  /// endpoint of the set as a breakpoint.
  std::vector<Index> covered_cells(const Partition& partition) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> pieces_;
};

inline constexpr double kIntervalSlack = 1e-12;

}  // namespace gphon
