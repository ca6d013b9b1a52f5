#pragma once

#include "gphon/common.hpp"
#include "gphon/graph.hpp"
#include "gphon/graphon.hpp"
#include "gphon/graphon_signal.hpp"
#include "gphon/intervals.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gphon {

/// Sorted, duplicate-free 0-based node indices.
class SamplingSet {
 public:
  SamplingSet() = default;
  SamplingSet(std::vector<Index> nodes, Index graph_size);
  SamplingSet(std::initializer_list<Index> nodes, Index graph_size);

  static SamplingSet all(Index graph_size);

  const std::vector<Index>& nodes() const { return nodes_; }
  Index size() const { return static_cast<Index>(nodes_.size()); }
  Index graph_size() const { return graph_size_; }
  bool empty() const { return nodes_.empty(); }
  bool contains(Index node) const;

  SamplingSet complement() const;

  bool operator==(const SamplingSet&) const = default;

 private:
  std::vector<Index> nodes_;
  Index graph_size_ = 0;
};

/// Lambda for a node set: largest singular value of A restricted to the
/// set's columns, with the maximizing unit vector (zero off the set).
struct RemovableReport {
  SamplingSet set;
  double lambda = 0.0;
  Vector witness;
};

/// Lambda for an interval set on a step kernel, with the step witness.
struct GraphonRemovableReport {
  IntervalSet set;
  double lambda = 0.0;
  StepSignal witness;
};

RemovableReport lambda_graph(const Graph& graph, const SamplingSet& subset);

/// Analytic kernels are discretized at `resolution`; step kernels use their
/// own partition refined by the interval endpoints.
GraphonRemovableReport lambda_graphon(const Graphon& w, const IntervalSet& intervals,
                                      Index resolution = 512);

/// Smallest singular value of the leading-k block restricted to the rows in
/// `set` (the min(|set|, k)-th singular value; 0 for an empty set).
double restricted_sigma_min(const SpectralBasis& basis, const SamplingSet& set, Index k_omega);
double restricted_sigma_min(const Matrix& band, const std::vector<Index>& rows);

/// Row restriction of the leading-k block has numerical rank k.
bool is_uniqueness_set(const SpectralBasis& basis, const SamplingSet& set, Index k_omega);

/// Greedy E-optimal selection: repeatedly add the node maximizing the
/// restricted sigma_min; ties go to the smaller index. Starts from `seed_set`
/// when given.
SamplingSet greedy_select(const SpectralBasis& basis, Index m, Index k_omega,
                          const SamplingSet& seed_set = {});

/// Exhaustive maximizer of the restricted sigma_min; the lexicographically
/// first optimum wins. Refuses when C(N, m) exceeds `budget`.
SamplingSet brute_force_select(const SpectralBasis& basis, Index m, Index k_omega,
                               double budget = 1e6);

/// Uniform draw of m of N nodes without replacement.
SamplingSet random_select(Index n, Index m, std::uint64_t seed);

}  // namespace gphon
