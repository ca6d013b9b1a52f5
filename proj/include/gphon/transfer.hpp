#pragma once

#include "gphon/common.hpp"
#include "gphon/graph.hpp"
#include "gphon/graphon.hpp"
#include "gphon/intervals.hpp"
#include "gphon/sampling.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace gphon {

/// Union of the cells [i/N, (i+1)/N) of the nodes in `set`.
IntervalSet induce_interval_set(const SamplingSet& set);

/// How the partially covered cells complete a transferred set.
enum class FillRule {
  Overlap,  // largest |I_i ∩ S| / |I_i| first, then smaller index
  Index,    // smaller index first
  Random,   // uniform without replacement, seeded
};

FillRule parse_fill_rule(std::string_view name);
std::string_view to_string(FillRule rule);

struct TransferOptions {
  FillRule fill = FillRule::Overlap;
  std::uint64_t seed = 0;
};

/// The budget m cannot be met from cells meeting the source set.
class TransferBudgetError : public Error {
 public:
  TransferBudgetError(Index requested, Index achievable);
  Index requested() const { return requested_; }
  Index achievable() const { return achievable_; }

 private:
  Index requested_;
  Index achievable_;
};

/// Small-to-large transfer: scan the cells of the target equipartition in
/// order, take those inside `source` until m are taken, remember those that
/// only meet it, then complete from the latter by the fill rule.
SamplingSet algorithm1_transfer(const IntervalSet& source, Index target_size, Index m,
                                TransferOptions options = {});

/// Two-graph sandwich for the complement constants of matched sets.
struct ThetaReport {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double measured = 0.0;            // Lambda of the complement of s1 in g1
  double source_lambda = 0.0;       // Lambda of the complement of s2 in g2
  double operator_distance = 0.0;   // ||T_{W_G1} - T_{W_G2}||
  double operator_norm = 0.0;       // ||T_{W_G1}||
  double interval_mismatch = 0.0;   // measure of S_{W_G1} △ S_{W_G2}
  bool hypothesis_holds = false;    // induced interval sets coincide
  SamplingSet s1;
  SamplingSet s2;
};

/// theta1 = max{0, (N1/N2) L2 - N1 d}, theta2 = min{N1 ||T1||, N1 d + (N1/N2) L2}.
ThetaReport theta_bounds(const Graph& g1, const SamplingSet& s1, const Graph& g2,
                         const SamplingSet& s2);

/// Transfers s2 onto g1 with Algorithm 1 at the proportional budget first.
ThetaReport theta_bounds(const Graph& g1, const Graph& g2, const SamplingSet& s2);

/// Bounds from the formula given its inputs; shared by theta_bounds and by
/// checks that re-evaluate it.
void theta_from_formula(double n1, double n2, double source_lambda, double distance,
                        double norm, double& theta1, double& theta2);

struct SandwichSide {
  double lower = 0.0;
  double upper = 0.0;
  double measured = 0.0;
};

/// Two-graphon sandwich on a shared set: w1's complement constant lies in
/// [max{0, L2 - d}, min{||T1||, d + L2}], and symmetrically for w2.
struct SequenceReport {
  SandwichSide first;   // bounds on w1 from w2
  SandwichSide second;  // bounds on w2 from w1
  double operator_distance = 0.0;
  double norm1 = 0.0;
  double norm2 = 0.0;
};

/// Analytic kernels are discretized at `resolution`.
SequenceReport sequence_bounds(const Graphon& w1, const Graphon& w2, const IntervalSet& s,
                               Index resolution = 1024);

struct ConvergenceRecord {
  Index n = 0;
  double distance = 0.0;       // ||T_{W_GN} - T_ref||
  double lambda = 0.0;         // complement constant on W_GN
  double lambda_ref = 0.0;     // complement constant on the reference
  bool aligned = false;        // every endpoint of s is a multiple of 1/N
};

/// GD1 graphs at each size against a reference step kernel at
/// `ref_resolution`; records computed per size in order.
std::vector<ConvergenceRecord> convergence_report(const Graphon& w, const std::vector<Index>& sizes,
                                                  const IntervalSet& s, Index ref_resolution = 1024,
                                                  Quadrature quadrature = {});

}  // namespace gphon
