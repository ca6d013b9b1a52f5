#include "gphon/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gphon {

IntervalSet induce_interval_set(const SamplingSet& set) {
  const auto n = static_cast<double>(set.graph_size());
  std::vector<Interval> pieces;
  pieces.reserve(set.nodes().size());
  for (Index i : set.nodes())
    pieces.push_back({static_cast<double>(i) / n, static_cast<double>(i + 1) / n});
  return IntervalSet(std::move(pieces));
}

FillRule parse_fill_rule(std::string_view name) {
  if (name == "overlap") return FillRule::Overlap;
  if (name == "index") return FillRule::Index;
  if (name == "random") return FillRule::Random;
  throw Error("unknown fill rule: " + std::string(name));
}

std::string_view to_string(FillRule rule) {
  switch (rule) {
    case FillRule::Overlap: return "overlap";
    case FillRule::Index: return "index";
    case FillRule::Random: return "random";
  }
  return "?";
}

TransferBudgetError::TransferBudgetError(Index requested, Index achievable)
    : Error("transfer budget " + std::to_string(requested) + " exceeds the " +
            std::to_string(achievable) + " cells meeting the source set"),
      requested_(requested),
      achievable_(achievable) {}

SamplingSet algorithm1_transfer(const IntervalSet& source, Index target_size, Index m,
                                TransferOptions options) {
  if (target_size < 1) throw Error("target size must be positive");
  if (m < 0 || m > target_size) throw Error("sample budget must lie in [0, N_k]");
  const auto n = static_cast<double>(target_size);

  std::vector<Index> inside;
  std::vector<Index> partial;
  std::vector<double> partial_overlap;
  for (Index i = 0; i < target_size && static_cast<Index>(inside.size()) < m; ++i) {
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    if (source.contains(lo, hi)) {
      inside.push_back(i);
    } else if (const double meet = source.overlap(lo, hi); meet > kIntervalSlack) {
      partial.push_back(i);
      partial_overlap.push_back(meet / (hi - lo));
    }
  }

  const auto missing = static_cast<size_t>(m) - inside.size();
  if (missing > 0) {
    if (partial.size() < missing)
      throw TransferBudgetError(m, static_cast<Index>(inside.size() + partial.size()));
    std::vector<size_t> rank(partial.size());
    for (size_t r = 0; r < rank.size(); ++r) rank[r] = r;
    switch (options.fill) {
      case FillRule::Overlap:
        std::stable_sort(rank.begin(), rank.end(), [&](size_t a, size_t b) {
          return partial_overlap[a] > partial_overlap[b];
        });
        break;
      case FillRule::Index:
        break;
      case FillRule::Random: {
        std::mt19937_64 rng(options.seed);
        for (size_t i = 0; i < missing; ++i) {
          std::uniform_int_distribution<size_t> pick(i, rank.size() - 1);
          std::swap(rank[i], rank[pick(rng)]);
        }
        break;
      }
    }
    for (size_t r = 0; r < missing; ++r) inside.push_back(partial[rank[r]]);
  }
  return {std::move(inside), target_size};
}

void theta_from_formula(double n1, double n2, double source_lambda, double distance, double norm,
                        double& theta1, double& theta2) {
  theta1 = std::max(0.0, (n1 / n2) * source_lambda - n1 * distance);
  theta2 = std::min(norm * n1, n1 * distance + (n1 / n2) * source_lambda);
}

ThetaReport theta_bounds(const Graph& g1, const SamplingSet& s1, const Graph& g2,
                         const SamplingSet& s2) {
  if (s1.graph_size() != g1.size() || s2.graph_size() != g2.size())
    throw Error("sampling sets do not match their graphs");
  ThetaReport report;
  report.s1 = s1;
  report.s2 = s2;
  report.interval_mismatch = induce_interval_set(s1).symmetric_difference(induce_interval_set(s2));
  report.hypothesis_holds = report.interval_mismatch <= kIntervalSlack;

  const Graphon w1 = induce_graphon(g1);
  const Graphon w2 = induce_graphon(g2);
  report.operator_distance = operator_distance(w1, w2);
  report.operator_norm = operator_norm(w1);
  report.source_lambda = lambda_graph(g2, s2.complement()).lambda;
  report.measured = lambda_graph(g1, s1.complement()).lambda;
  theta_from_formula(static_cast<double>(g1.size()), static_cast<double>(g2.size()),
                     report.source_lambda, report.operator_distance, report.operator_norm,
                     report.theta1, report.theta2);
  return report;
}

ThetaReport theta_bounds(const Graph& g1, const Graph& g2, const SamplingSet& s2) {
  const auto m1 = round_half_even(static_cast<double>(s2.size()) * static_cast<double>(g1.size()) /
                                  static_cast<double>(g2.size()));
  const SamplingSet s1 = algorithm1_transfer(induce_interval_set(s2), g1.size(), m1);
  return theta_bounds(g1, s1, g2, s2);
}

SequenceReport sequence_bounds(const Graphon& w1, const Graphon& w2, const IntervalSet& s,
                               Index resolution) {
  const IntervalSet rest = s.complement();
  if (rest.measure() <= kIntervalSlack) throw Error("the complement of the set has zero measure");
  const Graphon k1 = as_step(w1, resolution);
  const Graphon k2 = as_step(w2, resolution);

  SequenceReport report;
  report.operator_distance = operator_distance(k1, k2);
  report.norm1 = operator_norm(k1);
  report.norm2 = operator_norm(k2);
  const double l1 = lambda_graphon(k1, rest).lambda;
  const double l2 = lambda_graphon(k2, rest).lambda;
  const double d = report.operator_distance;
  report.first = {std::max(0.0, l2 - d), std::min(report.norm1, d + l2), l1};
  report.second = {std::max(0.0, l1 - d), std::min(report.norm2, d + l1), l2};
  return report;
}

std::vector<ConvergenceRecord> convergence_report(const Graphon& w, const std::vector<Index>& sizes,
                                                  const IntervalSet& s, Index ref_resolution,
                                                  Quadrature quadrature) {
  const IntervalSet rest = s.complement();
  if (rest.measure() <= kIntervalSlack) throw Error("the complement of the set has zero measure");
  const Graphon reference = as_step(w, ref_resolution, quadrature);
  const double lambda_ref = lambda_graphon(reference, rest).lambda;

  const std::vector<double> ends = s.endpoints();
  std::vector<ConvergenceRecord> records;
  records.reserve(sizes.size());
  for (Index n : sizes) {
    const Graphon induced = induce_graphon(discretize_gd1(w, n, quadrature));
    ConvergenceRecord r;
    r.n = n;
    r.distance = operator_distance(induced, reference);
    r.lambda = lambda_graphon(induced, rest).lambda;
    r.lambda_ref = lambda_ref;
    r.aligned = std::all_of(ends.begin(), ends.end(), [n](double x) {
      const double scaled = x * static_cast<double>(n);
      return std::abs(scaled - std::round(scaled)) <= 1e-9;
    });
    records.push_back(r);
  }
  return records;
}

}  // namespace gphon
