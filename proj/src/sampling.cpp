#include "gphon/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace gphon {

SamplingSet::SamplingSet(std::vector<Index> nodes, Index graph_size)
    : nodes_(std::move(nodes)), graph_size_(graph_size) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
    throw Error("sampling set has duplicate nodes");
  if (!nodes_.empty() && (nodes_.front() < 0 || nodes_.back() >= graph_size_))
    throw Error("sampling set node outside [0, N)");
}

SamplingSet::SamplingSet(std::initializer_list<Index> nodes, Index graph_size)
    : SamplingSet(std::vector<Index>(nodes), graph_size) {}

SamplingSet SamplingSet::all(Index graph_size) {
  std::vector<Index> nodes(static_cast<size_t>(graph_size));
  std::iota(nodes.begin(), nodes.end(), Index{0});
  return {std::move(nodes), graph_size};
}

bool SamplingSet::contains(Index node) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

SamplingSet SamplingSet::complement() const {
  std::vector<Index> rest;
  for (Index i = 0; i < graph_size_; ++i)
    if (!contains(i)) rest.push_back(i);
  return {std::move(rest), graph_size_};
}

namespace {

// Largest singular value of the selected columns with its right singular
// vector, sign-fixed so the first clearly nonzero entry is positive.
std::pair<double, Vector> top_singular(const Matrix& columns) {
  Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinV);
  Vector v = svd.matrixV().col(0);
  for (Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0.0) v = -v;
      break;
    }
  return {svd.singularValues()(0), v};
}

Matrix select_columns(const Matrix& m, const std::vector<Index>& cols) {
  Matrix out(m.rows(), static_cast<Index>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) out.col(static_cast<Index>(c)) = m.col(cols[c]);
  return out;
}

Matrix select_rows(const Matrix& m, const std::vector<Index>& rows) {
  Matrix out(static_cast<Index>(rows.size()), m.cols());
  for (size_t r = 0; r < rows.size(); ++r) out.row(static_cast<Index>(r)) = m.row(rows[r]);
  return out;
}

}  // namespace

RemovableReport lambda_graph(const Graph& graph, const SamplingSet& subset) {
  if (subset.empty()) throw Error("Lambda is undefined for an empty set");
  if (subset.graph_size() != graph.size()) throw Error("sampling set belongs to another graph");
  auto [lambda, v] = top_singular(select_columns(graph.adjacency(), subset.nodes()));
  Vector witness = Vector::Zero(graph.size());
  for (size_t c = 0; c < subset.nodes().size(); ++c) witness(subset.nodes()[c]) = v(static_cast<Index>(c));
  return {subset, lambda, std::move(witness)};
}

GraphonRemovableReport lambda_graphon(const Graphon& w, const IntervalSet& intervals,
                                      Index resolution) {
  if (intervals.empty() || intervals.measure() <= kIntervalSlack)
    throw Error("Lambda is undefined for an empty or null interval set");
  const Graphon base = as_step(w, resolution);
  const Partition fine = base.partition().with_points(intervals.endpoints());
  const Graphon kernel = fine == base.partition() ? base : refine(base, fine);
  const auto cells = intervals.covered_cells(fine);
  auto [lambda, v] = top_singular(select_columns(weighted_grid(kernel), cells));

  Vector values = Vector::Zero(fine.cells());
  for (size_t c = 0; c < cells.size(); ++c)
    values(cells[c]) = v(static_cast<Index>(c)) / std::sqrt(fine.width(cells[c]));
  return {intervals, lambda, StepSignal{fine, std::move(values)}};
}

double restricted_sigma_min(const Matrix& band, const std::vector<Index>& rows) {
  if (rows.empty() || band.cols() == 0) return 0.0;
  const Matrix block = select_rows(band, rows);
  Eigen::JacobiSVD<Matrix> svd(block);
  const Vector& s = svd.singularValues();
  return s(s.size() - 1);
}

double restricted_sigma_min(const SpectralBasis& basis, const SamplingSet& set, Index k_omega) {
  return restricted_sigma_min(basis.leading(k_omega), set.nodes());
}

bool is_uniqueness_set(const SpectralBasis& basis, const SamplingSet& set, Index k_omega) {
  if (k_omega <= 0) return true;
  if (set.size() < k_omega) return false;
  const Matrix block = select_rows(basis.leading(k_omega), set.nodes());
  Eigen::JacobiSVD<Matrix> svd(block);
  const Vector& s = svd.singularValues();
  const double cutoff = 1e-10 * s(0);
  return (s.array() > cutoff).count() == k_omega;
}

namespace {

// Candidate scores equal up to this relative gap count as a tie.
constexpr double kTieGap = 1e-12;

bool strictly_better(double score, double best) {
  return score > best + kTieGap * std::max(1.0, std::abs(best));
}

}  // namespace

SamplingSet greedy_select(const SpectralBasis& basis, Index m, Index k_omega,
                          const SamplingSet& seed_set) {
  const Index n = basis.size();
  if (m > n) throw Error("sample budget exceeds the node count");
  if (m < 0 || k_omega < 0 || k_omega > n) throw Error("invalid budget or band size");
  const Matrix band = basis.leading(k_omega);

  std::vector<Index> chosen = seed_set.nodes();
  std::vector<bool> taken(static_cast<size_t>(n), false);
  for (Index i : chosen) taken[static_cast<size_t>(i)] = true;

  while (static_cast<Index>(chosen.size()) < m) {
    Index best_node = -1;
    double best = -1.0;
    std::vector<Index> trial = chosen;
    trial.push_back(0);
    for (Index c = 0; c < n; ++c) {
      if (taken[static_cast<size_t>(c)]) continue;
      trial.back() = c;
      const double score = restricted_sigma_min(band, trial);
      if (best_node < 0 || strictly_better(score, best)) {
        best = score;
        best_node = c;
      }
    }
    chosen.push_back(best_node);
    taken[static_cast<size_t>(best_node)] = true;
  }
  return {std::move(chosen), n};
}

SamplingSet brute_force_select(const SpectralBasis& basis, Index m, Index k_omega, double budget) {
  const Index n = basis.size();
  if (m < 1 || m > n) throw Error("sample budget must lie in [1, N]");
  double combos = 1.0;
  for (Index i = 0; i < m; ++i) combos = combos * static_cast<double>(n - i) / static_cast<double>(i + 1);
  if (combos > budget) throw Error("brute-force search exceeds the combinatorial budget");

  const Matrix band = basis.leading(k_omega);
  std::vector<Index> current(static_cast<size_t>(m));
  std::iota(current.begin(), current.end(), Index{0});
  std::vector<Index> best_set = current;
  double best = restricted_sigma_min(band, current);
  while (true) {
    // Next combination in lexicographic order.
    Index pos = m - 1;
    while (pos >= 0 && current[static_cast<size_t>(pos)] == n - m + pos) --pos;
    if (pos < 0) break;
    ++current[static_cast<size_t>(pos)];
    for (Index j = pos + 1; j < m; ++j)
      current[static_cast<size_t>(j)] = current[static_cast<size_t>(j - 1)] + 1;
    const double score = restricted_sigma_min(band, current);
    if (strictly_better(score, best)) {
      best = score;
      best_set = current;
    }
  }
  return {std::move(best_set), n};
}

SamplingSet random_select(Index n, Index m, std::uint64_t seed) {
  if (m < 0 || m > n) throw Error("sample budget must lie in [0, N]");
  std::vector<Index> nodes(static_cast<size_t>(n));
  std::iota(nodes.begin(), nodes.end(), Index{0});
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first m slots end up a uniform m-subset.
  for (Index i = 0; i < m; ++i) {
    std::uniform_int_distribution<Index> pick(i, n - 1);
    std::swap(nodes[static_cast<size_t>(i)], nodes[static_cast<size_t>(pick(rng))]);
  }
  nodes.resize(static_cast<size_t>(m));
  return {std::move(nodes), n};
}

}  // namespace gphon
