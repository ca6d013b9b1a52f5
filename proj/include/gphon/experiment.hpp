#pragma once

#include "gphon/graph.hpp"
#include "gphon/graphon.hpp"
#include "gphon/io.hpp"
#include "gphon/sampling.hpp"
#include "gphon/transfer.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace gphon {

enum class Method { Greedy, Transfer, Random };

Method parse_method(std::string_view name);
std::string_view to_string(Method method);

/// Declarative description of a sampling experiment.
struct ExperimentConfig {
  io::Json graphon = {{"builtin", "linear_mean"}};
  std::vector<Index> sizes{50, 100, 150, 200};
  double rate = 0.05;
  BandwidthModel bwm = BandwidthModel::BWM2;
  int trials = 20;
  double snr_db = 20.0;  // +inf for noiseless
  std::vector<Method> methods{Method::Greedy, Method::Transfer, Method::Random};
  std::uint64_t seed = 20240101;
  Index source_size = 0;  // 0: the smallest size
  int quadrature = 8;
  FillRule fill = FillRule::Overlap;
  std::filesystem::path output_dir;
  int threads = 0;  // 0: hardware concurrency

  /// Throws Error on violated invariants.
  void validate() const;
  Index effective_source_size() const;

  /// Canonical JSON; the hash covers everything except output_dir and threads.
  io::Json to_json() const;
  static ExperimentConfig from_json(const io::Json& j);
  std::uint64_t hash() const;

  /// Sizes 250..1000 (or 500..2000 with `large`), 50 trials.
  static ExperimentConfig full_scale(ExperimentConfig base, bool large = false);
};

struct TrialRecord {
  Index n = 0;
  Method method = Method::Greedy;
  int trial = 0;
  std::uint64_t seed = 0;  // seed driving this method's randomness in the trial
  double mse = 0.0;
  double signal_power = 0.0;  // ||x||^2 / N
  bool rank_deficient = false;
};

struct AggregateRow {
  Index n = 0;
  Method method = Method::Greedy;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  int count = 0;
};

/// Per-size sampling parameters and the deterministic sets used.
struct SizeInfo {
  Index n = 0;
  Index m = 0;
  Index k_omega = 0;
  SamplingSet greedy;
  SamplingSet transfer;
  Index transfer_from_algorithm = 0;  // nodes placed by the transfer scan itself
};

struct ExperimentResult {
  ExperimentConfig config;
  std::string graphon_id;
  std::uint64_t config_hash = 0;
  std::vector<SizeInfo> sizes;
  std::vector<TrialRecord> trials;
  std::vector<AggregateRow> aggregate;

  const AggregateRow& cell(Index n, Method method) const;
};

/// Seed for (master, size, stream, trial); streams keep methods independent.
std::uint64_t derive_seed(std::uint64_t master, Index n, std::string_view stream, int trial);

ExperimentResult run_experiment(const ExperimentConfig& config);

struct EmittedFiles {
  std::filesystem::path trials_csv;
  std::filesystem::path aggregate_csv;
  std::filesystem::path result_json;
  std::filesystem::path config_json;
};

std::string trials_csv(const ExperimentResult& result);
std::string aggregate_csv(const ExperimentResult& result);
io::Json result_json(const ExperimentResult& result);

/// Writes trials.csv, aggregate.csv, result.json and config.json into `dir`.
EmittedFiles emit(const ExperimentResult& result, const std::filesystem::path& dir);

/// GPHON_OUTPUT_DIR when set, otherwise ./gphon-out.
std::filesystem::path default_output_dir();

}  // namespace gphon
