#include "gphon/experiment.hpp"

#include "gphon/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace gphon {

Method parse_method(std::string_view name) {
  if (name == "greedy") return Method::Greedy;
  if (name == "transfer") return Method::Transfer;
  if (name == "random") return Method::Random;
  throw Error("unknown sampling method: " + std::string(name));
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Greedy: return "greedy";
    case Method::Transfer: return "transfer";
    case Method::Random: return "random";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (sizes.empty()) throw Error("config needs at least one size");
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw Error("sizes must be positive");
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw Error("sizes must be strictly ascending");
  }
  if (!(rate > 0.0 && rate <= 1.0)) throw Error("rate must lie in (0, 1]");
  if (rate * static_cast<double>(sizes.front()) < 1.0)
    throw Error("rate * smallest size must be at least 1");
  if (trials < 1) throw Error("trials must be positive");
  if (methods.empty()) throw Error("config needs at least one method");
  if (std::isnan(snr_db)) throw Error("snr_db must be a number or inf");
  if (quadrature < 1) throw Error("quadrature must be positive");
  const bool transfer =
      std::find(methods.begin(), methods.end(), Method::Transfer) != methods.end();
  if (transfer && (effective_source_size() < 1 || effective_source_size() > sizes.front()))
    throw Error("source size must lie in [1, smallest size]");
  for (Index n : sizes) {
    const Index m = round_half_even(rate * static_cast<double>(n));
    if (bandwidth_count(bwm, m) < 1) throw Error("bandwidth model yields k_omega = 0");
  }
  io::graphon_from_json(graphon);
}

Index ExperimentConfig::effective_source_size() const {
  return source_size > 0 ? source_size : (sizes.empty() ? 0 : sizes.front());
}

io::Json ExperimentConfig::to_json() const {
  io::Json methods_json = io::Json::array();
  for (Method m : methods) methods_json.push_back(std::string(to_string(m)));
  io::Json j = {{"graphon", graphon},
                {"sizes", sizes},
                {"rate", rate},
                {"bwm", std::string(to_string(bwm))},
                {"trials", trials},
                {"methods", methods_json},
                {"seed", seed},
                {"source_size", effective_source_size()},
                {"quadrature", quadrature},
                {"fill_rule", std::string(to_string(fill))}};
  if (std::isinf(snr_db))
    j["snr_db"] = snr_db > 0 ? "inf" : "-inf";
  else
    j["snr_db"] = snr_db;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const io::Json& j) {
  ExperimentConfig c;
  try {
    if (j.contains("graphon")) c.graphon = j.at("graphon");
    if (j.contains("sizes")) c.sizes = j.at("sizes").get<std::vector<Index>>();
    if (j.contains("rate")) c.rate = j.at("rate").get<double>();
    if (j.contains("bwm")) c.bwm = parse_bandwidth_model(j.at("bwm").get<std::string>());
    if (j.contains("trials")) c.trials = j.at("trials").get<int>();
    if (j.contains("snr_db")) {
      const auto& s = j.at("snr_db");
      if (s.is_string()) {
        const auto text = s.get<std::string>();
        if (text != "inf" && text != "infinity") throw Error("snr_db string must be 'inf'");
        c.snr_db = kNoiseless;
      } else {
        c.snr_db = s.get<double>();
      }
    }
    if (j.contains("methods")) {
      c.methods.clear();
      for (const auto& m : j.at("methods")) c.methods.push_back(parse_method(m.get<std::string>()));
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("source_size")) c.source_size = j.at("source_size").get<Index>();
    if (j.contains("quadrature")) c.quadrature = j.at("quadrature").get<int>();
    if (j.contains("fill_rule")) c.fill = parse_fill_rule(j.at("fill_rule").get<std::string>());
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
  } catch (const io::Json::exception& e) {
    throw Error(std::string("invalid experiment config: ") + e.what());
  }
  return c;
}

std::uint64_t ExperimentConfig::hash() const { return fnv1a(to_json().dump()); }

ExperimentConfig ExperimentConfig::full_scale(ExperimentConfig base, bool large) {
  base.sizes = large ? std::vector<Index>{500, 1000, 1500, 2000}
                     : std::vector<Index>{250, 500, 750, 1000};
  base.source_size = 0;
  base.trials = 50;
  return base;
}

const AggregateRow& ExperimentResult::cell(Index n, Method method) const {
  for (const auto& row : aggregate)
    if (row.n == n && row.method == method) return row;
  throw Error("no aggregate cell for N=" + std::to_string(n) + " method " +
              std::string(to_string(method)));
}

std::uint64_t derive_seed(std::uint64_t master, Index n, std::string_view stream, int trial) {
  std::uint64_t z = mix_seed(master, fnv1a(std::string(stream)));
  z = mix_seed(z, static_cast<std::uint64_t>(n));
  return mix_seed(z, static_cast<std::uint64_t>(trial));
}

namespace {

template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(1, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) fn(i);
    });
}

// Algorithm 1 from the source set; when the scan cannot reach m cells, the
// scanned cells seed a greedy completion on the target graph.
SamplingSet transfer_set(const IntervalSet& source, const SpectralBasis& basis, Index m,
                         Index k_omega, TransferOptions options, Index& from_algorithm) {
  try {
    SamplingSet s = algorithm1_transfer(source, basis.size(), m, options);
    from_algorithm = s.size();
    return s;
  } catch (const TransferBudgetError& e) {
    const SamplingSet partial = algorithm1_transfer(source, basis.size(), e.achievable(), options);
    from_algorithm = partial.size();
    return greedy_select(basis, m, k_omega, partial);
  }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const Graphon w = io::graphon_from_json(config.graphon);
  const Quadrature quadrature{config.quadrature};

  ExperimentResult result;
  result.config = config;
  result.graphon_id = w.id();
  result.config_hash = config.hash();

  const bool wants_transfer = std::find(config.methods.begin(), config.methods.end(),
                                        Method::Transfer) != config.methods.end();
  IntervalSet source;
  if (wants_transfer) {
    const Index n0 = config.effective_source_size();
    const SpectralBasis b0 = spectral_decompose(discretize_gd1(w, n0, quadrature));
    const Index m0 = round_half_even(config.rate * static_cast<double>(n0));
    const Index k0 = bandwidth_count(config.bwm, m0);
    if (k0 < 1) throw Error("bandwidth model yields k_omega = 0 on the source graph");
    source = induce_interval_set(greedy_select(b0, m0, k0));
  }

  const auto n_methods = config.methods.size();
  for (Index n : config.sizes) {
    const Graph g = discretize_gd1(w, n, quadrature);
    const SpectralBasis basis = spectral_decompose(g);
    SizeInfo info;
    info.n = n;
    info.m = round_half_even(config.rate * static_cast<double>(n));
    info.k_omega = bandwidth_count(config.bwm, info.m);
    info.greedy = greedy_select(basis, info.m, info.k_omega);
    if (wants_transfer) {
      const TransferOptions options{config.fill, derive_seed(config.seed, n, "fill", 0)};
      info.transfer =
          transfer_set(source, basis, info.m, info.k_omega, options, info.transfer_from_algorithm);
    }

    std::vector<TrialRecord> records(static_cast<size_t>(config.trials) * n_methods);
    parallel_for(config.trials, config.threads, [&](int t) {
      const Vector x = generate_bandlimited(basis, config.bwm, info.m,
                                            derive_seed(config.seed, n, "signal", t));
      const double power = x.squaredNorm() / static_cast<double>(n);
      for (size_t mi = 0; mi < n_methods; ++mi) {
        const Method method = config.methods[mi];
        const std::uint64_t seed = derive_seed(config.seed, n, to_string(method), t);
        SamplingSet set;
        switch (method) {
          case Method::Greedy: set = info.greedy; break;
          case Method::Transfer: set = info.transfer; break;
          case Method::Random: set = random_select(n, info.m, mix_seed(seed, 2)); break;
        }
        const NoisySamples samples =
            add_noise(take_samples(x, set), NoiseSpec{config.snr_db, mix_seed(seed, 1)});
        const Reconstruction rec = reconstruct_ls(basis, info.k_omega, set, samples.values);
        auto& r = records[static_cast<size_t>(t) * n_methods + mi];
        r = {n, method, t, seed, mse(x, rec.signal), power, rec.rank_deficient};
      }
    });

    for (size_t mi = 0; mi < n_methods; ++mi) {
      AggregateRow row;
      row.n = n;
      row.method = config.methods[mi];
      row.count = config.trials;
      double sum = 0.0;
      for (int t = 0; t < config.trials; ++t) sum += records[static_cast<size_t>(t) * n_methods + mi].mse;
      row.mean = sum / config.trials;
      double sq = 0.0;
      for (int t = 0; t < config.trials; ++t) {
        const double d = records[static_cast<size_t>(t) * n_methods + mi].mse - row.mean;
        sq += d * d;
      }
      row.stddev = config.trials > 1 ? std::sqrt(sq / (config.trials - 1)) : 0.0;
      result.aggregate.push_back(row);
    }
    result.trials.insert(result.trials.end(), records.begin(), records.end());
    result.sizes.push_back(std::move(info));
  }
  return result;
}

std::string trials_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "graphon,N,method,bwm,seed,mse\n";
  const auto bwm = to_string(result.config.bwm);
  for (const auto& r : result.trials)
    out << result.graphon_id << ',' << r.n << ',' << to_string(r.method) << ',' << bwm << ','
        << r.seed << ',' << io::format_double(r.mse) << '\n';
  return out.str();
}

std::string aggregate_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "N,method,mean_mse,std_mse,trials\n";
  for (const auto& row : result.aggregate)
    out << row.n << ',' << to_string(row.method) << ',' << io::format_double(row.mean) << ','
        << io::format_double(row.stddev) << ',' << row.count << '\n';
  return out.str();
}

namespace {

std::string hex(std::uint64_t v) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(v));
  return buffer;
}

io::Json config_echo(const ExperimentResult& result) {
  io::Json j = result.config.to_json();
  j["config_hash"] = hex(result.config_hash);
  j["paired_signals"] = true;
  return j;
}

}  // namespace

io::Json result_json(const ExperimentResult& result) {
  io::Json sizes = io::Json::array();
  for (const auto& s : result.sizes)
    sizes.push_back({{"N", s.n},
                     {"m", s.m},
                     {"k_omega", s.k_omega},
                     {"greedy_set", io::sampling_set_to_json(s.greedy)},
                     {"transfer_set", io::sampling_set_to_json(s.transfer)},
                     {"transfer_from_algorithm", s.transfer_from_algorithm}});
  io::Json aggregate = io::Json::array();
  for (const auto& row : result.aggregate)
    aggregate.push_back({{"N", row.n},
                         {"method", std::string(to_string(row.method))},
                         {"mean_mse", row.mean},
                         {"std_mse", row.stddev},
                         {"trials", row.count}});
  io::Json trials = io::Json::array();
  for (const auto& r : result.trials)
    trials.push_back({{"N", r.n},
                      {"method", std::string(to_string(r.method))},
                      {"trial", r.trial},
                      {"seed", r.seed},
                      {"mse", r.mse},
                      {"signal_power", r.signal_power},
                      {"rank_deficient", r.rank_deficient}});
  return {{"graphon", result.graphon_id},
          {"config", config_echo(result)},
          {"sizes", sizes},
          {"aggregate", aggregate},
          {"trials", trials}};
}

EmittedFiles emit(const ExperimentResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory " + dir.string() + ": " + ec.message());
  EmittedFiles files{dir / "trials.csv", dir / "aggregate.csv", dir / "result.json",
                     dir / "config.json"};
  io::write_text_file(files.trials_csv, trials_csv(result));
  io::write_text_file(files.aggregate_csv, aggregate_csv(result));
  io::write_text_file(files.result_json, result_json(result).dump(2) + "\n");
  io::write_text_file(files.config_json, config_echo(result).dump(2) + "\n");
  return files;
}

std::filesystem::path default_output_dir() {
  if (const char* env = std::getenv("GPHON_OUTPUT_DIR"); env && *env) return env;
  return "gphon-out";
}

}  // namespace gphon
