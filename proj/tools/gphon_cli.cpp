// Command-line front end: every subcommand reads the shared JSON config
// format and writes CSV or JSON.

#include "gphon/experiment.hpp"
#include "gphon/io.hpp"
#include "gphon/reconstruct.hpp"
#include "gphon/sampling.hpp"
#include "gphon/transfer.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using gphon::Index;
using gphon::io::Json;

// Inline JSON, or the contents of a file when the argument names one.
Json parse_json_arg(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return gphon::io::read_json_file(arg);
  try {
    return Json::parse(arg);
  } catch (const Json::exception& e) {
    throw gphon::Error("invalid JSON argument '" + arg + "': " + e.what());
  }
}

struct GraphonOptions {
  std::string config;
  std::string builtin;
  std::vector<double> params;

  void add_to(CLI::App* app) {
    app->add_option("--graphon-config", config,
                    "graphon JSON (file or inline), optionally under a 'graphon' key");
    app->add_option("--builtin", builtin, "builtin graphon id (linear_mean, W1..W7, ...)");
    app->add_option("--param", params, "builtin graphon parameters");
  }

  bool given() const { return !config.empty() || !builtin.empty(); }

  gphon::Graphon load() const {
    if (!config.empty()) {
      Json j = parse_json_arg(config);
      return gphon::io::graphon_from_json(j.contains("graphon") ? j.at("graphon") : j);
    }
    if (!builtin.empty()) return gphon::Graphon::builtin(builtin, params);
    throw gphon::Error("give --graphon-config or --builtin");
  }
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    gphon::io::write_text_file(path, text);
}

gphon::Matrix load_adjacency(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gphon::Error("cannot open " + path);
  return gphon::io::read_adjacency_csv(in);
}

struct GraphSource {
  GraphonOptions graphon;
  std::string adjacency;
  Index n = 0;
  int quadrature = 8;

  void add_to(CLI::App* app) {
    graphon.add_to(app);
    app->add_option("--adjacency", adjacency, "adjacency CSV");
    app->add_option("-N,--nodes", n, "node count for GD1 discretization");
    app->add_option("--quadrature", quadrature, "midpoint subpoints per cell axis")->capture_default_str();
  }

  gphon::Graph load() const {
    if (!adjacency.empty()) return gphon::Graph(load_adjacency(adjacency));
    if (n < 1) throw gphon::Error("give --adjacency or a graphon with -N");
    return gphon::discretize_gd1(graphon.load(), n, gphon::Quadrature{quadrature});
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphon sampling toolkit: discretization, spectra, removable sets, "
               "sampling-set transfer and reconstruction experiments"};
  app.require_subcommand(1);
  bool one_based = false;
  app.add_flag("--one-based", one_based, "read and report node indices starting at 1");

  // discretize
  auto* discretize = app.add_subcommand("discretize", "GD1 graph of a graphon as adjacency CSV");
  GraphonOptions d_graphon;
  d_graphon.add_to(discretize);
  Index d_n = 0;
  int d_quadrature = 8;
  std::string d_out;
  discretize->add_option("-N,--nodes", d_n, "node count")->required();
  discretize->add_option("--quadrature", d_quadrature, "midpoint subpoints per cell axis")->capture_default_str();
  discretize->add_option("-o,--output", d_out, "output CSV (stdout by default)");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "ordered eigendecomposition as CSV");
  GraphSource s_graph;
  s_graph.add_to(spectrum);
  std::string s_out;
  spectrum->add_option("-o,--output", s_out, "output CSV");

  // lambda
  auto* lambda = app.add_subcommand("lambda", "removable-set constant of a node or interval set");
  GraphSource l_graph;
  l_graph.add_to(lambda);
  std::string l_set;
  std::string l_intervals;
  Index l_resolution = 512;
  lambda->add_option("--set", l_set, "node set as JSON array");
  lambda->add_option("--intervals", l_intervals, "interval set as JSON [[a,b],...]");
  lambda->add_option("--resolution", l_resolution, "discretization for analytic graphons")->capture_default_str();

  // select
  auto* select = app.add_subcommand("select", "choose a sampling set");
  GraphSource sel_graph;
  sel_graph.add_to(select);
  std::string sel_method = "greedy";
  Index sel_m = 0;
  Index sel_k = 0;
  std::string sel_bwm;
  std::uint64_t sel_seed = 0;
  select->add_option("--method", sel_method, "greedy | brute | random")->capture_default_str();
  select->add_option("-m,--samples", sel_m, "sample budget")->required();
  select->add_option("-k,--band", sel_k, "band size k_omega");
  select->add_option("--bwm", sel_bwm, "derive k_omega from a bandwidth model");
  select->add_option("--seed", sel_seed, "seed for random selection");

  // transfer
  auto* transfer = app.add_subcommand("transfer", "map a sampling set onto a larger equipartition");
  std::string t_set;
  Index t_source_size = 0;
  std::string t_intervals;
  Index t_target = 0;
  Index t_m = 0;
  std::string t_fill = "overlap";
  std::uint64_t t_seed = 0;
  GraphonOptions t_graphon;
  int t_quadrature = 8;
  transfer->add_option("--source-set", t_set, "source node set as JSON array");
  transfer->add_option("--source-size", t_source_size, "node count of the source graph");
  transfer->add_option("--intervals", t_intervals, "source interval set instead of a node set");
  transfer->add_option("--target-size", t_target, "node count of the target graph")->required();
  transfer->add_option("-m,--samples", t_m, "sample budget")->required();
  transfer->add_option("--fill-rule", t_fill, "overlap | index | random")->capture_default_str();
  transfer->add_option("--seed", t_seed, "seed for the random fill rule");
  t_graphon.add_to(transfer);
  transfer->add_option("--quadrature", t_quadrature, "GD1 quadrature for the bound report");

  // reconstruct
  auto* reconstruct = app.add_subcommand("reconstruct", "sample, perturb and reconstruct one signal");
  GraphSource r_graph;
  r_graph.add_to(reconstruct);
  std::string r_bwm = "BWM2";
  Index r_m = 0;
  double r_rate = 0.05;
  std::string r_set;
  std::string r_method = "greedy";
  std::string r_snr = "20";
  std::uint64_t r_seed = 1;
  std::string r_signal_out;
  reconstruct->add_option("--bwm", r_bwm, "bandwidth model")->capture_default_str();
  reconstruct->add_option("-m,--samples", r_m, "sample budget (default round(rate*N))");
  reconstruct->add_option("--rate", r_rate, "sampling rate")->capture_default_str();
  reconstruct->add_option("--set", r_set, "sampling set as JSON array (overrides --method)");
  reconstruct->add_option("--method", r_method, "greedy | random")->capture_default_str();
  reconstruct->add_option("--snr", r_snr, "SNR in dB, or inf")->capture_default_str();
  reconstruct->add_option("--seed", r_seed, "seed for signal, noise and random sets")->capture_default_str();
  reconstruct->add_option("--signal-output", r_signal_out, "write x and x_rec as CSV");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "run a configured sampling experiment");
  std::string e_config;
  std::string e_out;
  std::string e_scale;
  int e_threads = -1;
  experiment->add_option("--config", e_config, "experiment config JSON")->required();
  experiment->add_option("--output-dir", e_out, "output directory (GPHON_OUTPUT_DIR by default)");
  experiment->add_option("--full-scale", e_scale, "small (250-1000) or large (500-2000)");
  experiment->add_option("--threads", e_threads, "worker threads (0: all cores)");

  // convergence
  auto* convergence = app.add_subcommand("convergence", "removable constants along a GD1 sequence");
  GraphonOptions c_graphon;
  c_graphon.add_to(convergence);
  std::vector<Index> c_sizes{8, 16, 32, 64, 128};
  std::string c_intervals = "[[0.5, 1.0]]";
  Index c_ref = 1024;
  int c_quadrature = 8;
  std::string c_out;
  convergence->add_option("--sizes", c_sizes, "graph sizes")->delimiter(',')->capture_default_str();
  convergence->add_option("--intervals", c_intervals, "fixed set in [0,1]")->capture_default_str();
  convergence->add_option("--ref-resolution", c_ref, "reference discretization")->capture_default_str();
  convergence->add_option("--quadrature", c_quadrature, "midpoint subpoints per cell axis");
  convergence->add_option("-o,--output", c_out, "output CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*discretize) {
      const auto g = gphon::discretize_gd1(d_graphon.load(), d_n, gphon::Quadrature{d_quadrature});
      std::ostringstream out;
      gphon::io::write_adjacency_csv(out, g.adjacency());
      write_output(d_out, out.str());
    } else if (*spectrum) {
      const auto basis = gphon::spectral_decompose(s_graph.load());
      std::ostringstream out;
      gphon::io::write_spectrum_csv(out, basis);
      write_output(s_out, out.str());
    } else if (*lambda) {
      if (!l_set.empty()) {
        const auto g = l_graph.load();
        const auto set = gphon::io::sampling_set_from_json(parse_json_arg(l_set), g.size(), one_based);
        std::cout << gphon::io::report_to_json(gphon::lambda_graph(g, set), one_based).dump(2) << '\n';
      } else if (!l_intervals.empty()) {
        gphon::Graphon w = l_graph.graphon.given()
                               ? l_graph.graphon.load()
                               : gphon::induce_graphon(gphon::Graph(load_adjacency(l_graph.adjacency)));
        const auto set = gphon::io::interval_set_from_json(parse_json_arg(l_intervals));
        std::cout << gphon::io::report_to_json(gphon::lambda_graphon(w, set, l_resolution)).dump(2)
                  << '\n';
      } else {
        throw gphon::Error("lambda needs --set or --intervals");
      }
    } else if (*select) {
      const auto basis = gphon::spectral_decompose(sel_graph.load());
      const Index k = sel_bwm.empty() ? sel_k
                                      : gphon::bandwidth_count(gphon::parse_bandwidth_model(sel_bwm), sel_m);
      gphon::SamplingSet set;
      if (sel_method == "greedy")
        set = gphon::greedy_select(basis, sel_m, k);
      else if (sel_method == "brute")
        set = gphon::brute_force_select(basis, sel_m, k);
      else if (sel_method == "random")
        set = gphon::random_select(basis.size(), sel_m, sel_seed);
      else
        throw gphon::Error("unknown selection method: " + sel_method);
      std::cout << gphon::io::sampling_set_to_json(set, one_based).dump() << '\n';
    } else if (*transfer) {
      gphon::IntervalSet source;
      std::optional<gphon::SamplingSet> source_set;
      if (!t_intervals.empty()) {
        source = gphon::io::interval_set_from_json(parse_json_arg(t_intervals));
      } else {
        if (t_set.empty() || t_source_size < 1)
          throw gphon::Error("transfer needs --intervals or --source-set with --source-size");
        source_set = gphon::io::sampling_set_from_json(parse_json_arg(t_set), t_source_size, one_based);
        source = gphon::induce_interval_set(*source_set);
      }
      const gphon::TransferOptions options{gphon::parse_fill_rule(t_fill), t_seed};
      const auto set = gphon::algorithm1_transfer(source, t_target, t_m, options);
      Json out = {{"set", gphon::io::sampling_set_to_json(set, one_based)},
                  {"source", gphon::io::interval_set_to_json(source)}};
      if (t_graphon.given() && source_set) {
        const auto w = t_graphon.load();
        const gphon::Quadrature q{t_quadrature};
        const auto g_target = gphon::discretize_gd1(w, t_target, q);
        const auto g_source = gphon::discretize_gd1(w, t_source_size, q);
        out["bounds"] = gphon::io::report_to_json(
            gphon::theta_bounds(g_target, set, g_source, *source_set), one_based);
      }
      std::cout << out.dump(2) << '\n';
    } else if (*reconstruct) {
      const auto g = r_graph.load();
      const auto basis = gphon::spectral_decompose(g);
      const auto model = gphon::parse_bandwidth_model(r_bwm);
      const Index m = r_m > 0 ? r_m : gphon::round_half_even(r_rate * static_cast<double>(g.size()));
      const Index k = gphon::bandwidth_count(model, m);
      gphon::SamplingSet set;
      if (!r_set.empty())
        set = gphon::io::sampling_set_from_json(parse_json_arg(r_set), g.size(), one_based);
      else if (r_method == "greedy")
        set = gphon::greedy_select(basis, m, k);
      else if (r_method == "random")
        set = gphon::random_select(g.size(), m, gphon::mix_seed(r_seed, 2));
      else
        throw gphon::Error("unknown selection method: " + r_method);
      const double snr = (r_snr == "inf") ? gphon::kNoiseless : std::stod(r_snr);
      const auto x = gphon::generate_bandlimited(basis, model, m, r_seed);
      const auto noisy = gphon::add_noise(gphon::take_samples(x, set), {snr, gphon::mix_seed(r_seed, 1)});
      const auto rec = gphon::reconstruct_ls(basis, k, set, noisy.values);
      if (!r_signal_out.empty()) {
        std::ostringstream csv;
        csv << "x,x_rec\n";
        for (Index i = 0; i < x.size(); ++i)
          csv << gphon::io::format_double(x(i)) << ',' << gphon::io::format_double(rec.signal(i)) << '\n';
        gphon::io::write_text_file(r_signal_out, csv.str());
      }
      Json out = {{"N", g.size()},
                  {"m", m},
                  {"k_omega", k},
                  {"set", gphon::io::sampling_set_to_json(set, one_based)},
                  {"mse", gphon::mse(x, rec.signal)},
                  {"rank", rec.rank},
                  {"rank_deficient", rec.rank_deficient}};
      std::cout << out.dump(2) << '\n';
    } else if (*experiment) {
      auto config = gphon::ExperimentConfig::from_json(parse_json_arg(e_config));
      if (e_scale == "small")
        config = gphon::ExperimentConfig::full_scale(config, false);
      else if (e_scale == "large")
        config = gphon::ExperimentConfig::full_scale(config, true);
      else if (!e_scale.empty())
        throw gphon::Error("--full-scale takes small or large");
      if (e_threads >= 0) config.threads = e_threads;
      std::filesystem::path dir = !e_out.empty()                ? std::filesystem::path(e_out)
                                  : !config.output_dir.empty() ? config.output_dir
                                                               : gphon::default_output_dir();
      const auto result = gphon::run_experiment(config);
      const auto files = gphon::emit(result, dir);
      std::cout << gphon::aggregate_csv(result);
      std::cerr << "wrote " << files.trials_csv.string() << ", " << files.aggregate_csv.string()
                << ", " << files.result_json.string() << ", " << files.config_json.string() << '\n';
    } else if (*convergence) {
      const auto set = gphon::io::interval_set_from_json(parse_json_arg(c_intervals));
      const auto records = gphon::convergence_report(c_graphon.load(), c_sizes, set, c_ref,
                                                     gphon::Quadrature{c_quadrature});
      std::ostringstream out;
      gphon::io::write_convergence_csv(out, records);
      write_output(c_out, out.str());
    }
  } catch (const gphon::TransferBudgetError& e) {
    std::cerr << "error: " << e.what() << " (achievable maximum " << e.achievable() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
