#include "gphon/io.hpp"

#include <cctype>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <sstream>

namespace gphon::io {

Graphon graphon_from_json(const Json& j) {
  if (j.contains("builtin")) {
    std::vector<double> params;
    if (j.contains("params")) params = j.at("params").get<std::vector<double>>();
    return Graphon::builtin(j.at("builtin").get<std::string>(), std::move(params));
  }
  if (j.contains("breakpoints")) {
    Partition partition(j.at("breakpoints").get<std::vector<double>>());
    const auto flat = j.at("values").get<std::vector<double>>();
    const Index k = partition.cells();
    if (static_cast<Index>(flat.size()) != k * k)
      throw Error("step graphon needs K*K values for K cells");
    Matrix values(k, k);
    for (Index i = 0; i < k; ++i)
      for (Index c = 0; c < k; ++c) values(i, c) = flat[static_cast<size_t>(i * k + c)];
    return Graphon::step(std::move(partition), std::move(values));
  }
  throw Error("graphon config needs either 'builtin' or 'breakpoints'");
}

Json graphon_to_json(const Graphon& w) {
  if (w.is_step()) {
    std::vector<double> flat;
    const Matrix& v = w.values();
    for (Index i = 0; i < v.rows(); ++i)
      for (Index c = 0; c < v.cols(); ++c) flat.push_back(v(i, c));
    return {{"breakpoints", w.partition().breakpoints()}, {"values", flat}};
  }
  if (!w.model()) throw Error("custom graphons are not serializable");
  return {{"builtin", w.id()}, {"params", w.params()}};
}

std::string format_double(double x) {
  char buffer[32];
  const int written = std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return std::string(buffer, static_cast<size_t>(written));
}

namespace {

std::vector<double> parse_row(const std::string& line) {
  std::vector<double> row;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      row.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw Error("malformed number in CSV: '" + cell + "'");
    }
  }
  return row;
}

bool is_header(const std::string& line) {
  for (char c : line)
    if (std::isalpha(static_cast<unsigned char>(c)) && c != 'e' && c != 'E') return true;
  return false;
}

}  // namespace

void write_adjacency_csv(std::ostream& out, const Matrix& adjacency) {
  for (Index i = 0; i < adjacency.rows(); ++i) {
    for (Index c = 0; c < adjacency.cols(); ++c) {
      if (c) out << ',';
      out << format_double(adjacency(i, c));
    }
    out << '\n';
  }
}

Matrix read_adjacency_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || is_header(line)) continue;
    rows.push_back(parse_row(line));
  }
  const auto n = static_cast<Index>(rows.size());
  Matrix a(n, n);
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(rows[static_cast<size_t>(i)].size()) != n)
      throw Error("adjacency CSV must be square");
    for (Index c = 0; c < n; ++c) a(i, c) = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
  }
  return a;
}

void write_column_csv(std::ostream& out, const std::string& header, const Vector& values) {
  out << header << '\n';
  for (Index i = 0; i < values.size(); ++i) out << format_double(values(i)) << '\n';
}

Vector read_column_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || is_header(line)) continue;
    const auto row = parse_row(line);
    if (row.size() != 1) throw Error("expected one value per CSV line");
    values.push_back(row[0]);
  }
  return Eigen::Map<Vector>(values.data(), static_cast<Index>(values.size()));
}

void write_step_signal_csv(std::ostream& out, const StepSignal& x) {
  out << "breakpoint,value\n";
  for (Index i = 0; i < x.values.size(); ++i)
    out << format_double(x.partition.lower(i)) << ',' << format_double(x.values(i)) << '\n';
}

void write_spectrum_csv(std::ostream& out, const SpectralBasis& basis) {
  out << "index,eigenvalue";
  for (Index i = 0; i < basis.size(); ++i) out << ",v" << i;
  out << '\n';
  for (Index j = 0; j < basis.size(); ++j) {
    out << j << ',' << format_double(basis.eigenvalues(j));
    for (Index i = 0; i < basis.size(); ++i) out << ',' << format_double(basis.eigenvectors(i, j));
    out << '\n';
  }
}

Json sampling_set_to_json(const SamplingSet& set, bool one_based) {
  Json arr = Json::array();
  for (Index i : set.nodes()) arr.push_back(one_based ? i + 1 : i);
  return arr;
}

SamplingSet sampling_set_from_json(const Json& j, Index graph_size, bool one_based) {
  std::vector<Index> nodes;
  for (const auto& v : j) nodes.push_back(v.get<Index>() - (one_based ? 1 : 0));
  return {std::move(nodes), graph_size};
}

Json interval_set_to_json(const IntervalSet& set) {
  Json arr = Json::array();
  for (const auto& p : set.pieces()) arr.push_back({p.lo, p.hi});
  return arr;
}

IntervalSet interval_set_from_json(const Json& j) {
  std::vector<Interval> pieces;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error("intervals must be [a, b) pairs");
    pieces.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return IntervalSet(std::move(pieces));
}

Json report_to_json(const RemovableReport& report, bool one_based) {
  return {{"set", sampling_set_to_json(report.set, one_based)},
          {"lambda", report.lambda},
          {"witness", std::vector<double>(report.witness.begin(), report.witness.end())}};
}

Json report_to_json(const GraphonRemovableReport& report) {
  Json witness = Json::array();
  for (Index i = 0; i < report.witness.values.size(); ++i)
    witness.push_back({report.witness.partition.lower(i), report.witness.values(i)});
  return {{"set", interval_set_to_json(report.set)},
          {"lambda", report.lambda},
          {"witness", witness}};
}

Json report_to_json(const ThetaReport& report, bool one_based) {
  return {{"theta1", report.theta1},
          {"theta2", report.theta2},
          {"measured", report.measured},
          {"source_lambda", report.source_lambda},
          {"operator_distance", report.operator_distance},
          {"operator_norm", report.operator_norm},
          {"interval_mismatch", report.interval_mismatch},
          {"hypothesis_holds", report.hypothesis_holds},
          {"s1", sampling_set_to_json(report.s1, one_based)},
          {"s2", sampling_set_to_json(report.s2, one_based)}};
}

Json report_to_json(const SequenceReport& report) {
  auto side = [](const SandwichSide& s) {
    return Json{{"lower", s.lower}, {"upper", s.upper}, {"measured", s.measured}};
  };
  return {{"first", side(report.first)},
          {"second", side(report.second)},
          {"operator_distance", report.operator_distance},
          {"norm1", report.norm1},
          {"norm2", report.norm2}};
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records) {
  out << "N,d_N,lambda_N,lambda_ref,aligned\n";
  for (const auto& r : records)
    out << r.n << ',' << format_double(r.distance) << ',' << format_double(r.lambda) << ','
        << format_double(r.lambda_ref) << ',' << (r.aligned ? 1 : 0) << '\n';
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error("invalid JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace gphon::io
