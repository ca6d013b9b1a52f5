#pragma once

#include "gphon/graph.hpp"
#include "gphon/graphon.hpp"
#include "gphon/graphon_signal.hpp"
#include "gphon/intervals.hpp"
#include "gphon/sampling.hpp"
#include "gphon/transfer.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace gphon::io {

using Json = nlohmann::json;

/// {"builtin": id, "params": [...]} or {"breakpoints": [...], "values": [...]}
/// with values row-major.
Graphon graphon_from_json(const Json& j);
Json graphon_to_json(const Graphon& w);

/// Shortest decimal form that round-trips (17 significant digits).
std::string format_double(double x);

/// One row per node, full symmetric grid.
void write_adjacency_csv(std::ostream& out, const Matrix& adjacency);
Matrix read_adjacency_csv(std::istream& in);

/// One value per line.
void write_column_csv(std::ostream& out, const std::string& header, const Vector& values);
Vector read_column_csv(std::istream& in);

/// Rows of (lower breakpoint, value).
void write_step_signal_csv(std::ostream& out, const StepSignal& x);

/// Eigenvalue per row followed by the eigenvector entries.
void write_spectrum_csv(std::ostream& out, const SpectralBasis& basis);

/// JSON array of indices; `one_based` shifts by one on the way in and out.
Json sampling_set_to_json(const SamplingSet& set, bool one_based = false);
SamplingSet sampling_set_from_json(const Json& j, Index graph_size, bool one_based = false);

/// JSON array of [a, b) pairs.
Json interval_set_to_json(const IntervalSet& set);
IntervalSet interval_set_from_json(const Json& j);

Json report_to_json(const RemovableReport& report, bool one_based = false);
Json report_to_json(const GraphonRemovableReport& report);
Json report_to_json(const ThetaReport& report, bool one_based = false);
Json report_to_json(const SequenceReport& report);

/// Columns N, d_N, lambda_N, lambda_ref.
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace gphon::io
