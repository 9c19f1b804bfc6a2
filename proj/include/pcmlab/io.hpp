#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "pcmlab/aggregation.hpp"
#include "pcmlab/boundary.hpp"
#include "pcmlab/matrix.hpp"

namespace pcmlab {

/// Formats with 17 significant digits ("%.17g"), enough to round-trip a
/// double exactly.
std::string format_g17(double x);

/// Parses one judgment cell: a decimal/scientific literal or an exact
/// fraction "p/q" of integers (reduced before conversion). Throws IoError.
double parse_judgment(const std::string& token);

/// CSV matrix format: n rows of n comma-separated cells.
PairwiseComparisonMatrix read_matrix_csv(std::istream& in);
void write_matrix_csv(const PairwiseComparisonMatrix& a, std::ostream& out);

/// JSON matrix format: {"n": int, "rows": [[...], ...]}.
PairwiseComparisonMatrix read_matrix_json(std::istream& in);
void write_matrix_json(const PairwiseComparisonMatrix& a, std::ostream& out);

/// Reads a matrix file, dispatching on the extension (.json, else CSV).
/// Parse and file-access failures throw IoError; validation failures
/// propagate as PcmError.
PairwiseComparisonMatrix read_matrix_file(const std::string& path);

/// Sweep output: header "lambda,value", one row per grid point.
void write_sweep_csv(const SweepCurve& curve, std::ostream& out);

nlohmann::json to_json(const PairwiseComparisonMatrix& a);
nlohmann::json to_json(const IndexValue& v);
nlohmann::json to_json(const CounterexampleRecord& r);
nlohmann::json to_json(const BoundaryVerdict& v);
nlohmann::json to_json(const AxiomReport& r);

}  // namespace pcmlab
