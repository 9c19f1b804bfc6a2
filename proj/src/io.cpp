#include "pcmlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace pcmlab {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  return s.substr(b, e - b);
}

long long parse_integer(const std::string& text) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw IoError("not an integer: '" + text + "'");
  }
  return value;
}

}  // namespace

std::string format_g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double parse_judgment(const std::string& token) {
  const std::string text = trim(token);
  if (text.empty()) {
    throw IoError("empty judgment cell");
  }
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    long long num = parse_integer(trim(text.substr(0, slash)));
    long long den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0) {
      throw IoError("zero denominator in '" + text + "'");
    }
    const long long g = std::gcd(num, den);
    if (g != 0) {
      num /= g;
      den /= g;
    }
    return static_cast<double>(num) / static_cast<double>(den);
  }
  try {
    std::size_t consumed = 0;
    const double value = std::stod(text, &consumed);
    if (consumed != text.size()) {
      throw IoError("trailing characters in '" + text + "'");
    }
    return value;
  } catch (const std::invalid_argument&) {
    throw IoError("not a number: '" + text + "'");
  } catch (const std::out_of_range&) {
    throw IoError("number out of range: '" + text + "'");
  }
}

PairwiseComparisonMatrix read_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) {
      continue;
    }
    std::vector<double> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      row.push_back(parse_judgment(cell));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw IoError("matrix file contains no rows");
  }
  return validate(rows);
}

void write_matrix_csv(const PairwiseComparisonMatrix& a, std::ostream& out) {
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) {
        out << ',';
      }
      out << format_g17(a(i, j));
    }
    out << '\n';
  }
}

PairwiseComparisonMatrix read_matrix_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows") ||
      !doc["n"].is_number_integer() || !doc["rows"].is_array()) {
    throw IoError("matrix JSON must be {\"n\": int, \"rows\": [[...], ...]}");
  }
  const auto n = doc["n"].get<long long>();
  const auto& rows_json = doc["rows"];
  if (n < 0 || rows_json.size() != static_cast<std::size_t>(n)) {
    throw IoError("matrix JSON: \"n\" does not match the number of rows");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(rows_json.size());
  for (const auto& row_json : rows_json) {
    if (!row_json.is_array()) {
      throw IoError("matrix JSON: rows must be arrays");
    }
    std::vector<double> row;
    row.reserve(row_json.size());
    for (const auto& cell : row_json) {
      if (!cell.is_number()) {
        throw IoError("matrix JSON: entries must be numbers");
      }
      row.push_back(cell.get<double>());
    }
    rows.push_back(std::move(row));
  }
  return validate(rows);
}

void write_matrix_json(const PairwiseComparisonMatrix& a, std::ostream& out) {
  out << to_json(a).dump() << '\n';
}

PairwiseComparisonMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  const auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == "json" ? read_matrix_json(in) : read_matrix_csv(in);
}

void write_sweep_csv(const SweepCurve& curve, std::ostream& out) {
  out << "lambda,value\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    out << format_g17(curve.grid[i]) << ',' << format_g17(curve.values[i])
        << '\n';
  }
}

nlohmann::json to_json(const PairwiseComparisonMatrix& a) {
  return {{"n", a.order()}, {"rows", a.dense().rows()}};
}

nlohmann::json to_json(const IndexValue& v) {
  nlohmann::json out = {{"kind", index_id(v.kind)},
                        {"name", index_name(v.kind)},
                        {"value", v.value},
                        {"nu", consistent_value(v.kind)}};
  if (v.lambda_max) {
    out["lambda_max"] = *v.lambda_max;
  }
  if (v.at_indifference) {
    out["at_indifference"] = true;
  }
  return out;
}

nlohmann::json to_json(const CounterexampleRecord& r) {
  nlohmann::json matrices = nlohmann::json::array();
  for (const auto& m : r.matrices) {
    matrices.push_back(to_json(m));
  }
  return {{"matrices", matrices}, {"weights", r.weights.values()},
          {"lhs", r.lhs},         {"rhs", r.rhs},
          {"margin", r.margin}};
}

nlohmann::json to_json(const BoundaryVerdict& v) {
  nlohmann::json out = {
      {"kind", index_id(v.kind)},
      {"property", property_name(v.property)},
      {"status", v.status == VerdictStatus::violated ? "violated"
                                                     : "no_violation_found"},
      {"trials", v.trials}};
  if (v.counterexample) {
    out["counterexample"] = to_json(*v.counterexample);
  } else {
    out["note"] =
        "absence of violations corroborates the bound on sampled instances "
        "but does not prove it";
  }
  return out;
}

nlohmann::json to_json(const AxiomReport& r) {
  nlohmann::json axioms;
  for (std::size_t i = 0; i < r.status.size(); ++i) {
    axioms["A" + std::to_string(i + 1)] =
        r.status[i] == AxiomStatus::passed_sampled ? "passed_sampled"
                                                   : "violated_with_witness";
  }
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::json inputs = nlohmann::json::array();
    for (const auto& m : w.inputs) {
      inputs.push_back(to_json(m));
    }
    witnesses.push_back(
        {{"axiom", w.axiom}, {"detail", w.detail}, {"inputs", inputs}});
  }
  return {{"kind", index_id(r.kind)},
          {"samples", r.samples},
          {"axioms", axioms},
          {"witnesses", witnesses},
          {"note", "passed_sampled reports sampled evidence, not a proof"}};
}

}  // namespace pcmlab
