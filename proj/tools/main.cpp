// pcmlab command-line front end: evaluate inconsistency indices, aggregate
// judgment matrices, sweep index values along a two-matrix segment, search
// for boundary-property violations, run axiom suites, and reproduce the
// nine-row classification table.
//
// Exit codes: 0 success, 1 domain/validation error, 2 file or parse error,
// 3 when --expect-violation / --expect-no-violation disagrees with the
// search outcome.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcmlab/boundary.hpp"
#include "pcmlab/io.hpp"

namespace {

using namespace pcmlab;

constexpr int exit_ok = 0;
constexpr int exit_domain_error = 1;
constexpr int exit_io_error = 2;
constexpr int exit_expectation_failed = 3;

// Writes to --out when given, standard output otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw IoError("cannot open output file '" + path + "'");
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

IndexKind parse_kind_or_throw(const std::string& text) {
  if (const auto kind = parse_index_kind(text)) {
    return *kind;
  }
  throw PcmError(errc::invalid_parameter,
                 "unknown index '" + text +
                     "' (expected one of ci, gci, cistar, icd, k, re, hci, "
                     "gw, ni, im)");
}

std::vector<double> parse_weight_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream cells(text);
  std::string cell;
  while (std::getline(cells, cell, ',')) {
    out.push_back(parse_judgment(cell));
  }
  if (out.empty()) {
    throw IoError("empty weight list");
  }
  return out;
}

bool ends_with_json(const std::string& path) {
  std::string lower = path;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return lower.size() >= 5 && lower.compare(lower.size() - 5, 5, ".json") == 0;
}

struct Options {
  std::string kind;
  std::string property = "ub";
  std::vector<std::string> inputs;
  std::string file_a;
  std::string file_b;
  std::string weights;
  std::string out;
  int steps = 100;
  long trials = 10000;
  long samples = 200;
  std::uint64_t seed = 1;
  double sigma = 9.0;
  double gamma = 1.0;
  bool expect_violation = false;
  bool expect_no_violation = false;
};

int run_index(const Options& opt) {
  const IndexKind kind = parse_kind_or_throw(opt.kind);
  const PairwiseComparisonMatrix a = read_matrix_file(opt.inputs.at(0));
  const IndexValue value =
      evaluate(kind, a, IndexParams{opt.sigma, opt.gamma});
  nlohmann::json out = to_json(value);
  if (kind == IndexKind::ni) {
    out["sigma"] = opt.sigma;
    out["gamma"] = opt.gamma;
  }
  OutputTarget target(opt.out);
  target.stream() << out.dump() << '\n';
  return exit_ok;
}

int run_aggregate(const Options& opt) {
  std::vector<PairwiseComparisonMatrix> ms;
  ms.reserve(opt.inputs.size());
  for (const std::string& path : opt.inputs) {
    ms.push_back(read_matrix_file(path));
  }
  const SimplexWeights weights =
      opt.weights.empty() ? SimplexWeights::uniform(ms.size())
                          : SimplexWeights(parse_weight_list(opt.weights));
  const PairwiseComparisonMatrix star = aggregate(ms, weights);
  OutputTarget target(opt.out);
  if (!opt.out.empty() && ends_with_json(opt.out)) {
    write_matrix_json(star, target.stream());
  } else {
    write_matrix_csv(star, target.stream());
  }
  return exit_ok;
}

int run_sweep(const Options& opt) {
  const IndexKind kind = parse_kind_or_throw(opt.kind);
  const PairwiseComparisonMatrix a = read_matrix_file(opt.file_a);
  const PairwiseComparisonMatrix b = read_matrix_file(opt.file_b);
  const SweepCurve curve =
      sweep_pair(a, b, kind, opt.steps, IndexParams{opt.sigma, opt.gamma});
  OutputTarget target(opt.out);
  write_sweep_csv(curve, target.stream());
  return exit_ok;
}

int run_search(const Options& opt) {
  const IndexKind kind = parse_kind_or_throw(opt.kind);
  const auto property = parse_property(opt.property);
  if (!property) {
    throw PcmError(errc::invalid_parameter,
                   "unknown property '" + opt.property +
                       "' (expected lb, ub or sub)");
  }
  SearchConfig config;
  config.sigma = opt.sigma;
  config.params = IndexParams{opt.sigma, opt.gamma};
  const BoundaryVerdict verdict =
      search_violation(kind, *property, opt.trials, opt.seed, config);
  OutputTarget target(opt.out);
  target.stream() << to_json(verdict).dump(2) << '\n';
  const bool violated = verdict.status == VerdictStatus::violated;
  if ((opt.expect_violation && !violated) ||
      (opt.expect_no_violation && violated)) {
    std::cerr << "expectation failed: search reported "
              << (violated ? "a violation" : "no violation") << '\n';
    return exit_expectation_failed;
  }
  return exit_ok;
}

int run_axioms(const Options& opt) {
  const IndexKind kind = parse_kind_or_throw(opt.kind);
  const AxiomReport report = axiom_suite(kind, opt.samples, opt.seed,
                                         IndexParams{opt.sigma, opt.gamma});
  OutputTarget target(opt.out);
  target.stream() << to_json(report).dump(2) << '\n';
  return exit_ok;
}

int run_table(const Options& opt) {
  const std::vector<TableRow> rows = classification_table(opt.trials, opt.seed);
  std::cout << render_table_text(rows, opt.trials);
  if (!opt.out.empty()) {
    OutputTarget target(opt.out);
    target.stream() << render_table_csv(rows);
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inconsistency of pairwise comparison matrices under "
               "weighted-geometric-mean group aggregation"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* index = app.add_subcommand(
      "index", "evaluate an inconsistency index on a matrix file");
  index->add_option("--kind", opt.kind, "index id")->required();
  index->add_option("--in", opt.inputs, "matrix file (CSV or JSON)")
      ->required()->expected(1);
  index->add_option("--sigma", opt.sigma, "NI scale parameter");
  index->add_option("--gamma", opt.gamma, "NI normalization constant");
  index->add_option("--out", opt.out, "output file (default: stdout)");

  CLI::App* agg = app.add_subcommand(
      "aggregate", "weighted geometric mean of matrices");
  agg->add_option("--in", opt.inputs, "matrix files, repeat per member")
      ->required()->expected(-2);
  agg->add_option("--weights", opt.weights,
                  "comma-separated simplex weights, e.g. \"0.5,0.5\" "
                  "(default: uniform)");
  agg->add_option("--out", opt.out,
                  "output file; .json selects the JSON matrix format");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "index values along A^lambda B^(1-lambda), lambda in [0,1]");
  sweep->add_option("--kind", opt.kind, "index id")->required();
  sweep->add_option("--a", opt.file_a, "first matrix file")->required();
  sweep->add_option("--b", opt.file_b, "second matrix file")->required();
  sweep->add_option("--steps", opt.steps, "grid steps (default 100)")
      ->check(CLI::Range(2, 1000000));
  sweep->add_option("--sigma", opt.sigma, "NI scale parameter");
  sweep->add_option("--gamma", opt.gamma, "NI normalization constant");
  sweep->add_option("--out", opt.out, "output CSV (default: stdout)");

  CLI::App* search = app.add_subcommand(
      "search", "randomized counterexample search for a boundary property");
  search->add_option("--kind", opt.kind, "index id")->required();
  search->add_option("--property", opt.property, "lb, ub or sub")->required();
  search->add_option("--trials", opt.trials, "number of trials")
      ->check(CLI::PositiveNumber);
  search->add_option("--seed", opt.seed, "random seed");
  search->add_option("--sigma", opt.sigma, "generator scale");
  search->add_option("--gamma", opt.gamma, "NI normalization constant");
  search->add_option("--out", opt.out, "output JSON (default: stdout)");
  search->add_flag("--expect-violation", opt.expect_violation,
                   "exit 3 unless a violation is found");
  search->add_flag("--expect-no-violation", opt.expect_no_violation,
                   "exit 3 if a violation is found");

  CLI::App* axioms = app.add_subcommand(
      "axioms", "sampled A1-A5 axiom compliance report");
  axioms->add_option("--kind", opt.kind, "index id")->required();
  axioms->add_option("--samples", opt.samples, "samples per axiom")
      ->check(CLI::PositiveNumber);
  axioms->add_option("--seed", opt.seed, "random seed");
  axioms->add_option("--sigma", opt.sigma, "NI scale parameter");
  axioms->add_option("--gamma", opt.gamma, "NI normalization constant");
  axioms->add_option("--out", opt.out, "output JSON (default: stdout)");

  CLI::App* table = app.add_subcommand(
      "table", "boundary-property classification of the nine indices");
  table->add_option("--trials", opt.trials, "search trials per cell")
      ->check(CLI::PositiveNumber);
  table->add_option("--seed", opt.seed, "random seed");
  table->add_option("--out", opt.out, "also write the table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints message or help text
    return code == 0 ? exit_ok : exit_domain_error;
  }

  try {
    if (index->parsed()) return run_index(opt);
    if (agg->parsed()) return run_aggregate(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (search->parsed()) return run_search(opt);
    if (axioms->parsed()) return run_axioms(opt);
    if (table->parsed()) return run_table(opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_io_error;
  } catch (const PcmError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_domain_error;
  }
  return exit_ok;
}
