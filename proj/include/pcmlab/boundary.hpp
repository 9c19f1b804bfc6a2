#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcmlab/aggregation.hpp"
#include "pcmlab/indices.hpp"
#include "pcmlab/matrix.hpp"

namespace pcmlab {

/// How the inconsistency of a weighted-geometric-mean aggregate relates to
/// the members' inconsistencies, for all member sets and weights:
///   lower bounded           I(A*) >= min_h I(A_h)
///   upper bounded           I(A*) <= max_h I(A_h)
///   strongly upper bounded  I(A*) <= sum_h lambda_h I(A_h)
enum class BoundaryProperty {
  lower_bounded,
  upper_bounded,
  strongly_upper_bounded,
};

enum class VerdictStatus { no_violation_found, violated };

std::string_view property_name(BoundaryProperty p) noexcept;
/// Accepts lb/ub/sub as well as the full property names, case-insensitive.
std::optional<BoundaryProperty> parse_property(std::string_view text) noexcept;

/// Margins must exceed this to count as violations; separates genuine
/// violations from eigen-solver noise.
inline constexpr double violation_tolerance = 1e-9;

/// A concrete violating instance. Re-evaluating the stored matrices and
/// weights reproduces lhs, rhs and margin.
struct CounterexampleRecord {
  std::vector<PairwiseComparisonMatrix> matrices;
  SimplexWeights weights;
  double lhs;     ///< index value of the aggregate
  double rhs;     ///< min / max / weighted mean of the members' values
  double margin;  ///< oriented so that margin > 0 means violation
};

/// One bound comparison on explicit inputs.
struct ComparisonRecord {
  double lhs;
  double rhs;
  bool violated;
};

struct BoundaryVerdict {
  IndexKind kind;
  BoundaryProperty property;
  VerdictStatus status;
  long trials;
  std::optional<CounterexampleRecord> counterexample;
};

/// Randomized search settings. Trials draw matrix pairs or triples of the
/// given orders from the log-uniform generator and weights uniformly from the
/// simplex; each trial derives its generator from (seed, trial index), so
/// results do not depend on scheduling.
struct SearchConfig {
  std::vector<std::size_t> orders = {3, 4, 5};
  double sigma = 9.0;
  IndexParams params{};
  double tolerance = violation_tolerance;
  int refine_steps = 100;  ///< lambda grid size for the refinement pass
};

/// Constructive refutation of the lower bound: aggregates an inconsistent A
/// with its transpose at equal weights. The aggregate is consistent, so its
/// index value nu lies strictly below min{I(A), I(A^T)}.
/// Throws input_consistent when A evaluates to nu.
CounterexampleRecord lower_bound_refutation(IndexKind kind,
                                            const PairwiseComparisonMatrix& a,
                                            const IndexParams& params = {});

/// lhs = I(aggregate), rhs = max_h I(A_h); violated iff lhs > rhs + tol.
ComparisonRecord check_upper(IndexKind kind,
                             std::span<const PairwiseComparisonMatrix> ms,
                             const SimplexWeights& weights,
                             const IndexParams& params = {},
                             double tol = violation_tolerance);

/// lhs = I(aggregate), rhs = sum_h lambda_h I(A_h); violated iff
/// lhs > rhs + tol.
ComparisonRecord check_strong_upper(
    IndexKind kind, std::span<const PairwiseComparisonMatrix> ms,
    const SimplexWeights& weights, const IndexParams& params = {},
    double tol = violation_tolerance);

/// Randomized counterexample search. Returns the first verified violation
/// (margin > tolerance) or NoViolationFound after `trials` trials plus a
/// lambda-grid refinement pass around the best candidate pair. Known
/// explicit counterexamples are injected as trial #1: the opposing-extremes
/// construction for the lower bound (any kind), and the recorded pairs for
/// RE and I_M for the upper bounds. Deterministic per seed.
BoundaryVerdict search_violation(IndexKind kind, BoundaryProperty property,
                                 long trials, std::uint64_t seed,
                                 const SearchConfig& config = {});

/// Spectral-radius inequality of Elsner et al. for entrywise weighted
/// geometric means of positive matrices (reciprocity not required):
/// true iff rho(M*) <= prod_h rho(M_h)^lambda_h + tol.
bool elsner_check(std::span<const SquareMatrix> ms,
                  const SimplexWeights& weights,
                  double tol = violation_tolerance);

enum class AxiomStatus { passed_sampled, violated_with_witness };

struct AxiomWitness {
  std::string axiom;  ///< "A1" ... "A5"
  std::vector<PairwiseComparisonMatrix> inputs;
  std::string detail;
};

/// Sampled compliance with the five axioms:
///   A1 unique consistent value, A2 permutation invariance, A3 monotonicity
///   under intensification, A4 monotonicity under single-entry perturbation
///   from consistency, A5 continuity.
/// Sampling corroborates but cannot prove; a violated status always carries
/// a reproducible witness.
struct AxiomReport {
  IndexKind kind;
  long samples;
  std::array<AxiomStatus, 5> status;  ///< indexed A1..A5
  std::vector<AxiomWitness> witnesses;

  bool all_passed() const noexcept;
};

AxiomReport axiom_suite(IndexKind kind, long samples, std::uint64_t seed,
                        const IndexParams& params = {});

/// One classification row: the lower-bound refutation always yields a
/// violation; the upper-bound columns report the search outcome.
struct TableRow {
  IndexKind kind;
  VerdictStatus lower;
  VerdictStatus upper;
  VerdictStatus strong_upper;
};

TableRow classify(IndexKind kind, long trials, std::uint64_t seed,
                  const SearchConfig& config = {});

/// Index kinds of the nine-row classification table, in display order.
std::span<const IndexKind> table_index_kinds() noexcept;

/// Runs classify() for the nine table rows.
std::vector<TableRow> classification_table(long trials, std::uint64_t seed,
                                           const SearchConfig& config = {});

/// Aligned text rendering with a footnote on the epistemic status of
/// "no violation found" entries.
std::string render_table_text(const std::vector<TableRow>& rows, long trials);

/// CSV with header index,LB,UB,SUB; cells are the same check/cross marks as
/// the text rendering.
std::string render_table_csv(const std::vector<TableRow>& rows);

}  // namespace pcmlab
