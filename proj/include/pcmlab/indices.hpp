#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "pcmlab/matrix.hpp"

namespace pcmlab {

/// The inconsistency indices implemented by this library. Each is a pure
/// function of a judgment matrix that takes a unique value nu exactly on
/// consistent matrices (nu = 1 for I_CD, nu = 0 for the rest).
enum class IndexKind { ci, gci, ci_star, i_cd, k, re, hci, gw, ni, i_m };

inline constexpr std::array<IndexKind, 10> all_index_kinds = {
    IndexKind::ci, IndexKind::gci, IndexKind::ci_star, IndexKind::i_cd,
    IndexKind::k,  IndexKind::re,  IndexKind::hci,     IndexKind::gw,
    IndexKind::ni, IndexKind::i_m};

/// Parameters of the Ramik-Korviny index NI; ignored by every other kind.
/// gamma scales the value linearly, so any boundary-property comparison is
/// invariant to its choice; sigma is carried for reporting only.
struct IndexParams {
  double sigma = 9.0;
  double gamma = 1.0;
};

struct IndexValue {
  IndexKind kind;
  double value = 0.0;
  /// Dominant eigenvalue; populated by CI only.
  std::optional<double> lambda_max;
  /// Set by RE at the unanimity (all-ones) matrix, where its defining ratio
  /// is 0/0; the reported value is then nu = 0, since that matrix is
  /// consistent.
  bool at_indifference = false;

  IndexValue(IndexKind k, double v) : kind(k), value(v) {}
  IndexValue(IndexKind k, double v, double lmax)
      : kind(k), value(v), lambda_max(lmax) {}
};

/// The unique value the index takes on consistent matrices.
double consistent_value(IndexKind kind) noexcept;

std::string_view index_name(IndexKind kind) noexcept;  // "CI", "I_CD", ...
std::string_view index_id(IndexKind kind) noexcept;    // "ci", "icd", ...

/// Case-insensitive lookup of the short ids accepted by the CLI
/// (ci, gci, cistar, icd, k, re, hci, gw, ni, im).
std::optional<IndexKind> parse_index_kind(std::string_view text) noexcept;

/// Dominant eigenvalue of a positive square matrix by power iteration with a
/// fixed all-ones start vector (positive matrices have a simple positive
/// dominant eigenvalue equal to the spectral radius, so the iteration
/// converges globally and runs are reproducible). Converged when successive
/// Rayleigh quotients differ by less than 1e-12 (relative to max(1, lambda))
/// and the residual confirms it; throws no_convergence after 1e5 iterations.
double dominant_eigenvalue(const SquareMatrix& m);

/// Dominant eigenvalue of a judgment matrix; always >= n, with equality
/// exactly on consistent matrices.
double lambda_max(const PairwiseComparisonMatrix& a);

/// Saaty's Consistency Index, CI = (lambda_max - n) / (n - 1).
IndexValue ci(const PairwiseComparisonMatrix& a);

/// Geometric Consistency Index (Crawford-Williams / Aguaron-Moreno-Jimenez):
/// GCI = 2/((n-1)(n-2)) * sum_{i<j} ln^2(a_ij * w_j / w_i), with w the row
/// geometric-mean vector.
IndexValue gci(const PairwiseComparisonMatrix& a);

/// Pelaez-Lamata index: mean over triads of t + 1/t - 2 with
/// t = a_ij * a_jk / a_ik.
IndexValue ci_star(const PairwiseComparisonMatrix& a);

/// Cavallo-D'Apuzzo index: geometric mean over triads of max{t, 1/t};
/// computed in the log domain to keep the C(n,3)-fold product from
/// overflowing. Takes the value 1 on consistent matrices.
IndexValue i_cd(const PairwiseComparisonMatrix& a);

/// Koczkodaj's index: max over triads of min{|1 - t|, |1 - 1/t|}. Lies in
/// [0, 1).
IndexValue k_index(const PairwiseComparisonMatrix& a);

/// Barzilai's relative error: with B = (ln a_ij), w_i the row means of B and
/// E = B - (w_i - w_j), RE = sum e_ij^2 / sum b_ij^2. Lies in [0, 1]. At the
/// all-ones matrix the ratio is 0/0; the result is flagged at_indifference
/// and reported as 0.
IndexValue re(const PairwiseComparisonMatrix& a);

/// Stein-Mizzi harmonic consistency index: with s_j the column sums and
/// HM = n / sum_j (1/s_j), HCI = (HM - n)(n + 1) / (n(n - 1)).
IndexValue hci(const PairwiseComparisonMatrix& a);

/// Golden-Wang index: average L1 distance between the column-normalized
/// matrix and the normalized geometric-mean vector,
/// GW = (1/n) * sum_j sum_i |a_ij / s_j - w_i|.
IndexValue gw(const PairwiseComparisonMatrix& a);

/// Ramik-Korviny index: gamma * max_ij |a_ij - w_i / w_j| with w the
/// normalized geometric-mean vector. The original normalization constant
/// depends on (n, sigma); it is left configurable here and defaults to 1.
IndexValue ni(const PairwiseComparisonMatrix& a, double sigma = 9.0,
              double gamma = 1.0);

/// Min-plus-sum triad index: min over triads of |ln t| plus the sum over
/// triads of |ln t|, t = a_ij * a_jk / a_ik.
IndexValue i_m(const PairwiseComparisonMatrix& a);

/// Uniform dispatch over IndexKind.
IndexValue evaluate(IndexKind kind, const PairwiseComparisonMatrix& a,
                    const IndexParams& params = {});

}  // namespace pcmlab
