#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pcmlab/errors.hpp"
#include "pcmlab/rng.hpp"

namespace pcmlab {

/// Dense square matrix, row-major. Plain storage shared by the judgment
/// matrices and by the general positive matrices of the spectral-radius
/// inequality check.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0)
      : n_(n), a_(n * n, fill) {}

  /// Builds from nested rows; throws not_square on ragged or empty input.
  static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::span<const double> data() const noexcept { return a_; }
  std::vector<std::vector<double>> rows() const;

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Positive weight vector over the alternatives.
class PriorityVector {
 public:
  explicit PriorityVector(std::vector<double> weights);

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::vector<double>& weights() const noexcept { return w_; }

  /// Same direction, rescaled so the components sum to 1.
  PriorityVector normalized() const;

 private:
  std::vector<double> w_;
};

/// Bijection on {0, ..., n-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> perm);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return p_.size(); }
  std::size_t operator[](std::size_t i) const { return p_[i]; }
  const std::vector<std::size_t>& indices() const noexcept { return p_; }
  Permutation inverse() const;

 private:
  std::vector<std::size_t> p_;
};

/// One cyclic product a_ij * a_jk * a_ki for i < j < k. Every such product
/// equals 1 exactly when the matrix is consistent.
struct TriadProduct {
  std::size_t i, j, k;
  double value;
};

class PairwiseComparisonMatrix;

namespace detail {
/// Internal factories. Callers guarantee the reciprocity invariant:
/// wrap_reciprocal takes entries that are already pairwise reciprocal;
/// mirror_from_upper treats the strict upper triangle as authoritative and
/// rebuilds the diagonal and lower triangle from it.
PairwiseComparisonMatrix wrap_reciprocal(SquareMatrix m);
PairwiseComparisonMatrix mirror_from_upper(SquareMatrix m);
}  // namespace detail

/// Positive reciprocal judgment matrix of order n >= 3 (a_ij * a_ji = 1,
/// a_ii = 1). Immutable; construct through validate(), from_priority_vector()
/// or one of the transformations below. Every construction path except
/// permute()/transpose() stores the lower triangle canonically as 1/a_ij;
/// permutation and transposition move entries verbatim so that applying the
/// inverse restores the original bit for bit.
class PairwiseComparisonMatrix {
 public:
  std::size_t order() const noexcept { return m_.order(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const SquareMatrix& dense() const noexcept { return m_; }

  PairwiseComparisonMatrix transpose() const;

  bool operator==(const PairwiseComparisonMatrix&) const = default;

 private:
  explicit PairwiseComparisonMatrix(SquareMatrix m) : m_(std::move(m)) {}

  friend PairwiseComparisonMatrix detail::wrap_reciprocal(SquareMatrix);
  friend PairwiseComparisonMatrix detail::mirror_from_upper(SquareMatrix);

  SquareMatrix m_;
};

/// Relative tolerance accepted on a_ij * a_ji = 1 for file-sourced input
/// (decimals such as 0.333 must pass); entries are canonicalized afterwards.
inline constexpr double reciprocity_tolerance = 1e-9;

/// Checks positivity, reciprocity (within reciprocity_tolerance) and order,
/// then canonicalizes: a_ii := 1 and a_ji := 1/a_ij for j > i.
/// Throws PcmError with code not_square, order_too_small, non_positive_entry
/// or not_reciprocal.
PairwiseComparisonMatrix validate(const std::vector<std::vector<double>>& raw);

/// True iff |a_ik - a_ij * a_jk| <= tol * a_ik for all i, j, k.
bool is_consistent(const PairwiseComparisonMatrix& a, double tol);

/// Consistent matrix of ratios a_ij = w_i / w_j.
PairwiseComparisonMatrix from_priority_vector(const PriorityVector& w);

/// Row geometric means w_i = (prod_j a_ij)^(1/n), computed in the log domain.
/// Recovers the generating vector exactly (up to scale) on consistent input
/// and is the standard estimate on inconsistent input.
PriorityVector geometric_mean_vector(const PairwiseComparisonMatrix& a);

/// Reorders alternatives: entry (i, j) of the result is a(p[i], p[j]).
PairwiseComparisonMatrix permute(const PairwiseComparisonMatrix& a,
                                 const Permutation& p);

/// Entry-wise power a_ij^b, b > 0. Sharpens (b > 1) or flattens (b < 1) all
/// preferences at once; reciprocity and consistency are preserved.
PairwiseComparisonMatrix intensify(const PairwiseComparisonMatrix& a,
                                   double b);

/// Replaces the single comparison a_pq by a_pq^delta (and a_qp by a_qp^delta).
/// Throws diagonal_entry when p == q.
PairwiseComparisonMatrix perturb_entry(const PairwiseComparisonMatrix& a,
                                       std::size_t p, std::size_t q,
                                       double delta);

enum class JudgmentScale {
  log_uniform,     ///< continuous, log-uniform on [1/sigma, sigma]
  saaty_discrete,  ///< {1/9, ..., 1/2, 1, 2, ..., 9}; sigma ignored
};

/// Random judgment matrix; upper-triangle entries drawn independently,
/// lower triangle mirrored. Deterministic for a fixed seed. sigma > 1.
PairwiseComparisonMatrix random_pcm(
    std::size_t n, double sigma, std::uint64_t seed,
    JudgmentScale scale = JudgmentScale::log_uniform);
PairwiseComparisonMatrix random_pcm(
    std::size_t n, double sigma, Rng& rng,
    JudgmentScale scale = JudgmentScale::log_uniform);

/// All C(n,3) cyclic triad products, ordered lexicographically by (i, j, k).
std::vector<TriadProduct> triad_products(const PairwiseComparisonMatrix& a);

}  // namespace pcmlab
