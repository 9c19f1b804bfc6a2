#pragma once

#include <span>
#include <vector>

#include "pcmlab/indices.hpp"
#include "pcmlab/matrix.hpp"

namespace pcmlab {

/// Nonnegative decision-maker importances summing to 1. Components below
/// -1e-12 are rejected; tiny negatives are clamped to 0. The sum must be
/// within 1e-12 of 1 and is then renormalized exactly.
class SimplexWeights {
 public:
  explicit SimplexWeights(std::vector<double> lambdas);
  static SimplexWeights uniform(std::size_t m);
  /// Two-member weights (lambda, 1 - lambda).
  static SimplexWeights pair(double lambda);

  std::size_t size() const noexcept { return lambda_.size(); }
  double operator[](std::size_t h) const { return lambda_[h]; }
  const std::vector<double>& values() const noexcept { return lambda_; }

 private:
  std::vector<double> lambda_;
};

/// Weighted geometric mean of judgment matrices, entrywise:
/// a*_ij = prod_h (a_ij^(h))^lambda_h, computed as exp(sum lambda_h ln a_ij)
/// for stability and exact symmetry in h. The result is a valid reciprocal
/// matrix.
PairwiseComparisonMatrix aggregate(
    std::span<const PairwiseComparisonMatrix> matrices,
    const SimplexWeights& weights);

/// Two-member aggregate A^lambda B^(1-lambda). lambda in {0, 1} returns the
/// corresponding member unchanged.
PairwiseComparisonMatrix aggregate_pair(const PairwiseComparisonMatrix& a,
                                        const PairwiseComparisonMatrix& b,
                                        double lambda);

/// Index values along the segment between two judgment matrices.
struct SweepCurve {
  IndexKind kind;
  std::vector<double> grid;    ///< strictly increasing, endpoints 0 and 1
  std::vector<double> values;  ///< evaluate(kind, A^lambda B^(1-lambda))
};

/// Evaluates `kind` on A^lambda B^(1-lambda) over the grid {0, 1/steps, ...,
/// 1}. Endpoints are evaluated on A and B themselves, not on an aggregate.
SweepCurve sweep_pair(const PairwiseComparisonMatrix& a,
                      const PairwiseComparisonMatrix& b, IndexKind kind,
                      int steps = 100, const IndexParams& params = {});

}  // namespace pcmlab
