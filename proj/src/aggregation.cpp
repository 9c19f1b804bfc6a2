#include "pcmlab/aggregation.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace pcmlab {

SimplexWeights::SimplexWeights(std::vector<double> lambdas)
    : lambda_(std::move(lambdas)) {
  if (lambda_.empty()) {
    throw PcmError(errc::invalid_parameter, "weight vector must not be empty");
  }
  double sum = 0.0;
  for (double& l : lambda_) {
    if (!std::isfinite(l) || l < -1e-12) {
      throw PcmError(errc::invalid_parameter,
                     fmt::format("weight {} is negative", l));
    }
    l = std::max(l, 0.0);
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw PcmError(errc::invalid_parameter,
                   fmt::format("weights sum to {}, expected 1", sum));
  }
  for (double& l : lambda_) {
    l /= sum;
  }
}

SimplexWeights SimplexWeights::uniform(std::size_t m) {
  if (m == 0) {
    throw PcmError(errc::invalid_parameter, "weight vector must not be empty");
  }
  return SimplexWeights(
      std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

SimplexWeights SimplexWeights::pair(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw PcmError(errc::invalid_parameter,
                   fmt::format("pair weight {} outside [0, 1]", lambda));
  }
  return SimplexWeights({lambda, 1.0 - lambda});
}

PairwiseComparisonMatrix aggregate(
    std::span<const PairwiseComparisonMatrix> matrices,
    const SimplexWeights& weights) {
  if (matrices.empty()) {
    throw PcmError(errc::length_mismatch, "no matrices to aggregate");
  }
  if (matrices.size() != weights.size()) {
    throw PcmError(
        errc::length_mismatch,
        fmt::format("{} matrices but {} weights", matrices.size(),
                    weights.size()));
  }
  const std::size_t n = matrices[0].order();
  for (const auto& m : matrices) {
    if (m.order() != n) {
      throw PcmError(errc::order_mismatch,
                     fmt::format("member orders differ: {} vs {}", n,
                                 m.order()));
    }
  }
  SquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double log_sum = 0.0;
      for (std::size_t h = 0; h < matrices.size(); ++h) {
        log_sum += weights[h] * std::log(matrices[h](i, j));
      }
      out(i, j) = std::exp(log_sum);
    }
  }
  return detail::mirror_from_upper(std::move(out));
}

PairwiseComparisonMatrix aggregate_pair(const PairwiseComparisonMatrix& a,
                                        const PairwiseComparisonMatrix& b,
                                        double lambda) {
  if (lambda == 1.0) {
    return a;
  }
  if (lambda == 0.0) {
    return b;
  }
  const std::array<PairwiseComparisonMatrix, 2> ms = {a, b};
  return aggregate(ms, SimplexWeights::pair(lambda));
}

SweepCurve sweep_pair(const PairwiseComparisonMatrix& a,
                      const PairwiseComparisonMatrix& b, IndexKind kind,
                      int steps, const IndexParams& params) {
  if (steps < 2) {
    throw PcmError(errc::invalid_parameter,
                   fmt::format("sweep needs at least 2 steps, got {}", steps));
  }
  if (a.order() != b.order()) {
    throw PcmError(errc::order_mismatch,
                   fmt::format("sweep members have orders {} and {}",
                               a.order(), b.order()));
  }
  SweepCurve curve{kind, {}, {}};
  curve.grid.reserve(steps + 1);
  curve.values.reserve(steps + 1);
  for (int s = 0; s <= steps; ++s) {
    const double lambda = static_cast<double>(s) / static_cast<double>(steps);
    curve.grid.push_back(lambda);
    curve.values.push_back(
        evaluate(kind, aggregate_pair(a, b, lambda), params).value);
  }
  return curve;
}

}  // namespace pcmlab
