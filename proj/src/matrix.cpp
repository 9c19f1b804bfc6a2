#include "pcmlab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace pcmlab {

SquareMatrix SquareMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) {
    throw PcmError(errc::not_square, "matrix must not be empty");
  }
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw PcmError(errc::not_square,
                     fmt::format("row {} has {} entries, expected {}", i,
                                 rows[i].size(), n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<std::vector<double>> SquareMatrix::rows() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      out[i][j] = (*this)(i, j);
    }
  }
  return out;
}

PriorityVector::PriorityVector(std::vector<double> weights)
    : w_(std::move(weights)) {
  if (w_.empty()) {
    throw PcmError(errc::invalid_parameter, "priority vector must not be empty");
  }
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (!(w_[i] > 0.0) || !std::isfinite(w_[i])) {
      throw PcmError(errc::non_positive_entry,
                     fmt::format("weight w[{}] = {} is not positive", i, w_[i]));
    }
  }
}

PriorityVector PriorityVector::normalized() const {
  const double sum = std::accumulate(w_.begin(), w_.end(), 0.0);
  std::vector<double> out(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) {
    out[i] = w_[i] / sum;
  }
  return PriorityVector(std::move(out));
}

Permutation::Permutation(std::vector<std::size_t> perm) : p_(std::move(perm)) {
  std::vector<bool> seen(p_.size(), false);
  for (const std::size_t v : p_) {
    if (v >= p_.size() || seen[v]) {
      throw PcmError(errc::invalid_parameter,
                     "permutation is not a bijection on {0, ..., n-1}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return Permutation(std::move(p));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) {
    inv[p_[i]] = i;
  }
  return Permutation(std::move(inv));
}

namespace detail {

PairwiseComparisonMatrix wrap_reciprocal(SquareMatrix m) {
  return PairwiseComparisonMatrix(std::move(m));
}

PairwiseComparisonMatrix mirror_from_upper(SquareMatrix m) {
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      m(j, i) = 1.0 / m(i, j);
    }
  }
  return PairwiseComparisonMatrix(std::move(m));
}

}  // namespace detail

PairwiseComparisonMatrix PairwiseComparisonMatrix::transpose() const {
  const std::size_t n = order();
  SquareMatrix t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t(i, j) = m_(j, i);
    }
  }
  return PairwiseComparisonMatrix(std::move(t));
}

PairwiseComparisonMatrix validate(
    const std::vector<std::vector<double>>& raw) {
  SquareMatrix m = SquareMatrix::from_rows(raw);
  const std::size_t n = m.order();
  if (n < 3) {
    throw PcmError(errc::order_too_small,
                   fmt::format("order {} < 3; 2x2 reciprocal matrices are "
                               "always consistent and excluded",
                               n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = m(i, j);
      if (!(x > 0.0) || !std::isfinite(x)) {
        throw PcmError(
            errc::non_positive_entry,
            fmt::format("entry ({},{}) = {} must be positive and finite", i, j,
                        x));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double prod = m(i, j) * m(j, i);
      if (std::abs(prod - 1.0) > reciprocity_tolerance) {
        throw PcmError(errc::not_reciprocal,
                       fmt::format("a({0},{1}) * a({1},{0}) = {2} deviates "
                                   "from 1 beyond tolerance {3}",
                                   i, j, prod, reciprocity_tolerance));
      }
    }
  }
  return detail::mirror_from_upper(std::move(m));
}

bool is_consistent(const PairwiseComparisonMatrix& a, double tol) {
  if (!(tol > 0.0)) {
    throw PcmError(errc::invalid_parameter, "consistency tolerance must be > 0");
  }
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(a(i, k) - a(i, j) * a(j, k)) > tol * a(i, k)) {
          return false;
        }
      }
    }
  }
  return true;
}

PairwiseComparisonMatrix from_priority_vector(const PriorityVector& w) {
  const std::size_t n = w.size();
  if (n < 3) {
    throw PcmError(errc::order_too_small,
                   "priority vector must have at least 3 components");
  }
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = w[i] / w[j];
    }
  }
  return detail::mirror_from_upper(std::move(m));
}

PriorityVector geometric_mean_vector(const PairwiseComparisonMatrix& a) {
  const std::size_t n = a.order();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      log_sum += std::log(a(i, j));
    }
    w[i] = std::exp(log_sum / static_cast<double>(n));
  }
  return PriorityVector(std::move(w));
}

PairwiseComparisonMatrix permute(const PairwiseComparisonMatrix& a,
                                 const Permutation& p) {
  const std::size_t n = a.order();
  if (p.size() != n) {
    throw PcmError(errc::length_mismatch,
                   fmt::format("permutation length {} does not match order {}",
                               p.size(), n));
  }
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(p[i], p[j]);
    }
  }
  // Entries move verbatim (P A P^T); reciprocal pairs travel together, and
  // permuting back by the inverse restores the original bit for bit.
  return detail::wrap_reciprocal(std::move(m));
}

PairwiseComparisonMatrix intensify(const PairwiseComparisonMatrix& a,
                                   double b) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw PcmError(errc::invalid_parameter,
                   fmt::format("intensification exponent {} must be > 0", b));
  }
  if (b == 1.0) {
    return a;
  }
  const std::size_t n = a.order();
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = std::pow(a(i, j), b);
    }
  }
  return detail::mirror_from_upper(std::move(m));
}

PairwiseComparisonMatrix perturb_entry(const PairwiseComparisonMatrix& a,
                                       std::size_t p, std::size_t q,
                                       double delta) {
  const std::size_t n = a.order();
  if (p >= n || q >= n) {
    throw PcmError(errc::invalid_parameter,
                   fmt::format("entry ({},{}) outside order-{} matrix", p, q, n));
  }
  if (p == q) {
    throw PcmError(errc::diagonal_entry,
                   "diagonal entries are fixed at 1 and cannot be perturbed");
  }
  if (!std::isfinite(delta)) {
    throw PcmError(errc::invalid_parameter, "perturbation exponent must be finite");
  }
  if (delta == 1.0) {
    return a;
  }
  const std::size_t i = std::min(p, q);
  const std::size_t j = std::max(p, q);
  SquareMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = a(r, c);
    }
  }
  m(i, j) = std::pow(a(i, j), delta);
  return detail::mirror_from_upper(std::move(m));
}

PairwiseComparisonMatrix random_pcm(std::size_t n, double sigma, Rng& rng,
                                    JudgmentScale scale) {
  if (n < 3) {
    throw PcmError(errc::order_too_small,
                   fmt::format("order {} < 3 for random matrix", n));
  }
  if (!(sigma > 1.0)) {
    throw PcmError(errc::invalid_parameter,
                   fmt::format("scale sigma = {} must be > 1", sigma));
  }
  SquareMatrix m(n);
  if (scale == JudgmentScale::log_uniform) {
    const double log_sigma = std::log(sigma);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = std::exp(rng.uniform(-log_sigma, log_sigma));
      }
    }
  } else {
    // Saaty's 1-9 scale and its reciprocals, drawn uniformly.
    static constexpr std::array<double, 17> values = {
        1.0 / 9, 1.0 / 8, 1.0 / 7, 1.0 / 6, 1.0 / 5, 1.0 / 4,
        1.0 / 3, 1.0 / 2, 1.0,     2.0,     3.0,     4.0,
        5.0,     6.0,     7.0,     8.0,     9.0};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = values[rng.index(values.size())];
      }
    }
  }
  return detail::mirror_from_upper(std::move(m));
}

PairwiseComparisonMatrix random_pcm(std::size_t n, double sigma,
                                    std::uint64_t seed, JudgmentScale scale) {
  Rng rng(seed);
  return random_pcm(n, sigma, rng, scale);
}

std::vector<TriadProduct> triad_products(const PairwiseComparisonMatrix& a) {
  const std::size_t n = a.order();
  std::vector<TriadProduct> out;
  out.reserve(n * (n - 1) * (n - 2) / 6);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        out.push_back({i, j, k, a(i, j) * a(j, k) * a(k, i)});
      }
    }
  }
  return out;
}

}  // namespace pcmlab
