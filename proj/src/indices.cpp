#include "pcmlab/indices.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace pcmlab {

namespace {

constexpr long max_power_iterations = 100000;
constexpr double rayleigh_tolerance = 1e-12;

double binom3(std::size_t n) {
  return static_cast<double>(n * (n - 1) * (n - 2)) / 6.0;
}

}  // namespace

double consistent_value(IndexKind kind) noexcept {
  return kind == IndexKind::i_cd ? 1.0 : 0.0;
}

std::string_view index_name(IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::ci: return "CI";
    case IndexKind::gci: return "GCI";
    case IndexKind::ci_star: return "CI*";
    case IndexKind::i_cd: return "I_CD";
    case IndexKind::k: return "K";
    case IndexKind::re: return "RE";
    case IndexKind::hci: return "HCI";
    case IndexKind::gw: return "GW";
    case IndexKind::ni: return "NI";
    case IndexKind::i_m: return "I_M";
  }
  return "?";
}

std::string_view index_id(IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::ci: return "ci";
    case IndexKind::gci: return "gci";
    case IndexKind::ci_star: return "cistar";
    case IndexKind::i_cd: return "icd";
    case IndexKind::k: return "k";
    case IndexKind::re: return "re";
    case IndexKind::hci: return "hci";
    case IndexKind::gw: return "gw";
    case IndexKind::ni: return "ni";
    case IndexKind::i_m: return "im";
  }
  return "?";
}

std::optional<IndexKind> parse_index_kind(std::string_view text) noexcept {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (const IndexKind kind : all_index_kinds) {
    if (lower == index_id(kind)) {
      return kind;
    }
  }
  return std::nullopt;
}

double dominant_eigenvalue(const SquareMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) {
    throw PcmError(errc::invalid_parameter, "empty matrix");
  }
  for (const double x : m.data()) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw PcmError(errc::non_positive_entry,
                     "power iteration requires a positive matrix");
    }
  }
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double lambda_prev = 0.0;
  for (long it = 0; it < max_power_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        s += m(i, j) * x[j];
      }
      y[i] = s;
    }
    // x has unit norm, so the Rayleigh quotient is just x . y.
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      lambda += x[i] * y[i];
    }
    double residual_sq = 0.0;
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - lambda * x[i];
      residual_sq += r * r;
      norm_sq += y[i] * y[i];
    }
    const double scale = std::max(1.0, std::abs(lambda));
    // The residual guard keeps an oscillating Rayleigh sequence (complex
    // subdominant eigenvalues) from stopping the iteration early.
    if (it > 0 && std::abs(lambda - lambda_prev) < rayleigh_tolerance * scale &&
        std::sqrt(residual_sq) < 10.0 * rayleigh_tolerance * scale) {
      return lambda;
    }
    lambda_prev = lambda;
    const double norm = std::sqrt(norm_sq);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = y[i] / norm;
    }
  }
  throw PcmError(errc::no_convergence,
                 fmt::format("power iteration did not converge within {} "
                             "iterations",
                             max_power_iterations));
}

double lambda_max(const PairwiseComparisonMatrix& a) {
  return dominant_eigenvalue(a.dense());
}

IndexValue ci(const PairwiseComparisonMatrix& a) {
  const double n = static_cast<double>(a.order());
  const double lmax = lambda_max(a);
  return {IndexKind::ci, (lmax - n) / (n - 1.0), lmax};
}

IndexValue gci(const PairwiseComparisonMatrix& a) {
  const std::size_t n = a.order();
  std::vector<double> log_gm(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += std::log(a(i, j));
    }
    log_gm[i] = s / static_cast<double>(n);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double e = std::log(a(i, j)) + log_gm[j] - log_gm[i];
      sum += e * e;
    }
  }
  const double dn = static_cast<double>(n);
  return {IndexKind::gci, 2.0 * sum / ((dn - 1.0) * (dn - 2.0))};
}

IndexValue ci_star(const PairwiseComparisonMatrix& a) {
  double sum = 0.0;
  const auto triads = triad_products(a);
  for (const TriadProduct& t : triads) {
    sum += t.value + 1.0 / t.value - 2.0;
  }
  return {IndexKind::ci_star, sum / binom3(a.order())};
}

IndexValue i_cd(const PairwiseComparisonMatrix& a) {
  double log_sum = 0.0;
  for (const TriadProduct& t : triad_products(a)) {
    log_sum += std::abs(std::log(t.value));
  }
  return {IndexKind::i_cd, std::exp(log_sum / binom3(a.order()))};
}

IndexValue k_index(const PairwiseComparisonMatrix& a) {
  double worst = 0.0;
  for (const TriadProduct& t : triad_products(a)) {
    const double dev =
        std::min(std::abs(1.0 - t.value), std::abs(1.0 - 1.0 / t.value));
    worst = std::max(worst, dev);
  }
  return {IndexKind::k, worst};
}

IndexValue re(const PairwiseComparisonMatrix& a) {
  const std::size_t n = a.order();
  SquareMatrix b(n);
  std::vector<double> row_mean(n, 0.0);
  double b_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b(i, j) = std::log(a(i, j));
      row_mean[i] += b(i, j);
      b_sq += b(i, j) * b(i, j);
    }
    row_mean[i] /= static_cast<double>(n);
  }
  // ||ln A||_F below 1e-12 means the matrix is the unanimity matrix up to
  // floating-point dust; the defining ratio is then 0/0 and its value would
  // be direction noise, so it is reported as the consistent value instead.
  if (b_sq <= 1e-24) {
    IndexValue v{IndexKind::re, 0.0};
    v.at_indifference = true;
    return v;
  }
  double e_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double e = b(i, j) - row_mean[i] + row_mean[j];
      e_sq += e * e;
    }
  }
  return {IndexKind::re, e_sq / b_sq};
}

IndexValue hci(const PairwiseComparisonMatrix& a) {
  const std::size_t n = a.order();
  double reciprocal_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      col += a(i, j);
    }
    reciprocal_sum += 1.0 / col;
  }
  const double dn = static_cast<double>(n);
  const double harmonic_mean = dn / reciprocal_sum;
  return {IndexKind::hci,
          (harmonic_mean - dn) * (dn + 1.0) / (dn * (dn - 1.0))};
}

IndexValue gw(const PairwiseComparisonMatrix& a) {
  const std::size_t n = a.order();
  const PriorityVector w = geometric_mean_vector(a).normalized();
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      col += a(i, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      sum += std::abs(a(i, j) / col - w[i]);
    }
  }
  return {IndexKind::gw, sum / static_cast<double>(n)};
}

IndexValue ni(const PairwiseComparisonMatrix& a, double sigma, double gamma) {
  if (!(gamma > 0.0)) {
    throw PcmError(errc::invalid_parameter,
                   fmt::format("normalization gamma = {} must be > 0", gamma));
  }
  (void)sigma;  // part of the index's signature; the value does not use it
  const std::size_t n = a.order();
  const PriorityVector w = geometric_mean_vector(a).normalized();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(a(i, j) - w[i] / w[j]));
    }
  }
  return {IndexKind::ni, gamma * worst};
}

IndexValue i_m(const PairwiseComparisonMatrix& a) {
  double smallest = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (const TriadProduct& t : triad_products(a)) {
    const double dev = std::abs(std::log(t.value));
    smallest = std::min(smallest, dev);
    sum += dev;
  }
  return {IndexKind::i_m, smallest + sum};
}

IndexValue evaluate(IndexKind kind, const PairwiseComparisonMatrix& a,
                    const IndexParams& params) {
  switch (kind) {
    case IndexKind::ci: return ci(a);
    case IndexKind::gci: return gci(a);
    case IndexKind::ci_star: return ci_star(a);
    case IndexKind::i_cd: return i_cd(a);
    case IndexKind::k: return k_index(a);
    case IndexKind::re: return re(a);
    case IndexKind::hci: return hci(a);
    case IndexKind::gw: return gw(a);
    case IndexKind::ni: return ni(a, params.sigma, params.gamma);
    case IndexKind::i_m: return i_m(a);
  }
  throw PcmError(errc::invalid_parameter, "unknown index kind");
}

}  // namespace pcmlab
