#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "pcmlab/aggregation.hpp"
#include "pcmlab/boundary.hpp"
#include "pcmlab/indices.hpp"
#include "test_helpers.hpp"

using namespace pcmlab;
using namespace pcmlab::testing;

namespace {

PairwiseComparisonMatrix extremes() {
  return validate(
      {{1.0, 1.0 / 9.0, 9.0}, {9.0, 1.0, 1.0 / 9.0}, {1.0 / 9.0, 9.0, 1.0}});
}

PairwiseComparisonMatrix unanimity() {
  return validate({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
}

PairwiseComparisonMatrix ratio124() {
  return from_priority_vector(PriorityVector({1.0, 2.0, 4.0}));
}

}  // namespace

TEST_SUITE("indices") {

TEST_CASE("lambda_max: consistent order, extremes closed form, similarity") {
  CHECK(std::abs(lambda_max(ratio124()) - 3.0) <= 1e-10);
  // Single triad t = 1/729, so lambda_max = 1 + 1/9 + 9.
  CHECK(std::abs(lambda_max(extremes()) - (1.0 + 1.0 / 9.0 + 9.0)) <= 1e-10);

  Rng rng(41);
  for (int s = 0; s < 50; ++s) {
    const std::size_t n = 3 + s % 3;
    const auto a = random_pcm(n, 9.0, rng);
    const double l = lambda_max(a);
    CHECK(l >= static_cast<double>(n) - 1e-10);
    const auto p = random_permutation(rng, n);
    CHECK(std::abs(lambda_max(permute(a, p)) - l) <= 1e-10);
  }
}

TEST_CASE("lambda_max matches the 3x3 closed form on random matrices") {
  Rng rng(43);
  for (int s = 0; s < 500; ++s) {
    const auto a = random_pcm(3, 9.0, rng);
    CHECK(std::abs(lambda_max(a) - lambda_max_3x3_closed_form(a)) <= 1e-9);
  }
}

TEST_CASE("ci: zero on consistent, extremes value, transpose invariance") {
  CHECK(std::abs(ci(ratio124()).value) <= 1e-10);

  const auto v = ci(extremes());
  CHECK(v.value == doctest::Approx(32.0 / 9.0).epsilon(1e-10));  // 3.5556
  REQUIRE(v.lambda_max.has_value());
  CHECK(*v.lambda_max == doctest::Approx(91.0 / 9.0).epsilon(1e-10));

  Rng rng(47);
  for (int s = 0; s < 30; ++s) {
    const auto a = random_pcm(3 + s % 3, 9.0, rng);
    CHECK(ci(a).value ==
          doctest::Approx(ci(a.transpose()).value).epsilon(1e-9));
  }
}

TEST_CASE("gci: zero on consistent, extremes value, permutation invariance") {
  CHECK(std::abs(gci(ratio124()).value) <= 1e-12);

  // Row geometric means of the extremes matrix are all 1, so the definition
  // reduces to sum of squared logs of the upper triangle: 12 ln^2 3.
  const double expected = 12.0 * std::log(3.0) * std::log(3.0);
  CHECK(gci(extremes()).value == doctest::Approx(expected).epsilon(1e-12));

  Rng rng(53);
  for (int s = 0; s < 50; ++s) {
    const std::size_t n = 3 + s % 3;
    const auto a = random_pcm(n, 9.0, rng);
    const auto p = random_permutation(rng, n);
    CHECK(gci(permute(a, p)).value ==
          doctest::Approx(gci(a).value).epsilon(1e-12));
  }
}

TEST_CASE("gci equals the scaled triad log-square sum") {
  Rng rng(59);
  for (int s = 0; s < 1000; ++s) {
    const std::size_t n = 3 + s % 3;
    const auto a = random_inconsistent(rng, n);
    const double direct = gci(a).value;
    const double via_triads = gci_triad_oracle(a);
    CHECK(std::abs(direct - via_triads) <= 1e-9 * std::max(1.0, direct));
  }
}

TEST_CASE("ci_star: zero on consistent, single-triad value, transpose symmetry") {
  CHECK(std::abs(ci_star(ratio124()).value) <= 1e-12);

  // One triad with t = 1/729: t + 1/t - 2.
  const double expected = 1.0 / 729.0 + 729.0 - 2.0;
  CHECK(ci_star(extremes()).value == doctest::Approx(expected).epsilon(1e-12));

  Rng rng(61);
  for (int s = 0; s < 50; ++s) {
    const auto a = random_pcm(3 + s % 3, 9.0, rng);
    CHECK(ci_star(a.transpose()).value ==
          doctest::Approx(ci_star(a).value).epsilon(1e-12));
  }
}

TEST_CASE("i_cd: one on consistent, extremes value, always >= 1") {
  CHECK(i_cd(ratio124()).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(i_cd(extremes()).value == doctest::Approx(729.0).epsilon(1e-12));

  Rng rng(67);
  for (int s = 0; s < 10000; ++s) {
    CHECK(i_cd(random_pcm(3 + s % 3, 9.0, rng)).value >= 1.0);
  }
}

TEST_CASE("k_index: worked pair values and range") {
  CHECK(std::abs(k_index(ratio124()).value) <= 1e-12);
  CHECK(k_index(extremes()).value ==
        doctest::Approx(728.0 / 729.0).epsilon(1e-12));

  const auto k_b = validate(
      {{1.0, 3.0, 9.0}, {1.0 / 3.0, 1.0, 3.0}, {1.0 / 9.0, 1.0 / 3.0, 1.0}});
  // k_b is the consistent member of the pair: K = 0, so the equal-weight
  // mean of the two K values is half of 728/729.
  CHECK(std::abs(k_index(k_b).value) <= 1e-12);
  const double mean = 0.5 * k_index(extremes()).value + 0.5 * k_index(k_b).value;
  CHECK(mean == doctest::Approx(364.0 / 729.0).epsilon(1e-12));
  CHECK(std::abs(mean - 0.5) < 0.005);

  // Their equal-weight aggregate has the single triad product 1/27.
  const auto star = aggregate_pair(extremes(), k_b, 0.5);
  CHECK(k_index(star).value == doctest::Approx(26.0 / 27.0).epsilon(1e-12));
  CHECK(std::abs(k_index(star).value - 0.96) < 0.005);

  Rng rng(71);
  for (int s = 0; s < 2000; ++s) {
    const double v = k_index(random_pcm(3 + s % 3, 9.0, rng)).value;
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("re: zero on consistent, flagged at unanimity, permutation invariant") {
  const auto c = re(ratio124());
  CHECK(std::abs(c.value) <= 1e-12);
  CHECK_FALSE(c.at_indifference);

  const auto u = re(unanimity());
  CHECK(u.value == 0.0);
  CHECK(u.at_indifference);

  Rng rng(73);
  for (int s = 0; s < 50; ++s) {
    const std::size_t n = 3 + s % 3;
    const auto a = random_pcm(n, 9.0, rng);
    const auto p = random_permutation(rng, n);
    CHECK(re(permute(a, p)).value ==
          doctest::Approx(re(a).value).epsilon(1e-12));
    CHECK(re(a).value >= 0.0);
    CHECK(re(a).value <= 1.0);
  }
}

TEST_CASE("re: aggregate of the recorded pair exceeds both members") {
  const auto a =
      validate({{1.0, 4.0, 1.0}, {0.25, 1.0, 1.0}, {1.0, 1.0, 1.0}});
  const auto b =
      validate({{1.0, 2.0, 1.0}, {0.5, 1.0, 7.0}, {1.0, 1.0 / 7.0, 1.0}});
  const double star = re(aggregate_pair(a, b, 0.5)).value;
  CHECK(star > re(a).value);
  CHECK(star > re(b).value);
}

TEST_CASE("hci: unanimity and ratio matrices give zero, extremes positive") {
  CHECK(std::abs(hci(unanimity()).value) <= 1e-15);
  CHECK(std::abs(hci(ratio124()).value) <= 1e-12);
  CHECK(hci(extremes()).value > 0.0);
}

TEST_CASE("gw: zero on consistent, positive on extremes") {
  CHECK(std::abs(gw(unanimity()).value) <= 1e-15);
  CHECK(std::abs(gw(ratio124()).value) <= 1e-12);
  CHECK(gw(extremes()).value > 0.0);
}

TEST_CASE("ni: zero on consistent, linear in gamma") {
  CHECK(std::abs(ni(ratio124()).value) <= 1e-12);
  const auto a = extremes();
  CHECK(ni(a, 9.0, 2.0).value ==
        doctest::Approx(2.0 * ni(a, 9.0, 1.0).value).epsilon(1e-12));
  CHECK_THROWS_AS(ni(a, 9.0, 0.0), PcmError);
}

TEST_CASE("i_m: published values for the 4x4 single-judgment pair") {
  CHECK(std::abs(i_m(ratio124()).value) <= 1e-12);

  const auto a = validate({{1.0, 4.0, 1.0, 1.0},
                           {0.25, 1.0, 1.0, 1.0},
                           {1.0, 1.0, 1.0, 1.0},
                           {1.0, 1.0, 1.0, 1.0}});
  const auto b = validate({{1.0, 1.0, 1.0, 1.0},
                           {1.0, 1.0, 1.0, 1.0},
                           {1.0, 1.0, 1.0, 4.0},
                           {1.0, 1.0, 0.25, 1.0}});
  // Two triads carry |ln 4| each and the min term is 0.
  CHECK(i_m(a).value == doctest::Approx(2.0 * std::log(4.0)).epsilon(1e-12));
  CHECK(i_m(b).value == doctest::Approx(2.0 * std::log(4.0)).epsilon(1e-12));

  // The element-wise geometric mean spreads ln 2 over all four triads and
  // the min term becomes ln 2 as well.
  const auto star = aggregate_pair(a, b, 0.5);
  CHECK(i_m(star).value == doctest::Approx(5.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(std::abs(i_m(star).value - 3.46574) <= 1e-4);
}

TEST_CASE("evaluate dispatches and reports the consistent value") {
  const auto c = ratio124();
  for (const IndexKind kind : all_index_kinds) {
    const auto v = evaluate(kind, c);
    CHECK(v.kind == kind);
    CHECK(std::abs(v.value - consistent_value(kind)) <= 1e-10);
  }
  CHECK(evaluate(IndexKind::i_cd, c).value == doctest::Approx(1.0));
}

TEST_CASE("index ids parse case-insensitively") {
  CHECK(parse_index_kind("CI") == IndexKind::ci);
  CHECK(parse_index_kind("CiStar") == IndexKind::ci_star);
  CHECK(parse_index_kind("icd") == IndexKind::i_cd);
  CHECK(parse_index_kind("IM") == IndexKind::i_m);
  CHECK_FALSE(parse_index_kind("c3").has_value());
  for (const IndexKind kind : all_index_kinds) {
    CHECK(parse_index_kind(index_id(kind)) == kind);
  }
}

TEST_CASE("every index attains its consistent value exactly on consistent "
          "samples and departs on inconsistent ones") {
  Rng rng(79);
  for (int s = 0; s < 1000; ++s) {
    const std::size_t n = 3 + s % 3;
    const auto c = random_consistent(rng, n);
    const auto a = random_inconsistent(rng, n);
    for (const IndexKind kind : all_index_kinds) {
      const double nu = consistent_value(kind);
      CHECK(std::abs(evaluate(kind, c).value - nu) <= 1e-9);
      CHECK(std::abs(evaluate(kind, a).value - nu) > 1e-6);
      CHECK(evaluate(kind, a).value >= nu - 1e-10);
    }
  }
}

TEST_CASE("permutation invariance holds for every index") {
  Rng rng(83);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 3 + s % 2;
    const auto a = random_pcm(n, 9.0, rng);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    do {
      const auto moved = permute(a, Permutation(idx));
      for (const IndexKind kind : all_index_kinds) {
        CHECK(std::abs(evaluate(kind, moved).value -
                       evaluate(kind, a).value) <= 1e-9);
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}

TEST_CASE("spectral radius inequality on reciprocal pairs") {
  Rng rng(89);
  for (int s = 0; s < 10000; ++s) {
    const std::size_t n = 3 + s % 3;
    const std::array<SquareMatrix, 2> ms = {random_pcm(n, 9.0, rng).dense(),
                                            random_pcm(n, 9.0, rng).dense()};
    CHECK(elsner_check(ms, SimplexWeights::pair(rng.uniform01())));
  }
}

TEST_CASE("power iteration flags non-positive input") {
  SquareMatrix m(3, 1.0);
  m(1, 2) = 0.0;
  CHECK_THROWS_AS(dominant_eigenvalue(m), PcmError);
}

}  // TEST_SUITE
