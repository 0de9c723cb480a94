#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "qpart/genfun.hpp"
#include "qpart/partition.hpp"
#include "qpart/series.hpp"

using namespace qpart;

namespace {

CorrectionPolynomial poly_of(std::initializer_list<std::pair<std::int64_t, int>> terms) {
  CorrectionPolynomial p;
  for (const auto& [e, c] : terms) p.terms[e] = c;
  return p;
}

}  // namespace

TEST_CASE("h_closed leading behavior") {
  for (std::int64_t s : {1, 2, 3, 5}) {
    for (std::int64_t L : {1, 2, 4, 9}) {
      const TruncatedSeries h = h_closed({L, s, L}, s + 2);
      for (std::int64_t n = 0; n < s; ++n) CHECK(h.coeff(n) == 0);
      CHECK(h.coeff(s) == 1);
    }
  }
  // distinct k: the same leading term
  CHECK(h_closed({5, 3, 8}, 5).coeff(3) == 1);
}

TEST_CASE("h_closed equals the two-set difference") {
  CHECK(h_closed({5, 3, 5}, 6).coeff(4) == -1);
  CHECK(h_comb(5, 3, 4) == -1);
  CHECK(h_comb(5, 3, 3) == 1);   // (3) in the codomain, nothing in the domain
  CHECK(h_comb(22, 3, 21) >= 1);
  CHECK_THROWS_AS(h_comb(3, 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(h_comb(2, 3, 10), std::invalid_argument);

  // DP route agrees with the enumeration route
  for (std::int64_t L : {4, 5, 7}) {
    for (std::int64_t N = 1; N <= 40; ++N) {
      CHECK(h_comb(L, 3, N) == count_set_I(L, 3, N) - count_set_D(L, 3, N));
    }
  }
}

TEST_CASE("small-N coefficients are independent of L and negative on a fixed set") {
  const std::set<std::int64_t> negatives{4, 5, 8, 10, 12, 14, 16};
  for (std::int64_t N = 1; N <= 20; ++N) {
    const Int a = h_comb(std::max<std::int64_t>(4, N + 1), 3, N);
    // the largest-part condition is superfluous once L >= N+1
    CHECK(h_comb(std::max<std::int64_t>(4, N + 2), 3, N) == a);
    CHECK(h_comb(25, 3, N) == a);
    CHECK(h_closed({N + 1, 3, N + 1}, N + 2).coeff(N) == a);
    if (negatives.contains(N))
      CHECK(a == -1);
    else
      CHECK(a >= 0);
  }
}

TEST_CASE("g_closed against direct enumeration") {
  CHECK(g_brute(10, 3, 4) == -1);
  // G at N = s is 1 for every (L, s)
  for (std::int64_t s : {1, 2, 3, 4}) {
    for (std::int64_t L : {1, 2, 5}) {
      CHECK(g_brute(L, s, s) == 1);
      CHECK(g_closed(L, s, s + 1).coeff(s) == 1);
    }
  }
  // dual-oracle sweep, light version (the acceptance suite runs the full one)
  for (std::int64_t s = 1; s <= 3; ++s) {
    for (std::int64_t L = 1; L <= s + 4; ++L) {
      const TruncatedSeries g = g_closed(L, s, 41);
      for (std::int64_t N = 1; N <= 40; ++N) CHECK(g.coeff(N) == g_brute(L, s, N));
    }
  }
}

TEST_CASE("g = h / (1 - q^L) identity") {
  for (std::int64_t s = 1; s <= 4; ++s) {
    for (std::int64_t L = 1; L <= s + 5; ++L) {
      const std::int64_t T = 160;
      const TruncatedSeries h = h_closed({L, s, L}, T);
      const TruncatedSeries g = g_closed(L, s, T);
      const TruncatedSeries one_minus_qL = combine(
          TruncatedSeries::one(T), TruncatedSeries::monomial(L, T), SeriesOp::sub);
      CHECK(combine(g, one_minus_qL, SeriesOp::mul) == h);
      // b_n via the explicit mod-L sum of h coefficients
      for (std::int64_t n = 0; n < T; ++n) {
        Int b = 0;
        for (std::int64_t m = n % L; m <= n; m += L) b += h.coeff(m);
        CHECK(g.coeff(n) == b);
      }
    }
  }
}

TEST_CASE("minimal corrections") {
  CHECK(minimal_correction(10, 3, 500) ==
        poly_of({{4, 1}, {5, 1}, {8, 1}, {10, 1}, {12, 1}, {14, 1}, {16, 1}}));
  CHECK(minimal_correction(5, 2, 500) == poly_of({{3, 1}}));
  CHECK(minimal_correction(7, 1, 500).empty());
  CHECK(minimal_correction(7, 1, 500).to_string() == "0");
  CHECK(minimal_correction(10, 3, 500).max_exponent() == 16);

  const auto fn = first_negative(g_closed(10, 3, 100));
  REQUIRE(fn.has_value());
  CHECK(fn->index == 4);
  CHECK(fn->value == -1);

  // adding the correction clears every negative below the order
  for (std::int64_t L : {4, 5, 10}) {
    const TruncatedSeries g = g_closed(L, 3, 300);
    TruncatedSeries fixed = g;
    for (const auto& [e, c] : minimal_correction(L, 3, 300).terms)
      fixed.coeff(e) += c;
    CHECK(!first_negative(fixed).has_value());
  }
}

TEST_CASE("table_row_count") {
  const TableRowResult r1 = table_row_count(1, 3, 100);
  CHECK(r1.count == 4);
  CHECK(r1.floor_bound == 3);

  const TableRowResult r3 = table_row_count(3, 3, 3);
  CHECK(r3.count == 1);
  CHECK(r3.floor_bound == 0);

  const TableRowResult r7 = table_row_count(7, 1, 20);
  CHECK(r7.count == 4);
  CHECK(r7.floor_bound == 3);

  CHECK_THROWS_AS(table_row_count(4, 3, 40), std::invalid_argument);  // s odd
  CHECK_THROWS_AS(table_row_count(5, 3, 40), std::invalid_argument);  // N even
  CHECK_THROWS_AS(table_row_count(6, 1, 40), std::invalid_argument);  // s = 1
  CHECK_THROWS_AS(table_row_count(7, 2, 40), std::invalid_argument);
  CHECK_THROWS_AS(table_row_count(8, 1, 40), std::invalid_argument);

  // bracket property plus the cross-row floor comparison
  for (int row = 1; row <= 7; ++row) {
    for (std::int64_t s : {1, 2, 3, 5}) {
      if (row == 4 && s % 2 != 0) continue;
      if ((row == 5 || row == 6) && (s % 2 == 0)) continue;
      if (row == 6 && s == 1) continue;
      if (row == 7 && s != 1) continue;
      const std::int64_t pinned = (row == 1 ? 10 : row == 6 ? 2 : row == 7 ? 6 : 1);
      const std::int64_t start = (row == 7) ? 6 : pinned * s;
      const std::int64_t step = (row >= 5) ? 2 : 1;
      for (std::int64_t N = start; N <= start + 40 * step; N += step) {
        const TableRowResult r = table_row_count(row, s, N);
        CHECK(r.count >= r.floor_bound);
        CHECK(r.count - r.floor_bound <= 1);
        if (N >= 10 * s) {
          const std::int64_t base = (N - 10 * s) / ((s + 2) * (s + 3));
          CHECK(r.floor_bound >= base);
        }
      }
    }
  }
}

TEST_CASE("bounds quantities") {
  const BoundsReport r = bounds(5, 1, /*digit_cap=*/100);
  CHECK(r.P == 720);
  CHECK(r.N_L == 82);
  CHECK(!r.gamma.exact.has_value());  // capped out
  // digit estimate of Gamma(1): the dominant factor is 720^2591997
  const double expect = std::log10(20.0) + 2591997.0 * std::log10(720.0);
  CHECK(r.big_gamma.log10_estimate == doctest::Approx(expect).epsilon(1e-9));
  CHECK(r.big_gamma.log10_estimate > 7.40e6);
  CHECK(r.big_gamma.log10_estimate < 7.41e6);
  CHECK(r.log10_of_ln_delta ==
        doctest::Approx(std::log10(3.0) + expect).epsilon(1e-9));
  CHECK(r.eta_status.find("symbolic-only") == 0);

  CHECK(bounds(7, 3).N_L == 126);

  // small enough to materialize: gamma(2, 1) = 5 * (6^72 + 68 * 6)
  const BoundsReport tiny = bounds(2, 1);
  REQUIRE(tiny.gamma.exact.has_value());
  Int direct;
  mpz_ui_pow_ui(direct.get_mpz_t(), 6, 72);
  direct = 5 * (direct + 68 * 6);
  CHECK(*tiny.gamma.exact == direct);
  // exact digit count within a digit of the estimate
  const double est = tiny.gamma.log10_estimate;
  CHECK(std::abs(static_cast<double>(tiny.gamma.exact_digits) - (est + 1.0)) <=
        1.0 + est * 1e-6);

  // s >= 2 stays in log scale without erroring
  const BoundsReport s2 = bounds(8, 2);
  CHECK(!s2.big_gamma.exact.has_value());
  CHECK(s2.big_gamma.log10_estimate > 1e13);
}

TEST_CASE("series spec hypotheses flag") {
  CHECK(SeriesSpec{3, 3, {}}.outside_theorem_hypotheses());
  CHECK(!SeriesSpec{4, 3, {}}.outside_theorem_hypotheses());
  CHECK(SeriesSpec{5, 3, {}}.k_or_L() == 5);
  CHECK(SeriesSpec{5, 3, 7}.k_or_L() == 7);
}
