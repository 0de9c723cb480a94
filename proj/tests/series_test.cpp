#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "qpart/series.hpp"

using namespace qpart;

namespace {

/* Brute-force oracle: number of partitions of n with all parts in
 * [lo, hi], by bare recursion.  Kept independent of the series code. */
std::int64_t count_parts_in_range(std::int64_t n, std::int64_t lo,
                                  std::int64_t hi) {
  if (n == 0) return 1;
  if (n < lo) return 0;
  std::int64_t total = 0;
  for (std::int64_t p = lo; p <= std::min(n, hi); ++p)
    total += count_parts_in_range(n - p, p, hi);
  return total;
}

/* Oracle for the Gaussian binomial: partitions of w fitting in a
 * lower-by-(upper-lower) box. */
std::int64_t count_in_box(std::int64_t w, std::int64_t rows,
                          std::int64_t width) {
  if (w == 0) return 1;
  if (rows == 0 || w < 0) return 0;
  std::int64_t total = 0;
  for (std::int64_t first = 1; first <= width; ++first)
    total += count_in_box(w - first, rows - 1, first);
  return total;
}

TruncatedSeries from_list(std::vector<long> values) {
  TruncatedSeries s(static_cast<std::int64_t>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    s.coeff(static_cast<std::int64_t>(i)) = values[i];
  return s;
}

struct Lcg {
  std::uint64_t state;
  std::int64_t next(std::int64_t lo, std::int64_t hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<std::int64_t>((state >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

TruncatedSeries random_series(Lcg& rng, std::int64_t order) {
  TruncatedSeries s(order);
  for (std::int64_t n = 0; n < order; ++n) s.coeff(n) = rng.next(-9, 9);
  return s;
}

}  // namespace

TEST_CASE("combine basics") {
  const TruncatedSeries one_plus_q = from_list({1, 1, 0});
  const TruncatedSeries square = combine(one_plus_q, one_plus_q, SeriesOp::mul);
  CHECK(square == from_list({1, 2, 1}));

  const TruncatedSeries s = from_list({3, -1, 4, 1});
  CHECK(combine(s, negate(s), SeriesOp::add).is_zero());

  // orders mix to the minimum
  CHECK(combine(from_list({1, 2, 3, 4}), from_list({1, 1}), SeriesOp::add).order() == 2);
}

TEST_CASE("inv_pochhammer matches partition counts") {
  CHECK(inv_pochhammer(1, 1, 4) == from_list({1, 1, 1, 1}));

  const TruncatedSeries s34 = inv_pochhammer(3, 2, 9);
  const std::vector<long> expected{1, 0, 0, 1, 1, 0, 1, 1, 1};
  CHECK(s34 == from_list(expected));
  for (std::int64_t n = 0; n < 9; ++n)
    CHECK(s34.coeff(n) == count_parts_in_range(n, 3, 4));

  // (1 - q^3) * 1/(q^3; q)_1 = 1
  const TruncatedSeries one_minus_q3 =
      combine(TruncatedSeries::one(10), TruncatedSeries::monomial(3, 10), SeriesOp::sub);
  CHECK(combine(one_minus_q3, inv_pochhammer(3, 1, 10), SeriesOp::mul) ==
        TruncatedSeries::one(10));
}

TEST_CASE("pochhammer inverts inv_pochhammer") {
  for (std::int64_t m = 1; m <= 8; ++m)
    for (std::int64_t n = 1; n <= 8; ++n)
      CHECK(combine(inv_pochhammer(m, n, 64), pochhammer(m, n, 64), SeriesOp::mul) ==
            TruncatedSeries::one(64));
}

TEST_CASE("q_binomial") {
  CHECK(q_binomial(2, 1, 8).poly == from_list({1, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(q_binomial(4, 2, 8).poly == from_list({1, 1, 2, 1, 1, 0, 0, 0}));
  CHECK(q_binomial(5, 0, 4).poly == TruncatedSeries::one(4));

  // box-count oracle
  const QBinomial b = q_binomial(7, 3, 64);
  for (std::int64_t w = 0; w <= 12; ++w)
    CHECK(b.poly.coeff(w) == count_in_box(w, 3, 4));

  CHECK_THROWS_AS(q_binomial(3, 4, 64), std::invalid_argument);
  CHECK_THROWS_AS(q_binomial(10, 5, 10), std::invalid_argument);
}

TEST_CASE("q_binomial symmetry and evaluation") {
  for (std::int64_t a = 0; a <= 12; ++a) {
    for (std::int64_t b = 0; b <= a; ++b) {
      const QBinomial lhs = q_binomial(a, b, 64);
      const QBinomial rhs = q_binomial(a, a - b, 64);
      CHECK(lhs.poly == rhs.poly);

      // coefficients nonnegative and symmetric about b(a-b)/2
      const std::int64_t deg = b * (a - b);
      for (std::int64_t i = 0; i <= deg; ++i) {
        CHECK(lhs.poly.coeff(i) >= 0);
        CHECK(lhs.poly.coeff(i) == lhs.poly.coeff(deg - i));
      }

      Int binom = 1;
      for (std::int64_t i = 0; i < b; ++i) {
        binom *= a - i;
        binom /= i + 1;
      }
      CHECK(lhs.poly.evaluate_at_one() == binom);
    }
  }
}

TEST_CASE("cumulate_mod_L") {
  CHECK(cumulate_mod_L(TruncatedSeries::one(6), 2) ==
        from_list({1, 0, 1, 0, 1, 0}));

  Lcg rng{7};
  for (int rep = 0; rep < 20; ++rep) {
    const std::int64_t T = rng.next(4, 40);
    const std::int64_t L = rng.next(1, 6);
    const TruncatedSeries s = random_series(rng, T);
    const TruncatedSeries c = cumulate_mod_L(s, L);
    // definitional restatement: b_n is the stride-L prefix sum
    for (std::int64_t n = 0; n < T; ++n) {
      Int expect = 0;
      for (std::int64_t m = n % L; m <= n; m += L) expect += s.coeff(m);
      CHECK(c.coeff(n) == expect);
    }
    const TruncatedSeries one_minus_qL =
        combine(TruncatedSeries::one(T), TruncatedSeries::monomial(L, T), SeriesOp::sub);
    CHECK(combine(c, one_minus_qL, SeriesOp::mul) == s);
  }
}

TEST_CASE("first_negative") {
  CHECK(first_negative(from_list({1, 1, 0, -1})) == NegativeCoeff{3, Int(-1)});
  CHECK(!first_negative(TruncatedSeries(5)).has_value());
}

TEST_CASE("ring laws on truncations") {
  Lcg rng{99};
  for (int rep = 0; rep < 30; ++rep) {
    const std::int64_t T = rng.next(2, 24);
    const TruncatedSeries a = random_series(rng, T);
    const TruncatedSeries b = random_series(rng, T);
    const TruncatedSeries c = random_series(rng, T);
    CHECK(combine(a, b, SeriesOp::add) == combine(b, a, SeriesOp::add));
    CHECK(combine(a, b, SeriesOp::mul) == combine(b, a, SeriesOp::mul));
    CHECK(combine(combine(a, b, SeriesOp::mul), c, SeriesOp::mul) ==
          combine(a, combine(b, c, SeriesOp::mul), SeriesOp::mul));
    CHECK(combine(a, combine(b, c, SeriesOp::add), SeriesOp::mul) ==
          combine(combine(a, b, SeriesOp::mul), combine(a, c, SeriesOp::mul),
                  SeriesOp::add));
  }
}
