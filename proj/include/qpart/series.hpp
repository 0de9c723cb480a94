#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qpart/types.hpp"

namespace qpart {

/* Dense formal power series in q with exact integer coefficients, truncated
 * at a fixed order T: index n holds the coefficient of q^n for 0 <= n < T.
 * Values are immutable in spirit; every operation returns a fresh series.
 * Arithmetic between series of different orders truncates to the smaller
 * order rather than erroring, since coefficient tables of different lengths
 * are routinely compared. */
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::int64_t order);
  static TruncatedSeries one(std::int64_t order);
  static TruncatedSeries monomial(std::int64_t degree, std::int64_t order,
                                  Int coefficient = 1);

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()); }
  const Int& coeff(std::int64_t n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Int& coeff(std::int64_t n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  TruncatedSeries truncated(std::int64_t new_order) const;
  Int evaluate_at_one() const;
  bool is_zero() const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<Int> coeffs_;
};

enum class SeriesOp { add, sub, mul };

/* Coefficient-wise add/sub or truncated convolution.  The result order is
 * min(a.order(), b.order()). */
TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b,
                        SeriesOp op);

TruncatedSeries negate(const TruncatedSeries& a);

/* Multiply by q^k, dropping coefficients pushed past the order. */
TruncatedSeries shifted(const TruncatedSeries& a, std::int64_t k);

/* 1/(q^m; q)_n mod q^T: the generating series for partitions with all parts
 * in {m, ..., m+n-1}, built as the product of the geometric expansions of
 * 1/(1 - q^j) for j = m .. m+n-1. */
TruncatedSeries inv_pochhammer(std::int64_t m, std::int64_t n,
                               std::int64_t order);

/* The polynomial (q^m; q)_n = (1-q^m)(1-q^{m+1})...(1-q^{m+n-1}) mod q^T. */
TruncatedSeries pochhammer(std::int64_t m, std::int64_t n, std::int64_t order);

struct QBinomial {
  std::int64_t upper = 0;
  std::int64_t lower = 0;
  TruncatedSeries poly{1};
};

/* Exact Gaussian binomial [upper choose lower]_q via the integer Pascal
 * recurrence (no rational intermediates).  Requires lower <= upper and
 * lower*(upper-lower) < order so the polynomial fits untruncated. */
QBinomial q_binomial(std::int64_t upper, std::int64_t lower,
                     std::int64_t order);

/* Multiply by 1/(1 - q^L): output coefficient b_n is the sum of a_m over
 * m <= n with m congruent to n mod L. */
TruncatedSeries cumulate_mod_L(const TruncatedSeries& h, std::int64_t L);

struct NegativeCoeff {
  std::int64_t index;
  Int value;
  bool operator==(const NegativeCoeff&) const = default;
};

/* Smallest n with a negative coefficient, together with that coefficient;
 * absent when the series is nonnegative below its order. */
std::optional<NegativeCoeff> first_negative(const TruncatedSeries& s);

}  // namespace qpart
