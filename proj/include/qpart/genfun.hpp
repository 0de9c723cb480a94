#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qpart/series.hpp"
#include "qpart/types.hpp"

namespace qpart {

/* Parameters of the smallest-part comparison series.  k defaults to L.
 * Specs with L <= s are still computable from the closed forms but sit
 * outside the hypotheses under which the combinatorial reading of H holds. */
struct SeriesSpec {
  std::int64_t L = 1;
  std::int64_t s = 1;
  std::optional<std::int64_t> k;

  std::int64_t k_or_L() const { return k.value_or(L); }
  bool outside_theorem_hypotheses() const { return L <= s; }
};

/* H_{L,s,k}(q) = q^s (1 - q^k) / (q^s; q)_{L+1} - (1/(q^{s+1}; q)_L - 1),
 * truncated at the given order.  At k = L and L >= s+1 the coefficient of
 * q^N counts partitions of N with smallest part s, parts <= L+s and no part
 * equal to L, minus the nonempty partitions of N with parts in
 * {s+1, ..., L+s}. */
TruncatedSeries h_closed(const SeriesSpec& spec, std::int64_t order);

/* The same coefficient obtained by streaming both weight classes through the
 * partition enumerator.  Requires L >= s+1 (the set reading needs it). */
Int h_comb(std::int64_t L, std::int64_t s, std::int64_t N);

/* Set sizes behind h_comb, by dynamic programming (independent route). */
Int count_set_I(std::int64_t L, std::int64_t s, std::int64_t N);
Int count_set_D(std::int64_t L, std::int64_t s, std::int64_t N);

/* G_{L,s}(q) = H_{L,s,L}(q) / (1 - q^L), via the mod-L cumulation. */
TruncatedSeries g_closed(std::int64_t L, std::int64_t s, std::int64_t order);

/* Coefficient of q^N in G_{L,s} by direct enumeration: partitions with
 * smallest part exactly s and largest-minus-smallest <= L, minus those with
 * smallest part >= s+1 under the same spread bound (the latter summed over
 * each smallest-part value up to N). */
Int g_brute(std::int64_t L, std::int64_t s, std::int64_t N);

/* Sparse exponent -> positive coefficient table for the termwise-minimal
 * polynomial p with G + p nonnegative below the truncation order. */
struct CorrectionPolynomial {
  std::map<std::int64_t, Int> terms;

  bool empty() const { return terms.empty(); }
  std::int64_t max_exponent() const;  // -1 when empty
  std::string to_string() const;      // "q^4 + 2 q^16", "0" when empty
  bool operator==(const CorrectionPolynomial&) const = default;
};

/* Exponent n receives max(0, -b_n); minimality is certified only below the
 * truncation order. */
CorrectionPolynomial minimal_correction(std::int64_t L, std::int64_t s,
                                        std::int64_t order);

/* Shape-count rows: the number of partitions of N of a fixed two-variable
 * shape, against the floor lower bound attached to that row.
 *   row 1: (s^10, (s+1)^x, (s+2)^y)            floor((N-10s)/((s+1)(s+2)))
 *   row 2: (s^1,  (s+1)^x, (s+2)^y)            floor((N-s)/((s+1)(s+2)))
 *   row 3: (s^1,  (s+2)^x, (s+3)^y)            floor((N-s)/((s+2)(s+3)))
 *   row 4: (s^1,  (s+1)^x, (s+3)^y)  s even    floor((N-s)/((s+1)(s+3)))
 *   row 5: (s^1,  (s+1)^x, (s+3)^y)  s odd, N odd   floor(2(N-s)/((s+1)(s+3)))
 *   row 6: (s^2,  (s+1)^x, (s+3)^y)  s odd != 1, N even  floor(2(N-2s)/((s+1)(s+3)))
 *   row 7: (1^6,  2^x, 4^y)          s == 1, N even      floor((N-6)/4)
 */
struct TableRowResult {
  std::int64_t count = 0;
  std::int64_t floor_bound = 0;
};
TableRowResult table_row_count(int row, std::int64_t s, std::int64_t N);

/* A quantity that is either materialized exactly or carried as a log10
 * estimate when its digit count exceeds the configured cap. */
struct BigOrLog {
  std::optional<Int> exact;
  std::int64_t exact_digits = -1;   // exact decimal digit count when present
  double log10_estimate = 0.0;      // always populated
};

struct BoundsReport {
  std::int64_t L = 0;
  std::int64_t s = 0;
  Int P;                      // (s+1)(s+2)...(s+L)
  BigOrLog gamma;             // gamma(L, s)
  BigOrLog big_gamma;         // Gamma(s) = gamma(3s+2, s)
  std::optional<Int> ln_delta_exact;  // 3 * Gamma(s) when Gamma is exact
  double log10_of_ln_delta = 0.0;     // log10(3 * Gamma(s))
  std::string delta_prime_note;       // log-of-log scale summary
  std::int64_t N_L = 0;               // L^2 + 10L + 7
  std::string eta_status;             // symbolic-only marker
};

/* Default digit cap keeps s = 1 exact (about 7.4e6 digits) and pushes every
 * s >= 2 to the log scale. */
BoundsReport bounds(std::int64_t L, std::int64_t s,
                    std::int64_t digit_cap = 100000000);

}  // namespace qpart
