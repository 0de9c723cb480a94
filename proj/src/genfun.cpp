#include "qpart/genfun.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qpart/partition.hpp"

namespace qpart {

TruncatedSeries h_closed(const SeriesSpec& spec, std::int64_t order) {
  if (spec.L < 1 || spec.s < 1 || spec.k_or_L() < 1)
    throw std::invalid_argument("h_closed needs positive L, s, k");
  if (order < 1) throw std::invalid_argument("h_closed needs order >= 1");
  const std::int64_t L = spec.L, s = spec.s, k = spec.k_or_L();

  const TruncatedSeries a = inv_pochhammer(s, L + 1, order);
  // q^s (1 - q^k) * a, as two shifts
  const TruncatedSeries head =
      combine(shifted(a, s), shifted(a, s + k), SeriesOp::sub);
  const TruncatedSeries c = inv_pochhammer(s + 1, L, order);
  const TruncatedSeries tail =
      combine(c, TruncatedSeries::one(order), SeriesOp::sub);
  return combine(head, tail, SeriesOp::sub);
}

Int count_set_I(std::int64_t L, std::int64_t s, std::int64_t N) {
  if (L < s + 1) throw std::invalid_argument("count_set_I needs L >= s+1");
  PartitionConstraint c;
  c.weight = N;
  c.min_part = s;
  c.max_part = L + s;
  c.exact_smallest = s;
  c.forbidden = {L};
  return count(c);
}

Int count_set_D(std::int64_t L, std::int64_t s, std::int64_t N) {
  if (N == 0) return 0;  // the set is restricted to nonempty partitions
  PartitionConstraint c;
  c.weight = N;
  c.min_part = s + 1;
  c.max_part = L + s;
  return count(c);
}

Int h_comb(std::int64_t L, std::int64_t s, std::int64_t N) {
  if (L <= s)
    throw std::invalid_argument(
        "h_comb needs L >= s+1: the set reading of the coefficient is not "
        "available otherwise");
  if (N < 1) throw std::invalid_argument("h_comb needs N >= 1");

  PartitionConstraint ci;
  ci.weight = N;
  ci.min_part = s;
  ci.max_part = L + s;
  ci.exact_smallest = s;
  ci.forbidden = {L};
  PartitionConstraint cd;
  cd.weight = N;
  cd.min_part = s + 1;
  cd.max_part = L + s;
  return Int(count_by_enumeration(ci)) - Int(count_by_enumeration(cd));
}

TruncatedSeries g_closed(std::int64_t L, std::int64_t s, std::int64_t order) {
  return cumulate_mod_L(h_closed({L, s, L}, order), L);
}

Int g_brute(std::int64_t L, std::int64_t s, std::int64_t N) {
  if (L < 1 || s < 1) throw std::invalid_argument("g_brute needs L, s >= 1");
  if (N < 0) throw std::invalid_argument("g_brute needs N >= 0");
  auto exact_smallest_count = [&](std::int64_t sp) {
    PartitionConstraint c;
    c.weight = N;
    c.min_part = sp;
    c.max_part = sp + L;
    c.exact_smallest = sp;
    return count_by_enumeration(c);
  };
  Int total = exact_smallest_count(s);
  // Partitions of N have smallest part <= N, so the sum over smallest-part
  // values s' >= s+1 is finite.
  for (std::int64_t sp = s + 1; sp <= N; ++sp) total -= exact_smallest_count(sp);
  return total;
}

std::int64_t CorrectionPolynomial::max_exponent() const {
  return terms.empty() ? -1 : terms.rbegin()->first;
}

std::string CorrectionPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, coeff] : terms) {
    if (!first) out << " + ";
    if (coeff != 1) out << coeff.get_str() << ' ';
    out << "q^" << exp;
    first = false;
  }
  return out.str();
}

CorrectionPolynomial minimal_correction(std::int64_t L, std::int64_t s,
                                        std::int64_t order) {
  const TruncatedSeries g = g_closed(L, s, order);
  CorrectionPolynomial p;
  for (std::int64_t n = 0; n < order; ++n)
    if (g.coeff(n) < 0) p.terms[n] = -g.coeff(n);
  return p;
}

namespace {

struct RowShape {
  std::int64_t s_mult;  // multiplicity of the pinned smallest part s
  std::int64_t a, b;    // remaining two part sizes
};

RowShape row_shape(int row, std::int64_t s) {
  switch (row) {
    case 1: return {10, s + 1, s + 2};
    case 2: return {1, s + 1, s + 2};
    case 3: return {1, s + 2, s + 3};
    case 4: return {1, s + 1, s + 3};
    case 5: return {1, s + 1, s + 3};
    case 6: return {2, s + 1, s + 3};
    case 7: return {6, 2, 4};
    default: throw std::invalid_argument("table_row_count: row must be 1..7");
  }
}

}  // namespace

TableRowResult table_row_count(int row, std::int64_t s, std::int64_t N) {
  if (s < 1) throw std::invalid_argument("table_row_count needs s >= 1");
  switch (row) {
    case 4:
      if (s % 2 != 0) throw std::invalid_argument("row 4 needs s even");
      break;
    case 5:
      if (s % 2 == 0 || N % 2 == 0)
        throw std::invalid_argument("row 5 needs s odd and N odd");
      break;
    case 6:
      if (s % 2 == 0 || s == 1 || N % 2 != 0)
        throw std::invalid_argument("row 6 needs s odd, s != 1, N even");
      break;
    case 7:
      if (s != 1 || N % 2 != 0)
        throw std::invalid_argument("row 7 needs s = 1 and N even");
      break;
    default:
      break;
  }

  const RowShape shape = row_shape(row, s);
  const std::int64_t n = N - shape.s_mult * s;
  if (n < 0)
    throw std::invalid_argument("table_row_count: N below the pinned-part weight");

  std::int64_t count = 0;
  for (std::int64_t x = 0; shape.a * x <= n; ++x)
    if ((n - shape.a * x) % shape.b == 0) ++count;

  std::int64_t floor_bound = 0;
  switch (row) {
    case 1: floor_bound = (N - 10 * s) / ((s + 1) * (s + 2)); break;
    case 2: floor_bound = (N - s) / ((s + 1) * (s + 2)); break;
    case 3: floor_bound = (N - s) / ((s + 2) * (s + 3)); break;
    case 4: floor_bound = (N - s) / ((s + 1) * (s + 3)); break;
    case 5: floor_bound = 2 * (N - s) / ((s + 1) * (s + 3)); break;
    case 6: floor_bound = 2 * (N - 2 * s) / ((s + 1) * (s + 3)); break;
    case 7: floor_bound = (N - 6) / 4; break;
  }
  return {count, floor_bound};
}

namespace {

double log10_of(const Int& v) {
  signed long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log10(mant) + static_cast<double>(exp2) * std::log10(2.0);
}

std::int64_t exact_digit_count(const Int& v) {
  // sizeinbase returns the digit count or one more; settle it by comparing
  // against the smaller power of ten.
  const std::size_t d = mpz_sizeinbase(v.get_mpz_t(), 10);
  if (d <= 1) return 1;
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(d - 1));
  return v >= pow10 ? static_cast<std::int64_t>(d)
                    : static_cast<std::int64_t>(d) - 1;
}

/* gamma(L, s) = (sum of the L parts) * (P^e + c*P) with
 * e = (P^2 - 1)L + 2 and c = (P^2 - 1)L - 2. */
BigOrLog gamma_quantity(std::int64_t L, std::int64_t s,
                        std::int64_t digit_cap) {
  Int P = 1;
  for (std::int64_t i = 1; i <= L; ++i) P *= Int(s + i);
  const Int part_sum = Int(L) * s + Int(L) * (L + 1) / 2;
  const Int e = (P * P - 1) * L + 2;
  const Int c = (P * P - 1) * L - 2;

  const double log10_P = log10_of(P);
  const double log10_dominant = log10_of(part_sum) + e.get_d() * log10_P;

  BigOrLog out;
  out.log10_estimate = log10_dominant;
  if (log10_dominant + 1.0 <= static_cast<double>(digit_cap) && e.fits_ulong_p()) {
    Int power;
    mpz_pow_ui(power.get_mpz_t(), P.get_mpz_t(), e.get_ui());
    out.exact = part_sum * (power + c * P);
    out.exact_digits = exact_digit_count(*out.exact);
  }
  return out;
}

}  // namespace

BoundsReport bounds(std::int64_t L, std::int64_t s, std::int64_t digit_cap) {
  if (L < 1 || s < 1) throw std::invalid_argument("bounds needs L, s >= 1");
  BoundsReport r;
  r.L = L;
  r.s = s;
  r.P = 1;
  for (std::int64_t i = 1; i <= L; ++i) r.P *= Int(s + i);
  r.gamma = gamma_quantity(L, s, digit_cap);
  r.big_gamma = gamma_quantity(3 * s + 2, s, digit_cap);
  if (r.big_gamma.exact) r.ln_delta_exact = 3 * *r.big_gamma.exact;
  r.log10_of_ln_delta = std::log10(3.0) + r.big_gamma.log10_estimate;
  {
    // delta'(s) = 10s + (s+2)(s+3)(delta(s)+1) with ln delta = 3 Gamma(s), so
    // log10(delta') ~ 3 Gamma / ln 10 and only its own log10 is printable.
    std::ostringstream note;
    note << "log10(log10(delta')) ~= "
         << std::log10(3.0 / std::log(10.0)) + r.big_gamma.log10_estimate;
    r.delta_prime_note = note.str();
  }
  r.N_L = L * L + 10 * L + 7;
  r.eta_status =
      "symbolic-only: eta_1..eta_3 require summing |a_n| for all n below "
      "Gamma(s)";
  return r;
}

}  // namespace qpart
