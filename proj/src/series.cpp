#include "qpart/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpart {

TruncatedSeries::TruncatedSeries(std::int64_t order) {
  if (order < 1) throw std::invalid_argument("series order must be positive");
  coeffs_.assign(static_cast<std::size_t>(order), Int(0));
}

TruncatedSeries TruncatedSeries::one(std::int64_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::int64_t degree,
                                          std::int64_t order,
                                          Int coefficient) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  TruncatedSeries s(order);
  if (degree < order) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(coefficient);
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t new_order) const {
  if (new_order < 1 || new_order > order())
    throw std::invalid_argument("bad truncation order");
  TruncatedSeries s(new_order);
  std::copy(coeffs_.begin(), coeffs_.begin() + new_order, s.coeffs_.begin());
  return s;
}

Int TruncatedSeries::evaluate_at_one() const {
  Int total = 0;
  for (const Int& c : coeffs_) total += c;
  return total;
}

bool TruncatedSeries::is_zero() const {
  for (const Int& c : coeffs_)
    if (c != 0) return false;
  return true;
}

namespace {

std::size_t nonzero_count(const TruncatedSeries& s) {
  std::size_t n = 0;
  for (const Int& c : s.coeffs())
    if (c != 0) ++n;
  return n;
}

}  // namespace

TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b,
                        SeriesOp op) {
  const std::int64_t t = std::min(a.order(), b.order());
  TruncatedSeries r(t);
  switch (op) {
    case SeriesOp::add:
      for (std::int64_t n = 0; n < t; ++n) r.coeff(n) = a.coeff(n) + b.coeff(n);
      break;
    case SeriesOp::sub:
      for (std::int64_t n = 0; n < t; ++n) r.coeff(n) = a.coeff(n) - b.coeff(n);
      break;
    case SeriesOp::mul: {
      // Loop over the operand with fewer nonzero coefficients on the outside
      // so that multiplying by a sparse polynomial stays cheap.
      const bool b_outer = nonzero_count(b) <= nonzero_count(a);
      const TruncatedSeries& outer = b_outer ? b : a;
      const TruncatedSeries& inner = b_outer ? a : b;
      for (std::int64_t j = 0; j < t; ++j) {
        const Int& cj = outer.coeff(j);
        if (cj == 0) continue;
        for (std::int64_t i = 0; i + j < t; ++i) {
          const Int& ci = inner.coeff(i);
          if (ci == 0) continue;
          r.coeff(i + j) += ci * cj;
        }
      }
      break;
    }
  }
  return r;
}

TruncatedSeries negate(const TruncatedSeries& a) {
  TruncatedSeries r(a.order());
  for (std::int64_t n = 0; n < a.order(); ++n) r.coeff(n) = -a.coeff(n);
  return r;
}

TruncatedSeries shifted(const TruncatedSeries& a, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("shift must be >= 0");
  TruncatedSeries r(a.order());
  for (std::int64_t n = 0; n + k < a.order(); ++n) r.coeff(n + k) = a.coeff(n);
  return r;
}

TruncatedSeries inv_pochhammer(std::int64_t m, std::int64_t n,
                               std::int64_t order) {
  if (m < 1 || n < 1) throw std::invalid_argument("inv_pochhammer needs m, n >= 1");
  TruncatedSeries r = TruncatedSeries::one(order);
  for (std::int64_t j = m; j < m + n; ++j) {
    if (j >= order) break;  // the factor is 1 mod q^T from here on
    for (std::int64_t idx = j; idx < order; ++idx)
      r.coeff(idx) += r.coeff(idx - j);
  }
  return r;
}

TruncatedSeries pochhammer(std::int64_t m, std::int64_t n,
                           std::int64_t order) {
  if (m < 1 || n < 1) throw std::invalid_argument("pochhammer needs m, n >= 1");
  TruncatedSeries r = TruncatedSeries::one(order);
  for (std::int64_t j = m; j < m + n; ++j) {
    if (j >= order) break;
    for (std::int64_t idx = order - 1; idx >= j; --idx)
      r.coeff(idx) -= r.coeff(idx - j);
  }
  return r;
}

QBinomial q_binomial(std::int64_t upper, std::int64_t lower,
                     std::int64_t order) {
  if (upper < 0 || lower < 0) throw std::invalid_argument("q_binomial needs nonnegative arguments");
  if (lower > upper) throw std::invalid_argument("q_binomial needs lower <= upper");
  const std::int64_t degree = lower * (upper - lower);
  if (degree >= order)
    throw std::invalid_argument("q_binomial order too small for exact polynomial");

  // Pascal recurrence [a b] = [a-1 b-1] + q^b [a-1 b], rows built bottom-up.
  // row[b] holds the coefficient list of [a choose b]_q for the current a.
  std::vector<std::vector<Int>> row(static_cast<std::size_t>(lower) + 1);
  row[0] = {Int(1)};
  for (std::int64_t a = 1; a <= upper; ++a) {
    for (std::int64_t b = std::min(a, lower); b >= 1; --b) {
      std::vector<Int> next;
      if (b == a) {
        next = {Int(1)};
      } else {
        next = row[static_cast<std::size_t>(b)];                  // q^b * [a-1 b]
        next.insert(next.begin(), static_cast<std::size_t>(b), Int(0));
        const std::vector<Int>& low = row[static_cast<std::size_t>(b - 1)];
        if (next.size() < low.size()) next.resize(low.size(), Int(0));
        for (std::size_t i = 0; i < low.size(); ++i) next[i] += low[i];
      }
      row[static_cast<std::size_t>(b)] = std::move(next);
    }
  }

  QBinomial result{upper, lower, TruncatedSeries(order)};
  const std::vector<Int>& poly = row[static_cast<std::size_t>(lower)];
  for (std::size_t i = 0; i < poly.size(); ++i)
    result.poly.coeff(static_cast<std::int64_t>(i)) = poly[i];
  return result;
}

TruncatedSeries cumulate_mod_L(const TruncatedSeries& h, std::int64_t L) {
  if (L < 1) throw std::invalid_argument("cumulate_mod_L needs L >= 1");
  TruncatedSeries r = h;
  for (std::int64_t idx = L; idx < r.order(); ++idx)
    r.coeff(idx) += r.coeff(idx - L);
  return r;
}

std::optional<NegativeCoeff> first_negative(const TruncatedSeries& s) {
  for (std::int64_t n = 0; n < s.order(); ++n)
    if (s.coeff(n) < 0) return NegativeCoeff{n, s.coeff(n)};
  return std::nullopt;
}

}  // namespace qpart
