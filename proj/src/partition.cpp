#include "qpart/partition.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qpart {

Partition::Partition(std::map<std::int64_t, std::int64_t> freq)
    : freq_(std::move(freq)) {
  for (auto it = freq_.begin(); it != freq_.end();) {
    if (it->first < 1) throw std::invalid_argument("parts must be positive");
    if (it->second < 0) throw std::invalid_argument("multiplicities must be >= 0");
    if (it->second == 0)
      it = freq_.erase(it);
    else
      ++it;
  }
}

Partition Partition::from_parts(std::initializer_list<std::int64_t> parts) {
  std::map<std::int64_t, std::int64_t> f;
  for (std::int64_t p : parts) ++f[p];
  return Partition(std::move(f));
}

std::int64_t Partition::multiplicity(std::int64_t part) const {
  auto it = freq_.find(part);
  return it == freq_.end() ? 0 : it->second;
}

std::int64_t Partition::weight() const {
  std::int64_t w = 0;
  for (const auto& [part, mult] : freq_) w += part * mult;
  return w;
}

std::int64_t Partition::smallest_part() const {
  if (freq_.empty()) throw std::logic_error("empty partition has no smallest part");
  return freq_.begin()->first;
}

std::int64_t Partition::largest_part() const {
  if (freq_.empty()) throw std::logic_error("empty partition has no largest part");
  return freq_.rbegin()->first;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const auto& [part, mult] : freq_) {
    if (!first) out << ", ";
    out << part << '^' << mult;
    first = false;
  }
  out << ')';
  return out.str();
}

Partition Partition::parse(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> std::int64_t {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("partition parse: integer expected");
    return std::stoll(text.substr(start, i - start));
  };

  skip_ws();
  if (i >= text.size() || text[i] != '(')
    throw std::invalid_argument("partition parse: expected '('");
  ++i;
  std::map<std::int64_t, std::int64_t> f;
  skip_ws();
  if (i < text.size() && text[i] == ')') return Partition(std::move(f));
  while (true) {
    std::int64_t part = parse_int();
    skip_ws();
    if (i >= text.size() || text[i] != '^')
      throw std::invalid_argument("partition parse: expected '^'");
    ++i;
    std::int64_t mult = parse_int();
    if (mult > 0) f[part] += mult;
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  skip_ws();
  if (i >= text.size() || text[i] != ')')
    throw std::invalid_argument("partition parse: expected ')'");
  return Partition(std::move(f));
}

void PartitionConstraint::validate() const {
  if (weight < 0) throw std::invalid_argument("constraint weight must be >= 0");
  if (min_part < 1 || min_part > max_part)
    throw std::invalid_argument("constraint needs 1 <= min_part <= max_part");
  if (exact_smallest &&
      (*exact_smallest < min_part || *exact_smallest > max_part))
    throw std::invalid_argument("exact_smallest outside [min_part, max_part]");
}

std::vector<std::int64_t> PartitionConstraint::parts_descending() const {
  const std::int64_t lo = exact_smallest ? *exact_smallest : min_part;
  std::vector<std::int64_t> parts;
  for (std::int64_t p = max_part; p >= lo; --p)
    if (!forbidden.contains(p)) parts.push_back(p);
  return parts;
}

void enumerate(const PartitionConstraint& c,
               const std::function<bool(const Partition&)>& visit) {
  c.validate();
  if (c.weight == 0) {
    if (!c.exact_smallest) visit(Partition{});
    return;
  }
  const std::vector<std::int64_t> parts = c.parts_descending();
  // With a pinned smallest part, one copy of it is set aside up front and
  // restored per item, which both forces its presence and keeps the walk on
  // parts >= exact_smallest only.
  std::int64_t target = c.weight;
  if (c.exact_smallest) {
    if (c.forbidden.contains(*c.exact_smallest)) return;
    target -= *c.exact_smallest;
    if (target < 0) return;
  }
  if (parts.empty()) return;
  std::vector<std::int64_t> mult(parts.size(), 0);
  detail::walk_multiplicities(
      std::span<const std::int64_t>(parts), mult, 0, target,
      [&](const std::vector<std::int64_t>& m) {
        std::map<std::int64_t, std::int64_t> f;
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (m[i] > 0) f[parts[i]] = m[i];
        if (c.exact_smallest) ++f[*c.exact_smallest];
        return visit(Partition(std::move(f)));
      });
}

std::vector<Partition> enumerate_all(const PartitionConstraint& c) {
  std::vector<Partition> out;
  enumerate(c, [&](const Partition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::int64_t count_by_enumeration(const PartitionConstraint& c) {
  c.validate();
  if (c.weight == 0) return c.exact_smallest ? 0 : 1;
  std::int64_t target = c.weight;
  if (c.exact_smallest) {
    if (c.forbidden.contains(*c.exact_smallest)) return 0;
    target -= *c.exact_smallest;
    if (target < 0) return 0;
  }
  const std::vector<std::int64_t> parts = c.parts_descending();
  if (parts.empty()) return 0;
  std::int64_t n = 0;
  std::vector<std::int64_t> mult(parts.size(), 0);
  detail::walk_multiplicities(std::span<const std::int64_t>(parts), mult, 0,
                              target, [&](const std::vector<std::int64_t>&) {
                                ++n;
                                return true;
                              });
  return n;
}

Int count(const PartitionConstraint& c) {
  c.validate();
  if (c.weight == 0) return c.exact_smallest ? 0 : 1;
  std::int64_t target = c.weight;
  if (c.exact_smallest) {
    if (c.forbidden.contains(*c.exact_smallest)) return 0;
    target -= *c.exact_smallest;
    if (target < 0) return 0;
  }
  std::vector<Int> dp(static_cast<std::size_t>(target) + 1, Int(0));
  dp[0] = 1;
  for (std::int64_t p : c.parts_descending())
    for (std::int64_t idx = p; idx <= target; ++idx)
      dp[static_cast<std::size_t>(idx)] += dp[static_cast<std::size_t>(idx - p)];
  return dp[static_cast<std::size_t>(target)];
}

std::vector<Int> count_max_part_table(std::int64_t n_max,
                                      std::int64_t max_part) {
  if (n_max < 0) throw std::invalid_argument("count_max_part: n must be >= 0");
  if (max_part < 1) throw std::invalid_argument("count_max_part: max_part must be >= 1");
  std::vector<Int> dp(static_cast<std::size_t>(n_max) + 1, Int(0));
  dp[0] = 1;
  for (std::int64_t p = 1; p <= max_part; ++p)
    for (std::int64_t idx = p; idx <= n_max; ++idx)
      dp[static_cast<std::size_t>(idx)] += dp[static_cast<std::size_t>(idx - p)];
  return dp;
}

Int count_max_part(std::int64_t n, std::int64_t max_part) {
  return count_max_part_table(n, max_part).back();
}

std::vector<Int> count_range_ie_table(std::int64_t n_max) {
  const std::vector<Int> p17 = count_max_part_table(n_max, 17);
  auto at = [&](std::int64_t idx) -> Int {
    return idx < 0 ? Int(0) : p17[static_cast<std::size_t>(idx)];
  };
  std::vector<Int> out(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n)
    out[static_cast<std::size_t>(n)] =
        at(n) - at(n - 1) - at(n - 2) + at(n - 4) + at(n - 5) - at(n - 6);
  return out;
}

Int count_range_ie(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("count_range_ie: n must be >= 0");
  return count_range_ie_table(n).back();
}

std::vector<Int> partition_numbers(std::int64_t n_max) {
  if (n_max < 0) throw std::invalid_argument("partition_numbers: n must be >= 0");
  std::vector<Int> p(static_cast<std::size_t>(n_max) + 1, Int(0));
  p[0] = 1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    Int total = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const bool plus = (k % 2) == 1;
      if (plus)
        total += p[static_cast<std::size_t>(n - g1)];
      else
        total -= p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) {
        if (plus)
          total += p[static_cast<std::size_t>(n - g2)];
        else
          total -= p[static_cast<std::size_t>(n - g2)];
      }
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

Int p_unrestricted(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("p_unrestricted: n must be >= 0");
  return partition_numbers(n).back();
}

bool bound_check_with(const Int& p_m, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("bound_check: m must be >= 0");
  // Let t = floor(3 sqrt m), computed exactly as isqrt(9m).  With the
  // rational constant E = 2718281828459045235 / 10^18 < e we have
  // E^t <= e^t <= e^{3 sqrt m}, so p(m) * 10^{18t} <= E_num^t certifies the
  // bound in exact integer arithmetic.
  Int nine_m = 9 * Int(m);
  Int t_big;
  mpz_sqrt(t_big.get_mpz_t(), nine_m.get_mpz_t());
  const unsigned long t = t_big.get_ui();

  Int lhs_scale, rhs;
  Int ten18("1000000000000000000");
  Int e_num("2718281828459045235");
  mpz_pow_ui(lhs_scale.get_mpz_t(), ten18.get_mpz_t(), t);
  mpz_pow_ui(rhs.get_mpz_t(), e_num.get_mpz_t(), t);
  return p_m * lhs_scale <= rhs;
}

bool bound_check(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("bound_check: m must be >= 0");
  return bound_check_with(p_unrestricted(m), m);
}

}  // namespace qpart
