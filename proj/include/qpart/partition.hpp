#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qpart/types.hpp"

namespace qpart {

/* Frequency-table representation of an integer partition: part -> multiplicity
 * with every stored multiplicity >= 1.  The empty map is the empty partition. */
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::map<std::int64_t, std::int64_t> freq);
  static Partition from_parts(std::initializer_list<std::int64_t> parts);

  /* Text format "(3^4, 4^1, 5^1)" with parts ascending; zero frequencies are
   * accepted on input and dropped.  The empty partition renders as "()". */
  static Partition parse(const std::string& text);
  std::string to_string() const;

  const std::map<std::int64_t, std::int64_t>& freq() const { return freq_; }
  std::int64_t multiplicity(std::int64_t part) const;
  bool empty() const { return freq_.empty(); }
  std::int64_t weight() const;
  std::int64_t smallest_part() const;  // requires a nonempty partition
  std::int64_t largest_part() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::map<std::int64_t, std::int64_t> freq_;
};

/* Weight class plus part-range constraints.  exact_smallest, when present,
 * pins the smallest part (which must then occur); forbidden part sizes are
 * excluded outright. */
struct PartitionConstraint {
  std::int64_t weight = 0;
  std::int64_t min_part = 1;
  std::int64_t max_part = 1;
  std::optional<std::int64_t> exact_smallest;
  std::set<std::int64_t> forbidden;

  void validate() const;
  /* Part values actually available, largest first. */
  std::vector<std::int64_t> parts_descending() const;
};

namespace detail {

/* Core multiplicity walk shared by the streaming enumerator and the
 * exhaustive injection verifier.  parts_desc lists the available part values
 * in strictly decreasing order; mult is a parallel scratch buffer.  Visits
 * every solution of sum(parts_desc[i]*mult[i]) == remaining exactly once,
 * trying parts from largest to smallest and multiplicities descending.
 * The visitor returns false to stop the walk; the function returns false
 * when a visitor stopped it. */
template <class Visit>
bool walk_multiplicities(std::span<const std::int64_t> parts_desc,
                         std::vector<std::int64_t>& mult, std::size_t idx,
                         std::int64_t remaining, Visit&& visit) {
  if (remaining == 0) {
    std::fill(mult.begin() + static_cast<std::ptrdiff_t>(idx), mult.end(), 0);
    return visit(std::as_const(mult));
  }
  if (idx == parts_desc.size()) return true;
  if (remaining < parts_desc.back()) return true;  // cannot be filled
  const std::int64_t part = parts_desc[idx];
  if (idx + 1 == parts_desc.size()) {
    if (remaining % part == 0) {
      mult[idx] = remaining / part;
      return visit(std::as_const(mult));
    }
    return true;
  }
  for (std::int64_t m = remaining / part; m >= 0; --m) {
    mult[idx] = m;
    if (!walk_multiplicities(parts_desc, mult, idx + 1, remaining - m * part,
                             visit))
      return false;
  }
  return true;
}

}  // namespace detail

/* Streams every partition satisfying the constraint, in a fixed order
 * (largest part first, multiplicities descending), so output is reproducible
 * run to run.  The visitor returns false to stop early.  Weight 0 yields the
 * single empty partition unless exact_smallest is set. */
void enumerate(const PartitionConstraint& c,
               const std::function<bool(const Partition&)>& visit);

std::vector<Partition> enumerate_all(const PartitionConstraint& c);

/* Size of the streamed set, obtained by actually walking it (the oracle
 * route); distinct from the dynamic-programming count() below. */
std::int64_t count_by_enumeration(const PartitionConstraint& c);

/* Exact count of the same set enumerate() streams, by dynamic programming. */
Int count(const PartitionConstraint& c);

/* Partitions of n with every part <= max_part. */
Int count_max_part(std::int64_t n, std::int64_t max_part);
std::vector<Int> count_max_part_table(std::int64_t n_max, std::int64_t max_part);

/* Partitions of n with all parts in {4,...,17}, computed from the bounded
 * counts p17 by inclusion-exclusion over the parts 1, 2 and 3:
 * p17(n) - p17(n-1) - p17(n-2) + p17(n-4) + p17(n-5) - p17(n-6),
 * terms with negative argument taken as 0. */
Int count_range_ie(std::int64_t n);
std::vector<Int> count_range_ie_table(std::int64_t n_max);

/* Unrestricted partition numbers via the pentagonal-number recurrence. */
Int p_unrestricted(std::int64_t n);
std::vector<Int> partition_numbers(std::int64_t n_max);

/* Certifies p(m) <= e^{3 sqrt m} by comparing p(m) against an exact rational
 * lower bound of the right-hand side (so a pass implies the inequality). */
bool bound_check(std::int64_t m);

/* Same certificate with the partition number supplied by the caller, for
 * sweeps that already hold a table of p values. */
bool bound_check_with(const Int& p_m, std::int64_t m);

}  // namespace qpart
