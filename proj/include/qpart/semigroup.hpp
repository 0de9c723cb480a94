#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qpart/types.hpp"

namespace qpart {

/* A witnessed representation target = sum(generators[i] * multipliers[i])
 * with nonnegative multipliers. */
struct SemigroupSolution {
  std::vector<std::int64_t> generators;   // ascending
  std::vector<std::int64_t> multipliers;  // same length, >= 0
  std::int64_t target = 0;

  bool valid() const;
  bool operator==(const SemigroupSolution&) const = default;
};

struct TwoGenResult {
  std::int64_t count = 0;
  std::optional<SemigroupSolution> example;  // smallest-x witness
};

/* Exact number of nonnegative solutions of a*x + b*y = n for coprime a, b,
 * plus one witness.  The count always lies in {floor(n/ab), floor(n/ab)+1}. */
TwoGenResult two_gen(std::int64_t a, std::int64_t b, std::int64_t n);

/* The fixed generator sets used by the injection constructions. */
enum class FixedGens { g456, g567, g4567, g6to11 };

const std::vector<std::int64_t>& generators_of(FixedGens gens);

/* Canonical representation of n over the fixed generator set: the
 * lexicographically smallest multiplier tuple (first multiplier minimized,
 * then the second, and so on).  Absent exactly on the documented exception
 * sets:
 *   {4,5,6}:     n < 4 or n == 7
 *   {5,6,7}:     n < 5 or n in {8, 9}
 *   {4,5,6,7}:   n < 4       (n == 0 yields all-zeros only with allow_empty)
 *   {6,...,11}:  0 < n < 6   (n == 0 yields the all-zero tuple)
 * Deterministic: repeated calls return identical tuples. */
std::optional<SemigroupSolution> solve_fixed(FixedGens gens, std::int64_t n,
                                             bool allow_empty = false);

/* Given a solution (alpha, beta, gamma) of 4x+5y+6z = n with n >= 4, n != 5,
 * produces a solution of 4x+5y+6z = n+6 different from
 * (alpha, beta, gamma+1), following the constructive branch order:
 * alpha >= 1 -> (alpha-1, beta+2, gamma); else gamma >= 1 ->
 * (alpha+3, beta, gamma-1); else (alpha+4, beta-2, gamma). */
SemigroupSolution alternate_456(std::int64_t n, const SemigroupSolution& sol);

}  // namespace qpart
