#include "qpart/semigroup.hpp"

#include <numeric>
#include <stdexcept>

namespace qpart {

bool SemigroupSolution::valid() const {
  if (generators.size() != multipliers.size()) return false;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (multipliers[i] < 0) return false;
    total += generators[i] * multipliers[i];
  }
  return total == target;
}

TwoGenResult two_gen(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (a < 1 || b < 1) throw std::invalid_argument("two_gen needs a, b >= 1");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("two_gen needs gcd(a,b) = 1");
  if (n < 0) throw std::invalid_argument("two_gen needs n >= 0");
  TwoGenResult r;
  for (std::int64_t x = 0; a * x <= n; ++x) {
    const std::int64_t rest = n - a * x;
    if (rest % b != 0) continue;
    ++r.count;
    if (!r.example)
      r.example = SemigroupSolution{{a, b}, {x, rest / b}, n};
  }
  return r;
}

const std::vector<std::int64_t>& generators_of(FixedGens gens) {
  static const std::vector<std::int64_t> g456{4, 5, 6};
  static const std::vector<std::int64_t> g567{5, 6, 7};
  static const std::vector<std::int64_t> g4567{4, 5, 6, 7};
  static const std::vector<std::int64_t> g6to11{6, 7, 8, 9, 10, 11};
  switch (gens) {
    case FixedGens::g456: return g456;
    case FixedGens::g567: return g567;
    case FixedGens::g4567: return g4567;
    case FixedGens::g6to11: return g6to11;
  }
  throw std::logic_error("unknown generator set");
}

namespace {

/* First multiplier tuple in lexicographic order: outer loops run the leading
 * multipliers ascending and the last generator absorbs the remainder. */
std::optional<std::vector<std::int64_t>> lex_min_multipliers(
    const std::vector<std::int64_t>& gens, std::int64_t n) {
  const std::size_t k = gens.size();
  std::vector<std::int64_t> m(k, 0);
  std::optional<std::vector<std::int64_t>> best;
  auto rec = [&](auto&& self, std::size_t idx, std::int64_t rest) -> bool {
    if (idx + 1 == k) {
      if (rest % gens[idx] == 0) {
        m[idx] = rest / gens[idx];
        best = m;
        return true;
      }
      return false;
    }
    for (std::int64_t v = 0; v * gens[idx] <= rest; ++v) {
      m[idx] = v;
      if (self(self, idx + 1, rest - v * gens[idx])) return true;
    }
    return false;
  };
  rec(rec, 0, n);
  return best;
}

bool absent_by_convention(FixedGens gens, std::int64_t n, bool allow_empty) {
  switch (gens) {
    case FixedGens::g456: return n < 4 || n == 7;
    case FixedGens::g567: return n < 5 || n == 8 || n == 9;
    case FixedGens::g4567:
      if (n == 0) return !allow_empty;
      return n < 4;
    case FixedGens::g6to11: return n > 0 && n < 6;
  }
  throw std::logic_error("unknown generator set");
}

}  // namespace

std::optional<SemigroupSolution> solve_fixed(FixedGens gens, std::int64_t n,
                                             bool allow_empty) {
  if (n < 0) return std::nullopt;
  if (absent_by_convention(gens, n, allow_empty)) return std::nullopt;
  const std::vector<std::int64_t>& g = generators_of(gens);
  auto mult = lex_min_multipliers(g, n);
  if (!mult) throw std::logic_error("solve_fixed: exception set out of sync with solver");
  return SemigroupSolution{g, std::move(*mult), n};
}

SemigroupSolution alternate_456(std::int64_t n, const SemigroupSolution& sol) {
  if (n < 4 || n == 5)
    throw std::invalid_argument("alternate_456 needs n >= 4 and n != 5");
  if (sol.generators != generators_of(FixedGens::g456) || sol.target != n ||
      !sol.valid())
    throw std::invalid_argument("alternate_456 needs a valid {4,5,6} solution of n");

  const std::int64_t alpha = sol.multipliers[0];
  const std::int64_t beta = sol.multipliers[1];
  const std::int64_t gamma = sol.multipliers[2];
  SemigroupSolution out{sol.generators, {}, n + 6};
  if (alpha >= 1)
    out.multipliers = {alpha - 1, beta + 2, gamma};
  else if (gamma >= 1)
    out.multipliers = {alpha + 3, beta, gamma - 1};
  else if (beta >= 2)
    out.multipliers = {alpha + 4, beta - 2, gamma};
  else
    throw std::logic_error("alternate_456: unreachable branch for valid input");
  return out;
}

}  // namespace qpart
