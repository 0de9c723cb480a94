#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpart/genfun.hpp"
#include "qpart/types.hpp"

namespace qpart {

/* One named verification suite, completed.  Reports are deterministic:
 * identical flags give byte-identical output. */
struct TheoremCheck {
  std::string name;
  std::map<std::string, std::string> params;
  bool pass = false;
  std::vector<std::string> evidence;  // first counterexample or summary stats
  std::vector<std::string> anchors;   // the properties this suite certifies
};

struct CheckParams {
  std::optional<std::int64_t> L;
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> Lmin;
  std::optional<std::int64_t> Lmax;
  std::optional<std::int64_t> order;
  std::optional<std::int64_t> Nmin;
  std::optional<std::int64_t> Nmax;
  std::optional<std::int64_t> m_max;
  std::optional<std::int64_t> set_cap;
  int workers = 0;
};

const std::vector<std::string>& check_names();

/* Executes the named suite; unknown names throw std::invalid_argument. */
TheoremCheck run_check(const std::string& name, const CheckParams& params = {});

std::string to_json_string(const TheoremCheck& check);

/* Reference data the checks compare against: the published correction
 * polynomials for s = 3 (L = 4..10; the L = 10 entry is the stable one) and
 * for s = 2. */
const std::map<std::int64_t, CorrectionPolynomial>& reference_corrections_s3();
CorrectionPolynomial reference_correction_s2(std::int64_t L);

/* Correction-polynomial exploration: the per-L table plus the least L0 in
 * range whose polynomial persists through every larger swept L (a candidate
 * observation, not a theorem). */
struct CorrectionsExploration {
  std::int64_t s = 0;
  std::int64_t Lmin = 0;
  std::int64_t Lmax = 0;
  std::int64_t order = 0;
  std::vector<std::pair<std::int64_t, CorrectionPolynomial>> table;
  std::optional<std::int64_t> stabilization_candidate;
};
CorrectionsExploration explore_corrections(std::int64_t s, std::int64_t Lmin,
                                           std::int64_t Lmax,
                                           std::int64_t order);
std::string to_json_string(const CorrectionsExploration& exploration);

/* Accepts names from check_names(); exit-code semantics for the CLI:
 * 0 all-pass, 1 some verdict failed, 2 usage error. */

}  // namespace qpart
