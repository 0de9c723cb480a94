#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpart/partition.hpp"
#include "qpart/types.hpp"

namespace qpart {

/* The five weight-class injections, dispatched by L alone:
 * L >= 22 -> helpful2, 7 <= L <= 21 -> two2, and L = 6, 5, 4 -> three,
 * four, five. */
enum class Lemma { helpful2, two2, three, four, five };

std::string lemma_name(Lemma lemma);
Lemma lemma_for_L(std::int64_t L);
/* Smallest weight the lemma's map is defined for: 21 for helpful2,
 * L^2 + 10L + 7 for two2, then 67 / 164 / 1042. */
std::int64_t lemma_weight_threshold(std::int64_t L);

/* Identifies which construction branch produced an image.  case_path follows
 * the nested branch numbering; group carries the frequency-of-3 class label
 * (A1..K1) for the L >= 22 map and is empty otherwise. */
struct CaseLabel {
  Lemma lemma = Lemma::helpful2;
  std::string case_path;
  std::string group;
};

struct PhiResult {
  Partition image;
  CaseLabel label;
  std::vector<std::string> trace;  // which minimal part fired, which solution used
};

/* The injections, total on their stated domains (partitions with parts in
 * {4, ..., L+3} of weight at least the lemma threshold); they reject
 * anything else. */
PhiResult phi_helpful2(std::int64_t L, const Partition& pi);
PhiResult phi_two2(std::int64_t L, const Partition& pi);
PhiResult phi_small(std::int64_t L, const Partition& pi);  // L in {4, 5, 6}
PhiResult apply_phi(std::int64_t L, const Partition& pi);

/* Image, case label and derivation trace as one JSON object. */
std::string to_json_string(const PhiResult& result);

/* Codomain element outside the range of the L >= 22 map: (3^4, 4^1, 5^1) at
 * weight 21, (3^4, 5^2) at 22, and (3^4, 5^1, 6^{x_6}, ..., 11^{x_11}) with
 * 6 x_6 + ... + 11 x_11 = N - 17 beyond. */
Partition witness_helpful2(std::int64_t L, std::int64_t N);

struct InjectionFailure {
  std::string reason;
  std::string pi;      // offending domain partition, text form
  std::string detail;  // second partition or image when relevant
};

struct InjectionReport {
  std::int64_t L = 0;
  std::int64_t s = 3;
  std::int64_t N = 0;
  std::int64_t domain_size = 0;
  std::int64_t image_size = 0;  // -1 when unknown (failed round-trip run)
  bool total = true;
  bool injective = true;
  bool weight_preserved = true;
  bool codomain_ok = true;
  bool witnesses_excluded = true;  // vacuously true outside helpful2
  std::string mode;                // "image-set" or "round-trip"
  std::optional<InjectionFailure> first_failure;

  bool pass() const {
    return total && injective && weight_preserved && codomain_ok &&
           witnesses_excluded && !first_failure;
  }
};

std::string to_json_string(const InjectionReport& report);

struct VerifyOptions {
  /* Domains at most this large are verified by materializing the canonical
   * image set; larger ones switch to the streaming left-inverse round-trip,
   * which needs no per-image storage and gives the same verdict. */
  std::int64_t set_mode_cap = 4000000;
  int workers = 0;  // 0: QPART_WORKERS env var, else hardware concurrency
};

/* Streams the whole weight class through the applicable injection and checks
 * totality, weight preservation, codomain membership, injectivity, and (for
 * L >= 22) that the witness partition is not attained.  Failures are report
 * content; only malformed (L, N) throws. */
InjectionReport verify_injection(std::int64_t L, std::int64_t N,
                                 const VerifyOptions& opts = {});

struct DichotomyProbe {
  std::int64_t L = 0;
  std::int64_t N = 0;  // probed weight, one below the two2 threshold
  bool holds = true;
  std::optional<std::string> counterexample;
};

/* Output-only probe: does the case-4 frequency dichotomy (f_{L+2} >= 6 or
 * some other f_i >= 3) already hold one below the verified threshold? */
DichotomyProbe probe_two2_dichotomy(std::int64_t L);

}  // namespace qpart
