#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qpart/genfun.hpp"
#include "qpart/injection.hpp"
#include "qpart/partition.hpp"

using namespace qpart;

TEST_CASE("lemma dispatch by L") {
  CHECK(lemma_for_L(22) == Lemma::helpful2);
  CHECK(lemma_for_L(40) == Lemma::helpful2);
  CHECK(lemma_for_L(7) == Lemma::two2);
  CHECK(lemma_for_L(21) == Lemma::two2);
  CHECK(lemma_for_L(6) == Lemma::three);
  CHECK(lemma_for_L(5) == Lemma::four);
  CHECK(lemma_for_L(4) == Lemma::five);
  CHECK_THROWS_AS(lemma_for_L(3), std::invalid_argument);

  CHECK(lemma_weight_threshold(22) == 21);
  CHECK(lemma_weight_threshold(7) == 126);
  CHECK(lemma_weight_threshold(12) == 271);
  CHECK(lemma_weight_threshold(6) == 67);
  CHECK(lemma_weight_threshold(5) == 164);
  CHECK(lemma_weight_threshold(4) == 1042);
}

TEST_CASE("large-L map: worked examples") {
  {
    // smallest part L+3: one 25 becomes (3^2, 4^2, 5^1, 6^1)
    const PhiResult r = phi_helpful2(22, Partition::parse("(25^1)"));
    CHECK(r.image.to_string() == "(3^2, 4^2, 5^1, 6^1)");
    CHECK(r.label.group == "B1");
    CHECK(r.label.case_path == "2(a)");
    CHECK(r.image.weight() == 25);
  }
  {
    // one copy of L: case 1 with spread 4 = (L-18)*1 -> (1,0,0,0)
    const PhiResult r = phi_helpful2(22, Partition::parse("(22^1)"));
    CHECK(r.image.to_string() == "(3^6, 4^1)");
    CHECK(r.label.group == "F1");
    CHECK(r.label.case_path == "1");
  }
  {
    // smallest part 7 at the boundary weight 21
    const PhiResult r = phi_helpful2(22, Partition::parse("(7^3)"));
    CHECK(r.image.to_string() == "(3^1, 4^1, 7^2)");
    CHECK(r.label.group == "A1");
  }
  {
    // group B3: (5, 7, 8^2) -> (3^2, 4^1, 5^2, 8^1)
    const PhiResult r = phi_helpful2(22, Partition::parse("(5^1, 7^1, 8^2)"));
    CHECK(r.image.to_string() == "(3^2, 4^1, 5^2, 8^1)");
    CHECK(r.label.group == "B3");
    CHECK(r.image.weight() == 28);
  }
  {
    // two copies of L: group K1, frequency of 3 is 12
    const PhiResult r = phi_helpful2(22, Partition::parse("(22^2)"));
    CHECK(r.label.group == "K1");
    CHECK(r.image.multiplicity(3) == 12);
    CHECK(r.image.weight() == 44);
  }
}

TEST_CASE("large-L map: alternate solution avoids the shifted triple") {
  // m7 = 15: the canonical {4,5,6} split of 12 collides with the m5 = 9
  // split of 6 shifted by one 6, so the alternate (3,0,0) must be used.
  const PhiResult r = phi_helpful2(22, Partition::parse("(4^1, 15^2)"));
  CHECK(r.label.group == "A4");
  CHECK(r.image.to_string() == "(3^1, 4^4, 15^1)");
  CHECK(r.image.weight() == 34);
  bool noted = false;
  for (const std::string& line : r.trace)
    if (line.find("alternate") != std::string::npos) noted = true;
  CHECK(noted);

  // and the A3 image it would have collided with stays distinct
  const PhiResult a3 = phi_helpful2(22, Partition::parse("(5^2, 9^1, 15^1)"));
  CHECK(a3.label.group == "A3");
  CHECK(a3.image.multiplicity(3) == 1);

  // a collision-free A4 application keeps the canonical split
  const PhiResult r9 = phi_helpful2(22, Partition::parse("(4^1, 9^1, 25^1)"));
  CHECK(r9.label.group == "A4");
  CHECK(r9.image.to_string() == "(3^1, 4^1, 6^1, 25^1)");
}

TEST_CASE("large-L map: domain validation") {
  CHECK_THROWS_AS(phi_helpful2(21, Partition::parse("(7^3)")), std::invalid_argument);
  CHECK_THROWS_AS(phi_helpful2(22, Partition::parse("(7^2)")), std::invalid_argument);   // weight 14
  CHECK_THROWS_AS(phi_helpful2(22, Partition::parse("(3^7)")), std::invalid_argument);   // part 3
  CHECK_THROWS_AS(phi_helpful2(22, Partition::parse("(26^1)")), std::invalid_argument);  // part > L+3
  CHECK_THROWS_AS(phi_helpful2(22, Partition{}), std::invalid_argument);
}

TEST_CASE("witness partitions") {
  CHECK(witness_helpful2(22, 21).to_string() == "(3^4, 4^1, 5^1)");
  CHECK(witness_helpful2(25, 22).to_string() == "(3^4, 5^2)");
  CHECK(witness_helpful2(22, 23).to_string() == "(3^4, 5^1, 6^1)");
  for (std::int64_t N = 21; N <= 120; ++N) {
    const Partition w = witness_helpful2(22, N);
    CHECK(w.weight() == N);
    CHECK(w.multiplicity(3) == 4);
    CHECK(w.smallest_part() == 3);
    CHECK(w.largest_part() <= 11);
    CHECK(w.multiplicity(22) == 0);
  }
  CHECK_THROWS_AS(witness_helpful2(22, 20), std::invalid_argument);
  CHECK_THROWS_AS(witness_helpful2(21, 30), std::invalid_argument);
}

TEST_CASE("mid-L map: worked examples") {
  {
    const PhiResult r = phi_two2(7, Partition::parse("(7^3, 10^11)"));
    CHECK(r.image.to_string() == "(3^7, 10^11)");
    CHECK(r.label.case_path == "1");
    CHECK(r.image.weight() == 131);
  }
  {
    // f = 0 and i0 = 8 = L+1: the special branch moves weight to L-2 = 5
    const PhiResult r = phi_two2(7, Partition::parse("(8^16)"));
    CHECK(r.label.case_path == "4(ii)(b)");
    CHECK(r.image.to_string() == "(3^3, 5^3, 8^13)");
    CHECK(r.image.weight() == 128);
  }
  {
    // f = 0 with f_{L+2} >= 6: frequency of 3 becomes 2L+4 = 18
    const PhiResult r = phi_two2(7, Partition::parse("(8^9, 9^6)"));
    CHECK(r.label.case_path == "4(i)");
    CHECK(r.image.to_string() == "(3^18, 8^9)");
    CHECK(r.image.weight() == 126);
  }
  CHECK_THROWS_AS(phi_two2(22, Partition::parse("(7^18)")), std::invalid_argument);
  CHECK_THROWS_AS(phi_two2(7, Partition::parse("(7^17)")), std::invalid_argument);  // 119 < 126
}

TEST_CASE("small-L maps: worked examples") {
  {
    const PhiResult r = phi_small(6, Partition::parse("(6^1, 9^8)"));
    CHECK(r.image.to_string() == "(3^2, 9^8)");
    CHECK(r.label.case_path == "1");
    CHECK(r.image.weight() == 78);
  }
  {
    // L = 4, f >= 100: canonical {5,6,7} split of 169 is (0, 6, 19)
    const PhiResult r = phi_small(4, Partition::parse("(4^259, 6^1)"));
    CHECK(r.label.case_path == "2");
    CHECK(r.image.multiplicity(3) == 289);
    CHECK(r.image.multiplicity(5) == 0);
    CHECK(r.image.multiplicity(6) == 7);
    CHECK(r.image.multiplicity(7) == 19);
    CHECK(r.image.weight() == 1042);
  }
  CHECK_THROWS_AS(phi_small(5, Partition::parse("(4^6, 8^17)")), std::invalid_argument);  // 160 < 164
  CHECK_THROWS_AS(phi_small(7, Partition::parse("(7^18)")), std::invalid_argument);
}

TEST_CASE("verification sweeps at small weights") {
  for (std::int64_t N = 21; N <= 45; ++N) {
    const InjectionReport r = verify_injection(22, N);
    CHECK(r.pass());
    CHECK(r.mode == "image-set");
    CHECK(r.domain_size == r.image_size);
  }
  for (std::int64_t N = 21; N <= 30; ++N) CHECK(verify_injection(23, N).pass());
  for (std::int64_t N = 126; N <= 130; ++N) CHECK(verify_injection(7, N).pass());
  for (std::int64_t N = 67; N <= 72; ++N) CHECK(verify_injection(6, N).pass());
  for (std::int64_t N = 164; N <= 168; ++N) CHECK(verify_injection(5, N).pass());
  CHECK(verify_injection(4, 1042).pass());
  CHECK_THROWS_AS(verify_injection(22, 20), std::invalid_argument);
  CHECK_THROWS_AS(verify_injection(7, 125), std::invalid_argument);
}

TEST_CASE("image-set and round-trip modes agree") {
  VerifyOptions set_opts;
  const InjectionReport a = verify_injection(8, 151, set_opts);
  CHECK(a.mode == "image-set");

  VerifyOptions rt_opts;
  rt_opts.set_mode_cap = 0;
  rt_opts.workers = 2;
  const InjectionReport b = verify_injection(8, 151, rt_opts);
  CHECK(b.mode == "round-trip");

  CHECK(a.pass());
  CHECK(b.pass());
  CHECK(a.domain_size == b.domain_size);
  CHECK(a.image_size == b.image_size);

  // schedule independence: 1 worker and 2 workers give identical reports
  rt_opts.workers = 1;
  const InjectionReport c = verify_injection(8, 151, rt_opts);
  CHECK(to_json_string(b) == to_json_string(c));
}

TEST_CASE("all group labels appear across the sweep") {
  std::set<std::string> groups;
  PartitionConstraint dc;
  dc.min_part = 4;
  dc.max_part = 25;
  for (std::int64_t N = 21; N <= 60; ++N) {
    dc.weight = N;
    enumerate(dc, [&](const Partition& pi) {
      groups.insert(apply_phi(22, pi).label.group);
      return true;
    });
  }
  const std::set<std::string> expected{
      "A1", "A2", "A3", "A4", "A5", "A6", "B1", "B2", "B3", "B4", "B5",
      "C1", "D1", "D2", "D3", "E1", "E2", "F1", "F2", "G1", "G2", "G3",
      "G4", "H1", "I1", "I2", "J1", "K1"};
  CHECK(groups == expected);
}

TEST_CASE("label class matches the image's frequency of 3") {
  PartitionConstraint dc;
  dc.min_part = 4;
  dc.max_part = 25;
  for (std::int64_t N : {21, 30, 44, 59}) {
    dc.weight = N;
    enumerate(dc, [&](const Partition& pi) {
      const PhiResult r = apply_phi(22, pi);
      const std::int64_t f3 = r.image.multiplicity(3);
      REQUIRE(!r.label.group.empty());
      switch (r.label.group[0]) {
        case 'A': CHECK(f3 == 1); break;
        case 'B': CHECK(f3 == 2); break;
        case 'C': CHECK(f3 == 3); break;
        case 'D': CHECK(f3 == 4); break;
        case 'E': CHECK(f3 == 5); break;
        case 'F': CHECK(f3 == 6); break;
        case 'G': CHECK(f3 == 7); break;
        case 'H': CHECK(f3 == 8); break;
        case 'I': CHECK(f3 == 9); break;
        case 'J': CHECK(f3 == 10); break;
        case 'K':
          CHECK(f3 % 6 == 0);
          CHECK(f3 >= 12);
          break;
        default: FAIL("unexpected group label");
      }
      return true;
    });
  }
}

TEST_CASE("verification results are consistent with the series") {
  // image count <= codomain size; domain - codomain discrepancy is -H
  for (std::int64_t N : {30, 40, 50}) {
    const InjectionReport r = verify_injection(22, N);
    REQUIRE(r.pass());
    const Int i_size = count_set_I(22, 3, N);
    CHECK(Int(r.image_size) <= i_size);
    CHECK(Int(r.domain_size) - i_size == -h_comb(22, 3, N));
  }
}

TEST_CASE("two2 dichotomy probe") {
  const DichotomyProbe p7 = probe_two2_dichotomy(7);
  CHECK(p7.L == 7);
  CHECK(p7.N == 125);
  CHECK(p7.holds);
  CHECK(!p7.counterexample.has_value());

  const DichotomyProbe p9 = probe_two2_dichotomy(9);
  CHECK(p9.holds);
  CHECK_THROWS_AS(probe_two2_dichotomy(22), std::invalid_argument);
}

TEST_CASE("trace JSON shape") {
  const PhiResult r = phi_helpful2(22, Partition::parse("(4^1, 15^2)"));
  const std::string j = to_json_string(r);
  CHECK(j.find("\"group\":\"A4\"") != std::string::npos);
  CHECK(j.find("\"image\":\"(3^1, 4^4, 15^1)\"") != std::string::npos);
  CHECK(j.find("alternate") != std::string::npos);
}

TEST_CASE("report JSON shape") {
  const InjectionReport r = verify_injection(6, 67);
  const std::string j = to_json_string(r);
  CHECK(j.find("\"L\":6") != std::string::npos);
  CHECK(j.find("\"pass\":true") != std::string::npos);
  CHECK(j.find("\"mode\":\"image-set\"") != std::string::npos);
  CHECK(j.find("\"first_failure\":null") != std::string::npos);
  // determinism
  CHECK(to_json_string(verify_injection(6, 67)) == j);
}
