#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpart/genfun.hpp"
#include "qpart/harness.hpp"
#include "qpart/injection.hpp"
#include "qpart/semigroup.hpp"
#include "qpart/series.hpp"

namespace {

using nlohmann::json;

int cmd_coeffs(const std::string& series, std::int64_t L, std::int64_t s,
               std::optional<std::int64_t> k, std::int64_t order,
               const std::string& format) {
  const qpart::SeriesSpec spec{L, s, k};
  const qpart::TruncatedSeries h = qpart::h_closed(spec, order);
  const qpart::TruncatedSeries g = qpart::g_closed(L, s, order);
  if (format == "csv") {
    std::cout << "n,a,b\n";
    for (std::int64_t n = 0; n < order; ++n)
      std::cout << n << ',' << h.coeff(n).get_str() << ','
                << g.coeff(n).get_str() << '\n';
    return 0;
  }
  const qpart::TruncatedSeries& chosen = (series == "H") ? h : g;
  json j;
  j["series"] = series;
  j["L"] = L;
  j["s"] = s;
  j["k"] = spec.k_or_L();
  j["order"] = order;
  j["outside_theorem_hypotheses"] = spec.outside_theorem_hypotheses();
  std::vector<std::string> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order));
  for (std::int64_t n = 0; n < order; ++n)
    coeffs.push_back(chosen.coeff(n).get_str());
  j["coeffs"] = coeffs;
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_bounds(std::int64_t L, std::int64_t s, std::int64_t digit_cap) {
  const qpart::BoundsReport r = qpart::bounds(L, s, digit_cap);
  auto big = [](const qpart::BigOrLog& v) {
    json j;
    j["form"] = v.exact ? "exact" : "log10";
    if (v.exact)
      j["digits"] = v.exact_digits;
    else
      j["digits"] = nullptr;
    j["log10_estimate"] = v.log10_estimate;
    return j;
  };
  json j;
  j["L"] = r.L;
  j["s"] = r.s;
  j["P"] = r.P.get_str();
  j["gamma"] = big(r.gamma);
  j["Gamma"] = big(r.big_gamma);
  json ln_delta;
  ln_delta["form"] = r.ln_delta_exact ? "exact" : "log10";
  if (r.ln_delta_exact) {
    // ln(delta) = 3 Gamma is itself a huge integer; report its size, not it.
    qpart::Int v = *r.ln_delta_exact;
    ln_delta["digits"] = static_cast<std::int64_t>(mpz_sizeinbase(v.get_mpz_t(), 10));
  } else {
    ln_delta["digits"] = nullptr;
  }
  ln_delta["log10_of_ln_delta"] = r.log10_of_ln_delta;
  j["ln_delta"] = ln_delta;
  j["delta_prime"] = r.delta_prime_note;
  j["N_L"] = r.N_L;
  j["eta"] = r.eta_status;
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_semigroup(const std::vector<std::int64_t>& gens, std::int64_t n,
                  bool allow_empty) {
  json j;
  if (gens.size() == 2) {
    const qpart::TwoGenResult r = qpart::two_gen(gens[0], gens[1], n);
    j["generators"] = gens;
    j["n"] = n;
    j["count"] = r.count;
    if (r.example)
      j["example"] = r.example->multipliers;
    else
      j["example"] = nullptr;
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::optional<qpart::FixedGens> which;
  const std::vector<std::vector<std::int64_t>> known = {
      {4, 5, 6}, {5, 6, 7}, {4, 5, 6, 7}, {6, 7, 8, 9, 10, 11}};
  const std::vector<qpart::FixedGens> tags = {
      qpart::FixedGens::g456, qpart::FixedGens::g567, qpart::FixedGens::g4567,
      qpart::FixedGens::g6to11};
  for (std::size_t i = 0; i < known.size(); ++i)
    if (gens == known[i]) which = tags[i];
  if (!which) {
    std::cerr << "unsupported generator set; use two coprime generators or "
                 "one of 4,5,6 / 5,6,7 / 4,5,6,7 / 6,7,8,9,10,11\n";
    return 2;
  }
  const auto sol = qpart::solve_fixed(*which, n, allow_empty);
  j["generators"] = gens;
  j["n"] = n;
  if (sol)
    j["solution"] = sol->multipliers;
  else
    j["solution"] = nullptr;
  std::cout << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact toolkit for smallest-part partition comparison series: "
      "coefficient tables, verification suites, correction-polynomial "
      "search, injection sweeps, and bound reports. Worker count for sweeps "
      "comes from --workers or the QPART_WORKERS environment variable."};
  app.require_subcommand(1);

  // coeffs
  std::string series = "G", format = "json";
  std::int64_t L = 0, s = 0, order = 100;
  std::optional<std::int64_t> k_opt;
  auto* coeffs = app.add_subcommand("coeffs", "Print coefficient tables");
  coeffs->add_option("--series", series)->check(CLI::IsMember({"G", "H"}));
  coeffs->add_option("--L", L)->required();
  coeffs->add_option("--s", s)->required();
  std::int64_t k_val = -1;
  coeffs->add_option("--k", k_val, "defaults to L");
  coeffs->add_option("--order", order)->required();
  coeffs->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  // verify
  std::string check_name;
  qpart::CheckParams params;
  std::int64_t v_L = -1, v_s = -1, v_Lmin = -1, v_Lmax = -1, v_order = -1,
               v_Nmin = -1, v_Nmax = -1, v_mmax = -1, v_setcap = -1;
  int v_workers = 0;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("--check", check_name)
      ->required()
      ->check(CLI::IsMember(qpart::check_names()));
  verify->add_option("--L", v_L);
  verify->add_option("--s", v_s);
  verify->add_option("--Lmin", v_Lmin);
  verify->add_option("--Lmax", v_Lmax);
  verify->add_option("--order", v_order);
  verify->add_option("--Nmin", v_Nmin);
  verify->add_option("--Nmax", v_Nmax);
  verify->add_option("--m-max", v_mmax);
  verify->add_option("--set-cap", v_setcap);
  verify->add_option("--workers", v_workers);

  // corrections
  std::int64_t c_s = 0, c_Lmin = 0, c_Lmax = 0, c_order = 500;
  auto* corrections = app.add_subcommand(
      "corrections", "Minimal correction polynomials over a range of L");
  corrections->add_option("--s", c_s)->required();
  corrections->add_option("--Lmin", c_Lmin)->required();
  corrections->add_option("--Lmax", c_Lmax)->required();
  corrections->add_option("--order", c_order);

  // injection
  std::int64_t i_L = 0, i_N = -1, i_Nmax = -1, i_setcap = -1;
  int i_workers = 0;
  bool i_probe = false;
  std::string i_apply;
  auto* injection = app.add_subcommand(
      "injection", "Exhaustively verify the weight-class injection");
  injection->add_option("--L", i_L)->required();
  injection->add_option("--N", i_N);
  injection->add_option("--Nmax", i_Nmax);
  injection->add_option("--set-cap", i_setcap);
  injection->add_option("--workers", i_workers);
  injection->add_flag("--probe-dichotomy", i_probe,
                      "report whether the case-4 dichotomy already holds one "
                      "below the threshold (7 <= L <= 21)");
  injection->add_option("--apply", i_apply,
                        "apply the map to one partition, e.g. \"(25^1)\", and "
                        "print its image, case label and derivation trace");

  // semigroup
  std::vector<std::int64_t> g_gens;
  std::int64_t g_n = 0;
  bool g_allow_empty = false;
  auto* semigroup = app.add_subcommand("semigroup", "Representation queries");
  semigroup->add_option("--gens", g_gens)->required()->delimiter(',');
  semigroup->add_option("--n", g_n)->required();
  semigroup->add_flag("--allow-empty", g_allow_empty);

  // bounds
  std::int64_t b_L = 0, b_s = 0, b_cap = 100000000;
  auto* bounds_cmd = app.add_subcommand("bounds", "Bound quantities report");
  bounds_cmd->add_option("--L", b_L)->required();
  bounds_cmd->add_option("--s", b_s)->required();
  bounds_cmd->add_option("--digit-cap", b_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (coeffs->parsed()) {
      if (k_val >= 0) k_opt = k_val;
      return cmd_coeffs(series, L, s, k_opt, order, format);
    }
    if (verify->parsed()) {
      if (v_L >= 0) params.L = v_L;
      if (v_s >= 0) params.s = v_s;
      if (v_Lmin >= 0) params.Lmin = v_Lmin;
      if (v_Lmax >= 0) params.Lmax = v_Lmax;
      if (v_order >= 0) params.order = v_order;
      if (v_Nmin >= 0) params.Nmin = v_Nmin;
      if (v_Nmax >= 0) params.Nmax = v_Nmax;
      if (v_mmax >= 0) params.m_max = v_mmax;
      if (v_setcap >= 0) params.set_cap = v_setcap;
      params.workers = v_workers;
      const qpart::TheoremCheck check = qpart::run_check(check_name, params);
      std::cout << qpart::to_json_string(check) << '\n';
      return check.pass ? 0 : 1;
    }
    if (corrections->parsed()) {
      std::cout << qpart::to_json_string(
                       qpart::explore_corrections(c_s, c_Lmin, c_Lmax, c_order))
                << '\n';
      return 0;
    }
    if (injection->parsed()) {
      if (!i_apply.empty()) {
        const qpart::PhiResult r =
            qpart::apply_phi(i_L, qpart::Partition::parse(i_apply));
        std::cout << qpart::to_json_string(r) << '\n';
        return 0;
      }
      if (i_probe) {
        const qpart::DichotomyProbe probe = qpart::probe_two2_dichotomy(i_L);
        json j;
        j["L"] = probe.L;
        j["N"] = probe.N;
        j["dichotomy_holds"] = probe.holds;
        if (probe.counterexample)
          j["counterexample"] = *probe.counterexample;
        else
          j["counterexample"] = nullptr;
        std::cout << j.dump() << '\n';
        return 0;
      }
      if (i_N < 0) {
        std::cerr << "--N is required unless --probe-dichotomy is given\n";
        return 2;
      }
      qpart::VerifyOptions opts;
      if (i_setcap >= 0) opts.set_mode_cap = i_setcap;
      opts.workers = i_workers;
      const std::int64_t last = i_Nmax < 0 ? i_N : i_Nmax;
      bool all_pass = true;
      for (std::int64_t N = i_N; N <= last; ++N) {
        const qpart::InjectionReport r = qpart::verify_injection(i_L, N, opts);
        std::cout << qpart::to_json_string(r) << '\n';
        all_pass &= r.pass();
      }
      return all_pass ? 0 : 1;
    }
    if (semigroup->parsed()) return cmd_semigroup(g_gens, g_n, g_allow_empty);
    if (bounds_cmd->parsed()) return cmd_bounds(b_L, b_s, b_cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
