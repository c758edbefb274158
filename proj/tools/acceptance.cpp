// Prints one PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
#include "weylcoh/cache.hpp"
#include "weylcoh/moduli.hpp"
#include "weylcoh/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>

using namespace weylcoh;

namespace {

CheckResult all_of(std::string name, const std::vector<CheckResult>& parts) {
  CheckResult r{std::move(name), true, ""};
  for (const auto& p : parts) {
    if (p.ok) continue;
    r.ok = false;
    r.detail += (r.detail.empty() ? "" : " | ") + p.name + ": " + p.detail;
  }
  if (r.ok) r.detail = std::to_string(parts.size()) + " checks agree";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int threads = 1;
  std::string cache_dir = Cache::default_dir().string();
  app.add_option("--threads", threads)->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cache_dir, "artifact cache directory (default $WEYLCOH_CACHE)");
  CLI11_PARSE(app, argc, argv);

  std::unique_ptr<Cache> cache;
  if (!cache_dir.empty()) cache = std::make_unique<Cache>(cache_dir);
  WorkbenchOptions opt;
  opt.threads = threads;
  opt.cache = cache.get();
  ModuliWorkbench wb(opt);

  const std::vector<std::pair<std::string, std::function<CheckResult()>>> criteria{
      {"twisted point counts of five and six points",
       [&] { return all_of("counts", {check_counts(wb, 5), check_counts(wb, 6)}); }},
      {"S5 and S6 cohomology of points in general position",
       [&] { return all_of("points", {check_five_point_traces(wb), check_six_point_cohomology(wb)}); }},
      {"unique W(D5) lifts of the quartic space", [&] { return check_quartic_lifts(wb); }},
      {"Betti numbers of six points two ways", [&] { return check_six_point_betti(wb); }},
      {"W(E6) tables of the cubic strata",
       [&] {
         std::vector<CheckResult> parts;
         for (std::string id : {"D3n", "D3c", "D3_2n_hat", "D3_tn", "D3_3n_hat", "D3_tp"})
           parts.push_back(check_space(wb, id));
         return all_of("cubic strata", parts);
       }},
      {"Betti numbers of nodal cubics", [&] { return check_nodal_betti(wb); }},
      {"sieve for marked cubics", [&] { return check_sieve(wb); }},
      {"S5 tables of the quartic strata",
       [&] {
         std::vector<CheckResult> parts;
         for (const auto& id : reference::tabulated_spaces())
           if (id.rfind("D4", 0) == 0) parts.push_back(check_space(wb, id));
         return all_of("quartic strata", parts);
       }},
      {"property suite", [&] { return all_of("properties", property_checks(wb)); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {"", false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!r.ok) ++failed;
    std::cout << (r.ok ? "PASS" : "FAIL") << " " << i + 1 << ". " << criteria[i].first << " (" << r.detail << ", "
              << std::fixed << std::setprecision(1) << secs << " s)" << std::endl;
  }
  return failed ? 1 : 0;
}
