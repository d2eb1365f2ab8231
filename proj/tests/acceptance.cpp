// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "blockmod/cli.hpp"
#include "blockmod/suite.hpp"
#include "process_runner.hpp"

namespace {

using blockmod::Check;

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<std::vector<Check>()> run;
};

constexpr std::uint64_t kSeed = 1;

std::string summary(const std::vector<Check>& checks) {
  std::string out;
  for (const auto& c : checks) {
    if (!out.empty()) out += "; ";
    out += c.name + "=" + blockmod::to_string(c.status);
    if (!c.passed()) out += " " + c.witness.dump();
  }
  return out;
}

}  // namespace

int main() {
  using namespace blockmod;
  // Criteria 4 and 5 come from one closure run.
  std::vector<Check> dichotomy;
  auto dichotomy_check = [&](std::size_t k) {
    if (dichotomy.empty()) {
      SplitMix64 rng = criterion_rng(kSeed, 4);
      for (auto& c : dichotomy_suite(rng)) dichotomy.push_back(std::move(c));
    }
    return std::vector<Check>{dichotomy[k]};
  };
  auto with_rng = [](int id, Check (*f)(SplitMix64&)) {
    return [id, f] {
      SplitMix64 rng = criterion_rng(kSeed, id);
      return std::vector<Check>{f(rng)};
    };
  };
  using RngSuite = Check (*)(SplitMix64&);

  const std::vector<Criterion> criteria{
      {1, "Jacobi identity on [-3,3]^2 + D2, five values of q", 30, [] { return std::vector<Check>{jacobi_suite()}; }},
      {2, "module axioms on [-2,2]^2 + D2, 10 vectors, 3 parameter sets", 60,
       with_rng(2, static_cast<RngSuite>(module_axiom_suite))},
      {3, "transposed action form fails, canonical form holds", 30,
       with_rng(3, static_cast<RngSuite>(transposed_control))},
      {4, "closure dichotomy at D=5, B=7", 300, [&] { return dichotomy_check(0); }},
      {5, "Omega' invariance certificate", 300, [&] { return dichotomy_check(1); }},
      {6, "Witt restriction along (1,0), (2,3), (-1,4)", 10, with_rng(6, static_cast<RngSuite>(witt_suite))},
      {7, "identity replays on [-3,3]^2", 60, with_rng(7, static_cast<RngSuite>(replay_suite))},
      {8, "isomorphism rigidity on a 10-point grid", 5, [] { return std::vector<Check>{iso_suite()}; }},
      {9, "difference-equation polynomial round trip", 5, with_rng(9, static_cast<RngSuite>(lemma_poly_suite))},
      {10, "command-line examples and determinism", 5,
       [] { return std::vector<Check>{cli::cli_end_to_end(test_support::process_runner(BLOCKMOD_CLI_PATH))}; }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Check> checks = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = !checks.empty();
    for (const auto& ch : checks) ok = ok && ch.passed();
    const bool in_budget = secs <= c.budget_seconds;
    std::string detail = summary(checks);
    if (!in_budget) detail += "; over time budget of " + std::to_string(static_cast<int>(c.budget_seconds)) + " s";
    std::printf("criterion %2d [PRIMARY] %-4s %-55s %7.2f s  %s\n", c.id, ok && in_budget ? "PASS" : "FAIL", c.title,
                secs, detail.c_str());
    std::fflush(stdout);
    if (!(ok && in_budget)) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
