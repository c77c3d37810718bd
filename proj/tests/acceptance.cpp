// Runs the suites with the default configuration and prints one line per
// acceptance criterion.  A criterion passes when every check tagged with it
// passes.
//
// Exit status is 0 when the failing set equals the --known-failing list
// (empty by default), so a criterion that starts passing or a new failure
// both turn the ctest entry red.

#include <chrono>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "eigenmonad/suites.hpp"

using namespace eigenmonad;

namespace {

const char* kTitles[15] = {"",
                           "Passi ranks, free groups",
                           "Passi ranks, free abelian groups",
                           "ideal equality",
                           "monad laws",
                           "eigenring examples",
                           "four descriptions of the eigenmonad",
                           "primitivity for gr",
                           "Hall sets",
                           "primitivity for fr",
                           "abelianization",
                           "outer exchange",
                           "characteristic-two exterior example",
                           "analyticity slice",
                           "polynomial-degree bound"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> known;
  int jobs = 1;
  bool verbose = false;
  app.add_option("--known-failing", known, "Criteria expected to fail");
  app.add_option("--jobs", jobs);
  app.add_flag("-v,--verbose", verbose, "Print failing checks");
  CLI11_PARSE(app, argc, argv);

  Config cfg;
  cfg.jobs = jobs;
  const std::vector<std::string> names{"passi-ranks", "ideal-equality", "monad-laws",     "eigenring-examples", "prim-gr",
                                       "prim-fr",     "abelianization", "outer",          "adjunction"};
  std::vector<Check> all;
  for (auto& n : names) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = suites::run(n, cfg);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "[" << n << " " << std::fixed << std::setprecision(1) << s << "s]\n";
    all.insert(all.end(), r.checks.begin(), r.checks.end());
  }

  std::set<int> failing;
  for (int k = 1; k <= 14; ++k) {
    int count = 0, bad = 0;
    for (auto& c : all)
      if (c.criterion == k) {
        ++count;
        bad += !c.pass;
      }
    bool pass = count > 0 && bad == 0;
    if (!pass) failing.insert(k);
    std::cout << "criterion " << k << " (" << kTitles[k] << "): " << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass && verbose)
      for (auto& c : all)
        if (c.criterion == k && !c.pass)
          std::cout << "    " << c.id << ": computed " << c.computed.dump() << (c.note.empty() ? "" : "; " + c.note)
                    << "\n";
  }
  return failing == std::set<int>(known.begin(), known.end()) ? 0 : 1;
}
