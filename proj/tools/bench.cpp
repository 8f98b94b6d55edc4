#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msla/verify.hpp"

namespace {

bool same_report(const msla::SuiteReport& a, const msla::SuiteReport& b) {
  if (a.passed != b.passed || a.failed != b.failed || a.unknown != b.unknown ||
      a.failures.size() != b.failures.size())
    return false;
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    const msla::TrialFailure& x = a.failures[i];
    const msla::TrialFailure& y = b.failures[i];
    if (x.trial != y.trial || x.input != y.input || x.expected != y.expected ||
        x.got != y.got)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial versus parallel timing of the property suites"};
  std::uint64_t trials = 120;
  std::uint64_t seed = 1;
  std::vector<std::string> suites = msla::suite_names();
  app.add_option("--trials", trials, "trials per suite")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "base seed");
  app.add_option("--suite", suites, "suites to run (default: all)");
  CLI11_PARSE(app, argc, argv);

  std::cout << std::left << std::setw(22) << "suite" << std::right
            << std::setw(8) << "trials" << std::setw(12) << "serial ms"
            << std::setw(13) << "parallel ms" << std::setw(9) << "speedup"
            << std::setw(12) << "reports" << "\n";
  bool all_same = true;
  for (const std::string& name : suites) {
    msla::SuiteConfig cfg;
    cfg.suite = name;
    cfg.trials = trials;
    cfg.seed = seed;
    const msla::SuiteReport s = msla::run_suite_serial(cfg);
    const msla::SuiteReport p = msla::run_suite(cfg);
    const bool same = same_report(s, p);
    all_same = all_same && same;
    std::cout << std::left << std::setw(22) << name << std::right
              << std::setw(8) << trials << std::setw(12) << std::fixed
              << std::setprecision(1) << s.wall_ms << std::setw(13)
              << p.wall_ms << std::setw(9) << std::setprecision(2)
              << (p.wall_ms > 0 ? s.wall_ms / p.wall_ms : 0.0)
              << std::setw(12) << (same ? "identical" : "DIFFER") << "\n";
  }
  return all_same ? 0 : 1;
}
