#include <iostream>
#include <string>

#include "verba/atlas/checks.hpp"
#include "verba/error.hpp"

// Runs the acceptance checks (all of them, or those named after --only) and
// prints one line per check. Exit status 1 when any check fails.
int main(int argc, char** argv) {
  verba::atlas::VerifyOptions opts;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      opts.only.push_back(argv[++i]);
    } else if (a == "--budget-small") {
      opts.budget_small = true;
    } else {
      std::cerr << "usage: verba_acceptance [--only ID]... [--budget-small]\n";
      return 2;
    }
  }
  try {
    std::size_t failed = 0, total = 0;
    const auto report = verba::atlas::verify_paper(opts, [&](const verba::atlas::CheckResult& r) {
      ++total;
      failed += !(r.passed || r.skipped);
      std::cout << verba::atlas::format_line(r) << std::endl;
    });
    std::cout << total - failed << "/" << total << " checks passed" << std::endl;
    return report.all_passed() ? 0 : 1;
  } catch (const verba::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
