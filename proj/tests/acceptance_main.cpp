// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <iostream>
#include <string>
#include <vector>

#include "partzeta/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> only(argv + 1, argv + argc);
  const auto results = pz::run_acceptance(only);
  unsigned failed = 0;
  for (const auto& r : results) {
    std::cout << pz::format_result(r) << std::endl;
    failed += r.pass ? 0 : 1;
  }
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
