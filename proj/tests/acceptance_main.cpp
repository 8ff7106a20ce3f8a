// Dedicated acceptance binary: runs every criterion, prints one line per
// criterion, and exits nonzero if any fails. An optional argument sets the
// seed for the perturbation controls.

#include <cstdlib>
#include <iostream>

#include "currycat/acceptance.hpp"

int main(int argc, char** argv) {
  unsigned seed = 1;
  if (argc > 1) seed = static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10));
  auto results = currycat::run_acceptance(seed);
  std::cout << currycat::format_acceptance(results);
  for (const auto& r : results)
    if (!r.pass) return 1;
  return 0;
}
