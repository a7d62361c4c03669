#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "colnum/acceptance.hpp"

// One PASS/FAIL line per criterion. --quick skips the extended sweep,
// --jobs N sets the thread budget.
int main(int argc, char** argv) {
  colnum::acceptance::Options opt;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--quick") {
      opt.extended_sweep = false;
    } else if (a == "--jobs" && i + 1 < argc) {
      opt.jobs = static_cast<unsigned>(std::max(1, std::atoi(argv[++i])));
    } else {
      std::cerr << "usage: colnum_acceptance [--quick] [--jobs N]\n";
      return 2;
    }
  }
  bool all = true;
  colnum::acceptance::run_all(opt, [&](const colnum::acceptance::Outcome& o) {
    std::cout << colnum::acceptance::format(o) << std::endl;
    all = all && o.passed;
  });
  return all ? 0 : 1;
}
