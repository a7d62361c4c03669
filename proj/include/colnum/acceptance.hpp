#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace colnum::acceptance {

struct Options {
  unsigned jobs = 1;
  bool extended_sweep = true;  // also run the sweep up to m = 3257
};

struct Outcome {
  Outcome() = default;
  Outcome(int i, std::string n) : id(i), name(std::move(n)) {}
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Runs criteria 1..10 in order. on_result fires after each one.
std::vector<Outcome> run_all(const Options& opt, const std::function<void(const Outcome&)>& on_result = {});

// "PASS 3 sweep: ..." style line.
std::string format(const Outcome& o);

}  // namespace colnum::acceptance
