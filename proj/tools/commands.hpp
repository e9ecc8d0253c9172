#pragma once

// Command-line front end, kept in a library so tests can drive it with
// captured streams.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "inertia/inertia_engine.hpp"

namespace inertia::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kCapExceeded = 3, kVerificationFailed = 4 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Golden examples: K_n, P_n, S_4, the star-path tree, S4 + S4, the four-
// and five-fold star sums.
std::vector<SuiteCheck> paper_suite(const BaseRegistry& registry);

}  // namespace inertia::cli
