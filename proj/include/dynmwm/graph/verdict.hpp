#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dynmwm {

struct Verdict {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }
  void merge(const Verdict& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace dynmwm
