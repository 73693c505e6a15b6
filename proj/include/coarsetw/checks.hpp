#pragma once

#include <string>
#include <vector>

namespace coarsetw {

// One verified inequality: `measured` against `bound`, where `bound_name`
// names the constant the bound comes from (e.g. "2k-1", "q(c+2)").
struct Check {
  std::string name;
  std::string bound_name;
  long long measured = 0;
  long long bound = 0;
  bool pass = false;
};

inline Check check_at_most(std::string name, std::string bound_name, long long measured, long long bound) {
  return {std::move(name), std::move(bound_name), measured, bound, measured <= bound};
}

inline Check check_true(std::string name, bool holds) {
  return {std::move(name), "true", holds ? 1 : 0, 1, holds};
}

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace coarsetw
