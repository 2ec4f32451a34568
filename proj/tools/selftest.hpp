#pragma once

#include <verlinde/scalars.hpp>

#include <optional>
#include <string>
#include <vector>

namespace verlinde::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Module invariants for one context. Field-valued checks run only when a
// context is supplied.
std::vector<CheckResult> run_selftest(const Levels& lv, const std::optional<ParamContext>& ctx);

}  // namespace verlinde::cli
