#pragma once

#include <string>
#include <vector>

#include "nestbraid/caps.hpp"
#include "nestbraid/io.hpp"

namespace nestbraid {

struct Check {
  std::string module;
  std::string name;
  /// The identity or count being checked, in plain notation.
  std::string identity;
  bool pass = false;
  std::string details;
};

/// Checks in a fixed canonical order. A throwing check is recorded as a
/// failure with the exception message, never propagated.
struct VerificationSuite {
  std::vector<Check> checks;
  bool all_pass() const;
  Json to_json() const;
  /// One line per check: PASS/FAIL, module, name, details.
  std::string table() const;
};

/// "all" or one of exact-arith, arrangement, building-nested, wonderful,
/// garside.
const std::vector<std::string>& verify_scopes();
/// Throws InvalidInput for an unknown scope.
VerificationSuite run_verify(const std::string& scope = "all", const Caps& caps = {});

}  // namespace nestbraid
