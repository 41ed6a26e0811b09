#pragma once

// Front end shared by the `cmi` executable and the test suites: ideal
// expression parsing and rendering, report assembly, and command dispatch.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cmi/factorization.hpp"
#include "cmi/monomial_ideal.hpp"

namespace cmi::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDomainError = 2,
  kVerificationFailure = 3,
  kConsistencyError = 4,
};

/// Parses "x^3, x*y, y^3" style monomial lists ("1" is the unit monomial,
/// "^1" optional) or a JSON array of [u, v] pairs. Throws ParseError.
MonomialIdeal parse_ideal(std::string_view text);

/// Inverse of parse_ideal: generators by decreasing x-degree, "1" for the
/// unit monomial.
std::string render_ideal(const MonomialIdeal& ideal);

/// "(x, y^2)^1 · (x^2, y)^1"
std::string render_factorization(const BlockFactorization& factors);

struct Report {
  std::string command;
  nlohmann::json ideals = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> warnings;
  std::string text;  // human-readable payload, printed without decoration

  /// {"command", "ideals", "result", "warnings"}
  nlohmann::json to_json() const;
};

/// Runs one invocation. `args` excludes the program name. Text or JSON goes
/// to `out`; warnings and errors go to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cmi::cli
