#pragma once

// Hand-written checks for the CLI's JSON report, shared by the unit tests and
// the acceptance binary. docs/report-schema.json describes the same shape.

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "cmi/json.hpp"

namespace cmi::testing {

namespace detail {

inline void expect(std::ostringstream& errs, bool ok, const std::string& what) {
  if (!ok) errs << what << "; ";
}

inline bool is_ideal(const nlohmann::json& v) {
  if (!v.is_array()) return false;
  for (const auto& g : v)
    if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() || !g[1].is_number_integer() || g[0] < 0 ||
        g[1] < 0)
      return false;
  return true;
}

inline bool is_polynomial(const nlohmann::json& v) {
  if (!v.is_object() || v.value("doubled", false) != true || !v.contains("text") || !v["text"].is_string())
    return false;
  for (const char* key : {"m2", "n2", "mn", "m", "n"})
    if (!v.contains(key) || !v[key].is_number_integer()) return false;
  return true;
}

inline bool is_count(const nlohmann::json& v, const char* key) {
  return v.contains(key) && v[key].is_number_integer() && v[key] >= 0;
}

}  // namespace detail

/// Empty when `report` has the documented shape, otherwise a list of problems.
inline std::string report_schema_errors(const nlohmann::json& report) {
  using detail::expect;
  std::ostringstream errs;
  if (!report.is_object()) return "report is not an object";
  expect(errs, report.size() == 4, "unexpected top-level keys");
  expect(errs, report.contains("command") && report["command"].is_string(), "command must be a string");
  expect(errs, report.contains("ideals") && report["ideals"].is_object(), "ideals must be an object");
  expect(errs, report.contains("result") && report["result"].is_object(), "result must be an object");
  expect(errs, report.contains("warnings") && report["warnings"].is_array(), "warnings must be an array");
  if (!errs.str().empty()) return errs.str();

  for (const auto& [key, value] : report["ideals"].items()) {
    expect(errs, key == "I" || key == "J", "unknown ideal role " + key);
    expect(errs, detail::is_ideal(value), "ideal " + key + " is not a list of [u, v]");
  }
  for (const auto& w : report["warnings"]) expect(errs, w.is_string(), "warning is not a string");

  const auto& command = report["command"].get_ref<const std::string&>();
  const auto& r = report["result"];
  if (command == "closure") {
    expect(errs, r.contains("closure") && detail::is_ideal(r["closure"]), "closure missing");
    expect(errs, r.contains("complete") && r["complete"].is_boolean(), "complete missing");
  } else if (command == "factor") {
    expect(errs, r.contains("factors") && r["factors"].is_array(), "factors missing");
    if (r.contains("factors"))
      for (const auto& f : r["factors"])
        expect(errs, detail::is_count(f, "p") && detail::is_count(f, "q") && detail::is_count(f, "n"),
               "factor needs p, q, n");
    expect(errs, r.contains("text") && r["text"].is_string(), "text missing");
  } else if (command == "colength") {
    expect(errs, detail::is_count(r, "colength"), "colength missing");
  } else if (command == "bhatt") {
    expect(errs, r.contains("polynomial") && detail::is_polynomial(r["polynomial"]), "polynomial malformed");
    expect(errs, r.contains("mixed_multiplicities") && detail::is_count(r["mixed_multiplicities"], "e20") &&
                     detail::is_count(r["mixed_multiplicities"], "e11") &&
                     detail::is_count(r["mixed_multiplicities"], "e02"),
           "mixed_multiplicities malformed");
  } else if (command == "maxideal") {
    expect(errs, r.contains("polynomial") && detail::is_polynomial(r["polynomial"]), "polynomial malformed");
  } else if (command == "hilbert" || command == "fiber") {
    expect(errs, detail::is_count(r, "m") && detail::is_count(r, command.c_str()), command + " missing");
  } else if (command == "gens") {
    expect(errs, detail::is_count(r, "generators"), "generators missing");
  } else if (command == "verify") {
    expect(errs, r.contains("pairs") && r["pairs"].is_array(), "pairs missing");
    expect(errs, detail::is_count(r, "cells_checked") && detail::is_count(r, "failures"), "counts missing");
    expect(errs, r.contains("pass") && r["pass"].is_boolean(), "pass missing");
    if (r.contains("pairs"))
      for (const auto& p : r["pairs"]) {
        expect(errs, p.contains("I") && detail::is_ideal(p["I"]) && p.contains("J") && detail::is_ideal(p["J"]),
               "pair ideals malformed");
        expect(errs, p.contains("polynomial") && detail::is_polynomial(p["polynomial"]), "pair polynomial malformed");
        expect(errs, p.contains("pass") && p["pass"].is_boolean(), "pair pass missing");
        expect(errs, p.contains("cells") && p["cells"].is_array(), "cells missing");
        if (p.contains("cells"))
          for (const auto& c : p["cells"])
            expect(errs,
                   detail::is_count(c, "m") && detail::is_count(c, "n") && detail::is_count(c, "oracle") &&
                       c.contains("formula") && c["formula"].is_number_integer() && c.contains("pass") &&
                       c["pass"].is_boolean(),
                   "cell malformed");
      }
  } else {
    errs << "unknown command " << command << "; ";
  }
  return errs.str();
}

/// Rebuilds the plain-text output from a JSON report, so text and JSON modes
/// can be checked for the same numbers.
inline std::string text_payload(const nlohmann::json& report) {
  const auto& command = report["command"].get_ref<const std::string&>();
  const auto& r = report["result"];
  if (command == "closure") return cli::render_ideal(ideal_from_json(r["closure"]));
  if (command == "factor") {
    std::string out;
    for (const auto& f : r["factors"]) {
      if (!out.empty()) out += " · ";
      const auto power = [](const char* var, Int e) { return e == 1 ? std::string(var) : var + ("^" + std::to_string(e)); };
      out += "(" + power("x", f["p"]) + ", " + power("y", f["q"]) + ")^" + std::to_string(f["n"].get<Int>());
    }
    return out;
  }
  if (command == "colength") return std::to_string(r["colength"].get<Int>());
  if (command == "bhatt" || command == "maxideal") return r["polynomial"]["text"];
  if (command == "hilbert" || command == "fiber") return std::to_string(r[command].get<Int>());
  if (command == "gens") return std::to_string(r["generators"].get<Int>());
  if (command == "verify") {
    std::ostringstream out;
    const bool numbered = r["pairs"].size() > 1 || !report["ideals"].contains("I");
    int k = 0;
    for (const auto& p : r["pairs"]) {
      if (numbered) out << "pair " << ++k << '\n';
      out << "I = " << cli::render_ideal(ideal_from_json(p["I"])) << "\nJ = "
          << cli::render_ideal(ideal_from_json(p["J"])) << "\nP(m,n) = " << p["polynomial"]["text"].get<std::string>()
          << '\n';
      for (const auto& c : p["cells"])
        out << "(m,n)=(" << c["m"] << ',' << c["n"] << ") oracle=" << c["oracle"] << " formula=" << c["formula"]
            << (c["pass"].get<bool>() ? " PASS" : " FAIL") << '\n';
    }
    const Int cells = r["cells_checked"];
    const Int failures = r["failures"];
    out << "verify: " << cells - failures << '/' << cells << " cells match" << (r["pass"].get<bool>() ? " PASS" : " FAIL");
    return out.str();
  }
  return {};
}

}  // namespace cmi::testing
