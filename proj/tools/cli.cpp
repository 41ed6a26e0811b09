#include "cli.hpp"

#include <cctype>
#include <istream>
#include <iterator>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>  // vendored single header
#else
#include <CLI/CLI.hpp>
#endif

#include "cmi/bhattacharya.hpp"
#include "cmi/corpus.hpp"
#include "cmi/json.hpp"
#include "cmi/oracle.hpp"

namespace cmi::cli {

using nlohmann::json;

namespace {

class ExpressionParser {
public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  MonomialIdeal parse() {
    std::vector<LatticePoint> gens;
    skip_space();
    if (at_end()) fail("empty ideal expression");
    gens.push_back(monomial());
    skip_space();
    while (!at_end()) {
      expect(',');
      gens.push_back(monomial());
      skip_space();
    }
    return MonomialIdeal::normalize(gens);
  }

private:
  LatticePoint monomial() {
    skip_space();
    if (peek() == '1') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("only the constant 1 may appear as a coefficient");
      return {0, 0};
    }
    LatticePoint exponent = factor();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
      } else if (peek() != 'x' && peek() != 'y') {
        return exponent;
      }
      exponent = exponent + factor();
    }
  }

  LatticePoint factor() {
    const char var = peek();
    if (var != 'x' && var != 'y') fail(at_end() ? "expected a monomial, found end of input" : "expected x, y or 1");
    ++pos_;
    Int power = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      power = exponent_value();
    }
    return var == 'x' ? LatticePoint{power, 0} : LatticePoint{0, power};
  }

  Int exponent_value() {
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    Int value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Int digit = peek() - '0';
      if (value > (std::numeric_limits<Int>::max() - digit) / 10) fail("exponent too large");
      value = value * 10 + digit;
      ++pos_;
    }
    if (peek() == '.' || peek() == '/') fail("non-integer exponent");
    return value;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_monomial(LatticePoint p) {
  if (p.u == 0 && p.v == 0) return "1";
  std::string out;
  auto power = [&](char var, Int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  };
  power('x', p.u);
  power('y', p.v);
  return out;
}

struct Options {
  std::string i_text;
  std::string j_text;
  bool json_output = false;
  bool autoclose = false;
  Int power = 1;
  Int max_m = 4;
  Int max_n = 4;
  Int random = 0;
  std::uint64_t seed = 1;
  Int max_exponent = 20;
  bool inject_fault = false;
};

class Session {
public:
  Session(const Options& opts, std::istream& in) : opts_(opts), in_(in) {}

  CompletenessPolicy policy() const {
    return opts_.autoclose ? CompletenessPolicy::autoclose : CompletenessPolicy::strict;
  }

  MonomialIdeal ideal(const std::string& text, const char* role, Report& report) {
    if (text.empty()) throw CLI::RequiredError(std::string("-") + role);
    std::string source = text;
    if (source == "-") {
      if (stdin_used_) throw CLI::ValidationError("only one ideal may be read from stdin");
      stdin_used_ = true;
      source.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    }
    auto parsed = parse_ideal(source);
    report.ideals[role[0] == 'i' ? "I" : "J"] = to_json(parsed);
    return parsed;
  }

private:
  const Options& opts_;
  std::istream& in_;
  bool stdin_used_ = false;
};

// One oracle-versus-formula sweep over the (m, n) grid.
bool verify_pair(const MonomialIdeal& i, const MonomialIdeal& j, const Options& opts, Report& report,
                 std::ostringstream& text) {
  auto poly = bhattacharya_polynomial(i, j, opts.autoclose ? CompletenessPolicy::autoclose : CompletenessPolicy::strict,
                                      &report.warnings);
  if (opts.inject_fault) poly.cross = poly.cross + HalfInteger::from_integer(1);
  const auto ci = opts.autoclose ? integral_closure(i) : i;
  const auto cj = opts.autoclose ? integral_closure(j) : j;
  const auto table = oracle::brute_table(ci, cj, opts.max_m, opts.max_n);

  json cells = json::array();
  bool all_pass = true;
  text << "I = " << render_ideal(ci) << "\nJ = " << render_ideal(cj) << "\nP(m,n) = " << poly.to_string() << '\n';
  for (Int m = 0; m <= opts.max_m; ++m) {
    for (Int n = 0; n <= opts.max_n; ++n) {
      const Int expected = table.at(m, n);
      const Int formula = poly.evaluate(m, n);
      const bool pass = expected == formula;
      all_pass = all_pass && pass;
      text << "(m,n)=(" << m << ',' << n << ") oracle=" << expected << " formula=" << formula
           << (pass ? " PASS" : " FAIL") << '\n';
      cells.push_back({{"m", m}, {"n", n}, {"oracle", expected}, {"formula", formula}, {"pass", pass}});
    }
  }
  report.result["pairs"].push_back(
      {{"I", to_json(ci)}, {"J", to_json(cj)}, {"polynomial", to_json(poly)}, {"cells", std::move(cells)},
       {"pass", all_pass}});
  return all_pass;
}

int dispatch(const std::string& command, const Options& opts, std::istream& in, Report& report) {
  Session session(opts, in);
  const auto policy = session.policy();
  auto* warnings = &report.warnings;
  report.command = command;

  if (command == "closure") {
    const auto i = session.ideal(opts.i_text, "i", report);
    const auto closed = integral_closure(i);
    report.result = {{"closure", to_json(closed)}, {"complete", closed == i}};
    report.text = render_ideal(closed);
  } else if (command == "factor") {
    const auto f = zariski_factor(session.ideal(opts.i_text, "i", report), policy, warnings);
    report.text = render_factorization(f);
    report.result = {{"factors", to_json(f)}, {"text", report.text}};
  } else if (command == "colength") {
    const Int value = colength(session.ideal(opts.i_text, "i", report), policy, warnings);
    report.result = {{"colength", value}};
    report.text = std::to_string(value);
  } else if (command == "bhatt") {
    const auto i = session.ideal(opts.i_text, "i", report);
    const auto j = session.ideal(opts.j_text, "j", report);
    const auto poly = bhattacharya_polynomial(i, j, policy, warnings);
    const auto mixed = mixed_multiplicities(i, j, policy);  // warnings already recorded
    report.result = {{"polynomial", to_json(poly)}, {"mixed_multiplicities", to_json(mixed)}};
    report.text = poly.to_string();
  } else if (command == "maxideal") {
    const auto poly = with_maximal_ideal(session.ideal(opts.i_text, "i", report), policy, warnings);
    report.result = {{"polynomial", to_json(poly)}};
    report.text = poly.to_string();
  } else if (command == "hilbert") {
    const Int value = hilbert_function(session.ideal(opts.i_text, "i", report), opts.power, policy, warnings);
    report.result = {{"m", opts.power}, {"hilbert", value}};
    report.text = std::to_string(value);
  } else if (command == "fiber") {
    const Int value = fiber_function(session.ideal(opts.i_text, "i", report), opts.power, policy, warnings);
    report.result = {{"m", opts.power}, {"fiber", value}};
    report.text = std::to_string(value);
  } else if (command == "gens") {
    const Int value = min_generators(session.ideal(opts.i_text, "i", report), policy, warnings);
    report.result = {{"generators", value}};
    report.text = std::to_string(value);
  } else if (command == "verify") {
    report.result = {{"pairs", json::array()}};
    std::ostringstream text;
    bool pass = true;
    if (opts.random > 0) {
      std::mt19937_64 rng(opts.seed);
      for (Int k = 0; k < opts.random; ++k) {
        const auto i = random_complete_ideal(rng, opts.max_exponent, opts.max_exponent);
        const auto j = random_complete_ideal(rng, opts.max_exponent, opts.max_exponent);
        text << "pair " << k + 1 << '\n';
        pass = verify_pair(i, j, opts, report, text) && pass;
      }
    } else {
      const auto i = session.ideal(opts.i_text, "i", report);
      const auto j = opts.j_text.empty() ? MonomialIdeal::maximal() : session.ideal(opts.j_text, "j", report);
      if (opts.j_text.empty()) report.ideals["J"] = to_json(j);
      pass = verify_pair(i, j, opts, report, text);
    }
    Int cells = 0;
    Int failures = 0;
    for (const auto& p : report.result["pairs"])
      for (const auto& c : p["cells"]) {
        ++cells;
        if (!c["pass"].get<bool>()) ++failures;
      }
    report.result["cells_checked"] = cells;
    report.result["failures"] = failures;
    report.result["pass"] = pass;
    text << "verify: " << (cells - failures) << '/' << cells << " cells match" << (pass ? " PASS" : " FAIL");
    report.text = text.str();
    return pass ? kSuccess : kVerificationFailure;
  }
  return kSuccess;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '[') {
    json value;
    try {
      value = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError("malformed JSON ideal", e.byte > 0 ? e.byte - 1 : 0);
    }
    try {
      return ideal_from_json(value);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), first);
    }
  }
  return ExpressionParser(text).parse();
}

std::string render_ideal(const MonomialIdeal& ideal) {
  std::string out;
  const auto& gens = ideal.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    if (!out.empty()) out += ", ";
    out += render_monomial(*it);
  }
  return out;
}

std::string render_factorization(const BlockFactorization& factors) {
  std::string out;
  for (const auto& f : factors.factors()) {
    if (!out.empty()) out += " · ";
    out += "(" + render_monomial({f.block.p(), 0}) + ", " + render_monomial({0, f.block.q()}) + ")^" +
           std::to_string(f.multiplicity);
  }
  return out;
}

json Report::to_json() const {
  return {{"command", command}, {"ideals", ideals}, {"result", result}, {"warnings", warnings}};
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral closure, Zariski factorization, colength and Bhattacharya polynomials of complete "
               "monomial ideals in k[x,y]",
               "cmi"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub, bool needs_j) {
    sub->add_option("-i,--ideal", opts.i_text, "ideal I: \"x^3, x*y, y^3\", [[3,0],[1,1],[0,3]], or - for stdin");
    if (needs_j) sub->add_option("-j,--second", opts.j_text, "ideal J, same syntax as -i");
    sub->add_flag("--json", opts.json_output, "emit a JSON report");
    sub->add_flag("--autoclose", opts.autoclose, "replace incomplete input by its integral closure");
  };
  add_common(app.add_subcommand("closure", "integral closure of I"), false);
  add_common(app.add_subcommand("factor", "Zariski factorization of I into block ideals"), false);
  add_common(app.add_subcommand("colength", "colength l(R/I)"), false);
  add_common(app.add_subcommand("bhatt", "Bhattacharya polynomial l(R/I^m J^n)"), true);
  add_common(app.add_subcommand("maxideal", "l(R/I^m (x,y)^n) from the edge data of I"), false);
  auto* hilbert = app.add_subcommand("hilbert", "l(I^m/I^(m+1))");
  add_common(hilbert, false);
  hilbert->add_option("-m,--power", opts.power, "power m")->check(CLI::NonNegativeNumber);
  auto* fiber = app.add_subcommand("fiber", "l(I^m/(x,y)I^m)");
  add_common(fiber, false);
  fiber->add_option("-m,--power", opts.power, "power m")->check(CLI::NonNegativeNumber);
  add_common(app.add_subcommand("gens", "minimal number of generators of I"), false);
  auto* verify = app.add_subcommand("verify", "compare the closed form with brute-force counting");
  add_common(verify, true);
  verify->add_option("--max-m", opts.max_m, "largest m in the grid")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-n", opts.max_n, "largest n in the grid")->check(CLI::NonNegativeNumber);
  verify->add_option("--random", opts.random, "check N random complete pairs instead of -i/-j")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", opts.seed, "seed for --random");
  verify->add_option("--max-exponent", opts.max_exponent, "bound on a_I, b_I for --random")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", opts.inject_fault, "corrupt the mn coefficient (self-test of the harness)");

  std::vector<const char*> argv{"cmi"};
  for (const auto& a : args) argv.push_back(a.c_str());

  Report report;
  int code = kSuccess;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    const auto* sub = app.get_subcommands().front();
    code = dispatch(sub->get_name(), opts, in, report);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kSuccess : kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kConsistencyError;
  }

  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  if (opts.json_output)
    out << report.to_json().dump(2) << '\n';
  else
    out << report.text << '\n';
  return code;
}

}  // namespace cmi::cli
