#ifndef BLOCKMOD_CLI_HPP
#define BLOCKMOD_CLI_HPP

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockmod/algebra.hpp"
#include "blockmod/closure.hpp"
#include "blockmod/identities.hpp"
#include "blockmod/omega.hpp"
#include "blockmod/parse.hpp"
#include "blockmod/random.hpp"
#include "blockmod/suite.hpp"

namespace blockmod::cli {

/// Bad command line or configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOutput {
  std::string out;
  std::string err;
  int exit_code = 0;
};

using Runner = std::function<CommandOutput(const std::vector<std::string>&)>;

struct RunConfig {
  Rational q{1};
  Rational lambda1{1};
  Rational lambda2{1};
  Rational alpha{0};
  long degree_bound = 3;
  std::optional<long> box_radius;  // defaults to D + 2
  std::uint64_t rng_seed = 1;
  long sweep_count = 3;

  long effective_box_radius() const { return box_radius.value_or(default_box_radius(static_cast<int>(degree_bound))); }

  ParamSet params() const { return ParamSet(q, lambda1, lambda2, alpha); }

  void validate() const {
    if (degree_bound < 1) throw UsageError("D must be >= 1");
    if (effective_box_radius() < 1) throw UsageError("B must be >= 1");
    if (sweep_count < 1) throw UsageError("sweep_count must be >= 1");
    try {
      (void)params();
    } catch (const MathError& e) {
      throw UsageError(e.what());
    }
  }
};

inline Json to_json(const RunConfig& c) {
  Json j;
  j["q"] = c.q.str();
  j["lambda"] = Json::array({c.lambda1.str(), c.lambda2.str()});
  j["alpha"] = c.alpha.str();
  j["D"] = c.degree_bound;
  j["B"] = c.effective_box_radius();
  j["rng_seed"] = c.rng_seed;
  j["sweep_count"] = c.sweep_count;
  return j;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(trim(part));
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

inline Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(name + ": " + e.what());
  }
}

inline std::vector<Rational> rational_list(const std::string& name, const std::string& text, std::size_t count) {
  const auto parts = split_commas(text);
  if (parts.size() != count)
    throw UsageError(name + ": expected " + std::to_string(count) + " comma-separated values, got '" + text + "'");
  std::vector<Rational> out;
  for (const auto& p : parts) out.push_back(rational_arg(name, p));
  return out;
}

inline long integer_arg(const std::string& name, const std::string& text) {
  const Rational r = rational_arg(name, text);
  if (!r.is_integer() || !r.numerator().fits_slong_p()) throw UsageError(name + ": expected an integer, got '" + text + "'");
  return r.numerator().get_si();
}

inline std::vector<long> integer_list(const std::string& name, const std::string& text, std::size_t count) {
  const auto parts = split_commas(text);
  if (parts.size() != count)
    throw UsageError(name + ": expected " + std::to_string(count) + " comma-separated integers, got '" + text + "'");
  std::vector<long> out;
  for (const auto& p : parts) out.push_back(integer_arg(name, p));
  return out;
}

inline std::uint64_t seed_arg(const std::string& name, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(name + ": expected a nonnegative integer, got '" + text + "'");
  try {
    return std::stoull(t);
  } catch (const std::exception&) {
    throw UsageError(name + ": out of range: '" + text + "'");
  }
}

inline void set_key(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "q") {
    c.q = rational_arg(key, value);
  } else if (key == "lambda") {
    const auto l = rational_list(key, value, 2);
    c.lambda1 = l[0];
    c.lambda2 = l[1];
  } else if (key == "alpha") {
    c.alpha = rational_arg(key, value);
  } else if (key == "D") {
    c.degree_bound = integer_arg(key, value);
  } else if (key == "B") {
    c.box_radius = integer_arg(key, value);
  } else if (key == "rng_seed") {
    c.rng_seed = seed_arg(key, value);
  } else if (key == "sweep_count") {
    c.sweep_count = integer_arg(key, value);
  } else {
    throw UsageError("unknown configuration key '" + key + "'");
  }
}

/// Reads key=value lines; blank lines and lines starting with '#' are skipped.
inline void apply_config_file(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    set_key(c, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
}

inline Json poly_list(const std::vector<Poly2>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

}  // namespace detail

/// Raw option text as given on the command line; applied over the config file.
struct GlobalFlags {
  std::optional<std::string> config_path;
  std::vector<std::pair<std::string, std::optional<std::string>>> values{
      {"q", {}}, {"lambda", {}}, {"alpha", {}}, {"D", {}}, {"B", {}}, {"rng_seed", {}}, {"sweep_count", {}}};

  std::optional<std::string>& get(const std::string& key) {
    for (auto& [k, v] : values)
      if (k == key) return v;
    throw std::logic_error("unknown flag key " + key);
  }

  RunConfig resolve() const {
    RunConfig c;
    if (config_path) detail::apply_config_file(c, *config_path);
    for (const auto& [k, v] : values)
      if (v) detail::set_key(c, k, *v);
    c.validate();
    return c;
  }
};

inline Json report_json(const std::string& command, const RunConfig& config, const std::vector<Check>& checks) {
  Json j;
  j["command"] = command;
  j["config"] = to_json(config);
  Json cs = Json::array();
  bool ok = true;
  for (const auto& c : checks) {
    cs.push_back(blockmod::to_json(c));
    ok = ok && c.passed();
  }
  j["checks"] = cs;
  j["overall"] = ok ? "pass" : "fail";
  return j;
}

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

// Commands

inline std::vector<Check> cmd_bracket(const RunConfig& c, const std::string& x_text, const std::string& y_text) {
  const AlgebraContext ctx(c.q);
  const AlgebraElement x = parse_element(x_text, ctx);
  const AlgebraElement y = parse_element(y_text, ctx);
  const AlgebraElement r = bracket(x, y, ctx);
  return {Check{"bracket", anchors::bracket, status_of(bracket(y, x, ctx) == -r),
                Json{{"x", to_string(x)}, {"y", to_string(y)}, {"result", to_string(r)}}}};
}

inline std::vector<Check> cmd_act(const RunConfig& c, const std::string& x_text, const std::string& f_text) {
  const ParamSet p = c.params();
  const AlgebraElement x = parse_element(x_text, p.context());
  const Poly2 f = parse_poly2(f_text);
  const Poly2 r = act(x, f, p);
  return {Check{"act", anchors::action, CheckStatus::pass,
                Json{{"x", to_string(x)}, {"f", to_string(f)}, {"result", to_string(r)}}}};
}

inline std::vector<Check> cmd_axioms(const RunConfig& c, long radius) {
  SplitMix64 rng(c.rng_seed);
  const auto fs = random_test_vectors(rng, static_cast<std::size_t>(c.sweep_count), 4);
  return {jacobi_suite({c.q}, radius), module_axiom_suite({c.params()}, fs, radius)};
}

inline std::vector<Check> cmd_closure(const RunConfig& c, const std::vector<std::string>& seed_texts) {
  const ParamSet p = c.params();
  const auto D = static_cast<int>(c.degree_bound);
  const long B = c.effective_box_radius();
  std::vector<Poly2> seeds;
  for (const auto& s : seed_texts) {
    Poly2 f = parse_poly2(s);
    if (f.total_degree() > D) throw UsageError("seed '" + s + "' has degree above D = " + std::to_string(D));
    seeds.push_back(std::move(f));
  }
  const ClosureOutput out = closure(seeds, D, B, p);
  std::vector<Check> checks;
  checks.push_back(Check{"closure", anchors::closure, status_of(out.result.tag != ClosureTag::other),
                         Json{{"seeds", detail::poly_list(seeds)},
                              {"tag", to_string(out.result.tag)},
                              {"dimension", out.result.dimension},
                              {"basis", detail::poly_list(out.basis.vectors())},
                              {"diagnostics", out.result.diagnostics}}});
  if (out.result.tag == ClosureTag::omega_prime) {
    const auto failures = certify_invariance(out, B, p);
    Json w{{"basis_vectors_checked", out.basis.dimension()}, {"images_per_vector", index_box(B).size()}};
    if (!failures.empty())
      w["first_failure"] = Json{{"vector", to_string(out.basis.vectors()[failures.front().vector_index])},
                                {"m", failures.front().m.str()},
                                {"reason", failures.front().reason}};
    checks.push_back(Check{"omega_prime_certificate", anchors::certificate, status_of(failures.empty()), w});
  }
  return checks;
}

inline std::vector<Check> cmd_witt(const RunConfig& c, const std::string& m_text, const std::string& range_text) {
  const auto mv = detail::integer_list("--m", m_text, 2);
  const auto iv = detail::integer_list("--i-range", range_text, 2);
  const IndexPair m{mv[0], mv[1]};
  if (m.m1 == 0) throw UsageError("--m: Witt restriction needs m1 != 0");
  if (iv[0] > iv[1]) throw UsageError("--i-range: lower end above upper end");
  const WittRestriction r = witt_restrict(m, iv[0], iv[1], c.params());
  Json mismatches = Json::array();
  for (const auto& bad : r.mismatches)
    mismatches.push_back(Json{{"i", bad.i}, {"reduced", to_string(bad.reduced)}, {"expected", to_string(bad.expected)}});
  return {Check{"witt_restriction", anchors::witt, status_of(r.ok()),
                Json{{"m", m.str()},
                     {"lambda_m", r.params.lambda.str()},
                     {"alpha_m", r.params.alpha.str()},
                     {"i_range", {iv[0], iv[1]}},
                     {"mismatches", mismatches}}}};
}

inline std::vector<Check> cmd_iso(const RunConfig& c, const std::string& left_text, const std::string& right_text) {
  const auto l = detail::rational_list("--left", left_text, 3);
  const auto r = detail::rational_list("--right", right_text, 3);
  std::optional<ParamSet> pl, pr;
  try {
    pl.emplace(c.q, l[0], l[1], l[2]);
    pr.emplace(c.q, r[0], r[1], r[2]);
  } catch (const MathError& e) {
    throw UsageError(e.what());
  }
  const IsoResult res = iso_check(*pl, *pr, c.effective_box_radius());
  // A determination either way is a pass, provided it is backed by a witness.
  const bool ok = res.isomorphic || res.witness.has_value();
  return {Check{"iso", anchors::iso, status_of(ok),
                Json{{"left", pl->str()},
                     {"right", pr->str()},
                     {"isomorphic", res.isomorphic},
                     {"witness_index", res.witness ? Json(res.witness->str()) : Json()}}}};
}

inline const std::vector<std::string>& replay_selectors() {
  static const std::vector<std::string> s{"all", "gg", "G", "Fh", "p1p2const", "lemma_poly", "transposed"};
  return s;
}

inline std::vector<Check> cmd_replay(const RunConfig& c, const std::string& selector) {
  const ParamSet p = c.params();
  const long radius = 3;
  SplitMix64 rng(c.rng_seed);
  const auto pairs = sample_pairs(rng, radius, 200, exceptional_indices(p.q(), radius));
  const bool all = selector == "all";
  std::vector<Check> out;
  if (all || selector == "gg") out.push_back(replay_gg_check(p, pairs));
  if (all || selector == "G") out.push_back(replay_G_check(p, radius));
  if (all || selector == "Fh") out.push_back(replay_Fh_check(p, radius));
  if (all || selector == "p1p2const") out.push_back(replay_p1p2const_check(p, pairs));
  if (all || selector == "lemma_poly") out.push_back(lemma_poly_suite(rng, 100, 10));
  if (all || selector == "transposed") {
    // Negative control: the gg identity must break for the transposed form.
    const Check gg = replay_gg_check(p, pairs, ActionRule::transposed);
    Check control{"transposed_control", anchors::transposed, CheckStatus::pass, gg.witness};
    if (gg.status == CheckStatus::error) control.status = CheckStatus::error;
    if (gg.status == CheckStatus::pass) control.status = CheckStatus::fail;  // no defect found
    out.push_back(std::move(control));
  }
  if (out.empty()) throw UsageError("unknown replay selector '" + selector + "'");
  return out;
}

inline std::vector<Check> cmd_report(const RunConfig& c);

inline const char* usage_footer() {
  return "Exit codes: 0 all checks pass, 1 some check failed, 2 usage or parse error.\n"
         "Config file: key=value lines with keys q, lambda, alpha, D, B, rng_seed, sweep_count.\n";
}

/// Parses args (without the program name), runs the command and renders the
/// JSON report.
inline CommandOutput run(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations for Block type Lie algebras B(q) and the modules Omega(lambda, alpha)", "blockmod"};
  app.footer(usage_footer());
  app.fallthrough();
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--config", flags.config_path, "key=value configuration file (flags override it)");
  app.add_option("--q", flags.get("q"), "q, a nonzero rational such as 5/7");
  app.add_option("--lambda", flags.get("lambda"), "lambda1,lambda2 (nonzero rationals)");
  app.add_option("--alpha", flags.get("alpha"), "alpha (rational)");
  app.add_option("--D", flags.get("D"), "degree bound for closure (default 3)");
  app.add_option("--B", flags.get("B"), "box radius (default D+2)");
  app.add_option("--rng-seed", flags.get("rng_seed"), "SplitMix64 seed (default 1)");
  app.add_option("--sweep-count", flags.get("sweep_count"), "number of random samples for sweeps (default 3)");

  std::string x_text, y_text;
  auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two elements of B'(q)");
  bracket_cmd->add_option("x", x_text, "element, e.g. 3/2*L(1,0) - D2")->required();
  bracket_cmd->add_option("y", y_text, "element")->required();

  std::string act_x, act_f;
  auto* act_cmd = app.add_subcommand("act", "action of an element on a polynomial in d1, d2");
  act_cmd->add_option("x", act_x, "element")->required();
  act_cmd->add_option("f", act_f, "polynomial, e.g. d1^2 - 3*d2")->required();

  long axiom_radius = 2;
  auto* axioms_cmd = app.add_subcommand("axioms", "Jacobi and module-axiom sweeps");
  axioms_cmd->add_option("--radius", axiom_radius, "index box radius (default 2)");

  std::vector<std::string> seeds;
  auto* closure_cmd = app.add_subcommand("closure", "submodule generated by seed polynomials");
  closure_cmd->add_option("--seed", seeds, "seed polynomial (repeatable)")->required();

  std::string witt_m, witt_range = "-4,4";
  auto* witt_cmd = app.add_subcommand("witt", "restriction to the Witt subalgebra along m");
  witt_cmd->add_option("--m", witt_m, "index m1,m2 with m1 != 0")->required();
  witt_cmd->add_option("--i-range", witt_range, "lo,hi (default -4,4)");

  std::string iso_left, iso_right;
  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test between two modules over the same q");
  iso_cmd->add_option("--left", iso_left, "lambda1,lambda2,alpha")->required();
  iso_cmd->add_option("--right", iso_right, "lambda1,lambda2,alpha")->required();

  std::string selector = "all";
  auto* replay_cmd = app.add_subcommand("replay", "replay identities for the configured parameters");
  replay_cmd->add_option("equation", selector, "all, gg, G, Fh, p1p2const, lemma_poly or transposed")
      ->check(CLI::IsMember(replay_selectors()));

  auto* report_cmd = app.add_subcommand("report", "full acceptance suite");

  CommandOutput out;
  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    bool known = false;
    for (const auto* sc : app.get_subcommands({})) known = known || sc->get_name() == args[0];
    if (!known) {
      out.err = "error: unknown command '" + args[0] + "'\n" + app.help();
      out.exit_code = 2;
      return out;
    }
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out.out = app.help();
    out.exit_code = 0;
    return out;
  } catch (const CLI::ParseError& e) {
    out.err = std::string("error: ") + e.what() + "\n" + app.help();
    out.exit_code = 2;
    return out;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::vector<Check> checks;
  RunConfig config;
  try {
    config = flags.resolve();
    if (sub == bracket_cmd) checks = cmd_bracket(config, x_text, y_text);
    else if (sub == act_cmd) checks = cmd_act(config, act_x, act_f);
    else if (sub == axioms_cmd) {
      if (axiom_radius < 0) throw UsageError("--radius must be >= 0");
      checks = cmd_axioms(config, axiom_radius);
    } else if (sub == closure_cmd) checks = cmd_closure(config, seeds);
    else if (sub == witt_cmd) checks = cmd_witt(config, witt_m, witt_range);
    else if (sub == iso_cmd) checks = cmd_iso(config, iso_left, iso_right);
    else if (sub == replay_cmd) checks = cmd_replay(config, selector);
    else if (sub == report_cmd) checks = cmd_report(config);
  } catch (const UsageError& e) {
    out.err = std::string("error: ") + e.what() + "\n";
    out.exit_code = 2;
    return out;
  } catch (const ParseError& e) {
    out.err = std::string("parse error: ") + e.what() + "\n";
    out.exit_code = 2;
    return out;
  } catch (const MathError& e) {
    out.err = std::string("error: ") + e.what() + "\n";
    out.exit_code = 2;
    return out;
  }

  out.out = report_json(sub->get_name(), config, checks).dump(2) + "\n";
  for (const auto& c : checks)
    if (!c.passed()) out.err += "check " + c.name + ": " + to_string(c.status) + "\n";
  out.exit_code = all_passed(checks) ? 0 : 1;
  return out;
}

/// The documented example invocations, each run twice: exit codes, report
/// content and byte-identical output.
inline Check cli_end_to_end(const Runner& runner) {
  return guarded("cli_end_to_end", "command-line examples and determinism", [&] {
    struct Case {
      std::vector<std::string> args;
      int exit_code;
      std::function<bool(const Json&)> content;
    };
    auto first_check = [](const Json& j) -> const Json& { return j.at("checks").at(0).at("witness"); };
    const std::vector<Case> cases{
        {{"bracket", "L(1,0)", "L(0,1)", "--q", "2"},
         0,
         [&](const Json& j) { return first_check(j).at("result") == "-3*L(1,1)"; }},
        {{"closure", "--seed", "1", "--D", "3", "--B", "5", "--q", "1", "--lambda", "1,1", "--alpha", "0"},
         0,
         [&](const Json& j) { return first_check(j).at("tag") == "FULL" && first_check(j).at("dimension") == 10; }},
        {{"iso", "--left", "1,1,0", "--right", "1,2,0", "--q", "1"},
         0,
         [&](const Json& j) {
           return first_check(j).at("isomorphic") == false && first_check(j).at("witness_index") == "(0,1)";
         }},
        {{"frobnicate"}, 2, nullptr},
    };
    Json runs = Json::array();
    bool ok = true;
    for (const auto& cs : cases) {
      const CommandOutput a = runner(cs.args);
      const CommandOutput b = runner(cs.args);
      bool case_ok = a.exit_code == cs.exit_code && b.exit_code == cs.exit_code && a.out == b.out;
      if (case_ok && cs.content) {
        try {
          case_ok = cs.content(Json::parse(a.out));
        } catch (const std::exception&) {
          case_ok = false;
        }
      }
      std::string cmd;
      for (const auto& s : cs.args) cmd += (cmd.empty() ? "" : " ") + s;
      runs.push_back(Json{{"args", cmd}, {"exit_code", a.exit_code}, {"ok", case_ok}});
      ok = ok && case_ok;
    }
    return Check{"cli_end_to_end", "command-line examples and determinism", status_of(ok), Json{{"runs", runs}}};
  });
}

inline std::vector<Check> cmd_report(const RunConfig& c) {
  std::vector<Check> checks = library_acceptance_checks(c.rng_seed);
  checks.push_back(cli_end_to_end(run));
  return checks;
}

}  // namespace blockmod::cli

#endif  // BLOCKMOD_CLI_HPP
