#include "dani/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dani/checks.hpp"
#include "dani/classify.hpp"
#include "dani/expr.hpp"
#include "dani/serialize.hpp"

namespace dani {

namespace {

struct Options {
  std::string p, p_coeffs, q, q_coeffs;
  std::string field, element, trace_in, trace_out;
  bool pretty = false, json = false, inverse = false;
  int dx = 4, dz = 8, budget = 100, threads = 1, samples = 20;
  std::optional<std::uint64_t> seed;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// "@file" reads the argument from a file.
std::string argument_text(const std::string& a) { return a.size() > 1 && a[0] == '@' ? read_file(a.substr(1)) : a; }

SurfaceSpec spec_from(const std::string& expr, const std::string& coeffs, const char* name) {
  if (!expr.empty() && !coeffs.empty()) {
    throw std::invalid_argument(std::string("give either --") + name + " or --" + name + "-coeffs, not both");
  }
  if (!coeffs.empty()) {
    std::vector<Rational> c;
    std::stringstream ss(coeffs);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
    return SurfaceSpec(RatPoly(std::move(c)));
  }
  if (expr.empty()) throw std::invalid_argument(std::string("missing --") + name);
  return SurfaceSpec(parse_univariate(expr));
}

VectorField field_from(const SurfaceSpec& s, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw std::invalid_argument("--field needs three comma-separated coefficients a,b,c");
  return VectorField(parse_function(s, parts[0]), parse_function(s, parts[1]), parse_function(s, parts[2]));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

void want_args(const std::vector<std::string>& a, std::size_t n, const std::string& cmd) {
  if (a.size() != n) {
    throw std::invalid_argument(cmd + " expects " + std::to_string(n) + " expression argument(s), got " +
                                std::to_string(a.size()));
  }
}

Json run_command(const std::string& cmd, const Options& o, const std::vector<std::string>& args) {
  Json out{{"command", cmd}};
  if (cmd == "classify") {
    const SurfaceSpec p = spec_from(o.p, o.p_coeffs, "p");
    const SurfaceSpec q = spec_from(o.q, o.q_coeffs, "q");
    out["p"] = format(p.p());
    out["q"] = format(q.p(), true);
    const Json r = to_json(is_isomorphic(p, q));
    for (const auto& [k, v] : r.items()) out[k] = v;
    return out;
  }
  if (cmd == "replay") {
    std::string path = o.trace_in;
    if (path.empty() && args.size() == 1) path = args[0];
    if (path.empty()) throw std::invalid_argument("replay needs --trace FILE");
    LoadedTrace lt = trace_from_jsonl(read_file(path));
    TruncatedSpace space(lt.spec, lt.trace.dx, lt.trace.dz);
    Subspace reached = replay(lt.trace, space);
    out["p"] = format(lt.spec.p());
    out["steps"] = lt.trace.steps.size();
    out["rank"] = reached.rank();
    out["dim"] = space.dim();
    out["full"] = is_full(reached, space);
    return out;
  }

  const SurfaceSpec s = spec_from(o.p, o.p_coeffs, "p");
  out["p"] = format(s.p());
  if (cmd == "bracket") {
    want_args(args, 2, cmd);
    out["result"] = format(bracket(parse_function(s, args[0]), parse_function(s, args[1])));
  } else if (cmd == "apply") {
    want_args(args, 1, cmd);
    out["result"] = format(apply(field_from(s, o.field), parse_function(s, args[0])));
  } else if (cmd == "divergence") {
    want_args(args, 0, cmd);
    out["result"] = format(divergence(field_from(s, o.field)));
  } else if (cmd == "dualize") {
    if (!o.field.empty()) {
      want_args(args, 0, cmd);
      out["function"] = format(function_from_field(field_from(s, o.field)));
    } else {
      want_args(args, 1, cmd);
      out["field"] = to_json(field_from_function(parse_function(s, args[0])));
    }
  } else if (cmd == "decompose") {
    Ve0Decomposition d;
    if (!o.field.empty()) {
      want_args(args, 0, cmd);
      d = decompose_ve0(field_from(s, o.field));
    } else {
      want_args(args, 1, cmd);
      d = decompose_function(parse_function(s, args[0]));
    }
    const Json r = to_json(d, s);
    for (const auto& [k, v] : r.items()) out[k] = v;
  } else if (cmd == "compose") {
    if (args.empty()) throw std::invalid_argument("compose expects at least one element");
    AutElement g(s);
    for (const auto& a : args) g = compose(g, aut_from_json(s, parse_json(argument_text(a))));
    if (o.inverse) g = inverse(g);
    out["result"] = to_json(g);
  } else if (cmd == "ad") {
    want_args(args, 0, cmd);
    if (o.element.empty()) throw std::invalid_argument("ad needs --element");
    const AutElement g = aut_from_json(s, parse_json(argument_text(o.element)));
    out["result"] = to_json(ad(g, field_from(s, o.field)));
  } else if (cmd == "outer") {
    want_args(args, 0, cmd);
    Json reps = Json::array();
    for (const auto& psi : outer_representatives(s)) reps.push_back(to_json(psi));
    out["representatives"] = reps;
    out["generic"] = reps.size() == 1;
    out["scope"] = "symmetries induced by affine maps of the z-line, with and without the swap of x and y";
  } else if (cmd == "saturate") {
    want_args(args, 1, cmd);
    TruncatedSpace space(s, o.dx, o.dz);
    SaturationResult r = saturate(parse_function(s, args[0]), space, o.budget, o.threads);
    if (!o.trace_out.empty()) {
      std::ofstream f(o.trace_out, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot write '" + o.trace_out + "'");
      f << trace_to_jsonl(r.trace);
    }
    out["Dx"] = o.dx;
    out["Dz"] = o.dz;
    out["seed"] = format(r.trace.seed);
    out["status"] = r.fixpoint ? "fixpoint reached" : "budget exhausted before fixpoint";
    out["rounds"] = r.rounds;
    out["rank"] = r.reached.rank();
    out["dim"] = space.dim();
    out["full"] = is_full(r.reached, space);
    out["steps"] = r.trace.steps.size();
    out["discarded"] = r.discarded.size();
  } else if (cmd == "check") {
    want_args(args, 0, cmd);
    if (o.samples < 1) throw std::invalid_argument("--samples must be >= 1");
    const std::uint64_t seed = o.seed.value_or(0);
    Json checks = Json::array();
    bool all = true;
    for (const auto& c : run_invariant_suite(s, seed, o.samples)) {
      Json j{{"name", c.name}, {"cases", c.cases}, {"passed", c.passed()}};
      if (!c.passed()) j["first_failure"] = c.first_failure;
      all = all && c.passed();
      checks.push_back(j);
    }
    out["seed"] = seed;
    out["checks"] = checks;
    out["passed"] = all;
  } else {
    throw std::invalid_argument("unknown command '" + cmd + "'");
  }
  return out;
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    // stoull wraps a leading minus sign around
    if (text.empty() || !std::isdigit(static_cast<unsigned char>(text[0]))) throw std::invalid_argument(text);
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("seed must be a non-negative integer, got '" + text + "'");
  }
}

}  // namespace

CliOutcome run(const std::vector<std::string>& args, const std::optional<std::string>& env_seed) {
  CliOutcome res;
  Options o;
  CLI::App app("Vector fields, automorphisms and isomorphisms of Danielewski surfaces xy = p(z)", "dani");
  app.require_subcommand(1);
  const std::vector<std::pair<const char*, const char*>> commands{
      {"bracket", "bracket of two functions"},
      {"apply", "apply a vector field to a function"},
      {"divergence", "divergence of a vector field"},
      {"dualize", "field of a function, or function of a divergence-free field"},
      {"decompose", "split a function (or field) into its LND part and its torus part"},
      {"compose", "compose automorphisms given as JSON"},
      {"ad", "conjugate a vector field by an automorphism"},
      {"classify", "decide whether two surfaces are isomorphic"},
      {"outer", "outer automorphism representatives"},
      {"saturate", "close a seed function under the generator brackets"},
      {"replay", "re-run a saturation trace"},
      {"check", "run the randomized invariant suite"}};
  std::string seed_text;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->allow_extras();
    sub->add_option("--p", o.p, "polynomial p(z)");
    sub->add_option("--p-coeffs", o.p_coeffs, "coefficients of p, low to high, comma separated");
    sub->add_flag("--pretty", o.pretty, "indented JSON");
    sub->add_flag("--json", o.json, "compact JSON (default)");
    const std::string n = name;
    if (n == "classify") {
      sub->add_option("--q", o.q, "polynomial q(w)");
      sub->add_option("--q-coeffs", o.q_coeffs, "coefficients of q, low to high");
    }
    if (n == "apply" || n == "divergence" || n == "dualize" || n == "decompose" || n == "ad") {
      sub->add_option("--field", o.field, "vector field \"a,b,c\"");
    }
    if (n == "ad") sub->add_option("--element", o.element, "automorphism JSON or @file");
    if (n == "compose") sub->add_flag("--inverse", o.inverse, "invert the composite");
    if (n == "saturate") {
      sub->add_option("--dx", o.dx, "x- and y-degree bound")->capture_default_str();
      sub->add_option("--dz", o.dz, "z-degree bound")->capture_default_str();
      sub->add_option("--budget", o.budget, "maximal number of rounds")->capture_default_str();
      sub->add_option("--threads", o.threads, "bracket workers")->capture_default_str();
      sub->add_option("--trace-out", o.trace_out, "write the trace as JSON lines");
    }
    if (n == "replay") sub->add_option("--trace", o.trace_in, "trace file");
    if (n == "check") {
      sub->add_option("--seed", seed_text, "random seed (default: DANI_SEED or 0)");
      sub->add_option("--samples", o.samples, "cases per check")->capture_default_str();
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream out, err;
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    res.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
    res.out = out.str();
    res.err = err.str();
    return res;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::vector<std::string> positional = sub->remaining();
  try {
    for (const auto& a : positional) {
      if (a.size() > 2 && a.rfind("--", 0) == 0) throw std::invalid_argument("unknown option '" + a + "'");
    }
    if (!seed_text.empty()) {
      o.seed = parse_seed(seed_text);
    } else if (env_seed && !env_seed->empty()) {
      o.seed = parse_seed(*env_seed);
    }
    Json report = run_command(sub->get_name(), o, positional);
    res.out = (o.pretty ? report.dump(2) : report.dump()) + "\n";
    if (sub->get_name() == "check" && !report["passed"].get<bool>()) res.exit_code = 1;
  } catch (const std::invalid_argument& e) {
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::domain_error& e) {
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  } catch (const Json::exception& e) {
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.exit_code = 1;
    res.err = std::string("internal error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace dani
