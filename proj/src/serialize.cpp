#include "dani/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "dani/expr.hpp"

namespace dani {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coefficients()) a.push_back(to_string(c));
  return a;
}

Json to_json(const VectorField& v) {
  return Json{{"a", format(v.a())}, {"b", format(v.b())}, {"c", format(v.c())}};
}

Json to_json(const AutElement& g) {
  Json word = Json::array();
  for (const auto& l : g.word()) word.push_back(Json{{"side", l.side == Side::X ? "X" : "Y"}, {"a", to_json(l.a)}});
  return Json{{"word", word}, {"torus", to_json(g.torus())}};
}

Json to_json(const AffineIso& psi) {
  return Json{{"a", to_json(psi.a())}, {"b", to_json(psi.b())}, {"c", to_json(psi.c())}, {"swap", psi.swap()}};
}

Json to_json(const ClassificationResult& r) {
  Json w = Json::array();
  for (const auto& psi : r.witnesses) w.push_back(to_json(psi));
  return Json{{"isomorphic", r.isomorphic}, {"witnesses", w}, {"residual", to_json(r.residual)}};
}

Json to_json(const Ve0Decomposition& d, const SurfaceSpec& s) {
  Json torus = Json::array();
  for (const auto& c : d.torus_coeffs) torus.push_back(to_json(c));
  return Json{{"in_lnd", d.in_lnd()},
              {"lnd_function", format(d.lnd_function(s))},
              {"r", to_json(d.r)},
              {"torus_coeffs", torus}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

RatPoly ratpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a coefficient list, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return RatPoly(std::move(c));
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

AutElement aut_from_json(const SurfaceSpec& s, const Json& j) {
  const Json& w = field(j, "word");
  if (!w.is_array()) throw std::invalid_argument("'word' must be a list");
  std::vector<UnipotentLetter> word;
  for (const auto& l : w) {
    const Json& side = field(l, "side");
    if (side != "X" && side != "Y") throw std::invalid_argument("letter side must be \"X\" or \"Y\"");
    RatPoly a = ratpoly_from_json(field(l, "a"));
    if (a.is_zero()) throw std::invalid_argument("letter polynomial must be nonzero");
    word.push_back({side == "X" ? Side::X : Side::Y, std::move(a)});
  }
  Rational t = rational_from_json(field(j, "torus"));
  return AutElement(s, std::move(word), std::move(t));
}

std::string trace_to_jsonl(const SaturationTrace& t) {
  std::ostringstream os;
  const SurfaceSpec& s = t.seed.spec();
  os << Json{{"kind", "header"}, {"p", to_json(s.p())}, {"Dx", t.dx}, {"Dz", t.dz}, {"seed", format(t.seed)}}.dump()
     << "\n";
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& st = t.steps[k];
    Json j{{"kind", "step"}, {"index", k}, {"rule", to_string(st.rule)}};
    if (st.rule == RuleTag::BEZOUT) {
      j["u"] = to_json(st.u);
      j["v"] = to_json(st.v);
    } else {
      j["element"] = st.element;
      j["power"] = st.generator.power;
      j["produced"] = format(st.produced);
    }
    os << j.dump() << "\n";
  }
  return os.str();
}

LoadedTrace trace_from_jsonl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<LoadedTrace> out;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument("trace line " + std::to_string(lineno) + ": " + e.what());
    }
    const std::string kind = field(j, "kind").get<std::string>();
    if (!out) {
      if (kind != "header") throw std::invalid_argument("trace must start with a header line");
      SurfaceSpec s(ratpoly_from_json(field(j, "p")));
      SaturationTrace t{parse_function(s, field(j, "seed").get<std::string>()), field(j, "Dx").get<int>(),
                        field(j, "Dz").get<int>(), {}};
      out.emplace(LoadedTrace{s, std::move(t)});
      continue;
    }
    if (kind != "step") throw std::invalid_argument("trace line " + std::to_string(lineno) + ": unknown kind");
    TraceStep st{parse_rule_tag(field(j, "rule").get<std::string>()), -1, {}, SurfacePoly(out->spec), {}, {}};
    st.generator.tag = st.rule;
    if (st.rule == RuleTag::BEZOUT) {
      st.u = ratpoly_from_json(field(j, "u"));
      st.v = ratpoly_from_json(field(j, "v"));
    } else {
      st.element = field(j, "element").get<int>();
      st.generator.power = field(j, "power").get<int>();
      st.produced = parse_function(out->spec, field(j, "produced").get<std::string>());
    }
    out->trace.steps.push_back(std::move(st));
  }
  if (!out) throw std::invalid_argument("empty trace");
  return std::move(*out);
}

}  // namespace dani
