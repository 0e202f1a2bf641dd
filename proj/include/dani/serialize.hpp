// JSON forms.  Rationals travel as strings "n/d", functions as canonical
// expressions, polynomials in one variable as coefficient lists (low to high).
#pragma once

#include <json.hpp>
#include <string>

#include "dani/classify.hpp"
#include "dani/fields.hpp"
#include "dani/saturate.hpp"

namespace dani {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const RatPoly& f);
Json to_json(const VectorField& v);
Json to_json(const AutElement& g);
Json to_json(const AffineIso& psi);
Json to_json(const ClassificationResult& r);
Json to_json(const Ve0Decomposition& d, const SurfaceSpec& s);

/// All parsers throw std::invalid_argument on malformed input.
Rational rational_from_json(const Json& j);
RatPoly ratpoly_from_json(const Json& j);
AutElement aut_from_json(const SurfaceSpec& s, const Json& j);

/// One JSON object per line: a header with p and the window, then the steps.
std::string trace_to_jsonl(const SaturationTrace& t);
struct LoadedTrace {
  SurfaceSpec spec;
  SaturationTrace trace;
};
LoadedTrace trace_from_jsonl(const std::string& text);

}  // namespace dani
