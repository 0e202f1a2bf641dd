// Bounded-degree closure of a seed function under brackets with the
// generator functions whose fields are x^i nu_x, y^i nu_y and (p z^j)'' nu_z.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dani/ring.hpp"

namespace dani {

/// Window of functions
///   sum a_ij x^i z^j + sum b_ij y^i z^j + (p r)'(z),  1 <= i <= Dx, j <= Dz, deg r <= Dz,
/// taken modulo constants.
class TruncatedSpace {
 public:
  /// Throws std::invalid_argument for negative bounds or Dx = 0.
  TruncatedSpace(SurfaceSpec s, int dx, int dz);

  const SurfaceSpec& spec() const { return spec_; }
  int dx() const { return dx_; }
  int dz() const { return dz_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<SurfacePoly>& basis() const { return basis_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Coordinates in the basis, or nullopt if f lies outside the window.
  std::optional<std::vector<Rational>> coordinates(const SurfacePoly& f) const;

 private:
  SurfaceSpec spec_;
  int dx_, dz_;
  std::vector<SurfacePoly> basis_;
  std::vector<std::string> labels_;
};

/// Row-reduced basis of a subspace of Q^dim.
class Subspace {
 public:
  explicit Subspace(int dim) : dim_(dim) {}
  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  /// Rows in increasing pivot order, pivot entries 1, pivot columns cleared elsewhere.
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  /// Returns false if v was already in the span.
  bool insert(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  void reduce(std::vector<Rational>& v) const;
  int dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

enum class RuleTag { NU_X, NU_Y, PPZ_NU_Z, X_POW_NU_X, BEZOUT, LINEAR };
std::string to_string(RuleTag t);
/// Throws std::invalid_argument for unknown names.
RuleTag parse_rule_tag(const std::string& name);

/// A bracket partner: the function whose field is x^power nu_x, y^power nu_y
/// or (p z^power)'' nu_z.
struct GeneratorRef {
  RuleTag tag;
  int power;
};
SurfacePoly generator_function(const SurfaceSpec& s, const GeneratorRef& g);
std::vector<GeneratorRef> generator_set(const TruncatedSpace& space);

struct TraceStep {
  RuleTag rule;
  int element = -1;        // operand: index of an available element
  GeneratorRef generator;  // operand: bracket partner
  SurfacePoly produced;    // bracket(generator_function, element); zero for BEZOUT
  RatPoly u, v;            // BEZOUT certificate u p + v p' = 1
};

struct SaturationTrace {
  SurfacePoly seed;
  int dx = 0, dz = 0;
  std::vector<TraceStep> steps;
};

struct Discard {
  int element;
  GeneratorRef generator;
};

struct SaturationResult {
  Subspace reached;
  SaturationTrace trace;
  /// Available elements: seed first, then every independent bracket in trace order.
  std::vector<SurfacePoly> elements;
  std::vector<Discard> discarded;
  int rounds = 0;
  bool fixpoint = false;  // false: budget exhausted before fixpoint
};

/// Runs at most step_budget rounds; each round brackets every element added in
/// the previous round with every generator.  threads > 1 evaluates the brackets
/// of a round concurrently; insertion order and the result do not depend on it.
SaturationResult saturate(const SurfacePoly& seed, const TruncatedSpace& space, int step_budget,
                          int threads = 1);

bool is_full(const Subspace& reached, const TruncatedSpace& space);

BezoutCertificate bezout_step(const TruncatedSpace& space);

/// Re-executes a trace; throws std::invalid_argument when a step does not check out.
Subspace replay(const SaturationTrace& trace, const TruncatedSpace& space);

}  // namespace dani
