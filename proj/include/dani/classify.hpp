// Deciding D_p ~ D_q through the affine criterion c a^2 q(w) = p(a w + b).
#pragma once

#include <vector>

#include "dani/autgroup.hpp"

namespace dani {

struct ClassificationResult {
  bool isomorphic = false;
  /// Rational witnesses, increasing in a; never swapped.
  std::vector<AffineIso> witnesses;
  /// Monic polynomial in a whose roots are the remaining (irrational) admissible
  /// values of a; zero when there are none.  b and c follow from a through
  /// b = (a q_{n-1}/q_n - p_{n-1}/p_n)/n and c = p_n a^{n-2}/q_n.
  RatPoly residual;
};

ClassificationResult is_isomorphic(const SurfaceSpec& p, const SurfaceSpec& q);

struct RootSymmetry {
  Rational alpha, beta, gamma;  // p(alpha z + beta) = gamma p(z)
  friend bool operator==(const RootSymmetry&, const RootSymmetry&) = default;
};

struct RootSymmetries {
  std::vector<RootSymmetry> rational;
  RatPoly residual;
};

RootSymmetries affine_root_symmetries(const SurfaceSpec& p);

/// Self-isomorphisms (symmetries x {swap, no swap}) other than the identity.
std::vector<AffineIso> outer_representatives(const SurfaceSpec& p);

}  // namespace dani
