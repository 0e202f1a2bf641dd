#include "dani/saturate.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace dani {

TruncatedSpace::TruncatedSpace(SurfaceSpec s, int dx, int dz) : spec_(std::move(s)), dx_(dx), dz_(dz) {
  if (dx < 1 || dz < 0) throw std::invalid_argument("window needs Dx >= 1 and Dz >= 0");
  for (int i = 1; i <= dx; ++i) {
    for (int j = 0; j <= dz; ++j) {
      basis_.push_back(SurfacePoly::from_z(spec_, RatPoly::monomial(1, j), i));
      labels_.push_back("x^" + std::to_string(i) + "*z^" + std::to_string(j));
    }
  }
  for (int i = 1; i <= dx; ++i) {
    for (int j = 0; j <= dz; ++j) {
      basis_.push_back(SurfacePoly::from_z(spec_, spec_.p_power(i) * RatPoly::monomial(1, j), -i));
      labels_.push_back("y^" + std::to_string(i) + "*z^" + std::to_string(j));
    }
  }
  for (int j = 0; j <= dz; ++j) {
    basis_.push_back(SurfacePoly::from_z(spec_, (spec_.p() * RatPoly::monomial(1, j)).derivative()));
    labels_.push_back("(p*z^" + std::to_string(j) + ")'");
  }
  Subspace check(dim());
  for (const auto& b : basis_) {
    auto c = coordinates(b);
    if (!c) throw std::logic_error("window basis element " + labels_[&b - &basis_[0]] + " has no coordinates");
    if (!check.insert(std::move(*c))) throw std::logic_error("window basis is not independent");
  }
}

std::optional<std::vector<Rational>> TruncatedSpace::coordinates(const SurfacePoly& f) const {
  require_same(spec_, f.spec());
  const int block = dz_ + 1;
  const int n = spec_.degree();
  std::vector<Rational> out(basis_.size());
  for (const auto& [i, c] : f.terms()) {
    if (i > dx_ || -i > dx_) return std::nullopt;
    if (i > 0) {
      if (c.degree() > dz_) return std::nullopt;
      for (int j = 0; j <= c.degree(); ++j) out[static_cast<std::size_t>((i - 1) * block + j)] = c.coeff(j);
    } else if (i < 0) {
      auto r = exact_div(c, spec_.p_power(-i));
      if (!r || r->degree() > dz_) return std::nullopt;
      const int base = dx_ * block + (-i - 1) * block;
      for (int j = 0; j <= r->degree(); ++j) out[static_cast<std::size_t>(base + j)] = r->coeff(j);
    } else {
      RatPoly g = c - RatPoly::constant(c.coeff(0));
      const int base = 2 * dx_ * block;
      for (int deg = g.degree(); deg >= n - 1 && !g.is_zero(); --deg) {
        const Rational top = g.coeff(deg);
        if (top == 0) continue;
        const int j = deg - (n - 1);
        if (j > dz_) return std::nullopt;
        const Rational rj = top / (Rational(n + j) * spec_.p().leading());
        out[static_cast<std::size_t>(base + j)] = rj;
        g -= (spec_.p() * RatPoly::monomial(rj, j)).derivative();
      }
      if (g.degree() > 0) return std::nullopt;  // constants are dropped
    }
  }
  return out;
}

void Subspace::reduce(std::vector<Rational>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[static_cast<std::size_t>(pivots_[r])];
    if (f == 0) continue;
    for (int k = pivots_[r]; k < dim_; ++k) v[static_cast<std::size_t>(k)] -= f * rows_[r][static_cast<std::size_t>(k)];
  }
}

bool Subspace::insert(std::vector<Rational> v) {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector length does not match subspace");
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
  if (it == v.end()) return false;
  const int piv = static_cast<int>(it - v.begin());
  const Rational inv = 1 / *it;
  for (int k = piv; k < dim_; ++k) v[static_cast<std::size_t>(k)] *= inv;
  for (auto& row : rows_) {
    const Rational f = row[static_cast<std::size_t>(piv)];
    if (f == 0) continue;
    for (int k = piv; k < dim_; ++k) row[static_cast<std::size_t>(k)] -= f * v[static_cast<std::size_t>(k)];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  const auto at = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

bool Subspace::contains(std::vector<Rational> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::string to_string(RuleTag t) {
  switch (t) {
    case RuleTag::NU_X: return "NU_X";
    case RuleTag::NU_Y: return "NU_Y";
    case RuleTag::PPZ_NU_Z: return "PPZ_NU_Z";
    case RuleTag::X_POW_NU_X: return "X_POW_NU_X";
    case RuleTag::BEZOUT: return "BEZOUT";
    case RuleTag::LINEAR: return "LINEAR";
  }
  return "?";
}

RuleTag parse_rule_tag(const std::string& name) {
  for (RuleTag t : {RuleTag::NU_X, RuleTag::NU_Y, RuleTag::PPZ_NU_Z, RuleTag::X_POW_NU_X, RuleTag::BEZOUT,
                    RuleTag::LINEAR}) {
    if (to_string(t) == name) return t;
  }
  throw std::invalid_argument("unknown rule tag: " + name);
}

SurfacePoly generator_function(const SurfaceSpec& s, const GeneratorRef& g) {
  if (g.power < 0) throw std::invalid_argument("generator power must be >= 0");
  const Rational scale(1, g.power + 1);
  switch (g.tag) {
    case RuleTag::NU_X:
    case RuleTag::X_POW_NU_X:
      if ((g.tag == RuleTag::NU_X) != (g.power == 0)) throw std::invalid_argument("NU_X has power 0, X_POW_NU_X >= 1");
      return SurfacePoly::from_z(s, RatPoly::constant(-scale), g.power + 1);
    case RuleTag::NU_Y:
      return SurfacePoly::from_z(s, scale * s.p_power(g.power + 1), -(g.power + 1));
    case RuleTag::PPZ_NU_Z:
      return SurfacePoly::from_z(s, (s.p() * RatPoly::monomial(1, g.power)).derivative());
    default:
      throw std::invalid_argument("rule " + to_string(g.tag) + " has no generator function");
  }
}

std::vector<GeneratorRef> generator_set(const TruncatedSpace& space) {
  std::vector<GeneratorRef> out{{RuleTag::NU_X, 0}};
  for (int i = 1; i <= space.dx(); ++i) out.push_back({RuleTag::X_POW_NU_X, i});
  for (int i = 0; i <= space.dx(); ++i) out.push_back({RuleTag::NU_Y, i});
  for (int j = 0; j <= space.dz(); ++j) out.push_back({RuleTag::PPZ_NU_Z, j});
  return out;
}

namespace {

// Degree mechanics of single moves, checked where their hypotheses hold.
void check_degree_rules(const SurfacePoly& f, const GeneratorRef& g, const SurfacePoly& out) {
  if (f.is_zero()) return;
  const auto [l, k] = f.bidegree();
  if (g.tag == RuleTag::NU_Y && g.power == 0 && l >= 1) {
    if (out.is_zero() || out.bidegree() != std::pair{l - 1, k - 1}) {
      throw std::logic_error("nu_y move did not lower the bidegree by (1, 1)");
    }
  }
  if (g.tag == RuleTag::PPZ_NU_Z && k > l && l >= 0) {
    const auto [l2, k2] = out.is_zero() ? std::pair{0, -1} : out.bidegree();
    const bool ok = k2 == k && (l >= 1 ? l2 == l : l2 > l);
    if (!ok) throw std::logic_error("p''-weighted nu_z move changed the top x-degree");
  }
}

struct Evaluated {
  SurfacePoly value;
  std::optional<std::vector<Rational>> coords;
};

Evaluated evaluate_move(const TruncatedSpace& space, const SurfacePoly& f, const GeneratorRef& g) {
  SurfacePoly out = bracket(generator_function(space.spec(), g), f);
  check_degree_rules(f, g, out);
  auto coords = space.coordinates(out);
  return {std::move(out), std::move(coords)};
}

}  // namespace

SaturationResult saturate(const SurfacePoly& seed, const TruncatedSpace& space, int step_budget, int threads) {
  require_same(seed.spec(), space.spec());
  if (step_budget < 0) throw std::invalid_argument("step budget must be >= 0");
  auto seed_coords = space.coordinates(seed);
  if (!seed_coords) throw std::invalid_argument("seed is not in the span of the window basis");
  SaturationResult res{Subspace(space.dim()), SaturationTrace{seed, space.dx(), space.dz(), {}}, {}, {}, 0, false};
  if (!res.reached.insert(std::move(*seed_coords))) throw std::invalid_argument("seed must be nonzero modulo constants");
  res.elements.push_back(seed);

  const BezoutCertificate cert = bezout_step(space);
  res.trace.steps.push_back(TraceStep{RuleTag::BEZOUT, -1, {RuleTag::BEZOUT, 0}, SurfacePoly(space.spec()), cert.u, cert.v});

  const auto gens = generator_set(space);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    if (res.rounds == step_budget) return res;
    ++res.rounds;
    std::vector<std::pair<int, GeneratorRef>> jobs;
    for (int e : frontier) {
      for (const auto& g : gens) jobs.emplace_back(e, g);
    }
    std::vector<std::optional<Evaluated>> values(jobs.size());
    auto work = [&](std::size_t begin, std::size_t stride) {
      for (std::size_t k = begin; k < jobs.size(); k += stride) {
        values[k] = evaluate_move(space, res.elements[static_cast<std::size_t>(jobs[k].first)], jobs[k].second);
      }
    };
    if (threads > 1) {
      std::vector<std::future<void>> tasks;
      for (int t = 0; t < threads; ++t) tasks.push_back(std::async(std::launch::async, work, t, threads));
      for (auto& t : tasks) t.get();
    } else {
      work(0, 1);
    }
    std::vector<int> next;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      auto& [e, g] = jobs[k];
      Evaluated& val = *values[k];
      if (!val.coords) {
        res.discarded.push_back({e, g});
        continue;
      }
      if (!res.reached.insert(std::move(*val.coords))) continue;
      next.push_back(static_cast<int>(res.elements.size()));
      res.elements.push_back(val.value);
      res.trace.steps.push_back(TraceStep{g.tag, e, g, std::move(val.value), {}, {}});
    }
    frontier = std::move(next);
  }
  res.fixpoint = true;
  return res;
}

bool is_full(const Subspace& reached, const TruncatedSpace& space) { return reached.rank() == space.dim(); }

BezoutCertificate bezout_step(const TruncatedSpace& space) {
  const auto& s = space.spec();
  BezoutCertificate c = s.bezout();
  if (!(c.u * s.p() + c.v * s.dp() == RatPoly::constant(1))) throw std::logic_error("Bezout certificate fails");
  return c;
}

Subspace replay(const SaturationTrace& trace, const TruncatedSpace& space) {
  const auto& s = space.spec();
  require_same(trace.seed.spec(), s);
  if (trace.dx != space.dx() || trace.dz != space.dz()) throw std::invalid_argument("trace window differs from the space");
  Subspace reached(space.dim());
  std::vector<SurfacePoly> elements;
  auto seed = space.coordinates(trace.seed);
  if (!seed || !reached.insert(std::move(*seed))) throw std::invalid_argument("trace seed is not a nonzero window element");
  elements.push_back(trace.seed);
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& st = trace.steps[k];
    const std::string where = "trace step " + std::to_string(k) + ": ";
    if (st.rule == RuleTag::BEZOUT) {
      if (!(st.u * s.p() + st.v * s.dp() == RatPoly::constant(1))) throw std::invalid_argument(where + "u p + v p' != 1");
      continue;
    }
    if (st.rule == RuleTag::LINEAR) throw std::invalid_argument(where + "LINEAR steps are not produced by this engine");
    if (st.element < 0 || st.element >= static_cast<int>(elements.size())) {
      throw std::invalid_argument(where + "operand refers to an unavailable element");
    }
    if (st.generator.tag != st.rule) throw std::invalid_argument(where + "rule and generator disagree");
    const SurfacePoly value = bracket(generator_function(s, st.generator), elements[static_cast<std::size_t>(st.element)]);
    if (!(value == st.produced)) throw std::invalid_argument(where + "produced element does not match the bracket");
    auto coords = space.coordinates(value);
    if (!coords || !reached.insert(std::move(*coords))) throw std::invalid_argument(where + "produced element adds nothing");
    elements.push_back(value);
  }
  return reached;
}

}  // namespace dani
