#pragma once

// Ideal operations built on Groebner bases: intersections, lcm/gcd of two
// polynomials, ideal membership.

#include <quadsg/poly/groebner.hpp>

#include <vector>

namespace quadsg {

/// Shifts every variable up by `by` positions (new variables in front).
inline MultiPoly shift_variables(const MultiPoly& p, std::size_t by) {
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < p.n(); ++i) images.push_back(MultiPoly::variable(p.n() + by, i + by));
  return p.compose(images, p.n() + by);
}

/// Generators of I ∩ J via t*I + (1-t)*J and elimination of t (lex, t first).
inline std::vector<MultiPoly> ideal_intersection(const std::vector<MultiPoly>& i, const std::vector<MultiPoly>& j,
                                                 const GroebnerLimits& limits = {}) {
  if (i.empty() || j.empty()) throw PreconditionError("ideal_intersection: empty ideal");
  const std::size_t n = i.front().n();
  MultiPoly t = MultiPoly::variable(n + 1, 0);
  MultiPoly one = MultiPoly::constant(n + 1, Rational(1));
  std::vector<MultiPoly> gens;
  for (const auto& f : i) gens.push_back(t * shift_variables(f, 1));
  for (const auto& g : j) gens.push_back((one - t) * shift_variables(g, 1));
  auto gb = groebner(gens, MonomialOrder::lex, limits);
  std::vector<MultiPoly> out;
  for (const auto& g : gb.generators()) {
    if (g.is_zero() || g.involves(0)) continue;
    // drop t and move the variables back down
    std::vector<MultiPoly> images{MultiPoly(n)};
    for (std::size_t v = 0; v < n; ++v) images.push_back(MultiPoly::variable(n, v));
    out.push_back(g.compose(images, n));
  }
  return out;
}

/// Monic-in-lex lcm of two nonzero polynomials.
inline MultiPoly poly_lcm(const MultiPoly& f, const MultiPoly& g, const GroebnerLimits& limits = {}) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("poly_lcm: zero polynomial");
  auto gens = ideal_intersection({f}, {g}, limits);
  if (gens.size() != 1) throw std::logic_error("poly_lcm: intersection of principal ideals not principal");
  return gens.front();
}

/// gcd(f, g) = f g / lcm(f, g), normalized to leading coefficient 1 in lex.
inline MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g, const GroebnerLimits& limits = {}) {
  auto q = exact_divide(f * g, poly_lcm(f, g, limits));
  if (!q) throw std::logic_error("poly_gcd: lcm does not divide the product");
  auto [lm, lc] = q->leading_term(MonomialOrder::lex);
  return (Rational(1) / lc) * *q;
}

inline bool ideal_member(const MultiPoly& f, const std::vector<MultiPoly>& gens, const GroebnerLimits& limits = {}) {
  if (f.is_zero()) return true;
  return groebner(gens, MonomialOrder::degrevlex, limits).contains(f);
}

}  // namespace quadsg
