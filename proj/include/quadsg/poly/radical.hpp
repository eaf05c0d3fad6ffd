#pragma once

#include <quadsg/poly/groebner.hpp>

#include <vector>

namespace quadsg {

/// f in sqrt<gens>, decided by the Rabinowitsch trick: 1 in <gens, 1 - y f>
/// with y a fresh last variable. Throws ResourceLimitExceeded when the
/// Groebner computation runs past its limits.
inline bool radical_member(const MultiPoly& f, const std::vector<MultiPoly>& gens, const GroebnerLimits& limits = {}) {
  if (gens.empty()) throw PreconditionError("radical_member: empty generator list");
  if (f.is_zero()) throw PreconditionError("radical_member: f must be nonzero");
  const std::size_t n = f.n();
  if (n + 1 > kMaxVars) throw PreconditionError("radical_member: too many variables for the extra Rabinowitsch variable");
  std::vector<MultiPoly> ext;
  for (const auto& g : gens) {
    if (g.n() != n) throw std::invalid_argument("radical_member: variable count mismatch");
    if (g.is_zero()) throw PreconditionError("radical_member: generators must be nonzero");
    ext.push_back(g.embed(n + 1));
  }
  MultiPoly y = MultiPoly::variable(n + 1, n);
  ext.push_back(MultiPoly::constant(n + 1, Rational(1)) - y * f.embed(n + 1));
  return generates_unit_ideal(ext, MonomialOrder::degrevlex, limits);
}

}  // namespace quadsg
