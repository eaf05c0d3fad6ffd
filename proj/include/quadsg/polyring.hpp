#pragma once

#include <quadsg/linear_space.hpp>
#include <quadsg/poly/factor.hpp>
#include <quadsg/poly/groebner.hpp>
#include <quadsg/poly/ideal.hpp>
#include <quadsg/poly/multipoly.hpp>
#include <quadsg/poly/radical.hpp>
#include <quadsg/poly/resultant.hpp>
#include <quadsg/poly/univariate.hpp>
#include <quadsg/qcore.hpp>

namespace quadsg {

/// P == Q modulo the ideal generated by the linear forms of V.
inline bool congruent_mod(const MultiPoly& p, const MultiPoly& q, const LinearSpace& v) {
  if (p.n() != q.n() || p.n() != v.n()) throw std::invalid_argument("congruent_mod: variable count mismatch");
  Matrix<Rational> s = restriction_substitution(v);
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < v.n(); ++i) {
    MultiPoly img(v.n());
    for (std::size_t j = 0; j < v.n(); ++j) img.add_term(Monomial::variable(j), s(i, j));
    images.push_back(img);
  }
  return (p - q).compose(images, v.n()).is_zero();
}

}  // namespace quadsg
