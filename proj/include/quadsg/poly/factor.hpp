#pragma once

// Splitting quadratic forms of Gram rank <= 2 into two linear factors.

#include <quadsg/errors.hpp>
#include <quadsg/linear_form.hpp>
#include <quadsg/quadratic_form.hpp>

#include <optional>
#include <utility>

namespace quadsg {

/// (a, b) with a*b = Q for a nonzero form of Gram rank <= 2 with entries in
/// one field Q(sqrt m). Returns nullopt when the factors would need a second
/// extension on top of that field.
inline std::optional<std::pair<ExtLinearForm, ExtLinearForm>> factor_rank2(const ExtQuadraticForm& q) {
  const std::size_t n = q.n();
  std::size_t r = q.gram_rank();
  if (r == 0) throw PreconditionError("factor_rank2: zero form");
  if (r > 2) throw PreconditionError("factor_rank2: Gram rank exceeds 2");
  Matrix<QuadExt> m = q.gram();

  auto diagonal_pivot = [&](const Matrix<QuadExt>& g) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(g(i, i))) return i;
    return std::nullopt;
  };
  auto row = [&](const Matrix<QuadExt>& g, std::size_t i) { return ExtLinearForm(g.row(i)); };

  auto i = diagonal_pivot(m);
  if (!i) {
    // zero diagonal, rank 2: Q = (2/c) r_i r_j
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (!is_zero(m(a, b))) return std::make_pair((QuadExt(2) / m(a, b)) * row(m, a), row(m, b));
  }
  QuadExt d1 = m(*i, *i);
  ExtLinearForm l1 = row(m, *i);
  if (r == 1) return std::make_pair((QuadExt(1) / d1) * l1, l1);

  Matrix<QuadExt> rest = m;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rest(a, b) -= l1[a] * l1[b] / d1;
  auto j = diagonal_pivot(rest);
  if (!j) throw std::logic_error("factor_rank2: rank-one remainder without diagonal entry");
  QuadExt d2 = rest(*j, *j);
  ExtLinearForm l2 = row(rest, *j);
  // l1^2/d1 + l2^2/d2 = (1/d1)(l1 + s l2)(l1 - s l2) with s^2 = -d1/d2
  auto s = sqrt_in_field(-d1 / d2);
  if (!s) return std::nullopt;
  return std::make_pair((QuadExt(1) / d1) * (l1 + *s * l2), l1 - *s * l2);
}

/// Rational input: the factors are rational when Q is a product over Q and
/// otherwise live in Q(sqrt m) for m read off the discriminant.
inline std::pair<ExtLinearForm, ExtLinearForm> factor_rank2(const QuadraticForm& q) {
  auto f = factor_rank2(to_ext(q));
  if (!f) throw std::logic_error("factor_rank2: rational form needs at most one extension");
  return *f;
}

}  // namespace quadsg
