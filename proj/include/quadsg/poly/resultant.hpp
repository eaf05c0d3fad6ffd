#pragma once

#include <quadsg/errors.hpp>
#include <quadsg/poly/multipoly.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quadsg {

/// Determinant of a square matrix of polynomials by fraction-free (Bareiss)
/// elimination; every division in the recurrence is exact.
inline MultiPoly poly_determinant(std::vector<std::vector<MultiPoly>> m, std::size_t n_vars) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(n_vars, Rational(1));
  MultiPoly prev = MultiPoly::constant(n_vars, Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MultiPoly(n_vars);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("poly_determinant: inexact Bareiss division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MultiPoly(n_vars);
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

/// Sylvester matrix of f, g with respect to var; entries are the
/// coefficients of f and g in var.
inline std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  auto fc = f.coefficients_in(var), gc = g.coefficients_in(var);
  std::size_t df = fc.size() - 1, dg = gc.size() - 1, size = df + dg;
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, MultiPoly(f.n())));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t k = 0; k <= df; ++k) s[r][r + k] = fc[df - k];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t k = 0; k <= dg; ++k) s[dg + r][r + k] = gc[dg - k];
  return s;
}

/// Res_var(F, G). Degrees (2, 1) use the explicit 3x3 determinant
/// |A0 B0 0; a b B0; alpha 0 b| for F = alpha x^2 + a x + A0, G = b x + B0;
/// everything else uses the full Sylvester matrix.
inline MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  if (f.n() != g.n()) throw std::invalid_argument("resultant: variable count mismatch");
  if (var >= f.n()) throw std::out_of_range("resultant: variable index out of range");
  if (f.degree_in(var) == 0 || g.degree_in(var) == 0)
    throw PreconditionError("resultant: both polynomials need positive degree in the variable");
  const std::size_t n = f.n();
  auto quad_lin = [&](const MultiPoly& quad, const MultiPoly& lin) {
    auto qc = quad.coefficients_in(var), lc = lin.coefficients_in(var);
    const MultiPoly &a0 = qc[0], &a = qc[1], &alpha = qc[2], &b0 = lc[0], &b = lc[1];
    MultiPoly zero(n);
    return poly_determinant({{a0, b0, zero}, {a, b, b0}, {alpha, zero, b}}, n);
  };
  if (f.degree_in(var) == 2 && g.degree_in(var) == 1) return quad_lin(f, g);
  // Res(G, F) = (-1)^(2*1) Res(F, G)
  if (f.degree_in(var) == 1 && g.degree_in(var) == 2) return quad_lin(g, f);
  return poly_determinant(sylvester_matrix(f, g, var), n);
}

}  // namespace quadsg
