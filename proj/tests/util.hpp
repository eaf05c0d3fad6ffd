#pragma once

#include <quadsg/quadsg.hpp>

#include <vector>

namespace qt {

using namespace quadsg;

inline LinearForm var(std::size_t n, std::size_t i) { return LinearForm::variable(n, i); }
inline QuadraticForm prod(const LinearForm& a, const LinearForm& b) { return QuadraticForm::product(a, b); }
inline QuadraticForm sq(const LinearForm& a) { return QuadraticForm::product(a, a); }
inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

/// Random point with integer coordinates in [-bound, bound].
inline std::vector<Rational> random_point(Rng& rng, std::size_t n, long bound = 50) {
  std::vector<Rational> p(n);
  for (auto& x : p) x = random_int(rng, -bound, bound);
  return p;
}

/// The product of a list of extension forms as a rational quadratic form;
/// fails the caller's check by returning nullopt if irrational parts survive.
inline std::optional<QuadraticForm> rational_part(const ExtQuadraticForm& e) {
  QuadraticForm out(e.n());
  Matrix<Rational> g(e.n(), e.n());
  for (std::size_t i = 0; i < e.n(); ++i)
    for (std::size_t j = 0; j < e.n(); ++j) {
      if (!e.gram()(i, j).is_rational()) return std::nullopt;
      g(i, j) = e.gram()(i, j).rational_part();
    }
  return QuadraticForm(g);
}

inline MultiPoly pv(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
inline MultiPoly pc(std::size_t n, const Rational& c) { return MultiPoly::constant(n, c); }

/// Random polynomial of total degree <= deg with about `terms` terms.
inline MultiPoly random_poly(Rng& rng, std::size_t n, unsigned deg, std::size_t terms, long bound = 4) {
  MultiPoly p(n);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m;
    unsigned d = static_cast<unsigned>(std::uniform_int_distribution<unsigned>(0, deg)(rng));
    for (unsigned k = 0; k < d; ++k) {
      std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      m.set(i, m[i] + 1);
    }
    p.add_term(m, random_int(rng, -bound, bound));
  }
  return p;
}

/// Some member of the pencil (a, b) has Gram rank <= 2: the 3x3 minors of
/// lambda*A + B share a root, or A itself has rank <= 2 (lambda = inf).
inline bool pencil_oracle(const QuadraticForm& a, const QuadraticForm& b) {
  const std::size_t n = a.n();
  if (n < 3 || a.gram_rank() <= 2) return true;
  MultiPoly lam = pv(1, 0);
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = pc(1, a.gram()(i, j)) * lam + pc(1, b.gram()(i, j));
  std::vector<MultiPoly> minors;
  for (std::size_t r0 = 0; r0 < n; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < n; ++r1)
      for (std::size_t r2 = r1 + 1; r2 < n; ++r2)
        for (std::size_t c0 = 0; c0 < n; ++c0)
          for (std::size_t c1 = c0 + 1; c1 < n; ++c1)
            for (std::size_t c2 = c1 + 1; c2 < n; ++c2) {
              std::size_t rs[3] = {r0, r1, r2}, cs[3] = {c0, c1, c2};
              std::vector<std::vector<MultiPoly>> sub(3, std::vector<MultiPoly>(3, MultiPoly(1)));
              for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) sub[i][j] = m[rs[i]][cs[j]];
              MultiPoly d = poly_determinant(sub, 1);
              if (!d.is_zero()) minors.push_back(d);
            }
  if (minors.empty()) return true;
  return !generates_unit_ideal(minors);
}

}  // namespace qt
