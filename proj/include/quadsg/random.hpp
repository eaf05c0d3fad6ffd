#pragma once

// Seeded generators for linear and quadratic forms with small integer
// coefficients.

#include <quadsg/linear_form.hpp>
#include <quadsg/quadratic_form.hpp>

#include <cstdint>
#include <random>

namespace quadsg {

using Rng = std::mt19937_64;

inline Rational random_int(Rng& rng, long lo, long hi) {
  return Rational(std::uniform_int_distribution<long>(lo, hi)(rng));
}

/// Nonzero linear form with coefficients in [-bound, bound].
inline LinearForm random_linear_form(Rng& rng, std::size_t n, long bound = 5) {
  for (;;) {
    LinearForm f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = random_int(rng, -bound, bound);
    if (!f.is_zero()) return f;
  }
}

/// Nonzero linear form supported on the first k variables.
inline LinearForm random_linear_form_in(Rng& rng, std::size_t n, std::size_t k, long bound = 5) {
  for (;;) {
    LinearForm f(n);
    for (std::size_t i = 0; i < k; ++i) f[i] = random_int(rng, -bound, bound);
    if (!f.is_zero()) return f;
  }
}

/// Nonzero quadratic form with integer monomial coefficients in [-bound, bound].
inline QuadraticForm random_quadratic(Rng& rng, std::size_t n, long bound = 5) {
  for (;;) {
    QuadraticForm q(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) q.set_monomial(i, j, random_int(rng, -bound, bound));
    if (!q.is_zero()) return q;
  }
}

/// Sum of `terms` random products of linear forms.
inline QuadraticForm random_product_sum(Rng& rng, std::size_t n, std::size_t terms, long bound = 5) {
  for (;;) {
    QuadraticForm q(n);
    for (std::size_t t = 0; t < terms; ++t)
      q = q + QuadraticForm::product(random_linear_form(rng, n, bound), random_linear_form(rng, n, bound));
    if (!q.is_zero()) return q;
  }
}

}  // namespace quadsg
