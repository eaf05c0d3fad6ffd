#pragma once

// The maps T_{alpha,V}: basis forms v_i of V go to alpha_i z for a fresh
// variable z, complementary basis forms are kept.

#include <quadsg/linear_space.hpp>
#include <quadsg/poly/multipoly.hpp>
#include <quadsg/random.hpp>

#include <cstdint>
#include <vector>

namespace quadsg {

class ProjectionMap {
 public:
  /// V's RREF basis is v_1..v_D; the complement is spanned by the unit forms
  /// at V's non-pivot indices. z is variable n of the image ring.
  ProjectionMap(LinearSpace v, std::vector<Rational> alpha) : v_(std::move(v)), alpha_(std::move(alpha)) {
    if (alpha_.size() != v_.dim()) throw std::invalid_argument("ProjectionMap: need one alpha per basis form of V");
    if (v_.n() + 1 > kMaxVars) throw std::invalid_argument("ProjectionMap: too many variables");
    const std::size_t n = v_.n();
    Matrix<Rational> basis(n, n);
    for (std::size_t i = 0; i < v_.dim(); ++i)
      for (std::size_t j = 0; j < n; ++j) basis(i, j) = v_.basis()[i][j];
    complement_ = v_.free_indices();
    for (std::size_t r = 0; r < complement_.size(); ++r) basis(v_.dim() + r, complement_[r]) = 1;
    auto inv = inverse(basis);
    if (!inv) throw std::logic_error("ProjectionMap: basis not invertible");
    // x_k = sum_i inv(k, i) * (basis form i)
    const std::size_t z = n;
    for (std::size_t k = 0; k < n; ++k) {
      MultiPoly img(n + 1);
      for (std::size_t i = 0; i < v_.dim(); ++i) img.add_term(Monomial::variable(z), (*inv)(k, i) * alpha_[i]);
      for (std::size_t r = 0; r < complement_.size(); ++r)
        img.add_term(Monomial::variable(complement_[r]), (*inv)(k, v_.dim() + r));
      images_.push_back(std::move(img));
    }
  }

  std::size_t n() const { return v_.n(); }
  std::size_t z_index() const { return v_.n(); }
  const LinearSpace& space() const { return v_; }
  const std::vector<Rational>& alpha() const { return alpha_; }
  const std::vector<std::size_t>& complement_indices() const { return complement_; }
  /// T(x_k) for each variable x_k.
  const std::vector<MultiPoly>& images() const { return images_; }

  MultiPoly apply(const MultiPoly& p) const {
    if (p.n() != n()) throw std::invalid_argument("ProjectionMap::apply: dimension mismatch");
    return p.compose(images_, n() + 1);
  }
  MultiPoly apply(const QuadraticForm& q) const { return apply(MultiPoly::from_quadratic(q)); }
  MultiPoly apply(const LinearForm& f) const { return apply(MultiPoly::from_linear(f)); }

  /// Image of a quadratic form as a quadratic form in n + 1 variables.
  QuadraticForm apply_quadratic(const QuadraticForm& q) const { return apply(q).to_quadratic(); }

 private:
  LinearSpace v_;
  std::vector<Rational> alpha_;
  std::vector<std::size_t> complement_;
  std::vector<MultiPoly> images_;
};

inline constexpr unsigned kAlphaBits = 31;

/// D rationals k / 2^31 with k uniform in [1, 2^31]. For a nonzero
/// polynomial condition of degree d in alpha, one draw fails with
/// probability at most d / 2^31 (Schwartz-Zippel).
inline std::vector<Rational> sample_alpha(std::size_t delta, std::uint64_t seed) {
  if (delta == 0) throw PreconditionError("sample_alpha: delta must be at least 1");
  Rng rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, std::uint64_t(1) << kAlphaBits);
  Integer den = Integer(1) << kAlphaBits;
  std::vector<Rational> out;
  for (std::size_t i = 0; i < delta; ++i) {
    Rational a(Integer(static_cast<unsigned long>(dist(rng))), den);
    a.canonicalize();
    out.push_back(a);
  }
  return out;
}

}  // namespace quadsg
