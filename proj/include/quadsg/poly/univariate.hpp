#pragma once

// Dense univariate polynomials over Q: Euclid, exact rational roots via
// Sturm isolation, and the roots of leftover quadratics in Q(sqrt m).

#include <quadsg/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadsg {

/// c[k] multiplies t^k. The zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static UniPoly monomial(std::size_t k, const Rational& c = Rational(1)) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational evaluate(const Rational& t) const {
    Rational r = 0;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * t + c_[k];
    return r;
  }
  QuadExt evaluate(const QuadExt& t) const {
    QuadExt r(Rational(0), Rational(0), t.field());
    for (std::size_t k = c_.size(); k-- > 0;) r = r * t + QuadExt(c_[k]);
    return r;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    std::vector<Rational> v = c_;
    Rational lc = v.back();
    for (auto& x : v) x /= lc;
    return UniPoly(std::move(v));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[k] + b[k];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[k] - b[k];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// (quotient, remainder) of a by b.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
    std::vector<Rational> r = a.c_;
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
      Rational f = r[k + b.c_.size() - 1] / b.leading();
      q[k] = f;
      if (quadsg::is_zero(f)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }

  /// Monic gcd; gcd(0, 0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (quadsg::is_zero(c_[k])) continue;
      if (!s.empty()) s += sgn(c_[k]) < 0 ? " - " : " + ";
      else if (sgn(c_[k]) < 0) s += "-";
      Rational mag = abs(c_[k]);
      if (k == 0) s += mag.get_str();
      else {
        if (mag != 1) s += mag.get_str() + "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && quadsg::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rational> c_;
};

namespace detail {

inline Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

/// The rational of smallest denominator in [a, b].
inline Rational simplest_between(const Rational& a, const Rational& b) {
  if (a > b) return simplest_between(b, a);
  if (sgn(a) <= 0 && sgn(b) >= 0) return Rational(0);
  if (sgn(b) < 0) return -simplest_between(-b, -a);
  Integer fl = floor_of(a);
  if (Rational(fl) == a) return a;
  if (Rational(fl + 1) <= b) return Rational(fl + 1);
  Rational lo = a - Rational(fl), hi = b - Rational(fl);
  return Rational(fl) + Rational(1) / simplest_between(Rational(1) / hi, Rational(1) / lo);
}

inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = UniPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(UniPoly() - r);
  }
  return chain;
}

inline int sign_changes(const std::vector<UniPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s = sgn(q.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// All rational roots of p (each once), in increasing order.
inline std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  UniPoly sf = UniPoly::divmod(p, UniPoly::gcd(p, p.derivative())).first;
  if (is_zero(sf[0])) {
    roots.push_back(Rational(0));
    sf = UniPoly::divmod(sf, UniPoly::monomial(1)).first;
  }
  if (sf.degree() >= 1) {
    // Integer primitive copy: a rational root has denominator dividing lc.
    Integer den = 1;
    for (const auto& c : sf.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Integer lc = abs(Integer(sf.leading() * Rational(den)));
    Rational bound = 1;
    for (const auto& c : sf.coeffs()) bound = std::max(bound, Rational(Rational(1) + abs(c / sf.leading())));
    Rational width = Rational(1) / Rational(2 * lc * lc);
    auto chain = detail::sturm_chain(sf);
    // (lo, hi] intervals with their root counts
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      int count = detail::sign_changes(chain, lo) - detail::sign_changes(chain, hi);
      if (count == 0) continue;
      if (count == 1 && hi - lo < width) {
        Rational cand = detail::simplest_between(lo, hi);
        if (cand > lo && is_zero(sf.evaluate(cand))) roots.push_back(cand);
        continue;
      }
      Rational mid = (lo + hi) / 2;
      stack.push_back({lo, mid});
      stack.push_back({mid, hi});
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Roots of a quadratic a t^2 + b t + c in Q(sqrt disc).
inline std::pair<QuadExt, QuadExt> quadratic_roots(const UniPoly& q) {
  if (q.degree() != 2) throw std::invalid_argument("quadratic_roots: degree must be 2");
  Rational a = q[2], b = q[1], c = q[0];
  QuadExt s = sqrt_ext(b * b - 4 * a * c);
  QuadExt two_a(2 * a);
  return {(QuadExt(-b) + s) / two_a, (QuadExt(-b) - s) / two_a};
}

}  // namespace quadsg
