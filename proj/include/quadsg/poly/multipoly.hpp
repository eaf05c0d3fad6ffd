#pragma once

#include <quadsg/errors.hpp>
#include <quadsg/linear_form.hpp>
#include <quadsg/poly/monomial.hpp>
#include <quadsg/quadratic_form.hpp>
#include <quadsg/scalar.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadsg {

/// Sparse polynomial in n variables over Q. Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t n) : n_(n) {
    if (n > kMaxVars) throw std::invalid_argument("MultiPoly: at most 32 variables are supported");
  }

  static MultiPoly constant(std::size_t n, const Rational& c) {
    MultiPoly p(n);
    p.add_term(Monomial(), c);
    return p;
  }
  static MultiPoly variable(std::size_t n, std::size_t i) {
    if (i >= n) throw std::out_of_range("MultiPoly::variable: index out of range");
    MultiPoly p(n);
    p.add_term(Monomial::variable(i), Rational(1));
    return p;
  }
  static MultiPoly monomial(std::size_t n, const Monomial& m, const Rational& c) {
    MultiPoly p(n);
    p.add_term(m, c);
    return p;
  }
  static MultiPoly from_linear(const LinearForm& f) {
    MultiPoly p(f.n());
    for (std::size_t i = 0; i < f.n(); ++i) p.add_term(Monomial::variable(i), f[i]);
    return p;
  }
  static MultiPoly from_quadratic(const QuadraticForm& q) {
    MultiPoly p(q.n());
    for (std::size_t i = 0; i < q.n(); ++i)
      for (std::size_t j = i; j < q.n(); ++j) p.add_term(Monomial::variable(i) * Monomial::variable(j), q.monomial(i, j));
    return p;
  }

  /// Inverse of from_quadratic; requires a homogeneous quadratic (or zero).
  QuadraticForm to_quadratic() const {
    QuadraticForm q(n_);
    for (const auto& [m, c] : terms_) {
      if (m.degree() != 2) throw PreconditionError("MultiPoly::to_quadratic: not a homogeneous quadratic");
      std::size_t i = 0;
      while (m[i] == 0) ++i;
      std::size_t j = m[i] == 2 ? i : i + 1;
      while (m[j] == 0) ++j;
      q.set_monomial(i, j, c);
    }
    return q;
  }

  std::size_t n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rational& c) {
    if (quadsg::is_zero(c)) return;
    check_monomial(m);
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (quadsg::is_zero(it->second)) terms_.erase(it);
    }
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  std::pair<Monomial, Rational> leading_term(MonomialOrder order) const {
    if (terms_.empty()) throw std::domain_error("MultiPoly::leading_term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (compare(order, it->first, best->first) > 0) best = it;
    return *best;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a.check_same(b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    a.check_same(b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
  }
  MultiPoly operator-() const {
    MultiPoly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a) {
    MultiPoly r(a.n_);
    if (quadsg::is_zero(s)) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, s * c);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply(a, b, 0); }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  /// Product; throws ResourceLimitExceeded once the result would exceed
  /// max_terms terms (0 means unlimited).
  static MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, std::size_t max_terms) {
    a.check_same(b);
    MultiPoly r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        r.add_term(ma * mb, ca * cb);
        if (max_terms && r.terms_.size() > max_terms)
          throw ResourceLimitExceeded("polynomial product exceeds " + std::to_string(max_terms) + " terms");
      }
    return r;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(n_, Rational(1));
    MultiPoly base = *this;
    while (k) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  template <class T>
  T evaluate(const std::vector<T>& x) const {
    if (x.size() != n_) throw std::invalid_argument("MultiPoly::evaluate: point size mismatch");
    T total(0);
    for (const auto& [m, c] : terms_) {
      T t(c);
      for (std::size_t i = 0; i < n_; ++i)
        for (unsigned e = 0; e < m[i]; ++e) t = t * x[i];
      total += t;
    }
    return total;
  }

  /// Coefficients as a polynomial in x_var: result[k] multiplies x_var^k.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const {
    std::vector<MultiPoly> out(degree_in(var) + 1, MultiPoly(n_));
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      unsigned k = m[var];
      rest.set(var, 0);
      out[k].add_term(rest, c);
    }
    return out;
  }

  /// Substitutes x_i := images[i] (each a polynomial in new_n variables).
  MultiPoly compose(const std::vector<MultiPoly>& images, std::size_t new_n) const {
    if (images.size() != n_) throw std::invalid_argument("MultiPoly::compose: need one image per variable");
    std::vector<std::vector<MultiPoly>> powers(n_);
    auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
      auto& p = powers[i];
      if (p.empty()) p.push_back(constant(new_n, Rational(1)));
      while (p.size() <= e) p.push_back(p.back() * images[i]);
      return p[e];
    };
    MultiPoly r(new_n);
    for (const auto& [m, c] : terms_) {
      MultiPoly t = constant(new_n, c);
      for (std::size_t i = 0; i < n_; ++i)
        if (m[i]) t = t * power(i, m[i]);
      r += t;
    }
    return r;
  }

  /// Substitutes x_var := value (value in the same ring).
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const {
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < n_; ++i) images.push_back(i == var ? value : variable(n_, i));
    return compose(images, n_);
  }

  /// The same polynomial viewed in new_n >= n variables.
  MultiPoly embed(std::size_t new_n) const {
    if (new_n < n_) throw std::invalid_argument("MultiPoly::embed: cannot shrink");
    MultiPoly r(new_n);
    r.terms_ = terms_;
    return r;
  }

  /// Drops variables at and beyond new_n; they must not occur.
  MultiPoly truncate(std::size_t new_n) const {
    for (std::size_t v = new_n; v < n_; ++v)
      if (involves(v)) throw std::invalid_argument("MultiPoly::truncate: dropped variable occurs");
    MultiPoly r(new_n);
    r.terms_ = terms_;
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
      else if (sgn(c) < 0) s += "-";
      Rational mag = abs(c);
      if (m.is_one()) s += mag.get_str();
      else if (mag == 1) s += m.str(n_);
      else s += mag.get_str() + "*" + m.str(n_);
    }
    return s;
  }

 private:
  void check_same(const MultiPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  }
  void check_monomial(const Monomial& m) const {
    for (std::size_t i = n_; i < kMaxVars; ++i)
      if (m[i]) throw std::invalid_argument("MultiPoly: monomial uses a variable beyond n");
  }

  std::size_t n_ = 0;
  TermMap terms_;
};

/// Multivariate division by a single polynomial (degrevlex). Returns the
/// quotient when g divides f exactly.
inline std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw std::domain_error("exact_divide: division by the zero polynomial");
  if (f.n() != g.n()) throw std::invalid_argument("exact_divide: variable count mismatch");
  auto [lm_g, lc_g] = g.leading_term(MonomialOrder::degrevlex);
  MultiPoly rem = f, quot(f.n());
  while (!rem.is_zero()) {
    auto [lm, lc] = rem.leading_term(MonomialOrder::degrevlex);
    if (!lm_g.divides(lm)) return std::nullopt;
    MultiPoly t = MultiPoly::monomial(f.n(), lm_g.quotient_of(lm), lc / lc_g);
    quot += t;
    rem -= t * g;
  }
  return quot;
}

/// Linear form (degree-1 homogeneous polynomial) back to coefficients.
inline LinearForm to_linear(const MultiPoly& p) {
  LinearForm f(p.n());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != 1) throw PreconditionError("to_linear: not a linear form");
    std::size_t i = 0;
    while (m[i] == 0) ++i;
    f[i] = c;
  }
  return f;
}

}  // namespace quadsg
