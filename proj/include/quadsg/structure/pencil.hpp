#pragma once

// Reducible members alpha*A + beta*B of a pencil of quadrics, decided through
// the gcd of the 3x3 minors of lambda*gram(A) + mu*gram(B).

#include <quadsg/poly/factor.hpp>
#include <quadsg/poly/univariate.hpp>
#include <quadsg/quadratic_form.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadsg {

/// Homogeneous form in (lambda, mu); coeffs[k] multiplies lambda^k mu^(d-k).
struct BinaryForm {
  std::vector<Rational> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_constant() const { return coeffs.size() <= 1; }

  /// mu^e * mu^deg(g) g(lambda/mu)
  static BinaryForm from_dehomogenized(const UniPoly& g, std::size_t mu_power) {
    BinaryForm b;
    b.coeffs.assign(static_cast<std::size_t>(g.degree() + 1) + mu_power, Rational(0));
    for (long k = 0; k <= g.degree(); ++k) b.coeffs[static_cast<std::size_t>(k)] = g[static_cast<std::size_t>(k)];
    return b;
  }

  std::string str() const {
    std::string s;
    std::size_t d = degree();
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      const Rational& c = coeffs[k];
      if (is_zero(c)) continue;
      if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
      else if (sgn(c) < 0) s += "-";
      Rational mag = abs(c);
      std::string mono;
      auto power = [](const std::string& v, std::size_t e) {
        return e == 0 ? std::string() : (e == 1 ? v : v + "^" + std::to_string(e));
      };
      std::string l = power("l", k), m = power("m", d - k);
      mono = l.empty() ? m : (m.empty() ? l : l + "*" + m);
      if (mono.empty()) s += mag.get_str();
      else s += (mag == 1 ? "" : mag.get_str() + "*") + mono;
    }
    return s.empty() ? "0" : s;
  }
};

struct ReducibleWitness {
  QuadExt alpha;
  QuadExt beta;
  /// c*d == alpha*A + beta*B; absent when the factors need a second extension.
  std::optional<std::pair<ExtLinearForm, ExtLinearForm>> factors;
};

struct ReducibleMembers {
  bool exists = false;
  bool all_minors_zero = false;
  std::vector<ReducibleWitness> witnesses;
  /// gcd of the nonzero pencil minors (absent when every minor vanishes or n < 3)
  std::optional<BinaryForm> gcd;
};

namespace detail {

/// alpha*A + beta*B over the common field of alpha and beta.
inline ExtQuadraticForm pencil_member(const QuadraticForm& a, const QuadraticForm& b, const QuadExt& alpha,
                                      const QuadExt& beta) {
  return alpha * to_ext(a) + beta * to_ext(b);
}

inline ReducibleWitness make_reducible_witness(const QuadraticForm& a, const QuadraticForm& b, QuadExt alpha,
                                               QuadExt beta) {
  ReducibleWitness w{std::move(alpha), std::move(beta), std::nullopt};
  ExtQuadraticForm c = pencil_member(a, b, w.alpha, w.beta);
  if (c.gram_rank() > 2) throw std::logic_error("reducible_members: witness of Gram rank > 2");
  if (!c.is_zero()) w.factors = factor_rank2(c);
  return w;
}

}  // namespace detail

/// Decides whether some nontrivial alpha*A + beta*B has Gram rank <= 2 (is a
/// product of two linear forms over C) and lists the members it can write
/// down over Q or one quadratic extension.
inline ReducibleMembers reducible_members(const QuadraticForm& a, const QuadraticForm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("reducible_members: variable count mismatch");
  const std::size_t n = a.n();
  ReducibleMembers out;
  auto add_basic = [&] {
    out.witnesses.push_back(detail::make_reducible_witness(a, b, QuadExt(1), QuadExt(0)));
    out.witnesses.push_back(detail::make_reducible_witness(a, b, QuadExt(0), QuadExt(1)));
  };
  if (n < 3) {
    out.exists = true;
    add_basic();
    return out;
  }

  const auto& ga = a.gram();
  const auto& gb = b.gram();
  auto entry = [&](std::size_t i, std::size_t j) { return UniPoly({gb(i, j), ga(i, j)}); };

  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});

  static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  std::optional<UniPoly> g;
  std::size_t mu_power = 3;
  bool done = false;
  for (std::size_t r = 0; r < triples.size() && !done; ++r)
    for (std::size_t c = r; c < triples.size() && !done; ++c) {  // symmetric: minor(R,C) = minor(C,R)
      const auto& rows = triples[r];
      const auto& cols = triples[c];
      UniPoly det;
      for (int p = 0; p < 6; ++p) {
        UniPoly term = entry(rows[0], cols[perms[p][0]]) * entry(rows[1], cols[perms[p][1]]) *
                       entry(rows[2], cols[perms[p][2]]);
        det = p < 3 ? det + term : det - term;
      }
      if (det.is_zero()) continue;
      mu_power = std::min<std::size_t>(mu_power, 3 - static_cast<std::size_t>(det.degree()));
      g = g ? UniPoly::gcd(*g, det) : det.monic();
      if (g->degree() == 0 && mu_power == 0) done = true;
    }

  if (!g) {
    out.exists = true;
    out.all_minors_zero = true;
    add_basic();
    return out;
  }
  out.gcd = BinaryForm::from_dehomogenized(*g, mu_power);
  out.exists = out.gcd->degree() >= 1;
  if (!out.exists) return out;

  // (lambda : mu) = (1 : 0)
  if (mu_power > 0) out.witnesses.push_back(detail::make_reducible_witness(a, b, QuadExt(1), QuadExt(0)));
  if (g->degree() >= 1) {
    // (t : 1), normalized to alpha = 1 unless t = 0
    UniPoly sf = UniPoly::divmod(*g, UniPoly::gcd(*g, g->derivative())).first;
    auto roots = rational_roots(sf);
    std::vector<ReducibleWitness> rational;
    for (const auto& t : roots) {
      if (is_zero(t)) rational.push_back(detail::make_reducible_witness(a, b, QuadExt(0), QuadExt(1)));
      else rational.push_back(detail::make_reducible_witness(a, b, QuadExt(1), QuadExt(Rational(1) / t)));
      sf = UniPoly::divmod(sf, UniPoly({-t, Rational(1)})).first;
    }
    std::sort(rational.begin(), rational.end(), [](const ReducibleWitness& x, const ReducibleWitness& y) {
      if (x.alpha.rational_part() != y.alpha.rational_part())
        return x.alpha.rational_part() > y.alpha.rational_part();
      return x.beta.rational_part() > y.beta.rational_part();
    });
    out.witnesses.insert(out.witnesses.end(), rational.begin(), rational.end());
    if (sf.degree() == 2) {
      auto [t1, t2] = quadratic_roots(sf);
      for (const auto& t : {t1, t2}) out.witnesses.push_back(detail::make_reducible_witness(a, b, QuadExt(1), QuadExt(1) / t));
    }
  }
  return out;
}

}  // namespace quadsg
