#pragma once

// Common isotropic planes: independent linear forms a, b with A and B both in
// the ideal <a, b>, decided by Gram-rank case analysis.

#include <quadsg/poly/factor.hpp>
#include <quadsg/poly/groebner.hpp>
#include <quadsg/poly/univariate.hpp>
#include <quadsg/qcore.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadsg {

using LinearPair = std::pair<ExtLinearForm, ExtLinearForm>;

struct IsotropicPlaneResult {
  bool exists = false;
  /// Independent (a, b) spanning a plane on which every input form vanishes.
  std::optional<LinearPair> plane;
  /// "rank", "factor" or "cells": which branch decided.
  std::string method;
  /// Set when a plane exists but no witness over Q or one extension was found.
  std::string note;
};

/// q in <a, b> (q vanishes on a = b = 0), with a, b independent.
inline bool vanishes_on_plane(const ExtQuadraticForm& q, const ExtLinearForm& a, const ExtLinearForm& b) {
  ExtLinearSpace v(q.n(), {a, b});
  if (v.dim() != 2) return false;
  return restrict(q, v).is_zero();
}

inline bool vanishes_on_plane(const QuadraticForm& q, const ExtLinearForm& a, const ExtLinearForm& b) {
  return vanishes_on_plane(to_ext(q), a, b);
}

namespace detail {

inline bool compatible_fields(const ExtLinearForm& a, const ExtLinearForm& b) {
  long fa = field_of(a), fb = field_of(b);
  return fa == 0 || fb == 0 || fa == fb;
}

/// A unit form outside span{a} (used to complete a one-dimensional witness).
inline ExtLinearForm complete_to_plane(const ExtLinearForm& a) {
  for (std::size_t i = 0; i < a.n(); ++i) {
    ExtLinearForm e = to_ext(LinearForm::variable(a.n(), i));
    if (ExtLinearSpace(a.n(), {a, e}).dim() == 2) return e;
  }
  throw std::logic_error("complete_to_plane: ambient dimension below 2");
}

/// Solves a polynomial system over Q for one point with coordinates in Q or
/// a single quadratic extension. Variables are fixed from the last one down
/// using lex elimination; free variables receive small integers.
class PointFinder {
 public:
  PointFinder(std::size_t vars, const GroebnerLimits& limits) : vars_(vars), limits_(limits) {}

  std::optional<std::vector<QuadExt>> solve(const std::vector<MultiPoly>& system) {
    std::vector<QuadExt> point(vars_);
    try {
      if (!solve_from(system, static_cast<long>(vars_) - 1, point)) return std::nullopt;
    } catch (const ResourceLimitExceeded&) {
      return std::nullopt;
    }
    for (const auto& p : system)
      if (!is_zero(p.evaluate(point))) throw std::logic_error("PointFinder: point does not satisfy the system");
    return point;
  }

 private:
  static std::vector<MultiPoly> nonzero(const std::vector<MultiPoly>& s) {
    std::vector<MultiPoly> out;
    for (const auto& p : s)
      if (!p.is_zero()) out.push_back(p);
    return out;
  }

  bool only_vars(const MultiPoly& p, std::size_t a, std::size_t b) const {
    for (std::size_t u = 0; u < vars_; ++u)
      if (u != a && u != b && p.involves(u)) return false;
    return true;
  }

  bool solve_from(std::vector<MultiPoly> system, long v, std::vector<QuadExt>& point) {
    system = nonzero(system);
    if (system.empty()) {
      for (long u = v; u >= 0; --u) point[static_cast<std::size_t>(u)] = QuadExt(0);
      return true;
    }
    if (v < 0) return false;  // a nonzero constant survived
    auto gb = groebner(system, MonomialOrder::lex, limits_);
    if (gb.is_unit()) return false;
    const std::size_t var = static_cast<std::size_t>(v);

    std::optional<MultiPoly> elim;
    for (const auto& g : gb.generators())
      if (!g.is_zero() && only_vars(g, var, var)) elim = g;

    auto fix = [&](const Rational& value) {
      std::vector<MultiPoly> next;
      for (const auto& g : gb.generators()) next.push_back(g.substitute(var, MultiPoly::constant(vars_, value)));
      point[var] = QuadExt(value);
      return solve_from(next, v - 1, point);
    };

    if (!elim) {
      for (long c : {0L, 1L, -1L, 2L, -2L, 3L})
        if (fix(Rational(c))) return true;
      return false;
    }
    std::vector<Rational> coeffs(elim->degree_in(var) + 1);
    for (const auto& [m, c] : elim->terms()) coeffs[m[var]] = c;
    UniPoly g(coeffs);
    UniPoly sf = UniPoly::divmod(g, UniPoly::gcd(g, g.derivative())).first;
    for (const auto& r : rational_roots(sf)) {
      if (fix(r)) return true;
      sf = UniPoly::divmod(sf, UniPoly({-r, Rational(1)})).first;
    }
    if (sf.degree() != 2) return false;
    // Irrational root: the remaining variables must be linear in it.
    auto [theta, theta2] = quadratic_roots(sf);
    (void)theta2;
    std::vector<QuadExt> trial = point;
    trial[var] = theta;
    for (long u = v - 1; u >= 0; --u) {
      const std::size_t uu = static_cast<std::size_t>(u);
      std::optional<MultiPoly> lin;
      for (const auto& h : gb.generators())
        if (!h.is_zero() && h.leading_term(MonomialOrder::lex).first == Monomial::variable(uu) && only_vars(h, uu, var))
          lin = h;
      if (!lin) return false;
      Rational c = lin->coefficient(Monomial::variable(uu));
      MultiPoly rest = *lin - MultiPoly::monomial(vars_, Monomial::variable(uu), c);
      trial[uu] = -(rest.evaluate(trial)) / QuadExt(c);
    }
    for (const auto& h : gb.generators())
      if (!is_zero(h.evaluate(trial))) return false;
    point = trial;
    return true;
  }

  std::size_t vars_;
  GroebnerLimits limits_;
};

/// Search over the Schubert cells of Gr(2, M) for a plane on which every
/// form in `forms` vanishes. Requires every form to have Gram rank >= 3, so
/// that any such plane lies inside each minimal space and hence inside M.
inline IsotropicPlaneResult plane_by_cells(const std::vector<QuadraticForm>& forms, const LinearSpace& m,
                                           const GroebnerLimits& limits) {
  IsotropicPlaneResult res;
  res.method = "cells";
  const std::size_t n = m.n(), k = m.dim();
  if (k < 2) return res;

  // y = T x with the first k coordinates a basis of M.
  std::vector<LinearForm> rows(m.basis().begin(), m.basis().end());
  for (std::size_t i = 0; i < n && rows.size() < n; ++i) {
    auto candidate = rows;
    candidate.push_back(LinearForm::variable(n, i));
    if (LinearSpace(n, candidate).dim() == candidate.size()) rows = candidate;
  }
  Matrix<Rational> t(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) t(r, c) = rows[r][c];
  auto t_inv = inverse(t);
  if (!t_inv) throw std::logic_error("plane_by_cells: coordinate change not invertible");
  std::vector<MultiPoly> in_y;
  for (const auto& q : forms) in_y.push_back(MultiPoly::from_quadratic(QuadraticForm(t_inv->transpose() * q.gram() * *t_inv)));

  bool undecided_witness = false;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p + 1; q < k; ++q) {
      std::vector<std::size_t> sa, sb;  // y-indices carrying parameters in a and b
      for (std::size_t j = p + 1; j < k; ++j)
        if (j != q) sa.push_back(j);
      for (std::size_t j = q + 1; j < k; ++j) sb.push_back(j);
      const std::size_t params = sa.size() + sb.size();
      const std::size_t total = n + params;
      if (total > kMaxVars) throw ResourceLimitExceeded("plane_by_cells: too many variables");

      // a = y_p + sum s_j y_j, b = y_q + sum t_j y_j; on a = b = 0 substitute
      // y_p and y_q.
      std::vector<MultiPoly> images;
      for (std::size_t v = 0; v < n; ++v) images.push_back(MultiPoly::variable(total, v));
      MultiPoly yp(total), yq(total);
      for (std::size_t idx = 0; idx < sa.size(); ++idx)
        yp -= MultiPoly::variable(total, n + idx) * MultiPoly::variable(total, sa[idx]);
      for (std::size_t idx = 0; idx < sb.size(); ++idx)
        yq -= MultiPoly::variable(total, n + sa.size() + idx) * MultiPoly::variable(total, sb[idx]);
      images[p] = yp;
      images[q] = yq;

      // every y-coefficient of every substituted form must vanish
      std::vector<MultiPoly> eqs;
      for (const auto& f : in_y) {
        MultiPoly sub = f.compose(images, total);
        std::map<Monomial, MultiPoly, MonomialLexLess> by_y;
        for (const auto& [mono, c] : sub.terms()) {
          Monomial ypart, ppart;
          for (std::size_t v = 0; v < n; ++v) ypart.set(v, mono[v]);
          for (std::size_t v = 0; v < params; ++v) ppart.set(v, mono[n + v]);
          by_y.try_emplace(ypart, MultiPoly(params)).first->second.add_term(ppart, c);
        }
        for (auto& [mono, poly] : by_y)
          if (!poly.is_zero()) eqs.push_back(std::move(poly));
      }

      bool empty_cell;
      if (params == 0) {
        empty_cell = !eqs.empty();
      } else if (eqs.empty()) {
        empty_cell = false;
      } else {
        empty_cell = generates_unit_ideal(eqs, MonomialOrder::degrevlex, limits);
      }
      if (empty_cell) continue;
      res.exists = true;

      std::vector<QuadExt> point(params);
      if (params > 0 && !eqs.empty()) {
        auto found = PointFinder(params, limits).solve(eqs);
        if (!found) {
          undecided_witness = true;
          continue;
        }
        point = *found;
      }
      auto row_form = [&](std::size_t r) { return to_ext(rows[r]); };
      ExtLinearForm a = row_form(p), b = row_form(q);
      for (std::size_t idx = 0; idx < sa.size(); ++idx) a = a + point[idx] * row_form(sa[idx]);
      for (std::size_t idx = 0; idx < sb.size(); ++idx) b = b + point[sa.size() + idx] * row_form(sb[idx]);
      for (const auto& f : forms)
        if (!vanishes_on_plane(f, a, b)) throw std::logic_error("plane_by_cells: witness fails verification");
      res.plane = LinearPair{a, b};
      return res;
    }
  if (undecided_witness)
    res.note = "plane exists but no point with coordinates in Q or one quadratic extension was found";
  return res;
}

}  // namespace detail

/// Decides whether A and B vanish together on some codimension-2 subspace
/// a = b = 0 and returns (a, b) when it can be written over Q or one
/// quadratic extension. Throws ResourceLimitExceeded when the Groebner
/// search over Schubert cells runs out of budget.
inline IsotropicPlaneResult common_isotropic_plane(const QuadraticForm& a, const QuadraticForm& b,
                                                   const GroebnerLimits& limits = {}) {
  if (a.n() != b.n()) throw std::invalid_argument("common_isotropic_plane: variable count mismatch");
  const std::size_t n = a.n();
  IsotropicPlaneResult res;
  if (n < 2) {
    res.method = "rank";
    return res;
  }
  const std::size_t ra = a.gram_rank(), rb = b.gram_rank();
  // q in <u, v> forces Gram rank <= 4
  if (ra >= 5 || rb >= 5) {
    res.method = "rank";
    return res;
  }
  auto check = [&](const ExtLinearForm& u, const ExtLinearForm& v) {
    return vanishes_on_plane(a, u, v) && vanishes_on_plane(b, u, v);
  };

  if (ra == 0 && rb == 0) {
    res.method = "rank";
    res.exists = true;
    res.plane = LinearPair{to_ext(LinearForm::variable(n, 0)), to_ext(LinearForm::variable(n, 1))};
    return res;
  }
  if (ra == 0 || rb == 0) {
    const QuadraticForm& q = ra == 0 ? b : a;
    if (q.gram_rank() <= 2) {
      res.method = "factor";
      res.exists = true;
      auto [e, f] = factor_rank2(q);
      (void)f;
      res.plane = LinearPair{e, detail::complete_to_plane(e)};
      return res;
    }
    return detail::plane_by_cells({q}, minimal_space(q), limits);
  }

  if (ra <= 2 && rb <= 2) {
    // (a) a plane through one factor of each form always works
    res.method = "factor";
    res.exists = true;
    auto fa = factor_rank2(a);
    auto fb = factor_rank2(b);
    for (const auto& u : {fa.first, fa.second})
      for (const auto& v : {fb.first, fb.second}) {
        if (res.plane || !detail::compatible_fields(u, v)) continue;
        ExtLinearForm w = ExtLinearSpace(n, {u, v}).dim() == 2 ? v : detail::complete_to_plane(u);
        if (check(u, w)) res.plane = LinearPair{u, w};
      }
    if (!res.plane) res.note = "the factors of A and B live in different quadratic extensions";
    return res;
  }

  if (ra <= 2 || rb <= 2) {
    // (b) the plane contains a factor e of the reducible form; the other
    // form restricted to e = 0 must then be reducible.
    const QuadraticForm& red = ra <= 2 ? a : b;
    const QuadraticForm& other = ra <= 2 ? b : a;
    res.method = "factor";
    auto [e, f] = factor_rank2(red);
    for (const auto& u : {e, f}) {
      ExtQuadraticForm rest = restrict(to_ext(other), ExtLinearSpace(n, {u}));
      if (rest.gram_rank() > 2) continue;
      res.exists = true;
      auto split = factor_rank2(rest);
      if (!split || !detail::compatible_fields(u, split->first)) continue;
      if (check(u, split->first)) {
        res.plane = LinearPair{u, split->first};
        res.note.clear();
        return res;
      }
      throw std::logic_error("common_isotropic_plane: factor witness fails verification");
    }
    if (res.exists) res.note = "the plane needs coordinates beyond one quadratic extension";
    return res;
  }

  // (c) both of Gram rank 3 or 4: any such plane lies in MS(A) ∩ MS(B)
  return detail::plane_by_cells({a, b}, minimal_space(a).intersect(minimal_space(b)), limits);
}

}  // namespace quadsg
