#pragma once

// Rank, minimal space, minimal representations, restriction and span
// operations for quadratic forms.

#include <quadsg/linear_space.hpp>
#include <quadsg/quadratic_form.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace quadsg {

/// Minimal r with Q = sum_{k<=r} a_k b_k over an algebraically closed field,
/// i.e. ceil(rank(Gram)/2).
template <class T>
std::size_t rank_s(const BasicQuadraticForm<T>& q) {
  return (q.gram_rank() + 1) / 2;
}

/// The space of linear forms Q depends on: the row space of its Gram matrix.
template <class T>
BasicLinearSpace<T> minimal_space(const BasicQuadraticForm<T>& q) {
  return BasicLinearSpace<T>::row_space(q.gram());
}

/// Combined minimal space of several forms.
template <class T>
BasicLinearSpace<T> minimal_space(const std::vector<BasicQuadraticForm<T>>& qs, std::size_t n) {
  BasicLinearSpace<T> s(n);
  for (const auto& q : qs) s = s + minimal_space(q);
  return s;
}

/// Matrix S with x = S y realising the substitution "V = 0": pivot variables
/// of V's RREF basis are solved for in terms of the free ones.
template <class T>
Matrix<T> restriction_substitution(const BasicLinearSpace<T>& v) {
  std::size_t n = v.n();
  Matrix<T> s(n, n);
  auto free = v.free_indices();
  for (auto j : free) s(j, j) = T(1);
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (auto j : free) s(v.pivots()[i], j) = -v.basis()[i][j];
  return s;
}

/// Q restricted to V = 0, written in the free (non-pivot) coordinates and
/// embedded back into the original n variables.
template <class T>
BasicQuadraticForm<T> restrict(const BasicQuadraticForm<T>& q, const BasicLinearSpace<T>& v) {
  if (q.n() != v.n()) throw std::invalid_argument("restrict: variable count mismatch");
  Matrix<T> s = restriction_substitution(v);
  return BasicQuadraticForm<T>(s.transpose() * q.gram() * s);
}

template <class T>
BasicLinearForm<T> restrict(const BasicLinearForm<T>& f, const BasicLinearSpace<T>& v) {
  if (f.n() != v.n()) throw std::invalid_argument("restrict: variable count mismatch");
  Matrix<T> s = restriction_substitution(v);
  BasicLinearForm<T> out(f.n());
  for (std::size_t j = 0; j < f.n(); ++j)
    for (std::size_t i = 0; i < f.n(); ++i) out[j] += f[i] * s(i, j);
  return out;
}

/// P == Q modulo the ideal generated by V.
template <class T>
bool congruent_mod(const BasicQuadraticForm<T>& p, const BasicQuadraticForm<T>& q, const BasicLinearSpace<T>& v) {
  return restrict(p - q, v).is_zero();
}

namespace detail {

struct SquareTerm {
  Rational weight;
  LinearForm form;  // normalized, leading coefficient 1
};

inline std::pair<ExtLinearForm, ExtLinearForm> ordered_pair(ExtLinearForm a, ExtLinearForm b) {
  // Lower leading variable first; the second form carries leading coefficient 1.
  auto la = a.leading_index(), lb = b.leading_index();
  if (lb && (!la || *lb < *la)) std::swap(a, b);
  if (auto l = b.leading_index()) {
    QuadExt c = b[*l];
    b = (QuadExt(1) / c) * b;
    a = c * a;
  }
  return {a, b};
}

}  // namespace detail

/// rank_s(Q) pairs (a_k, b_k) with sum a_k b_k = Q. Each pair has
/// coefficients in Q or in one quadratic extension Q(sqrt m); rational pairs
/// are used whenever the elimination finds them.
inline std::vector<std::pair<ExtLinearForm, ExtLinearForm>> minimal_representation(const QuadraticForm& q) {
  const std::size_t n = q.n();
  Matrix<Rational> m = q.gram();
  std::vector<std::pair<ExtLinearForm, ExtLinearForm>> pairs;
  std::vector<detail::SquareTerm> squares;

  auto row = [&](std::size_t i) { return LinearForm(m.row(i)); };
  auto subtract_sym = [&](const LinearForm& r1, const LinearForm& r2, const Rational& scale) {
    // m -= scale * (r1 r2^T + r2 r1^T)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= scale * (r1[i] * r2[j] + r2[i] * r1[j]);
  };

  while (!m.is_zero_matrix()) {
    std::optional<std::pair<std::size_t, std::size_t>> hyper;
    for (std::size_t i = 0; i < n && !hyper; ++i) {
      if (!is_zero(m(i, i))) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (!is_zero(m(i, j)) && is_zero(m(j, j))) {
          hyper = {i, j};
          break;
        }
    }
    if (hyper) {
      auto [i, j] = *hyper;
      Rational c = m(i, j);
      LinearForm ri = row(i), rj = row(j);
      // Q - (2/c) r_i r_j no longer involves x_i, x_j.
      pairs.push_back(detail::ordered_pair(to_ext(Rational(2) / c * ri), to_ext(rj)));
      subtract_sym(ri, rj, Rational(1) / c);
      continue;
    }
    std::size_t i = 0;
    while (is_zero(m(i, i))) ++i;  // some diagonal entry is nonzero here
    LinearForm ri = row(i);
    Rational d = Rational(1) / m(i, i);
    LinearForm lead = ri.normalized();
    Rational scale = ri[*ri.leading_index()];
    squares.push_back({d * scale * scale, lead});
    subtract_sym(ri, ri, d / 2);
  }

  // Pair up the squares, rational pairings first.
  std::vector<bool> used(squares.size(), false);
  auto emit = [&](std::size_t a, std::size_t b) {
    const auto& s1 = squares[a];
    const auto& s2 = squares[b];
    // w1 l1^2 + w2 l2^2 = w1 (l1 + s l2)(l1 - s l2) with s^2 = -w2/w1
    QuadExt s = sqrt_ext(-s2.weight / s1.weight);
    ExtLinearForm l1 = to_ext(s1.form), l2 = to_ext(s2.form);
    pairs.push_back(detail::ordered_pair(QuadExt(s1.weight) * (l1 + s * l2), l1 - s * l2));
    used[a] = used[b] = true;
  };
  for (std::size_t a = 0; a < squares.size(); ++a) {
    if (used[a]) continue;
    for (std::size_t b = a + 1; b < squares.size(); ++b)
      if (!used[b] && rational_sqrt(-squares[b].weight / squares[a].weight)) {
        emit(a, b);
        break;
      }
  }
  std::optional<std::size_t> pending;
  for (std::size_t a = 0; a < squares.size(); ++a) {
    if (used[a]) continue;
    if (pending) {
      emit(*pending, a);
      pending.reset();
    } else {
      pending = a;
    }
  }
  if (pending) {
    const auto& s = squares[*pending];
    pairs.push_back(detail::ordered_pair(to_ext(s.weight * s.form), to_ext(s.form)));
  }
  return pairs;
}

// ---- span operations over sets of quadratic forms ----

template <class T>
std::size_t span_dimension(const std::vector<BasicQuadraticForm<T>>& forms) {
  if (forms.empty()) return 0;
  std::vector<std::vector<T>> rows;
  for (const auto& f : forms) rows.push_back(f.flatten());
  return rank(from_rows(rows, rows.front().size()));
}

/// (alpha, beta) with alpha A + beta B = Q, if Q lies in span{A, B}.
template <class T>
std::optional<std::pair<T, T>> in_span(const BasicQuadraticForm<T>& q, const BasicQuadraticForm<T>& a,
                                       const BasicQuadraticForm<T>& b) {
  auto fa = a.flatten(), fb = b.flatten(), fq = q.flatten();
  Matrix<T> m(fq.size(), 2);
  for (std::size_t i = 0; i < fq.size(); ++i) {
    m(i, 0) = fa[i];
    m(i, 1) = fb[i];
  }
  auto x = solve(m, fq);
  if (!x) return std::nullopt;
  return std::make_pair((*x)[0], (*x)[1]);
}

template <class T>
bool proportional(const BasicQuadraticForm<T>& a, const BasicQuadraticForm<T>& b) {
  return span_dimension(std::vector<BasicQuadraticForm<T>>{a, b}) < 2;
}

/// False iff some pair of forms is linearly dependent (this includes zero forms).
template <class T>
bool pairwise_independent(const std::vector<BasicQuadraticForm<T>>& forms) {
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      if (proportional(forms[i], forms[j])) return false;
  return true;
}

}  // namespace quadsg
