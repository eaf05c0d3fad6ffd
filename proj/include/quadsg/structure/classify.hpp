#pragma once

// Which case of the structure theorem holds for (A, B, {Q_k}): Q_k in
// span{A, B}, a reducible member of the pencil, or a common isotropic plane.

#include <quadsg/poly/radical.hpp>
#include <quadsg/qcore.hpp>
#include <quadsg/structure/isotropic.hpp>
#include <quadsg/structure/pencil.hpp>

#include <map>
#include <optional>
#include <vector>

namespace quadsg {

struct SpanWitness {
  std::size_t k;
  Rational alpha;
  Rational beta;
};

struct StructureReport {
  std::optional<SpanWitness> case_i;
  ReducibleMembers pencil;
  IsotropicPlaneResult plane;
  /// First k with Q_k also vanishing on the reported plane.
  std::optional<std::size_t> vanishing_k;
  /// prod Q_k in sqrt<A, B>, when the oracle ran.
  std::optional<bool> oracle_confirmed;

  bool has_case_i() const { return case_i.has_value(); }
  bool has_case_ii() const { return pencil.exists; }
  bool has_case_iii() const { return plane.exists; }
  bool any_case() const { return has_case_i() || has_case_ii() || has_case_iii(); }
};

inline MultiPoly product_of(const std::vector<QuadraticForm>& qs, std::size_t n) {
  MultiPoly p = MultiPoly::constant(n, Rational(1));
  for (const auto& q : qs) p *= MultiPoly::from_quadratic(q);
  return p;
}

inline MultiPoly product_of(const std::vector<QuadraticForm>& qs, const std::vector<std::size_t>& idx, std::size_t n) {
  MultiPoly p = MultiPoly::constant(n, Rational(1));
  for (auto i : idx) p *= MultiPoly::from_quadratic(qs.at(i));
  return p;
}

/// prod Q_k in sqrt<A, B> by the Rabinowitsch oracle.
inline bool product_in_radical(const std::vector<QuadraticForm>& qs, const QuadraticForm& a, const QuadraticForm& b,
                               const GroebnerLimits& limits = {}) {
  return radical_member(product_of(qs, a.n()), {MultiPoly::from_quadratic(a), MultiPoly::from_quadratic(b)}, limits);
}

inline StructureReport classify(const QuadraticForm& a, const QuadraticForm& b, const std::vector<QuadraticForm>& qs,
                                bool check_oracle, const GroebnerLimits& limits = {}) {
  if (a.n() != b.n()) throw std::invalid_argument("classify: variable count mismatch");
  if (qs.empty()) throw PreconditionError("classify: empty list of Q_k");
  for (const auto& q : qs)
    if (q.n() != a.n()) throw std::invalid_argument("classify: variable count mismatch");
  if (a.is_zero() || b.is_zero() || proportional(a, b)) throw PreconditionError("classify: A and B must be independent");

  StructureReport r;
  for (std::size_t k = 0; k < qs.size() && !r.case_i; ++k)
    if (auto ab = in_span(qs[k], a, b)) r.case_i = SpanWitness{k, ab->first, ab->second};
  r.pencil = reducible_members(a, b);
  r.plane = common_isotropic_plane(a, b, limits);
  if (r.plane.plane)
    for (std::size_t k = 0; k < qs.size() && !r.vanishing_k; ++k)
      if (vanishes_on_plane(qs[k], r.plane.plane->first, r.plane.plane->second)) r.vanishing_k = k;
  if (check_oracle) r.oracle_confirmed = product_in_radical(qs, a, b, limits);
  return r;
}

/// Smallest-first subset S, |S| <= 4, with prod_{k in S} Q_k in sqrt<A, B>.
/// Requires the full product to lie in the radical.
inline std::vector<std::size_t> gupta_reduce(const std::vector<QuadraticForm>& qs, const QuadraticForm& a,
                                             const QuadraticForm& b, const GroebnerLimits& limits = {}) {
  if (qs.empty()) throw PreconditionError("gupta_reduce: empty list");
  const std::size_t n = a.n();
  std::vector<MultiPoly> ideal{MultiPoly::from_quadratic(a), MultiPoly::from_quadratic(b)};
  std::map<std::vector<std::size_t>, bool> memo;
  auto member = [&](const std::vector<std::size_t>& s) {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    bool v = radical_member(product_of(qs, s, n), ideal, limits);
    memo.emplace(s, v);
    return v;
  };
  std::vector<std::size_t> all(qs.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (!member(all)) throw PreconditionError("gupta_reduce: the product is not in the radical");

  const std::size_t max_size = std::min<std::size_t>(4, qs.size());
  for (std::size_t size = 1; size <= max_size; ++size) {
    // subsets of the given size in lexicographic order
    std::vector<std::size_t> s(size);
    for (std::size_t i = 0; i < size; ++i) s[i] = i;
    for (;;) {
      if (member(s)) return s;
      std::size_t i = size;
      while (i > 0 && s[i - 1] == qs.size() - size + i - 1) --i;
      if (i == 0) break;
      ++s[i - 1];
      for (std::size_t j = i; j < size; ++j) s[j] = s[j - 1] + 1;
    }
  }
  throw std::logic_error("gupta_reduce: no subset of size <= 4 lies in the radical");
}

}  // namespace quadsg
