#pragma once

// Sums of at most three products of quadratic forms: exact expansion,
// Schwartz-Zippel testing, per-pair radical tables for zero circuits, and
// reduction to the variables the factors actually use.

#include <quadsg/errors.hpp>
#include <quadsg/poly/radical.hpp>
#include <quadsg/qcore.hpp>
#include <quadsg/random.hpp>
#include <quadsg/structure/classify.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quadsg {

using Gate = std::vector<QuadraticForm>;

class Circuit {
 public:
  Circuit() = default;
  Circuit(std::size_t n, std::vector<Gate> gates) : n_(n), gates_(std::move(gates)) {
    if (gates_.empty() || gates_.size() > 3) throw PreconditionError("Circuit: need 1 to 3 gates");
    for (const auto& g : gates_) {
      if (g.empty()) throw PreconditionError("Circuit: empty gate");
      for (const auto& q : g) {
        if (q.n() != n_) throw std::invalid_argument("Circuit: variable count mismatch");
        if (q.is_zero()) throw PreconditionError("Circuit: zero factor");
      }
    }
  }

  std::size_t n() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t max_gate_degree() const {
    std::size_t d = 0;
    for (const auto& g : gates_) d = std::max(d, g.size());
    return d;
  }

  template <class T>
  T evaluate(const std::vector<T>& x) const {
    T sum(0);
    for (const auto& g : gates_) {
      T prod(1);
      for (const auto& q : g) prod *= q.evaluate(x);
      sum += prod;
    }
    return sum;
  }

  friend bool operator==(const Circuit& a, const Circuit& b) { return a.n_ == b.n_ && a.gates_ == b.gates_; }

 private:
  std::size_t n_ = 0;
  std::vector<Gate> gates_;
};

inline constexpr std::size_t kDefaultExpandBudget = 2000000;

/// The polynomial computed by the circuit; ResourceLimitExceeded once any
/// intermediate product exceeds max_terms.
inline MultiPoly expand(const Circuit& c, std::size_t max_terms = kDefaultExpandBudget) {
  MultiPoly sum(c.n());
  for (const auto& g : c.gates()) {
    MultiPoly prod = MultiPoly::constant(c.n(), Rational(1));
    for (const auto& q : g) prod = MultiPoly::multiply(prod, MultiPoly::from_quadratic(q), max_terms);
    sum += prod;
    if (sum.size() > max_terms) throw ResourceLimitExceeded("expand: sum exceeds " + std::to_string(max_terms) + " terms");
  }
  return sum;
}

inline bool expand_zero_test(const Circuit& c, std::size_t max_terms = kDefaultExpandBudget) {
  return expand(c, max_terms).is_zero();
}

struct SZResult {
  bool probably_nonzero = false;
  std::optional<std::vector<Rational>> witness;  ///< point with nonzero value
  std::size_t trials_run = 0;
  std::uint64_t seed = 0;
  Integer sample_size;  ///< coordinates drawn uniformly from {0, ..., sample_size - 1}
};

/// One-sided: a zero circuit always gives consistent_with_zero; a nonzero
/// one of degree 2d is missed by one trial with probability <= 2d / |S|.
inline SZResult schwartz_zippel_test(const Circuit& c, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw PreconditionError("schwartz_zippel_test: need at least one trial");
  SZResult r;
  r.seed = seed;
  const std::uint64_t size = (std::uint64_t(1) << 20) * 2 * std::max<std::size_t>(1, c.max_gate_degree());
  r.sample_size = Integer(static_cast<unsigned long>(size));
  Rng rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, size - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Rational> x(c.n());
    for (auto& v : x) v = Rational(Integer(static_cast<unsigned long>(dist(rng))));
    ++r.trials_run;
    if (!is_zero(c.evaluate(x))) {
      r.probably_nonzero = true;
      r.witness = std::move(x);
      break;
    }
  }
  return r;
}

struct GatePairEntry {
  std::size_t j, jp;   ///< factor indices in gates 2 and 3
  bool member = false; ///< prod of gate 1 in sqrt<Q_{2,j}, Q_{3,j'}>
  /// Indices into gate 1; empty when no subset of size <= 4 suffices.
  std::vector<std::size_t> subset;
};

/// For a zero circuit with three gates: prod_i Q_{1,i} lies in
/// sqrt<Q_{2,j}, Q_{3,j'}> for every pair (j, j').
inline std::vector<GatePairEntry> gate_radical_report(const Circuit& c, const GroebnerLimits& limits = {},
                                                      std::size_t max_terms = kDefaultExpandBudget) {
  if (c.gates().size() != 3) throw PreconditionError("gate_radical_report: need exactly 3 gates");
  if (!expand_zero_test(c, max_terms)) throw PreconditionError("gate_radical_report: circuit is not zero");
  const auto& g1 = c.gates()[0];
  const auto& g2 = c.gates()[1];
  const auto& g3 = c.gates()[2];
  MultiPoly prod = product_of(g1, c.n());
  std::vector<GatePairEntry> out;
  for (std::size_t j = 0; j < g2.size(); ++j)
    for (std::size_t jp = 0; jp < g3.size(); ++jp) {
      GatePairEntry e{j, jp, false, {}};
      e.member = radical_member(prod, {MultiPoly::from_quadratic(g2[j]), MultiPoly::from_quadratic(g3[jp])}, limits);
      if (e.member) {
        try {
          e.subset = gupta_reduce(g1, g2[j], g3[jp], limits);
        } catch (const std::logic_error&) {
          // only possible with more than four factors in gate 1
          e.subset.clear();
        }
      }
      out.push_back(std::move(e));
    }
  return out;
}

struct ReducedCircuit {
  Circuit circuit;      ///< in delta variables y_0..y_{delta-1}
  std::size_t delta = 0;
  /// Invertible n x n matrix; y_i = sum_k change(i, k) x_k. Rows 0..delta-1
  /// span the minimal space of all factors.
  Matrix<Rational> change;
};

/// Rewrites every factor in the coordinates y = change * x; the original
/// polynomial is the reduced one evaluated at the first delta rows of
/// change * x, so zeroness is preserved both ways.
inline ReducedCircuit variable_reduction(const Circuit& c) {
  const std::size_t n = c.n();
  LinearSpace ms(n);
  for (const auto& g : c.gates())
    for (const auto& q : g) ms = ms + minimal_space(q);
  ReducedCircuit r;
  r.delta = ms.dim();
  r.change = Matrix<Rational>(n, n);
  for (std::size_t i = 0; i < ms.dim(); ++i)
    for (std::size_t k = 0; k < n; ++k) r.change(i, k) = ms.basis()[i][k];
  auto free = ms.free_indices();
  for (std::size_t t = 0; t < free.size(); ++t) r.change(ms.dim() + t, free[t]) = 1;
  auto inv = inverse(r.change);
  if (!inv) throw std::logic_error("variable_reduction: change of basis not invertible");
  std::vector<Gate> gates;
  for (const auto& g : c.gates()) {
    Gate ng;
    for (const auto& q : g) {
      Matrix<Rational> full = inv->transpose() * q.gram() * *inv;
      Matrix<Rational> small(r.delta, r.delta);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          if (i < r.delta && k < r.delta) small(i, k) = full(i, k);
          else if (!is_zero(full(i, k))) throw std::logic_error("variable_reduction: factor leaves the minimal space");
        }
      ng.emplace_back(std::move(small));
    }
    gates.push_back(std::move(ng));
  }
  r.circuit = Circuit(r.delta, std::move(gates));
  return r;
}

/// The reduced polynomial pulled back to the original variables.
inline MultiPoly pull_back(const ReducedCircuit& r, std::size_t max_terms = kDefaultExpandBudget) {
  const std::size_t n = r.change.cols();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < r.delta; ++i) {
    LinearForm f(r.change.row(i));
    images.push_back(MultiPoly::from_linear(f));
  }
  return expand(r.circuit, max_terms).compose(images, n);
}

// ---- seeded circuits ----

enum class CircuitKind { zero_squares, zero_split, zero_monomial, nonzero_random, nonzero_perturbed };

inline std::string to_string(CircuitKind k) {
  switch (k) {
    case CircuitKind::zero_squares: return "zero_squares";
    case CircuitKind::zero_split: return "zero_split";
    case CircuitKind::zero_monomial: return "zero_monomial";
    case CircuitKind::nonzero_random: return "nonzero_random";
    default: return "nonzero_perturbed";
  }
}

/// Three-gate circuits with every gate of degree d (1 <= d <= 3, 2 <= n).
///   zero_squares:  (P+R)(P-R) S + (-P) P S + R R S
///   zero_split:    Q1 Q2 S + Q1 Q3 S + (-Q1)(Q2+Q3) S
///   zero_monomial: (ab)(cd) S + (ac)(bd) S + (-2ad)(bc) S   (a..d linear)
///   nonzero_perturbed: a zero_squares circuit with one factor changed
/// where S is a product of d-2 (or d-1) random quadratics shared by all gates.
inline Circuit make_circuit(CircuitKind kind, std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n < 2 || d < 1 || d > 3) throw PreconditionError("make_circuit: need n >= 2 and 1 <= d <= 3");
  if (d < 2 && kind != CircuitKind::nonzero_random && kind != CircuitKind::zero_split)
    throw PreconditionError("make_circuit: " + to_string(kind) + " needs d >= 2");
  Rng rng(seed);
  auto quad = [&] { return random_quadratic(rng, n, 3); };
  auto lin = [&] { return random_linear_form(rng, n, 3); };
  auto prod = [](const LinearForm& x, const LinearForm& y) { return QuadraticForm::product(x, y); };
  for (;;) {
    std::vector<Gate> gates(3);
    std::size_t base = 0;
    switch (kind) {
      case CircuitKind::zero_squares:
      case CircuitKind::nonzero_perturbed: {
        QuadraticForm p = quad(), r = quad();
        gates = {{p + r, p - r}, {Rational(-1) * p, p}, {r, r}};
        base = 2;
        break;
      }
      case CircuitKind::zero_split: {
        QuadraticForm q1 = quad(), q2 = quad(), q3 = quad();
        if (d == 1) gates = {{q2}, {q3}, {Rational(-1) * (q2 + q3)}};
        else gates = {{q1, q2}, {q1, q3}, {Rational(-1) * q1, q2 + q3}};
        base = std::min<std::size_t>(d, 2);
        break;
      }
      case CircuitKind::zero_monomial: {
        LinearForm a = lin(), b = lin(), c = lin(), e = lin();
        gates = {{prod(a, b), prod(c, e)}, {prod(a, c), prod(b, e)}, {Rational(-2) * prod(a, e), prod(b, c)}};
        base = 2;
        break;
      }
      case CircuitKind::nonzero_random:
        for (auto& g : gates)
          for (std::size_t i = 0; i < d; ++i) g.push_back(quad());
        base = d;
        break;
    }
    for (std::size_t i = base; i < d; ++i) {
      QuadraticForm s = quad();
      for (auto& g : gates) g.push_back(s);
    }
    if (kind == CircuitKind::nonzero_perturbed) {
      QuadraticForm& f = gates[2][0];
      f = f + QuadraticForm::product(LinearForm::variable(n, 0), LinearForm::variable(n, 0));
    }
    bool ok = true;
    for (const auto& g : gates)
      for (const auto& q : g) ok = ok && !q.is_zero();
    if (ok) return Circuit(n, std::move(gates));
  }
}

}  // namespace quadsg
