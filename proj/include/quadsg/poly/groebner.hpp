#pragma once

// Buchberger's algorithm over Q with fraction-free reduction, content
// removal, normal pair selection and the Gebauer-Moeller criteria.

#include <quadsg/errors.hpp>
#include <quadsg/poly/multipoly.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace quadsg {

struct GroebnerLimits {
  std::size_t max_pairs = 200000;       ///< longest pair queue tolerated
  std::size_t max_terms = 200000;       ///< largest intermediate polynomial
  std::size_t max_reductions = 500000;  ///< S-polynomials processed
};

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t n, MonomialOrder order, std::vector<MultiPoly> gens)
      : n_(n), order_(order), gens_(std::move(gens)) {}

  std::size_t n() const { return n_; }
  MonomialOrder order() const { return order_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero(); }

  /// Normal form of f (exact, rational division by the monic basis).
  MultiPoly normal_form(const MultiPoly& f) const {
    MultiPoly p = f, rem(n_);
    std::vector<std::pair<Monomial, Rational>> leads;
    for (const auto& g : gens_) leads.push_back(g.leading_term(order_));
    while (!p.is_zero()) {
      auto [lm, lc] = p.leading_term(order_);
      bool reduced = false;
      for (std::size_t i = 0; i < gens_.size(); ++i)
        if (leads[i].first.divides(lm)) {
          p -= MultiPoly::monomial(n_, leads[i].first.quotient_of(lm), lc / leads[i].second) * gens_[i];
          reduced = true;
          break;
        }
      if (!reduced) {
        rem.add_term(lm, lc);
        p.add_term(lm, -lc);
      }
    }
    return rem;
  }

  bool contains(const MultiPoly& f) const { return normal_form(f).is_zero(); }

 private:
  std::size_t n_ = 0;
  MonomialOrder order_ = MonomialOrder::degrevlex;
  std::vector<MultiPoly> gens_;
};

namespace detail {

struct GbTerm {
  Monomial m;
  Integer c;
};
using GbPoly = std::vector<GbTerm>;  // sorted by decreasing monomial

class BuchbergerEngine {
 public:
  BuchbergerEngine(std::size_t n, MonomialOrder order, const GroebnerLimits& limits)
      : n_(n), order_(order), limits_(limits) {}

  /// Runs to completion. Returns true when the ideal is the unit ideal (in
  /// which case the run stops as soon as a nonzero constant appears).
  bool run(const std::vector<MultiPoly>& gens) {
    for (const auto& g : gens) {
      if (g.n() != n_) throw std::invalid_argument("groebner: variable count mismatch");
      if (g.is_zero()) continue;
      GbPoly h = reduce(to_gb(g));
      if (h.empty()) continue;
      if (h.front().m.is_one()) return unit_ = true;
      update(std::move(h));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > limits_.max_reductions)
        throw ResourceLimitExceeded("groebner: more than " + std::to_string(limits_.max_reductions) +
                                    " S-polynomials");
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (better(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      GbPoly h = reduce(spoly(polys_[p.i], polys_[p.j]));
      if (h.empty()) continue;
      if (h.front().m.is_one()) return unit_ = true;
      update(std::move(h));
    }
    return false;
  }

  /// Reduced, monic basis.
  std::vector<MultiPoly> reduced_basis() const {
    if (unit_) return {MultiPoly::constant(n_, Rational(1))};
    std::vector<GbPoly> minimal;
    for (std::size_t a : active_) {
      bool redundant = false;
      for (std::size_t b : active_)
        if (a != b && polys_[b].front().m.divides(polys_[a].front().m) &&
            !(polys_[a].front().m == polys_[b].front().m && b > a)) {
          redundant = true;
          break;
        }
      if (!redundant) minimal.push_back(polys_[a]);
    }
    std::vector<GbPoly> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const GbPoly*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.push_back(&minimal[l]);
      reduced.push_back(reduce_tail(minimal[k], others));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const GbPoly& a, const GbPoly& b) { return compare(order_, a.front().m, b.front().m) < 0; });
    std::vector<MultiPoly> out;
    for (const auto& g : reduced) out.push_back(to_monic(g));
    return out;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::size_t serial;
  };

  bool better(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = compare(order_, a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return a.serial < b.serial;
  }

  GbPoly to_gb(const MultiPoly& p) const {
    Integer den = 1;
    for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    GbPoly g;
    g.reserve(p.size());
    for (const auto& [m, c] : p.terms()) g.push_back({m, Integer(c.get_num() * (den / c.get_den()))});
    std::sort(g.begin(), g.end(), [&](const GbTerm& a, const GbTerm& b) { return compare(order_, a.m, b.m) > 0; });
    make_primitive(g);
    return g;
  }

  MultiPoly to_monic(const GbPoly& g) const {
    MultiPoly p(n_);
    Rational lc(g.front().c);
    for (const auto& t : g) p.add_term(t.m, Rational(t.c) / lc);
    return p;
  }

  static void make_primitive(GbPoly& g) {
    if (g.empty()) return;
    Integer content = 0;
    for (const auto& t : g) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.c.get_mpz_t());
      if (content == 1) break;
    }
    if (sgn(g.front().c) < 0) content = -content;
    if (content != 1)
      for (auto& t : g) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), content.get_mpz_t());
  }

  /// a*p - b*x^q*g, merged in order.
  GbPoly combine(const GbPoly& p, const Integer& a, const GbPoly& g, const Integer& b, const Monomial& q) const {
    GbPoly r;
    r.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < g.size()) {
      int c;
      Monomial gm;
      if (j < g.size()) gm = q * g[j].m;
      if (i == p.size()) c = -1;
      else if (j == g.size()) c = 1;
      else c = compare(order_, p[i].m, gm);
      if (c > 0) {
        r.push_back({p[i].m, a * p[i].c});
        ++i;
      } else if (c < 0) {
        r.push_back({gm, -b * g[j].c});
        ++j;
      } else {
        Integer v = a * p[i].c - b * g[j].c;
        if (sgn(v) != 0) r.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    if (limits_.max_terms && r.size() > limits_.max_terms)
      throw ResourceLimitExceeded("groebner: intermediate polynomial exceeds " + std::to_string(limits_.max_terms) +
                                  " terms");
    return r;
  }

  GbPoly spoly(const GbPoly& f, const GbPoly& g) const {
    Monomial l = Monomial::lcm(f.front().m, g.front().m);
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    Integer a = g.front().c / gcd, b = f.front().c / gcd;
    // a * (l/lm f) * f - b * (l/lm g) * g
    GbPoly fs;
    Monomial qf = f.front().m.quotient_of(l);
    fs.reserve(f.size());
    for (const auto& t : f) fs.push_back({qf * t.m, t.c});
    return combine(fs, a, g, b, g.front().m.quotient_of(l));
  }

  GbPoly reduce(GbPoly p) const {
    std::vector<const GbPoly*> basis;
    for (std::size_t k : active_) basis.push_back(&polys_[k]);
    return reduce_by(std::move(p), basis);
  }

  /// Full reduction of p by basis; the result is primitive.
  GbPoly reduce_by(GbPoly p, const std::vector<const GbPoly*>& basis) const {
    GbPoly rem;
    std::size_t steps = 0;
    while (!p.empty()) {
      const GbPoly* div = nullptr;
      for (const GbPoly* g : basis)
        if (g->front().m.divides(p.front().m) && (!div || g->size() < div->size())) div = g;
      if (!div) {
        rem.push_back(std::move(p.front()));
        p.erase(p.begin());
        continue;
      }
      Integer gcd;
      mpz_gcd(gcd.get_mpz_t(), p.front().c.get_mpz_t(), div->front().c.get_mpz_t());
      Integer a = div->front().c / gcd, b = p.front().c / gcd;
      Monomial q = div->front().m.quotient_of(p.front().m);
      p = combine(p, a, *div, b, q);
      if (a != 1)
        for (auto& t : rem) t.c *= a;
      if (++steps % 8 == 0) remove_joint_content(rem, p);
    }
    make_primitive(rem);
    return rem;
  }

  /// Reduces every term but the leading one.
  GbPoly reduce_tail(const GbPoly& f, const std::vector<const GbPoly*>& basis) const {
    GbPoly head{f.front()};
    GbPoly rest(f.begin() + 1, f.end());
    GbPoly rem;
    while (!rest.empty()) {
      const GbPoly* div = nullptr;
      for (const GbPoly* g : basis)
        if (g->front().m.divides(rest.front().m)) {
          div = g;
          break;
        }
      if (!div) {
        rem.push_back(std::move(rest.front()));
        rest.erase(rest.begin());
        continue;
      }
      Integer gcd;
      mpz_gcd(gcd.get_mpz_t(), rest.front().c.get_mpz_t(), div->front().c.get_mpz_t());
      Integer a = div->front().c / gcd, b = rest.front().c / gcd;
      rest = combine(rest, a, *div, b, div->front().m.quotient_of(rest.front().m));
      if (a != 1) {
        for (auto& t : rem) t.c *= a;
        head.front().c *= a;
      }
    }
    GbPoly out = head;
    out.insert(out.end(), rem.begin(), rem.end());
    make_primitive(out);
    return out;
  }

  static void remove_joint_content(GbPoly& a, GbPoly& b) {
    Integer content = 0;
    for (const auto* part : {&a, &b})
      for (const auto& t : *part) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.c.get_mpz_t());
        if (content == 1) return;
      }
    if (content <= 1) return;
    for (auto* part : {&a, &b})
      for (auto& t : *part) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), content.get_mpz_t());
  }

  void update(GbPoly h) {
    std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].front().m;

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c, d;
    for (std::size_t g : active_) {
      const Monomial& lg = polys_[g].front().m;
      c.push_back({g, Monomial::lcm(lh, lg), Monomial::coprime(lh, lg)});
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (c[l].lcm.divides(c[k].lcm)) keep = false;
        for (std::size_t l = 0; l < d.size() && keep; ++l)
          if (d[l].lcm.divides(c[k].lcm)) keep = false;
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<Pair> kept;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(Monomial::lcm(polys_[p.i].front().m, lh) == p.lcm) &&
                  !(Monomial::lcm(polys_[p.j].front().m, lh) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    pairs_ = std::move(kept);
    for (const auto& e : d)
      if (!e.coprime) pairs_.push_back({e.g, hi, e.lcm, serial_++});
    if (limits_.max_pairs && pairs_.size() > limits_.max_pairs)
      throw ResourceLimitExceeded("groebner: pair queue exceeds " + std::to_string(limits_.max_pairs));

    std::vector<std::size_t> still;
    for (std::size_t g : active_)
      if (!lh.divides(polys_[g].front().m)) still.push_back(g);
    still.push_back(hi);
    active_ = std::move(still);
  }

  std::size_t n_;
  MonomialOrder order_;
  GroebnerLimits limits_;
  std::vector<GbPoly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::size_t serial_ = 0;
  bool unit_ = false;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by gens.
inline GroebnerBasis groebner(const std::vector<MultiPoly>& gens, MonomialOrder order = MonomialOrder::degrevlex,
                              const GroebnerLimits& limits = {}) {
  if (gens.empty()) throw PreconditionError("groebner: empty generator list");
  std::size_t n = gens.front().n();
  detail::BuchbergerEngine engine(n, order, limits);
  engine.run(gens);
  auto basis = engine.reduced_basis();
  if (basis.empty()) basis.push_back(MultiPoly(n));  // the zero ideal
  return GroebnerBasis(n, order, std::move(basis));
}

/// True iff 1 lies in the ideal; stops early once a constant is produced.
inline bool generates_unit_ideal(const std::vector<MultiPoly>& gens, MonomialOrder order = MonomialOrder::degrevlex,
                                 const GroebnerLimits& limits = {}) {
  if (gens.empty()) return false;
  detail::BuchbergerEngine engine(gens.front().n(), order, limits);
  return engine.run(gens);
}

}  // namespace quadsg
