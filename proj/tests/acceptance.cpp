// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <quadsg/quadsg.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace quadsg;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

LinearForm var(std::size_t n, std::size_t i) { return LinearForm::variable(n, i); }
QuadraticForm prod(const LinearForm& a, const LinearForm& b) { return QuadraticForm::product(a, b); }
QuadraticForm sq(const LinearForm& a) { return prod(a, a); }
MultiPoly poly(const QuadraticForm& q) { return MultiPoly::from_quadratic(q); }

LinearSpace random_space(Rng& rng, std::size_t n, std::size_t dim) {
  for (;;) {
    std::vector<LinearForm> gens;
    for (std::size_t i = 0; i < dim; ++i) gens.push_back(random_linear_form(rng, n, 3));
    LinearSpace v(n, gens);
    if (v.dim() == dim) return v;
  }
}

MultiPoly random_poly(Rng& rng, std::size_t n, unsigned deg, std::size_t terms) {
  MultiPoly p(n);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m;
    unsigned d = std::uniform_int_distribution<unsigned>(0, deg)(rng);
    for (unsigned k = 0; k < d; ++k) {
      std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      m.set(i, m[i] + 1);
    }
    p.add_term(m, random_int(rng, -4, 4));
  }
  return p;
}

// d/dx_i of a quadratic form, as a linear form
LinearForm partial(const QuadraticForm& q, std::size_t i) {
  const std::size_t n = q.n();
  LinearForm out(n);
  const MultiPoly p = poly(q);
  for (const auto& [m, c] : p.terms()) {
    if (m[i] == 0) continue;
    Monomial rest = m;
    rest.set(i, m[i] - 1);
    for (std::size_t k = 0; k < n; ++k)
      if (rest[k] == 1) out[k] += c * m[i];
  }
  return out;
}

bool all_confirmed(const std::vector<GatePairEntry>& rep) {
  for (const auto& e : rep)
    if (!e.member || e.subset.empty() || e.subset.size() > 4) return false;
  return true;
}

// ---- criteria ----

Outcome c1() {
  const std::size_t n = 4;
  LinearForm x = var(n, 0), y = var(n, 1), z = var(n, 2), w = var(n, 3);
  std::vector<MultiPoly> ideal{poly(prod(x, y) + prod(z, w)), poly(prod(x, y) - prod(z, w))};
  MultiPoly p3 = poly(prod(x, w)), p4 = poly(prod(y, z));
  bool prod34 = radical_member(p3 * p4, ideal);
  bool only3 = radical_member(p3, ideal), only4 = radical_member(p4, ideal);
  std::ostringstream s;
  s << "P3*P4 " << prod34 << ", P3 " << only3 << ", P4 " << only4;
  return {prod34 && !only3 && !only4, s.str()};
}

Outcome construction(InstanceCase kind, std::size_t n) {
  int good = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst = make_instance(kind, n, seed);
    StructureReport r = classify(inst.a, inst.b, inst.qs, true);
    bool found = kind == InstanceCase::ii ? r.has_case_ii() : r.has_case_iii();
    if (r.oracle_confirmed.value_or(false) && found) ++good;
  }
  return {good == 20, std::to_string(good) + "/20 confirmed and classified"};
}

Outcome c4() {
  Rng rng(404);
  int confirmed = 0, failures = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    QuadraticForm a, b;
    std::vector<QuadraticForm> qs;
    switch (t % 5) {
      case 0:
      case 1: {
        Instance inst = make_instance(InstanceCase::ii, 4 + t % 2, 1000 + t, t % 2 == 1);
        a = inst.a, b = inst.b, qs = inst.qs;
        break;
      }
      case 2:
      case 3: {
        Instance inst = make_instance(InstanceCase::iii, 6, 2000 + t, t % 5 == 3);
        a = inst.a, b = inst.b, qs = inst.qs;
        break;
      }
      default: {
        // a span member next to an unrelated form
        std::size_t n = 4;
        a = random_quadratic(rng, n, 3);
        b = random_quadratic(rng, n, 3);
        if (proportional(a, b)) b = b + sq(var(n, 0));
        qs = {random_int(rng, 1, 3) * a - b, random_quadratic(rng, n, 3)};
        break;
      }
    }
    StructureReport r = classify(a, b, qs, true);
    if (!r.oracle_confirmed.value_or(false)) continue;
    ++confirmed;
    if (!r.any_case()) ++failures;
  }
  return {failures == 0 && confirmed > 0,
          std::to_string(confirmed) + " oracle-confirmed, " + std::to_string(failures) + " without a case"};
}

Outcome c5() {
  Rng rng(505);
  int violations = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + t % 7;
    std::size_t delta = 1 + t % std::min<std::size_t>(4, n);
    QuadraticForm q = t % 2 ? random_quadratic(rng, n, 4) : random_product_sum(rng, n, 1 + t % 4, 4);
    LinearSpace v = random_space(rng, n, delta);
    std::vector<Rational> alpha;
    if (t % 4 == 0) alpha.assign(delta, Rational(0));
    else alpha = sample_alpha(delta, 7000 + t);
    ProjectionMap map(v, alpha);
    if (rank_s(map.apply_quadratic(q)) + delta < rank_s(q)) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations in 200 trials"};
}

Outcome c6() {
  Rng rng(606);
  int planted = 0, coprime = 0, disagreements = 0;
  while (planted < 100 || coprime < 100) {
    std::size_t n = 2 + rng() % 3;
    MultiPoly f, g;
    bool want_common = planted < 100 && (coprime >= 100 || rng() % 2 == 0);
    if (want_common) {
      MultiPoly h = random_poly(rng, n, 1 + rng() % 2, 3) + MultiPoly::variable(n, 0);
      f = h * (random_poly(rng, n, 1, 3) + MultiPoly::constant(n, Rational(1)));
      g = h * (random_poly(rng, n, 1, 3) + MultiPoly::variable(n, 0));
      if (h.degree_in(0) == 0 || f.is_zero() || g.is_zero()) continue;
    } else {
      f = random_poly(rng, n, 3, 4) + MultiPoly::variable(n, 0);
      g = random_poly(rng, n, 2, 4) + MultiPoly::variable(n, 0) * MultiPoly::variable(n, n - 1);
    }
    if (f.total_degree() > 3 || g.total_degree() > 3 || f.degree_in(0) == 0 || g.degree_in(0) == 0) continue;
    bool common = poly_gcd(f, g).degree_in(0) > 0;
    if (want_common != common) continue;  // keep the two groups pure
    if (resultant(f, g, 0).is_zero() != common) ++disagreements;
    (common ? planted : coprime)++;
  }
  return {disagreements == 0, std::to_string(disagreements) + " disagreements on 100 planted + 100 coprime pairs"};
}

Outcome c7() {
  int bad = 0, certified = 0;
  for (std::uint64_t s = 0; s < 40; ++s) {
    std::vector<PointConfig<Rational>> cfgs{collinear_config(6, 3 + s % 5, s), lines_config(8, 1 + s % 4, 3 + s % 3, s),
                                            random_config(3, 5, s, 1)};
    for (const auto& p : cfgs) {
      auto d = check_delta_sg(p);
      std::size_t dim = config_dimension(p);
      if (d.delta > 0) {
        ++certified;
        if (Rational(static_cast<long>(dim)) > 12 / d.delta + 1) ++bad;
      }
      if (check_sg_linear(p) && dim > 3) ++bad;
      // colored condition on a three-way split
      if (p.size() >= 3) {
        PointConfig<Rational> t[3];
        for (std::size_t i = 0; i < p.size(); ++i) t[i % 3].push_back(p[i]);
        if (check_ek(t[0], t[1], t[2]) && dim > 3) ++bad;
      }
    }
  }
  auto h = hesse_configuration();
  PointConfig<QuadExt> all;
  for (const auto& g : h) all.insert(all.end(), g.begin(), g.end());
  if (!check_ek(h[0], h[1], h[2]) || config_dimension(all) > 3 || !check_sg_linear(all)) ++bad;

  auto pts = [](std::vector<std::vector<long>> rows) {
    PointConfig<Rational> out;
    for (const auto& r : rows) {
      LinearForm f(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) f[i] = r[i];
      out.push_back(f);
    }
    return out;
  };
  // hand counts: min over points of (partners whose line holds a third point) / m
  struct Hand {
    PointConfig<Rational> p;
    Rational delta;
  };
  std::vector<Hand> hand{
      {pts({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), Rational(2, 3)},
      {pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Rational(0)},
      {pts({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {0, 0, 1}}), Rational(0)},
      {pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}}), Rational(2, 5)},
      {pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}), Rational(4, 7)},
  };
  int hand_ok = 0;
  for (const auto& c : hand) hand_ok += check_delta_sg(c.p).delta == c.delta;
  return {bad == 0 && hand_ok == 5, std::to_string(certified) + " delta-SG configs within bounds, " + std::to_string(bad) +
                                        " violations, hand counts " + std::to_string(hand_ok) + "/5"};
}

Outcome c8() {
  Rng rng(808);
  int good = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Instance inst = make_instance(seed % 2 ? InstanceCase::iii : InstanceCase::ii, 6, 300 + seed);
    auto qs = inst.qs;
    while (qs.size() < 6) {
      auto pos = qs.begin() + static_cast<long>(rng() % (qs.size() + 1));
      qs.insert(pos, random_quadratic(rng, 6, 3));
    }
    auto s = gupta_reduce(qs, inst.a, inst.b);
    std::vector<QuadraticForm> sub;
    for (auto k : s) sub.push_back(qs[k]);
    if (s.size() <= 4 && product_in_radical(sub, inst.a, inst.b)) ++good;
  }
  return {good == 10, std::to_string(good) + "/10 subsets of size <= 4 confirmed"};
}

Outcome c9() {
  const std::size_t n = 4;
  LinearForm x = var(n, 0), y = var(n, 1), z = var(n, 2), w = var(n, 3);
  auto a = check_main_condition({sq(x), sq(y), sq(x + y), sq(x - y)}, true);
  auto b = check_main_condition({prod(x, y) + prod(z, w), prod(x, y) - prod(z, w), prod(x, w), prod(y, z)}, false);
  bool ok_a = a.condition_holds == true && a.span_dimension == 3;
  bool ok_b = b.condition_holds == false && b.failing_pairs.size() == 1 && b.failing_pairs[0].i == 2 &&
              b.failing_pairs[0].j == 3;
  return {ok_a && ok_b, std::string("squares ") + (ok_a ? "hold, dim 3" : "wrong") + "; {xy+zw, xy-zw, xw, yz} " +
                            (ok_b ? "fails only at (xw, yz)" : "wrong")};
}

Outcome c10() {
  const CircuitKind kinds[] = {CircuitKind::zero_squares, CircuitKind::zero_split, CircuitKind::zero_monomial,
                               CircuitKind::nonzero_random, CircuitKind::nonzero_perturbed};
  int disagreements = 0, zero = 0, unconfirmed = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    std::size_t n = 2 + s % 4, d = 1 + s % 3;
    CircuitKind k = kinds[s % 5];
    if (d == 1 && k != CircuitKind::zero_split && k != CircuitKind::nonzero_random) d = 2;
    Circuit c = make_circuit(k, n, d, 10000 + s);
    bool z = expand_zero_test(c);
    auto sz = schwartz_zippel_test(c, 10, s);
    if (z == sz.probably_nonzero) ++disagreements;
    if (z) {
      ++zero;
      if (!all_confirmed(gate_radical_report(c))) ++unconfirmed;
    }
  }
  return {disagreements == 0 && unconfirmed == 0,
          std::to_string(disagreements) + " disagreements, " + std::to_string(zero - unconfirmed) + "/" +
              std::to_string(zero) + " zero circuits fully confirmed"};
}

Outcome c11() {
  Rng rng(1111);
  int fail_add = 0, fail_restrict = 0, fail_rep = 0, fail_ms = 0;
  for (int t = 0; t < 200; ++t) {
    // rank additivity with a product of two fresh variables
    std::size_t k = 1 + t % 6, n = k + 2;
    QuadraticForm p = restrict(random_quadratic(rng, n), LinearSpace(n, {var(n, k), var(n, k + 1)}));
    QuadraticForm s = p + prod(var(n, k), var(n, k + 1));
    if (rank_s(s) != rank_s(p) + 1 || !minimal_space(s).contains(var(n, k)) || !minimal_space(s).contains(var(n, k + 1)))
      ++fail_add;
  }
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + t % 7, delta = 1 + t % 3;
    QuadraticForm q = t % 2 ? random_quadratic(rng, n, 3) : random_product_sum(rng, n, 1 + t % 4, 3);
    std::vector<LinearForm> gens;
    for (std::size_t i = 0; i < delta; ++i) gens.push_back(random_linear_form(rng, n, 3));
    LinearSpace v(n, gens);
    if (rank_s(restrict(q, v)) + v.dim() < rank_s(q)) ++fail_restrict;
  }
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + t % 6;
    QuadraticForm q = t % 2 ? random_quadratic(rng, n) : random_product_sum(rng, n, 1 + t % 3);
    auto pairs = minimal_representation(q);
    ExtQuadraticForm sum(n);
    for (const auto& [a, b] : pairs) sum = sum + ExtQuadraticForm::product(a, b);
    if (pairs.size() != rank_s(q) || !(sum == to_ext(q))) ++fail_rep;
  }
  for (int t = 0; t < 200; ++t) {
    // MS(Q) is spanned by the partial derivatives of Q
    std::size_t n = 2 + t % 7;
    QuadraticForm q = random_product_sum(rng, n, 1 + t % 3, 3);
    std::vector<LinearForm> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(partial(q, i));
    if (!(LinearSpace(n, d) == minimal_space(q))) ++fail_ms;
  }
  bool ok = fail_add + fail_restrict + fail_rep + fail_ms == 0;
  return {ok, "failures: additivity " + std::to_string(fail_add) + ", restriction " + std::to_string(fail_restrict) +
                  ", re-expansion " + std::to_string(fail_rep) + ", row space " + std::to_string(fail_ms)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no time limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "intro radical example", 1, c1},
      {2, "case-iii constructions (n=6)", 60, [] { return construction(InstanceCase::iii, 6); }},
      {3, "case-ii constructions (n=5)", 60, [] { return construction(InstanceCase::ii, 5); }},
      {4, "structure theorem completeness", 0, c4},
      {5, "projection rank bound", 10, c5},
      {6, "resultant criterion", 30, c6},
      {7, "robust SG and EK bounds", 5, c7},
      {8, "Gupta reduction with |K| = 6", 120, c8},
      {9, "main-condition checker", 10, c9},
      {10, "PIT harness", 120, c10},
      {11, "qcore structural suite", 20, c11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_s == 0 || secs < c.limit_s;
    bool pass = out.ok && in_time;
    failed += !pass;
    std::printf("%s %2d %-32s %8.3fs", pass ? "PASS" : "FAIL", c.id, c.name, secs);
    if (c.limit_s > 0) std::printf(" (limit %gs)", c.limit_s);
    std::printf("  %s%s\n", out.note.c_str(), in_time ? "" : " [time limit exceeded]");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
