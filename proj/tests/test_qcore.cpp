#include "util.hpp"

#include <gtest/gtest.h>

using namespace qt;

namespace {

// x, y, z, w in four variables
const LinearForm X = var(4, 0), Y = var(4, 1), Z = var(4, 2), W = var(4, 3);

ExtQuadraticForm re_expand(const std::vector<std::pair<ExtLinearForm, ExtLinearForm>>& pairs, std::size_t n) {
  ExtQuadraticForm sum(n);
  for (const auto& [a, b] : pairs) sum = sum + ExtQuadraticForm::product(a, b);
  return sum;
}

}  // namespace

TEST(Scalar, ParseAndCanonicalForm) {
  EXPECT_EQ(parse_rational("6/-4"), q(-3, 2));
  EXPECT_EQ(parse_rational("-0/7"), q(0));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  Rational r = parse_rational("10/4");
  EXPECT_EQ(r.get_den(), 2);
}

TEST(Scalar, ExtensionArithmetic) {
  QuadExt i(q(0), q(1), -1);
  EXPECT_EQ(i * i, QuadExt(q(-1)));
  QuadExt s2 = sqrt_ext(q(8));  // 2 sqrt 2
  EXPECT_EQ(s2 * s2, QuadExt(q(8)));
  EXPECT_EQ(s2.m(), 2);
  EXPECT_EQ(QuadExt(q(3), q(0), 5), QuadExt(q(3)));  // b = 0 compares equal to its rational part
  EXPECT_THROW(sqrt_ext(q(2)) + sqrt_ext(q(3)), std::domain_error);
  EXPECT_EQ(QuadExt(q(1), q(2), 3) / QuadExt(q(1), q(2), 3), QuadExt(q(1)));
}

TEST(RankS, Examples) {
  EXPECT_EQ(rank_s(prod(X, Y)), 1u);
  EXPECT_EQ(rank_s(prod(X, Y) + prod(Z, W)), 2u);
  QuadraticForm x2y2 = sq(X) + sq(Y);
  EXPECT_EQ(rank_s(x2y2), 1u);
  // oracle: the factorization (x + iy)(x - iy) over Q(i)
  auto [a, b] = factor_rank2(x2y2);
  EXPECT_EQ(ExtQuadraticForm::product(a, b), to_ext(x2y2));
  EXPECT_EQ(a.str().find("sqrt(-1)") != std::string::npos || b.str().find("sqrt(-1)") != std::string::npos, true);
  EXPECT_EQ(rank_s(QuadraticForm(4)), 0u);
}

TEST(MinimalSpace, Examples) {
  EXPECT_EQ(minimal_space(prod(X, Y) + prod(Z, W)), LinearSpace::full(4));
  EXPECT_EQ(minimal_space(sq(X)), LinearSpace(4, {X}));
  // (x+y)^2 + z(x-y): Gram rows (1, 1, 1/2), (1, 1, -1/2), (1/2, -1/2, 0) restricted to x, y, z
  QuadraticForm q3 = sq(X + Y) + prod(Z, X - Y);
  EXPECT_EQ(minimal_space(q3).dim(), 3u);
  EXPECT_EQ(minimal_space(q3), LinearSpace(4, {X, Y, Z}));
  EXPECT_EQ(minimal_space(QuadraticForm(4)).dim(), 0u);
}

TEST(MinimalRepresentation, Examples) {
  auto r1 = minimal_representation(prod(X, Y));
  ASSERT_EQ(r1.size(), 1u);
  EXPECT_EQ(re_expand(r1, 4), to_ext(prod(X, Y)));

  QuadraticForm x2y2 = sq(X) + sq(Y);
  auto r2 = minimal_representation(x2y2);
  ASSERT_EQ(r2.size(), 1u);
  EXPECT_EQ(re_expand(r2, 4), to_ext(x2y2));
  EXPECT_EQ(field_of(r2[0].first) == -1 || field_of(r2[0].second) == -1, true);

  auto r3 = minimal_representation(prod(X, Y) + prod(Z, W));
  ASSERT_EQ(r3.size(), 2u);
  EXPECT_EQ(re_expand(r3, 4), to_ext(prod(X, Y) + prod(Z, W)));
  // rational pairs are preferred when they exist
  for (const auto& [a, b] : r3) {
    EXPECT_EQ(field_of(a), 0);
    EXPECT_EQ(field_of(b), 0);
  }
  EXPECT_TRUE(minimal_representation(QuadraticForm(4)).empty());
}

TEST(MinimalRepresentation, RandomReexpansionAndSpan) {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + t % 6;
    QuadraticForm qf = t % 2 ? random_quadratic(rng, n) : random_product_sum(rng, n, 1 + t % 3);
    auto pairs = minimal_representation(qf);
    ASSERT_EQ(pairs.size(), rank_s(qf));
    // each pair multiplies out to a rational form, and they sum to Q
    QuadraticForm sum(n);
    std::vector<LinearForm> rational_forms;
    for (const auto& [a, b] : pairs) {
      auto p = rational_part(ExtQuadraticForm::product(a, b));
      ASSERT_TRUE(p.has_value());
      sum = sum + *p;
      for (const auto& f : {a, b}) {
        auto [re, im] = split_components(f);
        rational_forms.push_back(re);
        if (!im.is_zero()) rational_forms.push_back(im);
      }
    }
    EXPECT_EQ(sum, qf);
    // the forms span MS(Q); over Q this uses real and irrational parts
    EXPECT_EQ(LinearSpace(n, rational_forms), minimal_space(qf)) << qf.str();
  }
}

TEST(Restrict, Examples) {
  EXPECT_EQ(restrict(prod(X, Y) + prod(Z, W), LinearSpace(4, {X})), prod(Z, W));
  EXPECT_TRUE(restrict(sq(X), LinearSpace(4, {X})).is_zero());
  QuadraticForm qf = prod(X, Y) + prod(Z, W);
  LinearSpace v(4, {X + Z});
  QuadraticForm r = restrict(qf, v);
  // x = -z: -zy + zw = z(w - y)
  EXPECT_EQ(rank_s(r), 1u);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    auto p = random_point(rng, 4);
    p[0] = -p[2];
    EXPECT_EQ(r.evaluate(p), qf.evaluate(p));
  }
  EXPECT_TRUE(restrict(QuadraticForm(4), v).is_zero());
}

TEST(Congruence, Examples) {
  EXPECT_TRUE(congruent_mod(prod(X, Y), prod(X, Y) + prod(X, Z), LinearSpace(4, {Z})));
  EXPECT_FALSE(congruent_mod(prod(X, Y), prod(Z, W), LinearSpace(4, {X})));
  EXPECT_TRUE(congruent_mod(sq(X) + prod(X, Z) + prod(Z, W), sq(X), LinearSpace(4, {Z})));
}

TEST(SpanOps, Examples) {
  std::vector<QuadraticForm> p{prod(X, Y) + prod(Z, W), prod(X, Y) - prod(Z, W), prod(X, W), prod(Y, Z)};
  EXPECT_EQ(span_dimension(p), 4u);
  auto ab = in_span(q(2) * prod(X, Y), p[0], p[1]);
  ASSERT_TRUE(ab);
  EXPECT_EQ(ab->first, q(1));
  EXPECT_EQ(ab->second, q(1));
  EXPECT_FALSE(in_span(prod(X, W), p[0], p[1]));
  EXPECT_FALSE(pairwise_independent(std::vector<QuadraticForm>{prod(X, Y), q(3) * prod(X, Y)}));
  EXPECT_TRUE(pairwise_independent(p));
}

TEST(Properties, RestrictionBound) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + t % 7;
    std::size_t delta = 1 + t % 3;
    QuadraticForm qf = random_quadratic(rng, n, 3);
    std::vector<LinearForm> gens;
    for (std::size_t i = 0; i < delta; ++i) gens.push_back(random_linear_form(rng, n, 3));
    LinearSpace v(n, gens);
    EXPECT_GE(rank_s(restrict(qf, v)) + v.dim(), rank_s(qf));
  }
}

TEST(Properties, RankAdditivityWithFreshProduct) {
  Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    std::size_t k = 1 + t % 6, n = k + 2;
    QuadraticForm p = random_quadratic(rng, n);
    // keep p in x_0..x_{k-1}
    p = restrict(p, LinearSpace(n, {var(n, k), var(n, k + 1)}));
    QuadraticForm s = p + prod(var(n, k), var(n, k + 1));
    EXPECT_EQ(rank_s(s), rank_s(p) + 1);
    EXPECT_TRUE(minimal_space(s).contains(var(n, k)));
    EXPECT_TRUE(minimal_space(s).contains(var(n, k + 1)));
  }
}

TEST(Properties, MinimalSpaceInsideAnyRepresentation) {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 3 + t % 5, m = 1 + t % 4;
    QuadraticForm sum(n);
    std::vector<LinearForm> forms;
    for (std::size_t i = 0; i < m; ++i) {
      LinearForm a = random_linear_form(rng, n, 2), b = random_linear_form(rng, n, 2);
      forms.push_back(a);
      forms.push_back(b);
      sum = sum + prod(a, b);
    }
    EXPECT_TRUE(minimal_space(sum).is_subspace_of(LinearSpace(n, forms)));
  }
}

TEST(Properties, PlantedProductIdentityShareForm) {
  // a = s p, b = (q + r)/s, c = u p, d = d0/u gives ab + cd = p (q + r + d0).
  Rng rng(24);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 3 + t % 4;
    LinearForm p = random_linear_form(rng, n), qq = random_linear_form(rng, n), r = random_linear_form(rng, n),
               d0 = random_linear_form(rng, n);
    Rational s = random_int(rng, 1, 5), u = random_int(rng, 1, 5);
    LinearForm a = s * p, b = Rational(1) / s * (qq + r), c = u * p, d = Rational(1) / u * d0;
    LinearForm e = p, f = qq + r + d0;
    ASSERT_EQ(prod(a, b) + prod(c, d), prod(e, f));
    if (LinearSpace(n, {a, b}).dim() < 2) continue;
    EXPECT_GE(LinearSpace(n, {a, b}).intersect(LinearSpace(n, {c, d})).dim(), 1u);
  }
}

TEST(Properties, PlantedDifferenceInsideV) {
  // a = u + v1, b = u + v2, c = u, d = u + v1 + v2 gives ab - cd = v1 v2.
  Rng rng(25);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 4 + t % 4;
    std::vector<LinearForm> vg;
    for (int i = 0; i < 2 + t % 2; ++i) vg.push_back(random_linear_form(rng, n));
    LinearSpace v(n, vg);
    LinearForm v1 = vg[0], v2 = vg[1], u = random_linear_form(rng, n);
    Rational s = random_int(rng, 1, 4);
    LinearForm a = s * (u + v1), b = Rational(1) / s * (u + v2), c = u, d = u + v1 + v2;
    QuadraticForm diff = prod(a, b) - prod(c, d);
    if (diff.is_zero()) continue;
    ASSERT_TRUE(minimal_space(diff).is_subspace_of(v));
    EXPECT_GE(LinearSpace(n, {a, b}).intersect(v).dim(), 1u);
  }
}

TEST(LinearSpace, RrefAndIntersections) {
  LinearSpace s(4, {X + Y, q(2) * X + q(2) * Y, Z});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.basis()[0], X + Y);
  EXPECT_TRUE(s.contains(X + Y + Z));
  EXPECT_FALSE(s.contains(X));
  EXPECT_EQ(s.intersect(LinearSpace(4, {X, Y})), LinearSpace(4, {X + Y}));
  EXPECT_EQ(s.free_indices(), (std::vector<std::size_t>{1, 3}));
  EXPECT_THROW(LinearSpace(4, {var(3, 0)}), std::invalid_argument);
}

TEST(QuadraticForm, MonomialConventionAndSymmetry) {
  QuadraticForm f(3);
  f.set_monomial(0, 1, q(3));
  EXPECT_EQ(f.gram()(0, 1), q(3, 2));
  EXPECT_EQ(f.monomial(0, 1), q(3));
  EXPECT_EQ(f.evaluate({q(1), q(1), q(0)}), q(3));
  Matrix<Rational> bad(2, 2);
  bad(0, 1) = 1;
  EXPECT_THROW(QuadraticForm{bad}, std::invalid_argument);
  EXPECT_EQ(MultiPoly::from_quadratic(f).to_quadratic(), f);
}
