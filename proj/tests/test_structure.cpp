#include "util.hpp"

#include <gtest/gtest.h>

using namespace qt;

namespace {

const std::size_t N = 4;
const LinearForm X = var(N, 0), Y = var(N, 1), Z = var(N, 2), W = var(N, 3);

void expect_witnesses_verify(const QuadraticForm& a, const QuadraticForm& b, const ReducibleMembers& r) {
  for (const auto& w : r.witnesses) {
    ExtQuadraticForm member = detail::pencil_member(a, b, w.alpha, w.beta);
    EXPECT_LE(member.gram_rank(), 2u);
    EXPECT_FALSE(w.alpha.is_zero() && w.beta.is_zero());
    if (w.factors) {
      EXPECT_EQ(ExtQuadraticForm::product(w.factors->first, w.factors->second), member);
    }
  }
}

void expect_plane_verifies(const QuadraticForm& a, const QuadraticForm& b, const IsotropicPlaneResult& r) {
  if (!r.plane) return;
  const auto& [p, s] = *r.plane;
  EXPECT_EQ(ExtLinearSpace(a.n(), {p, s}).dim(), 2u);
  EXPECT_TRUE(vanishes_on_plane(a, p, s));
  EXPECT_TRUE(vanishes_on_plane(b, p, s));
}

Matrix<Rational> random_invertible(Rng& rng, std::size_t n) {
  Matrix<Rational> m(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_int(rng, -2, 2);
  } while (rank(m) < n);
  return m;
}

QuadraticForm transform(const QuadraticForm& q, const Matrix<Rational>& p) {
  return QuadraticForm(p.transpose() * q.gram() * p);
}

}  // namespace

TEST(Pencil, IntroPair) {
  QuadraticForm a = prod(X, Y) + prod(Z, W), b = prod(X, Y) - prod(Z, W);
  auto r = reducible_members(a, b);
  ASSERT_TRUE(r.exists);
  expect_witnesses_verify(a, b, r);
  bool saw_xy = false, saw_zw = false;
  for (const auto& w : r.witnesses) {
    auto member = detail::pencil_member(a, b, w.alpha, w.beta);
    if (w.alpha == QuadExt(1) && w.beta == QuadExt(1)) saw_xy = member == to_ext(q(2) * prod(X, Y));
    if (w.alpha == QuadExt(1) && w.beta == QuadExt(-1)) saw_zw = member == to_ext(q(2) * prod(Z, W));
  }
  EXPECT_TRUE(saw_xy);
  EXPECT_TRUE(saw_zw);
}

TEST(Pencil, SquaresAndSmallN) {
  auto r = reducible_members(sq(X), sq(Y));
  EXPECT_TRUE(r.exists);
  EXPECT_TRUE(r.all_minors_zero);
  expect_witnesses_verify(sq(X), sq(Y), r);
  bool saw = false;
  for (const auto& w : r.witnesses) saw = saw || (w.alpha == QuadExt(1) && w.beta.is_zero());
  EXPECT_TRUE(saw);
  EXPECT_TRUE(reducible_members(sq(var(2, 0)) + sq(var(2, 1)), prod(var(2, 0), var(2, 1))).exists);
}

TEST(Pencil, RankFiveWitnessesVerify) {
  const std::size_t n = 5;
  QuadraticForm a = sq(var(n, 0)) + prod(var(n, 1), var(n, 2)) + prod(var(n, 3), var(n, 4));
  ASSERT_EQ(a.gram_rank(), 5u);
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    QuadraticForm b = random_quadratic(rng, n);
    if (b.gram_rank() != 5 || proportional(a, b)) continue;
    auto r = reducible_members(a, b);
    expect_witnesses_verify(a, b, r);
    EXPECT_EQ(r.exists, pencil_oracle(a, b));
  }
}

TEST(Pencil, AgreesWithMinorIdealOracle) {
  Rng rng(32);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 3 + t % 3;
    QuadraticForm a = random_quadratic(rng, n, 3), b;
    switch (t % 4) {
      case 0: b = a + prod(random_linear_form(rng, n), random_linear_form(rng, n)); break;  // planted
      case 1: b = random_product_sum(rng, n, 2); break;
      case 2: b = random_int(rng, 1, 3) * a + sq(random_linear_form(rng, n)) - sq(random_linear_form(rng, n)); break;
      default: b = random_quadratic(rng, n, 3); break;
    }
    if (b.is_zero() || proportional(a, b)) continue;
    auto r = reducible_members(a, b);
    EXPECT_EQ(r.exists, pencil_oracle(a, b)) << a.str() << " ; " << b.str();
    expect_witnesses_verify(a, b, r);
    if (t % 4 == 0) {
      EXPECT_TRUE(r.exists);
    }
  }
}

TEST(Pencil, InvariantUnderChangeOfVariables) {
  Rng rng(33);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 3 + t % 3;
    QuadraticForm a = random_quadratic(rng, n, 3);
    QuadraticForm b = t % 2 ? a + prod(random_linear_form(rng, n), random_linear_form(rng, n)) : random_quadratic(rng, n, 3);
    if (proportional(a, b)) continue;
    auto p = random_invertible(rng, n);
    EXPECT_EQ(reducible_members(a, b).exists, reducible_members(transform(a, p), transform(b, p)).exists);
  }
}

TEST(IsotropicPlane, Examples) {
  QuadraticForm a = prod(X, Y) + prod(Z, W), b = prod(X, Y) - prod(Z, W);
  auto r = common_isotropic_plane(a, b);
  ASSERT_TRUE(r.exists);
  ASSERT_TRUE(r.plane);
  expect_plane_verifies(a, b, r);
  // the plane x = z = 0 is the first in the search order
  EXPECT_EQ(ExtLinearSpace(N, {r.plane->first, r.plane->second}), ExtLinearSpace(N, {to_ext(X), to_ext(Z)}));

  auto r2 = common_isotropic_plane(prod(X, Y), prod(X, Z));
  ASSERT_TRUE(r2.plane);
  expect_plane_verifies(prod(X, Y), prod(X, Z), r2);

  const std::size_t n = 5;
  QuadraticForm big = sq(var(n, 0)) + prod(var(n, 1), var(n, 2)) + prod(var(n, 3), var(n, 4));
  auto r3 = common_isotropic_plane(big, prod(var(n, 0), var(n, 1)));
  EXPECT_FALSE(r3.exists);
  EXPECT_EQ(r3.method, "rank");
}

TEST(IsotropicPlane, PlantedPlanesAreFound) {
  Rng rng(34);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 4 + t % 4;
    LinearForm a = random_linear_form(rng, n), b = random_linear_form(rng, n);
    QuadraticForm qa = prod(a, random_linear_form(rng, n)) + prod(b, random_linear_form(rng, n));
    QuadraticForm qb = prod(a, random_linear_form(rng, n)) + prod(b, random_linear_form(rng, n));
    if (LinearSpace(n, {a, b}).dim() < 2 || qa.is_zero() || qb.is_zero()) continue;
    auto r = common_isotropic_plane(qa, qb);
    EXPECT_TRUE(r.exists);
    expect_plane_verifies(qa, qb, r);
  }
}

TEST(IsotropicPlane, GenericQuadricsInFourVariablesShareNoPlane) {
  // two generic quadrics in P^3 meet in a smooth quartic curve containing no line
  Rng rng(35);
  for (int t = 0; t < 10; ++t) {
    QuadraticForm a = random_quadratic(rng, 4), b = random_quadratic(rng, 4);
    auto r = common_isotropic_plane(a, b);
    EXPECT_FALSE(r.exists) << a.str() << " ; " << b.str();
  }
}

TEST(IsotropicPlane, ByRankCases) {
  // (a) both of rank <= 2
  auto ra = common_isotropic_plane(sq(X), prod(Y, Z));
  EXPECT_TRUE(ra.exists);
  expect_plane_verifies(sq(X), prod(Y, Z), ra);
  // (b) one of rank <= 2: xy and xz + yw share x = y = 0
  auto rb = common_isotropic_plane(prod(X, Y), prod(X, Z) + prod(Y, W));
  EXPECT_TRUE(rb.exists);
  expect_plane_verifies(prod(X, Y), prod(X, Z) + prod(Y, W), rb);
  // x = 0, y + iz = 0 kills x^2 and x^2 + y^2 + z^2
  auto rc = common_isotropic_plane(sq(X), sq(X) + sq(Y) + sq(Z));
  EXPECT_TRUE(rc.exists);
  expect_plane_verifies(sq(X), sq(X) + sq(Y) + sq(Z), rc);
  // on x = 0 the second form has rank 3, so no plane
  EXPECT_FALSE(common_isotropic_plane(sq(X), sq(X) + sq(Y) + sq(Z) + sq(W)).exists);
}

TEST(Classify, IntroExample) {
  QuadraticForm a = prod(X, Y) + prod(Z, W), b = prod(X, Y) - prod(Z, W);
  auto r = classify(a, b, {prod(X, W), prod(Y, Z)}, true);
  EXPECT_FALSE(r.has_case_i());
  EXPECT_TRUE(r.has_case_ii());
  EXPECT_TRUE(r.has_case_iii());
  ASSERT_TRUE(r.oracle_confirmed);
  EXPECT_TRUE(*r.oracle_confirmed);
  ASSERT_TRUE(r.vanishing_k);
  EXPECT_EQ(*r.vanishing_k, 0u);
}

TEST(Classify, SpanCaseAndPreconditions) {
  QuadraticForm a = prod(X, Y) + prod(Z, W), b = prod(X, Y) - prod(Z, W);
  auto r = classify(a, b, {a + b}, false);
  ASSERT_TRUE(r.case_i);
  EXPECT_EQ(r.case_i->alpha, q(1));
  EXPECT_EQ(r.case_i->beta, q(1));
  EXPECT_FALSE(r.oracle_confirmed);
  EXPECT_THROW(classify(a, q(2) * a, {b}, false), PreconditionError);
  EXPECT_THROW(classify(a, b, {}, false), PreconditionError);
}

TEST(Classify, GeneratedInstances) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (auto kind : {InstanceCase::ii, InstanceCase::iii}) {
      auto inst = make_instance(kind, kind == InstanceCase::ii ? 5 : 6, seed, seed % 2 == 0);
      auto r = classify(inst.a, inst.b, inst.qs, true);
      ASSERT_TRUE(r.oracle_confirmed);
      EXPECT_TRUE(*r.oracle_confirmed);
      if (kind == InstanceCase::ii) {
        EXPECT_TRUE(r.has_case_ii());
        expect_witnesses_verify(inst.a, inst.b, r.pencil);
      } else {
        EXPECT_TRUE(r.has_case_iii());
        expect_plane_verifies(inst.a, inst.b, r.plane);
      }
    }
  }
}

TEST(Instances, ConstructionsAndPreconditions) {
  // a..f = x1..x6
  const std::size_t n = 6;
  std::vector<LinearForm> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(var(n, i));
  QuadraticForm a = prod(v[0], v[2]) + prod(v[1], v[3]), b = prod(v[0], v[4]) + prod(v[1], v[5]);
  std::vector<QuadraticForm> qs{sq(v[0]), sq(v[1]), prod(v[2], v[5]) - prod(v[3], v[4])};
  EXPECT_TRUE(product_in_radical(qs, a, b));
  EXPECT_FALSE(product_in_radical({sq(v[0]), sq(v[1])}, a, b));

  auto inst = make_instance(InstanceCase::ii, 5, 3);
  EXPECT_EQ(inst.b, inst.a + prod(inst.forms[0], inst.forms[1]));
  EXPECT_TRUE(product_in_radical(inst.qs, inst.a, inst.b));
  auto small = make_instance(InstanceCase::ii, 3, 4);
  EXPECT_TRUE(product_in_radical(small.qs, small.a, small.b));
  EXPECT_THROW(make_instance(InstanceCase::iii, 5, 1), PreconditionError);
  EXPECT_THROW(make_instance(InstanceCase::ii, 2, 1), PreconditionError);
  // reproducible
  auto again = make_instance(InstanceCase::ii, 5, 3);
  EXPECT_EQ(again.a, inst.a);
  EXPECT_EQ(again.qs, inst.qs);
}

TEST(Gupta, Examples) {
  const std::size_t n = 6;
  LinearForm x = var(n, 0), y = var(n, 1), z = var(n, 2), w = var(n, 3), u = var(n, 4), v = var(n, 5);
  QuadraticForm a = prod(x, y) + prod(z, w), b = prod(x, y) - prod(z, w);
  std::vector<QuadraticForm> qs{prod(x, w), prod(y, z), sq(u) + prod(v, w), sq(u) - prod(v, w)};
  auto s = gupta_reduce(qs, a, b);
  EXPECT_EQ(s, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(gupta_reduce({a + b}, a, b), (std::vector<std::size_t>{0}));
  EXPECT_THROW(gupta_reduce({prod(x, w)}, a, b), PreconditionError);
}

TEST(Gupta, PaddedCaseThree) {
  Rng rng(36);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto inst = make_instance(InstanceCase::iii, 6, seed);
    auto qs = inst.qs;
    qs.push_back(random_quadratic(rng, 6));
    qs.insert(qs.begin(), random_quadratic(rng, 6));
    auto s = gupta_reduce(qs, inst.a, inst.b);
    EXPECT_LE(s.size(), 4u);
    std::vector<QuadraticForm> sub;
    for (auto k : s) sub.push_back(qs[k]);
    EXPECT_TRUE(product_in_radical(sub, inst.a, inst.b));
  }
}
