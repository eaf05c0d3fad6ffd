#pragma once

// Seeded instances realizing case (ii) or (iii) of the structure theorem.

#include <quadsg/errors.hpp>
#include <quadsg/qcore.hpp>
#include <quadsg/random.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace quadsg {

enum class InstanceCase { ii, iii };

inline std::string to_string(InstanceCase c) { return c == InstanceCase::ii ? "ii" : "iii"; }

struct Instance {
  InstanceCase kind = InstanceCase::ii;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  bool homogenized = false;
  QuadraticForm a, b;
  std::vector<QuadraticForm> qs;
  /// The linear forms of the construction: (a, b, c, d) for case ii,
  /// (a, b, c, d, e, f) for case iii.
  std::vector<LinearForm> forms;
};

/// Case ii: B = A + ab, Qs = {A + ac, A + bd}; the expected witness is the
/// reducible member B - A = ab.
/// Case iii: A = ac + bd, B = ae + bf, Qs = {a^2, b^2, cf - de} (or
/// {a^2 + A, b^2 + B, cf - de} when homogenized); the expected witness is
/// the plane span{a, b}.
inline Instance make_instance(InstanceCase kind, std::size_t n, std::uint64_t seed, bool homogenized = false) {
  const std::size_t min_n = kind == InstanceCase::ii ? 3 : 6;
  if (n < min_n)
    throw PreconditionError("make_instance: case " + to_string(kind) + " needs n >= " + std::to_string(min_n));
  Rng rng(seed);
  Instance inst;
  inst.kind = kind;
  inst.n = n;
  inst.seed = seed;
  inst.homogenized = homogenized;
  auto prod = [](const LinearForm& x, const LinearForm& y) { return QuadraticForm::product(x, y); };
  for (;;) {
    inst.forms.clear();
    inst.qs.clear();
    if (kind == InstanceCase::ii) {
      QuadraticForm base = random_quadratic(rng, n);
      for (int i = 0; i < 4; ++i) inst.forms.push_back(random_linear_form(rng, n));
      const auto &a = inst.forms[0], &b = inst.forms[1], &c = inst.forms[2], &d = inst.forms[3];
      inst.a = base;
      inst.b = base + prod(a, b);
      inst.qs = {base + prod(a, c), base + prod(b, d)};
    } else {
      for (int i = 0; i < 6; ++i) inst.forms.push_back(random_linear_form(rng, n));
      const auto &a = inst.forms[0], &b = inst.forms[1], &c = inst.forms[2], &d = inst.forms[3],
                 &e = inst.forms[4], &f = inst.forms[5];
      inst.a = prod(a, c) + prod(b, d);
      inst.b = prod(a, e) + prod(b, f);
      QuadraticForm det = prod(c, f) - prod(d, e);
      if (homogenized) inst.qs = {prod(a, a) + inst.a, prod(b, b) + inst.b, det};
      else inst.qs = {prod(a, a), prod(b, b), det};
    }
    bool ok = !inst.a.is_zero() && !inst.b.is_zero() && !proportional(inst.a, inst.b);
    for (const auto& q : inst.qs) ok = ok && !q.is_zero();
    if (ok) return inst;
  }
}

}  // namespace quadsg
