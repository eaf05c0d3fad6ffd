#pragma once

// Exact scalars: arbitrary-precision rationals and elements of a single
// quadratic extension Q(sqrt m).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace quadsg {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("malformed rational: '" + s + "'");
    return Rational(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw std::invalid_argument("malformed rational: '" + s + "'");
  Integer d(strip_plus(den));
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Square root of a rational if it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Integer n = sqrt(Integer(q.get_num())), d = sqrt(Integer(q.get_den()));
  return Rational(n, d);
}

/// Writes a nonzero integer as square^2 * core with core squarefree (sign kept
/// in core). Trial division runs to 2^20; a cofactor left after that is taken
/// as squarefree unless it is a perfect square.
inline std::pair<Integer, Integer> squarefree_decompose(const Integer& value) {
  if (sgn(value) == 0) throw std::invalid_argument("squarefree_decompose(0)");
  Integer rest = abs(value), square = 1, core = sgn(value) < 0 ? -1 : 1;
  for (unsigned long p = 2; p < (1UL << 20); p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) square *= p;
    if (e % 2) core *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      square *= sqrt(rest);
    } else {
      core *= rest;
    }
  }
  return {square, core};
}

/// a + b*sqrt(m). m == 0 marks a plain rational (b is then 0). m is a
/// squarefree integer different from 0 and 1 whenever b != 0.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long a) : a_(a) {}              // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
    if (m_ == 1) {
      a_ += b_;
      b_ = 0;
      m_ = 0;
    }
    if (m_ == 0 && !quadsg::is_zero(b_)) throw std::invalid_argument("QuadExt: b != 0 requires m != 0");
  }

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  long m() const { return quadsg::is_zero(b_) ? 0 : m_; }
  /// The extension tag even when b == 0 (used to keep a field consistent).
  long field() const { return m_; }
  bool is_rational() const { return quadsg::is_zero(b_); }
  bool is_zero() const { return quadsg::is_zero(a_) && quadsg::is_zero(b_); }

  QuadExt conjugate() const { return QuadExt(a_, -b_, m_); }
  /// a^2 - m b^2
  Rational norm() const { return a_ * a_ - Rational(m_) * b_ * b_; }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    long m = common_field(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, m);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    long m = common_field(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, m);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    long m = common_field(x, y);
    Rational a = x.a_ * y.a_ + Rational(m) * x.b_ * y.b_;
    Rational b = x.a_ * y.b_ + x.b_ * y.a_;
    return QuadExt(a, b, m);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
    long m = common_field(x, y);
    QuadExt inv(y.a_ / y.norm(), -y.b_ / y.norm(), y.m_);
    QuadExt r = x * inv;
    if (r.m_ == 0) r.m_ = m;
    return r;
  }
  QuadExt operator-() const { return QuadExt(-a_, -b_, m_); }
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational() && y.is_rational()) return x.a_ == y.a_;
    return x.a_ == y.a_ && x.b_ == y.b_ && x.m() == y.m();
  }

  std::string str() const {
    if (is_rational()) return a_.get_str();
    std::string s = quadsg::is_zero(a_) ? "" : a_.get_str() + (sgn(b_) > 0 ? " + " : " - ");
    Rational mag = quadsg::is_zero(a_) ? b_ : abs(b_);
    std::string coef = mag == 1 ? "" : (mag == -1 ? "-" : mag.get_str() + "*");
    return s + coef + "sqrt(" + std::to_string(m_) + ")";
  }

 private:
  static long common_field(const QuadExt& x, const QuadExt& y) {
    if (x.m_ == 0) return y.m_;
    if (y.m_ == 0 || y.m_ == x.m_) return x.m_;
    if (x.is_rational()) return y.m_;
    if (y.is_rational()) return x.m_;
    throw std::domain_error("QuadExt: mixing sqrt(" + std::to_string(x.m_) + ") and sqrt(" +
                            std::to_string(y.m_) + ")");
  }

  Rational a_{0};
  Rational b_{0};
  long m_ = 0;
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline std::string to_string(const QuadExt& x) { return x.str(); }

/// sqrt(q) for rational q, in Q or Q(sqrt m). Only fails if the squarefree
/// core does not fit in a long.
inline QuadExt sqrt_ext(const Rational& q) {
  if (sgn(q) == 0) return QuadExt{};
  if (auto r = rational_sqrt(q)) return QuadExt(*r);
  // sqrt(p/d) = sqrt(p*d)/d
  Integer pd = q.get_num() * q.get_den();
  auto [square, core] = squarefree_decompose(pd);
  if (!core.fits_slong_p()) throw std::overflow_error("sqrt_ext: squarefree core too large");
  Rational b(square, q.get_den());
  b.canonicalize();
  return QuadExt(Rational(0), b, core.get_si());
}

/// Square root inside the field of x, if one exists there. For a rational x
/// the root may land in a fresh quadratic extension.
inline std::optional<QuadExt> sqrt_in_field(const QuadExt& x) {
  if (x.is_rational()) {
    QuadExt r = sqrt_ext(x.rational_part());
    if (x.field() != 0 && r.m() != 0 && r.m() != x.field()) return std::nullopt;
    return r;
  }
  // (p + q sqrt m)^2 = p^2 + m q^2 + 2pq sqrt m
  const Rational& a = x.rational_part();
  const Rational& b = x.irrational_part();
  long m = x.m();
  Rational disc = a * a - Rational(m) * b * b;
  auto root = rational_sqrt(disc);
  if (!root) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational p2 = (a + sign * *root) / 2;
    if (auto p = rational_sqrt(p2); p && !is_zero(*p)) {
      Rational qv = b / (2 * *p);
      return QuadExt(*p, qv, m);
    }
  }
  return std::nullopt;
}

}  // namespace quadsg
