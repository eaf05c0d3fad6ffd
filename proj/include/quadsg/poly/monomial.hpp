#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadsg {

inline constexpr std::size_t kMaxVars = 32;
inline constexpr unsigned kMaxExponent = 255;

/// Exponent vector x^e. Variables beyond a polynomial's n are always zero.
class Monomial {
 public:
  Monomial() { exp_.fill(0); }
  explicit Monomial(const std::vector<unsigned>& e) {
    exp_.fill(0);
    if (e.size() > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
    for (std::size_t i = 0; i < e.size(); ++i) set(i, e[i]);
  }

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (i >= kMaxVars) throw std::out_of_range("Monomial: variable index out of range");
    if (e > kMaxExponent) throw std::overflow_error("Monomial: exponent overflow");
    degree_ = degree_ - exp_[i] + e;
    exp_[i] = static_cast<std::uint8_t>(e);
  }

  std::vector<unsigned> exponents(std::size_t n) const {
    std::vector<unsigned> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = exp_[i];
    return e;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = unsigned(a.exp_[i]) + b.exp_[i];
      if (e > kMaxExponent) throw std::overflow_error("Monomial: exponent overflow");
      m.exp_[i] = static_cast<std::uint8_t>(e);
    }
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp_[i] = static_cast<std::uint8_t>(other.exp_[i] - exp_[i]);
    m.degree_ = other.degree_ - degree_;
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      d += m.exp_[i];
    }
    m.degree_ = d;
    return m;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.exp_[i] && b.exp_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  /// Lexicographic x_0 > x_1 > ...
  static int compare_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.exp_[i] != b.exp_[i]) return a.exp_[i] > b.exp_[i] ? 1 : -1;
    return 0;
  }
  /// Graded reverse lexicographic, x_0 > x_1 > ...
  static int compare_degrevlex(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ > b.degree_ ? 1 : -1;
    for (std::size_t i = kMaxVars; i-- > 0;)
      if (a.exp_[i] != b.exp_[i]) return a.exp_[i] < b.exp_[i] ? 1 : -1;
    return 0;
  }

  std::string str(std::size_t n) const {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
      if (!exp_[i]) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i);
      if (exp_[i] > 1) s += "^" + std::to_string(exp_[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exp_;
  unsigned degree_ = 0;
};

enum class MonomialOrder { degrevlex, lex };

inline int compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
  return order == MonomialOrder::lex ? Monomial::compare_lex(a, b) : Monomial::compare_degrevlex(a, b);
}

/// Storage order for canonical maps (lex).
struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare_lex(a, b) < 0; }
};

}  // namespace quadsg
