#pragma once

#include <quadsg/scalar.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadsg {

/// A linear form sum_i c_i x_i in n variables.
template <class T>
class BasicLinearForm {
 public:
  BasicLinearForm() = default;
  explicit BasicLinearForm(std::size_t n) : coeffs_(n, T(0)) {}
  explicit BasicLinearForm(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {}

  /// The coordinate form x_i.
  static BasicLinearForm variable(std::size_t n, std::size_t i) {
    if (i >= n) throw std::out_of_range("LinearForm::variable: index out of range");
    BasicLinearForm f(n);
    f.coeffs_[i] = T(1);
    return f;
  }

  std::size_t n() const { return coeffs_.size(); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  T& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!quadsg::is_zero(c)) return false;
    return true;
  }

  std::optional<std::size_t> leading_index() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!quadsg::is_zero(coeffs_[i])) return i;
    return std::nullopt;
  }

  /// Scaled so the first nonzero coefficient is 1 (zero form unchanged).
  BasicLinearForm normalized() const {
    auto lead = leading_index();
    if (!lead) return *this;
    T inv = T(1) / coeffs_[*lead];
    return inv * *this;
  }

  T evaluate(const std::vector<T>& point) const {
    check_size(point.size());
    T v(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v += coeffs_[i] * point[i];
    return v;
  }

  friend BasicLinearForm operator+(const BasicLinearForm& a, const BasicLinearForm& b) {
    a.check_size(b.n());
    BasicLinearForm r(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }
  friend BasicLinearForm operator-(const BasicLinearForm& a, const BasicLinearForm& b) {
    a.check_size(b.n());
    BasicLinearForm r(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }
  friend BasicLinearForm operator*(const T& s, const BasicLinearForm& a) {
    BasicLinearForm r(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) r.coeffs_[i] = s * a.coeffs_[i];
    return r;
  }
  BasicLinearForm operator-() const { return T(-1) * *this; }

  friend bool operator==(const BasicLinearForm& a, const BasicLinearForm& b) {
    if (a.n() != b.n()) return false;
    for (std::size_t i = 0; i < a.n(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (quadsg::is_zero(coeffs_[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + to_string(coeffs_[i]) + ")*x" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check_size(std::size_t m) const {
    if (m != coeffs_.size()) throw std::invalid_argument("LinearForm: variable count mismatch");
  }

  std::vector<T> coeffs_;
};

using LinearForm = BasicLinearForm<Rational>;
using ExtLinearForm = BasicLinearForm<QuadExt>;

inline ExtLinearForm to_ext(const LinearForm& f) {
  std::vector<QuadExt> c;
  c.reserve(f.n());
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return ExtLinearForm(std::move(c));
}

/// The rational and sqrt(m) components of an extension form, (f0, f1) with
/// f = f0 + sqrt(m) f1.
inline std::pair<LinearForm, LinearForm> split_components(const ExtLinearForm& f) {
  LinearForm r(f.n()), s(f.n());
  for (std::size_t i = 0; i < f.n(); ++i) {
    r[i] = f[i].rational_part();
    s[i] = f[i].irrational_part();
  }
  return {r, s};
}

/// The extension tag shared by the coefficients (0 when all rational).
inline long field_of(const ExtLinearForm& f) {
  long m = 0;
  for (const auto& c : f.coeffs())
    if (c.m() != 0) {
      if (m != 0 && m != c.m()) throw std::domain_error("ExtLinearForm: mixed extensions");
      m = c.m();
    }
  return m;
}

}  // namespace quadsg
