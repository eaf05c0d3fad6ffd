#pragma once

#include <quadsg/linear_form.hpp>
#include <quadsg/matrix.hpp>

#include <string>
#include <vector>

namespace quadsg {

/// Homogeneous quadratic Q(x) = x^T G x with G symmetric. The monomial
/// x_i^2 has coefficient G[i][i]; x_i x_j (i < j) has coefficient 2 G[i][j].
template <class T>
class BasicQuadraticForm {
 public:
  using Form = BasicLinearForm<T>;

  BasicQuadraticForm() = default;
  explicit BasicQuadraticForm(std::size_t n) : gram_(n, n) {}
  explicit BasicQuadraticForm(Matrix<T> gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw std::invalid_argument("QuadraticForm: Gram matrix not square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      for (std::size_t j = i + 1; j < gram_.cols(); ++j)
        if (!(gram_(i, j) == gram_(j, i))) throw std::invalid_argument("QuadraticForm: Gram matrix not symmetric");
  }

  /// a * b
  static BasicQuadraticForm product(const Form& a, const Form& b) {
    if (a.n() != b.n()) throw std::invalid_argument("QuadraticForm::product: variable count mismatch");
    std::size_t n = a.n();
    BasicQuadraticForm q(n);
    T half = T(1) / T(2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q.gram_(i, j) = half * (a[i] * b[j] + a[j] * b[i]);
    return q;
  }

  /// Sets the coefficient of the monomial x_i x_j (or x_i^2 when i == j).
  void set_monomial(std::size_t i, std::size_t j, const T& coeff) {
    if (i == j) {
      gram_(i, i) = coeff;
    } else {
      T half = coeff / T(2);
      gram_(i, j) = half;
      gram_(j, i) = half;
    }
  }
  T monomial(std::size_t i, std::size_t j) const { return i == j ? gram_(i, i) : T(2) * gram_(i, j); }

  std::size_t n() const { return gram_.rows(); }
  const Matrix<T>& gram() const { return gram_; }
  bool is_zero() const { return gram_.is_zero_matrix(); }
  std::size_t gram_rank() const { return rank(gram_); }

  /// Row i of the Gram matrix as a linear form (half the partial derivative).
  Form gram_row(std::size_t i) const { return Form(gram_.row(i)); }

  T evaluate(const std::vector<T>& x) const {
    if (x.size() != n()) throw std::invalid_argument("QuadraticForm::evaluate: point size mismatch");
    T v(0);
    for (std::size_t i = 0; i < n(); ++i) {
      if (is_zero_scalar(x[i])) continue;
      T row(0);
      for (std::size_t j = 0; j < n(); ++j) row += gram_(i, j) * x[j];
      v += x[i] * row;
    }
    return v;
  }

  /// Upper-triangle Gram entries, the coordinates used for span computations.
  std::vector<T> flatten() const {
    std::vector<T> v;
    v.reserve(n() * (n() + 1) / 2);
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = i; j < n(); ++j) v.push_back(gram_(i, j));
    return v;
  }

  friend BasicQuadraticForm operator+(const BasicQuadraticForm& a, const BasicQuadraticForm& b) {
    return BasicQuadraticForm(a.gram_ + b.gram_, unchecked{});
  }
  friend BasicQuadraticForm operator-(const BasicQuadraticForm& a, const BasicQuadraticForm& b) {
    return BasicQuadraticForm(a.gram_ - b.gram_, unchecked{});
  }
  friend BasicQuadraticForm operator*(const T& s, const BasicQuadraticForm& a) {
    return BasicQuadraticForm(s * a.gram_, unchecked{});
  }
  friend bool operator==(const BasicQuadraticForm& a, const BasicQuadraticForm& b) { return a.gram_ == b.gram_; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = i; j < n(); ++j) {
        T c = monomial(i, j);
        if (is_zero_scalar(c)) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")*x" + std::to_string(i) + (i == j ? "^2" : "*x" + std::to_string(j));
      }
    return s.empty() ? "0" : s;
  }

 private:
  struct unchecked {};
  BasicQuadraticForm(Matrix<T> gram, unchecked) : gram_(std::move(gram)) {}
  static bool is_zero_scalar(const T& v) { return quadsg::is_zero(v); }

  Matrix<T> gram_;
};

using QuadraticForm = BasicQuadraticForm<Rational>;
using ExtQuadraticForm = BasicQuadraticForm<QuadExt>;

inline ExtQuadraticForm to_ext(const QuadraticForm& q) {
  Matrix<QuadExt> g(q.n(), q.n());
  for (std::size_t i = 0; i < q.n(); ++i)
    for (std::size_t j = 0; j < q.n(); ++j) g(i, j) = QuadExt(q.gram()(i, j));
  return ExtQuadraticForm(g);
}

/// Sum of products sum_k a_k b_k.
template <class T>
BasicQuadraticForm<T> expand_pairs(std::size_t n,
                                   const std::vector<std::pair<BasicLinearForm<T>, BasicLinearForm<T>>>& pairs) {
  BasicQuadraticForm<T> q(n);
  for (const auto& [a, b] : pairs) q = q + BasicQuadraticForm<T>::product(a, b);
  return q;
}

}  // namespace quadsg
