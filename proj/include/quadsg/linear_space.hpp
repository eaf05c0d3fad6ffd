#pragma once

#include <quadsg/linear_form.hpp>
#include <quadsg/matrix.hpp>

#include <vector>

namespace quadsg {

/// A space of linear forms, stored as an RREF basis (pivot coefficient 1,
/// pivots chosen at the lowest variable index).
template <class T>
class BasicLinearSpace {
 public:
  using Form = BasicLinearForm<T>;

  BasicLinearSpace() = default;
  explicit BasicLinearSpace(std::size_t n) : n_(n) {}
  BasicLinearSpace(std::size_t n, const std::vector<Form>& generators) : n_(n) {
    if (generators.empty()) return;
    Matrix<T> m(generators.size(), n);
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i].n() != n) throw std::invalid_argument("LinearSpace: variable count mismatch");
      for (std::size_t j = 0; j < n; ++j) m(i, j) = generators[i][j];
    }
    set_from_matrix(std::move(m));
  }

  static BasicLinearSpace row_space(const Matrix<T>& m) {
    BasicLinearSpace s(m.cols());
    s.set_from_matrix(m);
    return s;
  }

  /// span{x_0, ..., x_{n-1}}
  static BasicLinearSpace full(std::size_t n) { return row_space(Matrix<T>::identity(n)); }

  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Form>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Variable indices that are not pivots; x_j for these j complete the basis.
  std::vector<std::size_t> free_indices() const {
    std::vector<bool> piv(n_, false);
    for (auto p : pivots_) piv[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
      if (!piv[j]) out.push_back(j);
    return out;
  }

  Matrix<T> matrix() const {
    Matrix<T> m(basis_.size(), n_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = basis_[i][j];
    return m;
  }

  bool contains(const Form& f) const {
    if (f.n() != n_) throw std::invalid_argument("LinearSpace: variable count mismatch");
    // Reduce f by the RREF basis; membership iff the remainder vanishes.
    Form r = f;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      T c = r[pivots_[i]];
      if (!is_zero(c)) r = r - c * basis_[i];
    }
    return r.is_zero();
  }

  bool is_subspace_of(const BasicLinearSpace& other) const {
    for (const auto& b : basis_)
      if (!other.contains(b)) return false;
    return true;
  }

  friend bool operator==(const BasicLinearSpace& a, const BasicLinearSpace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

  friend BasicLinearSpace operator+(const BasicLinearSpace& a, const BasicLinearSpace& b) {
    std::vector<Form> gens = a.basis_;
    gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
    return BasicLinearSpace(a.n_, gens);
  }

  /// Annihilator: vectors v with f(v) = 0 for every f in the space, as forms.
  BasicLinearSpace annihilator() const {
    if (basis_.empty()) return full(n_);
    std::vector<Form> gens;
    for (auto& v : kernel(matrix())) gens.emplace_back(std::move(v));
    return BasicLinearSpace(n_, gens);
  }

  BasicLinearSpace intersect(const BasicLinearSpace& other) const {
    return (annihilator() + other.annihilator()).annihilator();
  }

 private:
  void set_from_matrix(Matrix<T> m) {
    pivots_ = rref_in_place(m);
    basis_.clear();
    for (std::size_t i = 0; i < pivots_.size(); ++i) basis_.emplace_back(m.row(i));
  }

  std::size_t n_ = 0;
  std::vector<Form> basis_;
  std::vector<std::size_t> pivots_;
};

using LinearSpace = BasicLinearSpace<Rational>;
using ExtLinearSpace = BasicLinearSpace<QuadExt>;

}  // namespace quadsg
