#pragma once

// Dense exact-scalar operators on V⊗V and V⊗V⊗V.
//
// Index convention: M^{kl}_{ij}, upper pair = output. With 0-based basis
// indices the composite row is k*d + l and the composite column is i*d + j,
// so M acts on e_i⊗e_j as sum_{k,l} M^{kl}_{ij} e_k⊗e_l.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "djqla/scalar.hpp"

namespace djqla {

class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  explicit ScalarMatrix(size_t n) : n_(n), data_(n * n) {}
  static ScalarMatrix identity(size_t n);

  size_t size() const { return n_; }
  Scalar& operator()(size_t r, size_t c) { return data_[r * n_ + c]; }
  const Scalar& operator()(size_t r, size_t c) const { return data_[r * n_ + c]; }

  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  ScalarMatrix scaled(const Scalar& s) const;
  ScalarMatrix transpose() const;
  /// Gauss-Jordan over the coefficient field; throws NotInvertible.
  ScalarMatrix inverse() const;
  ScalarMatrix substitute(const SamplePoint& point) const;

  bool is_zero() const;
  size_t nonzero_count() const;
  bool operator==(const ScalarMatrix& o) const;

 private:
  size_t n_ = 0;
  std::vector<Scalar> data_;
};

class Operator2 {
 public:
  Operator2() = default;
  explicit Operator2(int dim);
  Operator2(int dim, ScalarMatrix m);

  static Operator2 identity(int dim);
  /// P(e_i⊗e_j) = e_j⊗e_i.
  static Operator2 flip(int dim);

  int dim() const { return dim_; }
  size_t index(int a, int b) const { return static_cast<size_t>(a * dim_ + b); }
  Scalar& at(int k, int l, int i, int j) { return m_(index(k, l), index(i, j)); }
  const Scalar& at(int k, int l, int i, int j) const { return m_(index(k, l), index(i, j)); }
  const ScalarMatrix& matrix() const { return m_; }

  Operator2 operator*(const Operator2& o) const;
  Operator2 operator+(const Operator2& o) const;
  Operator2 operator-(const Operator2& o) const;
  Operator2 scaled(const Scalar& s) const;
  /// (M^T)^{kl}_{ij} = M^{ij}_{kl}.
  Operator2 transpose() const;
  /// P M P, i.e. components M^{lk}_{ji}.
  Operator2 conjugate_by_flip() const;
  Operator2 inverse() const;
  Operator2 substitute(const SamplePoint& point) const;

  bool is_zero() const { return m_.is_zero(); }
  bool operator==(const Operator2& o) const { return dim_ == o.dim_ && m_ == o.m_; }

 private:
  int dim_ = 0;
  ScalarMatrix m_;
};

class Operator3 {
 public:
  Operator3() = default;
  explicit Operator3(int dim);
  Operator3(int dim, ScalarMatrix m);

  static Operator3 identity(int dim);

  int dim() const { return dim_; }
  size_t index(int a, int b, int c) const { return static_cast<size_t>((a * dim_ + b) * dim_ + c); }
  Scalar& at(int a, int b, int c, int i, int j, int k) { return m_(index(a, b, c), index(i, j, k)); }
  const Scalar& at(int a, int b, int c, int i, int j, int k) const {
    return m_(index(a, b, c), index(i, j, k));
  }
  const ScalarMatrix& matrix() const { return m_; }

  Operator3 operator*(const Operator3& o) const;
  Operator3 operator-(const Operator3& o) const;

  bool is_zero() const { return m_.is_zero(); }
  bool operator==(const Operator3& o) const { return dim_ == o.dim_ && m_ == o.m_; }

 private:
  int dim_ = 0;
  ScalarMatrix m_;
};

struct Component {
  std::vector<int> indices;
  Scalar value;
};

/// Dense residual tensor of arbitrary rank. Reported indices are the
/// 0-based storage indices shifted by label_base (1 for basis labels, 0 for
/// the extended space where label 0 is the adjoined vector).
class ResidualTensor {
 public:
  ResidualTensor() = default;
  ResidualTensor(std::string name, std::vector<int> extents, int label_base = 1);

  const std::string& name() const { return name_; }
  const std::vector<int>& extents() const { return extents_; }
  int label_base() const { return base_; }

  Scalar& at(std::span<const int> idx) { return data_[offset(idx)]; }
  const Scalar& at(std::span<const int> idx) const { return data_[offset(idx)]; }
  Scalar& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx.begin(), idx.size())); }
  const Scalar& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  bool is_zero() const;
  std::vector<Component> nonzero_components() const;
  size_t size() const { return data_.size(); }

 private:
  size_t offset(std::span<const int> idx) const;

  std::string name_;
  std::vector<int> extents_;
  int base_ = 1;
  std::vector<Scalar> data_;
};

Operator3 lift12(const Operator2& m);
Operator3 lift23(const Operator2& m);

/// m12 m23 m12 - m23 m12 m23.
Operator3 braid_residual(const Operator2& m);
ResidualTensor braid_residual_tensor(const Operator2& m, int label_base = 1);

/// Ψ with Ψ^{iu}_{jv} m^{vk}_{ul} = δ^i_l δ^k_j, verified exactly before returning.
Operator2 skew_inverse(const Operator2& m);

/// (m - eig1·Id)(m - eig2·Id).
Operator2 hecke_residual(const Operator2& m, const Scalar& eig1, const Scalar& eig2);

/// Projector onto the eigenvalue-1 subspace of a Hecke operator with spectrum {1, eig2}.
Operator2 projector_for_eigenvalue(const Operator2& m, const Scalar& eig2);
/// The Hecke normalization used for the braiding: spectrum {1, -q^-2}.
Operator2 projector_P1(const Operator2& m, const Scalar& q);

}  // namespace djqla
