#pragma once

// Quantum Lie algebra triples (V, σ, C): the compatibility tensors E and F,
// braided symmetry, the braided Jacobi identity and the extended operator
// on (span{0} ⊕ V)^{⊗2} whose braid relation packages all of them.

#include <vector>

#include "djqla/scalar.hpp"
#include "djqla/tensor.hpp"

namespace djqla {

/// Bracket tensor C^k_ij (upper index k = output), 0-based indices.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int dim);

  int dim() const { return dim_; }
  Scalar& at(int k, int i, int j) { return data_[idx(k, i, j)]; }
  const Scalar& at(int k, int i, int j) const { return data_[idx(k, i, j)]; }
  /// Flat storage in lexicographic (k, i, j) order.
  const std::vector<Scalar>& flat() const { return data_; }
  std::vector<Scalar>& flat() { return data_; }

  bool is_zero() const;
  StructureConstants scaled(const Scalar& s) const;
  StructureConstants substitute(const SamplePoint& point) const;
  bool operator==(const StructureConstants& o) const { return dim_ == o.dim_ && data_ == o.data_; }

 private:
  size_t idx(int k, int i, int j) const { return static_cast<size_t>((k * dim_ + i) * dim_ + j); }

  int dim_ = 0;
  std::vector<Scalar> data_;
};

/// C^k_ij = c (δ^1_i δ^k_j - δ^1_j δ^k_i): the only nonzero bracket is with the first generator.
StructureConstants build_theorem_C(int dim, const Scalar& c);

/// C ∘ P_(1), indexed (k, i, j). Throws DegenerateSpectrum / NotHecke via projector_P1.
ResidualTensor check_braided_symmetry(const Operator2& sigma, const StructureConstants& C, const Scalar& q);

/// E(i,j,k;a,b) = σ^{ab}_{sk} C^s_{ij} - C^b_{sl} σ^{as}_{ir} σ^{rl}_{jk}.
Scalar eval_E(const Operator2& sigma, const StructureConstants& C, int i, int j, int k, int a, int b);
/// F(i,j,k;a,b) = σ^{ab}_{sl} C^s_{ir} σ^{rl}_{jk} + σ^{ab}_{il} C^l_{jk} - C^a_{rl} σ^{lb}_{sk} σ^{rs}_{ij} - C^b_{sk} σ^{as}_{ij}.
Scalar eval_F(const Operator2& sigma, const StructureConstants& C, int i, int j, int k, int a, int b);
/// Full tensors indexed (i, j, k, a, b).
ResidualTensor check_E(const Operator2& sigma, const StructureConstants& C);
ResidualTensor check_F(const Operator2& sigma, const StructureConstants& C);

/// C(C⊗id) - C(id⊗C) - C(C⊗id)σ_23, indexed (b, i, j, k).
ResidualTensor check_jacobi(const Operator2& sigma, const StructureConstants& C);

/// Operator on the (d+1)-dimensional space with basis index 0 adjoined in
/// front; basis vector i of V sits at extended index i+1.
class ExtendedOperator {
 public:
  explicit ExtendedOperator(Operator2 op) : op_(std::move(op)) {}
  const Operator2& op() const { return op_; }
  int base_dim() const { return op_.dim() - 1; }

 private:
  Operator2 op_;
};

ExtendedOperator build_extended_rhat(const Operator2& sigma, const StructureConstants& C);

struct EquivalenceReport {
  ResidualTensor extended;  // braid residual of the extended operator; labels 0..d
  ResidualTensor braid;
  ResidualTensor jacobi;
  ResidualTensor e;
  ResidualTensor f;

  bool extended_zero() const { return extended.is_zero(); }
  bool systems_zero() const { return braid.is_zero() && jacobi.is_zero() && e.is_zero() && f.is_zero(); }
  /// The extended braid relation holds exactly when all four systems do.
  bool consistent() const { return extended_zero() == systems_zero(); }
};

EquivalenceReport check_equivalence(const Operator2& sigma, const StructureConstants& C);

/// Adjoint action on V: ad_{f^i_j} has (b, a) entry σ^{ib}_{aj}; ad_{χ_i} has (b, a) entry C^b_{ai}.
struct AdjointMatrices {
  int dim = 0;
  std::vector<ScalarMatrix> ad_f;    // index i*dim + j
  std::vector<ScalarMatrix> ad_chi;  // index i

  const ScalarMatrix& f(int i, int j) const { return ad_f[static_cast<size_t>(i * dim + j)]; }
};

AdjointMatrices adjoint_matrices(const Operator2& sigma, const StructureConstants& C);

/// A braiding with its Hecke parameter q (spectrum {1, -q^-2}) and a bracket.
struct QLATriple {
  Operator2 sigma;
  StructureConstants C;
  Scalar q;
};

struct AxiomReport {
  ResidualTensor braided_symmetry;
  ResidualTensor jacobi;
  ResidualTensor e;
  ResidualTensor f;

  bool all_zero() const {
    return braided_symmetry.is_zero() && jacobi.is_zero() && e.is_zero() && f.is_zero();
  }
};

AxiomReport check_axioms(const QLATriple& t);

}  // namespace djqla
