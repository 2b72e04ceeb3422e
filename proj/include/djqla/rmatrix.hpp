#pragma once

// Ice-type and standard multi-parametric Drinfeld-Jimbo R-matrices on a
// super-space. Basis indices are 0-based throughout the C++ API.

#include <vector>

#include "djqla/scalar.hpp"
#include "djqla/tensor.hpp"

namespace djqla {

struct ParamSpec {
  int dim = 0;
  std::vector<int> parity;  // 0 even, 1 odd
  Scalar q;
  std::vector<Scalar> p;  // dim x dim, row-major

  /// q and every p_ij left as symbols.
  static ParamSpec symbolic(int dim, std::vector<int> parity);
  /// p_ij = 1 for all i, j.
  static ParamSpec trivial_p(int dim, std::vector<int> parity, Scalar q);

  const Scalar& p_at(int i, int j) const { return p[static_cast<size_t>(i * dim + j)]; }
  /// Sets p_ij = v and p_ji = 1/v.
  void set_p(int i, int j, const Scalar& v);

  /// Throws InvalidSpec unless p_ii = 1, p_ij p_ji = 1, q != 0 and the shapes agree.
  void validate() const;
  /// True when q is a rational constant with q^4 = 1.
  bool q_degenerate() const;
  ParamSpec substitute(const SamplePoint& point) const;

  bool operator==(const ParamSpec& o) const;
};

/// R^{kl}_{ij} = a_ij δ_i^l δ_j^k + b_ij δ_i^k δ_j^l, with the diagonal
/// R^{ii}_{ii} held entirely in a_ii (b_ii = 0).
class IceMatrix {
 public:
  IceMatrix() = default;
  explicit IceMatrix(int dim);

  int dim() const { return dim_; }
  Scalar& a(int i, int j) { return a_[idx(i, j)]; }
  const Scalar& a(int i, int j) const { return a_[idx(i, j)]; }
  Scalar& b(int i, int j) { return b_[idx(i, j)]; }
  const Scalar& b(int i, int j) const { return b_[idx(i, j)]; }

  Operator2 to_operator() const;
  /// Throws NotIce when some nonzero entry has {i,j} != {k,l}.
  static IceMatrix from_operator(const Operator2& m);

  IceMatrix scaled(const Scalar& s) const;
  /// Result entry (perm[s], perm[t]) is this entry (s, t).
  IceMatrix relabeled(const std::vector<int>& perm) const;
  IceMatrix substitute(const SamplePoint& point) const;

  bool operator==(const IceMatrix& o) const;

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i * dim_ + j); }

  int dim_ = 0;
  std::vector<Scalar> a_;
  std::vector<Scalar> b_;
};

/// The standard R-matrix with eigenvalues q and -q^-1.
IceMatrix build_rhat(const ParamSpec& spec);
/// The braiding q^-1 · build_rhat(spec), with eigenvalues 1 and -q^-2.
IceMatrix build_sigma(const ParamSpec& spec);

/// Parameters spec' with σ(spec') = -q·R̂(spec): q' = -1/q, parities flipped.
ParamSpec second_rescaling_reduce(const ParamSpec& spec);

bool check_ice(const Operator2& m);
bool check_indecomposable(const IceMatrix& m);
/// Throws NotIce for non-ice input.
bool check_indecomposable(const Operator2& m);
bool check_unitary(const Operator2& m);

/// Witness that an ice matrix equals scale · (standard R̂ of spec relabeled by perm).
struct StandardForm {
  ParamSpec spec;
  std::vector<int> perm;  // perm[s] = input index sitting at standard position s
  Scalar scale;

  IceMatrix reproduce() const { return build_rhat(spec).relabeled(perm).scaled(scale); }
};

/// Throws NotStandard when the b-pattern is not a strict total order or the
/// parameters are inconsistent. The returned parity always has the first
/// standard basis vector even, which picks the lexicographically smaller of
/// the two parity vectors related by q -> -1/q.
StandardForm recognize_standard(const IceMatrix& m);

}  // namespace djqla
