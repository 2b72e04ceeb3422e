#include "djqla/qla.hpp"

#include "djqla/errors.hpp"

namespace djqla {

namespace {

struct Entry {
  int k;
  int l;
  Scalar value;
};

// Nonzero outputs of σ grouped by input pair; ice operators have at most two per column.
class SparseColumns {
 public:
  explicit SparseColumns(const Operator2& m) : d_(m.dim()), cols_(static_cast<size_t>(d_ * d_)) {
    for (int k = 0; k < d_; ++k)
      for (int l = 0; l < d_; ++l)
        for (int i = 0; i < d_; ++i)
          for (int j = 0; j < d_; ++j) {
            const Scalar& v = m.at(k, l, i, j);
            if (!v.is_zero()) cols_[static_cast<size_t>(i * d_ + j)].push_back({k, l, v});
          }
  }
  const std::vector<Entry>& out(int i, int j) const { return cols_[static_cast<size_t>(i * d_ + j)]; }

 private:
  int d_;
  std::vector<std::vector<Entry>> cols_;
};

void require_same_dim(const Operator2& sigma, const StructureConstants& C) {
  if (sigma.dim() != C.dim()) {
    throw DimensionMismatch("braiding has dim " + std::to_string(sigma.dim()) + ", bracket has dim " +
                            std::to_string(C.dim()));
  }
}

Scalar e_component(const SparseColumns& s, const StructureConstants& C, int i, int j, int k, int a, int b) {
  const int d = C.dim();
  Scalar acc;
  for (int src = 0; src < d; ++src) {
    const Scalar& c = C.at(src, i, j);
    if (c.is_zero()) continue;
    for (const auto& e : s.out(src, k)) {
      if (e.k == a && e.l == b) acc += e.value * c;
    }
  }
  for (const auto& e1 : s.out(j, k)) {  // σ^{rl}_{jk}
    for (const auto& e2 : s.out(i, e1.k)) {  // σ^{as}_{ir}
      if (e2.k != a) continue;
      const Scalar& c = C.at(b, e2.l, e1.l);
      if (!c.is_zero()) acc -= c * e2.value * e1.value;
    }
  }
  return acc;
}

Scalar f_component(const SparseColumns& s, const StructureConstants& C, int i, int j, int k, int a, int b) {
  const int d = C.dim();
  Scalar acc;
  // σ^{ab}_{sl} C^s_{ir} σ^{rl}_{jk}
  for (const auto& e1 : s.out(j, k)) {
    for (int src = 0; src < d; ++src) {
      const Scalar& c = C.at(src, i, e1.k);
      if (c.is_zero()) continue;
      for (const auto& e2 : s.out(src, e1.l)) {
        if (e2.k == a && e2.l == b) acc += e2.value * c * e1.value;
      }
    }
  }
  // σ^{ab}_{il} C^l_{jk}
  for (int l = 0; l < d; ++l) {
    const Scalar& c = C.at(l, j, k);
    if (c.is_zero()) continue;
    for (const auto& e : s.out(i, l)) {
      if (e.k == a && e.l == b) acc += e.value * c;
    }
  }
  // C^a_{rl} σ^{lb}_{sk} σ^{rs}_{ij}
  for (const auto& e1 : s.out(i, j)) {
    for (const auto& e2 : s.out(e1.l, k)) {
      if (e2.l != b) continue;
      const Scalar& c = C.at(a, e1.k, e2.k);
      if (!c.is_zero()) acc -= c * e2.value * e1.value;
    }
  }
  // C^b_{sk} σ^{as}_{ij}
  for (const auto& e : s.out(i, j)) {
    if (e.k != a) continue;
    const Scalar& c = C.at(b, e.l, k);
    if (!c.is_zero()) acc -= c * e.value;
  }
  return acc;
}

}  // namespace

// ------------------------------------------------------ StructureConstants

StructureConstants::StructureConstants(int dim) : dim_(dim), data_(static_cast<size_t>(dim * dim * dim)) {
  if (dim < 1) throw DimensionMismatch("structure constants need dim >= 1");
}

bool StructureConstants::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

StructureConstants StructureConstants::scaled(const Scalar& s) const {
  StructureConstants r(dim_);
  for (size_t n = 0; n < data_.size(); ++n) r.data_[n] = data_[n] * s;
  return r;
}

StructureConstants StructureConstants::substitute(const SamplePoint& point) const {
  StructureConstants r(dim_);
  for (size_t n = 0; n < data_.size(); ++n) r.data_[n] = data_[n].substitute(point);
  return r;
}

StructureConstants build_theorem_C(int dim, const Scalar& c) {
  StructureConstants C(dim);
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        int v = (i == 0 && k == j ? 1 : 0) - (j == 0 && k == i ? 1 : 0);
        if (v != 0) C.at(k, i, j) = c * Scalar(v);
      }
  return C;
}

// ---------------------------------------------------------------- residuals

ResidualTensor check_braided_symmetry(const Operator2& sigma, const StructureConstants& C, const Scalar& q) {
  require_same_dim(sigma, C);
  const int d = C.dim();
  Operator2 p1 = projector_P1(sigma, q);
  ResidualTensor r("braided_symmetry", {d, d, d});
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Scalar acc;
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) {
            const Scalar& c = C.at(k, a, b);
            const Scalar& p = p1.at(a, b, i, j);
            if (!c.is_zero() && !p.is_zero()) acc += c * p;
          }
        r.at({k, i, j}) = acc;
      }
  return r;
}

Scalar eval_E(const Operator2& sigma, const StructureConstants& C, int i, int j, int k, int a, int b) {
  require_same_dim(sigma, C);
  return e_component(SparseColumns(sigma), C, i, j, k, a, b);
}

Scalar eval_F(const Operator2& sigma, const StructureConstants& C, int i, int j, int k, int a, int b) {
  require_same_dim(sigma, C);
  return f_component(SparseColumns(sigma), C, i, j, k, a, b);
}

ResidualTensor check_E(const Operator2& sigma, const StructureConstants& C) {
  require_same_dim(sigma, C);
  const int d = C.dim();
  SparseColumns s(sigma);
  ResidualTensor r("E", {d, d, d, d, d});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) r.at({i, j, k, a, b}) = e_component(s, C, i, j, k, a, b);
  return r;
}

ResidualTensor check_F(const Operator2& sigma, const StructureConstants& C) {
  require_same_dim(sigma, C);
  const int d = C.dim();
  SparseColumns s(sigma);
  ResidualTensor r("F", {d, d, d, d, d});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) r.at({i, j, k, a, b}) = f_component(s, C, i, j, k, a, b);
  return r;
}

ResidualTensor check_jacobi(const Operator2& sigma, const StructureConstants& C) {
  require_same_dim(sigma, C);
  const int d = C.dim();
  SparseColumns sp(sigma);
  ResidualTensor r("jacobi", {d, d, d, d});
  for (int b = 0; b < d; ++b)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Scalar acc;
          for (int s = 0; s < d; ++s) {
            const Scalar& cij = C.at(s, i, j);
            if (!cij.is_zero() && !C.at(b, s, k).is_zero()) acc += C.at(b, s, k) * cij;
            const Scalar& cjk = C.at(s, j, k);
            if (!cjk.is_zero() && !C.at(b, i, s).is_zero()) acc -= C.at(b, i, s) * cjk;
          }
          for (const auto& e : sp.out(j, k)) {  // σ^{rl}_{jk}
            for (int s = 0; s < d; ++s) {
              const Scalar& cir = C.at(s, i, e.k);
              if (cir.is_zero()) continue;
              const Scalar& outer = C.at(b, s, e.l);
              if (!outer.is_zero()) acc -= outer * cir * e.value;
            }
          }
          r.at({b, i, j, k}) = acc;
        }
  return r;
}

// ---------------------------------------------------------- extended space

ExtendedOperator build_extended_rhat(const Operator2& sigma, const StructureConstants& C) {
  require_same_dim(sigma, C);
  const int d = C.dim();
  Operator2 ext(d + 1);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) ext.at(k + 1, l + 1, i + 1, j + 1) = sigma.at(k, l, i, j);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) ext.at(0, j + 1, k + 1, l + 1) = C.at(j, k, l);
  for (int a = 0; a <= d; ++a) {
    ext.at(0, a, a, 0) = Scalar(1);
    ext.at(a, 0, 0, a) = Scalar(1);
  }
  return ExtendedOperator(std::move(ext));
}

EquivalenceReport check_equivalence(const Operator2& sigma, const StructureConstants& C) {
  ExtendedOperator ext = build_extended_rhat(sigma, C);
  EquivalenceReport rep;
  rep.extended = braid_residual_tensor(ext.op(), 0);
  rep.braid = braid_residual_tensor(sigma, 1);
  rep.jacobi = check_jacobi(sigma, C);
  rep.e = check_E(sigma, C);
  rep.f = check_F(sigma, C);
  return rep;
}

AdjointMatrices adjoint_matrices(const Operator2& sigma, const StructureConstants& C) {
  require_same_dim(sigma, C);
  const int d = C.dim();
  AdjointMatrices out;
  out.dim = d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ScalarMatrix m(static_cast<size_t>(d));
      for (int b = 0; b < d; ++b)
        for (int a = 0; a < d; ++a) m(b, a) = sigma.at(i, b, a, j);
      out.ad_f.push_back(std::move(m));
    }
  for (int i = 0; i < d; ++i) {
    ScalarMatrix m(static_cast<size_t>(d));
    for (int b = 0; b < d; ++b)
      for (int a = 0; a < d; ++a) m(b, a) = C.at(b, a, i);
    out.ad_chi.push_back(std::move(m));
  }
  return out;
}

AxiomReport check_axioms(const QLATriple& t) {
  return AxiomReport{check_braided_symmetry(t.sigma, t.C, t.q), check_jacobi(t.sigma, t.C), check_E(t.sigma, t.C),
                     check_F(t.sigma, t.C)};
}

}  // namespace djqla
