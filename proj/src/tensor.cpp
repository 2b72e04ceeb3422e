#include "djqla/tensor.hpp"

#include <limits>

#include "djqla/errors.hpp"

namespace djqla {

// ------------------------------------------------------------ ScalarMatrix

ScalarMatrix ScalarMatrix::identity(size_t n) {
  ScalarMatrix m(n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (n_ != o.n_) throw DimensionMismatch("matrix product of sizes " + std::to_string(n_) + " and " + std::to_string(o.n_));
  // Ice-type operators are very sparse; index the nonzeros of o by row.
  std::vector<std::vector<size_t>> cols(n_);
  for (size_t k = 0; k < n_; ++k) {
    for (size_t c = 0; c < n_; ++c) {
      if (!o(k, c).is_zero()) cols[k].push_back(c);
    }
  }
  ScalarMatrix r(n_);
  for (size_t i = 0; i < n_; ++i) {
    for (size_t k = 0; k < n_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (size_t c : cols[k]) r(i, c) += a * o(k, c);
    }
  }
  return r;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  if (n_ != o.n_) throw DimensionMismatch("matrix sum");
  ScalarMatrix r(n_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  if (n_ != o.n_) throw DimensionMismatch("matrix difference");
  ScalarMatrix r(n_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& s) const {
  ScalarMatrix r(n_);
  for (size_t i = 0; i < data_.size(); ++i) {
    if (!data_[i].is_zero()) r.data_[i] = data_[i] * s;
  }
  return r;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix r(n_);
  for (size_t i = 0; i < n_; ++i) {
    for (size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

namespace {

size_t pivot_cost(const Scalar& s) {
  size_t cost = s.numerator().terms().size();
  if (!s.is_polynomial()) cost += 1000 + s.denominator().terms().size();
  return cost;
}

}  // namespace

ScalarMatrix ScalarMatrix::inverse() const {
  ScalarMatrix a = *this;
  ScalarMatrix inv = identity(n_);
  for (size_t col = 0; col < n_; ++col) {
    size_t best = n_;
    size_t best_cost = std::numeric_limits<size_t>::max();
    for (size_t r = col; r < n_; ++r) {
      if (a(r, col).is_zero()) continue;
      size_t cost = pivot_cost(a(r, col));
      if (cost < best_cost) {
        best = r;
        best_cost = cost;
      }
    }
    if (best == n_) throw NotInvertible("matrix is singular (no pivot in column " + std::to_string(col) + ")");
    if (best != col) {
      for (size_t c = 0; c < n_; ++c) {
        std::swap(a(best, c), a(col, c));
        std::swap(inv(best, c), inv(col, c));
      }
    }
    Scalar pinv = a(col, col).inverse();
    for (size_t c = 0; c < n_; ++c) {
      if (!a(col, c).is_zero()) a(col, c) *= pinv;
      if (!inv(col, c).is_zero()) inv(col, c) *= pinv;
    }
    for (size_t r = 0; r < n_; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (size_t c = 0; c < n_; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

ScalarMatrix ScalarMatrix::substitute(const SamplePoint& point) const {
  ScalarMatrix r(n_);
  for (size_t i = 0; i < data_.size(); ++i) {
    if (!data_[i].is_zero()) r.data_[i] = data_[i].substitute(point);
  }
  return r;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

size_t ScalarMatrix::nonzero_count() const {
  size_t n = 0;
  for (const auto& s : data_) n += s.is_zero() ? 0 : 1;
  return n;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
  if (n_ != o.n_) return false;
  for (size_t i = 0; i < data_.size(); ++i) {
    if (!(data_[i] == o.data_[i])) return false;
  }
  return true;
}

// --------------------------------------------------------------- Operator2

Operator2::Operator2(int dim) : dim_(dim), m_(static_cast<size_t>(dim * dim)) {
  if (dim < 1) throw DimensionMismatch("operator dimension must be >= 1");
}

Operator2::Operator2(int dim, ScalarMatrix m) : dim_(dim), m_(std::move(m)) {
  if (dim < 1 || m_.size() != static_cast<size_t>(dim * dim)) {
    throw DimensionMismatch("Operator2 needs a d^2 x d^2 matrix");
  }
}

Operator2 Operator2::identity(int dim) {
  return Operator2(dim, ScalarMatrix::identity(static_cast<size_t>(dim * dim)));
}

Operator2 Operator2::flip(int dim) {
  Operator2 p(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) p.at(j, i, i, j) = Scalar(1);
  }
  return p;
}

Operator2 Operator2::operator*(const Operator2& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("Operator2 composition");
  return Operator2(dim_, m_ * o.m_);
}
Operator2 Operator2::operator+(const Operator2& o) const { return Operator2(dim_, m_ + o.m_); }
Operator2 Operator2::operator-(const Operator2& o) const { return Operator2(dim_, m_ - o.m_); }
Operator2 Operator2::scaled(const Scalar& s) const { return Operator2(dim_, m_.scaled(s)); }
Operator2 Operator2::transpose() const { return Operator2(dim_, m_.transpose()); }

Operator2 Operator2::conjugate_by_flip() const {
  Operator2 r(dim_);
  for (int k = 0; k < dim_; ++k) {
    for (int l = 0; l < dim_; ++l) {
      for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) r.at(k, l, i, j) = at(l, k, j, i);
      }
    }
  }
  return r;
}

Operator2 Operator2::inverse() const { return Operator2(dim_, m_.inverse()); }
Operator2 Operator2::substitute(const SamplePoint& point) const { return Operator2(dim_, m_.substitute(point)); }

// --------------------------------------------------------------- Operator3

Operator3::Operator3(int dim) : dim_(dim), m_(static_cast<size_t>(dim * dim * dim)) {
  if (dim < 1) throw DimensionMismatch("operator dimension must be >= 1");
}

Operator3::Operator3(int dim, ScalarMatrix m) : dim_(dim), m_(std::move(m)) {
  if (dim < 1 || m_.size() != static_cast<size_t>(dim * dim * dim)) {
    throw DimensionMismatch("Operator3 needs a d^3 x d^3 matrix");
  }
}

Operator3 Operator3::identity(int dim) {
  return Operator3(dim, ScalarMatrix::identity(static_cast<size_t>(dim * dim * dim)));
}

Operator3 Operator3::operator*(const Operator3& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("Operator3 composition");
  return Operator3(dim_, m_ * o.m_);
}
Operator3 Operator3::operator-(const Operator3& o) const { return Operator3(dim_, m_ - o.m_); }

// ---------------------------------------------------------- ResidualTensor

ResidualTensor::ResidualTensor(std::string name, std::vector<int> extents, int label_base)
    : name_(std::move(name)), extents_(std::move(extents)), base_(label_base) {
  size_t n = 1;
  for (int e : extents_) n *= static_cast<size_t>(e);
  data_.resize(n);
}

size_t ResidualTensor::offset(std::span<const int> idx) const {
  if (idx.size() != extents_.size()) throw DimensionMismatch("residual index rank");
  size_t off = 0;
  for (size_t a = 0; a < idx.size(); ++a) off = off * static_cast<size_t>(extents_[a]) + static_cast<size_t>(idx[a]);
  return off;
}

bool ResidualTensor::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::vector<Component> ResidualTensor::nonzero_components() const {
  std::vector<Component> out;
  std::vector<int> idx(extents_.size(), 0);
  for (size_t flat = 0; flat < data_.size(); ++flat) {
    size_t rem = flat;
    for (size_t a = extents_.size(); a-- > 0;) {
      idx[a] = static_cast<int>(rem % static_cast<size_t>(extents_[a]));
      rem /= static_cast<size_t>(extents_[a]);
    }
    if (data_[flat].is_zero()) continue;
    Component c{idx, data_[flat]};
    for (int& v : c.indices) v += base_;
    out.push_back(std::move(c));
  }
  return out;
}

// ------------------------------------------------------------- operations

Operator3 lift12(const Operator2& m) {
  const int d = m.dim();
  Operator3 r(d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          const Scalar& v = m.at(a, b, i, j);
          if (v.is_zero()) continue;
          for (int c = 0; c < d; ++c) r.at(a, b, c, i, j, c) = v;
        }
      }
    }
  }
  return r;
}

Operator3 lift23(const Operator2& m) {
  const int d = m.dim();
  Operator3 r(d);
  for (int b = 0; b < d; ++b) {
    for (int c = 0; c < d; ++c) {
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          const Scalar& v = m.at(b, c, j, k);
          if (v.is_zero()) continue;
          for (int a = 0; a < d; ++a) r.at(a, b, c, a, j, k) = v;
        }
      }
    }
  }
  return r;
}

Operator3 braid_residual(const Operator2& m) {
  Operator3 l = lift12(m);
  Operator3 r = lift23(m);
  return l * r * l - r * l * r;
}

ResidualTensor braid_residual_tensor(const Operator2& m, int label_base) {
  const int d = m.dim();
  Operator3 res = braid_residual(m);
  ResidualTensor t("braid", {d, d, d, d, d, d}, label_base);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) t.at({a, b, c, i, j, k}) = res.at(a, b, c, i, j, k);
  return t;
}

Operator2 skew_inverse(const Operator2& m) {
  const int d = m.dim();
  const size_t n = static_cast<size_t>(d * d);
  // Reshuffle: Y_{(u,v),(k,l)} = m^{vk}_{ul}. Then X = Z Y^{-1} with
  // Z_{(i,j),(k,l)} = δ_il δ_kj and Ψ^{iu}_{jv} = X_{(i,j),(u,v)}.
  ScalarMatrix y(n), z(n);
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) y(m.index(u, v), m.index(k, l)) = m.at(v, k, u, l);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z(m.index(i, j), m.index(j, i)) = Scalar(1);
  ScalarMatrix yinv;
  try {
    yinv = y.inverse();
  } catch (const NotInvertible&) {
    throw NotSkewInvertible("reshuffled operator is singular");
  }
  ScalarMatrix x = z * yinv;
  Operator2 psi(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v) psi.at(i, u, j, v) = x(m.index(i, j), m.index(u, v));

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Scalar acc;
          for (int u = 0; u < d; ++u)
            for (int v = 0; v < d; ++v) {
              const Scalar& p = psi.at(i, u, j, v);
              if (p.is_zero()) continue;
              acc += p * m.at(v, k, u, l);
            }
          Scalar want = (i == l && k == j) ? Scalar(1) : Scalar(0);
          if (!(acc == want)) throw NotSkewInvertible("candidate failed the defining contraction");
        }
  return psi;
}

Operator2 hecke_residual(const Operator2& m, const Scalar& eig1, const Scalar& eig2) {
  Operator2 id = Operator2::identity(m.dim());
  return (m - id.scaled(eig1)) * (m - id.scaled(eig2));
}

Operator2 projector_for_eigenvalue(const Operator2& m, const Scalar& eig2) {
  if (eig2 == Scalar(1)) throw DegenerateSpectrum("eigenvalues coincide; the operator is not semi-simple");
  if (!hecke_residual(m, Scalar(1), eig2).is_zero()) {
    throw NotHecke("(m - 1)(m - " + eig2.to_string() + ") != 0");
  }
  Operator2 id = Operator2::identity(m.dim());
  return (m - id.scaled(eig2)).scaled((Scalar(1) - eig2).inverse());
}

Operator2 projector_P1(const Operator2& m, const Scalar& q) {
  return projector_for_eigenvalue(m, -q.pow(-2));
}

}  // namespace djqla
