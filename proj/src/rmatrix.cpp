#include "djqla/rmatrix.hpp"

#include <algorithm>
#include <numeric>

#include "djqla/errors.hpp"

namespace djqla {

// --------------------------------------------------------------- ParamSpec

ParamSpec ParamSpec::symbolic(int dim, std::vector<int> parity) {
  ParamSpec s = trivial_p(dim, std::move(parity), Scalar::var(q_symbol()));
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) s.set_p(i, j, Scalar::var(p_symbol(i + 1, j + 1)));
  }
  return s;
}

ParamSpec ParamSpec::trivial_p(int dim, std::vector<int> parity, Scalar q) {
  if (dim < 1) throw InvalidSpec("dim must be >= 1");
  ParamSpec s;
  s.dim = dim;
  s.parity = std::move(parity);
  s.q = std::move(q);
  s.p.assign(static_cast<size_t>(dim * dim), Scalar(1));
  return s;
}

void ParamSpec::set_p(int i, int j, const Scalar& v) {
  if (i == j) throw InvalidSpec("p_ii is fixed to 1");
  p[static_cast<size_t>(i * dim + j)] = v;
  p[static_cast<size_t>(j * dim + i)] = v.inverse();
}

void ParamSpec::validate() const {
  if (dim < 1) throw InvalidSpec("dim must be >= 1");
  if (parity.size() != static_cast<size_t>(dim)) throw InvalidSpec("parity length must equal dim");
  for (int v : parity) {
    if (v != 0 && v != 1) throw InvalidSpec("parity entries must be 0 or 1");
  }
  if (q.is_zero()) throw InvalidSpec("q must be nonzero");
  if (p.size() != static_cast<size_t>(dim * dim)) throw InvalidSpec("p must be dim x dim");
  for (int i = 0; i < dim; ++i) {
    if (!p_at(i, i).is_one()) throw InvalidSpec("p_ii must be 1 (i=" + std::to_string(i + 1) + ")");
    for (int j = i + 1; j < dim; ++j) {
      if (p_at(i, j).is_zero() || !(p_at(i, j) * p_at(j, i)).is_one()) {
        throw InvalidSpec("p_ij p_ji must be 1 (i=" + std::to_string(i + 1) + ", j=" + std::to_string(j + 1) + ")");
      }
    }
  }
}

bool ParamSpec::q_degenerate() const { return q.is_rational() && q.pow(4).is_one(); }

ParamSpec ParamSpec::substitute(const SamplePoint& point) const {
  ParamSpec s = *this;
  s.q = q.substitute(point);
  for (auto& v : s.p) v = v.substitute(point);
  return s;
}

bool ParamSpec::operator==(const ParamSpec& o) const {
  return dim == o.dim && parity == o.parity && q == o.q && p == o.p;
}

// --------------------------------------------------------------- IceMatrix

IceMatrix::IceMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim * dim)), b_(static_cast<size_t>(dim * dim)) {
  if (dim < 1) throw DimensionMismatch("ice matrix dimension must be >= 1");
}

Operator2 IceMatrix::to_operator() const {
  Operator2 m(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      m.at(j, i, i, j) += a(i, j);
      m.at(i, j, i, j) += b(i, j);
    }
  }
  return m;
}

IceMatrix IceMatrix::from_operator(const Operator2& m) {
  if (!check_ice(m)) throw NotIce("operator violates the ice condition");
  const int d = m.dim();
  IceMatrix r(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) {
        r.a(i, i) = m.at(i, i, i, i);
      } else {
        r.a(i, j) = m.at(j, i, i, j);
        r.b(i, j) = m.at(i, j, i, j);
      }
    }
  }
  return r;
}

IceMatrix IceMatrix::scaled(const Scalar& s) const {
  IceMatrix r(dim_);
  for (size_t k = 0; k < a_.size(); ++k) {
    r.a_[k] = a_[k] * s;
    r.b_[k] = b_[k] * s;
  }
  return r;
}

IceMatrix IceMatrix::relabeled(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<size_t>(dim_)) throw DimensionMismatch("permutation length");
  IceMatrix r(dim_);
  for (int s = 0; s < dim_; ++s) {
    for (int t = 0; t < dim_; ++t) {
      r.a(perm[s], perm[t]) = a(s, t);
      r.b(perm[s], perm[t]) = b(s, t);
    }
  }
  return r;
}

IceMatrix IceMatrix::substitute(const SamplePoint& point) const {
  IceMatrix r(dim_);
  for (size_t k = 0; k < a_.size(); ++k) {
    r.a_[k] = a_[k].substitute(point);
    r.b_[k] = b_[k].substitute(point);
  }
  return r;
}

bool IceMatrix::operator==(const IceMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_ && b_ == o.b_; }

// ------------------------------------------------------------ constructors

IceMatrix build_rhat(const ParamSpec& spec) {
  spec.validate();
  const int d = spec.dim;
  const Scalar& q = spec.q;
  const Scalar qinv = q.inverse();
  IceMatrix r(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) {
        r.a(i, i) = spec.parity[i] == 0 ? q : -qinv;
      } else {
        r.a(i, j) = spec.p_at(i, j) * (i < j ? q : qinv);
        if (i < j) r.b(i, j) = q - qinv;
      }
    }
  }
  return r;
}

IceMatrix build_sigma(const ParamSpec& spec) {
  spec.validate();
  const int d = spec.dim;
  const Scalar qm2 = spec.q.pow(-2);
  IceMatrix s(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) {
        s.a(i, i) = spec.parity[i] == 0 ? Scalar(1) : -qm2;
      } else {
        s.a(i, j) = i < j ? spec.p_at(i, j) : spec.p_at(i, j) * qm2;
        if (i < j) s.b(i, j) = Scalar(1) - qm2;
      }
    }
  }
  return s;
}

ParamSpec second_rescaling_reduce(const ParamSpec& spec) {
  spec.validate();
  ParamSpec out = spec;
  out.q = -spec.q.inverse();
  for (auto& v : out.parity) v = 1 - v;
  const Scalar qt2 = out.q.pow(2);
  for (int i = 0; i < spec.dim; ++i) {
    for (int j = 0; j < spec.dim; ++j) {
      if (i == j) continue;
      // p~_ij = -p_ij q~^{2(θ_{i>j} - θ_{i<j})}
      out.p[static_cast<size_t>(i * spec.dim + j)] = -spec.p_at(i, j) * (i > j ? qt2 : qt2.inverse());
    }
  }
  return out;
}

// -------------------------------------------------------------- predicates

bool check_ice(const Operator2& m) {
  const int d = m.dim();
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (m.at(k, l, i, j).is_zero()) continue;
          bool same = (k == i && l == j) || (k == j && l == i);
          if (!same) return false;
        }
  return true;
}

bool check_indecomposable(const IceMatrix& m) {
  const int d = m.dim();
  std::vector<int> parent(static_cast<size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (!m.b(i, j).is_zero() || !m.b(j, i).is_zero()) parent[find(i)] = find(j);
    }
  }
  for (int i = 1; i < d; ++i) {
    if (find(i) != find(0)) return false;
  }
  return true;
}

bool check_indecomposable(const Operator2& m) { return check_indecomposable(IceMatrix::from_operator(m)); }

bool check_unitary(const Operator2& m) { return m * m == Operator2::identity(m.dim()); }

// ------------------------------------------------------------- recognizer

StandardForm recognize_standard(const IceMatrix& m) {
  const int d = m.dim();
  if (d == 1) {
    if (m.a(0, 0).is_zero()) throw NotStandard("zero matrix is not invertible");
    // Only the product λq is visible; fix λ = 1.
    ParamSpec spec = ParamSpec::trivial_p(1, {0}, m.a(0, 0));
    return StandardForm{spec, {0}, Scalar(1)};
  }

  // i precedes j iff b_ij != 0; this must be a strict total order.
  std::vector<int> above(static_cast<size_t>(d), 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      bool ij = !m.b(i, j).is_zero();
      bool ji = !m.b(j, i).is_zero();
      if (ij && ji) {
        throw NotStandard("b_" + std::to_string(i + 1) + std::to_string(j + 1) + " and its transpose are both nonzero");
      }
      if (!ij && !ji) {
        throw NotStandard("indices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are not ordered by b");
      }
      if (ij) ++above[i];
    }
  }
  std::vector<int> perm(static_cast<size_t>(d), -1);
  for (int i = 0; i < d; ++i) {
    int pos = d - 1 - above[i];
    if (perm[pos] != -1) throw NotStandard("b-pattern is not transitive");
    perm[pos] = i;
  }
  auto A = [&](int s, int t) -> const Scalar& { return m.a(perm[s], perm[t]); };
  auto B = [&](int s, int t) -> const Scalar& { return m.b(perm[s], perm[t]); };

  const Scalar beta = B(0, 1);
  for (int s = 0; s < d; ++s) {
    for (int t = s + 1; t < d; ++t) {
      if (!(B(s, t) == beta)) throw NotStandard("off-diagonal b entries differ");
    }
  }
  // With the first standard vector even: X = λq, the odd diagonal value is
  // Y = -λ/q, and β = X + Y.
  const Scalar x = A(0, 0);
  const Scalar y = beta - x;
  if (x.is_zero() || y.is_zero()) throw NotStandard("diagonal entries incompatible with b");
  ParamSpec spec;
  spec.dim = d;
  spec.parity.assign(static_cast<size_t>(d), 0);
  for (int s = 0; s < d; ++s) {
    if (A(s, s) == x) {
      spec.parity[s] = 0;
    } else if (A(s, s) == y) {
      spec.parity[s] = 1;
    } else {
      throw NotStandard("diagonal entry " + std::to_string(perm[s] + 1) + " is neither λq nor -λ/q");
    }
  }
  auto q = (-x / y).sqrt();
  if (!q) throw NotStandard("q^2 = " + (-x / y).to_string() + " has no square root in the coefficient field");
  // q and -q fit equally (with λ -> -λ); pick the sign making λ = x/q lead positively.
  if (sgn((x / *q).numerator().lead().coeff) < 0) q = -*q;
  spec.q = *q;
  spec.p.assign(static_cast<size_t>(d * d), Scalar(1));
  for (int s = 0; s < d; ++s) {
    for (int t = 0; t < d; ++t) {
      if (s == t) continue;
      if (A(s, t).is_zero()) throw NotStandard("vanishing off-diagonal a entry");
      spec.p[static_cast<size_t>(s * d + t)] = s < t ? A(s, t) / x : A(s, t) / (-y);
    }
  }
  try {
    spec.validate();
  } catch (const InvalidSpec& e) {
    throw NotStandard(std::string("recovered parameters are inconsistent: ") + e.what());
  }
  StandardForm form{spec, perm, x / *q};
  if (!(form.reproduce() == m)) throw NotStandard("witness does not reproduce the input");
  return form;
}

}  // namespace djqla
