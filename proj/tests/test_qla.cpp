#include <random>

#include "djqla/errors.hpp"
#include "djqla/qla.hpp"
#include "djqla/rmatrix.hpp"
#include "doctest.h"

using namespace djqla;

namespace {

Scalar q() { return Scalar::var(q_symbol()); }
Scalar c() { return Scalar::var(c_symbol()); }

// Every entry an independent symbol C<k><i><j> (1-based).
StructureConstants generic_C(int d) {
  StructureConstants C(d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::string name = "C" + std::to_string(k + 1) + std::to_string(i + 1) + std::to_string(j + 1);
        C.at(k, i, j) = Scalar::symbol(name);
      }
  return C;
}

StructureConstants random_C(int d, std::mt19937_64& rng) {
  StructureConstants C(d);
  for (auto& v : C.flat()) {
    int r = static_cast<int>(rng() % 7) - 3;
    v = rng() % 2 ? Scalar(0) : Scalar::rational(r, 2);
  }
  return C;
}

ParamSpec admissible(int d, std::vector<int> parity) {
  ParamSpec s = ParamSpec::symbolic(d, std::move(parity));
  for (int j = 1; j < d; ++j) s.set_p(0, j, Scalar(1));
  return s;
}

Operator2 sigma_of(const ParamSpec& s) { return build_sigma(s).to_operator(); }

}  // namespace

TEST_CASE("theorem bracket entries") {
  StructureConstants C2 = build_theorem_C(2, Scalar(1));
  CHECK(C2.at(1, 0, 1) == Scalar(1));
  CHECK(C2.at(1, 1, 0) == Scalar(-1));
  int nz = 0;
  for (const auto& v : C2.flat()) nz += v.is_zero() ? 0 : 1;
  CHECK(nz == 2);

  CHECK(build_theorem_C(1, c()).is_zero());

  StructureConstants C3 = build_theorem_C(3, Scalar(1));
  CHECK(C3.at(1, 0, 1) == Scalar(1));
  CHECK(C3.at(2, 0, 2) == Scalar(1));
  CHECK(C3.at(1, 1, 0) == Scalar(-1));
  CHECK(C3.at(2, 2, 0) == Scalar(-1));
  nz = 0;
  for (const auto& v : C3.flat()) nz += v.is_zero() ? 0 : 1;
  CHECK(nz == 4);
}

TEST_CASE("braided symmetry") {
  ParamSpec s = ParamSpec::trivial_p(2, {0, 0}, q());
  Operator2 sigma = sigma_of(s);
  CHECK(check_braided_symmetry(sigma, StructureConstants(2), q()).is_zero());

  StructureConstants C = build_theorem_C(2, c());
  ResidualTensor r = check_braided_symmetry(sigma, C, q());
  CHECK(r.at({1, 0, 1}).is_zero());
  CHECK(r.is_zero());
  // Hand expansion of component (k=2, i=1, j=2): C^2_21 + C^2_12 (1 - q^-2) + q^-2 C^2_12.
  Scalar hand = C.at(1, 1, 0) + C.at(1, 0, 1) * (Scalar(1) - q().pow(-2)) + q().pow(-2) * C.at(1, 0, 1);
  CHECK(hand.is_zero());

  StructureConstants wrong = C;
  wrong.at(1, 1, 0) = c();
  CHECK_FALSE(check_braided_symmetry(sigma, wrong, q()).is_zero());
}

TEST_CASE("E components") {
  ParamSpec s = ParamSpec::trivial_p(2, {0, 0}, q());
  Operator2 sigma = sigma_of(s);
  StructureConstants C = build_theorem_C(2, c());
  // σ^{22}_{22} C^2_12 - C^2_12 σ^{21}_{12} σ^{22}_{22}
  Scalar hand = sigma.at(1, 1, 1, 1) * C.at(1, 0, 1) - C.at(1, 0, 1) * sigma.at(1, 0, 0, 1) * sigma.at(1, 1, 1, 1);
  CHECK(hand.is_zero());
  CHECK(eval_E(sigma, C, 0, 1, 1, 1, 1) == hand);
  CHECK(check_E(sigma, StructureConstants(2)).is_zero());
  CHECK(check_E(sigma, C).is_zero());
}

TEST_CASE("E on three distinct indices factors through C^k_ij") {
  for (const auto& par : {std::vector<int>{0, 0, 0}, std::vector<int>{0, 1, 1}, std::vector<int>{1, 0, 1}}) {
    ParamSpec s = ParamSpec::symbolic(3, par);
    IceMatrix A = build_sigma(s);
    Operator2 sigma = A.to_operator();
    StructureConstants C = generic_C(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          if (i == j || j == k || i == k) continue;
          CHECK(eval_E(sigma, C, i, j, k, k, k) == (A.a(k, k) - A.a(j, k) * A.a(i, k)) * C.at(k, i, j));
        }
  }
}

TEST_CASE("diagonal components of E and F") {
  for (const auto& par : {std::vector<int>{0, 0}, std::vector<int>{0, 1}, std::vector<int>{1, 0}, std::vector<int>{1, 1}}) {
    ParamSpec s = ParamSpec::symbolic(2, par);
    IceMatrix A = build_sigma(s);
    Operator2 sigma = A.to_operator();
    StructureConstants C = generic_C(2);
    for (int j = 0; j < 2; ++j) {
      int k = 1 - j;
      CHECK(eval_E(sigma, C, j, j, j, j, k) == (A.a(k, j) - A.a(j, j) * A.a(j, j)) * C.at(k, j, j));
      CHECK(eval_E(sigma, C, j, j, k, k, k) == (A.a(k, k) - A.a(j, k) * A.a(j, k)) * C.at(k, j, j));
      CHECK(eval_F(sigma, C, j, j, j, j, k) == (A.a(k, j) * A.a(j, j) + A.b(j, k) - A.a(j, j)) * C.at(k, j, j));
      if (par[j] == 1) {
        // [-q^-2 p_kj q^{-2θ(k>j)} + 1 - q^{-2θ(j<k)} + q^-2] C^k_jj
        Scalar th_kj = k > j ? q().pow(-2) : Scalar(1);
        Scalar th_jk = j < k ? q().pow(-2) : Scalar(1);
        Scalar displayed = -q().pow(-2) * s.p_at(k, j) * th_kj + Scalar(1) - th_jk + q().pow(-2);
        CHECK(eval_F(sigma, C, j, j, j, j, k) == displayed * C.at(k, j, j));
      }
    }
  }
}

TEST_CASE("E relates the first-row brackets") {
  ParamSpec s = ParamSpec::symbolic(3, {0, 0, 1});
  IceMatrix A = build_sigma(s);
  Operator2 sigma = A.to_operator();
  StructureConstants C = generic_C(3);
  const int j = 1, k = 2;
  CHECK(eval_E(sigma, C, 0, j, k, j, k) == A.b(j, k) * (C.at(j, 0, j) - A.a(0, j) * C.at(k, 0, k)));
}

TEST_CASE("F components") {
  ParamSpec s = ParamSpec::trivial_p(2, {0, 0}, q());
  Operator2 sigma = sigma_of(s);
  CHECK(check_F(sigma, StructureConstants(2)).is_zero());
  CHECK(check_F(sigma, build_theorem_C(2, c())).is_zero());
}

TEST_CASE("Jacobi residual") {
  Operator2 sigma = sigma_of(admissible(3, {0, 0, 1}));
  CHECK(check_jacobi(sigma, StructureConstants(3)).is_zero());
  CHECK(check_jacobi(sigma, build_theorem_C(3, c())).is_zero());

  // Nonabelian 2-dim Lie algebra [x1, x2] = x2 with the flip braiding.
  Operator2 P = Operator2::flip(2);
  StructureConstants lie(2);
  lie.at(1, 0, 1) = Scalar(1);
  lie.at(1, 1, 0) = Scalar(-1);
  CHECK(check_jacobi(P, lie).is_zero());

  // [x1,x2] = x1, [x2,x3] = x1, [x1,x3] = x2 violates Jacobi.
  StructureConstants bad(3);
  auto set = [&](int k, int i, int j) {
    bad.at(k, i, j) = Scalar(1);
    bad.at(k, j, i) = Scalar(-1);
  };
  set(0, 0, 1);
  set(0, 1, 2);
  set(1, 0, 2);
  CHECK_FALSE(check_jacobi(Operator2::flip(3), bad).is_zero());
}

TEST_CASE("extended operator layout") {
  Operator2 P = Operator2::flip(2);
  ExtendedOperator ext = build_extended_rhat(P, StructureConstants(2));
  CHECK(ext.base_dim() == 2);
  CHECK(ext.op() == Operator2::flip(3));

  ParamSpec s = admissible(2, {0, 0});
  Operator2 sigma = sigma_of(s);
  StructureConstants C = build_theorem_C(2, c());
  ExtendedOperator e = build_extended_rhat(sigma, C);
  CHECK(e.op().at(0, 2, 1, 2) == c());
  CHECK(e.op().at(0, 2, 2, 1) == -c());
  size_t sigma_nz = sigma.matrix().nonzero_count();
  size_t c_nz = 0;
  for (const auto& v : C.flat()) c_nz += v.is_zero() ? 0 : 1;
  CHECK(e.op().matrix().nonzero_count() == sigma_nz + c_nz + 2 * 3 - 1);
  CHECK_THROWS_AS(build_extended_rhat(sigma, StructureConstants(3)), DimensionMismatch);
}

TEST_CASE("equivalence for known triples") {
  for (int d = 2; d <= 3; ++d) {
    ParamSpec s = admissible(d, std::vector<int>(d, 0));
    Operator2 sigma = sigma_of(s);
    EquivalenceReport r = check_equivalence(sigma, build_theorem_C(d, c()));
    CHECK(r.extended_zero());
    CHECK(r.systems_zero());
    CHECK(r.consistent());
    EquivalenceReport z = check_equivalence(sigma, StructureConstants(d));
    CHECK(z.extended_zero());
    CHECK(z.systems_zero());
  }
}

TEST_CASE("perturbed brackets fail on both sides") {
  std::mt19937_64 rng(8);
  SamplePoint pt{{q_symbol(), Rational(5, 7)}, {p_symbol(2, 3), Rational(3, 11)}};
  for (int t = 0; t < 20; ++t) {
    int d = 2 + t % 2;
    Operator2 sigma = sigma_of(admissible(d, std::vector<int>(d, 0))).substitute(pt);
    StructureConstants C = build_theorem_C(d, Scalar(1));
    C.flat()[rng() % C.flat().size()] += Scalar(1);
    EquivalenceReport r = check_equivalence(sigma, C);
    CHECK_FALSE(r.extended_zero());
    CHECK_FALSE(r.systems_zero());
    CHECK(r.consistent());
  }
}

TEST_CASE("E, F and Jacobi are components of the extended braid residual") {
  std::mt19937_64 rng(12);
  SamplePoint pt{{q_symbol(), Rational(3, 11)}, {p_symbol(1, 2), Rational(2, 5)}, {p_symbol(1, 3), Rational(7, 3)},
                 {p_symbol(2, 3), Rational(13, 2)}};
  for (int t = 0; t < 6; ++t) {
    int d = 2 + t % 2;
    std::vector<int> par(static_cast<size_t>(d));
    for (auto& v : par) v = static_cast<int>(rng() % 2);
    Operator2 sigma = sigma_of(ParamSpec::symbolic(d, par)).substitute(pt);
    StructureConstants C = random_C(d, rng);
    ResidualTensor ext = check_equivalence(sigma, C).extended;
    ResidualTensor J = check_jacobi(sigma, C);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
              CHECK(ext.at({a + 1, 0, b + 1, i + 1, j + 1, k + 1}) == eval_E(sigma, C, i, j, k, a, b));
              CHECK(ext.at({0, a + 1, b + 1, i + 1, j + 1, k + 1}) == -eval_F(sigma, C, i, j, k, a, b));
            }
          for (int b = 0; b < d; ++b) CHECK(ext.at({0, 0, b + 1, i + 1, j + 1, k + 1}) == J.at({b, i, j, k}));
        }
  }
}

TEST_CASE("extended relation agrees with the four systems on random brackets") {
  std::mt19937_64 rng(21);
  SamplePoint pt{{q_symbol(), Rational(7, 13)}, {p_symbol(2, 3), Rational(5, 3)}};
  int zero_cases = 0;
  for (int t = 0; t < 40; ++t) {
    int d = 2 + t % 2;
    Operator2 sigma = sigma_of(admissible(d, std::vector<int>(d, 0))).substitute(pt);
    StructureConstants C = t % 4 == 0 ? build_theorem_C(d, Scalar::rational(static_cast<long>(rng() % 9) + 1, 4))
                                      : random_C(d, rng);
    EquivalenceReport r = check_equivalence(sigma, C);
    CHECK(r.consistent());
    zero_cases += r.extended_zero() ? 1 : 0;
  }
  CHECK(zero_cases >= 10);
}

TEST_CASE("adjoint matrices") {
  ParamSpec s = admissible(2, {0, 0});
  Operator2 sigma = sigma_of(s);
  AdjointMatrices zero = adjoint_matrices(sigma, StructureConstants(2));
  CHECK(zero.ad_chi[0].is_zero());
  CHECK(zero.ad_chi[1].is_zero());

  AdjointMatrices ad = adjoint_matrices(sigma, build_theorem_C(2, c()));
  CHECK(ad.ad_chi[0](1, 1) == -c());
  CHECK(ad.ad_chi[0].nonzero_count() == 1);
  CHECK(ad.f(0, 1)(0, 0) == sigma.at(0, 0, 0, 1));

  AdjointMatrices flip = adjoint_matrices(Operator2::flip(3), StructureConstants(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(flip.f(i, j) == (i == j ? ScalarMatrix::identity(3) : ScalarMatrix(3)));
}

TEST_CASE("theorem triple passes every axiom symbolically up to d=3") {
  for (int d = 1; d <= 3; ++d)
    for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
      std::vector<int> par(static_cast<size_t>(d), 0);
      for (int i = 1; i < d; ++i) par[i] = (mask >> (i - 1)) & 1;
      ParamSpec s = admissible(d, par);
      QLATriple t{sigma_of(s), build_theorem_C(d, c()), q()};
      CHECK(check_axioms(t).all_zero());
    }
}

TEST_CASE("braided symmetry refuses non-Hecke input") {
  CHECK_THROWS_AS(check_braided_symmetry(Operator2::flip(2), StructureConstants(2), q()), NotHecke);
}
