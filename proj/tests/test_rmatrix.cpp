#include <algorithm>
#include <random>

#include "djqla/errors.hpp"
#include "djqla/rmatrix.hpp"
#include "doctest.h"

using namespace djqla;

namespace {

Scalar q() { return Scalar::var(q_symbol()); }
Scalar p(int i, int j) { return Scalar::var(p_symbol(i, j)); }

std::vector<std::vector<int>> parities(int d) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << d); ++mask) {
    std::vector<int> v(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1;
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("spec validation") {
  ParamSpec s = ParamSpec::symbolic(2, {0, 1});
  CHECK_NOTHROW(s.validate());
  CHECK(s.p_at(1, 0) == p(1, 2).inverse());
  ParamSpec bad = s;
  bad.p[1] = Scalar(2);  // p_12 = 2 but p_21 still p12^-1
  CHECK_THROWS_AS(bad.validate(), InvalidSpec);
  bad = s;
  bad.p[0] = Scalar(3);
  CHECK_THROWS_AS(bad.validate(), InvalidSpec);
  bad = s;
  bad.parity = {0};
  CHECK_THROWS_AS(bad.validate(), InvalidSpec);
  bad = s;
  bad.q = Scalar(0);
  CHECK_THROWS_AS(bad.validate(), InvalidSpec);
  CHECK_THROWS_AS(s.set_p(0, 0, Scalar(2)), InvalidSpec);
  CHECK(ParamSpec::trivial_p(1, {0}, Scalar(-1)).q_degenerate());
  CHECK_FALSE(ParamSpec::trivial_p(1, {0}, Scalar::rational(5, 7)).q_degenerate());
  CHECK_FALSE(ParamSpec::symbolic(1, {0}).q_degenerate());
}

TEST_CASE("standard R-matrix entries") {
  IceMatrix r0 = build_rhat(ParamSpec::symbolic(1, {0}));
  CHECK(r0.a(0, 0) == q());
  CHECK(r0.b(0, 0).is_zero());
  IceMatrix r1 = build_rhat(ParamSpec::symbolic(1, {1}));
  CHECK(r1.a(0, 0) == -q().inverse());

  IceMatrix r = build_rhat(ParamSpec::symbolic(2, {0, 0}));
  CHECK(r.a(0, 1) == p(1, 2) * q());
  CHECK(r.a(1, 0) == p(1, 2).inverse() * q().inverse());
  CHECK(r.b(0, 1) == q() - q().inverse());
  CHECK(r.b(1, 0).is_zero());
}

TEST_CASE("braiding entries and rescaling") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& par : parities(d)) {
      ParamSpec s = ParamSpec::symbolic(d, par);
      IceMatrix sig = build_sigma(s);
      CHECK(sig == build_rhat(s).scaled(q().inverse()));
      for (int i = 0; i < d; ++i) {
        CHECK(sig.a(i, i) == (par[i] == 0 ? Scalar(1) : -q().pow(-2)));
        for (int j = 0; j < d; ++j) {
          if (i < j) {
            CHECK(sig.b(i, j) == Scalar(1) - q().pow(-2));
            CHECK(sig.a(i, j) == s.p_at(i, j));
          } else {
            CHECK(sig.b(i, j).is_zero());
          }
          if (i > j) CHECK(sig.a(i, j) == s.p_at(i, j) * q().pow(-2));
        }
      }
    }
}

TEST_CASE("second rescaling reduction") {
  ParamSpec s1 = ParamSpec::symbolic(1, {0});
  ParamSpec r1 = second_rescaling_reduce(s1);
  CHECK(r1.parity == std::vector<int>{1});
  CHECK(r1.q == -q().inverse());
  CHECK(build_sigma(r1).a(0, 0) == -q().pow(2));

  for (int d = 1; d <= 3; ++d)
    for (const auto& par : parities(d)) {
      ParamSpec s = ParamSpec::symbolic(d, par);
      ParamSpec r = second_rescaling_reduce(s);
      CHECK(build_rhat(s).scaled(-q()) == build_sigma(r));
      ParamSpec back = second_rescaling_reduce(r);
      CHECK(back == s);
      CHECK(build_sigma(back) == build_sigma(s));
    }
}

TEST_CASE("ice condition") {
  CHECK(check_ice(build_rhat(ParamSpec::symbolic(3, {0, 1, 0})).to_operator()));
  CHECK(check_ice(Operator2::flip(3)));
  Operator2 m(2);
  m.at(0, 0, 1, 1) = Scalar(1);
  CHECK_FALSE(check_ice(m));
  CHECK_THROWS_AS(IceMatrix::from_operator(m), NotIce);
  IceMatrix flip = IceMatrix::from_operator(Operator2::flip(2));
  CHECK(flip.a(0, 1).is_one());
  CHECK(flip.b(0, 1).is_zero());
  CHECK(flip.to_operator() == Operator2::flip(2));
}

TEST_CASE("ice matrix conversion round trip") {
  for (const auto& par : parities(3)) {
    IceMatrix r = build_rhat(ParamSpec::symbolic(3, par));
    CHECK(IceMatrix::from_operator(r.to_operator()) == r);
  }
}

TEST_CASE("indecomposability") {
  for (int d = 2; d <= 3; ++d) {
    CHECK(check_indecomposable(build_rhat(ParamSpec::symbolic(d, std::vector<int>(d, 0)))));
    ParamSpec at_one = ParamSpec::trivial_p(d, std::vector<int>(d, 0), Scalar(1));
    CHECK_FALSE(check_indecomposable(build_rhat(at_one)));
  }
  CHECK(check_indecomposable(build_rhat(ParamSpec::symbolic(1, {0}))));
  Operator2 m(2);
  m.at(0, 0, 1, 1) = Scalar(1);
  CHECK_THROWS_AS(check_indecomposable(m), NotIce);
  // Two blocks {1,3} and {2}.
  IceMatrix split(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) split.a(i, j) = Scalar(1);
  split.b(0, 2) = Scalar(2);
  CHECK_FALSE(check_indecomposable(split));
  split.b(1, 2) = Scalar(2);
  CHECK(check_indecomposable(split));
}

TEST_CASE("unitarity") {
  ParamSpec s = ParamSpec::trivial_p(2, {0, 0}, Scalar(1));
  CHECK(check_unitary(build_sigma(s).to_operator()));
  CHECK_FALSE(check_unitary(build_sigma(ParamSpec::symbolic(2, {0, 0})).to_operator()));
  CHECK(check_unitary(Operator2::flip(3)));
}

TEST_CASE("canonical operations preserve the braid relation and standardness") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& par : parities(d)) {
      ParamSpec s = ParamSpec::symbolic(d, par);
      Operator2 sigma = build_sigma(s).to_operator();
      Operator2 variants[] = {sigma.transpose(), sigma.conjugate_by_flip(), sigma.inverse()};
      for (const auto& v : variants) {
        CHECK(braid_residual(v).is_zero());
        IceMatrix m = IceMatrix::from_operator(v);
        StandardForm f = recognize_standard(m);
        CHECK(f.reproduce() == m);
      }
    }
}

TEST_CASE("recognize round trip for first-even specs") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& par : parities(d)) {
      if (par[0] != 0) continue;
      ParamSpec s = ParamSpec::symbolic(d, par);
      StandardForm f = recognize_standard(build_rhat(s));
      CHECK(f.spec == s);
      CHECK(f.scale.is_one());
      std::vector<int> id(static_cast<size_t>(d));
      for (int i = 0; i < d; ++i) id[i] = i;
      CHECK(f.perm == id);
    }
}

TEST_CASE("first-odd specs come back in the equivalent first-even gauge") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& par : parities(d)) {
      if (par[0] != 1 || d == 1) continue;
      ParamSpec s = ParamSpec::symbolic(d, par);
      IceMatrix m = build_rhat(s);
      StandardForm f = recognize_standard(m);
      CHECK(f.reproduce() == m);
      CHECK(f.spec.q == -q().inverse());
      for (int i = 0; i < d; ++i) CHECK(f.spec.parity[i] == 1 - par[i]);
      CHECK(f.scale.is_one());
    }
}

TEST_CASE("recognize permuted and rescaled matrices") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    int d = 2 + static_cast<int>(rng() % 2);
    std::vector<int> par(static_cast<size_t>(d));
    for (auto& v : par) v = static_cast<int>(rng() % 2);
    par[0] = 0;
    ParamSpec s = ParamSpec::symbolic(d, par);
    std::vector<int> perm(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Scalar lambda = Scalar::rational(static_cast<long>(rng() % 5) + 1, 3) * q().pow(static_cast<int>(rng() % 3) - 1);
    IceMatrix m = build_rhat(s).relabeled(perm).scaled(lambda);
    StandardForm f = recognize_standard(m);
    CHECK(f.reproduce() == m);
    CHECK(f.perm == perm);
    CHECK(f.spec == s);
    CHECK(f.scale == lambda);
  }
}

TEST_CASE("recognize rejects non-standard ice matrices") {
  IceMatrix m = build_rhat(ParamSpec::symbolic(2, {0, 0}));
  m.b(1, 0) = Scalar(1);
  CHECK_THROWS_AS(recognize_standard(m), NotStandard);

  IceMatrix unordered = build_rhat(ParamSpec::symbolic(3, {0, 0, 0}));
  unordered.b(0, 2) = Scalar(0);
  CHECK_THROWS_AS(recognize_standard(unordered), NotStandard);

  IceMatrix cyclic(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) cyclic.a(i, j) = Scalar(1);
  cyclic.b(0, 1) = cyclic.b(1, 2) = cyclic.b(2, 0) = q() - q().inverse();
  CHECK_THROWS_AS(recognize_standard(cyclic), NotStandard);

  IceMatrix uneven = build_rhat(ParamSpec::symbolic(3, {0, 0, 0}));
  uneven.b(1, 2) = Scalar(7);
  CHECK_THROWS_AS(recognize_standard(uneven), NotStandard);

  IceMatrix baddiag = build_rhat(ParamSpec::symbolic(2, {0, 0}));
  baddiag.a(1, 1) = Scalar(5);
  CHECK_THROWS_AS(recognize_standard(baddiag), NotStandard);
}

TEST_CASE("a negative scale is absorbed by q -> -q") {
  ParamSpec s = ParamSpec::symbolic(3, {0, 1, 0});
  ParamSpec flipped = s;
  flipped.q = -q();
  CHECK(build_rhat(flipped) == build_rhat(s).scaled(Scalar(-1)));
  IceMatrix m = build_rhat(s).scaled(-Scalar::rational(3, 2));
  StandardForm f = recognize_standard(m);
  CHECK(f.reproduce() == m);
  bool same = f.spec == s && f.scale == -Scalar::rational(3, 2);
  bool gauged = f.spec == flipped && f.scale == Scalar::rational(3, 2);
  CHECK((same || gauged));
}
