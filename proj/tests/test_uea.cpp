#include <algorithm>
#include <functional>
#include <random>

#include "djqla/errors.hpp"
#include "djqla/uea.hpp"
#include "doctest.h"

using namespace djqla;

namespace {

Scalar q() { return Scalar::var(q_symbol()); }
Scalar c() { return Scalar::var(c_symbol()); }

ParamSpec admissible(int d, std::vector<int> parity) {
  ParamSpec s = ParamSpec::symbolic(d, std::move(parity));
  for (int j = 1; j < d; ++j) s.set_p(0, j, Scalar(1));
  return s;
}

RewriteSystem theorem_system(int d, std::vector<int> parity) {
  return build_rules(build_sigma(admissible(d, std::move(parity))), build_theorem_C(d, c()));
}

std::vector<std::vector<int>> first_even_parities(int d) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
    std::vector<int> v(static_cast<size_t>(d), 0);
    for (int i = 1; i < d; ++i) v[i] = (mask >> (i - 1)) & 1;
    out.push_back(v);
  }
  return out;
}

// Coefficient of t^k in (1 - t)^-m (1 + t)^n by series multiplication.
long hilbert_coefficient(int m, int n, int k) {
  std::vector<long> s(static_cast<size_t>(k + 1), 0);
  s[0] = 1;
  for (int e = 0; e < m; ++e)
    for (int i = 1; i <= k; ++i) s[i] += s[i - 1];
  for (int o = 0; o < n; ++o)
    for (int i = k; i >= 1; --i) s[i] += s[i - 1];
  return s[static_cast<size_t>(k)];
}

void for_each_word(int d, int len, const std::function<void(const Word&)>& f) {
  Word w(static_cast<size_t>(len), 0);
  for (;;) {
    f(w);
    int pos = len - 1;
    while (pos >= 0 && w[pos] == d - 1) w[pos--] = 0;
    if (pos < 0) return;
    ++w[pos];
  }
}

}  // namespace

TEST_CASE("element arithmetic") {
  Element x = element_of({0, 1}, Scalar(2));
  Element y = element_of({0, 1}, Scalar(-2));
  CHECK(add(x, y).empty());
  CHECK(subtract(x, x).empty());
  CHECK(scale(x, Scalar(0)).empty());
  Element z = multiply(add(element_of({0}), element_of({1})), element_of({1}, q()));
  CHECK(z.size() == 2);
  CHECK(z.at(Word{0, 1}) == q());
  CHECK(z.at(Word{1, 1}) == q());
  CHECK(to_string(element_of({0, 1}, Scalar(3))) == "(3)*x1*x2");
  CHECK(to_string(Element{}) == "0");
}

TEST_CASE("rules for the theorem bracket at d=2") {
  RewriteSystem rs = theorem_system(2, {0, 0});
  REQUIRE(rs.has_rule(0, 1));
  CHECK_FALSE(rs.has_rule(1, 0));
  CHECK_FALSE(rs.has_rule(0, 0));
  const Rule& r = rs.rule(0, 1);
  CHECK(r.swap_coeff == q().pow(2));
  CHECK(r.linear[0].is_zero());
  CHECK(r.linear[1] == q().pow(2) * c());
  CHECK_THROWS_AS(rs.rule(1, 0), Unsupported);

  Element e = rs.apply_at({0, 1}, 0);
  Element expect = add(element_of({1, 0}, q().pow(2)), element_of({1}, q().pow(2) * c()));
  CHECK(e == expect);
  CHECK(normal_form(rs, rs.relation(0, 1)).empty());
}

TEST_CASE("zero bracket gives quasi-commutation") {
  ParamSpec s = ParamSpec::symbolic(3, {0, 0, 0});
  RewriteSystem rs = build_rules(build_sigma(s), StructureConstants(3));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      // (1 - (1 - q^-2)) χ_i χ_j = p_ij χ_j χ_i
      CHECK(rs.rule(i, j).swap_coeff == s.p_at(i, j) * q().pow(2));
      for (const auto& v : rs.rule(i, j).linear) CHECK(v.is_zero());
    }
  CHECK(diamond_check(rs).confluent());
}

TEST_CASE("odd squares vanish") {
  RewriteSystem rs = theorem_system(2, {0, 1});
  CHECK(rs.is_square_reducible(1));
  CHECK_FALSE(rs.is_square_reducible(0));
  CHECK(normal_form(rs, element_of({1, 1})).empty());
  // χ1 χ2 χ2 = q^2 χ2 χ1 χ2 + q^2 c χ2 χ2 = q^4 χ2 χ2 χ1 + 2 q^4 c χ2 χ2 -> 0
  CHECK(normal_form(rs, element_of({0, 1, 1})).empty());
}

TEST_CASE("normal forms by hand") {
  RewriteSystem rs = theorem_system(2, {0, 0});
  // χ1 χ1 χ2 = q^4 χ2 χ1 χ1 + 2 q^4 c χ2 χ1 + q^4 c^2 χ2
  Element expect = element_of({1, 0, 0}, q().pow(4));
  add_term(expect, {1, 0}, Scalar(2) * q().pow(4) * c());
  add_term(expect, {1}, q().pow(4) * c() * c());
  CHECK(normal_form(rs, element_of({0, 0, 1})) == expect);
  // χ1 χ2 χ1 = q^2 χ2 χ1 χ1 + q^2 c χ2 χ1
  Element e2 = element_of({1, 0, 0}, q().pow(2));
  add_term(e2, {1, 0}, q().pow(2) * c());
  CHECK(normal_form(rs, element_of({0, 1, 0})) == e2);
  CHECK(rs.is_normal({1, 1, 0}));
  CHECK_FALSE(rs.is_normal({0, 1}));
}

TEST_CASE("normal words and PBW counts") {
  RewriteSystem rs = theorem_system(3, {0, 0, 1});
  auto w2 = normal_words(rs, 2);
  std::vector<Word> expect{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {0, 0}};
  std::sort(expect.begin(), expect.end());
  CHECK(w2 == expect);
  CHECK(dim_degree(rs, 0) == 1);
  CHECK(dim_degree(rs, 1) == 3);

  CHECK(supercommutative_count(1, 0, 5) == 1);
  CHECK(supercommutative_count(0, 1, 2) == 0);
  CHECK(supercommutative_count(1, 1, 3) == 2);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= 6; ++k) CHECK(supercommutative_count(m, n, k) == hilbert_coefficient(m, n, k));

  for (int d = 1; d <= 4; ++d)
    for (const auto& par : first_even_parities(d)) {
      RewriteSystem r = theorem_system(d, par);
      int n = 0;
      for (int v : par) n += v;
      for (int k = 0; k <= 5; ++k) CHECK(dim_degree(r, k) == hilbert_coefficient(d - n, n, k));
    }
}

TEST_CASE("reduction terminates in normal words") {
  RewriteSystem rs = theorem_system(3, {0, 1, 0}).substitute(SamplePoint{{q_symbol(), Rational(5, 7)},
                                                                        {c_symbol(), Rational(2)},
                                                                        {p_symbol(2, 3), Rational(3, 11)}});
  Reducer red(rs);
  for (int len = 0; len <= 6; ++len)
    for_each_word(3, len, [&](const Word& w) {
      const Element& e = red.reduce(w);
      for (const auto& [word, coeff] : e) {
        CHECK(rs.is_normal(word));
        CHECK(word.size() <= w.size());
        CHECK_FALSE(coeff.is_zero());
      }
      CHECK(normal_form(rs, e) == e);
    });
  CHECK(red.steps() > 0);
}

TEST_CASE("diamond check") {
  for (int d = 2; d <= 3; ++d)
    for (const auto& par : first_even_parities(d)) {
      DiamondReport r = diamond_check(theorem_system(d, par));
      CHECK(r.confluent());
      CHECK((r.overlaps_checked > 0) == (d == 3 || par[1] == 1));
      CHECK(r.relations_checked == static_cast<size_t>(d * d));
    }

  ParamSpec s = admissible(3, {0, 0, 0});
  StructureConstants C = build_theorem_C(3, Scalar(1));
  C.at(2, 1, 2) = Scalar(1);
  DiamondReport bad = diamond_check(build_rules(build_sigma(s), C));
  CHECK_FALSE(bad.confluent());
  CHECK_FALSE(check_equivalence(build_sigma(s).to_operator(), C).extended_zero());

  // Generic p_1j with the theorem bracket breaks the relations.
  RewriteSystem generic = build_rules(build_sigma(ParamSpec::symbolic(2, {0, 0})), build_theorem_C(2, c()));
  CHECK_FALSE(diamond_check(generic).confluent());
}

TEST_CASE("non-triangular ice matrices are rejected") {
  IceMatrix m(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.a(i, j) = Scalar(1);
  m.b(0, 1) = Scalar(1);
  CHECK_THROWS_AS(build_rules(m, StructureConstants(2)), NotTriangular);
  CHECK_THROWS_AS(build_rules(build_sigma(ParamSpec::symbolic(2, {0, 0})), StructureConstants(3)), DimensionMismatch);
}
