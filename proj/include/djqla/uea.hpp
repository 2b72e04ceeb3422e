#pragma once

// Enveloping algebra with relations χ_i χ_j - σ^{kl}_{ij} χ_k χ_l = C^k_ij χ_k:
// rewriting to descending normal words, PBW counts and overlap checks.
// Generator indices are 0-based here; JSON uses 1-based labels.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "djqla/qla.hpp"
#include "djqla/rmatrix.hpp"

namespace djqla {

using Word = std::vector<int>;
/// Linear combination of words; zero coefficients are never stored.
using Element = std::map<Word, Scalar>;

Element element_of(const Word& w, const Scalar& coeff = Scalar(1));
void add_term(Element& e, const Word& w, const Scalar& coeff);
Element add(const Element& x, const Element& y);
Element subtract(const Element& x, const Element& y);
Element scale(const Element& x, const Scalar& s);
/// Concatenation product.
Element multiply(const Element& x, const Element& y);
std::string to_string(const Element& e);

/// Right side of a rule: swap_coeff · χ_j χ_i + Σ linear[k] · χ_k (swap_coeff unused for squares).
struct Rule {
  Scalar swap_coeff;
  std::vector<Scalar> linear;
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(IceMatrix sigma, StructureConstants C);

  int dim() const { return sigma_.dim(); }
  const IceMatrix& sigma() const { return sigma_; }
  const StructureConstants& bracket() const { return C_; }

  /// χ_i χ_j with i < j always rewrites; χ_i χ_i rewrites when σ^{ii}_{ii} != 1.
  bool has_rule(int i, int j) const;
  const Rule& rule(int i, int j) const;
  /// Generators carrying a square rule (the odd ones for a standard braiding).
  bool is_square_reducible(int i) const { return has_square_[static_cast<size_t>(i)]; }

  bool is_normal(const Word& w) const;
  /// Rewrites the pair at positions (pos, pos + 1); the pair must have a rule.
  Element apply_at(const Word& w, size_t pos) const;
  /// The defining relation for the ordered pair (i, j) as an element that should vanish.
  Element relation(int i, int j) const;

  RewriteSystem substitute(const SamplePoint& point) const;

 private:
  IceMatrix sigma_;
  StructureConstants C_;
  std::map<std::pair<int, int>, Rule> rules_;
  std::vector<bool> has_square_;
};

/// Throws NotTriangular when some ascending pair cannot be solved for (1 - σ^{ij}_{ij} = 0).
RewriteSystem build_rules(const IceMatrix& sigma, const StructureConstants& C);

/// Memoized leftmost reduction; one instance per RewriteSystem.
class Reducer {
 public:
  explicit Reducer(const RewriteSystem& rs) : rs_(rs) {}
  const Element& reduce(const Word& w);
  Element reduce(const Element& e);
  /// Rule applications performed so far (memo hits excluded).
  std::uint64_t steps() const { return steps_; }

 private:
  const RewriteSystem& rs_;
  std::map<Word, Element> memo_;
  std::uint64_t steps_ = 0;
};

Element normal_form(const RewriteSystem& rs, const Element& e);

/// All normal words of length k in increasing lexicographic order.
std::vector<Word> normal_words(const RewriteSystem& rs, int k);
/// Number of normal words of length k.
long dim_degree(const RewriteSystem& rs, int k);
/// Σ_{a+b=k} C(m+a-1, a) C(n, b): monomials in m commuting and n anticommuting generators.
long supercommutative_count(int m, int n, int k);

struct Disagreement {
  std::string kind;  // "overlap" (degree 3) or "relation" (degree 2)
  Word word;
  Element left;   // overlap: reduce position 0 first; relation: normal form of the relation
  Element right;  // overlap: reduce position 1 first; relation: empty
};

struct DiamondReport {
  size_t overlaps_checked = 0;
  size_t relations_checked = 0;
  std::vector<Disagreement> disagreements;

  bool confluent() const { return disagreements.empty(); }
};

/// Reduces every degree-3 overlap both ways and every degree-2 defining
/// relation (including the ones not used as rules) to normal form.
DiamondReport diamond_check(const RewriteSystem& rs);

}  // namespace djqla
