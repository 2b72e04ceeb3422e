#pragma once

// Exact coefficient field: Laurent polynomials over Q in the symbols q, c and
// p_ij (i<j), closed under formal quotients.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace djqla {

using Rational = mpq_class;
using SymbolId = std::uint32_t;

// Symbol table. Ids double as variable priority in the lex order (smaller id
// = more significant), so q always leads, then c, then p12, p13, ...
SymbolId intern_symbol(std::string_view name);
const std::string& symbol_name(SymbolId id);
SymbolId q_symbol();
SymbolId c_symbol();
/// p_ij for 1 <= i < j <= 9.
SymbolId p_symbol(int i, int j);

/// Sparse exponent vector; exponents may be negative.
class Monomial {
 public:
  using Entry = std::pair<SymbolId, int>;

  Monomial() = default;
  static Monomial var(SymbolId s, int exp = 1);

  bool is_one() const { return exps_.empty(); }
  int exponent(SymbolId s) const;
  const std::vector<Entry>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  /// True when every exponent of this is <= the matching exponent of o.
  bool divides(const Monomial& o) const;
  /// Componentwise minimum, treating absent symbols as exponent 0.
  static Monomial gcd_exponents(const Monomial& a, const Monomial& b);

  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const = default;

  std::string to_string() const;

 private:
  std::vector<Entry> exps_;  // sorted by id, no zero exponents
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Laurent polynomial with rational coefficients, terms strictly descending in lex order.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(const Rational& r);
  static LaurentPoly term(const Monomial& m, const Rational& r);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }
  Monomial min_monomial() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly times(const Monomial& m, const Rational& r) const;

  /// Exact quotient in the Laurent ring, or nullopt if o does not divide this.
  std::optional<LaurentPoly> exact_divide(const LaurentPoly& o) const;
  /// Square root with positive leading coefficient, if this is a perfect square.
  std::optional<LaurentPoly> sqrt() const;

  bool operator==(const LaurentPoly& o) const;
  std::string to_string() const;

 private:
  static LaurentPoly from_unsorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

using SamplePoint = std::map<SymbolId, Rational>;

/// An element of the coefficient field. Always held in canonical form: a
/// Laurent polynomial, or a quotient num/den whose denominator is not a
/// monomial, does not divide the numerator and has leading term 1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v);  // NOLINT(google-explicit-constructor)
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r);  // NOLINT(google-explicit-constructor)
  explicit Scalar(LaurentPoly p);
  Scalar(LaurentPoly num, LaurentPoly den);

  static Scalar var(SymbolId s, int exp = 1);
  static Scalar symbol(std::string_view name);
  static Scalar rational(long num, long den);
  /// Inverse of to_string(); accepts + - * / ^ ( ) and rewrites pJI (J>I) to pIJ^-1.
  static Scalar parse(std::string_view text);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return !den_.has_value(); }
  bool is_rational() const { return !den_ && num_.is_constant(); }
  /// Requires is_rational().
  Rational rational_value() const;
  const LaurentPoly& numerator() const { return num_; }
  LaurentPoly denominator() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(int e) const;
  std::optional<Scalar> sqrt() const;

  bool operator==(const Scalar& o) const;

  /// Replaces the symbols present in point by their values; other symbols stay.
  Scalar substitute(const SamplePoint& point) const;
  Rational evaluate(const SamplePoint& point) const;
  std::vector<SymbolId> symbols() const;

  std::string to_string() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  std::optional<LaurentPoly> den_;
};

Scalar normalize(const Scalar& s);
Scalar invert(const Scalar& s);
Rational evaluate(const Scalar& s, const SamplePoint& point);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace djqla
