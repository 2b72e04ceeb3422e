#include "djqla/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "djqla/errors.hpp"

namespace djqla {

namespace {

constexpr SymbolId kQ = 0;
constexpr SymbolId kC = 1;
constexpr SymbolId kFirstP = 2;
constexpr SymbolId kFirstDynamic = 64;

bool is_p_name(std::string_view name) {
  return name.size() == 3 && name[0] == 'p' && std::isdigit(static_cast<unsigned char>(name[1])) &&
         std::isdigit(static_cast<unsigned char>(name[2]));
}

struct SymbolTable {
  std::mutex mu;
  std::unordered_map<std::string, SymbolId> ids;
  std::map<SymbolId, std::string> names;
  SymbolId next = kFirstDynamic;

  SymbolTable() {
    add("q", kQ);
    add("c", kC);
    SymbolId id = kFirstP;
    for (int i = 1; i <= 9; ++i) {
      for (int j = i + 1; j <= 9; ++j) add("p" + std::to_string(i) + std::to_string(j), id++);
    }
  }
  void add(const std::string& n, SymbolId id) {
    ids.emplace(n, id);
    names.emplace(id, n);
  }
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

SymbolId intern_symbol(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  if (auto it = t.ids.find(std::string(name)); it != t.ids.end()) return it->second;
  if (name.empty()) throw ParseError("empty symbol name");
  if (is_p_name(name)) {
    throw ParseError("symbol '" + std::string(name) + "' is not canonical; p_ij is stored for i<j only");
  }
  SymbolId id = t.next++;
  t.add(std::string(name), id);
  return id;
}

const std::string& symbol_name(SymbolId id) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  auto it = t.names.find(id);
  if (it == t.names.end()) throw MissingSymbol("unknown symbol id " + std::to_string(id));
  return it->second;
}

SymbolId q_symbol() { return kQ; }
SymbolId c_symbol() { return kC; }

SymbolId p_symbol(int i, int j) {
  if (i < 1 || j > 9 || i >= j) {
    throw InvalidSpec("p_ij symbol requires 1 <= i < j <= 9, got " + std::to_string(i) + "," +
                      std::to_string(j));
  }
  // Row-major enumeration of the strict upper triangle of a 9x9 table.
  SymbolId offset = 0;
  for (int r = 1; r < i; ++r) offset += static_cast<SymbolId>(9 - r);
  return kFirstP + offset + static_cast<SymbolId>(j - i - 1);
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(SymbolId s, int exp) {
  Monomial m;
  if (exp != 0) m.exps_.emplace_back(s, exp);
  return m;
}

int Monomial::exponent(SymbolId s) const {
  auto it = std::lower_bound(exps_.begin(), exps_.end(), s,
                             [](const Entry& e, SymbolId id) { return e.first < id; });
  return (it != exps_.end() && it->first == s) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.exps_.reserve(exps_.size() + o.exps_.size());
  size_t i = 0, j = 0;
  while (i < exps_.size() || j < o.exps_.size()) {
    if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first)) {
      r.exps_.push_back(exps_[i++]);
    } else if (i == exps_.size() || o.exps_[j].first < exps_[i].first) {
      r.exps_.push_back(o.exps_[j++]);
    } else {
      int e = exps_[i].second + o.exps_[j].second;
      if (e != 0) r.exps_.emplace_back(exps_[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& e : r.exps_) e.second = -e.second;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  size_t i = 0, j = 0;
  while (i < exps_.size() || j < o.exps_.size()) {
    if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first)) {
      if (exps_[i].second > 0) return false;
      ++i;
    } else if (i == exps_.size() || o.exps_[j].first < exps_[i].first) {
      if (o.exps_[j].second < 0) return false;
      ++j;
    } else {
      if (exps_[i].second > o.exps_[j].second) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

Monomial Monomial::gcd_exponents(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.exps_.size() || j < b.exps_.size()) {
    if (j == b.exps_.size() || (i < a.exps_.size() && a.exps_[i].first < b.exps_[j].first)) {
      if (a.exps_[i].second < 0) r.exps_.push_back(a.exps_[i]);
      ++i;
    } else if (i == a.exps_.size() || b.exps_[j].first < a.exps_[i].first) {
      if (b.exps_[j].second < 0) r.exps_.push_back(b.exps_[j]);
      ++j;
    } else {
      int e = std::min(a.exps_[i].second, b.exps_[j].second);
      if (e != 0) r.exps_.emplace_back(a.exps_[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  size_t i = 0, j = 0;
  while (i < exps_.size() || j < o.exps_.size()) {
    if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first)) {
      return exps_[i].second <=> 0;
    }
    if (i == exps_.size() || o.exps_[j].first < exps_[i].first) {
      return 0 <=> o.exps_[j].second;
    }
    if (exps_[i].second != o.exps_[j].second) return exps_[i].second <=> o.exps_[j].second;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [s, e] : exps_) {
    if (!out.empty()) out += '*';
    out += symbol_name(s) + "^" + std::to_string(e);
  }
  return out;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(const Rational& r) { return term(Monomial{}, r); }

LaurentPoly LaurentPoly::term(const Monomial& m, const Rational& r) {
  LaurentPoly p;
  if (sgn(r) != 0) p.terms_.push_back({m, r});
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Monomial LaurentPoly::min_monomial() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].mono;
  for (size_t i = 1; i < terms_.size(); ++i) m = Monomial::gcd_exponents(m, terms_[i].mono);
  return m;
}

LaurentPoly LaurentPoly::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    if (i == terms_.size()) {
      r.terms_.push_back(o.terms_[j++]);
      continue;
    }
    auto cmp = terms_[i].mono <=> o.terms_[j].mono;
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + o.terms_[j].coeff;
      if (sgn(c) != 0) r.terms_.push_back({terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) return times(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.times(terms_[0].mono, terms_[0].coeff);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) out.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return from_unsorted(std::move(out));
}

LaurentPoly LaurentPoly::times(const Monomial& m, const Rational& r) const {
  if (sgn(r) == 0) return {};
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the lex order.
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * r});
  return p;
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& o) const {
  if (o.is_zero()) throw DivisionByZero("Laurent polynomial division by zero");
  if (is_zero()) return LaurentPoly{};
  if (o.is_monomial()) {
    Rational inv = 1 / o.lead().coeff;
    return times(o.lead().mono.inverse(), inv);
  }
  // Shift both into the polynomial ring; g then has no monomial factor, so
  // divisibility in the Laurent ring equals divisibility of the shifted polynomials.
  Monomial mf = min_monomial();
  Monomial mg = o.min_monomial();
  LaurentPoly f = times(mf.inverse(), 1);
  LaurentPoly g = o.times(mg.inverse(), 1);
  const Term lt = g.lead();
  std::vector<Term> quotient;
  while (!f.is_zero()) {
    const Term& t = f.lead();
    if (!lt.mono.divides(t.mono)) return std::nullopt;
    Monomial qm = t.mono * lt.mono.inverse();
    Rational qc = t.coeff / lt.coeff;
    f = f - g.times(qm, qc);
    quotient.push_back({qm, qc});
  }
  return from_unsorted(std::move(quotient)).times(mf * mg.inverse(), 1);
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  mpz_class n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

std::optional<Monomial> monomial_sqrt(const Monomial& m) {
  Monomial r;
  for (const auto& [s, e] : m.exponents()) {
    if (e % 2 != 0) return std::nullopt;
    r = r * Monomial::var(s, e / 2);
  }
  return r;
}

}  // namespace

std::optional<LaurentPoly> LaurentPoly::sqrt() const {
  if (is_zero()) return LaurentPoly{};
  Monomial shift = min_monomial();
  auto root_shift = monomial_sqrt(shift);
  if (!root_shift) return std::nullopt;
  LaurentPoly f = times(shift.inverse(), 1);
  // Leading-term extraction: each step fixes the next term of the root in lex order.
  auto lead_root = monomial_sqrt(f.lead().mono);
  auto lead_coeff = rational_sqrt(f.lead().coeff);
  if (!lead_root || !lead_coeff) return std::nullopt;
  LaurentPoly root = term(*lead_root, *lead_coeff);
  const Term first = root.lead();
  LaurentPoly rem = f - root * root;
  size_t guard = 4 * (terms_.size() + 4) * (terms_.size() + 4);
  while (!rem.is_zero()) {
    if (guard-- == 0) return std::nullopt;
    const Term& t = rem.lead();
    if (!first.mono.divides(t.mono)) return std::nullopt;
    Monomial m = t.mono * first.mono.inverse();
    for (const auto& [s, e] : m.exponents()) {
      if (e < 0) return std::nullopt;
    }
    LaurentPoly step = term(m, t.coeff / (2 * first.coeff));
    root = root + step;
    rem = f - root * root;
  }
  return root.times(*root_shift, 1);
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string piece;
    if (t.mono.is_one()) {
      piece = t.coeff.get_str();
    } else if (t.coeff == 1) {
      piece = t.mono.to_string();
    } else if (t.coeff == -1) {
      piece = "-" + t.mono.to_string();
    } else {
      piece = t.coeff.get_str() + "*" + t.mono.to_string();
    }
    if (!out.empty() && piece[0] != '-') out += '+';
    out += piece;
  }
  return out;
}

// ------------------------------------------------------------------ Scalar

Scalar::Scalar(int v) : num_(LaurentPoly::constant(Rational(v))) {}
Scalar::Scalar(long v) : num_(LaurentPoly::constant(Rational(v))) {}
Scalar::Scalar(const Rational& r) : num_(LaurentPoly::constant(r)) {}
Scalar::Scalar(LaurentPoly p) : num_(std::move(p)) {}
Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

Scalar Scalar::var(SymbolId s, int exp) { return Scalar(LaurentPoly::term(Monomial::var(s, exp), 1)); }

Scalar Scalar::symbol(std::string_view name) {
  if (is_p_name(name)) {
    int i = name[1] - '0', j = name[2] - '0';
    if (i == j) return Scalar(1);
    return i < j ? var(p_symbol(i, j)) : var(p_symbol(j, i), -1);
  }
  return var(intern_symbol(name));
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return Scalar(r);
}

void Scalar::canonicalize() {
  if (!den_) return;
  if (den_->is_zero()) throw DivisionByZero("quotient with zero denominator");
  if (num_.is_zero()) {
    den_.reset();
    return;
  }
  if (auto q = num_.exact_divide(*den_)) {
    num_ = std::move(*q);
    den_.reset();
    return;
  }
  const Term lt = den_->lead();
  Monomial inv = lt.mono.inverse();
  Rational c = 1 / lt.coeff;
  num_ = num_.times(inv, c);
  den_ = den_->times(inv, c);
}

bool Scalar::is_one() const { return !den_ && num_.is_constant() && !num_.is_zero() && num_.lead().coeff == 1; }

Rational Scalar::rational_value() const {
  if (!is_rational()) throw Unsupported("scalar '" + to_string() + "' is not a rational constant");
  return num_.is_zero() ? Rational(0) : num_.lead().coeff;
}

LaurentPoly Scalar::denominator() const { return den_ ? *den_ : LaurentPoly::constant(1); }

Scalar Scalar::operator+(const Scalar& o) const {
  if (!den_ && !o.den_) return Scalar(num_ + o.num_);
  if (den_ && o.den_ && *den_ == *o.den_) return Scalar(num_ + o.num_, *den_);
  LaurentPoly d1 = denominator(), d2 = o.denominator();
  return Scalar(num_ * d2 + o.num_ * d1, d1 * d2);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (!den_ && !o.den_) return Scalar(num_ * o.num_);
  return Scalar(num_ * o.num_, denominator() * o.denominator());
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Scalar(denominator(), num_);
}

Scalar Scalar::pow(int e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  Scalar r(1);
  while (n) {
    if (n & 1U) r *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return r;
}

std::optional<Scalar> Scalar::sqrt() const {
  auto n = num_.sqrt();
  if (!n) return std::nullopt;
  if (!den_) return Scalar(*n);
  auto d = den_->sqrt();
  if (!d) return std::nullopt;
  return Scalar(*n, *d);
}

bool Scalar::operator==(const Scalar& o) const {
  if (!den_ && !o.den_) return num_ == o.num_;
  if (den_ && o.den_ && *den_ == *o.den_) return num_ == o.num_;
  return num_ * o.denominator() == o.num_ * denominator();
}

namespace {

// Requires a nonzero base when e < 0.
Rational rational_power(const Rational& base, int e) {
  Rational f = 1;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) f *= base;
  if (e < 0) f = 1 / f;
  return f;
}

Rational eval_poly(const LaurentPoly& p, const SamplePoint& point) {
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (const auto& [s, e] : t.mono.exponents()) {
      auto it = point.find(s);
      if (it == point.end()) throw MissingSymbol("no value for symbol '" + symbol_name(s) + "'");
      if (sgn(it->second) == 0) {
        if (e < 0) {
          throw ZeroSubstitutionForUnit("symbol '" + symbol_name(s) + "' has negative exponent and value 0");
        }
        v = 0;
        break;
      }
      v *= rational_power(it->second, e);
    }
    total += v;
  }
  return total;
}

LaurentPoly subst_poly(const LaurentPoly& p, const SamplePoint& point) {
  LaurentPoly out;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    Monomial rest;
    for (const auto& [s, e] : t.mono.exponents()) {
      auto it = point.find(s);
      if (it == point.end()) {
        rest = rest * Monomial::var(s, e);
        continue;
      }
      if (sgn(it->second) == 0) {
        if (e < 0) {
          throw ZeroSubstitutionForUnit("symbol '" + symbol_name(s) + "' has negative exponent and value 0");
        }
        v = 0;
        break;
      }
      v *= rational_power(it->second, e);
    }
    out = out + LaurentPoly::term(rest, v);
  }
  return out;
}

}  // namespace

Scalar Scalar::substitute(const SamplePoint& point) const {
  if (!den_) return Scalar(subst_poly(num_, point));
  return Scalar(subst_poly(num_, point), subst_poly(*den_, point));
}

Rational Scalar::evaluate(const SamplePoint& point) const {
  Rational n = eval_poly(num_, point);
  if (!den_) return n;
  Rational d = eval_poly(*den_, point);
  if (sgn(d) == 0) throw DivisionByZero("denominator of '" + to_string() + "' vanishes at the point");
  return n / d;
}

std::vector<SymbolId> Scalar::symbols() const {
  std::vector<SymbolId> out;
  auto collect = [&](const LaurentPoly& p) {
    for (const auto& t : p.terms()) {
      for (const auto& [s, e] : t.mono.exponents()) out.push_back(s);
    }
  };
  collect(num_);
  if (den_) collect(*den_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Scalar::to_string() const {
  if (!den_) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_->to_string() + ")";
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar base = atom();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (eat('-')) {
        neg = true;
      } else {
        eat('+');
      }
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (base.is_zero() && neg) fail("negative power of zero");
      return base.pow(neg ? -e : e);
    }
    return base;
  }
  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return Scalar::symbol(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).parse(); }

Scalar normalize(const Scalar& s) {
  if (s.is_polynomial()) return Scalar(s.numerator());
  return Scalar(s.numerator(), s.denominator());
}

Scalar invert(const Scalar& s) { return s.inverse(); }

Rational evaluate(const Scalar& s, const SamplePoint& point) { return s.evaluate(point); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace djqla
