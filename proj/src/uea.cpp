#include "djqla/uea.hpp"

#include <sstream>

#include "djqla/errors.hpp"

namespace djqla {

// ---------------------------------------------------------------- elements

Element element_of(const Word& w, const Scalar& coeff) {
  Element e;
  add_term(e, w, coeff);
  return e;
}

void add_term(Element& e, const Word& w, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) e.erase(it);
}

Element add(const Element& x, const Element& y) {
  Element r = x;
  for (const auto& [w, c] : y) add_term(r, w, c);
  return r;
}

Element subtract(const Element& x, const Element& y) {
  Element r = x;
  for (const auto& [w, c] : y) add_term(r, w, -c);
  return r;
}

Element scale(const Element& x, const Scalar& s) {
  Element r;
  for (const auto& [w, c] : x) add_term(r, w, c * s);
  return r;
}

Element multiply(const Element& x, const Element& y) {
  Element r;
  for (const auto& [wx, cx] : x) {
    for (const auto& [wy, cy] : y) {
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      add_term(r, w, cx * cy);
    }
  }
  return r;
}

std::string to_string(const Element& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (w.empty()) os << "*1";
    for (int i : w) os << "*x" << (i + 1);
  }
  return os.str();
}

// ------------------------------------------------------------------ rules

RewriteSystem::RewriteSystem(IceMatrix sigma, StructureConstants C)
    : sigma_(std::move(sigma)), C_(std::move(C)), has_square_(static_cast<size_t>(sigma_.dim()), false) {
  const int d = sigma_.dim();
  if (C_.dim() != d) throw DimensionMismatch("braiding and bracket dimensions differ");
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      // (1 - b_ij) χ_i χ_j = a_ij χ_j χ_i + C^k_ij χ_k
      Scalar lead = Scalar(1) - sigma_.b(i, j);
      if (lead.is_zero()) {
        throw NotTriangular("relation for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") has no x" + std::to_string(i + 1) + "x" + std::to_string(j + 1) + " term");
      }
      Scalar inv = lead.inverse();
      Rule r;
      r.swap_coeff = sigma_.a(i, j) * inv;
      for (int k = 0; k < d; ++k) r.linear.push_back(C_.at(k, i, j) * inv);
      rules_.emplace(std::make_pair(i, j), std::move(r));
    }
    Scalar lead = Scalar(1) - sigma_.a(i, i) - sigma_.b(i, i);
    if (!lead.is_zero()) {
      Scalar inv = lead.inverse();
      Rule r;
      for (int k = 0; k < d; ++k) r.linear.push_back(C_.at(k, i, i) * inv);
      rules_.emplace(std::make_pair(i, i), std::move(r));
      has_square_[static_cast<size_t>(i)] = true;
    }
  }
}

bool RewriteSystem::has_rule(int i, int j) const { return rules_.count({i, j}) != 0; }

const Rule& RewriteSystem::rule(int i, int j) const {
  auto it = rules_.find({i, j});
  if (it == rules_.end()) throw Unsupported("no rule for this pair");
  return it->second;
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (size_t p = 0; p + 1 < w.size(); ++p) {
    if (has_rule(w[p], w[p + 1])) return false;
  }
  return true;
}

Element RewriteSystem::apply_at(const Word& w, size_t pos) const {
  const int i = w[pos];
  const int j = w[pos + 1];
  const Rule& r = rule(i, j);
  Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
  Word suffix(w.begin() + static_cast<long>(pos) + 2, w.end());
  Element out;
  if (i != j) {
    Word s = prefix;
    s.push_back(j);
    s.push_back(i);
    s.insert(s.end(), suffix.begin(), suffix.end());
    add_term(out, s, r.swap_coeff);
  }
  for (int k = 0; k < dim(); ++k) {
    if (r.linear[static_cast<size_t>(k)].is_zero()) continue;
    Word s = prefix;
    s.push_back(k);
    s.insert(s.end(), suffix.begin(), suffix.end());
    add_term(out, s, r.linear[static_cast<size_t>(k)]);
  }
  return out;
}

Element RewriteSystem::relation(int i, int j) const {
  Element e = element_of({i, j});
  if (i == j) {
    add_term(e, {i, i}, -(sigma_.a(i, i) + sigma_.b(i, i)));
  } else {
    add_term(e, {j, i}, -sigma_.a(i, j));
    add_term(e, {i, j}, -sigma_.b(i, j));
  }
  for (int k = 0; k < dim(); ++k) add_term(e, {k}, -C_.at(k, i, j));
  return e;
}

RewriteSystem RewriteSystem::substitute(const SamplePoint& point) const {
  return RewriteSystem(sigma_.substitute(point), C_.substitute(point));
}

RewriteSystem build_rules(const IceMatrix& sigma, const StructureConstants& C) { return RewriteSystem(sigma, C); }

// --------------------------------------------------------------- reduction

const Element& Reducer::reduce(const Word& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  size_t pos = w.size();
  for (size_t p = 0; p + 1 < w.size(); ++p) {
    if (rs_.has_rule(w[p], w[p + 1])) {
      pos = p;
      break;
    }
  }
  Element result;
  if (pos == w.size()) {
    result = element_of(w);
  } else {
    ++steps_;
    for (const auto& [v, c] : rs_.apply_at(w, pos)) {
      const Element& sub = reduce(v);
      for (const auto& [u, cu] : sub) add_term(result, u, c * cu);
    }
  }
  return memo_.emplace(w, std::move(result)).first->second;
}

Element Reducer::reduce(const Element& e) {
  Element out;
  for (const auto& [w, c] : e) {
    for (const auto& [u, cu] : reduce(w)) add_term(out, u, c * cu);
  }
  return out;
}

Element normal_form(const RewriteSystem& rs, const Element& e) {
  Reducer r(rs);
  return r.reduce(e);
}

// -------------------------------------------------------------------- PBW

std::vector<Word> normal_words(const RewriteSystem& rs, int k) {
  std::vector<Word> out;
  if (k < 0) return out;
  Word w;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == k) {
      out.push_back(w);
      return;
    }
    for (int i = 0; i < rs.dim(); ++i) {
      if (!w.empty() && rs.has_rule(w.back(), i)) continue;
      w.push_back(i);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  return out;
}

long dim_degree(const RewriteSystem& rs, int k) { return static_cast<long>(normal_words(rs, k).size()); }

long supercommutative_count(int m, int n, int k) {
  auto binom = [](long a, long b) -> long {
    if (b < 0 || a < b) return 0;
    long r = 1;
    for (long t = 1; t <= b; ++t) r = r * (a - b + t) / t;
    return r;
  };
  long total = 0;
  for (int b = 0; b <= k; ++b) {
    int a = k - b;
    long multisets = m == 0 ? (a == 0 ? 1 : 0) : binom(m + a - 1, a);
    total += multisets * binom(n, b);
  }
  return total;
}

// ----------------------------------------------------------------- overlaps

DiamondReport diamond_check(const RewriteSystem& rs) {
  DiamondReport rep;
  Reducer red(rs);
  const int d = rs.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ++rep.relations_checked;
      Element nf = red.reduce(rs.relation(i, j));
      if (!nf.empty()) rep.disagreements.push_back({"relation", {i, j}, nf, {}});
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        if (!rs.has_rule(i, j) || !rs.has_rule(j, k)) continue;
        ++rep.overlaps_checked;
        Word w{i, j, k};
        Element left = red.reduce(rs.apply_at(w, 0));
        Element right = red.reduce(rs.apply_at(w, 1));
        if (!(left == right)) rep.disagreements.push_back({"overlap", w, std::move(left), std::move(right)});
      }
  return rep;
}

}  // namespace djqla
