#include "djqla/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "djqla/errors.hpp"
#include "djqla/linalg.hpp"

namespace djqla {

namespace {

void require_rational(const ParamSpec& spec) {
  if (!spec.q.is_rational()) throw InvalidSpec("sample q must be a rational constant");
  for (const auto& v : spec.p) {
    if (!v.is_rational()) throw InvalidSpec("sample p must be rational constants");
  }
}

void refuse_degenerate(const ParamSpec& spec) {
  if (spec.q_degenerate()) {
    throw DegenerateParameters("q = " + spec.q.to_string() + " satisfies q^4 = 1; the classification assumes q^4 != 1");
  }
}

StructureConstants unit(int d, size_t u) {
  StructureConstants C(d);
  C.flat()[u] = Scalar(1);
  return C;
}

bool linear_residuals_zero(const Operator2& sigma, const StructureConstants& C, const Scalar& q) {
  return check_braided_symmetry(sigma, C, q).is_zero() && check_E(sigma, C).is_zero() && check_F(sigma, C).is_zero();
}

// All vectors of {0,1}^d in lexicographic order.
std::vector<std::vector<int>> parity_vectors(int d) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << d); ++mask) {
    std::vector<int> v(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) v[i] = (mask >> (d - 1 - i)) & 1;
    out.push_back(std::move(v));
  }
  return out;
}

const std::vector<long>& small_primes() {
  static const std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61};
  return primes;
}

}  // namespace

std::string to_string(PredictionReason r) {
  switch (r) {
    case PredictionReason::admissible: return "admissible";
    case PredictionReason::odd_first_generator: return "odd_first_generator";
    case PredictionReason::p1j_not_one: return "p1j_not_one";
    case PredictionReason::one_dimensional: return "one_dimensional";
  }
  return "admissible";
}

PredictionReason prediction_reason_from_string(const std::string& s) {
  for (auto r : {PredictionReason::admissible, PredictionReason::odd_first_generator, PredictionReason::p1j_not_one,
                 PredictionReason::one_dimensional}) {
    if (to_string(r) == s) return r;
  }
  throw ParseError("unknown prediction reason '" + s + "'");
}

// -------------------------------------------------------------- solving

StructureConstants lex_normalize(const StructureConstants& C) {
  for (const auto& v : C.flat()) {
    if (!v.is_zero()) return C.scaled(v.inverse());
  }
  return C;
}

SolutionSpace solve_linear(const ParamSpec& sample) {
  sample.validate();
  require_rational(sample);
  refuse_degenerate(sample);
  const int d = sample.dim;
  const Operator2 sigma = build_sigma(sample).to_operator();
  const Operator2 p1 = projector_P1(sigma, sample.q);
  const size_t n = static_cast<size_t>(d * d * d);
  const size_t d5 = static_cast<size_t>(d * d * d * d * d);
  RationalMatrix sys(n + 2 * d5, n);

  for (size_t u = 0; u < n; ++u) {
    const int k0 = static_cast<int>(u) / (d * d);
    const int a0 = static_cast<int>(u) / d % d;
    const int b0 = static_cast<int>(u) % d;
    // braided symmetry row (k, i, j) picks up P1^{a0 b0}_{ij} when k = k0
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Scalar& v = p1.at(a0, b0, i, j);
        if (!v.is_zero()) sys(static_cast<size_t>((k0 * d + i) * d + j), u) = v.rational_value();
      }
    const StructureConstants e = unit(d, u);
    const ResidualTensor E = check_E(sigma, e);
    const ResidualTensor F = check_F(sigma, e);
    for (const auto& c : E.nonzero_components()) {
      size_t row = 0;
      for (int idx : c.indices) row = row * static_cast<size_t>(d) + static_cast<size_t>(idx - 1);
      sys(n + row, u) = c.value.rational_value();
    }
    for (const auto& c : F.nonzero_components()) {
      size_t row = 0;
      for (int idx : c.indices) row = row * static_cast<size_t>(d) + static_cast<size_t>(idx - 1);
      sys(n + d5 + row, u) = c.value.rational_value();
    }
  }

  SolutionSpace space;
  space.sample = sample;
  for (const auto& vec : nullspace(sys)) {
    StructureConstants C(d);
    for (size_t u = 0; u < n; ++u) C.flat()[u] = Scalar(vec[u]);
    space.basis.push_back(lex_normalize(C));
  }
  space.dim = static_cast<int>(space.basis.size());
  return space;
}

SolutionSpace solve_resampled(const ParamSpec& first, const ParamSpec& second) {
  SolutionSpace a = solve_linear(first);
  SolutionSpace b = solve_linear(second);
  if (a.dim != b.dim) {
    throw GenericityFailure("kernel dimension " + std::to_string(a.dim) + " at q = " + first.q.to_string() +
                            " but " + std::to_string(b.dim) + " at q = " + second.q.to_string());
  }
  const Operator2 sigma2 = build_sigma(second).to_operator();
  a.resample = second;
  a.resample_consistent = true;
  for (const auto& C : a.basis) {
    if (!linear_residuals_zero(sigma2, C, second.q)) a.resample_consistent = false;
  }
  return a;
}

SolutionSpace filter_jacobi(const SolutionSpace& space) {
  if (space.dim == 0) return space;
  if (space.dim >= 2) {
    throw Unsupported("Jacobi filtering of a " + std::to_string(space.dim) +
                      "-dimensional space needs quadratic elimination");
  }
  const Operator2 sigma = build_sigma(space.sample).to_operator();
  if (check_jacobi(sigma, space.basis.front()).is_zero()) return space;
  SolutionSpace out = space;
  out.basis.clear();
  out.dim = 0;
  return out;
}

Prediction predict(const ParamSpec& spec) {
  spec.validate();
  refuse_degenerate(spec);
  Prediction p;
  if (spec.dim == 1) {
    // The bracket formula antisymmetrizes to zero when there is a single generator.
    p.reason = PredictionReason::one_dimensional;
    return p;
  }
  if (spec.parity[0] == 1) {
    p.reason = PredictionReason::odd_first_generator;
    return p;
  }
  for (int j = 1; j < spec.dim; ++j) {
    if (!spec.p_at(0, j).is_one()) {
      p.reason = PredictionReason::p1j_not_one;
      return p;
    }
  }
  p.expected_dim = 1;
  p.expected_C = build_theorem_C(spec.dim, Scalar(1));
  return p;
}

bool satisfies_antisymmetry(const StructureConstants& C, const ParamSpec& spec) {
  const int d = C.dim();
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (!(C.at(k, j, i) == -spec.p_at(j, i) * C.at(k, i, j))) return false;
      }
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) {
      if (!C.at(k, j, j).is_zero()) return false;
    }
  return true;
}

bool satisfies_first_row_relation(const StructureConstants& C, const ParamSpec& spec) {
  const int d = C.dim();
  for (int j = 1; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      if (!(C.at(j, 0, j) == spec.p_at(0, j) * C.at(k, 0, k))) return false;
    }
  return true;
}

// ------------------------------------------------------------- sampling

const std::vector<Rational>& Sampler::generic_q_values() {
  static const std::vector<Rational> values{Rational(5, 7), Rational(3, 11), Rational(7, 13)};
  return values;
}

Rational Sampler::generic_p() {
  const auto& primes = small_primes();
  std::uniform_int_distribution<size_t> pick(0, primes.size() - 1);
  size_t a = pick(rng_);
  size_t b = pick(rng_);
  while (b == a) b = pick(rng_);
  Rational r(primes[a], primes[b]);
  r.canonicalize();
  return r;
}

ParamSpec Sampler::sample(int dim, const std::vector<int>& parity, size_t q_index, const std::string& p_regime) {
  const auto& qs = generic_q_values();
  ParamSpec spec = ParamSpec::trivial_p(dim, parity, Scalar(qs[q_index % qs.size()]));
  const auto regimes = p_regimes(dim);
  if (std::find(regimes.begin(), regimes.end(), p_regime) == regimes.end()) {
    throw InvalidSpec("unknown p-regime '" + p_regime + "' for dim " + std::to_string(dim));
  }
  // Distinct values, none the inverse of another, so no accidental relation among the p.
  std::set<Rational> used;
  auto fresh = [&] {
    for (;;) {
      Rational r = generic_p();
      Rational inv = 1 / r;
      if (used.count(r) || used.count(inv)) continue;
      used.insert(r);
      return r;
    }
  };
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      bool generic = true;
      if (i == 0) {
        if (p_regime == "all_p1j_one") generic = false;
        if (p_regime == "one_p1j_generic") generic = (j == 1);
      }
      if (generic) spec.set_p(i, j, Scalar(fresh()));
    }
  return spec;
}

std::vector<std::string> p_regimes(int dim) {
  if (dim <= 1) return {"all_p1j_one"};
  if (dim == 2) return {"all_p1j_one", "all_generic"};
  return {"all_p1j_one", "one_p1j_generic", "all_generic"};
}

// ---------------------------------------------------------------- sweep

int SweepReport::mismatches() const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const SweepCell& c) { return !c.ok(); }));
}

std::vector<TargetedSample> targeted_samples(int dim) {
  std::vector<TargetedSample> out;
  if (dim < 2) return out;
  const Scalar q = Scalar::rational(5, 7);
  const std::vector<int> even(static_cast<size_t>(dim), 0);
  auto add = [&](std::string label, std::vector<int> parity, auto&& tweak) {
    ParamSpec spec = ParamSpec::trivial_p(dim, std::move(parity), q);
    // Remaining p_ij (i > 1) fixed to distinct prime ratios.
    long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    size_t n = 0;
    for (int i = 1; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j, n += 2) spec.set_p(i, j, Scalar::rational(primes[n % 12], primes[(n + 1) % 12]));
    tweak(spec);
    TargetedSample t;
    t.label = std::move(label);
    t.spec = std::move(spec);
    t.predicted_dim = predict(t.spec).expected_dim;
    out.push_back(std::move(t));
  };
  add("p12=-1", even, [](ParamSpec& s) { s.set_p(0, 1, Scalar(-1)); });
  add("p12=q^2", even, [&](ParamSpec& s) { s.set_p(0, 1, q.pow(2)); });
  add("p12=q^-2", even, [&](ParamSpec& s) { s.set_p(0, 1, q.pow(-2)); });
  {
    std::vector<int> odd_second = even;
    odd_second[1] = 1;
    add("p12=-1,second odd", odd_second, [](ParamSpec& s) { s.set_p(0, 1, Scalar(-1)); });
    add("p12=-q^-2,second odd", odd_second, [&](ParamSpec& s) { s.set_p(0, 1, -q.pow(-2)); });
  }
  add("q=2", even, [](ParamSpec& s) { s.q = Scalar(2); });
  if (dim >= 3) {
    add("p23=-1", even, [](ParamSpec& s) { s.set_p(1, 2, Scalar(-1)); });
    add("p23=q^2", even, [&](ParamSpec& s) { s.set_p(1, 2, q.pow(2)); });
    add("p23=q^-2", even, [&](ParamSpec& s) { s.set_p(1, 2, q.pow(-2)); });
  }
  return out;
}

SweepReport classify_sweep(int d_max, std::uint64_t seed) {
  if (d_max < 1 || d_max > 4) throw InvalidSpec("d_max must be in 1..4");
  SweepReport report;
  report.d_max = d_max;
  report.seed = seed;
  Sampler sampler(seed);
  std::map<std::vector<int>, bool> symbolic_cache;

  for (int d = 1; d <= d_max; ++d) {
    for (const auto& parity : parity_vectors(d)) {
      for (const auto& regime : p_regimes(d)) {
        ParamSpec first = sampler.sample(d, parity, 0, regime);
        ParamSpec second = sampler.sample(d, parity, 1, regime);
        SolutionSpace linear = solve_resampled(first, second);
        SolutionSpace space = filter_jacobi(linear);
        Prediction pred = predict(first);

        SweepCell cell;
        cell.dim = d;
        cell.parity = parity;
        cell.p_regime = regime;
        cell.predicted_dim = pred.expected_dim;
        cell.computed_dim = space.dim;
        cell.match = cell.predicted_dim == cell.computed_dim;
        cell.reason = to_string(pred.reason);
        cell.resample_consistent = linear.resample_consistent;
        for (const auto& C : linear.basis) {
          cell.antisymmetry = cell.antisymmetry && satisfies_antisymmetry(C, first);
          cell.first_row_relation = cell.first_row_relation && satisfies_first_row_relation(C, first);
        }
        if (space.dim == 1) {
          cell.generator = space.basis.front();
          cell.generator_matches = pred.expected_C.has_value() && *cell.generator == *pred.expected_C;
        }
        if (pred.reason == PredictionReason::admissible) {
          auto it = symbolic_cache.find(parity);
          if (it == symbolic_cache.end()) {
            ParamSpec sym = ParamSpec::symbolic(d, parity);
            for (int j = 1; j < d; ++j) sym.set_p(0, j, Scalar(1));
            QLATriple t{build_sigma(sym).to_operator(), build_theorem_C(d, Scalar::var(c_symbol())), sym.q};
            it = symbolic_cache.emplace(parity, check_axioms(t).all_zero()).first;
          }
          cell.symbolic_verified = it->second;
        }
        report.cells.push_back(std::move(cell));
      }
    }
    for (auto& t : targeted_samples(d)) {
      SolutionSpace linear = solve_linear(t.spec);
      t.linear_dim = linear.dim;
      t.computed_dim = linear.dim <= 1 ? filter_jacobi(linear).dim : -1;
      report.targeted.push_back(std::move(t));
    }
  }
  return report;
}

}  // namespace djqla
