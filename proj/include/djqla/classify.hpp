#pragma once

// Brute-force classification of brackets compatible with a standard braiding:
// the constraints linear in C are solved exactly at rational sample points and
// the result is compared with the closed-form prediction.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "djqla/qla.hpp"
#include "djqla/rmatrix.hpp"

namespace djqla {

struct SolutionSpace {
  std::vector<StructureConstants> basis;  // each normalized: first nonzero (k,i,j) entry is 1
  int dim = 0;
  ParamSpec sample;                        // the rational point the system was solved at
  std::optional<ParamSpec> resample;       // second independent point, when one was used
  bool resample_consistent = true;         // basis has zero residual at the second point
};

enum class PredictionReason { admissible, odd_first_generator, p1j_not_one, one_dimensional };

std::string to_string(PredictionReason r);
PredictionReason prediction_reason_from_string(const std::string& s);

struct Prediction {
  int expected_dim = 0;
  std::optional<StructureConstants> expected_C;  // theorem bracket with c = 1
  PredictionReason reason = PredictionReason::admissible;
};

/// Kernel of braided symmetry, E and F over the d^3 unknowns C^k_ij.
/// sample must have rational q and p; throws DegenerateParameters when q^4 = 1.
SolutionSpace solve_linear(const ParamSpec& sample);

/// Solves at two points and compares; throws GenericityFailure if the dimensions differ.
SolutionSpace solve_resampled(const ParamSpec& first, const ParamSpec& second);

/// Keeps a space of dimension <= 1 iff its generator satisfies the braided Jacobi
/// identity at the sample. Throws Unsupported for dim >= 2 (a genuine quadratic variety).
SolutionSpace filter_jacobi(const SolutionSpace& space);

/// Throws DegenerateParameters when q is rational with q^4 = 1.
Prediction predict(const ParamSpec& spec);

/// Normalizes C so that its first nonzero entry in (k, i, j) order is 1.
StructureConstants lex_normalize(const StructureConstants& C);

/// Checks C^k_ji = -p_ji C^k_ij and C^k_jj = 0.
bool satisfies_antisymmetry(const StructureConstants& C, const ParamSpec& spec);
/// Checks C^j_1j = p_1j C^k_1k for 1 < j < k.
bool satisfies_first_row_relation(const StructureConstants& C, const ParamSpec& spec);

/// Rational sample points. q is drawn from a fixed list of generic values and
/// each free p_ij is a ratio of two distinct primes.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  static const std::vector<Rational>& generic_q_values();
  Rational generic_p();
  /// q = generic_q_values()[q_index % size]; the p_1j follow the regime, every other p_ij is generic.
  ParamSpec sample(int dim, const std::vector<int>& parity, size_t q_index, const std::string& p_regime);

 private:
  std::mt19937_64 rng_;
};

/// p-regimes exercised per parity vector. d = 1 has only "all_p1j_one".
std::vector<std::string> p_regimes(int dim);

struct SweepCell {
  int dim = 0;
  std::vector<int> parity;
  std::string p_regime;
  int predicted_dim = 0;
  int computed_dim = 0;
  bool match = false;
  std::string reason;
  bool resample_consistent = true;
  bool antisymmetry = true;        // every kernel element satisfies the antisymmetry relations
  bool first_row_relation = true;  // every kernel element satisfies C^j_1j = p_1j C^k_1k
  bool generator_matches = true;   // the surviving generator equals the theorem bracket
  bool symbolic_verified = true;   // theorem bracket passes all axioms with symbolic q, c
  std::optional<StructureConstants> generator;

  bool ok() const {
    return match && resample_consistent && antisymmetry && first_row_relation && generator_matches &&
           symbolic_verified;
  }
  bool operator==(const SweepCell& o) const = default;
};

/// Special parameter choices outside the generic regimes; solved at one point.
struct TargetedSample {
  std::string label;
  ParamSpec spec;
  int predicted_dim = 0;
  int linear_dim = 0;     // kernel of the linear constraints
  int computed_dim = -1;  // after the Jacobi filter; -1 when linear_dim >= 2

  bool operator==(const TargetedSample& o) const = default;
};

struct SweepReport {
  int d_max = 0;
  std::uint64_t seed = 0;
  std::vector<SweepCell> cells;        // sorted by (dim, parity, p_regime)
  std::vector<TargetedSample> targeted;

  int mismatches() const;
  bool operator==(const SweepReport& o) const = default;
};

/// Throws InvalidSpec for d_max outside 1..4.
SweepReport classify_sweep(int d_max, std::uint64_t seed = 1);

/// The non-generic samples included in a sweep of the given dimension.
std::vector<TargetedSample> targeted_samples(int dim);

}  // namespace djqla
