#pragma once

// Random structures with exact rational entries and the fuzz driver that runs
// every identity and implication check over them.
//
// Lie algebras come from families where the Jacobi identity holds by
// construction (almost abelian, 2-step nilpotent, sums with su(2), sl(2),
// h_3, r_3 and aff(R)), followed by a random change of basis. LCS samples are
// built from an explicit LCS form: R + (contact algebra) with
// F = d eta - theta ^ eta, almost-abelian data with d theta = 0, or a
// symplectic form.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lcak/almost_abelian.hpp"

namespace lcak {

using Rng = std::mt19937_64;

// SplitMix64 of (seed, index); each sample owns its generator.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

// Small rational p / q with |p| <= range and q in {1, 2}.
Rational random_small(Rng& rng, int range = 2);

// I + sparse small rationals; never singular.
Matrix<Rational> random_basis_change(Rng& rng, int dim);

// The same structure written in the basis f_a = sum_i p(i, a) e_i.
template <class T>
AlmostHermitianStructure<T> transform(const AlmostHermitianStructure<T>& s, const Matrix<T>& p);

LieAlgebra<Rational> random_lie_algebra(Rng& rng, int dim, bool unimodular);

// Random (J, g) on a random algebra of the given even dimension.
AlmostHermitianStructure<Rational> random_hermitian(Rng& rng, int dim, bool unimodular);

// A random almost Hermitian structure whose fundamental form is LCS.
AlmostHermitianStructure<Rational> random_lcs(Rng& rng, int dim);

// Dimension-4 almost-abelian data with d theta = 0 (so LCS), drawn from
// strata that hit both sides of every condition.
AlmostAbelianParams<Rational> random_aa_lcs_params(Rng& rng, bool unimodular);

// (0, b, v, 0) with b != 0 and v != 0; `sign` picks the sign of b.v.
AlmostAbelianParams<Rational> random_aa_classification_params(Rng& rng, int sign);

// Random J-invariant 2-tensor (antisymmetric) for the wedge identity.
Matrix<Rational> random_j_invariant_form(Rng& rng, const AlmostHermitianStructure<Rational>& s);

Vector<Rational> random_vector(Rng& rng, int dim, int range = 2);

enum class FuzzFamily { AlmostAbelian4d, RandomUnimodular, RandomHermitian };
const char* to_string(FuzzFamily family);
std::optional<FuzzFamily> parse_family(std::string_view name);

struct FuzzOptions {
  std::uint64_t seed = 0;
  int count = 100;
  FuzzFamily family = FuzzFamily::RandomHermitian;
  ArithmeticMode mode = ArithmeticMode::Exact;
  double tolerance = 1e-8;
  int threads = 0;  // 0: hardware concurrency
};

struct FuzzFailure {
  int sample = 0;
  std::uint64_t seed = 0;
  std::string check;
  std::string residual;
  std::string structure;  // structure constants, J and g
};

struct FuzzCheckStats {
  std::string name;
  int applicable = 0;
  int passed = 0;
};

struct FuzzSummary {
  FuzzOptions options;
  int samples = 0;
  std::vector<FuzzCheckStats> checks;
  std::vector<FuzzFailure> identity_failures;

  bool ok() const { return identity_failures.empty(); }
  std::string to_json() const;
};

FuzzSummary fuzz(const FuzzOptions& options);

// Human-readable dump of a structure for failure triage.
template <class T>
std::string describe(const AlmostHermitianStructure<T>& s);

}  // namespace lcak
