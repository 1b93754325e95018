#pragma once

// Seeded random instances for property tests and acceptance runs.

#include "gkz/int_matrix.hpp"
#include "gkz/scalar.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gkz::testing {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// d x n with entries in [lo, hi].
  IntMatrix matrix(std::size_t d, std::size_t n, long lo, long hi);
  IntVector vector(std::size_t d, long lo, long hi);

  /// Entries drawn from {-3..3, ±1/2, ±1/3, 1 ± i/2}.
  GaussRat entry();
  Parameter parameter(std::size_t d);
  /// Integer parameter with entries in [-3, 3].
  Parameter integer_parameter(std::size_t d);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Nonzero columns, rank d and ZA = Z^d.
bool admissible(const IntMatrix& a);

/// Admissible matrices with d in [1, max_d], n in [d, max_n] and entries in
/// [0, max_entry]; those with normal semigroup only when `normal` is set.
std::vector<IntMatrix> random_cones(std::uint64_t seed, std::size_t count, std::size_t max_d, std::size_t max_n,
                                    long max_entry, bool normal);

struct Instance {
  IntMatrix a;
  Parameter beta;
};

/// The acceptance corpus: pointed full-rank normal A (d <= 3, n <= 6,
/// entries 0..4), each paired with one random parameter.
std::vector<Instance> normal_corpus(std::uint64_t seed, std::size_t count);

}  // namespace gkz::testing
