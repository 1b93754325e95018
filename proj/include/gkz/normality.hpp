#pragma once

// Normality of the semigroup NA: NA = ZA ∩ R_{>=0}A.
//
// Every irreducible lattice point of the cone is a column or a lattice point
// of the half-open parallelepiped spanned by some linearly independent set
// of columns, so those candidates decide normality and contain the Hilbert
// basis.

#include "gkz/cone.hpp"
#include "gkz/int_matrix.hpp"
#include "gkz/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gkz {

struct NormalityOptions {
  std::optional<Integer> degree_cap;  // default: 10 * max column degree
  std::size_t max_candidates = 200000;
};

struct NormalityCertificate {
  bool normal = false;
  std::vector<IntVector> hilbert_basis;  // in the coordinates of A, sorted by (degree, lex)
  std::optional<IntVector> witness;      // in the cone and in ZA but not in NA
  IntVector grading;                     // positive on every nonzero column; acts on ZA-coordinates
};

/// Throws NotPointed, or ScaleLimit when a cap is exceeded.
NormalityCertificate is_normal(const IntMatrix& a, const NormalityOptions& options = {});

/// Integer functional strictly positive on every nonzero column, or nothing
/// when the cone is not pointed.
std::optional<IntVector> positive_grading(const IntMatrix& a);

/// Whether v lies in the semigroup generated by the columns; needs a grading
/// that is positive on the columns.
bool in_semigroup(std::span<const Integer> v, const IntMatrix& a, std::span<const Integer> grading);

/// A cone whose semigroup has been certified normal. Construction throws
/// NotNormal (or NotPointed, ScaleLimit) otherwise.
class NormalCone {
 public:
  explicit NormalCone(Cone cone, const NormalityOptions& options = {});
  explicit NormalCone(const IntMatrix& a, const NormalityOptions& options = {})
      : NormalCone(Cone(a), options) {}

  const Cone& cone() const { return cone_; }
  const NormalityCertificate& certificate() const { return certificate_; }
  operator const Cone&() const { return cone_; }

 private:
  Cone cone_;
  NormalityCertificate certificate_;
};

}  // namespace gkz
