#pragma once

// Exact integer lattice algebra: Hermite and Smith normal forms, integer
// kernels, image-lattice membership and rational linear solves.
//
// HNF convention (row style): U * M = H with U unimodular; H is in row
// echelon form, every pivot is positive, and entries above a pivot p lie in
// [0, p). Zero rows of H come last.

#include "gkz/int_matrix.hpp"
#include "gkz/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace gkz {

struct LatticeBasis {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> vectors;

  std::size_t rank() const { return vectors.size(); }
  /// ambient_dim x rank matrix whose columns are the basis vectors.
  IntMatrix as_columns() const { return IntMatrix::from_columns(vectors, ambient_dim); }
};

struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;  // one per nonzero row of h
};

struct SmithForm {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
  std::vector<Integer> diagonal;  // nonzero invariant factors d_1 | d_2 | ...
};

HermiteForm hnf(const IntMatrix& m);
SmithForm snf(const IntMatrix& m);

/// Saturated basis of {u in Z^n : A u = 0}, given in Hermite normal form.
LatticeBasis kernel_lattice(const IntMatrix& a);

/// Some z with M z = v, or nothing when v is outside M Z^k.
std::optional<IntVector> member_of_image_lattice(std::span<const Integer> v, const IntMatrix& m);

/// A solution of M x = b over Q with free variables set to zero.
std::optional<RatVector> solve_rational(const IntMatrix& m, std::span<const Rational> b);
std::optional<Parameter> solve_gaussian(const IntMatrix& m, std::span<const GaussRat> b);

/// Product of the nonzero invariant factors: [sat(L) : L] for the column lattice.
Integer lattice_index(const IntMatrix& m);

/// Re-expression of the columns of A in a Z-basis of ZA: A = basis * coordinates.
struct LatticeCoordinates {
  IntMatrix basis;        // d x r, columns form a Z-basis of ZA
  IntMatrix coordinates;  // r x n
  bool is_identity = false;  // ZA = Z^d, coordinates == A
};

LatticeCoordinates column_lattice_coordinates(const IntMatrix& a);

}  // namespace gkz
