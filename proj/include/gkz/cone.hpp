#pragma once

// Polyhedral combinatorics of the cone R_{>=0} A: facets with their primitive
// integral support functions, the face lattice, pointedness and homogeneity.
//
// A face is identified with the set of all columns of A lying on it, so face
// order is inclusion of column sets.

#include "gkz/int_matrix.hpp"
#include "gkz/lattice.hpp"
#include "gkz/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gkz {

using ColumnSet = std::vector<std::size_t>;  // sorted, duplicate-free

/// Integer functional h(x) = <coefficients, x>; primitive, nonnegative on the
/// columns and vanishing exactly on its facet.
struct SupportFn {
  IntVector coefficients;

  Integer operator()(std::span<const Integer> x) const { return evaluate(coefficients, x); }
  GaussRat operator()(std::span<const GaussRat> x) const { return evaluate(coefficients, x); }
  friend bool operator==(const SupportFn&, const SupportFn&) = default;
};

struct Facet {
  ColumnSet columns;
  SupportFn h;
};

struct Face {
  ColumnSet columns;
  std::size_t rank = 0;
  std::vector<std::size_t> containing_facets;  // indices into the facet list
};

/// All facets, sorted by column set. Requires rank A = d (NotFullRank) and
/// ZA = Z^d (LatticeIndex).
std::vector<Facet> facets(const IntMatrix& a);

/// Every face, sorted by (rank, columns); the top face comes last.
std::vector<Face> face_lattice(const IntMatrix& a);

/// True iff R_{>=0} A contains no line. Zero columns are ignored.
bool is_pointed(const IntMatrix& a);

/// Some c with <c, a_i> = 1 for all columns, free coordinates set to zero.
std::optional<RatVector> is_homogeneous(const IntMatrix& a);

struct FaceQuantities {
  std::size_t codimension;     // d - rank F
  std::size_t missing_columns; // n - #columns of F
};

/// The facet data of a nonempty face F, computed inside ZF.
struct FaceBasis {
  LatticeBasis basis;      // Z-basis of ZF (Hermite normal form)
  IntMatrix coordinates;   // columns of F written in that basis
  std::vector<Facet> facets;  // facets of F: columns are indices into A, h acts on basis coordinates

  /// Coordinates of a point of CF in the chosen basis; throws if outside CF.
  Parameter coordinates_of(std::span<const GaussRat> point) const;
  /// h_{F'}(point) for the facet F' = facets[index] of F.
  GaussRat evaluate_facet(std::size_t index, std::span<const GaussRat> point) const;
};

/// Validated cone data for a matrix with nonzero columns, rank d and ZA = Z^d.
class Cone {
 public:
  explicit Cone(IntMatrix a);

  const IntMatrix& matrix() const { return a_; }
  std::size_t dimension() const { return a_.rows(); }
  std::size_t columns() const { return a_.cols(); }

  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  bool pointed() const { return pointed_; }

  std::size_t top_face() const { return faces_.size() - 1; }
  std::optional<std::size_t> find_face(const ColumnSet& columns) const;
  /// Index of the face with exactly these columns; throws InvalidInput.
  std::size_t face_index(const ColumnSet& columns) const;

  FaceQuantities quantities(std::size_t face) const;
  /// Face of A spanned by a set of columns that need not be closed.
  std::size_t smallest_face_containing(const ColumnSet& columns) const;
  /// Faces G' with G' contained in F (the face lattice of F).
  std::vector<std::size_t> faces_below(std::size_t face) const;

  FaceBasis face_basis(std::size_t face) const;

  bool contains(std::span<const Integer> point) const;

 private:
  IntMatrix a_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  bool pointed_ = false;
};

FaceQuantities face_quantities(const Cone& cone, std::size_t face);
FaceBasis face_basis(const Cone& cone, std::size_t face);

bool is_subset(const ColumnSet& small, const ColumnSet& large);
ColumnSet intersect(const ColumnSet& a, const ColumnSet& b);
ColumnSet all_columns(std::size_t n);

}  // namespace gkz
