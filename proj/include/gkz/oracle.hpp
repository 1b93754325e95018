#pragma once

// Brute-force reference implementations. They share no algorithmic code
// with the fast paths (no HNF, no Fourier-Motzkin, no face bases) and are
// only meant for small instances.

#include "gkz/cone.hpp"
#include "gkz/int_matrix.hpp"
#include "gkz/parameter.hpp"
#include "gkz/scalar.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gkz::oracle {

struct FacetRecord {
  ColumnSet columns;
  IntVector h;
  friend bool operator==(const FacetRecord&, const FacetRecord&) = default;
  friend auto operator<=>(const FacetRecord&, const FacetRecord&) = default;
};

/// Normals from cofactor expansions of every rank d-1 column subset, kept
/// when sign-consistent; sorted and duplicate-free.
std::vector<FacetRecord> brute_facets(const IntMatrix& a);

/// Lattice points of the cone in the box |x_i| <= 3 * max |a_ij| that are not
/// sums of columns, found by forward closure inside the box. Empty means the
/// box certifies normality. Assumes ZA = Z^d.
std::vector<IntVector> unsaturated_points(const IntMatrix& a);

/// Some z with |z_i| <= bound and M z = v.
std::optional<IntVector> image_member(std::span<const Integer> v, const IntMatrix& m, long bound);

/// Kernel vectors u != 0 with |u_i| <= bound.
std::vector<IntVector> kernel_vectors(const IntMatrix& a, long bound);

/// 2-variable feasibility of a1 x + a2 y >= b constraints by candidate vertices.
bool feasible_2d(const std::vector<std::pair<std::array<Integer, 2>, Integer>>& constraints);

/// Class of h_{F'}(lambda) for the facet F' = G ∩ F of F, computed as
/// h_G(lambda) / m with m the gcd of h_G over the columns of F.
HClass face_facet_class(const IntMatrix& a, const ColumnSet& face, const FacetRecord& g,
                        std::span<const GaussRat> lambda);

/// Violations of the gamma, lambda and beta' postconditions, evaluated with
/// the brute-force facets. Empty string list means all hold.
std::vector<std::string> gamma_violations(const IntMatrix& a, std::span<const GaussRat> beta,
                                          std::span<const Integer> gamma);
std::vector<std::string> lambda_violations(const IntMatrix& a, const ColumnSet& face, std::span<const GaussRat> beta,
                                           std::span<const GaussRat> lambda);
/// Facets F' = G ∩ F of F on which h_{F'}(lambda) is an integer while the
/// facets G over F' put h_G(beta) in both N and Z<0. Any such F' means no
/// admissible lambda exists in the class of lambda.
std::vector<ColumnSet> lambda_obstructions(const IntMatrix& a, const ColumnSet& face, std::span<const GaussRat> beta,
                                           std::span<const GaussRat> lambda);
std::vector<std::string> dual_violations(const IntMatrix& a, std::span<const GaussRat> beta,
                                         std::span<const GaussRat> dual);

/// beta in CF + Z^d, decided by brute search for an integer shift z (|z_i| <= bound)
/// making beta - z a rational combination of the columns of F.
bool in_CF_plus_Zd(const IntMatrix& a, const ColumnSet& face, std::span<const GaussRat> beta, long bound);

}  // namespace gkz::oracle
