#pragma once

// Fiber and cofiber supports as sets of torus orbits O_A(F), the (dual)
// mixed Gauss-Manin classification, and the restriction / projection
// descriptors of mixed Gauss-Manin systems along a face.
//
// An orbit set is a sorted list of face indices into Cone::faces(). A
// T_A-stable open set U is represented by the faces whose orbits it
// contains, which is upward closed in the face order.

#include "gkz/cone.hpp"
#include "gkz/normality.hpp"
#include "gkz/parameter.hpp"

#include <utility>
#include <vector>

namespace gkz {

using OrbitSet = std::vector<std::size_t>;

bool orbit_in_fsupp(const NormalCone& cone, std::size_t face, std::span<const GaussRat> beta);
bool orbit_in_cofsupp(const NormalCone& cone, std::size_t face, std::span<const GaussRat> beta);

OrbitSet fsupp(const NormalCone& cone, std::span<const GaussRat> beta);
OrbitSet cofsupp(const NormalCone& cone, std::span<const GaussRat> beta);

struct MgmClassification {
  bool mgm = false;
  bool dual_mgm = false;
  OrbitSet common;  // fsupp ∩ cofsupp
};

/// Exceptional parameters are empty for normal A, so both flags reduce to
/// fsupp ∩ cofsupp = {A}.
MgmClassification classify_mgm(const NormalCone& cone, std::span<const GaussRat> beta);

bool is_upward_closed(const Cone& cone, const OrbitSet& u);

/// The faces G' of F with O_A(G') in U, i.e. i_F^{-1}(U) as a face set of F.
/// Throws NotUpwardClosed.
OrbitSet preimage_open_set(const Cone& cone, std::size_t face, const OrbitSet& u);

struct MgmDescriptor {
  bool zero = true;
  std::size_t face = 0;
  std::vector<CosetClass> classes;
  OrbitSet face_open_set;       // i_F^{-1}(U)
  std::size_t exterior_rank = 0;  // d_{A/F}
  long shift = 0;               // degrees are -k - shift, 0 <= k <= exterior_rank

  /// (degree, multiplicity) in increasing degree; multiplicity counts all classes.
  std::vector<std::pair<long, Integer>> degrees() const;
};

/// pi_{F+} MGM_A(U, beta): shift 0.
MgmDescriptor mgm_project(const Cone& cone, std::size_t face, const OrbitSet& u, std::span<const GaussRat> beta);
/// i_F^+ MGM*_A(U, beta): the [-d_{A/F}] twist, shift -d_{A/F}.
MgmDescriptor mgm_restrict_dual(const Cone& cone, std::size_t face, const OrbitSet& u,
                                std::span<const GaussRat> beta);

Integer binomial(std::size_t n, std::size_t k);

}  // namespace gkz
