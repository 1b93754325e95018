#include "gkz/orbits.hpp"

#include "gkz/error.hpp"

#include <algorithm>

namespace gkz {

namespace {

bool facets_all(const Cone& cone, std::size_t face, std::span<const GaussRat> beta, HClass wanted) {
  for (auto g : cone.faces().at(face).containing_facets)
    if (classify_h(cone.facets()[g].h, beta) != wanted) return false;
  return true;
}

void require_open_set(const Cone& cone, const OrbitSet& u) {
  for (auto f : u)
    if (f >= cone.faces().size()) fail(ErrorKind::InvalidInput, "open set names face " + std::to_string(f) + " which does not exist");
  if (!is_upward_closed(cone, u))
    fail(ErrorKind::NotUpwardClosed, "the face set does not describe a T_A-stable open set: it is not upward closed");
}

MgmDescriptor mgm_descriptor(const Cone& cone, std::size_t face, const OrbitSet& u, std::span<const GaussRat> beta,
                             long shift) {
  require_open_set(cone, u);
  MgmDescriptor out;
  out.face = face;
  out.exterior_rank = cone.quantities(face).codimension;
  out.shift = shift;
  if (!std::binary_search(u.begin(), u.end(), face)) return out;
  if (!in_CF_plus_Zd(cone, face, beta)) return out;
  out.classes = coset_classes(cone, face, beta);
  out.face_open_set = preimage_open_set(cone, face, u);
  out.zero = out.classes.empty();
  return out;
}

}  // namespace

bool orbit_in_fsupp(const NormalCone& normal, std::size_t face, std::span<const GaussRat> beta) {
  const Cone& cone = normal.cone();
  return in_CF_plus_Zd(cone, face, beta) && facets_all(cone, face, beta, HClass::NegInt);
}

bool orbit_in_cofsupp(const NormalCone& normal, std::size_t face, std::span<const GaussRat> beta) {
  const Cone& cone = normal.cone();
  return in_CF_plus_Zd(cone, face, beta) && facets_all(cone, face, beta, HClass::NatInt);
}

OrbitSet fsupp(const NormalCone& cone, std::span<const GaussRat> beta) {
  OrbitSet out;
  for (std::size_t f = 0; f < cone.cone().faces().size(); ++f)
    if (orbit_in_fsupp(cone, f, beta)) out.push_back(f);
  return out;
}

OrbitSet cofsupp(const NormalCone& cone, std::span<const GaussRat> beta) {
  OrbitSet out;
  for (std::size_t f = 0; f < cone.cone().faces().size(); ++f)
    if (orbit_in_cofsupp(cone, f, beta)) out.push_back(f);
  return out;
}

MgmClassification classify_mgm(const NormalCone& cone, std::span<const GaussRat> beta) {
  OrbitSet f = fsupp(cone, beta), c = cofsupp(cone, beta);
  MgmClassification out;
  std::set_intersection(f.begin(), f.end(), c.begin(), c.end(), std::back_inserter(out.common));
  out.dual_mgm = out.common == OrbitSet{cone.cone().top_face()};
  out.mgm = out.dual_mgm;
  return out;
}

bool is_upward_closed(const Cone& cone, const OrbitSet& u) {
  const auto& faces = cone.faces();
  for (auto f : u)
    for (std::size_t g = 0; g < faces.size(); ++g)
      if (is_subset(faces[f].columns, faces[g].columns) && !std::binary_search(u.begin(), u.end(), g)) return false;
  return true;
}

OrbitSet preimage_open_set(const Cone& cone, std::size_t face, const OrbitSet& u) {
  require_open_set(cone, u);
  OrbitSet out;
  for (auto g : cone.faces_below(face))
    if (std::binary_search(u.begin(), u.end(), g)) out.push_back(g);
  return out;
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::vector<std::pair<long, Integer>> MgmDescriptor::degrees() const {
  std::vector<std::pair<long, Integer>> out;
  if (zero) return out;
  for (std::size_t k = exterior_rank + 1; k-- > 0;)
    out.emplace_back(-static_cast<long>(k) - shift, binomial(exterior_rank, k) * Integer(classes.size()));
  return out;
}

MgmDescriptor mgm_project(const Cone& cone, std::size_t face, const OrbitSet& u, std::span<const GaussRat> beta) {
  return mgm_descriptor(cone, face, u, beta, 0);
}

MgmDescriptor mgm_restrict_dual(const Cone& cone, std::size_t face, const OrbitSet& u,
                                std::span<const GaussRat> beta) {
  return mgm_descriptor(cone, face, u, beta, -static_cast<long>(cone.quantities(face).codimension));
}

}  // namespace gkz
