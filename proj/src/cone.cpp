#include "gkz/cone.hpp"

#include "gkz/error.hpp"
#include "gkz/fourier_motzkin.hpp"

#include <algorithm>
#include <set>

namespace gkz {

bool is_subset(const ColumnSet& small, const ColumnSet& large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

ColumnSet intersect(const ColumnSet& a, const ColumnSet& b) {
  ColumnSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ColumnSet all_columns(std::size_t n) {
  ColumnSet out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

namespace {

void require_nonzero_columns(const IntMatrix& a) {
  if (a.rows() == 0) fail(ErrorKind::InvalidInput, "matrix must have at least one row");
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < a.rows() && zero; ++i) zero = a(i, j) == 0;
    if (zero) fail(ErrorKind::InvalidInput, "column " + std::to_string(j) + " is zero");
  }
}

void require_full_rank_unimodular(const IntMatrix& a) {
  if (rank(a) < a.rows()) fail(ErrorKind::NotFullRank, "rank A < d: the cone is not full-dimensional");
  if (!column_lattice_coordinates(a).is_identity)
    fail(ErrorKind::LatticeIndex, "the columns of A do not generate Z^d; re-express A in a basis of ZA");
}

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(std::as_const(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Facet> facets(const IntMatrix& a) {
  require_nonzero_columns(a);
  require_full_rank_unimodular(a);
  const std::size_t d = a.rows(), n = a.cols();
  std::vector<Facet> found;

  for_each_subset(n, d - 1, [&](const std::vector<std::size_t>& subset) {
    for (const auto& f : found)
      if (is_subset(subset, f.columns)) return;
    IntMatrix s = a.select_columns(subset);
    if (rank(s) != d - 1) return;
    LatticeBasis normal = kernel_lattice(s.transpose());
    if (normal.rank() != 1) fail(ErrorKind::Internal, "facet normal is not unique");
    IntVector h = normal.vectors.front();
    bool any_positive = false, any_negative = false;
    for (std::size_t j = 0; j < n; ++j) {
      Integer value = evaluate(h, a.column(j));
      any_positive |= value > 0;
      any_negative |= value < 0;
    }
    if (any_positive && any_negative) return;
    if (any_negative)
      for (auto& c : h) c = -c;
    ColumnSet zero;
    for (std::size_t j = 0; j < n; ++j)
      if (evaluate(h, a.column(j)) == 0) zero.push_back(j);
    found.push_back(Facet{std::move(zero), SupportFn{std::move(h)}});
  });

  std::sort(found.begin(), found.end(), [](const Facet& x, const Facet& y) { return x.columns < y.columns; });
  return found;
}

std::vector<Face> face_lattice(const IntMatrix& a) {
  const auto facet_list = facets(a);
  std::set<ColumnSet> sets{all_columns(a.cols())};
  for (const auto& f : facet_list) {
    std::vector<ColumnSet> fresh;
    for (const auto& s : sets) fresh.push_back(intersect(s, f.columns));
    sets.insert(fresh.begin(), fresh.end());
  }
  std::vector<Face> faces;
  for (const auto& s : sets) {
    Face face{s, column_rank(a, s), {}};
    for (std::size_t g = 0; g < facet_list.size(); ++g)
      if (is_subset(s, facet_list[g].columns)) face.containing_facets.push_back(g);
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) {
    if (x.rank != y.rank) return x.rank < y.rank;
    return x.columns < y.columns;
  });
  return faces;
}

bool is_pointed(const IntMatrix& a) {
  std::vector<LinearConstraint> constraints;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    IntVector column = a.column(j);
    if (gcd(column) == 0) continue;
    constraints.push_back({std::move(column), Relation::GreaterEqual, 1});
  }
  return rational_lp_feasible(a.rows(), constraints).has_value();
}

std::optional<RatVector> is_homogeneous(const IntMatrix& a) {
  RatVector ones(a.cols(), 1);
  return solve_rational(a.transpose(), ones);
}

Parameter FaceBasis::coordinates_of(std::span<const GaussRat> point) const {
  auto mu = solve_gaussian(basis.as_columns(), point);
  if (!mu) fail(ErrorKind::InvalidInput, "point is not in the span of the face");
  return *mu;
}

GaussRat FaceBasis::evaluate_facet(std::size_t index, std::span<const GaussRat> point) const {
  return facets.at(index).h(coordinates_of(point));
}

Cone::Cone(IntMatrix a) : a_(std::move(a)) {
  facets_ = gkz::facets(a_);
  faces_ = face_lattice(a_);
  pointed_ = is_pointed(a_);
}

std::optional<std::size_t> Cone::find_face(const ColumnSet& columns) const {
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].columns == columns) return i;
  return std::nullopt;
}

std::size_t Cone::face_index(const ColumnSet& columns) const {
  auto found = find_face(columns);
  if (!found) fail(ErrorKind::InvalidInput, "the given columns are not the column set of a face of A");
  return *found;
}

FaceQuantities Cone::quantities(std::size_t face) const {
  const Face& f = faces_.at(face);
  return {dimension() - f.rank, columns() - f.columns.size()};
}

std::size_t Cone::smallest_face_containing(const ColumnSet& columns) const {
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (is_subset(columns, faces_[i].columns)) return i;  // sorted by rank
  return top_face();
}

std::vector<std::size_t> Cone::faces_below(std::size_t face) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (is_subset(faces_[i].columns, faces_.at(face).columns)) out.push_back(i);
  return out;
}

FaceBasis Cone::face_basis(std::size_t face) const {
  const Face& f = faces_.at(face);
  if (f.columns.empty()) fail(ErrorKind::EmptyFace, "the empty face has no lattice basis");
  IntMatrix columns = a_.select_columns(f.columns);
  LatticeCoordinates coords = column_lattice_coordinates(columns);

  FaceBasis out;
  out.basis.ambient_dim = dimension();
  for (std::size_t k = 0; k < coords.basis.cols(); ++k) out.basis.vectors.push_back(coords.basis.column(k));
  out.coordinates = coords.coordinates;
  for (auto local : gkz::facets(coords.coordinates)) {
    ColumnSet global;
    for (auto c : local.columns) global.push_back(f.columns[c]);
    out.facets.push_back(Facet{std::move(global), std::move(local.h)});
  }
  return out;
}

bool Cone::contains(std::span<const Integer> point) const {
  for (const auto& f : facets_)
    if (f.h(point) < 0) return false;
  return true;
}

FaceQuantities face_quantities(const Cone& cone, std::size_t face) { return cone.quantities(face); }

FaceBasis face_basis(const Cone& cone, std::size_t face) { return cone.face_basis(face); }

}  // namespace gkz
