#include "gkz/normality.hpp"

#include "gkz/cone.hpp"
#include "gkz/error.hpp"
#include "gkz/fourier_motzkin.hpp"
#include "gkz/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gkz {

namespace {

bool member(const IntVector& x, const IntMatrix& a, std::span<const Integer> grading,
            std::map<IntVector, bool>& memo) {
  if (std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; })) return true;
  if (evaluate(grading, x) <= 0) return false;
  if (auto it = memo.find(x); it != memo.end()) return it->second;
  bool found = false;
  for (std::size_t j = 0; j < a.cols() && !found; ++j) {
    IntVector rest = x;
    bool zero_column = true;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      rest[i] -= a(i, j);
      zero_column = zero_column && a(i, j) == 0;
    }
    if (!zero_column) found = member(rest, a, grading, memo);
  }
  memo.emplace(x, found);
  return found;
}

// Lattice points M * [0,1)^r of the half-open parallelepiped of a square
// nonsingular M: one per class of Z^r / M Z^r.
std::vector<IntVector> parallelepiped_points(const IntMatrix& m, std::size_t limit) {
  const std::size_t r = m.rows();
  if (abs(determinant(m)) > limit) fail(ErrorKind::ScaleLimit, "parallelepiped enumeration exceeds the candidate cap");
  auto reduce = [&](const IntVector& x) {
    RatVector xr(x.begin(), x.end());
    RatVector t = *solve_rational(m, xr);
    IntVector fl(r);
    for (std::size_t i = 0; i < r; ++i) fl[i] = floor(t[i]);
    IntVector shift = m * std::span<const Integer>(fl);
    IntVector out(r);
    for (std::size_t i = 0; i < r; ++i) out[i] = x[i] - shift[i];
    return out;
  };
  std::set<IntVector> seen{IntVector(r, 0)};
  std::deque<IntVector> queue{IntVector(r, 0)};
  while (!queue.empty()) {
    IntVector x = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      IntVector y = x;
      y[j] += 1;
      y = reduce(y);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

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

std::optional<IntVector> positive_grading(const IntMatrix& a) {
  std::vector<LinearConstraint> constraints;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    IntVector column = a.column(j);
    if (gcd(column) == 0) continue;
    constraints.push_back({std::move(column), Relation::GreaterEqual, 1});
  }
  auto c = rational_lp_feasible(a.rows(), constraints);
  if (!c) return std::nullopt;
  Integer l = lcm_of_denominators(*c);
  IntVector out(c->size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Rational((*c)[i] * l).get_num();
  Integer g = gcd(out);
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

bool in_semigroup(std::span<const Integer> v, const IntMatrix& a, std::span<const Integer> grading) {
  std::map<IntVector, bool> memo;
  return member(IntVector(v.begin(), v.end()), a, grading, memo);
}

NormalityCertificate is_normal(const IntMatrix& a, const NormalityOptions& options) {
  if (!is_pointed(a)) fail(ErrorKind::NotPointed, "the cone of A contains a line");

  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (gcd(a.column(j)) != 0) nonzero.push_back(j);

  NormalityCertificate cert;
  if (nonzero.empty()) {
    cert.normal = true;
    return cert;
  }

  // Work in ZA-coordinates, where the columns generate Z^r.
  LatticeCoordinates coords = column_lattice_coordinates(a.select_columns(nonzero));
  const IntMatrix& b = coords.coordinates;
  const std::size_t r = b.rows();
  cert.grading = *positive_grading(b);

  Integer max_degree = 0;
  for (std::size_t j = 0; j < b.cols(); ++j) max_degree = std::max(max_degree, evaluate(cert.grading, b.column(j)));
  const Integer cap = options.degree_cap.value_or(10 * max_degree);

  std::set<IntVector> candidates;
  for (std::size_t j = 0; j < b.cols(); ++j) candidates.insert(b.column(j));
  for_each_subset(b.cols(), r, [&](const std::vector<std::size_t>& subset) {
    IntMatrix m = b.select_columns(subset);
    if (determinant(m) == 0) return;
    for (auto& p : parallelepiped_points(m, options.max_candidates)) {
      if (gcd(p) == 0) continue;
      if (evaluate(cert.grading, p) > cap)
        fail(ErrorKind::ScaleLimit, "Hilbert basis candidate above the degree cap " + to_string(cap));
      candidates.insert(std::move(p));
      if (candidates.size() > options.max_candidates)
        fail(ErrorKind::ScaleLimit, "too many Hilbert basis candidates");
    }
  });

  std::vector<std::pair<Integer, IntVector>> ordered;
  for (const auto& c : candidates) ordered.emplace_back(evaluate(cert.grading, c), c);
  std::sort(ordered.begin(), ordered.end());

  const auto cone_facets = facets(b);
  auto in_cone = [&](const IntVector& x) {
    return std::all_of(cone_facets.begin(), cone_facets.end(), [&](const Facet& f) { return f.h(x) >= 0; });
  };

  std::vector<IntVector> hilbert;
  for (const auto& [degree, x] : ordered) {
    bool reducible = false;
    for (const auto& h : hilbert) {
      IntVector diff = x;
      for (std::size_t i = 0; i < r; ++i) diff[i] -= h[i];
      if (in_cone(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hilbert.push_back(x);
  }

  std::map<IntVector, bool> memo;
  cert.normal = true;
  for (const auto& h : hilbert) {
    if (!member(h, b, cert.grading, memo)) {
      cert.normal = false;
      if (!cert.witness) cert.witness = coords.basis * std::span<const Integer>(h);
    }
    cert.hilbert_basis.push_back(coords.basis * std::span<const Integer>(h));
  }
  return cert;
}

NormalCone::NormalCone(Cone cone, const NormalityOptions& options)
    : cone_(std::move(cone)), certificate_(is_normal(cone_.matrix(), options)) {
  if (!certificate_.normal) {
    std::string point;
    for (const auto& v : *certificate_.witness) point += (point.empty() ? "" : ",") + to_string(v);
    fail(ErrorKind::NotNormal, "the semigroup NA is not normal; (" + point + ") lies in the cone and in ZA but not in NA");
  }
}

}  // namespace gkz
