#include "gkz/presentation.hpp"

#include "gkz/error.hpp"

namespace gkz {

namespace {

BinomialGenerator from_difference(std::span<const Integer> u) {
  BinomialGenerator g{IntVector(u.size(), 0), IntVector(u.size(), 0)};
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0) g.u_plus[i] = u[i];
    else g.u_minus[i] = -u[i];
  }
  return g;
}

Exponent to_exponent(const IntVector& v) {
  Exponent out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) fail(ErrorKind::ScaleLimit, "exponent does not fit a machine word");
    out[i] = v[i].get_si();
  }
  return out;
}

ModuleDescriptor shaped(const Cone& cone, std::size_t face, Parameter lambda, long shift) {
  ModuleDescriptor out;
  out.zero = false;
  out.face = face;
  out.lambda = std::move(lambda);
  out.exterior_rank = cone.quantities(face).codimension;
  out.shift = shift;
  return out;
}

ModuleDescriptor zero_at(std::size_t face) {
  ModuleDescriptor out;
  out.face = face;
  return out;
}

bool containing_facets_are(const Cone& cone, std::size_t face, std::span<const GaussRat> beta, HClass wanted) {
  for (auto g : cone.faces().at(face).containing_facets)
    if (classify_h(cone.facets()[g].h, beta) != wanted) return false;
  return true;
}

// The property the theorem's proof needs from lambda: for each facet F' of F,
// h_F'(lambda) is in `cls` iff the orbit of F' lies in `in_support`.
template <typename InSupport>
void verify_lambda(const NormalCone& normal, std::size_t face, std::span<const GaussRat> lambda, HClass cls,
                   InSupport in_support) {
  const Cone& cone = normal.cone();
  if (cone.faces().at(face).columns.empty()) return;
  FaceBasis fb = cone.face_basis(face);
  for (std::size_t j = 0; j < fb.facets.size(); ++j) {
    bool lhs = classify(fb.evaluate_facet(j, lambda)) == cls;
    std::size_t sub = cone.face_index(fb.facets[j].columns);
    if (lhs != in_support(sub))
      fail(ErrorKind::Internal, "descriptor lambda disagrees with the support on facet " + std::to_string(j) + " of F");
  }
}

}  // namespace

std::vector<EulerOperator> euler_operators(const IntMatrix& a, std::span<const GaussRat> beta) {
  if (beta.size() != a.rows()) fail(ErrorKind::InvalidInput, "beta must have one entry per row of A");
  std::vector<EulerOperator> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    out.push_back({i, IntVector(r.begin(), r.end()), beta[i]});
  }
  return out;
}

std::vector<BinomialGenerator> lattice_ideal_generators(const IntMatrix& a) {
  std::vector<BinomialGenerator> out;
  for (const auto& u : kernel_lattice(a).vectors) out.push_back(from_difference(u));
  return out;
}

std::vector<BinomialGenerator> toric_ideal_generators(const IntMatrix& a, const GroebnerCaps& caps) {
  const std::size_t n = a.cols();
  // Variables x_1..x_n, then t; t x_1...x_n - 1 saturates at the product of the x_j.
  MonomialOrder order{1};
  std::vector<Binomial> gens;
  for (const auto& g : lattice_ideal_generators(a)) {
    Exponent plus = to_exponent(g.u_plus), minus = to_exponent(g.u_minus);
    plus.push_back(0);
    minus.push_back(0);
    Binomial b;
    if (make_binomial(plus, minus, order, b)) gens.push_back(std::move(b));
  }
  if (gens.empty()) return {};
  Binomial sat;
  make_binomial(Exponent(n + 1, 1), Exponent(n + 1, 0), order, sat);
  gens.push_back(sat);

  std::vector<Binomial> kept;
  for (auto& g : groebner_basis(gens, order, caps)) {
    if (g.lead[n] != 0 || g.trail[n] != 0) continue;
    g.lead.pop_back();
    g.trail.pop_back();
    kept.push_back(std::move(g));
  }
  // Elimination leaves a Groebner basis of the toric ideal in plain grevlex;
  // it is already reduced, but rerun to normalise.
  std::vector<BinomialGenerator> out;
  for (const auto& g : groebner_basis(kept, MonomialOrder{0}, caps)) {
    BinomialGenerator b{IntVector(n), IntVector(n)};
    for (std::size_t i = 0; i < n; ++i) {
      b.u_plus[i] = g.lead[i];
      b.u_minus[i] = g.trail[i];
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::string_view to_string(RestrictionMode mode) {
  return mode == RestrictionMode::Default ? "default" : "as-printed";
}

std::vector<std::pair<long, Integer>> ModuleDescriptor::degrees() const {
  std::vector<std::pair<long, Integer>> out;
  if (zero) return out;
  for (std::size_t k = exterior_rank + 1; k-- > 0;)
    out.emplace_back(-static_cast<long>(k) - shift, binomial(exterior_rank, k));
  return out;
}

ModuleDescriptor projection(const NormalCone& normal, std::size_t face, std::span<const GaussRat> beta) {
  const Cone& cone = normal.cone();
  if (!in_CF_plus_Zd(cone, face, beta) || !containing_facets_are(cone, face, beta, HClass::NegInt)) return zero_at(face);
  Parameter lambda = find_lambda(normal, face, beta, LambdaPolicy::MixedNonneg);
  verify_lambda(normal, face, lambda, HClass::NegInt, [&](std::size_t sub) { return orbit_in_fsupp(normal, sub, beta); });
  auto q = cone.quantities(face);
  return shaped(cone, face, std::move(lambda), static_cast<long>(q.missing_columns) - static_cast<long>(q.codimension));
}

ModuleDescriptor transformed_restriction(const NormalCone& normal, std::size_t face, std::span<const GaussRat> beta) {
  ModuleDescriptor out = projection(normal, face, beta);
  if (!out.zero) out.shift = -static_cast<long>(out.exterior_rank);
  return out;
}

ModuleDescriptor restriction(const NormalCone& normal, std::size_t face, std::span<const GaussRat> beta,
                             RestrictionMode mode) {
  const Cone& cone = normal.cone();
  const HClass wanted = mode == RestrictionMode::Default ? HClass::NatInt : HClass::NegInt;
  if (!in_CF_plus_Zd(cone, face, beta) || !containing_facets_are(cone, face, beta, wanted)) return zero_at(face);
  Parameter lambda;
  if (mode == RestrictionMode::Default) {
    lambda = find_lambda(normal, face, beta, LambdaPolicy::MixedNegative);
    verify_lambda(normal, face, lambda, HClass::NatInt,
                  [&](std::size_t sub) { return orbit_in_cofsupp(normal, sub, beta); });
  } else {
    lambda = find_lambda(normal, face, beta, LambdaPolicy::MixedNonneg);
  }
  return shaped(cone, face, std::move(lambda), -static_cast<long>(cone.quantities(face).missing_columns));
}

DualSystem dual_system(const NormalCone& normal, std::span<const GaussRat> beta) {
  const Cone& cone = normal.cone();
  auto c = is_homogeneous(cone.matrix());
  if (!c) fail(ErrorKind::NotHomogeneous, "duality requires A homogeneous: no c with <c, a_i> = 1 for every column");
  DualSystem out{dual_parameter(cone, beta), *c, {}, {}};
  out.fsupp_dual = fsupp(normal, out.beta_prime);
  out.cofsupp_dual = cofsupp(normal, out.beta_prime);
  if (out.fsupp_dual != cofsupp(normal, beta) || out.cofsupp_dual != fsupp(normal, beta))
    fail(ErrorKind::Internal, "beta' does not exchange fiber and cofiber supports");
  return out;
}

}  // namespace gkz
