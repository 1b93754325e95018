#include "gkz/parameter.hpp"

#include "gkz/error.hpp"
#include "gkz/fourier_motzkin.hpp"

#include <algorithm>
#include <cmath>

namespace gkz {

namespace {

IntMatrix face_matrix(const Cone& cone, std::size_t face) {
  return cone.matrix().select_columns(cone.faces().at(face).columns);
}

// Rows: a Z-basis of the integer functionals vanishing on CF.
IntMatrix annihilator(const Cone& cone, std::size_t face) {
  LatticeBasis l = kernel_lattice(face_matrix(cone, face).transpose());
  return IntMatrix::from_rows(l.vectors, cone.dimension());
}

std::string show(std::span<const GaussRat> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

std::string show(std::span<const Integer> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

void require_dimension(const Cone& cone, std::span<const GaussRat> beta) {
  if (beta.size() != cone.dimension())
    fail(ErrorKind::InvalidInput, "parameter has length " + std::to_string(beta.size()) + ", expected " +
                                      std::to_string(cone.dimension()));
}

// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u) {
  const std::size_t n = u.rows();
  IntMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n, 0);
    e[j] = 1;
    RatVector x = *solve_rational(u, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = x[i].get_num();
  }
  return inv;
}

IntVector clear_denominators(const RatVector& x) {
  Integer l = lcm_of_denominators(x);
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = Rational(x[i] * l).get_num();
  Integer g = gcd(out);
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

Integer ceil_div(const Integer& a, const Integer& b) { return ceil(Rational(a, b)); }

}  // namespace

std::string_view to_string(HClass c) {
  switch (c) {
    case HClass::NatInt: return "N";
    case HClass::NegInt: return "Z<0";
    case HClass::NonInt: return "not-integer";
  }
  return "?";
}

HClass classify(const GaussRat& value) {
  if (!value.is_rational_integer()) return HClass::NonInt;
  return value.re() >= 0 ? HClass::NatInt : HClass::NegInt;
}

HClass classify_h(const SupportFn& h, std::span<const GaussRat> beta) { return classify(h(beta)); }

std::optional<Parameter> in_CF_plus_Zd(const Cone& cone, std::size_t face, std::span<const GaussRat> beta) {
  require_dimension(cone, beta);
  IntMatrix l = annihilator(cone, face);
  IntVector values(l.rows());
  bool in_span = true;
  for (std::size_t i = 0; i < l.rows(); ++i) {
    GaussRat v = evaluate(l.row(i), beta);
    if (!v.is_rational_integer()) return std::nullopt;
    values[i] = v.re().get_num();
    in_span = in_span && values[i] == 0;
  }
  Parameter lambda(beta.begin(), beta.end());
  if (in_span) return lambda;
  auto z = member_of_image_lattice(values, l);
  if (!z) return std::nullopt;
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] -= GaussRat((*z)[i]);
  return lambda;
}

namespace {

struct SaturatedFace {
  IntMatrix saturation;  // d x r, columns: Z-basis of Z^d ∩ CF
  SmithForm smith;       // of the r x k coordinates of the columns of F
};

SaturatedFace saturate(const Cone& cone, std::size_t face) {
  LatticeBasis sat = kernel_lattice(annihilator(cone, face));
  IntMatrix s = sat.as_columns();
  const ColumnSet& columns = cone.faces().at(face).columns;
  IntMatrix coords(s.cols(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto z = member_of_image_lattice(cone.matrix().column(columns[j]), s);
    if (!z) fail(ErrorKind::Internal, "face column outside its saturation");
    for (std::size_t i = 0; i < s.cols(); ++i) coords(i, j) = (*z)[i];
  }
  return {s, snf(coords)};
}

}  // namespace

Integer saturation_index(const Cone& cone, std::size_t face) {
  Integer index = 1;
  for (const auto& d : saturate(cone, face).smith.diagonal) index *= d;
  return index;
}

std::vector<CosetClass> coset_classes(const Cone& cone, std::size_t face, std::span<const GaussRat> beta) {
  auto witness = in_CF_plus_Zd(cone, face, beta);
  if (!witness) fail(ErrorKind::NotInCoset, "beta is not in CF + Z^d");

  LatticeBasis modulus{cone.dimension(), {}};
  IntMatrix f = face_matrix(cone, face);
  if (f.cols() > 0) {
    LatticeCoordinates zf = column_lattice_coordinates(f);
    for (std::size_t k = 0; k < zf.basis.cols(); ++k) modulus.vectors.push_back(zf.basis.column(k));
  }

  SaturatedFace sf = saturate(cone, face);
  const std::size_t r = sf.saturation.cols();
  if (sf.smith.diagonal.size() != r) fail(ErrorKind::Internal, "face columns do not span CF");
  IntMatrix u_inv = unimodular_inverse(sf.smith.u);

  std::vector<CosetClass> out;
  IntVector e(r, 0);
  while (true) {
    IntVector x = u_inv * std::span<const Integer>(e);
    IntVector shift = sf.saturation * std::span<const Integer>(x);
    Parameter lambda = *witness;
    for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] += GaussRat(shift[i]);
    out.push_back({std::move(lambda), modulus});
    // Odometer over the product of Z / d_i.
    std::size_t i = 0;
    while (i < r && ++e[i] == sf.smith.diagonal[i]) e[i++] = 0;
    if (i == r) break;
  }
  return out;
}

bool not_strongly_resonant(const Cone& cone, std::span<const GaussRat> beta) {
  require_dimension(cone, beta);
  return std::none_of(cone.facets().begin(), cone.facets().end(),
                      [&](const Facet& g) { return classify_h(g.h, beta) == HClass::NegInt; });
}

std::optional<std::string> check_gamma(const Cone& cone, std::span<const GaussRat> beta,
                                       std::span<const Integer> gamma) {
  for (std::size_t g = 0; g < cone.facets().size(); ++g) {
    const SupportFn& h = cone.facets()[g].h;
    Integer value = h(gamma);
    HClass c = classify_h(h, beta);
    bool ok = (c == HClass::NonInt && value != 0) || (c == HClass::NatInt && value > 0) ||
              (c == HClass::NegInt && value < 0);
    if (!ok)
      return "facet " + std::to_string(g) + ": h_G(beta) is " + std::string(to_string(c)) + " but h_G(gamma) = " +
             to_string(value);
  }
  return std::nullopt;
}

IntVector find_gamma(const Cone& cone, std::span<const GaussRat> beta) {
  require_dimension(cone, beta);
  const auto& fs = cone.facets();
  auto solve_with = [&](auto positive) {
    std::vector<LinearConstraint> constraints;
    for (std::size_t g = 0; g < fs.size(); ++g) {
      if (positive(g)) constraints.push_back({fs[g].h.coefficients, Relation::GreaterEqual, 1});
      else constraints.push_back({fs[g].h.coefficients, Relation::LessEqual, -1});
    }
    return rational_lp_feasible(cone.dimension(), constraints);
  };

  // Non-integral facet values first try the positive side.
  auto x = solve_with([&](std::size_t g) { return classify_h(fs[g].h, beta) != HClass::NegInt; });
  if (!x) {
    // Separate by the sign on Re(beta), which agrees with beta on integral values.
    RatVector re(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) re[i] = beta[i].re();
    x = solve_with([&](std::size_t g) { return evaluate(fs[g].h.coefficients, re) >= 0; });
  }
  if (!x) fail(ErrorKind::Internal, "no gamma separates the facet classes of beta = " + show(beta));
  IntVector gamma = clear_denominators(*x);
  if (auto bad = check_gamma(cone, beta, gamma))
    fail(ErrorKind::Internal, "gamma " + show(std::span<const Integer>(gamma)) + " fails: " + *bad);
  return gamma;
}

std::vector<std::vector<std::size_t>> facets_over(const Cone& cone, std::size_t face) {
  const ColumnSet& columns = cone.faces().at(face).columns;
  std::vector<std::vector<std::size_t>> out;
  if (columns.empty()) return out;
  for (const auto& local : cone.face_basis(face).facets) {
    std::vector<std::size_t> over;
    for (std::size_t g = 0; g < cone.facets().size(); ++g)
      if (intersect(cone.facets()[g].columns, columns) == local.columns) over.push_back(g);
    out.push_back(std::move(over));
  }
  return out;
}

std::optional<std::string> check_lambda(const Cone& cone, std::size_t face, std::span<const GaussRat> beta,
                                        std::span<const GaussRat> lambda) {
  if (lambda.size() != cone.dimension()) return "lambda has the wrong length";
  IntMatrix l = annihilator(cone, face);
  for (std::size_t i = 0; i < l.rows(); ++i)
    if (evaluate(l.row(i), lambda) != GaussRat(0)) return "lambda is not in CF";
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (!(beta[i] - lambda[i]).is_rational_integer()) return "beta - lambda is not in Z^d";
  if (cone.faces().at(face).columns.empty()) return std::nullopt;

  FaceBasis fb = cone.face_basis(face);
  auto over = facets_over(cone, face);
  for (std::size_t j = 0; j < fb.facets.size(); ++j) {
    HClass c = classify(fb.evaluate_facet(j, lambda));
    if (c == HClass::NonInt) continue;
    for (auto g : over[j]) {
      HClass cg = classify_h(cone.facets()[g].h, beta);
      if (cg != c)
        return "facet " + std::to_string(j) + " of F has h(lambda) in " + std::string(to_string(c)) +
               " but facet " + std::to_string(g) + " of A has h(beta) " + std::string(to_string(cg));
    }
  }
  return std::nullopt;
}

Parameter find_lambda(const NormalCone& normal, std::size_t face, std::span<const GaussRat> beta,
                      LambdaPolicy policy) {
  const Cone& cone = normal.cone();
  auto witness = in_CF_plus_Zd(cone, face, beta);
  if (!witness) fail(ErrorKind::NotInCoset, "beta = " + show(beta) + " is not in CF + Z^d");
  const ColumnSet& columns = cone.faces().at(face).columns;
  if (columns.empty()) return *witness;

  FaceBasis fb = cone.face_basis(face);
  auto over = facets_over(cone, face);
  const std::size_t r = fb.basis.rank();
  Parameter mu = fb.coordinates_of(*witness);

  // target[j]: +1 wants h_j(lambda) >= 0, -1 wants h_j(lambda) <= -1, 0 is free
  // (a non-integral value, constant on the coset).
  std::vector<int> target(fb.facets.size(), 0);
  for (std::size_t j = 0; j < fb.facets.size(); ++j) {
    if (!fb.facets[j].h(mu).is_rational_integer()) continue;
    bool all_nat = true, all_neg = true;
    for (auto g : over[j]) {
      HClass c = classify_h(cone.facets()[g].h, beta);
      all_nat = all_nat && c == HClass::NatInt;
      all_neg = all_neg && c == HClass::NegInt;
    }
    if (all_nat) target[j] = 1;
    else if (all_neg) target[j] = -1;
    else if (policy == LambdaPolicy::MixedNonneg) target[j] = 1;
    else if (policy == LambdaPolicy::MixedNegative) target[j] = -1;
    else
      fail(ErrorKind::LambdaInfeasible,
           "no lambda exists: the facets of A over facet " + std::to_string(j) +
               " of F take both signs on beta = " + show(beta) + ", while h(lambda) is an integer on the whole coset");
  }

  auto value = [&](std::size_t j, const Parameter& point) { return fb.facets[j].h(point).re(); };
  auto satisfied = [&](const Parameter& point) {
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (target[j] > 0 && value(j, point) < 0) return false;
      if (target[j] < 0 && value(j, point) > -1) return false;
    }
    return true;
  };

  Parameter lambda;
  if (satisfied(mu)) {
    lambda = *witness;
  } else {
    // alpha in ZF, strictly on the target side of every constrained facet.
    std::vector<LinearConstraint> constraints;
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (target[j] > 0) constraints.push_back({fb.facets[j].h.coefficients, Relation::GreaterEqual, 1});
      if (target[j] < 0) constraints.push_back({fb.facets[j].h.coefficients, Relation::LessEqual, -1});
    }
    auto x = rational_lp_feasible(r, constraints);
    if (!x)
      fail(ErrorKind::LambdaInfeasible, "the required sign pattern on the facets of F has no point in RF");
    // Scaling keeps every constraint strict, so this is already a chamber point.
    IntVector alpha = clear_denominators(*x);
    auto in_chamber = [&](const IntVector& y) {
      for (std::size_t j = 0; j < target.size(); ++j) {
        Integer v = fb.facets[j].h(y);
        if ((target[j] > 0 && v < 1) || (target[j] < 0 && v > -1)) return false;
      }
      return true;
    };
    if (!in_chamber(alpha)) fail(ErrorKind::Internal, "chamber point construction failed");
    Integer bound = 0;
    for (const auto& v : alpha) bound = std::max(bound, Integer(abs(v)));
    // Prefer the lexicographically least point of minimal max-norm while the box stays small.
    for (long radius = 1; radius < bound && std::pow(2.0 * radius + 1, double(r)) <= 1e6; ++radius) {
      IntVector y(r, Integer(-radius));
      bool found = false;
      while (true) {
        bool on_shell = std::any_of(y.begin(), y.end(), [&](const Integer& v) { return abs(v) == radius; });
        if (on_shell && in_chamber(y)) {
          alpha = y;
          found = true;
          break;
        }
        std::size_t i = r;
        while (i > 0 && y[i - 1] == radius) y[--i] = -radius;
        if (i == 0) break;
        ++y[i - 1];
      }
      if (found) break;
    }

    // lambda0 = witness + k * (sum of the columns of F), with the least k such
    // that h_j(lambda0) >= |h_j(alpha)| on constrained facets and lambda0 is
    // not strongly resonant.
    IntVector sum_coords(r, 0), sum_ambient(cone.dimension(), 0);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (std::size_t i = 0; i < r; ++i) sum_coords[i] += fb.coordinates(i, c);
      for (std::size_t i = 0; i < cone.dimension(); ++i) sum_ambient[i] += cone.matrix()(i, columns[c]);
    }
    std::optional<Integer> k;
    auto raise = [&](const Integer& lower) {
      if (!k || lower > *k) k = lower;
    };
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (target[j] == 0) continue;
      Integer step = fb.facets[j].h(sum_coords);
      Integer need = abs(fb.facets[j].h(alpha));
      Rational start = value(j, mu);
      raise(ceil((Rational(need) - start) / Rational(step)));
    }
    for (const auto& g : cone.facets()) {
      GaussRat start = g.h(*witness);
      Integer step = g.h(sum_ambient);
      if (!start.is_rational_integer() || step == 0) continue;
      raise(ceil(-start.re() / Rational(step)));
    }
    Parameter lambda0 = *witness;
    for (std::size_t i = 0; i < lambda0.size(); ++i) lambda0[i] += GaussRat(Integer(*k * sum_ambient[i]));
    Parameter mu0 = fb.coordinates_of(lambda0);

    // lambda = lambda0 + t * alpha; t >= 1 and large enough that the
    // negative targets go below zero.
    Integer t = 1;
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (target[j] >= 0) continue;
      Integer a = abs(fb.facets[j].h(alpha));
      t = std::max(t, ceil_div(value(j, mu0).get_num() + 1, a));
    }
    IntVector alpha_ambient = fb.basis.as_columns() * std::span<const Integer>(alpha);
    lambda = lambda0;
    for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] += GaussRat(Integer(t * alpha_ambient[i]));
  }

  if (!satisfied(fb.coordinates_of(lambda)))
    fail(ErrorKind::Internal, "lambda = " + show(lambda) + " misses the required facet signs");
  if (policy == LambdaPolicy::Strict) {
    if (auto bad = check_lambda(cone, face, beta, lambda))
      fail(ErrorKind::Internal, "lambda = " + show(lambda) + " fails: " + *bad);
  }
  return lambda;
}

std::optional<std::string> check_dual(const Cone& cone, std::span<const GaussRat> beta,
                                      std::span<const GaussRat> dual) {
  if (dual.size() != beta.size()) return "beta' has the wrong length";
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (!(dual[i] + beta[i]).is_rational_integer()) return "beta' is not in -beta + Z^d";
  for (std::size_t g = 0; g < cone.facets().size(); ++g) {
    const SupportFn& h = cone.facets()[g].h;
    bool lhs = classify_h(h, dual) == HClass::NatInt;
    bool rhs = classify_h(h, beta) == HClass::NegInt;
    if (lhs != rhs)
      return "facet " + std::to_string(g) + ": h(beta') is " + std::string(to_string(classify_h(h, dual))) +
             " while h(beta) is " + std::string(to_string(classify_h(h, beta)));
  }
  return std::nullopt;
}

Parameter dual_parameter(const Cone& cone, std::span<const GaussRat> beta) {
  require_dimension(cone, beta);
  bool off_facets = std::none_of(cone.facets().begin(), cone.facets().end(),
                                 [&](const Facet& g) { return g.h(beta) == GaussRat(0); });
  Parameter dual(beta.size());
  if (off_facets) {
    for (std::size_t i = 0; i < beta.size(); ++i) dual[i] = -beta[i];
  } else {
    IntVector gamma = find_gamma(cone, beta);
    for (std::size_t i = 0; i < beta.size(); ++i) dual[i] = -(beta[i] + GaussRat(gamma[i]));
  }
  if (auto bad = check_dual(cone, beta, dual))
    fail(ErrorKind::Internal, "beta' = " + show(dual) + " fails: " + *bad);
  return dual;
}

}  // namespace gkz
