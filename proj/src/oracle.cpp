#include "gkz/oracle.hpp"

#include "gkz/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace gkz::oracle {

namespace {

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

// Calls visit(z) for every z in [-bound, bound]^k.
template <typename Visit>
bool for_each_in_box(std::size_t k, long bound, Visit&& visit) {
  IntVector z(k, Integer(-bound));
  while (true) {
    if (visit(std::as_const(z))) return true;
    std::size_t i = k;
    while (i > 0 && z[i - 1] == bound) z[--i] = -bound;
    if (i == 0) return false;
    ++z[i - 1];
  }
}

Integer det_or_one(const IntMatrix& m) { return m.rows() == 0 ? Integer(1) : determinant(m); }

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

GaussRat dot(std::span<const Integer> a, std::span<const GaussRat> b) {
  GaussRat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += b[i] * Rational(a[i]);
  return s;
}

HClass class_of(const GaussRat& v) {
  if (v.im() != 0 || v.re().get_den() != 1) return HClass::NonInt;
  return v.re() >= 0 ? HClass::NatInt : HClass::NegInt;
}

// Whether a rational vector lies in the Q-span of the given integer columns.
bool in_span(const IntMatrix& cols, const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntMatrix extended(cols.rows(), cols.cols() + 1);
  for (std::size_t i = 0; i < cols.rows(); ++i) {
    for (std::size_t j = 0; j < cols.cols(); ++j) extended(i, j) = cols(i, j);
    extended(i, cols.cols()) = Rational(v[i] * l).get_num();
  }
  return rank(extended) == rank(cols);
}

std::string show(const ColumnSet& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

}  // namespace

std::vector<FacetRecord> brute_facets(const IntMatrix& a) {
  const std::size_t d = a.rows(), n = a.cols();
  std::set<FacetRecord> found;
  for_each_subset(n, d - 1, [&](const std::vector<std::size_t>& subset) {
    IntMatrix s = a.select_columns(subset);
    if (rank(s) != d - 1) return;
    IntVector h(d);
    for (std::size_t i = 0; i < d; ++i) {
      IntMatrix minor(d - 1, d - 1);
      for (std::size_t r = 0, rr = 0; r < d; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < d - 1; ++c) minor(rr, c) = s(r, c);
        ++rr;
      }
      h[i] = (i % 2 == 0 ? 1 : -1) * det_or_one(minor);
    }
    Integer g = 0;
    for (const auto& x : h) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (auto& x : h) x /= g;
    bool pos = false, neg = false;
    for (std::size_t j = 0; j < n; ++j) {
      Integer v = dot(h, a.column(j));
      pos = pos || v > 0;
      neg = neg || v < 0;
    }
    if (pos && neg) return;
    if (neg)
      for (auto& x : h) x = -x;
    FacetRecord rec{{}, h};
    for (std::size_t j = 0; j < n; ++j)
      if (dot(h, a.column(j)) == 0) rec.columns.push_back(j);
    found.insert(rec);
  });
  return {found.begin(), found.end()};
}

std::vector<IntVector> unsaturated_points(const IntMatrix& a) {
  const std::size_t d = a.rows();
  auto fs = brute_facets(a);
  long bound = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) bound = std::max(bound, std::abs(a(i, j).get_si()));
  bound *= 3;
  auto degree = [&](std::span<const Integer> x) {
    Integer s = 0;
    for (const auto& f : fs) s += dot(f.h, x);
    return s;
  };
  auto in_cone = [&](std::span<const Integer> x) {
    return std::all_of(fs.begin(), fs.end(), [&](const FacetRecord& f) { return dot(f.h, x) >= 0; });
  };

  std::vector<IntVector> cone_points;
  Integer top = 0;
  for_each_in_box(d, bound, [&](const IntVector& x) {
    if (in_cone(x)) {
      cone_points.push_back(x);
      top = std::max(top, degree(x));
    }
    return false;
  });

  std::set<IntVector> semigroup{IntVector(d, 0)};
  std::vector<IntVector> frontier{IntVector(d, 0)};
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& x : frontier)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        IntVector y = x;
        for (std::size_t i = 0; i < d; ++i) y[i] += a(i, j);
        if (degree(y) > top) continue;
        if (semigroup.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }

  std::vector<IntVector> out;
  for (const auto& x : cone_points)
    if (!semigroup.count(x)) out.push_back(x);
  return out;
}

std::optional<IntVector> image_member(std::span<const Integer> v, const IntMatrix& m, long bound) {
  std::optional<IntVector> found;
  for_each_in_box(m.cols(), bound, [&](const IntVector& z) {
    IntVector w = m * std::span<const Integer>(z);
    if (std::equal(w.begin(), w.end(), v.begin(), v.end())) {
      found = z;
      return true;
    }
    return false;
  });
  return found;
}

std::vector<IntVector> kernel_vectors(const IntMatrix& a, long bound) {
  std::vector<IntVector> out;
  for_each_in_box(a.cols(), bound, [&](const IntVector& u) {
    IntVector w = a * std::span<const Integer>(u);
    bool zero_u = std::all_of(u.begin(), u.end(), [](const Integer& x) { return x == 0; });
    if (!zero_u && std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; })) out.push_back(u);
    return false;
  });
  return out;
}

bool feasible_2d(const std::vector<std::pair<std::array<Integer, 2>, Integer>>& constraints) {
  std::vector<std::array<Rational, 2>> candidates{{Rational(0), Rational(0)}};
  for (const auto& [a, b] : constraints) {
    Integer norm = a[0] * a[0] + a[1] * a[1];
    if (norm == 0) {
      if (b > 0) return false;
      continue;
    }
    candidates.push_back({Rational(b * a[0], norm), Rational(b * a[1], norm)});
  }
  for (std::size_t i = 0; i < constraints.size(); ++i)
    for (std::size_t j = i + 1; j < constraints.size(); ++j) {
      const auto& [p, b1] = constraints[i];
      const auto& [q, b2] = constraints[j];
      Integer det = p[0] * q[1] - p[1] * q[0];
      if (det == 0) continue;
      candidates.push_back({Rational(b1 * q[1] - b2 * p[1], det), Rational(p[0] * b2 - q[0] * b1, det)});
    }
  for (auto& c : candidates) {
    c[0].canonicalize();
    c[1].canonicalize();
    bool ok = std::all_of(constraints.begin(), constraints.end(), [&](const auto& con) {
      return Rational(con.first[0]) * c[0] + Rational(con.first[1]) * c[1] >= Rational(con.second);
    });
    if (ok) return true;
  }
  return false;
}

HClass face_facet_class(const IntMatrix& a, const ColumnSet& face, const FacetRecord& g,
                        std::span<const GaussRat> lambda) {
  Integer m = 0;
  for (auto j : face) {
    Integer v = dot(g.h, a.column(j));
    mpz_gcd(m.get_mpz_t(), m.get_mpz_t(), v.get_mpz_t());
  }
  GaussRat v = dot(g.h, lambda);
  if (m == 0) return class_of(v);
  return class_of(v * Rational(1, m));
}

std::vector<std::string> gamma_violations(const IntMatrix& a, std::span<const GaussRat> beta,
                                          std::span<const Integer> gamma) {
  std::vector<std::string> out;
  for (const auto& g : brute_facets(a)) {
    HClass c = class_of(dot(g.h, beta));
    Integer v = dot(g.h, gamma);
    if (c == HClass::NonInt && v == 0) out.push_back("facet " + show(g.columns) + ": non-integer value but h(gamma) = 0");
    if (c == HClass::NatInt && v <= 0) out.push_back("facet " + show(g.columns) + ": value in N but h(gamma) <= 0");
    if (c == HClass::NegInt && v >= 0) out.push_back("facet " + show(g.columns) + ": value in Z<0 but h(gamma) >= 0");
  }
  return out;
}

std::vector<std::string> lambda_violations(const IntMatrix& a, const ColumnSet& face, std::span<const GaussRat> beta,
                                           std::span<const GaussRat> lambda) {
  std::vector<std::string> out;
  const std::size_t d = a.rows();
  IntMatrix f = a.select_columns(face);
  RatVector re(d), im(d);
  for (std::size_t i = 0; i < d; ++i) {
    re[i] = lambda[i].re();
    im[i] = lambda[i].im();
  }
  if (!in_span(f, re) || !in_span(f, im)) out.push_back("lambda is not in CF");
  for (std::size_t i = 0; i < d; ++i)
    if (class_of(beta[i] - lambda[i]) == HClass::NonInt) out.push_back("beta - lambda is not integral");
  if (face.empty()) return out;

  const std::size_t rank_f = rank(f);
  std::map<ColumnSet, std::vector<FacetRecord>> over;
  for (const auto& g : brute_facets(a)) {
    ColumnSet meet;
    std::set_intersection(g.columns.begin(), g.columns.end(), face.begin(), face.end(), std::back_inserter(meet));
    if (meet == face) continue;
    if (column_rank(a, meet) + 1 != rank_f) continue;
    over[meet].push_back(g);
  }
  for (const auto& [sub, gs] : over) {
    HClass c = face_facet_class(a, face, gs.front(), lambda);
    for (const auto& g : gs) {
      if (face_facet_class(a, face, g, lambda) != c) out.push_back("inconsistent restriction of facet normals");
      if (c == HClass::NonInt) continue;
      if (class_of(dot(g.h, beta)) != c)
        out.push_back("facet " + show(sub) + " of F: h(lambda) in " + std::string(to_string(c)) + " but facet " +
                      show(g.columns) + " of A has h(beta) in " + std::string(to_string(class_of(dot(g.h, beta)))));
    }
  }
  return out;
}

std::vector<ColumnSet> lambda_obstructions(const IntMatrix& a, const ColumnSet& face, std::span<const GaussRat> beta,
                                           std::span<const GaussRat> lambda) {
  std::vector<ColumnSet> out;
  if (face.empty()) return out;
  const std::size_t rank_f = column_rank(a, face);
  std::map<ColumnSet, std::vector<FacetRecord>> over;
  for (const auto& g : brute_facets(a)) {
    ColumnSet meet;
    std::set_intersection(g.columns.begin(), g.columns.end(), face.begin(), face.end(), std::back_inserter(meet));
    if (meet == face || column_rank(a, meet) + 1 != rank_f) continue;
    over[meet].push_back(g);
  }
  for (const auto& [sub, gs] : over) {
    if (face_facet_class(a, face, gs.front(), lambda) == HClass::NonInt) continue;
    bool nat = false, neg = false;
    for (const auto& g : gs) {
      HClass c = class_of(dot(g.h, beta));
      nat = nat || c == HClass::NatInt;
      neg = neg || c == HClass::NegInt;
    }
    if (nat && neg) out.push_back(sub);
  }
  return out;
}

std::vector<std::string> dual_violations(const IntMatrix& a, std::span<const GaussRat> beta,
                                         std::span<const GaussRat> dual) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (class_of(beta[i] + dual[i]) == HClass::NonInt) out.push_back("beta' is not in -beta + Z^d");
  for (const auto& g : brute_facets(a)) {
    bool lhs = class_of(dot(g.h, dual)) == HClass::NatInt;
    bool rhs = class_of(dot(g.h, beta)) == HClass::NegInt;
    if (lhs != rhs) out.push_back("facet " + show(g.columns) + ": N / Z<0 exchange fails");
  }
  return out;
}

bool in_CF_plus_Zd(const IntMatrix& a, const ColumnSet& face, std::span<const GaussRat> beta, long bound) {
  const std::size_t d = a.rows();
  IntMatrix f = a.select_columns(face);
  RatVector im(d);
  for (std::size_t i = 0; i < d; ++i) im[i] = beta[i].im();
  if (!in_span(f, im)) return false;
  return for_each_in_box(d, bound, [&](const IntVector& z) {
    RatVector re(d);
    for (std::size_t i = 0; i < d; ++i) re[i] = beta[i].re() - Rational(z[i]);
    return in_span(f, re);
  });
}

}  // namespace gkz::oracle
