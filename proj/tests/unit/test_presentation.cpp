#include "helpers.hpp"
#include "../support/corpus.hpp"

#include "gkz/oracle.hpp"
#include "gkz/presentation.hpp"

#include <set>

using namespace gkz;
using namespace gkz::testing;

namespace {

const IntMatrix twisted{{1, 1, 1, 1}, {0, 1, 2, 3}};
const IntMatrix conic{{1, 1, 1}, {0, 1, 2}};

Exponent exponent(const IntVector& v) {
  Exponent out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

IntVector difference(const BinomialGenerator& g) {
  IntVector out(g.u_plus.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g.u_plus[i] - g.u_minus[i];
  return out;
}

// Binomials as unordered monomial pairs.
std::set<std::set<IntVector>> as_set(const std::vector<BinomialGenerator>& gens) {
  std::set<std::set<IntVector>> out;
  for (const auto& g : gens) out.insert({g.u_plus, g.u_minus});
  return out;
}

std::set<IntVector> pair(std::initializer_list<long> a, std::initializer_list<long> b) { return {ints(a), ints(b)}; }

std::vector<std::pair<long, Integer>> degs(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<std::pair<long, Integer>> out;
  for (auto [d, m] : xs) out.emplace_back(d, Integer(m));
  return out;
}

}  // namespace

TEST_SUITE("presentation") {

TEST_CASE("Euler operators") {
  auto id = euler_operators(IntMatrix::identity(2), params({q(0), q(0)}));
  REQUIRE(id.size() == 2);
  CHECK(id[0].coefficients == ints({1, 0}));
  CHECK(id[1].coefficients == ints({0, 1}));
  auto tw = euler_operators(twisted, params({q(-1), q(1)}));
  REQUIRE(tw.size() == 2);
  CHECK(tw[0].coefficients == ints({1, 1, 1, 1}));
  CHECK(tw[0].beta == GaussRat(-1));
  CHECK(tw[1].coefficients == ints({0, 1, 2, 3}));
  CHECK(tw[1].beta == GaussRat(1));
  auto single = euler_operators(IntMatrix{{2}}, params({q(1, 2)}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].coefficients == ints({2}));
  CHECK(single[0].beta == GaussRat(Rational(1, 2)));
}

TEST_CASE("lattice ideal generators") {
  CHECK(lattice_ideal_generators(IntMatrix::identity(3)).empty());
  auto c = lattice_ideal_generators(conic);
  REQUIRE(c.size() == 1);
  CHECK(as_set(c) == std::set<std::set<IntVector>>{pair({1, 0, 1}, {0, 2, 0})});
  auto t = lattice_ideal_generators(twisted);
  CHECK(t.size() == 2);
  for (const auto& g : t) CHECK(twisted * std::span<const Integer>(difference(g)) == ints({0, 0}));
}

TEST_CASE("toric ideals") {
  CHECK(toric_ideal_generators(IntMatrix::identity(2)).empty());
  CHECK(as_set(toric_ideal_generators(conic)) == std::set<std::set<IntVector>>{pair({1, 0, 1}, {0, 2, 0})});
  CHECK(as_set(toric_ideal_generators(twisted)) ==
        std::set<std::set<IntVector>>{pair({1, 0, 1, 0}, {0, 2, 0, 0}), pair({0, 1, 0, 1}, {0, 0, 2, 0}),
                                      pair({1, 0, 0, 1}, {0, 1, 1, 0})});
}

TEST_CASE("property: toric ideals contain the lattice ideal and every kernel binomial") {
  for (const auto& a : random_cones(101, 40, 2, 5, 3, false)) {
    std::vector<BinomialGenerator> toric;
    try {
      toric = toric_ideal_generators(a);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ScaleLimit);
      continue;
    }
    std::vector<Binomial> gb;
    for (const auto& g : toric) {
      CHECK(a * std::span<const Integer>(difference(g)) == IntVector(a.rows(), 0));
      Binomial b;
      REQUIRE(make_binomial(exponent(g.u_plus), exponent(g.u_minus), MonomialOrder{}, b));
      gb.push_back(b);
    }
    for (const auto& g : lattice_ideal_generators(a))
      CHECK(in_ideal(exponent(g.u_plus), exponent(g.u_minus), gb));
    for (const auto& u : oracle::kernel_vectors(a, 2)) {
      Exponent plus(u.size()), minus(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) {
        plus[i] = std::max(0L, u[i].get_si());
        minus[i] = std::max(0L, -u[i].get_si());
      }
      CHECK(in_ideal(plus, minus, gb));
    }
  }
}

TEST_CASE("projection examples") {
  NormalCone nc(twisted);
  const Cone& c = nc.cone();
  Parameter beta = params({q(-1), q(1)});
  auto p = projection(nc, c.face_index({3}), beta);
  CHECK_FALSE(p.zero);
  CHECK(p.degrees() == degs({{-3, 1}, {-2, 1}}));
  REQUIRE(p.lambda);
  CHECK((*p.lambda)[1] == (*p.lambda)[0] * Rational(3));
  CHECK((*p.lambda)[0].is_rational_integer());
  CHECK(projection(nc, c.face_index({0}), beta).zero);
  auto top = projection(nc, c.top_face(), beta);
  CHECK_FALSE(top.zero);
  CHECK(*top.lambda == beta);
  CHECK(top.degrees() == degs({{0, 1}}));
}

TEST_CASE("restriction examples") {
  NormalCone nc(conic);
  Parameter beta = params({q(1, 2), q(1)});
  auto r = restriction(nc, nc.cone().face_index({2}), beta);
  CHECK_FALSE(r.zero);
  CHECK(*r.lambda == beta);
  CHECK(r.exterior_rank == 1);
  CHECK(r.degrees() == degs({{1, 1}, {2, 1}}));

  NormalCone tw(twisted);
  Parameter b2 = params({q(-1), q(1)});
  std::size_t ray = tw.cone().face_index({3});
  CHECK(restriction(tw, ray, b2).zero);
  CHECK_FALSE(restriction(tw, ray, b2, RestrictionMode::AsPrinted).zero);
  CHECK_FALSE(restriction(tw, tw.cone().face_index({0}), b2).zero);
  CHECK(restriction(tw, tw.cone().face_index({}), params({q(1, 2), q(0)})).zero);
  auto top = restriction(tw, tw.cone().top_face(), b2);
  CHECK(*top.lambda == b2);
  CHECK(top.degrees() == degs({{0, 1}}));
  CHECK(to_string(RestrictionMode::AsPrinted) == "as-printed");
}

TEST_CASE("dual systems") {
  NormalCone nc(twisted);
  auto ds = dual_system(nc, params({q(-1), q(1)}));
  CHECK(ds.beta_prime == params({q(1), q(-1)}));
  CHECK(ds.homogenizing == RatVector{1, 0});
  CHECK(ds.fsupp_dual == cofsupp(nc, params({q(-1), q(1)})));
  auto zero = dual_system(nc, params({q(0), q(0)}));
  for (const auto& g : nc.cone().facets()) CHECK(g.h(zero.beta_prime).re() < 0);
  NormalCone plane(IntMatrix{{1, 0, 1}, {0, 1, 1}});
  CHECK(error_kind_of([&] { dual_system(plane, params({q(0), q(0)})); }) == ErrorKind::NotHomogeneous);
}

TEST_CASE("property: one or the other, shifts and multiplicities") {
  std::size_t nonzero_projections = 0;
  for (const auto& [a, beta] : normal_corpus(111, 250)) {
    NormalCone nc(a);
    const Cone& c = nc.cone();
    for (std::size_t f = 0; f < c.faces().size(); ++f) {
      auto q = c.quantities(f);
      auto p = projection(nc, f, beta);
      auto r = restriction(nc, f, beta);
      auto t = transformed_restriction(nc, f, beta);
      if (f != c.top_face()) CHECK_FALSE((!p.zero && !r.zero));
      CHECK(p.zero == t.zero);
      if (p.zero) continue;
      ++nonzero_projections;
      Integer total = 0;
      for (std::size_t k = 0; k <= q.codimension; ++k) {
        long degree = -static_cast<long>(k) - (static_cast<long>(q.missing_columns) - static_cast<long>(q.codimension));
        auto ds = p.degrees();
        auto found = std::find_if(ds.begin(), ds.end(), [&](auto& x) { return x.first == degree; });
        REQUIRE(found != ds.end());
        CHECK(found->second == binomial(q.codimension, k));
        total += found->second;
      }
      CHECK(total == Integer(1) << q.codimension);
      auto pd = p.degrees(), td = t.degrees();
      REQUIRE(pd.size() == td.size());
      for (std::size_t i = 0; i < pd.size(); ++i) {
        CHECK(pd[i].first == td[i].first - static_cast<long>(q.missing_columns));
        CHECK(pd[i].second == td[i].second);
      }
    }
  }
  CHECK(nonzero_projections > 200);
}

}
