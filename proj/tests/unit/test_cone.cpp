#include "helpers.hpp"
#include "../support/corpus.hpp"

#include "gkz/cone.hpp"
#include "gkz/oracle.hpp"

#include <set>

using namespace gkz;
using namespace gkz::testing;

namespace {

const IntMatrix twisted{{1, 1, 1, 1}, {0, 1, 2, 3}};
const IntMatrix conic{{1, 1, 1}, {0, 1, 2}};

std::vector<ColumnSet> face_columns(const Cone& c) {
  std::vector<ColumnSet> out;
  for (const auto& f : c.faces()) out.push_back(f.columns);
  return out;
}

}  // namespace

TEST_SUITE("cone") {

TEST_CASE("facets of the twisted cubic cone") {
  auto fs = facets(twisted);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].columns == ColumnSet{0});
  CHECK(fs[0].h.coefficients == ints({0, 1}));
  CHECK(fs[1].columns == ColumnSet{3});
  CHECK(fs[1].h.coefficients == ints({3, -1}));
}

TEST_CASE("facets of the orthant and of the conic") {
  auto orthant = facets(IntMatrix::identity(2));
  REQUIRE(orthant.size() == 2);
  CHECK(orthant[0].columns == ColumnSet{0});
  CHECK(orthant[0].h.coefficients == ints({0, 1}));
  CHECK(orthant[1].columns == ColumnSet{1});
  CHECK(orthant[1].h.coefficients == ints({1, 0}));

  auto fs = facets(conic);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].h.coefficients == ints({0, 1}));
  CHECK(fs[1].columns == ColumnSet{2});
  CHECK(fs[1].h.coefficients == ints({2, -1}));
}

TEST_CASE("face lattices") {
  CHECK(face_columns(Cone(twisted)) == std::vector<ColumnSet>{{}, {0}, {3}, {0, 1, 2, 3}});
  CHECK(face_columns(Cone(IntMatrix::identity(2))) == std::vector<ColumnSet>{{}, {0}, {1}, {0, 1}});
  CHECK(face_columns(Cone(conic)) == std::vector<ColumnSet>{{}, {0}, {2}, {0, 1, 2}});
  Cone c(twisted);
  CHECK(c.faces()[0].containing_facets == std::vector<std::size_t>{0, 1});
  CHECK(c.faces()[c.top_face()].containing_facets.empty());
}

TEST_CASE("pointedness") {
  CHECK(is_pointed(twisted));
  CHECK_FALSE(is_pointed(IntMatrix{{1, -1}}));
  CHECK(is_pointed(IntMatrix::identity(3)));
  CHECK_FALSE(Cone(IntMatrix{{1, -1, 0}, {0, 0, 1}}).pointed());
}

TEST_CASE("homogeneity") {
  auto c = is_homogeneous(twisted);
  REQUIRE(c);
  CHECK(*c == RatVector{1, 0});
  CHECK_FALSE(is_homogeneous(IntMatrix{{1, 0, 1}, {0, 1, 1}}).has_value());
  auto single = is_homogeneous(IntMatrix{{2}, {0}});
  REQUIRE(single);
  CHECK(*single == RatVector{Rational(1, 2), 0});
}

TEST_CASE("preconditions") {
  CHECK(error_kind_of([] { facets(IntMatrix{{1, 2}, {2, 4}}); }) == ErrorKind::NotFullRank);
  CHECK(error_kind_of([] { facets(IntMatrix{{2, 0}, {0, 2}}); }) == ErrorKind::LatticeIndex);
  CHECK(error_kind_of([] { Cone(IntMatrix{{1, 2}, {0, 0}}); }) == ErrorKind::NotFullRank);
  CHECK(error_kind_of([] { Cone(IntMatrix{{1, 0, 0}, {0, 1, 0}}); }) == ErrorKind::InvalidInput);
  Cone c(twisted);
  CHECK(error_kind_of([&] { c.face_index({1}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("face quantities") {
  Cone c(twisted);
  auto top = face_quantities(c, c.top_face());
  CHECK(top.codimension == 0);
  CHECK(top.missing_columns == 0);
  auto f = face_quantities(c, c.face_index({3}));
  CHECK(f.codimension == 1);
  CHECK(f.missing_columns == 3);
  auto empty = face_quantities(c, c.face_index({}));
  CHECK(empty.codimension == 2);
  CHECK(empty.missing_columns == 4);
}

TEST_CASE("face bases") {
  Cone c(conic);
  FaceBasis fb = face_basis(c, c.face_index({2}));
  REQUIRE(fb.basis.rank() == 1);
  CHECK(fb.basis.vectors[0] == ints({1, 2}));
  REQUIRE(fb.facets.size() == 1);
  CHECK(fb.facets[0].columns.empty());
  for (long k = -3; k <= 3; ++k) CHECK(fb.evaluate_facet(0, params({q(k), q(2 * k)})) == GaussRat(k));
  CHECK(fb.evaluate_facet(0, params({q(1, 2), q(1)})) == GaussRat(Rational(1, 2)));

  Cone orthant(IntMatrix::identity(2));
  FaceBasis top = face_basis(orthant, orthant.top_face());
  CHECK(top.basis.as_columns() == IntMatrix::identity(2));
  REQUIRE(top.facets.size() == 2);
  CHECK(top.evaluate_facet(0, params({q(5), q(7)})) == GaussRat(7));
  CHECK(top.evaluate_facet(1, params({q(5), q(7)})) == GaussRat(5));

  Cone t(twisted);
  FaceBasis ray = face_basis(t, t.face_index({3}));
  CHECK(ray.basis.vectors[0] == ints({1, 3}));
  CHECK(ray.evaluate_facet(0, params({q(4), q(12)})) == GaussRat(4));

  CHECK(error_kind_of([&] { face_basis(t, t.face_index({})); }) == ErrorKind::EmptyFace);
}

TEST_CASE("property: facets agree with the cofactor oracle") {
  for (const auto& a : random_cones(41, 200, 3, 7, 3, false)) {
    std::set<std::pair<ColumnSet, IntVector>> fast, slow;
    for (const auto& f : facets(a)) fast.insert({f.columns, f.h.coefficients});
    for (const auto& f : oracle::brute_facets(a)) slow.insert({f.columns, f.h});
    CHECK(fast == slow);
  }
}

TEST_CASE("property: support functions are primitive integral support functions") {
  for (const auto& a : random_cones(42, 200, 3, 6, 4, false)) {
    for (const auto& f : facets(a)) {
      CHECK(gcd(f.h.coefficients) == 1);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Integer v = f.h(a.column(j));
        CHECK(v >= 0);
        bool on = std::binary_search(f.columns.begin(), f.columns.end(), j);
        CHECK(on == (v == 0));
      }
      IntVector doubled = f.h.coefficients;
      for (auto& x : doubled) x *= 2;
      CHECK(gcd(doubled) != 1);
    }
  }
}

TEST_CASE("property: face lattices are intersection-closed with the full face on top") {
  Generator gen(43);
  int unpointed = 0;
  for (int i = 0; i < 200; ++i) {
    std::size_t d = gen.uniform(1, 3);
    IntMatrix a = gen.matrix(d, gen.uniform(d, 6), -2, 3);
    if (!admissible(a)) continue;
    Cone c(a);
    auto cols = face_columns(c);
    std::set<ColumnSet> all(cols.begin(), cols.end());
    CHECK(all.size() == cols.size());
    CHECK(cols.back() == all_columns(a.cols()));
    for (const auto& x : cols)
      for (const auto& y : cols) CHECK(all.count(intersect(x, y)) == 1);
    bool has_empty = all.count(ColumnSet{}) == 1;
    CHECK(has_empty == c.pointed());
    unpointed += !c.pointed();
    for (std::size_t f = 0; f < c.faces().size(); ++f) {
      // closed: every column on all containing facets belongs to the face
      for (std::size_t j = 0; j < a.cols(); ++j) {
        bool on_all = true;
        for (auto g : c.faces()[f].containing_facets) on_all = on_all && c.facets()[g].h(a.column(j)) == 0;
        if (c.faces()[f].containing_facets.empty()) continue;
        bool in = std::binary_search(c.faces()[f].columns.begin(), c.faces()[f].columns.end(), j);
        CHECK(in == on_all);
      }
    }
  }
  CHECK(unpointed > 0);
}

}
