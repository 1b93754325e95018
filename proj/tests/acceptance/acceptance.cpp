// Acceptance criteria. `gkz_acceptance N` runs criterion N, no argument runs
// all of them; every criterion prints one PASS/FAIL line.

#include "../support/corpus.hpp"

#include "gkz/error.hpp"
#include "gkz/groebner.hpp"
#include "gkz/oracle.hpp"
#include "gkz/orbits.hpp"
#include "gkz/parameter.hpp"
#include "gkz/presentation.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace gkz;
using namespace gkz::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (detail.size() < 600) detail += (detail.empty() ? "" : "; ") + what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

GaussRat q(long p, long d = 1) { return GaussRat(Rational(p, d)); }

std::vector<ColumnSet> columns_of(const Cone& c, const OrbitSet& s) {
  std::vector<ColumnSet> out;
  for (auto f : s) out.push_back(c.faces()[f].columns);
  return out;
}

constexpr std::uint64_t corpus_seed = 20261016;
constexpr std::size_t corpus_size = 500;

const std::vector<Instance>& corpus() {
  static const std::vector<Instance> instances = normal_corpus(corpus_seed, corpus_size);
  return instances;
}

Verdict section_2_4() {
  auto start = Clock::now();
  Verdict v;
  IntMatrix a{{1, 1, 1, 1}, {0, 1, 2, 3}};
  NormalCone nc(a);
  const Cone& c = nc.cone();
  Parameter beta{q(-1), q(1)};
  std::set<std::pair<ColumnSet, IntVector>> got;
  for (const auto& f : c.facets()) got.insert({f.columns, f.h.coefficients});
  std::set<std::pair<ColumnSet, IntVector>> want{{{0}, {0, 1}}, {{3}, {3, -1}}};
  v.require(got == want, "facets or support functions differ from h1 = y, h2 = 3x - y");
  for (const auto& f : c.facets()) {
    GaussRat value = f.h(beta);
    if (f.columns == ColumnSet{0}) v.require(value == GaussRat(1), "h1(beta) != 1");
    if (f.columns == ColumnSet{3}) v.require(value == GaussRat(-4), "h2(beta) != -4");
  }
  v.require(columns_of(c, fsupp(nc, beta)) == std::vector<ColumnSet>{{3}, {0, 1, 2, 3}}, "fsupp != {{a4}, A}");
  v.require(columns_of(c, cofsupp(nc, beta)) == std::vector<ColumnSet>{{0}, {0, 1, 2, 3}}, "cofsupp != {{a1}, A}");
  double t = seconds_since(start);
  v.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  if (v.pass) v.detail = "h1(beta) = 1, h2(beta) = -4, fsupp = {{a4}, A}, cofsupp = {{a1}, A}";
  return v;
}

Verdict lambda_example() {
  auto start = Clock::now();
  Verdict v;
  IntMatrix a{{1, 1, 1}, {0, 1, 2}};
  NormalCone nc(a);
  const Cone& c = nc.cone();
  std::size_t f = c.face_index({2});
  FaceBasis fb = c.face_basis(f);
  v.require(fb.facets.size() == 1 && fb.facets[0].columns.empty(), "F = {a3} should have the single facet {}");
  for (long k = -5; k <= 5; ++k)
    v.require(fb.evaluate_facet(0, Parameter{q(k), q(2 * k)}) == GaussRat(k), "h_{0,F}(c, 2c) != c");
  const Facet& g = c.facets().front();
  v.require(g.columns == ColumnSet{0} && g.h.coefficients == IntVector{0, 1}, "h_{G,A}(a, b) != b");

  Parameter beta{q(1, 2), q(1)};
  Integer h_g = g.h(beta).re().get_num();
  v.require(g.h(beta) == GaussRat(1), "h_{G,A}(beta) = " + to_string(g.h(beta)) + ", expected 1");
  Parameter lambda = find_lambda(nc, f, beta);
  v.require(classify(fb.evaluate_facet(0, lambda)) == HClass::NonInt, "h_{0,F}(lambda) is an integer");
  Generator gen(corpus_seed);
  for (int i = 0; i < 20; ++i) {
    long z = gen.uniform(-10, 10);
    Parameter moved{lambda[0] + GaussRat(z), lambda[1] + GaussRat(2 * z)};
    v.require(classify(fb.evaluate_facet(0, moved)) == HClass::NonInt,
              "h_{0,F}(lambda + " + std::to_string(z) + "(1,2)) is an integer");
  }
  std::ifstream readme(std::string(GKZ_SOURCE_DIR) + "/README.md");
  std::stringstream text;
  text << readme.rdbuf();
  v.require(text.str().find("h_{G,A}(beta) = 1") != std::string::npos,
            "README does not document the evaluated value h_{G,A}(beta) = 1");
  double t = seconds_since(start);
  v.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  if (v.pass)
    v.detail = "lambda = (" + to_string(lambda[0]) + ", " + to_string(lambda[1]) + "), h_{0,F} non-integral on 21 coset points, h_{G,A}(beta) = " + to_string(h_g);
  return v;
}

Verdict constructive_lemmas() {
  Verdict v;
  std::size_t gammas = 0, lambdas = 0, violations = 0, infeasible = 0, confirmed = 0;
  std::string first_infeasible;
  for (const auto& [a, beta] : corpus()) {
    NormalCone nc(a);
    const Cone& c = nc.cone();
    IntVector gamma = find_gamma(c, beta);
    ++gammas;
    auto bad = oracle::gamma_violations(a, beta, gamma);
    if (!bad.empty()) {
      ++violations;
      v.require(false, "gamma: " + bad.front());
    }
    for (std::size_t f = 0; f < c.faces().size(); ++f) {
      const ColumnSet& columns = c.faces()[f].columns;
      if (columns.empty()) continue;
      auto witness = in_CF_plus_Zd(c, f, beta);
      if (!witness) continue;
      ++lambdas;
      try {
        Parameter lambda = find_lambda(nc, f, beta);
        auto lbad = oracle::lambda_violations(a, columns, beta, lambda);
        if (!lbad.empty()) {
          ++violations;
          v.require(false, "lambda: " + lbad.front());
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::LambdaInfeasible) throw;
        ++infeasible;
        if (!oracle::lambda_obstructions(a, columns, beta, *witness).empty()) ++confirmed;
        if (first_infeasible.empty()) {
          std::ostringstream s;
          s << "A =";
          for (std::size_t i = 0; i < a.rows(); ++i) {
            s << " [";
            for (std::size_t j = 0; j < a.cols(); ++j) s << (j ? "," : "") << a(i, j).get_str();
            s << "]";
          }
          s << ", F = {";
          for (std::size_t j = 0; j < columns.size(); ++j) s << (j ? "," : "") << columns[j];
          s << "}, beta = (";
          for (std::size_t i = 0; i < beta.size(); ++i) s << (i ? ", " : "") << to_string(beta[i]);
          s << ")";
          first_infeasible = s.str();
        }
      }
    }
  }
  if (infeasible > 0) {
    v.pass = false;
    v.detail = std::to_string(infeasible) + " of " + std::to_string(lambdas) +
               " (A, F, beta) cases admit no lambda with the required implications (" + std::to_string(confirmed) +
               " confirmed by the brute-force oracle), e.g. " + first_infeasible +
               (v.detail.empty() ? "" : "; " + v.detail);
  }
  std::string summary = std::to_string(corpus().size()) + " instances, " + std::to_string(gammas) + " gammas, " +
                        std::to_string(lambdas) + " lambdas, " + std::to_string(violations) + " violations";
  v.detail = v.pass ? summary : summary + "; " + v.detail;
  return v;
}

Verdict duality_suite() {
  Verdict v;
  std::size_t doubles = 0;
  for (const auto& [a, beta] : corpus()) {
    NormalCone nc(a);
    const Cone& c = nc.cone();
    Parameter dual = dual_parameter(c, beta);
    auto bad = oracle::dual_violations(a, beta, dual);
    v.require(bad.empty(), bad.empty() ? "" : bad.front());
    v.require(fsupp(nc, dual) == cofsupp(nc, beta), "fsupp(beta') != cofsupp(beta)");
    bool zero = false;
    for (const auto& g : c.facets()) zero = zero || g.h(beta) == GaussRat(0);
    if (zero) continue;
    ++doubles;
    Parameter twice = dual_parameter(c, dual);
    for (const auto& g : c.facets())
      v.require(classify_h(g.h, twice) == classify_h(g.h, beta), "double dual changes a facet class");
  }
  if (v.pass)
    v.detail = std::to_string(corpus().size()) + " instances, " + std::to_string(doubles) + " double duals";
  return v;
}

Verdict one_or_the_other() {
  Verdict v;
  std::size_t proper = 0, projections = 0, restrictions = 0;
  for (const auto& [a, beta] : corpus()) {
    NormalCone nc(a);
    const Cone& c = nc.cone();
    for (std::size_t f = 0; f + 1 < c.faces().size(); ++f) {
      ++proper;
      auto p = projection(nc, f, beta);
      auto r = restriction(nc, f, beta);
      v.require(p.zero || r.zero, "projection and restriction both nonzero");
      restrictions += !r.zero;
      if (p.zero) continue;
      ++projections;
      auto q = c.quantities(f);
      long s = static_cast<long>(q.missing_columns) - static_cast<long>(q.codimension);
      std::vector<std::pair<long, Integer>> want;
      for (long k = static_cast<long>(q.codimension); k >= 0; --k)
        want.emplace_back(-k - s, binomial(q.codimension, static_cast<std::size_t>(k)));
      auto got = p.degrees();
      v.require(got == want, "projection degrees differ from {-k - (n_AF - d_AF)}");
      Integer total = 0;
      for (const auto& [d, m] : got) total += m;
      v.require(total == Integer(1) << q.codimension, "multiplicities do not sum to 2^d_AF");
    }
  }
  if (v.pass)
    v.detail = std::to_string(proper) + " proper faces, " + std::to_string(projections) + " nonzero projections, " +
               std::to_string(restrictions) + " nonzero restrictions, never both";
  return v;
}

Verdict oracle_equivalence() {
  auto start = Clock::now();
  Verdict v;
  auto cones = random_cones(corpus_seed + 6, 200, 3, 6, 3, false);
  Generator gen(corpus_seed + 7);
  std::size_t membership = 0, not_normal = 0;
  for (const auto& a : cones) {
    std::set<std::pair<ColumnSet, IntVector>> fast, slow;
    for (const auto& f : facets(a)) fast.insert({f.columns, f.h.coefficients});
    for (const auto& f : oracle::brute_facets(a)) slow.insert({f.columns, f.h});
    v.require(fast == slow, "facet sets differ");

    auto cert = is_normal(a);
    auto holes = oracle::unsaturated_points(a);
    v.require(cert.normal == holes.empty(), "normality verdicts differ");
    not_normal += !cert.normal;

    Cone c(a);
    for (const auto& face : c.faces()) {
      if (face.columns.empty()) continue;
      IntMatrix m = a.select_columns(face.columns);
      for (int k = 0; k < 3; ++k) {
        IntVector x = gen.vector(a.rows(), -3, 3);
        auto z = member_of_image_lattice(x, m);
        bool agree = z ? m * std::span<const Integer>(*z) == x : !oracle::image_member(x, m, 5).has_value();
        v.require(agree, "lattice membership differs");
        ++membership;
      }
    }
  }
  double t = seconds_since(start);
  v.require(t < 300.0, "runtime " + std::to_string(t) + " s");
  if (v.pass)
    v.detail = std::to_string(cones.size()) + " instances (" + std::to_string(not_normal) + " non-normal), " +
               std::to_string(membership) + " membership queries";
  return v;
}

// Monomial pair of a kernel vector.
std::pair<Exponent, Exponent> split(std::span<const Integer> u) {
  Exponent plus(u.size()), minus(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    plus[i] = std::max(0L, u[i].get_si());
    minus[i] = std::max(0L, -u[i].get_si());
  }
  return {plus, minus};
}

Verdict toric_ideals() {
  Verdict v;
  std::string detail;
  for (const IntMatrix& a : {IntMatrix{{1, 1, 1}, {0, 1, 2}}, IntMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}}}) {
    auto start = Clock::now();
    auto toric = toric_ideal_generators(a);
    std::vector<Binomial> toric_gb;
    for (const auto& g : toric) {
      IntVector u(g.u_plus.size());
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = g.u_plus[i] - g.u_minus[i];
      auto [p, m] = split(u);
      Binomial b;
      if (make_binomial(p, m, MonomialOrder{}, b)) toric_gb.push_back(b);
    }
    // Oracle ideal: every kernel binomial with entries bounded by 3.
    std::vector<Binomial> oracle_gens;
    std::set<IntVector> oracle_vectors;
    for (const auto& u : oracle::kernel_vectors(a, 3)) {
      oracle_vectors.insert(u);
      auto [p, m] = split(u);
      Binomial b;
      if (make_binomial(p, m, MonomialOrder{}, b)) oracle_gens.push_back(b);
    }
    auto oracle_gb = groebner_basis(oracle_gens, MonomialOrder{});
    for (const auto& b : oracle_gens) v.require(in_ideal(b.lead, b.trail, toric_gb), "oracle binomial outside the toric ideal");
    for (const auto& g : toric) {
      IntVector u(g.u_plus.size());
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = g.u_plus[i] - g.u_minus[i];
      v.require(oracle_vectors.count(u) == 1, "toric generator is not a bounded kernel binomial");
      auto [p, m] = split(u);
      v.require(in_ideal(p, m, oracle_gb), "toric generator outside the oracle ideal");
    }
    double t = seconds_since(start);
    v.require(t < 5.0, "runtime " + std::to_string(t) + " s");
    detail += (detail.empty() ? "" : ", ") + std::to_string(toric.size()) + " generators for n = " +
              std::to_string(a.cols());
  }
  if (v.pass) v.detail = detail + "; equal to the kernel-enumeration ideal";
  return v;
}

Verdict duality_gate() {
  Verdict v;
  Generator gen(corpus_seed + 8);
  std::size_t certified = 0;
  while (certified < 100) {
    std::size_t d = gen.uniform(2, 3);
    IntMatrix a = gen.matrix(d, gen.uniform(d, 6), 0, 4);
    for (std::size_t j = 0; j < a.cols(); ++j) a(0, j) = 1;
    if (!admissible(a) || !is_normal(a).normal) continue;
    NormalCone nc(a);
    Parameter beta = gen.parameter(d);
    DualSystem ds = dual_system(nc, beta);
    auto bad = oracle::dual_violations(a, beta, ds.beta_prime);
    v.require(bad.empty(), bad.empty() ? "" : bad.front());
    v.require(ds.fsupp_dual == cofsupp(nc, beta) && ds.cofsupp_dual == fsupp(nc, beta), "support exchange fails");
    ++certified;
  }
  bool gate = false;
  try {
    NormalCone plane(IntMatrix{{1, 0, 1}, {0, 1, 1}});
    dual_system(plane, Parameter{q(0), q(0)});
  } catch (const Error& e) {
    gate = e.kind() == ErrorKind::NotHomogeneous;
  }
  v.require(gate, "NotHomogeneous not raised for columns (1,0), (0,1), (1,1)");
  if (v.pass)
    v.detail = std::to_string(certified) + " homogeneous instances certified at parameter level; NotHomogeneous gate holds";
  return v;
}

const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
    {"worked example of supports (twisted cubic)", section_2_4},
    {"worked example of a face parameter", lambda_example},
    {"gamma and lambda postconditions on the random normal corpus", constructive_lemmas},
    {"duality suite", duality_suite},
    {"one or the other", one_or_the_other},
    {"oracle equivalence", oracle_equivalence},
    {"toric ideals at desk scale", toric_ideals},
    {"duality gate", duality_gate},
};

bool run(std::size_t index) {
  auto start = Clock::now();
  Verdict v;
  try {
    v = criteria[index].second();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  std::cout << "C" << index + 1 << " " << (v.pass ? "PASS" : "FAIL") << " " << criteria[index].first << ": "
            << v.detail << " (" << seconds_since(start) << " s)" << std::endl;
  return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    std::size_t k = std::stoul(argv[1]);
    if (k < 1 || k > criteria.size()) {
      std::cerr << "criterion must be 1.." << criteria.size() << "\n";
      return 2;
    }
    return run(k - 1) ? 0 : 1;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) all = run(i) && all;
  return all ? 0 : 1;
}
