#include "gkz/verify.hpp"

#include "gkz/error.hpp"
#include "gkz/lattice.hpp"
#include "gkz/oracle.hpp"
#include "gkz/orbits.hpp"
#include "gkz/parameter.hpp"

#include <algorithm>
#include <set>

namespace gkz {

namespace {

struct Report {
  Json checks = Json::array();
  bool ok = true;

  void add(const std::string& name, bool passed, const std::string& detail) {
    checks.push_back(Json{{"check", name}, {"ok", passed}, {"detail", detail}});
    ok = ok && passed;
  }
};

std::string show(const ColumnSet& c) { return columns_json(c).dump(); }

void check_facets(const Cone& cone, Report& report) {
  std::set<std::pair<ColumnSet, IntVector>> fast, slow;
  for (const auto& f : cone.facets()) fast.insert({f.columns, f.h.coefficients});
  for (const auto& f : oracle::brute_facets(cone.matrix())) slow.insert({f.columns, f.h});
  report.add("facets", fast == slow,
             std::to_string(fast.size()) + " fast facets, " + std::to_string(slow.size()) + " oracle facets");
}

std::optional<bool> check_normality(const Cone& cone, const NormalityOptions& options, Report& report) {
  if (!cone.pointed()) {
    report.add("normality", true, "skipped: the cone is not pointed");
    return std::nullopt;
  }
  NormalityCertificate cert = is_normal(cone.matrix(), options);
  auto holes = oracle::unsaturated_points(cone.matrix());
  bool agree = cert.normal == holes.empty();
  std::string detail = cert.normal ? "normal" : "not normal";
  if (cert.witness) {
    bool listed = std::find(holes.begin(), holes.end(), *cert.witness) != holes.end();
    detail += ", witness " + to_json(std::span<const Integer>(*cert.witness)).dump() +
              (listed ? " confirmed" : " not among the oracle's points");
    agree = agree && listed;
  }
  report.add("normality", agree, detail + "; oracle found " + std::to_string(holes.size()) + " unsaturated points");
  return cert.normal;
}

void check_membership(const Cone& cone, Report& report) {
  const IntMatrix& a = cone.matrix();
  const std::size_t d = a.rows();
  std::vector<IntVector> probes;
  for (std::size_t j = 0; j < a.cols(); ++j) probes.push_back(a.column(j));
  for (std::size_t i = 0; i < d; ++i)
    for (long scale : {1L, 2L}) {
      IntVector e(d, 0);
      e[i] = scale;
      probes.push_back(e);
    }
  std::size_t tested = 0, failures = 0;
  std::string first_failure;
  for (const auto& face : cone.faces()) {
    if (face.columns.empty()) continue;
    IntMatrix m = a.select_columns(face.columns);
    for (const auto& v : probes) {
      ++tested;
      auto fast = member_of_image_lattice(v, m);
      bool good = fast ? m * std::span<const Integer>(*fast) == v : !oracle::image_member(v, m, 4).has_value();
      if (!good) {
        ++failures;
        if (first_failure.empty())
          first_failure = "; face " + show(face.columns) + ", v = " + to_json(std::span<const Integer>(v)).dump();
      }
    }
  }
  report.add("lattice-membership", failures == 0,
             std::to_string(tested) + " queries, " + std::to_string(failures) + " disagreements" + first_failure);
}

long shift_bound(std::span<const GaussRat> beta, std::span<const GaussRat> lambda) {
  long bound = 4;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    Rational z = (beta[i] - lambda[i]).re();
    if (!is_integral(z)) continue;
    Integer absz = abs(z.get_num());
    if (absz.fits_slong_p()) bound = std::max(bound, absz.get_si());
  }
  return bound;
}

void check_coset(const Cone& cone, const Parameter& beta, Report& report) {
  std::size_t failures = 0;
  std::string first_failure;
  for (std::size_t f = 0; f < cone.faces().size(); ++f) {
    const ColumnSet& columns = cone.faces()[f].columns;
    auto fast = in_CF_plus_Zd(cone, f, beta);
    long bound = fast ? shift_bound(beta, *fast) : 4;
    bool slow = oracle::in_CF_plus_Zd(cone.matrix(), columns, beta, bound);
    if (fast.has_value() != slow) {
      ++failures;
      if (first_failure.empty()) first_failure = "; face " + show(columns);
    }
  }
  report.add("coset-membership", failures == 0,
             std::to_string(cone.faces().size()) + " faces, " + std::to_string(failures) + " disagreements" +
                 first_failure);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

void check_gamma_and_dual(const Cone& cone, const Parameter& beta, Report& report) {
  IntVector gamma = find_gamma(cone, beta);
  auto bad = oracle::gamma_violations(cone.matrix(), beta, gamma);
  report.add("gamma", bad.empty(), "gamma = " + to_json(std::span<const Integer>(gamma)).dump() +
                                       (bad.empty() ? "" : "; " + join(bad)));
  Parameter dual = dual_parameter(cone, beta);
  bad = oracle::dual_violations(cone.matrix(), beta, dual);
  report.add("dual", bad.empty(), "beta' = " + to_json(std::span<const GaussRat>(dual)).dump() +
                                      (bad.empty() ? "" : "; " + join(bad)));
}

void check_lambda(const NormalCone& normal, const Parameter& beta, Report& report) {
  const Cone& cone = normal.cone();
  std::size_t found = 0, infeasible = 0, failures = 0;
  std::string detail;
  for (std::size_t f = 0; f < cone.faces().size(); ++f) {
    const ColumnSet& columns = cone.faces()[f].columns;
    auto witness = in_CF_plus_Zd(cone, f, beta);
    if (!witness) continue;
    try {
      Parameter lambda = find_lambda(normal, f, beta);
      auto bad = oracle::lambda_violations(cone.matrix(), columns, beta, lambda);
      ++found;
      if (!bad.empty()) {
        ++failures;
        detail += "; face " + show(columns) + ": " + join(bad);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::LambdaInfeasible) throw;
      auto obstructions = oracle::lambda_obstructions(cone.matrix(), columns, beta, *witness);
      if (obstructions.empty()) {
        ++failures;
        detail += "; face " + show(columns) + ": infeasibility not confirmed by the oracle";
      } else {
        ++infeasible;
        detail += "; face " + show(columns) + ": no admissible lambda (facet " + show(obstructions.front()) +
                  " of F is over facets of both signs)";
      }
    }
  }
  report.add("lambda", failures == 0,
             std::to_string(found) + " lambdas checked, " + std::to_string(infeasible) +
                 " confirmed infeasible, " + std::to_string(failures) + " failures" + detail);
}

void check_support_exchange(const NormalCone& normal, const Parameter& beta, Report& report) {
  Parameter dual = dual_parameter(normal.cone(), beta);
  bool ok = fsupp(normal, dual) == cofsupp(normal, beta) && cofsupp(normal, dual) == fsupp(normal, beta);
  report.add("support-exchange", ok, ok ? "fsupp(beta') = cofsupp(beta) and back" : "support sets differ");
}

}  // namespace

Json verify_instance(const IntMatrix& a, const std::optional<Parameter>& beta, const NormalityOptions& options) {
  Report report;
  Cone cone(a);
  check_facets(cone, report);
  auto normal = check_normality(cone, options, report);
  check_membership(cone, report);
  if (beta) {
    check_coset(cone, *beta, report);
    check_gamma_and_dual(cone, *beta, report);
    if (normal.value_or(false)) {
      NormalCone nc(cone, options);
      check_lambda(nc, *beta, report);
      check_support_exchange(nc, *beta, report);
    }
  }
  return Json{{"checks", std::move(report.checks)}, {"ok", report.ok}};
}

}  // namespace gkz
