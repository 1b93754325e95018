#include "gkz/groebner.hpp"

#include "gkz/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace gkz {

namespace {

long degree(const Exponent& a, std::size_t from, std::size_t to) {
  return std::accumulate(a.begin() + from, a.begin() + to, 0L);
}

// grevlex on the index range [from, to): -1 if a < b, 1 if a > b, 0 if equal.
int grevlex(const Exponent& a, const Exponent& b, std::size_t from, std::size_t to) {
  long da = degree(a, from, to), db = degree(b, from, to);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = to; i-- > from;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

bool divides(const Exponent& d, const Exponent& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

bool MonomialOrder::less(const Exponent& a, const Exponent& b) const {
  const std::size_t n = a.size();
  const std::size_t split = n - std::min(eliminate, n);
  if (int c = grevlex(a, b, split, n)) return c < 0;
  return grevlex(a, b, 0, split) < 0;
}

bool make_binomial(Exponent a, Exponent b, const MonomialOrder& order, Binomial& out) {
  if (a == b) return false;
  if (order.less(a, b)) std::swap(a, b);
  out = Binomial{std::move(a), std::move(b)};
  return true;
}

Exponent normal_form(Exponent m, const std::vector<Binomial>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : basis) {
      if (!divides(g.lead, m)) continue;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += g.trail[i] - g.lead[i];
      changed = true;
      break;
    }
  }
  return m;
}

bool in_ideal(const Exponent& a, const Exponent& b, const std::vector<Binomial>& basis) {
  return normal_form(a, basis) == normal_form(b, basis);
}

std::vector<Binomial> groebner_basis(const std::vector<Binomial>& generators, const MonomialOrder& order,
                                     const GroebnerCaps& caps, GroebnerStats* stats) {
  const auto start = std::chrono::steady_clock::now();
  GroebnerStats local;
  std::vector<Binomial> basis;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;

  auto add = [&](const Exponent& a, const Exponent& b) {
    Exponent ra = normal_form(a, basis), rb = normal_form(b, basis);
    Binomial g;
    if (!make_binomial(std::move(ra), std::move(rb), order, g)) {
      ++local.reductions_to_zero;
      return;
    }
    for (std::size_t i = 0; i < basis.size(); ++i) pairs.emplace_back(i, basis.size());
    basis.push_back(std::move(g));
  };

  for (const auto& g : generators) add(g.lead, g.trail);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Binomial& p = basis[i];
    const Binomial& q = basis[j];
    if (coprime(p.lead, q.lead)) continue;
    if (++local.spairs > caps.max_spairs)
      fail(ErrorKind::ScaleLimit, "Groebner basis computation exceeded " + std::to_string(caps.max_spairs) + " S-pairs");
    if (std::chrono::steady_clock::now() - start > caps.time_cap)
      fail(ErrorKind::ScaleLimit, "Groebner basis computation exceeded its time cap");
    Exponent l = lcm(p.lead, q.lead);
    Exponent a = l, b = l;
    for (std::size_t k = 0; k < l.size(); ++k) {
      a[k] += p.trail[k] - p.lead[k];
      b[k] += q.trail[k] - q.lead[k];
    }
    add(a, b);
  }

  // Minimal basis, then reduce every trailing monomial.
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !divides(basis[j].lead, basis[i].lead)) continue;
      redundant = basis[j].lead != basis[i].lead || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (auto& g : minimal) {
    std::vector<Binomial> others;
    for (const auto& h : minimal)
      if (!(h == g)) others.push_back(h);
    g.trail = normal_form(g.trail, others);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Binomial& x, const Binomial& y) { return order.less(x.lead, y.lead); });
  if (stats) *stats = local;
  return minimal;
}

}  // namespace gkz
