#include "gkz/lattice.hpp"

#include "gkz/error.hpp"

#include <utility>

namespace gkz {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row with the smallest nonzero |h(i, col)| among rows [from, rows), or rows().
std::size_t smallest_in_column(const IntMatrix& h, std::size_t col, std::size_t from) {
  std::size_t best = h.rows();
  for (std::size_t i = from; i < h.rows(); ++i) {
    if (h(i, col) == 0) continue;
    if (best == h.rows() || abs(h(i, col)) < abs(h(best, col))) best = i;
  }
  return best;
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0, {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
    while (true) {
      std::size_t p = smallest_in_column(h, j, r);
      if (p == h.rows()) break;
      h.swap_rows(r, p);
      u.swap_rows(r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, j) == 0) continue;
        Integer q = floor_div(h(i, j), h(r, j));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, j) == 0) continue;
    if (h(r, j) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, j), h(r, j));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    out.pivot_columns.push_back(j);
    ++r;
  }
  out.rank = r;
  return out;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), {}};
  IntMatrix& s = out.s;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;
  const std::size_t limit = std::min(s.rows(), s.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    // Move the smallest nonzero entry of the trailing block to (t, t).
    std::size_t bi = s.rows(), bj = s.cols();
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j)
        if (s(i, j) != 0 && (bi == s.rows() || abs(s(i, j)) < abs(s(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == s.rows()) break;
    s.swap_rows(t, bi);
    u.swap_rows(t, bi);
    s.swap_columns(t, bj);
    v.swap_columns(t, bj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q = floor_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q = floor_div(s(t, j), s(t, t));
        s.add_column_multiple(j, t, -q);
        v.add_column_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder exists in row t or column t; make it the pivot.
        std::size_t pi = t, pj = t;
        for (std::size_t i = t + 1; i < s.rows(); ++i)
          if (s(i, t) != 0 && abs(s(i, t)) < abs(s(pi, pj))) { pi = i; pj = t; }
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (s(t, j) != 0 && abs(s(t, j)) < abs(s(pi, pj))) { pi = t; pj = j; }
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_columns(t, pj);
        v.swap_columns(t, pj);
        continue;
      }
      // Enforce d_t | every remaining entry.
      std::size_t bad_row = s.rows();
      for (std::size_t i = t + 1; i < s.rows() && bad_row == s.rows(); ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == s.rows()) break;
      s.add_row_multiple(t, bad_row, 1);
      u.add_row_multiple(t, bad_row, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
    out.diagonal.push_back(s(t, t));
  }
  return out;
}

LatticeBasis kernel_lattice(const IntMatrix& a) {
  const std::size_t n = a.cols();
  HermiteForm form = hnf(a.transpose());
  std::vector<IntVector> rows;
  for (std::size_t i = form.rank; i < n; ++i) {
    auto r = form.u.row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  LatticeBasis basis{n, {}};
  if (rows.empty()) return basis;
  // Canonical representative of the same lattice.
  HermiteForm canonical = hnf(IntMatrix::from_rows(rows, n));
  for (std::size_t i = 0; i < canonical.rank; ++i) {
    auto r = canonical.h.row(i);
    basis.vectors.emplace_back(r.begin(), r.end());
  }
  return basis;
}

std::optional<IntVector> member_of_image_lattice(std::span<const Integer> v, const IntMatrix& m) {
  if (v.size() != m.rows()) fail(ErrorKind::InvalidInput, "member_of_image_lattice: dimension mismatch");
  HermiteForm form = hnf(m.transpose());
  IntVector residual(v.begin(), v.end());
  IntVector w(m.cols(), 0);
  for (std::size_t i = 0; i < form.rank; ++i) {
    const std::size_t p = form.pivot_columns[i];
    const Integer& pivot = form.h(i, p);
    if (!mpz_divisible_p(residual[p].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
    Integer coefficient = residual[p] / pivot;
    for (std::size_t c = 0; c < residual.size(); ++c) residual[c] -= coefficient * form.h(i, c);
    w[i] = coefficient;
  }
  for (const auto& r : residual)
    if (r != 0) return std::nullopt;
  return form.u.transpose() * std::span<const Integer>(w);
}

std::optional<RatVector> solve_rational(const IntMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) fail(ErrorKind::InvalidInput, "solve_rational: dimension mismatch");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<RatVector> aug(rows, RatVector(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m(i, j);
    aug[i][cols] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t p = r;
    while (p < rows && aug[p][j] == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[r], aug[p]);
    Rational inv = 1 / aug[r][j];
    for (std::size_t k = j; k <= cols; ++k) aug[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][j] == 0) continue;
      Rational f = aug[i][j];
      for (std::size_t k = j; k <= cols; ++k) aug[i][k] -= f * aug[r][k];
    }
    pivots.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (aug[i][cols] != 0) return std::nullopt;
  RatVector x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

std::optional<Parameter> solve_gaussian(const IntMatrix& m, std::span<const GaussRat> b) {
  RatVector re(b.size()), im(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    re[i] = b[i].re();
    im[i] = b[i].im();
  }
  auto x = solve_rational(m, re);
  auto y = solve_rational(m, im);
  if (!x || !y) return std::nullopt;
  Parameter out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out[j] = GaussRat((*x)[j], (*y)[j]);
  return out;
}

Integer lattice_index(const IntMatrix& m) {
  Integer index = 1;
  for (const auto& d : snf(m).diagonal) index *= d;
  return index;
}

LatticeCoordinates column_lattice_coordinates(const IntMatrix& a) {
  const std::size_t d = a.rows(), n = a.cols();
  HermiteForm form = hnf(a.transpose());
  LatticeCoordinates out;
  out.basis = IntMatrix(d, form.rank);
  for (std::size_t k = 0; k < form.rank; ++k)
    for (std::size_t i = 0; i < d; ++i) out.basis(i, k) = form.h(k, i);
  out.coordinates = IntMatrix(form.rank, n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector column = a.column(j);
    auto z = member_of_image_lattice(column, out.basis);
    if (!z) fail(ErrorKind::Internal, "column outside its own lattice");
    for (std::size_t k = 0; k < form.rank; ++k) out.coordinates(k, j) = (*z)[k];
  }
  out.is_identity = form.rank == d && out.basis == IntMatrix::identity(d);
  return out;
}

}  // namespace gkz
