#include "lpa/snf.hpp"

#include <stdexcept>

namespace lpa {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> min_width_entry(const LaurentMatrix& d, std::size_t from) {
  std::optional<Position> best;
  for (std::size_t r = from; r < d.rows(); ++r)
    for (std::size_t c = from; c < d.cols(); ++c) {
      if (d(r, c).is_zero()) continue;
      if (!best || d(r, c).width() < d(best->row, best->col).width()) best = Position{r, c};
    }
  return best;
}

// Clears row and column t below/right of the pivot.  Returns false if a
// nonzero remainder was left, in which case a smaller pivot now exists.
bool clear_cross(SNFResult& s, std::size_t t) {
  LaurentMatrix& d = s.D;
  bool clean = true;
  for (std::size_t r = t + 1; r < d.rows(); ++r) {
    if (d(r, t).is_zero()) continue;
    auto [q, rem] = divmod(d(r, t), d(t, t));
    d.add_row_multiple(r, t, -q);
    s.U.add_row_multiple(r, t, -q);
    if (!rem.is_zero()) clean = false;
  }
  for (std::size_t c = t + 1; c < d.cols(); ++c) {
    if (d(t, c).is_zero()) continue;
    auto [q, rem] = divmod(d(t, c), d(t, t));
    d.add_col_multiple(c, t, -q);
    s.V.add_col_multiple(c, t, -q);
    if (!rem.is_zero()) clean = false;
  }
  return clean;
}

}  // namespace

std::size_t SNFResult::rank() const {
  std::size_t r = 0;
  while (r < D.rows() && r < D.cols() && !D(r, r).is_zero()) ++r;
  return r;
}

std::vector<LaurentPoly> SNFResult::diagonal() const {
  std::vector<LaurentPoly> out;
  for (std::size_t k = 0; k < D.rows() && k < D.cols(); ++k) out.push_back(D(k, k));
  return out;
}

SNFResult snf(const LaurentMatrix& a) {
  SNFResult s{LaurentMatrix::identity(a.rows()), a, LaurentMatrix::identity(a.cols())};
  LaurentMatrix& d = s.D;
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = min_width_entry(d, t);
      if (!pivot) return s;
      d.swap_rows(t, pivot->row);
      s.U.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      s.V.swap_cols(t, pivot->col);
      if (!clear_cross(s, t)) continue;
      // The pivot must divide the remaining block; otherwise fold the
      // offending row in and reduce again.
      std::optional<std::size_t> bad_row;
      for (std::size_t r = t + 1; r < d.rows() && !bad_row; ++r)
        for (std::size_t c = t + 1; c < d.cols(); ++c)
          if (!d(r, c).is_zero() && !exact_divide(d(r, c), d(t, t))) {
            bad_row = r;
            break;
          }
      if (!bad_row) break;
      d.add_row_multiple(t, *bad_row, LaurentPoly(1));
      s.U.add_row_multiple(t, *bad_row, LaurentPoly(1));
    }
    auto [unit, normal] = d(t, t).normalize();
    LaurentPoly inv = unit.unit_inverse();
    d.scale_row(t, inv);
    s.U.scale_row(t, inv);
  }
  return s;
}

bool divisibility_chain(const LaurentMatrix& d) {
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (r != c && !d(r, c).is_zero()) return false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const LaurentPoly& cur = d(k, k);
    const LaurentPoly& next = d(k + 1, k + 1);
    if (cur.is_zero()) {
      if (!next.is_zero()) return false;
      continue;
    }
    if (!next.is_zero() && !exact_divide(next, cur)) return false;
  }
  return true;
}

std::optional<std::vector<LaurentPoly>> laurent_solve(const LaurentMatrix& a, const std::vector<LaurentPoly>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side size mismatch");
  SNFResult s = snf(a);
  // D (V^-1 z) = U b
  std::vector<LaurentPoly> c(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.rows(); ++k) c[r] += s.U(r, k) * b[k];
  const std::size_t rank = s.rank();
  std::vector<LaurentPoly> y(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (r < rank) {
      auto q = exact_divide(c[r], s.D(r, r));
      if (!q) return std::nullopt;
      y[r] = *q;
    } else if (!c[r].is_zero()) {
      return std::nullopt;
    }
  }
  std::vector<LaurentPoly> z(a.cols());
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) z[r] += s.V(r, k) * y[k];
  return z;
}

bool has_projection_generator_laurent(const LaurentMatrix& e, Involution inv) {
  if (e.rows() != e.cols() || !(e * e == e)) throw std::invalid_argument("matrix is not idempotent");
  LaurentMatrix eestar = e * conjugate_transpose(e, inv);
  for (std::size_t c = 0; c < e.cols(); ++c) {
    std::vector<LaurentPoly> column(e.rows());
    for (std::size_t r = 0; r < e.rows(); ++r) column[r] = e(r, c);
    if (!laurent_solve(eestar, column)) return false;
  }
  return true;
}

}  // namespace lpa
