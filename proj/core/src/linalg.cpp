#include "lnd/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace lnd {

namespace {

struct IntRows {
  std::vector<std::vector<Int>> rows;
};

// Scale each row by the lcm of its denominators; row scaling preserves the
// row space, hence RREF, nullspace and solution sets.
IntRows clear_denominators(const RatMatrix& m) {
  IntRows out;
  out.rows.assign(m.rows(), {});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int lcm(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int& den = m.at(i, j).get_den();
      Int g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / g * den;
    }
    out.rows[i].reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat scaled = m.at(i, j) * Rat(lcm);
      out.rows[i].emplace_back(scaled.get_num());
    }
  }
  return out;
}

struct Echelon {
  std::vector<std::vector<Rat>> rows;    // rational rows after both passes
  std::vector<std::size_t> pivot_cols;   // pivot column of row k
};

Echelon echelonize(const RatMatrix& m) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  IntRows z = clear_denominators(m);

  // Bareiss one-step fraction-free elimination. After k completed pivots
  // every entry is a (k+1)x(k+1) minor of the scaled input, so the division
  // by the previous pivot is exact.
  std::vector<std::size_t> pivot_cols;
  Int prev(1);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < nrows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < nrows && z.rows[sel][col] == 0) ++sel;
    if (sel == nrows) continue;
    if (sel != pivot_row) std::swap(z.rows[sel], z.rows[pivot_row]);

    const Int pivot = z.rows[pivot_row][col];
    for (std::size_t i = pivot_row + 1; i < nrows; ++i) {
      const Int factor = z.rows[i][col];
      for (std::size_t j = col + 1; j < ncols; ++j) {
        Int t = z.rows[i][j] * pivot - factor * z.rows[pivot_row][j];
        if (mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()) == 0)
          throw std::logic_error("fraction-free elimination: inexact division");
        mpz_divexact(z.rows[i][j].get_mpz_t(), t.get_mpz_t(),
                     prev.get_mpz_t());
      }
      z.rows[i][col] = 0;
    }
    prev = pivot;
    pivot_cols.push_back(col);
    ++pivot_row;
  }

  // Back pass over ℚ: make pivots 1 and clear entries above them.
  Echelon e;
  e.pivot_cols = std::move(pivot_cols);
  e.rows.assign(e.pivot_cols.size(), std::vector<Rat>(ncols, Rat(0)));
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
    const Rat inv_pivot = Rat(1) / Rat(z.rows[k][e.pivot_cols[k]]);
    for (std::size_t j = 0; j < ncols; ++j)
      e.rows[k][j] = Rat(z.rows[k][j]) * inv_pivot;
  }
  for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
    for (std::size_t above = 0; above < k; ++above) {
      Rat factor = e.rows[above][e.pivot_cols[k]];
      if (factor == 0) continue;
      for (std::size_t j = e.pivot_cols[k]; j < ncols; ++j)
        e.rows[above][j] -= factor * e.rows[k][j];
    }
  }
  return e;
}

}  // namespace

std::vector<std::size_t> rref(RatMatrix& m) {
  Echelon e = echelonize(m);
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t k = 0; k < e.rows.size(); ++k)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(k, j) = e.rows[k][j];
  m = std::move(out);
  return e.pivot_cols;
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
  Echelon e = echelonize(m);
  const std::size_t ncols = m.cols();
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[free_col] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
      v[e.pivot_cols[k]] = -e.rows[k][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& m,
                                      const std::vector<Rat>& b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solve: right-hand side size mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Echelon e = echelonize(aug);
  for (std::size_t c : e.pivot_cols)
    if (c == m.cols()) return std::nullopt;

  std::vector<Rat> x(m.cols(), Rat(0));
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
    x[e.pivot_cols[k]] = e.rows[k][m.cols()];
  return x;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix copy = m;
  return rref(copy).size();
}

}  // namespace lnd
