#include "apolar/linalg.hpp"

#include "apolar/errors.hpp"

namespace apolar::linalg {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Multiplies each row by the lcm of its denominators.
IntRows clear_denominators(const RationalMatrix& a) {
  IntRows rows(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) rows[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());
  }
  return rows;
}

struct FractionFree {
  IntRows rows;
  std::vector<std::size_t> pivots;
  int sign = 1;   // parity of the row swaps
};

// Bareiss elimination to row echelon form. After processing pivot r every
// entry below it is the corresponding (r+1)-minor, so the division by the
// previous pivot is exact.
FractionFree bareiss(IntRows rows, std::size_t ncols) {
  FractionFree ff;
  Integer prev = 1;
  std::size_t r = 0;
  const std::size_t nrows = rows.size();
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && sgn(rows[p][c]) == 0) ++p;
    if (p == nrows) continue;
    if (p != r) {
      std::swap(rows[p], rows[r]);
      ff.sign = -ff.sign;
    }
    const Integer& piv = rows[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const Integer lead = rows[i][c];
      for (std::size_t j = c + 1; j < ncols; ++j) {
        Integer v = piv * rows[i][j] - lead * rows[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = std::move(v);
      }
      rows[i][c] = 0;
    }
    prev = piv;
    ff.pivots.push_back(c);
    ++r;
  }
  // Entries of rows past the last pivot row are zero; entries left of a
  // skipped column in rows above are untouched and stay exact.
  ff.rows = std::move(rows);
  return ff;
}

}  // namespace

Echelon echelon(const RationalMatrix& a) {
  auto ff = bareiss(clear_denominators(a), a.cols());
  Echelon e;
  e.pivots = ff.pivots;
  e.reduced = RationalMatrix(a.rows(), a.cols());
  const std::size_t rk = ff.pivots.size();
  // Back substitution from the bottom pivot row upwards yields the RREF.
  for (std::size_t r = 0; r < rk; ++r) {
    const Integer& piv = ff.rows[r][ff.pivots[r]];
    for (std::size_t c = 0; c < a.cols(); ++c) e.reduced(r, c) = Rational(ff.rows[r][c], piv);
    for (std::size_t c = 0; c < a.cols(); ++c) e.reduced(r, c).canonicalize();
  }
  for (std::size_t r = rk; r-- > 0;) {
    const std::size_t pc = e.pivots[r];
    for (std::size_t above = 0; above < r; ++above) {
      const Rational factor = e.reduced(above, pc);
      if (sgn(factor) == 0) continue;
      for (std::size_t c = pc; c < a.cols(); ++c) e.reduced(above, c) -= factor * e.reduced(r, c);
    }
  }
  return e;
}

std::size_t rank(const RationalMatrix& a) { return bareiss(clear_denominators(a), a.cols()).pivots.size(); }

Rational determinant(const RationalMatrix& a) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    scale *= l;
  }
  auto ff = bareiss(clear_denominators(a), n);
  if (ff.pivots.size() < n) return 0;
  Rational d(ff.rows[n - 1][n - 1] * ff.sign, scale);
  d.canonicalize();
  return d;
}

Solution solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw InputError("right-hand side length mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto e = echelon(aug);
  Solution sol;
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
    sol.status = SolveStatus::Inconsistent;
    return sol;
  }
  sol.particular.assign(a.cols(), Rational(0));
  for (std::size_t r = 0; r < e.rank(); ++r) sol.particular[e.pivots[r]] = e.reduced(r, a.cols());
  sol.kernel = kernel(a);
  sol.status = sol.kernel.empty() ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return sol;
}

std::vector<std::vector<Rational>> kernel(const RationalMatrix& a) {
  const auto e = echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (!a.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  const auto e = echelon(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw DegenerateError("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

}  // namespace apolar::linalg
