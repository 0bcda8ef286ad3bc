#pragma once

#include <cstddef>
#include <vector>

#include "apolar/matrix.hpp"

// Exact linear algebra over the rationals. Every routine clears the
// denominators row by row and runs Bareiss fraction-free elimination on the
// resulting integer matrix; the pivot in each column is the first nonzero
// entry at or below the current row, so results are deterministic.
namespace apolar::linalg {

struct Echelon {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form of `a` obtained through fraction-free elimination.
Echelon echelon(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);
Rational determinant(const RationalMatrix& a);

/// Throws DegenerateError when `a` is singular, InputError when not square.
RationalMatrix inverse(const RationalMatrix& a);

/// Basis of {x : a x = 0}, one vector per free column (that entry set to 1).
std::vector<std::vector<Rational>> kernel(const RationalMatrix& a);

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct Solution {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<Rational> particular;            // free variables set to zero
  std::vector<std::vector<Rational>> kernel;   // homogeneous solutions
};

/// Solves a x = b.
Solution solve(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace apolar::linalg
