#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apolar/form.hpp"

// Floating-point Waring decomposition: Levenberg-Marquardt on the Bombieri
// norm of sum_i alpha_i (h_i . x)^m - F with seeded random restarts.
namespace apolar::numeric {

struct Term {
  std::vector<double> h;
  double alpha = 0.0;
};

struct Decomposition {
  unsigned m = 0;
  std::vector<Term> terms;
  double residual = 0.0;       // Bombieri norm of the difference
  std::uint64_t subseed = 0;   // restart that produced it
};

struct DecomposeConfig {
  unsigned restarts = 200;
  unsigned max_iter = 200;
  double tol = 1e-9;           // on the squared residual
  std::uint64_t seed = 0;
  unsigned threads = 0;        // 0: hardware concurrency
};

enum class DecomposeStatus { Converged, NoConvergence };

struct DecomposeResult {
  DecomposeStatus status = DecomposeStatus::NoConvergence;
  std::vector<Decomposition> solutions;   // sorted by (residual, subseed), deduplicated
};

/// Explicit exact-to-float conversion of the graded-lex coefficient vector.
std::vector<double> to_double_coefficients(const Form& f);

/// Bombieri norm sqrt(sum_g c_g^2 g!/m!) of a coefficient vector.
double bombieri_norm(const std::vector<double>& coeffs, std::size_t nvars, unsigned degree);

/// Bombieri norm of sum_i alpha_i (h_i . x)^m - F.
double residual(const Form& f, const Decomposition& d);

/// Rescales every h so its first non-negligible coordinate is 1 (alpha picks
/// up c^m) and sorts the terms lexicographically by h.
Decomposition canonicalize(Decomposition d);

/// Same up to term order and per-term scaling, to `tol` per coordinate.
bool equivalent(const Decomposition& a, const Decomposition& b, double tol);

DecomposeResult waring_decompose_numeric(const Form& f, std::size_t n, const DecomposeConfig& config);

}  // namespace apolar::numeric
