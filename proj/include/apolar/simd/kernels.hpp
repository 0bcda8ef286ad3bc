#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

// Floating-point inner loops of the numeric solver. Each kernel has a scalar
// reference version and, on x86-64, an AVX2 version picked at runtime. The
// AVX2 monomial kernels multiply in the same order as the scalar ones and
// agree bit for bit; the reductions agree to rounding.
namespace apolar::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Exponents of a monomial basis stored variable-major:
/// exps[var * count + g] is the exponent of x_var in monomial g.
struct MonomialTable {
  std::size_t count = 0;
  std::size_t nvars = 0;
  unsigned degree = 0;
  std::vector<std::int32_t> exps;
};

struct Kernels {
  Isa isa;
  /// out[g] = prod_j point[j]^exps(j, g)
  void (*monomial_values)(const MonomialTable& table, std::span<const double> point, std::span<double> out);
  /// out[g] = d/dx_var prod_j x_j^exps(j, g) at point
  void (*monomial_partials)(const MonomialTable& table, std::span<const double> point, std::size_t var,
                            std::span<double> out);
  /// sum_g w[g] * a[g] * b[g]
  double (*weighted_dot)(std::span<const double> w, std::span<const double> a, std::span<const double> b);
  /// y += alpha * x
  void (*axpy)(double alpha, std::span<const double> x, std::span<double> y);
};

const Kernels& scalar_kernels();

/// True when the CPU and the build both support `isa`.
bool supported(Isa isa);

/// Throws std::invalid_argument if `isa` is unsupported.
const Kernels& kernels_for(Isa isa);

/// Widest supported ISA, unless APOLAR_SIMD=scalar is set in the environment.
const Kernels& best_kernels();

}  // namespace apolar::simd
