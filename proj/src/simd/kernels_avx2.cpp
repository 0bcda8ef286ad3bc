// Only reached after a runtime CPU check. Functions carry the target
// attribute instead of compiling the file with -mavx2, so inline library code
// instantiated here stays baseline x86-64.
#include <immintrin.h>

#include "kernels_impl.hpp"

#define APOLAR_AVX2 __attribute__((target("avx2")))

namespace apolar::simd::detail {

namespace {

// Same multiplication order as the scalar loop (j = 0, 1, ...), so every lane
// reproduces the scalar product exactly.
template <bool Partial>
APOLAR_AVX2 void monomial_kernel(const MonomialTable& table, std::span<const double> point, std::size_t var, std::span<double> out) {
  thread_local std::vector<double> pw, dpw;
  fill_power_tables(table, point, pw, dpw);
  const std::size_t stride = table.degree + 1;
  const std::size_t n = table.count;
  std::size_t g = 0;
  for (; g + 4 <= n; g += 4) {
    __m256d acc = _mm256_set1_pd(1.0);
    for (std::size_t j = 0; j < table.nvars; ++j) {
      const __m128i e = _mm_loadu_si128(reinterpret_cast<const __m128i*>(&table.exps[j * n + g]));
      const double* base = (Partial && j == var ? dpw.data() : pw.data()) + j * stride;
      acc = _mm256_mul_pd(acc, _mm256_i32gather_pd(base, e, 8));
    }
    _mm256_storeu_pd(&out[g], acc);
  }
  for (; g < n; ++g) {
    double acc = 1.0;
    for (std::size_t j = 0; j < table.nvars; ++j) {
      const auto& src = Partial && j == var ? dpw : pw;
      acc *= src[j * stride + table.exps[j * n + g]];
    }
    out[g] = acc;
  }
}

}  // namespace

APOLAR_AVX2 void monomial_values_avx2(const MonomialTable& table, std::span<const double> point, std::span<double> out) {
  monomial_kernel<false>(table, point, 0, out);
}

APOLAR_AVX2 void monomial_partials_avx2(const MonomialTable& table, std::span<const double> point, std::size_t var,
                            std::span<double> out) {
  monomial_kernel<true>(table, point, var, out);
}

APOLAR_AVX2 double weighted_dot_avx2(std::span<const double> w, std::span<const double> a, std::span<const double> b) {
  const std::size_t n = w.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(&w[i]), _mm256_loadu_pd(&a[i]));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(p, _mm256_loadu_pd(&b[i])));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += w[i] * a[i] * b[i];
  return s;
}

APOLAR_AVX2 void axpy_avx2(double alpha, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_add_pd(_mm256_loadu_pd(&y[i]), _mm256_mul_pd(va, _mm256_loadu_pd(&x[i])));
    _mm256_storeu_pd(&y[i], r);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace apolar::simd::detail
