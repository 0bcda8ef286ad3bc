#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace apolar::simd {

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

const Kernels& scalar_kernels() {
  static const Kernels k{Isa::Scalar, detail::monomial_values_scalar, detail::monomial_partials_scalar,
                         detail::weighted_dot_scalar, detail::axpy_scalar};
  return k;
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(APOLAR_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const Kernels& kernels_for(Isa isa) {
  if (!supported(isa)) throw std::invalid_argument("SIMD variant " + std::string(isa_name(isa)) + " unavailable");
#if defined(APOLAR_HAVE_AVX2)
  if (isa == Isa::Avx2) {
    static const Kernels k{Isa::Avx2, detail::monomial_values_avx2, detail::monomial_partials_avx2,
                           detail::weighted_dot_avx2, detail::axpy_avx2};
    return k;
  }
#endif
  return scalar_kernels();
}

const Kernels& best_kernels() {
  static const Kernels& chosen = [&]() -> const Kernels& {
    const char* forced = std::getenv("APOLAR_SIMD");
    if (forced && std::string(forced) == "scalar") return scalar_kernels();
    return supported(Isa::Avx2) ? kernels_for(Isa::Avx2) : scalar_kernels();
  }();
  return chosen;
}

}  // namespace apolar::simd
