#pragma once

#include <vector>

#include "apolar/simd/kernels.hpp"

namespace apolar::simd::detail {

/// pw[j*(deg+1)+e] = point[j]^e, dpw[...] = e * point[j]^(e-1).
void fill_power_tables(const MonomialTable& table, std::span<const double> point, std::vector<double>& pw,
                       std::vector<double>& dpw);

void monomial_values_scalar(const MonomialTable&, std::span<const double>, std::span<double>);
void monomial_partials_scalar(const MonomialTable&, std::span<const double>, std::size_t, std::span<double>);
double weighted_dot_scalar(std::span<const double>, std::span<const double>, std::span<const double>);
void axpy_scalar(double, std::span<const double>, std::span<double>);

#if defined(APOLAR_HAVE_AVX2)
void monomial_values_avx2(const MonomialTable&, std::span<const double>, std::span<double>);
void monomial_partials_avx2(const MonomialTable&, std::span<const double>, std::size_t, std::span<double>);
double weighted_dot_avx2(std::span<const double>, std::span<const double>, std::span<const double>);
void axpy_avx2(double, std::span<const double>, std::span<double>);
#endif

}  // namespace apolar::simd::detail
