#include "kernels_impl.hpp"

namespace apolar::simd::detail {

void fill_power_tables(const MonomialTable& table, std::span<const double> point, std::vector<double>& pw,
                       std::vector<double>& dpw) {
  const std::size_t stride = table.degree + 1;
  pw.assign(table.nvars * stride, 0.0);
  dpw.assign(table.nvars * stride, 0.0);
  for (std::size_t j = 0; j < table.nvars; ++j) {
    double p = 1.0;
    for (unsigned e = 0; e <= table.degree; ++e) {
      pw[j * stride + e] = p;
      // d/dx x^e = e x^(e-1)
      dpw[j * stride + e] = e == 0 ? 0.0 : static_cast<double>(e) * pw[j * stride + e - 1];
      p *= point[j];
    }
  }
}

void monomial_values_scalar(const MonomialTable& table, std::span<const double> point, std::span<double> out) {
  thread_local std::vector<double> pw, dpw;
  fill_power_tables(table, point, pw, dpw);
  const std::size_t stride = table.degree + 1;
  for (std::size_t g = 0; g < table.count; ++g) {
    double acc = 1.0;
    for (std::size_t j = 0; j < table.nvars; ++j) acc *= pw[j * stride + table.exps[j * table.count + g]];
    out[g] = acc;
  }
}

void monomial_partials_scalar(const MonomialTable& table, std::span<const double> point, std::size_t var,
                              std::span<double> out) {
  thread_local std::vector<double> pw, dpw;
  fill_power_tables(table, point, pw, dpw);
  const std::size_t stride = table.degree + 1;
  for (std::size_t g = 0; g < table.count; ++g) {
    double acc = 1.0;
    for (std::size_t j = 0; j < table.nvars; ++j) {
      const auto& src = j == var ? dpw : pw;
      acc *= src[j * stride + table.exps[j * table.count + g]];
    }
    out[g] = acc;
  }
}

double weighted_dot_scalar(std::span<const double> w, std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * a[i] * b[i];
  return s;
}

void axpy_scalar(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace apolar::simd::detail
