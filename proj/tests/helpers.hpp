#pragma once

#include <cstdint>
#include <vector>

#include "apolar/form.hpp"

namespace testing {

inline apolar::Form binary_quartic_golden() {
  using apolar::MultiIndex;
  // x0^4 + x1^4 + (x0 + x1)^4
  return apolar::Form(apolar::Space::OnV, 2, 4,
                      {{MultiIndex{4, 0}, 2}, {MultiIndex{3, 1}, 4}, {MultiIndex{2, 2}, 6}, {MultiIndex{1, 3}, 4},
                       {MultiIndex{0, 4}, 2}});
}

inline apolar::RationalMatrix matrix_of(std::vector<std::vector<apolar::Rational>> rows) {
  apolar::RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

inline apolar::PointVec point(std::vector<apolar::Rational> coords, apolar::PointRole role) {
  return apolar::PointVec{std::move(coords), role};
}

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline apolar::PointVec random_point(std::uint64_t seed, std::size_t nvars, apolar::PointRole role, long bound = 4) {
  apolar::PointVec p{std::vector<apolar::Rational>(nvars), role};
  do {
    for (auto& c : p.coords) {
      seed = mix(seed);
      c = static_cast<long>(seed % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    }
  } while (p.is_zero());
  return p;
}

}  // namespace testing
