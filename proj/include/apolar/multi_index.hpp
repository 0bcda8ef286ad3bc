#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

/// Exponent vector of a monomial x_0^{e_0} ... x_{v-1}^{e_{v-1}}.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t nvars) : exps_(nvars, 0) {}
  MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps) {}
  explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static MultiIndex unit(std::size_t nvars, std::size_t var);

  std::size_t size() const { return exps_.size(); }
  unsigned degree() const;
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  std::span<const unsigned> exponents() const { return exps_; }

  /// Product of the factorials of the exponents.
  Integer factorial() const;

  /// Componentwise test `*this >= other`.
  bool divisible_by(const MultiIndex& other) const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  /// "[2,0,1]"
  std::string to_string() const;

 private:
  std::vector<unsigned> exps_;
};

/// Graded lexicographic order, descending, with x_0 > x_1 > ...: returns
/// true when `a` is listed before `b`.
struct GrlexDescending {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All monomials of one degree in `nvars` variables, in graded-lex descending
/// order, with O(log n) index lookup.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, unsigned degree);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return monomials_[i]; }
  auto begin() const { return monomials_.begin(); }
  auto end() const { return monomials_.end(); }

  /// Position of `idx`; throws InputError if it is not in the basis.
  std::size_t index_of(const MultiIndex& idx) const;

 private:
  std::size_t nvars_;
  unsigned degree_;
  std::vector<MultiIndex> monomials_;
  std::map<MultiIndex, std::size_t, GrlexDescending> lookup_;
};

/// C(nvars + degree - 1, degree).
std::size_t monomial_count(std::size_t nvars, unsigned degree);

}  // namespace apolar
