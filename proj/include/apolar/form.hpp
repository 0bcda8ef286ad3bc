#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "apolar/matrix.hpp"
#include "apolar/multi_index.hpp"
#include "apolar/rational.hpp"

namespace apolar {

/// Which space a form is a function on. `OnV` forms are elements of S^m V*
/// (polynomials in x); `OnDual` forms are elements of S^k V (polynomials in
/// the dual variables y).
enum class Space { OnV, OnDual };

enum class PointRole { InV, InDual };

inline Space opposite(Space s) { return s == Space::OnV ? Space::OnDual : Space::OnV; }

/// Points a form of this space is evaluated at.
inline PointRole argument_role(Space s) { return s == Space::OnV ? PointRole::InV : PointRole::InDual; }

/// The space whose forms are evaluated at points of this role.
inline Space space_of(PointRole r) { return r == PointRole::InV ? Space::OnV : Space::OnDual; }

/// The coefficient vector of a linear form of space `s` is a point of this
/// role: a linear form on V is a point of the dual space and vice versa.
inline PointRole coefficient_role(Space s) { return s == Space::OnV ? PointRole::InDual : PointRole::InV; }

struct PointVec {
  std::vector<Rational> coords;
  PointRole role = PointRole::InV;

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
};

/// Homogeneous form of a fixed degree with exact rational coefficients.
/// Immutable once constructed; zero coefficients are never stored.
class Form {
 public:
  using Terms = std::map<MultiIndex, Rational, GrlexDescending>;

  /// The zero form.
  Form(Space space, std::size_t nvars, unsigned degree);
  /// Validates that every multi-index has `nvars` entries summing to
  /// `degree`; drops zero coefficients.
  Form(Space space, std::size_t nvars, unsigned degree, Terms terms);

  static Form monomial(Space space, const MultiIndex& idx, const Rational& coef = 1);
  /// sum_i coeffs[i] * x_i
  static Form linear(Space space, std::span<const Rational> coeffs);
  static Form constant(Space space, std::size_t nvars, const Rational& value);

  Space space() const { return space_; }
  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const MultiIndex& idx) const;

  /// Coefficients in the graded-lex monomial basis of this degree.
  std::vector<Rational> coefficient_vector() const;
  static Form from_coefficients(Space space, const MonomialBasis& basis, std::span<const Rational> coeffs);

  /// Human readable, e.g. "2*x0^2 + x0*x1 - 1/3*x1^2" ("y" for dual forms).
  std::string to_string() const;

  friend bool operator==(const Form& a, const Form& b);

 private:
  Space space_;
  std::size_t nvars_;
  unsigned degree_;
  Terms terms_;
};

Form add(const Form& f, const Form& g);
Form subtract(const Form& f, const Form& g);
Form scale(const Form& f, const Rational& c);
Form multiply(const Form& f, const Form& g);
Form power(const Form& f, unsigned exponent);

inline Form operator+(const Form& f, const Form& g) { return add(f, g); }
inline Form operator-(const Form& f, const Form& g) { return subtract(f, g); }
inline Form operator*(const Form& f, const Form& g) { return multiply(f, g); }
inline Form operator*(const Rational& c, const Form& f) { return scale(f, c); }

Rational evaluate(const Form& f, const PointVec& p);

/// Iterated partial derivative d^idx f.
Form differentiate(const Form& f, const MultiIndex& idx);

/// f(M x). Throws DegenerateError for a singular M.
Form change_coords(const Form& f, const RationalMatrix& m);

/// Every coefficient uniform in [-coeff_bound, coeff_bound]; deterministic in
/// `seed`.
Form random_form(std::uint64_t seed, std::size_t nvars, unsigned degree, long coeff_bound,
                 Space space = Space::OnV);

}  // namespace apolar
