#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "apolar/form.hpp"
#include "apolar/matrix.hpp"
#include "apolar/multi_index.hpp"

// Polarity for homogeneous forms. Normalization throughout: the apolarity
// pairing satisfies <a^m, F> = F(a), hence <y^a, x^b> = delta_ab * a!/m!.
namespace apolar {

/// First polar P_a(F) = (1/m) sum_i a_i dF/dx_i, degree m-1.
Form polar(const Form& f, const PointVec& a);

/// P_G(F) = ((m-k)!/m!) G(d)F for G of degree k on the space opposite to F.
Form mixed_polar(const Form& f, const Form& g);

/// <G, F> for deg G = deg F on opposite spaces.
Rational pairing(const Form& g, const Form& f);

/// Matrix of ap_F^k : S^k(opposite) -> S^{m-k}(same space as F).
///   entries(beta, alpha) = ((m-k)!/m!) (alpha+beta)!/beta! f_{alpha+beta}
struct CatalecticantMatrix {
  Space source_space;     // space F lives on
  std::size_t nvars = 0;
  unsigned m = 0;
  unsigned k = 0;
  MonomialBasis row_basis;  // degree m-k, space of F
  MonomialBasis col_basis;  // degree k, opposite space
  RationalMatrix entries;
};

CatalecticantMatrix apolarity_matrix(const Form& f, unsigned k);

/// Builds the same matrix column by column from mixed_polar(F, y^alpha).
/// Used to cross-check the closed form.
RationalMatrix apolarity_matrix_by_columns(const Form& f, unsigned k);

/// The form ((m-k)!/m!)-weighted Gram matrix W * ap_F^k with
/// W = diag(beta!/(m-k)!); it is symmetric whenever m = 2k.
RationalMatrix pairing_gram(const CatalecticantMatrix& cat);

/// Middle catalecticant invertible. Throws InputError for odd degree.
bool is_nondegenerate(const Form& f);

/// The unique G (degree k, opposite space) with mixed_polar(F, G) = u, for F
/// non-degenerate of degree 2k. Throws DegenerateError otherwise.
Form apolar_inverse_apply(const Form& f, const Form& u);

/// Reusable inverse of a middle catalecticant.
class ApolarInverse {
 public:
  explicit ApolarInverse(const Form& f);
  Form apply(const Form& u) const;
  const RationalMatrix& matrix() const { return inverse_; }
  const CatalecticantMatrix& catalecticant() const { return cat_; }

 private:
  CatalecticantMatrix cat_;
  RationalMatrix inverse_;
};

struct HankelViolation {
  MultiIndex gamma;
  MultiIndex first_row, first_col;
  Rational first_value;
  MultiIndex second_row, second_col;
  Rational second_value;
};

/// Splittings of some gamma that imply different coefficients.
struct HankelDefect {
  std::vector<HankelViolation> violations;
  std::string report() const;
};

/// Form dual to a non-degenerate F of degree 2k, when the inverse of the
/// middle catalecticant is itself a catalecticant.
std::variant<Form, HankelDefect> dual_form(const Form& f);

/// Reads a degree-d form off a matrix that should be the matrix of ap_Phi^k
/// (k = d/2) of some Phi on `target_space`. Empty defect on success.
std::variant<Form, HankelDefect> form_from_catalecticant(const RationalMatrix& m, Space target_space,
                                                         std::size_t nvars, unsigned k);

/// Polarization F~(a, b, ..., c) for exactly m points.
Rational polarization_tensor_eval(const Form& f, const std::vector<PointVec>& points);

/// Coefficient matrix in S^2 (x) S^2 (monomial bases on both factors) of the
/// tensor attached to ap_F^2 of a quartic, where the source S^2 is identified
/// with its dual through the pairing:
///   B(alpha, beta) = (2/alpha!) cat(beta, alpha) = (alpha+beta)!/(6 alpha! beta!) f_{alpha+beta}
RationalMatrix biquadric_of(const Form& quartic);

struct SymmetryDefect {
  Rational max_violation;
  std::vector<std::size_t> worst_slots;   // tensor entry with the violation
  std::vector<std::size_t> worst_permuted;
  std::string report() const;
};

/// Expands B through pl_2 (x) pl_2 into a 4-tensor on `nvars` variables and
/// returns the quartic it restitutes if that tensor is fully symmetric.
/// Throws InputError if B is not square of size dim S^2 or not symmetric.
std::variant<Form, SymmetryDefect> quartic_from_biquadric(const RationalMatrix& b, std::size_t nvars,
                                                          Space space = Space::OnV);

}  // namespace apolar
