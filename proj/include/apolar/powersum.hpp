#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/form.hpp"
#include "apolar/linalg.hpp"
#include "apolar/matrix.hpp"

// Power-sum (Waring) representations F = sum_i alpha_i H_i^m and the
// membership test for quartics through three equivalent routes: the delta
// pattern of the apolar-inverse quadrics, the coefficient solve, and the
// vanishing of the pairing on quartics through the points.
namespace apolar {

struct RepresentationEntry {
  PointVec h;        // coefficient vector of the linear form
  Rational alpha;
};

/// sum_i alpha_i * (h_i . x)^m. Entries are kept normalized (first nonzero
/// coordinate of each h equal to 1, alpha rescaled) and sorted by h.
class Representation {
 public:
  Representation(unsigned m, std::vector<RepresentationEntry> entries);

  unsigned degree() const { return m_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<RepresentationEntry>& entries() const { return entries_; }

  /// The represented form, on the space the h's are coefficients for.
  Form form() const;

 private:
  unsigned m_;
  std::vector<RepresentationEntry> entries_;
};

/// Scales `p` so that its first nonzero coordinate is 1; returns the factor c
/// with p = c * normalized.
Rational normalize_projective(PointVec& p);

/// (h . x)^m as a form on the space whose linear forms have coefficient role
/// h.role.
Form power_of_linear(const PointVec& h, unsigned m);

bool verify_representation(const Form& f, const Representation& r);

struct AlphaSolution {
  linalg::SolveStatus status = linalg::SolveStatus::Inconsistent;
  std::vector<Rational> alphas;                   // particular solution when consistent
  std::vector<std::vector<Rational>> free_directions;
  std::vector<std::size_t> vanishing;             // indices with alpha_i = 0 (unique case)

  bool exists() const { return status != linalg::SolveStatus::Inconsistent; }
  bool all_nonzero() const { return status == linalg::SolveStatus::Unique && vanishing.empty(); }
};

/// Solves sum_i alpha_i (h_i . x)^m = F exactly. Throws InputError on
/// duplicate (projectively equal) points.
AlphaSolution solve_alphas(const Form& f, const std::vector<PointVec>& points);

/// Basis of the degree-`degree` forms on `space` vanishing at every point (the
/// points must be arguments of that space). Each basis form has coefficient 1
/// on its own free monomial and 0 on the other free monomials.
std::vector<Form> annihilator_forms(const std::vector<PointVec>& points, Space space, std::size_t nvars,
                                    unsigned degree);

struct MukaiCertificate {
  std::vector<Form> dual_quadrics;      // D_j with P_{D_j}(F) = H_j^2
  RationalMatrix eval_matrix;           // (i, j) = D_j(h_i)
  bool cond_54 = false;                 // delta pattern
  std::optional<std::vector<Rational>> alphas;
  bool alphas_all_nonzero = false;
  std::size_t annihilator_dim = 0;
  bool cond_57 = false;                 // every quartic through the points pairs to 0 with F
  bool agree = false;

  /// Plain-text table of eval_matrix followed by one line per route. With
  /// `framing`, '#' comment lines describe the membership convention.
  std::string report(bool framing = true) const;
};

/// Requires F a non-degenerate quartic, n = dim S^2 points, pairwise distinct,
/// and {H_j^2} linearly independent; throws InputError / DegenerateError
/// otherwise.
MukaiCertificate mukai_conditions(const Form& f, const std::vector<PointVec>& points);

struct PlantedInstance {
  Form form;
  std::vector<PointVec> points;
  std::vector<Rational> alphas;
  bool nondegenerate = false;
  bool squares_independent = false;
  unsigned attempts = 1;   // draws consumed, 1 when the first draw was tight
};

/// n = nvars(nvars+1)/2 random integer points with coordinates in
/// [-spread, spread] and nonzero alphas in [-spread, spread]; redraws (up to
/// `max_attempts`) until F is non-degenerate and the squares independent.
PlantedInstance planted_instance(std::uint64_t seed, std::size_t nvars, long spread = 3,
                                 unsigned max_attempts = 64);

/// Single draw of planted_instance without retrying; for genericity statistics.
PlantedInstance planted_draw(std::uint64_t seed, std::size_t nvars, long spread = 3);

/// Copy of `points` with entry `index` replaced by a fresh random point that
/// keeps the points pairwise distinct and their squares independent.
std::vector<PointVec> perturb_point(const std::vector<PointVec>& points, std::size_t index, std::uint64_t seed,
                                    long spread = 3);

/// {H^2} linearly independent.
bool squares_independent(const std::vector<PointVec>& points);

}  // namespace apolar
