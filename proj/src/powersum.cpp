#include "apolar/powersum.hpp"

#include <algorithm>
#include <random>

#include "apolar/errors.hpp"
#include "apolar/polarity.hpp"

namespace apolar {

namespace {

// The space of the forms whose coefficient vectors have this role.
Space space_with_coefficients(PointRole role) { return role == PointRole::InDual ? Space::OnV : Space::OnDual; }

bool projectively_equal(const PointVec& a, const PointVec& b) {
  // rank of the 2 x v matrix [a; b] is < 2
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a.coords[i] * b.coords[j] != a.coords[j] * b.coords[i]) return false;
    }
  }
  return true;
}

void check_points(const std::vector<PointVec>& points, std::size_t nvars, PointRole role, const char* op) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p.size() != nvars) throw InputError(std::string(op) + ": point has the wrong dimension");
    if (p.role != role) throw InputError(std::string(op) + ": point lies in the wrong space");
    if (p.is_zero()) throw InputError(std::string(op) + ": zero point");
    for (std::size_t j = 0; j < i; ++j) {
      if (projectively_equal(points[j], p)) {
        throw InputError(std::string(op) + ": points " + std::to_string(j) + " and " + std::to_string(i) +
                         " coincide projectively");
      }
    }
  }
}

}  // namespace

Rational normalize_projective(PointVec& p) {
  const auto it = std::find_if(p.coords.begin(), p.coords.end(), [](const Rational& c) { return sgn(c) != 0; });
  if (it == p.coords.end()) throw InputError("cannot normalize the zero vector");
  const Rational c = *it;
  for (auto& x : p.coords) x /= c;
  return c;
}

Representation::Representation(unsigned m, std::vector<RepresentationEntry> entries) : m_(m) {
  for (auto& e : entries) {
    if (e.h.is_zero()) throw InputError("representation: zero linear form");
    if (!entries_.empty() && (e.h.size() != entries_.front().h.size() || e.h.role != entries_.front().h.role)) {
      throw InputError("representation: linear forms of different shapes");
    }
    const Rational c = normalize_projective(e.h);
    // alpha (c h')^m = (alpha c^m) h'^m
    for (unsigned i = 0; i < m; ++i) e.alpha *= c;
    entries_.push_back(std::move(e));
  }
  std::sort(entries_.begin(), entries_.end(), [](const RepresentationEntry& a, const RepresentationEntry& b) {
    return std::lexicographical_compare(b.h.coords.begin(), b.h.coords.end(), a.h.coords.begin(), a.h.coords.end());
  });
}

Form Representation::form() const {
  if (entries_.empty()) throw InputError("representation has no entries");
  const auto& h0 = entries_.front().h;
  Form total(space_with_coefficients(h0.role), h0.size(), m_);
  for (const auto& e : entries_) total = add(total, scale(power_of_linear(e.h, m_), e.alpha));
  return total;
}

Form power_of_linear(const PointVec& h, unsigned m) {
  if (h.is_zero()) throw InputError("power_of_linear: zero linear form");
  return power(Form::linear(space_with_coefficients(h.role), h.coords), m);
}

bool verify_representation(const Form& f, const Representation& r) {
  if (r.degree() != f.degree()) throw InputError("verify_representation: degrees differ");
  for (const auto& e : r.entries()) {
    if (e.h.size() != f.nvars()) throw InputError("verify_representation: dimension mismatch");
    if (e.h.role != coefficient_role(f.space())) throw InputError("verify_representation: linear forms on the wrong space");
  }
  if (r.size() == 0) return f.is_zero();
  return r.form() == f;
}

AlphaSolution solve_alphas(const Form& f, const std::vector<PointVec>& points) {
  check_points(points, f.nvars(), coefficient_role(f.space()), "solve_alphas");
  const MonomialBasis basis(f.nvars(), f.degree());
  RationalMatrix a(basis.size(), points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto col = power_of_linear(points[j], f.degree()).coefficient_vector();
    for (std::size_t r = 0; r < basis.size(); ++r) a(r, j) = col[r];
  }
  const auto sol = linalg::solve(a, f.coefficient_vector());
  AlphaSolution out;
  out.status = sol.status;
  if (sol.status == linalg::SolveStatus::Inconsistent) return out;
  out.alphas = sol.particular;
  out.free_directions = sol.kernel;
  if (sol.status == linalg::SolveStatus::Unique) {
    for (std::size_t i = 0; i < out.alphas.size(); ++i) {
      if (sgn(out.alphas[i]) == 0) out.vanishing.push_back(i);
    }
  }
  return out;
}

std::vector<Form> annihilator_forms(const std::vector<PointVec>& points, Space space, std::size_t nvars,
                                    unsigned degree) {
  for (const auto& p : points) {
    if (p.size() != nvars) throw InputError("annihilator_forms: point has the wrong dimension");
    if (p.role != argument_role(space)) throw InputError("annihilator_forms: point lies in the wrong space");
    if (p.is_zero()) throw InputError("annihilator_forms: zero point");
  }
  const MonomialBasis basis(nvars, degree);
  RationalMatrix eval(points.size(), basis.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t c = 0; c < basis.size(); ++c) eval(i, c) = evaluate(Form::monomial(space, basis[c]), points[i]);
  }
  std::vector<Form> forms;
  for (const auto& v : linalg::kernel(eval)) forms.push_back(Form::from_coefficients(space, basis, v));
  return forms;
}

bool squares_independent(const std::vector<PointVec>& points) {
  if (points.empty()) return true;
  const std::size_t nvars = points.front().size();
  const MonomialBasis basis(nvars, 2);
  RationalMatrix a(basis.size(), points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto col = power_of_linear(points[j], 2).coefficient_vector();
    for (std::size_t r = 0; r < basis.size(); ++r) a(r, j) = col[r];
  }
  return linalg::rank(a) == points.size();
}

MukaiCertificate mukai_conditions(const Form& f, const std::vector<PointVec>& points) {
  if (f.degree() != 4) throw InputError("mukai_conditions: F must be a quartic");
  const std::size_t n = monomial_count(f.nvars(), 2);
  if (points.size() != n) {
    throw InputError("mukai_conditions: need n = dim S^2 = " + std::to_string(n) + " points, got " +
                     std::to_string(points.size()));
  }
  check_points(points, f.nvars(), coefficient_role(f.space()), "mukai_conditions");
  const ApolarInverse inverse(f);
  if (!squares_independent(points)) {
    throw DegenerateError("mukai_conditions: the squares H_j^2 are linearly dependent");
  }

  MukaiCertificate cert;
  for (const auto& h : points) cert.dual_quadrics.push_back(inverse.apply(power_of_linear(h, 2)));

  cert.eval_matrix = RationalMatrix(n, n);
  cert.cond_54 = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cert.eval_matrix(i, j) = evaluate(cert.dual_quadrics[j], points[i]);
      const bool zero = sgn(cert.eval_matrix(i, j)) == 0;
      if ((i == j) == zero) cert.cond_54 = false;
    }
  }

  const auto alphas = solve_alphas(f, points);
  if (alphas.exists()) cert.alphas = alphas.alphas;
  cert.alphas_all_nonzero = alphas.all_nonzero();

  const auto annihilator = annihilator_forms(points, opposite(f.space()), f.nvars(), 4);
  cert.annihilator_dim = annihilator.size();
  cert.cond_57 = std::all_of(annihilator.begin(), annihilator.end(),
                             [&](const Form& g) { return sgn(pairing(g, f)) == 0; });

  cert.agree = cert.cond_54 == cert.alphas_all_nonzero && cert.alphas_all_nonzero == cert.cond_57;
  return cert;
}

std::string MukaiCertificate::report(bool framing) const {
  std::string out;
  if (framing) {
    out += "# D_j is the quadric with P_{D_j}(F) = H_j^2; eval_matrix(i,j) = D_j(h_i)\n";
    out += "# membership is tested for F = sum alpha_i H_i^4 with every alpha_i nonzero\n";
  }
  out += "eval_matrix " + eval_matrix.to_text();
  out += std::string("cond54=") + (cond_54 ? "true" : "false") + "\n";
  out += "alphas=";
  if (alphas) {
    for (std::size_t i = 0; i < alphas->size(); ++i) out += (i ? "," : "") + to_string((*alphas)[i]);
    if (!alphas_all_nonzero) out += " (not all nonzero)";
  } else {
    out += "none";
  }
  out += "\n";
  out += "annihilator_dim=" + std::to_string(annihilator_dim) + "\n";
  out += std::string("cond57=") + (cond_57 ? "true" : "false") + "\n";
  out += std::string("agree=") + (agree ? "true" : "false") + "\n";
  return out;
}

namespace {

PointVec random_point(std::mt19937_64& rng, std::size_t nvars, long spread) {
  std::uniform_int_distribution<long> coord(-spread, spread);
  PointVec p;
  p.role = PointRole::InDual;
  do {
    p.coords.assign(nvars, Rational(0));
    for (auto& c : p.coords) c = coord(rng);
  } while (p.is_zero());
  return p;
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t attempt) {
  return attempt == 0 ? seed : seed ^ (attempt * 0x9E3779B97F4A7C15ull);
}

}  // namespace

PlantedInstance planted_draw(std::uint64_t seed, std::size_t nvars, long spread) {
  if (nvars < 2) throw InputError("planted_instance: need at least two variables");
  if (spread < 1) throw InputError("planted_instance: spread must be positive");
  std::mt19937_64 rng(seed);
  const std::size_t n = monomial_count(nvars, 2);
  PlantedInstance inst{Form(Space::OnV, nvars, 4), {}, {}, false, false, 1};
  while (inst.points.size() < n) {
    PointVec p = random_point(rng, nvars, spread);
    const bool duplicate = std::any_of(inst.points.begin(), inst.points.end(),
                                       [&](const PointVec& q) { return projectively_equal(p, q); });
    if (duplicate) continue;
    normalize_projective(p);
    inst.points.push_back(std::move(p));
  }
  std::uniform_int_distribution<long> alpha(1, spread);
  std::bernoulli_distribution negative(0.5);
  Form f(Space::OnV, nvars, 4);
  for (const auto& p : inst.points) {
    Rational a = alpha(rng);
    if (negative(rng)) a = -a;
    f = add(f, scale(power_of_linear(p, 4), a));
    inst.alphas.push_back(a);
  }
  inst.form = std::move(f);
  inst.nondegenerate = is_nondegenerate(inst.form);
  inst.squares_independent = squares_independent(inst.points);
  return inst;
}

PlantedInstance planted_instance(std::uint64_t seed, std::size_t nvars, long spread, unsigned max_attempts) {
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    auto inst = planted_draw(sub_seed(seed, attempt), nvars, spread);
    if (inst.nondegenerate && inst.squares_independent) {
      inst.attempts = attempt + 1;
      return inst;
    }
  }
  throw InputError("planted_instance: no tight instance after " + std::to_string(max_attempts) + " draws");
}

std::vector<PointVec> perturb_point(const std::vector<PointVec>& points, std::size_t index, std::uint64_t seed,
                                    long spread) {
  if (index >= points.size()) throw InputError("perturb_point: index out of range");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto out = points;
    PointVec p = random_point(rng, points[index].size(), spread);
    p.role = points[index].role;
    normalize_projective(p);
    out[index] = p;
    bool distinct = true;
    for (std::size_t j = 0; j < out.size() && distinct; ++j) {
      if (j != index && projectively_equal(out[j], p)) distinct = false;
    }
    if (distinct && projectively_equal(points[index], p)) distinct = false;
    if (distinct && squares_independent(out)) return out;
  }
  throw InputError("perturb_point: no admissible replacement found");
}

}  // namespace apolar
