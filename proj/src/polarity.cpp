#include "apolar/polarity.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "apolar/errors.hpp"
#include "apolar/linalg.hpp"

namespace apolar {

Form polar(const Form& f, const PointVec& a) {
  if (f.degree() == 0) throw InputError("polar: form has degree 0");
  if (a.size() != f.nvars()) throw InputError("polar: point has the wrong dimension");
  if (a.role != argument_role(f.space())) throw InputError("polar: point lies in the wrong space");
  Form result(f.space(), f.nvars(), f.degree() - 1);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (sgn(a.coords[i]) == 0) continue;
    result = add(result, scale(differentiate(f, MultiIndex::unit(f.nvars(), i)), a.coords[i]));
  }
  return scale(result, Rational(1, f.degree()));
}

Form mixed_polar(const Form& f, const Form& g) {
  if (g.space() != opposite(f.space())) throw InputError("mixed_polar: G must live on the space dual to F's");
  if (g.nvars() != f.nvars()) throw InputError("mixed_polar: variable counts differ");
  if (g.degree() > f.degree()) throw InputError("mixed_polar: deg G exceeds deg F");
  const unsigned m = f.degree();
  const unsigned k = g.degree();
  Form::Terms t;
  for (const auto& [alpha, galpha] : g.terms()) {
    for (const auto& [gamma, fgamma] : f.terms()) {
      if (!gamma.divisible_by(alpha)) continue;
      const MultiIndex beta = gamma - alpha;
      t[beta] += galpha * fgamma * Rational(gamma.factorial(), beta.factorial());
    }
  }
  for (auto& [idx, c] : t) {
    c *= Rational(factorial(m - k), factorial(m));
  }
  return Form(f.space(), f.nvars(), m - k, std::move(t));
}

Rational pairing(const Form& g, const Form& f) {
  if (g.degree() != f.degree()) throw InputError("pairing: degrees differ");
  return mixed_polar(f, g).coefficient(MultiIndex(f.nvars()));
}

CatalecticantMatrix apolarity_matrix(const Form& f, unsigned k) {
  if (k < 1 || k > f.degree()) throw InputError("apolarity_matrix: need 1 <= k <= deg F");
  const unsigned m = f.degree();
  CatalecticantMatrix cat{f.space(),
                          f.nvars(),
                          m,
                          k,
                          MonomialBasis(f.nvars(), m - k),
                          MonomialBasis(f.nvars(), k),
                          RationalMatrix()};
  cat.entries = RationalMatrix(cat.row_basis.size(), cat.col_basis.size());
  const Rational norm(factorial(m - k), factorial(m));
  for (std::size_t r = 0; r < cat.row_basis.size(); ++r) {
    const auto& beta = cat.row_basis[r];
    for (std::size_t c = 0; c < cat.col_basis.size(); ++c) {
      const auto& alpha = cat.col_basis[c];
      const MultiIndex gamma = alpha + beta;
      const Rational coef = f.coefficient(gamma);
      if (sgn(coef) == 0) continue;
      Rational v = norm * coef * Rational(gamma.factorial(), beta.factorial());
      v.canonicalize();
      cat.entries(r, c) = v;
    }
  }
  return cat;
}

RationalMatrix apolarity_matrix_by_columns(const Form& f, unsigned k) {
  if (k < 1 || k > f.degree()) throw InputError("apolarity_matrix: need 1 <= k <= deg F");
  const MonomialBasis rows(f.nvars(), f.degree() - k);
  const MonomialBasis cols(f.nvars(), k);
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Form image = mixed_polar(f, Form::monomial(opposite(f.space()), cols[c]));
    const auto v = image.coefficient_vector();
    for (std::size_t r = 0; r < rows.size(); ++r) m(r, c) = v[r];
  }
  return m;
}

RationalMatrix pairing_gram(const CatalecticantMatrix& cat) {
  RationalMatrix g = cat.entries;
  const Integer top = factorial(cat.m - cat.k);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const Rational w(cat.row_basis[r].factorial(), top);
    for (std::size_t c = 0; c < g.cols(); ++c) {
      g(r, c) *= w;
      g(r, c).canonicalize();
    }
  }
  return g;
}

namespace {

unsigned middle_degree(const Form& f) {
  if (f.degree() == 0 || f.degree() % 2 != 0) {
    throw InputError("non-degeneracy needs a form of positive even degree, got " + std::to_string(f.degree()));
  }
  return f.degree() / 2;
}

}  // namespace

bool is_nondegenerate(const Form& f) {
  const auto cat = apolarity_matrix(f, middle_degree(f));
  return linalg::rank(cat.entries) == cat.entries.rows();
}

ApolarInverse::ApolarInverse(const Form& f) : cat_(apolarity_matrix(f, middle_degree(f))) {
  try {
    inverse_ = linalg::inverse(cat_.entries);
  } catch (const DegenerateError&) {
    throw DegenerateError("form is degenerate: its middle catalecticant is singular");
  }
}

Form ApolarInverse::apply(const Form& u) const {
  if (u.space() != cat_.source_space || u.nvars() != cat_.nvars || u.degree() != cat_.k) {
    throw InputError("apolar_inverse_apply: u must be a degree-k form on the space of F");
  }
  const auto coeffs = inverse_ * u.coefficient_vector();
  return Form::from_coefficients(opposite(cat_.source_space), cat_.col_basis, coeffs);
}

Form apolar_inverse_apply(const Form& f, const Form& u) { return ApolarInverse(f).apply(u); }

std::string HankelDefect::report() const {
  std::string out = "hankel-defect violations=" + std::to_string(violations.size()) + "\n";
  for (const auto& v : violations) {
    out += "gamma=" + v.gamma.to_string() + " split=(" + v.first_row.to_string() + "," + v.first_col.to_string() +
           ") value=" + to_string(v.first_value) + " split=(" + v.second_row.to_string() + "," +
           v.second_col.to_string() + ") value=" + to_string(v.second_value) + "\n";
  }
  return out;
}

std::variant<Form, HankelDefect> form_from_catalecticant(const RationalMatrix& m, Space target_space,
                                                         std::size_t nvars, unsigned k) {
  const MonomialBasis basis(nvars, k);
  if (m.rows() != basis.size() || m.cols() != basis.size()) {
    throw InputError("form_from_catalecticant: matrix size does not match dim S^k");
  }
  // entries(alpha, beta) = (k!/(2k)!) (alpha+beta)!/alpha! phi_{alpha+beta}
  struct Candidate {
    std::size_t row, col;
    Rational value;
  };
  std::map<MultiIndex, std::vector<Candidate>, GrlexDescending> by_gamma;
  const Rational scale(factorial(2 * k), factorial(k));
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const MultiIndex gamma = basis[r] + basis[c];
      Rational phi = m(r, c) * scale * Rational(basis[r].factorial(), gamma.factorial());
      phi.canonicalize();
      by_gamma[gamma].push_back({r, c, std::move(phi)});
    }
  }
  HankelDefect defect;
  Form::Terms terms;
  for (const auto& [gamma, cands] : by_gamma) {
    const auto& first = cands.front();
    for (std::size_t i = 1; i < cands.size(); ++i) {
      if (cands[i].value != first.value) {
        defect.violations.push_back({gamma, basis[first.row], basis[first.col], first.value, basis[cands[i].row],
                                     basis[cands[i].col], cands[i].value});
      }
    }
    terms.emplace(gamma, first.value);
  }
  if (!defect.violations.empty()) return defect;
  Form phi(target_space, nvars, 2 * k, std::move(terms));
  if (!(apolarity_matrix(phi, k).entries == m)) {
    throw std::logic_error("form_from_catalecticant: reconstructed form does not reproduce the matrix");
  }
  return phi;
}

std::variant<Form, HankelDefect> dual_form(const Form& f) {
  const ApolarInverse inv(f);
  return form_from_catalecticant(inv.matrix(), opposite(f.space()), f.nvars(), inv.catalecticant().k);
}

Rational polarization_tensor_eval(const Form& f, const std::vector<PointVec>& points) {
  if (points.size() != f.degree()) {
    throw InputError("polarization_tensor_eval: need exactly " + std::to_string(f.degree()) + " points");
  }
  Form product = Form::constant(opposite(f.space()), f.nvars(), 1);
  for (const auto& p : points) {
    if (p.size() != f.nvars()) throw InputError("polarization_tensor_eval: point has the wrong dimension");
    if (p.role != argument_role(f.space())) throw InputError("polarization_tensor_eval: point lies in the wrong space");
    product = multiply(product, Form::linear(opposite(f.space()), p.coords));
  }
  return pairing(product, f);
}

RationalMatrix biquadric_of(const Form& quartic) {
  if (quartic.degree() != 4) throw InputError("biquadric_of: form must be a quartic");
  const MonomialBasis basis(quartic.nvars(), 2);
  RationalMatrix b(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const MultiIndex gamma = basis[r] + basis[c];
      Rational v = quartic.coefficient(gamma) *
                   Rational(gamma.factorial(), Integer(6) * basis[r].factorial() * basis[c].factorial());
      v.canonicalize();
      b(r, c) = v;
    }
  }
  return b;
}

std::string SymmetryDefect::report() const {
  auto slots = [](const std::vector<std::size_t>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + ")";
  };
  return "symmetry-defect max_violation=" + to_string(max_violation) + " entry=" + slots(worst_slots) +
         " permuted=" + slots(worst_permuted) + "\n";
}

std::variant<Form, SymmetryDefect> quartic_from_biquadric(const RationalMatrix& b, std::size_t nvars, Space space) {
  const MonomialBasis basis(nvars, 2);
  if (b.rows() != basis.size() || b.cols() != basis.size()) {
    throw InputError("biquadric matrix must be " + std::to_string(basis.size()) + "x" + std::to_string(basis.size()));
  }
  if (!(b == b.transpose())) throw InputError("biquadric matrix is not symmetric under the factor swap");

  // U = (pl_2 (x) pl_2)(B): U[i,j,k,l] = B(e_i+e_j, e_k+e_l) * (alpha!/2!) * (beta!/2!).
  const std::size_t n = nvars;
  std::vector<Rational> tensor(n * n * n * n);
  auto flat = [n](const std::array<std::size_t, 4>& s) { return ((s[0] * n + s[1]) * n + s[2]) * n + s[3]; };
  auto pair_index = [&](std::size_t i, std::size_t j) { return MultiIndex::unit(n, i) + MultiIndex::unit(n, j); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const auto a = pair_index(i, j);
          const auto c = pair_index(k, l);
          tensor[flat({i, j, k, l})] =
              b(basis.index_of(a), basis.index_of(c)) * Rational(a.factorial() * c.factorial(), 4);
        }

  SymmetryDefect defect{Rational(0), {}, {}};
  for (std::size_t idx = 0; idx < tensor.size(); ++idx) {
    std::array<std::size_t, 4> s{idx / (n * n * n), idx / (n * n) % n, idx / n % n, idx % n};
    std::array<std::size_t, 4> p = s;
    std::sort(p.begin(), p.end());
    do {
      const Rational diff = abs(tensor[flat(p)] - tensor[idx]);
      if (diff > defect.max_violation) {
        defect.max_violation = diff;
        defect.worst_slots.assign(s.begin(), s.end());
        defect.worst_permuted.assign(p.begin(), p.end());
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  if (sgn(defect.max_violation) != 0) return defect;

  Form::Terms terms;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) terms[basis[r] + basis[c]] += b(r, c);
  }
  Form quartic(space, nvars, 4, std::move(terms));
  if (!(biquadric_of(quartic) == b)) {
    throw std::logic_error("quartic_from_biquadric: restitution does not reproduce the biquadric");
  }
  return quartic;
}

}  // namespace apolar
