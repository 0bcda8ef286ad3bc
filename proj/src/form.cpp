#include "apolar/form.hpp"

#include <algorithm>
#include <random>

#include "apolar/errors.hpp"
#include "apolar/linalg.hpp"

namespace apolar {

bool PointVec::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Form::Form(Space space, std::size_t nvars, unsigned degree) : space_(space), nvars_(nvars), degree_(degree) {
  if (nvars == 0) throw InputError("a form needs at least one variable");
}

Form::Form(Space space, std::size_t nvars, unsigned degree, Terms terms) : Form(space, nvars, degree) {
  for (auto& [idx, coef] : terms) {
    if (idx.size() != nvars) {
      throw InputError("exponent row " + idx.to_string() + " has the wrong number of variables");
    }
    if (idx.degree() != degree) {
      throw InputError("exponent row " + idx.to_string() + " does not have degree " + std::to_string(degree));
    }
    if (sgn(coef) == 0) continue;
    coef.canonicalize();
    terms_.emplace(idx, std::move(coef));
  }
}

Form Form::monomial(Space space, const MultiIndex& idx, const Rational& coef) {
  Terms t;
  t.emplace(idx, coef);
  return Form(space, idx.size(), idx.degree(), std::move(t));
}

Form Form::linear(Space space, std::span<const Rational> coeffs) {
  Terms t;
  for (std::size_t i = 0; i < coeffs.size(); ++i) t.emplace(MultiIndex::unit(coeffs.size(), i), coeffs[i]);
  return Form(space, coeffs.size(), 1, std::move(t));
}

Form Form::constant(Space space, std::size_t nvars, const Rational& value) {
  Terms t;
  t.emplace(MultiIndex(nvars), value);
  return Form(space, nvars, 0, std::move(t));
}

Rational Form::coefficient(const MultiIndex& idx) const {
  const auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> Form::coefficient_vector() const {
  const MonomialBasis basis(nvars_, degree_);
  std::vector<Rational> v(basis.size());
  for (const auto& [idx, coef] : terms_) v[basis.index_of(idx)] = coef;
  return v;
}

Form Form::from_coefficients(Space space, const MonomialBasis& basis, std::span<const Rational> coeffs) {
  if (coeffs.size() != basis.size()) throw InputError("coefficient vector does not match the monomial basis");
  Terms t;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) != 0) t.emplace(basis[i], coeffs[i]);
  }
  return Form(space, basis.nvars(), basis.degree(), std::move(t));
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  const char var = space_ == Space::OnV ? 'x' : 'y';
  std::string out;
  for (const auto& [idx, coef] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var + std::to_string(i);
      if (idx[i] > 1) mono += "^" + std::to_string(idx[i]);
    }
    const bool negative = sgn(coef) < 0;
    const Rational mag = abs(coef);
    std::string piece;
    if (mono.empty()) {
      piece = apolar::to_string(mag);
    } else if (mag == 1) {
      piece = mono;
    } else {
      piece = apolar::to_string(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + piece : piece;
    } else {
      out += negative ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

bool operator==(const Form& a, const Form& b) {
  return a.space_ == b.space_ && a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

namespace {

void require_compatible(const Form& f, const Form& g, const char* op) {
  if (f.space() != g.space()) throw InputError(std::string(op) + ": forms live on different spaces");
  if (f.nvars() != g.nvars()) throw InputError(std::string(op) + ": variable counts differ");
}

}  // namespace

Form add(const Form& f, const Form& g) {
  require_compatible(f, g, "add");
  if (f.degree() != g.degree()) throw InputError("add: degrees differ");
  Form::Terms t = f.terms();
  for (const auto& [idx, coef] : g.terms()) t[idx] += coef;
  return Form(f.space(), f.nvars(), f.degree(), std::move(t));
}

Form subtract(const Form& f, const Form& g) { return add(f, scale(g, -1)); }

Form scale(const Form& f, const Rational& c) {
  Form::Terms t;
  if (sgn(c) != 0) {
    for (const auto& [idx, coef] : f.terms()) t.emplace(idx, coef * c);
  }
  return Form(f.space(), f.nvars(), f.degree(), std::move(t));
}

Form multiply(const Form& f, const Form& g) {
  require_compatible(f, g, "multiply");
  Form::Terms t;
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) t[a + b] += ca * cb;
  }
  return Form(f.space(), f.nvars(), f.degree() + g.degree(), std::move(t));
}

Form power(const Form& f, unsigned exponent) {
  Form result = Form::constant(f.space(), f.nvars(), 1);
  Form base = f;
  while (exponent) {
    if (exponent & 1u) result = multiply(result, base);
    exponent >>= 1u;
    if (exponent) base = multiply(base, base);
  }
  return result;
}

Rational evaluate(const Form& f, const PointVec& p) {
  if (p.size() != f.nvars()) throw InputError("evaluate: point has the wrong dimension");
  if (p.role != argument_role(f.space())) throw InputError("evaluate: point lies in the wrong space");
  Rational total = 0;
  Rational term;
  Rational pw;
  for (const auto& [idx, coef] : f.terms()) {
    term = coef;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] == 0) continue;
      mpz_pow_ui(pw.get_num_mpz_t(), p.coords[i].get_num_mpz_t(), idx[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), p.coords[i].get_den_mpz_t(), idx[i]);
      term *= pw;
    }
    total += term;
  }
  return total;
}

Form differentiate(const Form& f, const MultiIndex& idx) {
  if (idx.size() != f.nvars()) throw InputError("differentiate: multi-index has the wrong dimension");
  if (idx.degree() > f.degree()) throw InputError("differentiate: order exceeds the degree");
  Form::Terms t;
  for (const auto& [gamma, coef] : f.terms()) {
    if (!gamma.divisible_by(idx)) continue;
    const MultiIndex rest = gamma - idx;
    // d^idx x^gamma = gamma!/(gamma-idx)! x^(gamma-idx)
    Rational c = coef * Rational(gamma.factorial(), rest.factorial());
    t[rest] += c;
  }
  return Form(f.space(), f.nvars(), f.degree() - idx.degree(), std::move(t));
}

Form change_coords(const Form& f, const RationalMatrix& m) {
  if (m.rows() != f.nvars() || m.cols() != f.nvars()) throw InputError("change_coords: matrix has the wrong size");
  if (linalg::rank(m) < f.nvars()) throw DegenerateError("change_coords: substitution matrix is singular");
  std::vector<Form> images;   // (M x)_i as linear forms
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    std::vector<Rational> row(f.nvars());
    for (std::size_t j = 0; j < f.nvars(); ++j) row[j] = m(i, j);
    images.push_back(Form::linear(f.space(), row));
  }
  // Cache powers of each image.
  std::vector<std::vector<Form>> powers(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    powers[i].push_back(Form::constant(f.space(), f.nvars(), 1));
    for (unsigned e = 1; e <= f.degree(); ++e) powers[i].push_back(multiply(powers[i].back(), images[i]));
  }
  Form result(f.space(), f.nvars(), f.degree());
  for (const auto& [idx, coef] : f.terms()) {
    Form term = Form::constant(f.space(), f.nvars(), coef);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i]) term = multiply(term, powers[i][idx[i]]);
    }
    result = add(result, term);
  }
  return result;
}

Form random_form(std::uint64_t seed, std::size_t nvars, unsigned degree, long coeff_bound, Space space) {
  if (nvars == 0) throw InputError("random_form: nvars must be positive");
  if (coeff_bound < 0) throw InputError("random_form: negative coefficient bound");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-coeff_bound, coeff_bound);
  const MonomialBasis basis(nvars, degree);
  Form::Terms t;
  for (const auto& idx : basis) t.emplace(idx, Rational(coef(rng)));
  return Form(space, nvars, degree, std::move(t));
}

}  // namespace apolar
