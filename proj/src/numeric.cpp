#include "apolar/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "apolar/errors.hpp"
#include "apolar/multi_index.hpp"
#include "apolar/simd/kernels.hpp"

namespace apolar::numeric {

namespace {

simd::MonomialTable make_table(const MonomialBasis& basis) {
  simd::MonomialTable t;
  t.count = basis.size();
  t.nvars = basis.nvars();
  t.degree = basis.degree();
  t.exps.resize(t.count * t.nvars);
  for (std::size_t g = 0; g < t.count; ++g) {
    for (std::size_t j = 0; j < t.nvars; ++j) t.exps[j * t.count + g] = static_cast<std::int32_t>(basis[g][j]);
  }
  return t;
}

// Everything that depends only on (nvars, degree) and the target form.
struct Problem {
  std::size_t nvars;
  unsigned m;
  std::size_t n;                  // number of terms
  simd::MonomialTable table;
  std::vector<double> bombieri;   // g!/m!
  std::vector<double> synth;      // sqrt(m!/g!): weight of h^g in a weighted residual
  std::vector<double> target;     // sqrt(g!/m!) f_g for the normalized form
  std::vector<double> ones;
  double scale = 1.0;             // Bombieri norm of the original form

  std::size_t params() const { return n * (nvars + 1); }
};

Problem make_problem(const Form& f, std::size_t n) {
  const MonomialBasis basis(f.nvars(), f.degree());
  Problem p{f.nvars(), f.degree(), n, make_table(basis), {}, {}, {}, std::vector<double>(basis.size(), 1.0), 1.0};
  const auto coeffs = to_double_coefficients(f);
  const double mfact = factorial(f.degree()).get_d();
  for (std::size_t g = 0; g < basis.size(); ++g) {
    const double w = basis[g].factorial().get_d() / mfact;
    p.bombieri.push_back(w);
    p.synth.push_back(std::sqrt(1.0 / w));
  }
  p.scale = bombieri_norm(coeffs, f.nvars(), f.degree());
  const double inv = p.scale > 0 ? 1.0 / p.scale : 1.0;
  for (std::size_t g = 0; g < basis.size(); ++g) p.target.push_back(std::sqrt(p.bombieri[g]) * coeffs[g] * inv);
  return p;
}

// theta = [alpha_0, h_0..., alpha_1, h_1..., ...]
struct Workspace {
  std::vector<double> vals, parts, resid;
};

void residual_vector(const Problem& p, const simd::Kernels& k, const Eigen::VectorXd& theta, Workspace& ws) {
  const std::size_t count = p.table.count;
  ws.vals.resize(count);
  ws.resid.assign(p.target.begin(), p.target.end());
  for (auto& r : ws.resid) r = -r;
  for (std::size_t i = 0; i < p.n; ++i) {
    const double* base = theta.data() + i * (p.nvars + 1);
    k.monomial_values(p.table, std::span<const double>(base + 1, p.nvars), ws.vals);
    for (std::size_t g = 0; g < count; ++g) ws.vals[g] *= p.synth[g];
    k.axpy(base[0], ws.vals, ws.resid);
  }
}

double cost(const Problem& p, const simd::Kernels& k, const std::vector<double>& r) {
  return k.weighted_dot(p.ones, r, r);
}

void jacobian(const Problem& p, const simd::Kernels& k, const Eigen::VectorXd& theta, Eigen::MatrixXd& jac,
              Workspace& ws) {
  const std::size_t count = p.table.count;
  jac.resize(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(p.params()));
  ws.vals.resize(count);
  ws.parts.resize(count);
  for (std::size_t i = 0; i < p.n; ++i) {
    const std::size_t col0 = i * (p.nvars + 1);
    const double alpha = theta[static_cast<Eigen::Index>(col0)];
    const std::span<const double> h(theta.data() + col0 + 1, p.nvars);
    k.monomial_values(p.table, h, ws.vals);
    for (std::size_t g = 0; g < count; ++g) jac(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(col0)) = p.synth[g] * ws.vals[g];
    for (std::size_t j = 0; j < p.nvars; ++j) {
      k.monomial_partials(p.table, h, j, ws.parts);
      const auto col = static_cast<Eigen::Index>(col0 + 1 + j);
      for (std::size_t g = 0; g < count; ++g) jac(static_cast<Eigen::Index>(g), col) = alpha * p.synth[g] * ws.parts[g];
    }
  }
}

// Unit-norm h, alpha absorbs the scale.
void rebalance(const Problem& p, Eigen::VectorXd& theta) {
  for (std::size_t i = 0; i < p.n; ++i) {
    const auto col0 = static_cast<Eigen::Index>(i * (p.nvars + 1));
    auto h = theta.segment(col0 + 1, static_cast<Eigen::Index>(p.nvars));
    const double norm = h.norm();
    if (norm == 0.0 || !std::isfinite(norm)) continue;
    h /= norm;
    theta[col0] *= std::pow(norm, static_cast<double>(p.m));
  }
}

struct RestartResult {
  Eigen::VectorXd theta;
  double sq_residual = std::numeric_limits<double>::infinity();   // normalized scale
};

RestartResult run_restart(const Problem& p, const simd::Kernels& k, std::uint64_t subseed, unsigned max_iter) {
  std::mt19937_64 rng(subseed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto np = static_cast<Eigen::Index>(p.params());
  const auto count = static_cast<Eigen::Index>(p.table.count);
  Eigen::VectorXd theta(np);
  for (Eigen::Index i = 0; i < np; ++i) theta[i] = normal(rng);
  rebalance(p, theta);

  Workspace ws;
  // Initial alphas: linear least squares with the drawn h.
  {
    Eigen::MatrixXd a(count, static_cast<Eigen::Index>(p.n));
    std::vector<double> vals(p.table.count);
    for (std::size_t i = 0; i < p.n; ++i) {
      const double* base = theta.data() + i * (p.nvars + 1);
      k.monomial_values(p.table, std::span<const double>(base + 1, p.nvars), vals);
      for (std::size_t g = 0; g < p.table.count; ++g) a(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(i)) = p.synth[g] * vals[g];
    }
    const Eigen::Map<const Eigen::VectorXd> b(p.target.data(), count);
    const Eigen::VectorXd alphas = a.completeOrthogonalDecomposition().solve(b);
    for (std::size_t i = 0; i < p.n; ++i) theta[static_cast<Eigen::Index>(i * (p.nvars + 1))] = alphas[static_cast<Eigen::Index>(i)];
  }

  residual_vector(p, k, theta, ws);
  double current = cost(p, k, ws.resid);
  double mu = 1e-3;
  Eigen::MatrixXd jac;
  Eigen::MatrixXd normal_matrix;
  Eigen::VectorXd gradient;
  bool need_jacobian = true;
  for (unsigned iter = 0; iter < max_iter; ++iter) {
    if (current < 1e-30) break;
    if (need_jacobian) {
      jacobian(p, k, theta, jac, ws);
      const Eigen::Map<const Eigen::VectorXd> r(ws.resid.data(), count);
      normal_matrix = jac.transpose() * jac;
      gradient = jac.transpose() * r;
      need_jacobian = false;
    }
    Eigen::MatrixXd damped = normal_matrix;
    for (Eigen::Index d = 0; d < np; ++d) damped(d, d) += mu * std::max(normal_matrix(d, d), 1e-9);
    const Eigen::VectorXd step = damped.ldlt().solve(-gradient);
    Eigen::VectorXd trial = theta + step;
    Workspace trial_ws;
    residual_vector(p, k, trial, trial_ws);
    const double trial_cost = cost(p, k, trial_ws.resid);
    if (std::isfinite(trial_cost) && trial_cost < current) {
      rebalance(p, trial);
      theta = std::move(trial);
      residual_vector(p, k, theta, ws);
      current = cost(p, k, ws.resid);
      mu = std::max(mu / 3.0, 1e-15);
      need_jacobian = true;
    } else {
      mu *= 4.0;
      if (mu > 1e16) break;
    }
  }
  return {theta, current};
}

Decomposition to_decomposition(const Problem& p, const RestartResult& r, std::uint64_t subseed) {
  Decomposition d;
  d.m = p.m;
  d.subseed = subseed;
  d.residual = std::sqrt(r.sq_residual) * p.scale;
  for (std::size_t i = 0; i < p.n; ++i) {
    const auto col0 = static_cast<Eigen::Index>(i * (p.nvars + 1));
    Term t;
    t.alpha = r.theta[col0] * p.scale;
    for (std::size_t j = 0; j < p.nvars; ++j) t.h.push_back(r.theta[col0 + 1 + static_cast<Eigen::Index>(j)]);
    d.terms.push_back(std::move(t));
  }
  return d;
}

}  // namespace

std::vector<double> to_double_coefficients(const Form& f) {
  const auto exact = f.coefficient_vector();
  std::vector<double> out;
  out.reserve(exact.size());
  for (const auto& c : exact) out.push_back(c.get_d());
  return out;
}

double bombieri_norm(const std::vector<double>& coeffs, std::size_t nvars, unsigned degree) {
  const MonomialBasis basis(nvars, degree);
  if (coeffs.size() != basis.size()) throw InputError("bombieri_norm: coefficient vector has the wrong length");
  const double mfact = factorial(degree).get_d();
  std::vector<double> w(basis.size());
  for (std::size_t g = 0; g < basis.size(); ++g) w[g] = basis[g].factorial().get_d() / mfact;
  return std::sqrt(simd::best_kernels().weighted_dot(w, coeffs, coeffs));
}

double residual(const Form& f, const Decomposition& d) {
  if (d.m != f.degree()) throw InputError("residual: degrees differ");
  const MonomialBasis basis(f.nvars(), f.degree());
  const auto table = make_table(basis);
  const auto& k = simd::best_kernels();
  std::vector<double> diff = to_double_coefficients(f);
  for (auto& c : diff) c = -c;
  std::vector<double> vals(basis.size());
  const double mfact = factorial(f.degree()).get_d();
  for (const auto& t : d.terms) {
    if (t.h.size() != f.nvars()) throw InputError("residual: term has the wrong dimension");
    k.monomial_values(table, t.h, vals);
    for (std::size_t g = 0; g < basis.size(); ++g) vals[g] *= mfact / basis[g].factorial().get_d();
    k.axpy(t.alpha, vals, diff);
  }
  return bombieri_norm(diff, f.nvars(), f.degree());
}

Decomposition canonicalize(Decomposition d) {
  for (auto& t : d.terms) {
    double big = 0;
    for (double v : t.h) big = std::max(big, std::abs(v));
    if (big == 0) continue;
    const auto it = std::find_if(t.h.begin(), t.h.end(), [&](double v) { return std::abs(v) > 1e-8 * big; });
    const double c = *it;
    for (auto& v : t.h) v /= c;
    t.alpha *= std::pow(c, static_cast<double>(d.m));
  }
  std::sort(d.terms.begin(), d.terms.end(),
            [](const Term& a, const Term& b) { return std::lexicographical_compare(b.h.begin(), b.h.end(), a.h.begin(), a.h.end()); });
  return d;
}

bool equivalent(const Decomposition& a, const Decomposition& b, double tol) {
  if (a.terms.size() != b.terms.size() || a.m != b.m) return false;
  const auto ca = canonicalize(a);
  const auto cb = canonicalize(b);
  std::vector<bool> used(cb.terms.size(), false);
  for (const auto& ta : ca.terms) {
    bool matched = false;
    for (std::size_t j = 0; j < cb.terms.size() && !matched; ++j) {
      if (used[j] || ta.h.size() != cb.terms[j].h.size()) continue;
      bool close = std::abs(ta.alpha - cb.terms[j].alpha) <= tol * std::max(1.0, std::abs(ta.alpha));
      for (std::size_t i = 0; i < ta.h.size() && close; ++i) close = std::abs(ta.h[i] - cb.terms[j].h[i]) <= tol;
      if (close) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

DecomposeResult waring_decompose_numeric(const Form& f, std::size_t n, const DecomposeConfig& config) {
  if (n == 0) throw InputError("waring_decompose_numeric: n must be at least 1");
  if (f.degree() == 0) throw InputError("waring_decompose_numeric: form has degree 0");
  DecomposeResult result;
  if (f.is_zero()) throw InputError("waring_decompose_numeric: zero form");
  const Problem problem = make_problem(f, n);
  const auto& kernels = simd::best_kernels();

  std::vector<RestartResult> outcomes(config.restarts);
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max(1u, config.restarts));
  auto work = [&](unsigned worker) {
    for (unsigned r = worker; r < config.restarts; r += threads) {
      outcomes[r] = run_restart(problem, kernels, config.seed ^ r, config.max_iter);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  std::vector<Decomposition> accepted;
  for (unsigned r = 0; r < config.restarts; ++r) {
    auto d = to_decomposition(problem, outcomes[r], config.seed ^ r);
    if (std::isfinite(d.residual) && d.residual * d.residual <= config.tol) accepted.push_back(canonicalize(std::move(d)));
  }
  std::stable_sort(accepted.begin(), accepted.end(), [](const Decomposition& a, const Decomposition& b) {
    return a.residual != b.residual ? a.residual < b.residual : a.subseed < b.subseed;
  });
  for (auto& d : accepted) {
    const bool duplicate = std::any_of(result.solutions.begin(), result.solutions.end(),
                                       [&](const Decomposition& e) { return equivalent(e, d, 1e-6); });
    if (!duplicate) result.solutions.push_back(std::move(d));
  }
  result.status = result.solutions.empty() ? DecomposeStatus::NoConvergence : DecomposeStatus::Converged;
  return result;
}

}  // namespace apolar::numeric
