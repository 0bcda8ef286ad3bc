// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "apolar/form.hpp"
#include "apolar/ledger.hpp"
#include "apolar/linalg.hpp"
#include "apolar/multi_index.hpp"
#include "apolar/numeric.hpp"
#include "apolar/polarity.hpp"
#include "apolar/powersum.hpp"

using namespace apolar;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Runtime budgets (seconds) and numeric thresholds.
constexpr double kLedgerBudget = 1.0;
constexpr double kMembershipBudget = 60.0;
constexpr double kNumericBudget = 120.0;
constexpr double kNumericResidual = 1e-8;
constexpr double kNumericCoordError = 1e-6;
constexpr int kNumericRequired = 95;
constexpr int kInstancesPerNu = 100;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

PointVec random_point(std::uint64_t seed, std::size_t nvars, long bound, PointRole role) {
  std::uint64_t state = seed;
  PointVec p{std::vector<Rational>(nvars), role};
  do {
    for (auto& c : p.coords) {
      state = splitmix(state);
      c = static_cast<long>(state % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    }
  } while (p.is_zero());
  return p;
}

// Planted instances shared by criteria 3, 4 and 5.
struct PlantedSet {
  std::size_t nvars;
  std::vector<PlantedInstance> instances;
};

std::vector<PlantedSet>& planted_sets() {
  static std::vector<PlantedSet> sets = [] {
    std::vector<PlantedSet> out;
    for (std::size_t nu : {2, 3, 4}) {
      PlantedSet s{nu, {}};
      for (int seed = 1; seed <= kInstancesPerNu; ++seed) s.instances.push_back(planted_instance(seed, nu));
      out.push_back(std::move(s));
    }
    return out;
  }();
  return sets;
}

Outcome ledger_golden() {
  const auto r5 = ledger::invariants(5);
  const auto r6 = ledger::invariants(6);
  bool ok = r5.g == 3 && r5.s == 3 && r5.n == 6;
  ok = ok && r6.g == 4 && r6.s == 6 && r6.n == 10 && r6.deg_h2 == 3;
  const auto sweep = ledger::consistency_check(50);
  const auto failures = std::count_if(sweep.begin(), sweep.end(), [](const auto& r) { return !r.pass; });
  ok = ok && failures == 0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "d=5 (g,s,n)=(%ld,%ld,%ld); d=6 (g,s,n)=(%ld,%ld,%ld) deg_H2=%ld; sweep %zu identities, %ld failed",
                r5.g, r5.s, r5.n, r6.g, r6.s, r6.n, r6.deg_h2, sweep.size(), static_cast<long>(failures));
  return {ok, buf};
}

Outcome riemann_roch_check() {
  int bad = 0;
  for (long d = 5; d <= 50; ++d) {
    if (ledger::riemann_roch(ledger::line_divisor(d)) != d - 2) ++bad;
  }
  return {bad == 0, "chi(D_l) = d-2 for d=5..50, mismatches " + std::to_string(bad)};
}

Outcome membership_equivalence() {
  int planted_bad = 0, perturbed_bad = 0, total = 0;
  for (const auto& set : planted_sets()) {
    for (std::size_t i = 0; i < set.instances.size(); ++i) {
      const auto& inst = set.instances[i];
      ++total;
      const auto cert = mukai_conditions(inst.form, inst.points);
      const bool alphas_ok = cert.alphas && *cert.alphas == inst.alphas;
      if (!(cert.agree && cert.cond_54 && cert.cond_57 && cert.alphas_all_nonzero && alphas_ok)) ++planted_bad;

      const auto moved = perturb_point(inst.points, i % inst.points.size(), 1000 + i);
      const auto pc = mukai_conditions(inst.form, moved);
      if (!(pc.agree && !pc.cond_54 && !pc.cond_57 && !pc.alphas_all_nonzero)) ++perturbed_bad;
    }
  }
  return {planted_bad == 0 && perturbed_bad == 0,
          std::to_string(total) + " planted (nu=2,3,4; n=3,6,10): " + std::to_string(planted_bad) +
              " failed; " + std::to_string(total) + " perturbed: " + std::to_string(perturbed_bad) + " failed"};
}

Outcome kronecker_delta() {
  int bad = 0, total = 0;
  for (const auto& set : planted_sets()) {
    for (const auto& inst : set.instances) {
      ++total;
      const auto cert = mukai_conditions(inst.form, inst.points);
      const auto& e = cert.eval_matrix;
      bool ok = e.rows() == inst.points.size() && e.cols() == inst.points.size();
      for (std::size_t r = 0; ok && r < e.rows(); ++r) {
        for (std::size_t c = 0; c < e.cols(); ++c) {
          if ((r == c) == is_zero(e(r, c))) ok = false;
        }
      }
      if (!ok) ++bad;
    }
  }
  return {bad == 0, std::to_string(total) + " eval matrices, " + std::to_string(bad) + " not diagonal-nonzero"};
}

Outcome cross_path() {
  int bad = 0, total = 0;
  for (const auto& set : planted_sets()) {
    for (const auto& inst : set.instances) {
      const auto cert = mukai_conditions(inst.form, inst.points);
      for (std::size_t j = 0; j < inst.points.size(); ++j) {
        ++total;
        if (!(mixed_polar(inst.form, cert.dual_quadrics[j]) == power_of_linear(inst.points[j], 2))) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(total) + " quadrics, mixed_polar(F, D_j) != H_j^2 in " + std::to_string(bad)};
}

Outcome polarity_identities() {
  int euler_bad = 0, iterate_bad = 0, pairing_bad = 0, cat_bad = 0;
  constexpr int kCases = 1000;
  for (int t = 0; t < kCases; ++t) {
    const std::uint64_t seed = splitmix(7000 + t);
    const std::size_t nu = 1 + seed % 4;
    const unsigned m = 1 + (seed >> 8) % 6;
    const Form f = random_form(seed, nu, m, 5);
    const PointVec a = random_point(seed ^ 0xABCDEF, nu, 4, PointRole::InV);

    // Euler: sum_i x_i d_i F = m F
    Form euler(Space::OnV, nu, m);
    for (std::size_t i = 0; i < nu; ++i) {
      std::vector<Rational> e(nu);
      e[i] = 1;
      euler = euler + Form::linear(Space::OnV, e) * differentiate(f, MultiIndex::unit(nu, i));
    }
    if (!(euler == scale(f, m))) ++euler_bad;

    // k-fold polar at a equals the mixed polar by a^k
    const unsigned k = 1 + (seed >> 16) % m;
    Form it = f;
    for (unsigned i = 0; i < k; ++i) it = polar(it, a);
    if (!(it == mixed_polar(f, power_of_linear(a, k)))) ++iterate_bad;

    // <a^m, F> = F(a)
    if (pairing(power_of_linear(a, m), f) != evaluate(f, a)) ++pairing_bad;

    if (!(apolarity_matrix(f, k).entries == apolarity_matrix_by_columns(f, k))) ++cat_bad;
  }
  const bool ok = euler_bad + iterate_bad + pairing_bad + cat_bad == 0;
  return {ok, std::to_string(kCases) + " cases; failures euler=" + std::to_string(euler_bad) +
                  " iterated=" + std::to_string(iterate_bad) + " pairing=" + std::to_string(pairing_bad) +
                  " catalecticant=" + std::to_string(cat_bad)};
}

Outcome dual_contract() {
  int quad_tried = 0, quad_bad = 0;
  for (std::uint64_t seed = 1; quad_tried < 100; ++seed) {
    const std::size_t nu = 2 + seed % 3;
    const Form f = random_form(splitmix(seed), nu, 2, 4);
    if (!is_nondegenerate(f)) continue;
    ++quad_tried;
    const auto dual = dual_form(f);
    const auto* fd = std::get_if<Form>(&dual);
    if (!fd) {
      ++quad_bad;
      continue;
    }
    const auto product = apolarity_matrix(*fd, 1).entries * apolarity_matrix(f, 1).entries;
    if (!(product == RationalMatrix::identity(nu))) ++quad_bad;
  }

  // x0^4 + x1^4 + (x0 + x1)^4: the inverse catalecticant is not Hankel at gamma = [2,2]
  Form golden(Space::OnV, 2, 4,
              {{MultiIndex{4, 0}, 2}, {MultiIndex{3, 1}, 4}, {MultiIndex{2, 2}, 6}, {MultiIndex{1, 3}, 4},
               {MultiIndex{0, 4}, 2}});
  const auto gd = dual_form(golden);
  const auto* defect = std::get_if<HankelDefect>(&gd);
  const bool golden_ok = defect && defect->violations.size() == 1 && defect->violations[0].gamma == MultiIndex{2, 2};

  int quartic_ok = 0, roundtrip_bad = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t nu = 2 + seed % 2;
    const Form f = random_form(splitmix(seed + 99), nu, 4, 3);
    if (!is_nondegenerate(f)) continue;
    const auto d = dual_form(f);
    const auto* fd = std::get_if<Form>(&d);
    if (!fd) continue;
    ++quartic_ok;
    const auto back = dual_form(*fd);
    const auto* fb = std::get_if<Form>(&back);
    if (!fb || !(*fb == f)) ++roundtrip_bad;
  }
  // Random quartics rarely have a Hankel inverse; add duals of planted power sums, which always do.
  for (const auto& set : planted_sets()) {
    for (std::size_t i = 0; i < 10; ++i) {
      const auto d = dual_form(set.instances[i].form);
      const auto* fd = std::get_if<Form>(&d);
      if (!fd) continue;
      ++quartic_ok;
      const auto back = dual_form(*fd);
      const auto* fb = std::get_if<Form>(&back);
      if (!fb || !(*fb == set.instances[i].form)) ++roundtrip_bad;
    }
  }
  const bool ok = quad_bad == 0 && golden_ok && roundtrip_bad == 0;
  return {ok, "100 quadrics: " + std::to_string(quad_bad) + " failed; golden verdict " +
                  (golden_ok ? "matches" : "differs") + "; round trips " + std::to_string(quartic_ok) +
                  ", failed " + std::to_string(roundtrip_bad)};
}

double coordinate_error(const PlantedInstance& inst, const numeric::Decomposition& d) {
  // best matching of recovered terms to planted terms (n = 6: brute force over permutations)
  const std::size_t n = inst.points.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = INFINITY;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < n && worst < best; ++i) {
      const auto& h = d.terms[perm[i]].h;
      const auto& p = inst.points[i].coords;
      for (std::size_t c = 0; c < p.size(); ++c) worst = std::max(worst, std::abs(h[c] - p[c].get_d()));
      worst = std::max(worst, std::abs(d.terms[perm[i]].alpha - inst.alphas[i].get_d()));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Outcome numeric_recovery() {
  int converged = 0, recovered = 0;
  double worst_residual = 0.0;
  for (int seed = 1; seed <= 100; ++seed) {
    const auto inst = planted_instance(seed, 3);
    numeric::DecomposeConfig cfg;
    cfg.restarts = 200;
    cfg.seed = seed;
    const auto result = numeric::waring_decompose_numeric(inst.form, inst.points.size(), cfg);
    if (result.solutions.empty()) continue;
    const auto& best = result.solutions.front();
    worst_residual = std::max(worst_residual, best.residual);
    if (best.residual > kNumericResidual) continue;
    ++converged;
    double err = INFINITY;
    for (const auto& s : result.solutions) {
      if (s.residual <= kNumericResidual) err = std::min(err, coordinate_error(inst, s));
    }
    if (err <= kNumericCoordError) ++recovered;
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "100 seeds nu=3 n=6: residual<=1e-8 in %d, planted coordinates within 1e-6 in %d (need %d)",
                converged, recovered, kNumericRequired);
  return {recovered >= kNumericRequired, buf};
}

Outcome basis_size_match() {
  int bad = 0;
  for (long d = 5; d <= 20; ++d) {
    const auto nu = static_cast<std::size_t>(d - 2);
    if (static_cast<std::size_t>(ledger::invariants(d).n) != MonomialBasis(nu, 2).size()) ++bad;
  }
  return {bad == 0, "n(d) vs |quadric basis| for d=5..20, mismatches " + std::to_string(bad)};
}

struct Criterion {
  int id;
  const char* name;
  double budget;   // seconds, 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "ledger golden values", kLedgerBudget, ledger_golden},
      {2, "riemann-roch cross-check", kLedgerBudget, riemann_roch_check},
      {3, "membership equivalence", kMembershipBudget, membership_equivalence},
      {4, "kronecker-delta law", 0, kronecker_delta},
      {5, "dual quadric cross-path", 0, cross_path},
      {6, "polarity identities", 0, polarity_identities},
      {7, "dual-form contract", 0, dual_contract},
      {8, "numeric recovery", kNumericBudget, numeric_recovery},
      {9, "ledger n vs quadric basis", 0, basis_size_match},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget == 0 || secs < c.budget;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %d %-28s %8.3fs  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str(),
                in_time ? "" : " (over time budget)");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
