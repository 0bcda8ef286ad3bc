#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Picard-lattice calculator for the plane blown up at s points, and the table
// of closed-form invariants of degree-d rational curves on the quintic del
// Pezzo threefold together with the identities that tie them together.
namespace apolar::ledger {

/// Z h + sum Z e_i with h^2 = 1, e_i^2 = -1, all other products zero.
class SurfaceLattice {
 public:
  explicit SurfaceLattice(std::size_t s) : s_(s) {}
  std::size_t s() const { return s_; }
  friend bool operator==(const SurfaceLattice&, const SurfaceLattice&) = default;

 private:
  std::size_t s_;
};

class DivisorClass {
 public:
  DivisorClass(const SurfaceLattice& lattice, long a, std::vector<long> b);

  static DivisorClass zero(const SurfaceLattice& lattice);
  static DivisorClass hyperplane(const SurfaceLattice& lattice);   // h
  static DivisorClass exceptional(const SurfaceLattice& lattice, std::size_t i);   // e_i
  /// -3h + sum e_i
  static DivisorClass canonical(const SurfaceLattice& lattice);

  const SurfaceLattice& lattice() const { return lattice_; }
  long a() const { return a_; }
  const std::vector<long>& b() const { return b_; }

  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
  friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
  friend DivisorClass operator*(long c, const DivisorClass& x);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  std::string to_string() const;

 private:
  SurfaceLattice lattice_;
  long a_;
  std::vector<long> b_;
};

/// a_x a_y - sum_i b_{x,i} b_{y,i}. Throws InputError on a lattice mismatch.
long intersect(const DivisorClass& x, const DivisorClass& y);

/// chi(O(x)) = 1 + (x.x - x.K)/2 with K the canonical class (or a supplied
/// replacement, used to exercise the negative control).
long riemann_roch(const DivisorClass& x);
long riemann_roch(const DivisorClass& x, const DivisorClass& canonical);

// Named classes on the surface of marked conics for curve degree d, s = (d-2)(d-3)/2.
DivisorClass line_divisor(long d);                    // D_l = (d-3)h - sum e_i
DivisorClass conic_divisor(long d);                   // D_q = 2(d-3)h - 2 sum e_i
DivisorClass bisecant_divisor(long d, std::size_t i); // D_beta_i = (d-4)h - sum_{k != i} e_k
DivisorClass point_line_divisor(long d);              // L_b = h

struct Counts {
  long tri_secant_through_point_of_c = 0;
  long conics_meeting_line_through_point = 0;
  long nodes_after_two_line_projection = 0;
  long nodes_after_bisecant_projection = 0;
  long conics_decomposition_ec = 0;   // (d-3)(d-4)/2 + (2(d-2) - 1)
  long conics_decomposition_ei = 0;   // (d-3)(d-4)/2 + 2(d-4) + 3
};

struct IdentityResult {
  std::string name;
  long lhs = 0;
  long rhs = 0;
  bool pass = false;
};

struct LedgerReport {
  long d = 0;
  long g = 0;
  long s = 0;
  long n = 0;
  long dim_v = 0;
  long dim_s2 = 0;
  long deg_h2 = 0;
  long chi_dl = 0;
  Counts counts;
  std::vector<IdentityResult> identity_results;

  bool all_pass() const;
  /// Aligned plain-text table.
  std::string table() const;
  /// Machine-readable JSON.
  std::string json() const;
};

/// Throws InputError for d < 5.
LedgerReport invariants(long d);

/// The nine identities for one degree, with an injectable canonical class.
std::vector<IdentityResult> identities(long d);
std::vector<IdentityResult> identities(long d, const DivisorClass& canonical);

/// identities(d) for 5 <= d <= d_max, each name suffixed with "@d".
std::vector<IdentityResult> consistency_check(long d_max);

}  // namespace apolar::ledger
