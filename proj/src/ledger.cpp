#include "apolar/ledger.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "apolar/errors.hpp"

namespace apolar::ledger {

DivisorClass::DivisorClass(const SurfaceLattice& lattice, long a, std::vector<long> b)
    : lattice_(lattice), a_(a), b_(std::move(b)) {
  if (b_.size() != lattice_.s()) throw InputError("divisor class has the wrong number of exceptional coefficients");
}

DivisorClass DivisorClass::zero(const SurfaceLattice& lattice) {
  return DivisorClass(lattice, 0, std::vector<long>(lattice.s(), 0));
}

DivisorClass DivisorClass::hyperplane(const SurfaceLattice& lattice) {
  return DivisorClass(lattice, 1, std::vector<long>(lattice.s(), 0));
}

DivisorClass DivisorClass::exceptional(const SurfaceLattice& lattice, std::size_t i) {
  std::vector<long> b(lattice.s(), 0);
  b.at(i) = 1;
  return DivisorClass(lattice, 0, std::move(b));
}

DivisorClass DivisorClass::canonical(const SurfaceLattice& lattice) {
  return DivisorClass(lattice, -3, std::vector<long>(lattice.s(), 1));
}

namespace {

void require_same(const DivisorClass& x, const DivisorClass& y) {
  if (!(x.lattice() == y.lattice())) throw InputError("divisor classes live on different lattices");
}

}  // namespace

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  require_same(x, y);
  auto b = x.b_;
  for (std::size_t i = 0; i < b.size(); ++i) b[i] += y.b_[i];
  return DivisorClass(x.lattice_, x.a_ + y.a_, std::move(b));
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) { return x + (-1) * y; }

DivisorClass operator*(long c, const DivisorClass& x) {
  auto b = x.b_;
  for (auto& v : b) v *= c;
  return DivisorClass(x.lattice_, c * x.a_, std::move(b));
}

std::string DivisorClass::to_string() const {
  std::string out = std::to_string(a_) + "h";
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (b_[i] == 0) continue;
    out += (b_[i] < 0 ? " - " : " + ");
    const long mag = b_[i] < 0 ? -b_[i] : b_[i];
    if (mag != 1) out += std::to_string(mag);
    out += "e" + std::to_string(i + 1);
  }
  return out;
}

long intersect(const DivisorClass& x, const DivisorClass& y) {
  require_same(x, y);
  long v = x.a() * y.a();
  for (std::size_t i = 0; i < x.b().size(); ++i) v -= x.b()[i] * y.b()[i];
  return v;
}

long riemann_roch(const DivisorClass& x, const DivisorClass& canonical) {
  // chi(O) = 1 on a rational surface
  const long twice = intersect(x, x) - intersect(x, canonical);
  return 1 + twice / 2;
}

long riemann_roch(const DivisorClass& x) { return riemann_roch(x, DivisorClass::canonical(x.lattice())); }

namespace {

long exceptional_count(long d) { return (d - 2) * (d - 3) / 2; }

SurfaceLattice lattice_for(long d) {
  if (d < 3) throw InputError("curve degree must be at least 3");
  return SurfaceLattice(static_cast<std::size_t>(exceptional_count(d)));
}

}  // namespace

DivisorClass line_divisor(long d) {
  const auto lat = lattice_for(d);
  return DivisorClass(lat, d - 3, std::vector<long>(lat.s(), -1));
}

DivisorClass conic_divisor(long d) {
  const auto lat = lattice_for(d);
  return DivisorClass(lat, 2 * (d - 3), std::vector<long>(lat.s(), -2));
}

DivisorClass bisecant_divisor(long d, std::size_t i) {
  const auto lat = lattice_for(d);
  std::vector<long> b(lat.s(), -1);
  b.at(i) = 0;
  return DivisorClass(lat, d - 4, std::move(b));
}

DivisorClass point_line_divisor(long d) { return DivisorClass::hyperplane(lattice_for(d)); }

std::vector<IdentityResult> identities(long d, const DivisorClass& canonical) {
  const long s = exceptional_count(d);
  const long n = (d - 1) * (d - 2) / 2;
  const long dim_v = d - 2;
  const long dim_s2 = dim_v * (dim_v + 1) / 2;
  const long nodes = (d - 3) * (d - 4) / 2;
  const auto dl = line_divisor(d);
  std::vector<IdentityResult> out;
  auto push = [&out](std::string name, long lhs, long rhs) { out.push_back({std::move(name), lhs, rhs, lhs == rhs}); };

  push("i:n=dimS2V", n, dim_s2);
  push("ii:n=nodes+(2d-5)", n, nodes + (2 * d - 5));
  push("ii:2d-5=2(d-2)-1", 2 * d - 5, 2 * (d - 2) - 1);
  push("iii:n=nodes+2(d-4)+3", n, nodes + 2 * (d - 4) + 3);
  push("iv:pa(M)-g=s", (d - 1) * (d - 2) / 2 - (d - 2), s);
  push("v:chi(D_l)=d-2", riemann_roch(dl, canonical), d - 2);
  push("vi:D_l.D_l=(d-3)^2-s", intersect(dl, dl), (d - 3) * (d - 3) - s);
  push("vii:2g-2=-6+2d", 2 * (d - 2) - 2, -6 + 2 * d);
  const auto dq = conic_divisor(d);
  const auto two_dl = 2 * dl;
  // Class equality, reported as the number of mismatching coordinates.
  auto mismatches = [](const DivisorClass& x, const DivisorClass& y) {
    long c = x.a() != y.a();
    for (std::size_t i = 0; i < x.b().size(); ++i) c += x.b()[i] != y.b()[i];
    return c;
  };
  push("viii:D_q=2D_l", mismatches(dq, two_dl), 0);
  long beta_mismatch = 0;
  const auto lat = dl.lattice();
  for (std::size_t i = 0; i < lat.s(); ++i) {
    const auto rebuilt = bisecant_divisor(d, i) + DivisorClass::hyperplane(lat) - DivisorClass::exceptional(lat, i);
    beta_mismatch += mismatches(rebuilt, dl);
  }
  push("ix:D_l=D_beta_i+h-e_i", beta_mismatch, 0);
  return out;
}

std::vector<IdentityResult> identities(long d) { return identities(d, DivisorClass::canonical(lattice_for(d))); }

bool LedgerReport::all_pass() const {
  for (const auto& r : identity_results) {
    if (!r.pass) return false;
  }
  return true;
}

LedgerReport invariants(long d) {
  if (d < 5) throw InputError("ledger needs d >= 5, got " + std::to_string(d));
  LedgerReport r;
  r.d = d;
  r.g = d - 2;
  r.s = exceptional_count(d);
  r.n = (d - 1) * (d - 2) / 2;
  r.dim_v = d - 2;
  r.dim_s2 = (d - 2) * (d - 1) / 2;
  r.deg_h2 = (d - 3) * (d - 4) / 2;
  r.chi_dl = d - 2;
  r.counts.tri_secant_through_point_of_c = (d - 3) * (d - 4) / 2;
  r.counts.conics_meeting_line_through_point = d - 3;
  r.counts.nodes_after_two_line_projection = (d - 3) * (d - 4) / 2;
  r.counts.nodes_after_bisecant_projection = (d - 4) * (d - 5) / 2;
  r.counts.conics_decomposition_ec = (d - 3) * (d - 4) / 2 + (2 * (d - 2) - 1);
  r.counts.conics_decomposition_ei = (d - 3) * (d - 4) / 2 + 2 * (d - 4) + 3;
  r.identity_results = identities(d);
  return r;
}

std::vector<IdentityResult> consistency_check(long d_max) {
  if (d_max < 5) throw InputError("consistency sweep needs max-d >= 5");
  std::vector<IdentityResult> all;
  for (long d = 5; d <= d_max; ++d) {
    for (auto r : identities(d)) {
      r.name += "@" + std::to_string(d);
      all.push_back(std::move(r));
    }
  }
  return all;
}

std::string LedgerReport::table() const {
  std::ostringstream out;
  out << "d=" << d << " g=" << g << " s=" << s << " n=" << n << "\n";
  auto row = [&out](const std::string& name, long value, const std::string& note = "") {
    out << "  " << std::left << std::setw(40) << name << std::right << std::setw(8) << value;
    if (!note.empty()) out << "  " << note;
    out << "\n";
  };
  const std::string d6 = d == 5 ? "(d >= 6 only)" : "";
  row("genus g", g);
  row("bisecant lines s", s);
  row("multisecant conics n", n);
  row("dim V", dim_v);
  row("dim S^2 V", dim_s2);
  row("deg H2 = D_l.D_l", deg_h2, d6);
  row("chi(O(D_l))", chi_dl);
  row("k>=3-secant conics through a point of C", counts.tri_secant_through_point_of_c);
  row("conics meeting a line through a point", counts.conics_meeting_line_through_point);
  row("nodes after two-line projection", counts.nodes_after_two_line_projection);
  row("nodes after bisecant projection", counts.nodes_after_bisecant_projection);
  row("conics through a point of E_C", counts.conics_decomposition_ec);
  row("conics through a point of E_i", counts.conics_decomposition_ei);
  out << "identities (classical inputs: K = -3h + sum e_i, chi(O) = 1)\n";
  for (const auto& r : identity_results) {
    out << "  " << std::left << std::setw(28) << r.name << std::right << std::setw(8) << r.lhs << std::setw(8) << r.rhs
        << "  " << (r.pass ? "pass" : "FAIL") << "\n";
  }
  return out.str();
}

std::string LedgerReport::json() const {
  nlohmann::ordered_json j;
  j["d"] = d;
  j["g"] = g;
  j["s"] = s;
  j["n"] = n;
  j["dimV"] = dim_v;
  j["dim_S2"] = dim_s2;
  j["deg_H2"] = deg_h2;
  j["deg_H2_valid"] = d >= 6;
  j["chi_Dl"] = chi_dl;
  j["counts"] = {{"tri_secant_through_point_of_C", counts.tri_secant_through_point_of_c},
                 {"conics_meeting_line_through_point", counts.conics_meeting_line_through_point},
                 {"nodes_after_two_line_projection", counts.nodes_after_two_line_projection},
                 {"nodes_after_bisecant_projection", counts.nodes_after_bisecant_projection},
                 {"conics_decomposition_EC", counts.conics_decomposition_ec},
                 {"conics_decomposition_Ei", counts.conics_decomposition_ei}};
  auto ids = nlohmann::ordered_json::array();
  for (const auto& r : identity_results) {
    ids.push_back({{"name", r.name}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}});
  }
  j["identities"] = std::move(ids);
  return j.dump();
}

}  // namespace apolar::ledger
