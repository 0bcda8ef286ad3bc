#include "apolar/multi_index.hpp"

#include <numeric>

#include "apolar/errors.hpp"

namespace apolar {

MultiIndex MultiIndex::unit(std::size_t nvars, std::size_t var) {
  MultiIndex idx(nvars);
  idx.exps_.at(var) = 1;
  return idx;
}

unsigned MultiIndex::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

Integer MultiIndex::factorial() const {
  Integer r = 1;
  for (unsigned e : exps_) r *= apolar::factorial(e);
  return r;
}

bool MultiIndex::divisible_by(const MultiIndex& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (exps_[i] < other.exps_[i]) return false;
  }
  return true;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw InputError("multi-index length mismatch");
  MultiIndex r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (!a.divisible_by(b)) throw InputError("multi-index difference would be negative");
  MultiIndex r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] -= b.exps_[i];
  return r;
}

std::string MultiIndex::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exps_[i]);
  }
  return s + "]";
}

bool GrlexDescending::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return a.size() > b.size();
}

namespace {

void enumerate(std::size_t var, unsigned remaining, MultiIndex& current, std::vector<MultiIndex>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.push_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
  if (nvars == 0) throw InputError("monomial basis needs at least one variable");
  MultiIndex current(nvars);
  enumerate(0, degree, current, monomials_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const MultiIndex& idx) const {
  const auto it = lookup_.find(idx);
  if (it == lookup_.end() || idx.size() != nvars_) {
    throw InputError("monomial " + idx.to_string() + " is not in the degree-" + std::to_string(degree_) + " basis");
  }
  return it->second;
}

std::size_t monomial_count(std::size_t nvars, unsigned degree) {
  // C(nvars + degree - 1, degree), computed incrementally to stay exact.
  std::size_t r = 1;
  for (unsigned i = 1; i <= degree; ++i) r = r * (nvars - 1 + i) / i;
  return r;
}

}  // namespace apolar
