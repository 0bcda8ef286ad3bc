#include "apolar/matrix.hpp"

#include <sstream>

#include "apolar/errors.hpp"

namespace apolar {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  RationalMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  }
  return p;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x) {
  if (a.cols() != x.size()) throw InputError("matrix-vector dimension mismatch");
  std::vector<Rational> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  }
  return y;
}

std::string RationalMatrix::to_text() const {
  std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ' ';
      out += to_string((*this)(r, c));
    }
    out += '\n';
  }
  return out;
}

RationalMatrix RationalMatrix::parse_text(const std::string& text) {
  std::istringstream in(text);
  long rows = -1;
  long cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw InputError("matrix text must start with 'rows cols'");
  RationalMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::string token;
      if (!(in >> token)) throw InputError("matrix text has fewer entries than declared");
      m(r, c) = parse_rational(token);
    }
  }
  return m;
}

}  // namespace apolar
