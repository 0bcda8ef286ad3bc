#include <doctest.h>

#include "apolar/errors.hpp"
#include "apolar/form.hpp"
#include "apolar/io.hpp"
#include "apolar/linalg.hpp"
#include "apolar/multi_index.hpp"
#include "apolar/rational.hpp"
#include "helpers.hpp"

using namespace apolar;
using testing::matrix_of;
using testing::point;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational("0.5"), InputError);
  CHECK(factorial(5) == 120);
}

TEST_CASE("monomial basis order and size") {
  MonomialBasis b(3, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0] == MultiIndex{2, 0, 0});
  CHECK(b[1] == MultiIndex{1, 1, 0});
  CHECK(b[2] == MultiIndex{1, 0, 1});
  CHECK(b[3] == MultiIndex{0, 2, 0});
  CHECK(b[5] == MultiIndex{0, 0, 2});
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b[i]) == i);
  CHECK(monomial_count(4, 4) == 35);
  CHECK(MultiIndex{2, 1, 3}.factorial() == 12);
  CHECK(MultiIndex{2, 1}.divisible_by(MultiIndex{1, 1}));
  CHECK_FALSE(MultiIndex{2, 0}.divisible_by(MultiIndex{1, 1}));
}

TEST_CASE("exact determinant, inverse and kernel") {
  const auto m = matrix_of({{2, 1, 1}, {2, 2, 2}, {1, 1, 2}});
  CHECK(linalg::determinant(m) == 2);
  CHECK(linalg::inverse(m) == matrix_of({{1, Rational(-1, 2), 0}, {-1, Rational(3, 2), -1}, {0, Rational(-1, 2), 1}}));
  CHECK(linalg::inverse(m) * m == RationalMatrix::identity(3));

  const auto singular = matrix_of({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(linalg::determinant(singular) == 0);
  CHECK(linalg::rank(singular) == 2);
  CHECK_THROWS_AS(linalg::inverse(singular), DegenerateError);
  const auto ker = linalg::kernel(singular);
  REQUIRE(ker.size() == 1);
  for (const auto& v : (singular * ker[0])) CHECK(is_zero(v));
}

TEST_CASE("determinant of a matrix needing a row swap") {
  const auto m = matrix_of({{0, 1, 0}, {1, 0, 0}, {0, 0, Rational(1, 3)}});
  CHECK(linalg::determinant(m) == Rational(-1, 3));
}

TEST_CASE("linear solve statuses") {
  const auto a = matrix_of({{1, 1}, {1, -1}, {2, 0}});
  auto s = linalg::solve(a, {3, 1, 4});
  CHECK(s.status == linalg::SolveStatus::Unique);
  CHECK(s.particular == std::vector<Rational>{2, 1});
  CHECK(linalg::solve(a, {3, 1, 5}).status == linalg::SolveStatus::Inconsistent);
  const auto wide = matrix_of({{1, 1, 0}});
  s = linalg::solve(wide, {1});
  CHECK(s.status == linalg::SolveStatus::Underdetermined);
  CHECK(s.kernel.size() == 2);
}

TEST_CASE("matrix text round trip") {
  const auto m = matrix_of({{1, Rational(-2, 3)}, {0, 5}});
  CHECK(m.to_text() == "2 2\n1 -2/3\n0 5\n");
  CHECK(RationalMatrix::parse_text(m.to_text()) == m);
  CHECK_THROWS_AS(RationalMatrix::parse_text("2 2\n1 2\n3"), InputError);
}

TEST_CASE("form arithmetic and evaluation") {
  const Form x0 = Form::monomial(Space::OnV, {1, 0});
  const Form x1 = Form::monomial(Space::OnV, {0, 1});
  const Form f = power(x0 + x1, 4) + power(x0, 4) + power(x1, 4);
  CHECK(f == testing::binary_quartic_golden());
  CHECK(evaluate(f, point({1, 2}, PointRole::InV)) == 1 + 16 + 81);
  CHECK(differentiate(f, MultiIndex{1, 0}).coefficient(MultiIndex{3, 0}) == 8);
  CHECK((f - f).is_zero());
  CHECK_THROWS_AS(evaluate(f, point({1, 2}, PointRole::InDual)), InputError);
  CHECK_THROWS_AS(f + Form::monomial(Space::OnDual, {4, 0}), InputError);
  CHECK_THROWS_AS(f + power(x0, 3), InputError);
  CHECK_THROWS_AS(Form(Space::OnV, 2, 3, {{MultiIndex{1, 1}, 1}}), InputError);
}

TEST_CASE("evaluation is covariant under a change of coordinates") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t nu = 2 + seed % 3;
    const Form f = random_form(seed, nu, 3, 5);
    RationalMatrix m(nu, nu);
    for (std::size_t r = 0; r < nu; ++r)
      for (std::size_t c = 0; c < nu; ++c) m(r, c) = static_cast<long>(testing::mix(seed * 31 + r * nu + c) % 5) - 2;
    if (linalg::determinant(m) == 0) continue;
    const auto x = testing::random_point(seed, nu, PointRole::InV);
    PointVec mx{m * x.coords, PointRole::InV};
    CHECK(evaluate(change_coords(f, m), x) == evaluate(f, mx));
    CHECK(change_coords(change_coords(f, m), linalg::inverse(m)) == f);
  }
  CHECK_THROWS_AS(change_coords(random_form(1, 2, 2, 3), matrix_of({{1, 2}, {2, 4}})), DegenerateError);
}

TEST_CASE("random forms are reproducible from the seed") {
  CHECK(random_form(42, 3, 4, 9) == random_form(42, 3, 4, 9));
  CHECK_FALSE(random_form(42, 3, 4, 9) == random_form(43, 3, 4, 9));
}

TEST_CASE("form serialization round trip") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Space space = seed % 2 ? Space::OnV : Space::OnDual;
    const Form f = random_form(seed, 1 + seed % 4, seed % 6, 7, space);
    const auto text = io::serialize(f);
    CHECK(io::parse_form(text) == f);
    CHECK(io::serialize(io::parse_form(text)) == text);
  }
  CHECK(io::serialize(testing::binary_quartic_golden()) ==
        R"({"space":"V","nvars":2,"degree":4,"terms":[{"exp":[4,0],"coef":"2"},{"exp":[3,1],"coef":"4"},)"
        R"({"exp":[2,2],"coef":"6"},{"exp":[1,3],"coef":"4"},{"exp":[0,4],"coef":"2"}]})");
  CHECK_THROWS_AS(io::parse_form("{"), InputError);
  CHECK_THROWS_AS(io::parse_form(R"({"space":"W","nvars":1,"degree":1,"terms":[]})"), InputError);
}

TEST_CASE("points parse with roles") {
  const auto p = io::parse_point("1, -2/3, 0", PointRole::InDual);
  CHECK(p.role == PointRole::InDual);
  CHECK(p.coords == std::vector<Rational>{1, Rational(-2, 3), 0});
  CHECK(io::format_point(p) == "1,-2/3,0");
  const auto pts = io::parse_points("1,0\n\n0,1\n", PointRole::InDual);
  CHECK(pts.size() == 2);
  CHECK_THROWS_AS(io::parse_points("1,0\n0,1,2\n", PointRole::InDual), InputError);
}
