#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmlab/echelon.hpp"
#include "fmlab/rot_scalar.hpp"

using namespace fmlab;

namespace {

Mat mat(Index r, Index c, std::initializer_list<Rational> xs) {
  Mat m(r, c);
  auto it = xs.begin();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = *it++;
  return m;
}

Vec vec(std::initializer_list<Rational> xs) {
  Vec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("rational normal form and promotion") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  Rational big = Rational::parse("123456789012345678901234567891/2");
  CHECK(big.str() == "123456789012345678901234567891/2");
  Rational x(1LL << 61);
  Rational y = x * x * x;
  CHECK((y / x / x) == x);
  CHECK((y - y).is_zero());
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("solve_linear") {
  auto r = solve_linear(identity<Rational>(2), vec({3, Rational(5, 2)}));
  REQUIRE(r.solvable());
  CHECK(same<Rational>(*r.solution, vec({3, Rational(5, 2)})));

  Mat a = mat(2, 2, {1, 1, 2, 2});
  auto none = solve_linear(a, vec({1, 3}));
  CHECK_FALSE(none.solvable());
  REQUIRE(none.certificate);
  // y^T A = 0, y^T b != 0
  Vec y = *none.certificate;
  CHECK(is_zero_matrix<Rational>(Mat(y.transpose() * a)));
  CHECK_FALSE((y.transpose() * vec({1, 3}))(0).is_zero());

  auto some = solve_linear(a, vec({1, 2}));
  REQUIRE(some.solvable());
  CHECK((*some.solution)(0) + (*some.solution)(1) == Rational(1));
}

TEST_CASE("span, membership and quotient") {
  Subspace s = Subspace::span({vec({1, 0}), vec({0, 1})}, 2);
  CHECK(s.contains(vec({2, 3})));
  CHECK(Subspace::span({vec({1, 2})}, 2).contains(vec({2, 4})));
  CHECK_FALSE(Subspace::span({vec({1, 2})}, 2).contains(vec({2, 3})));

  Quotient q = quotient(Subspace::span({vec({1, 1})}, 2));
  CHECK(q.complement.size() == 1);
  CHECK(same(mul(q.projection, q.section), identity<Rational>(1)));
  CHECK(is_zero_matrix<Rational>(Mat(mul(q.projection, Mat(vec({1, 1}))))));
}

TEST_CASE("echelon basis does not depend on insertion order") {
  Subspace a = Subspace::span({vec({1, 2, 3}), vec({0, 1, 1})}, 3);
  Subspace b = Subspace::span({vec({1, 3, 4}), vec({2, 4, 6}), vec({1, 2, 3})}, 3);
  CHECK(a == b);
  CHECK(a.rank() == 2);
  CHECK(intersect(a, Subspace::span({vec({0, 0, 1})}, 3)).rank() == 0);
  CHECK(sum(a, Subspace::span({vec({0, 0, 1})}, 3)).rank() == 3);
}

TEST_CASE("inverse and left inverse") {
  Mat m = mat(2, 2, {2, 1, 1, 1});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(same(mul(m, *inv), identity<Rational>(2)));
  CHECK_FALSE(inverse(mat(2, 2, {1, 2, 2, 4})));
  Mat tall = mat(3, 2, {1, 0, 1, 1, 0, 2});
  auto li = left_inverse(tall);
  REQUIRE(li);
  CHECK(same(mul(*li, tall), identity<Rational>(2)));
}

TEST_CASE("rotation ring normal form") {
  RotScalar c = RotScalar::c(), s = RotScalar::s();
  CHECK(s * s == RotScalar(1) - c * c);
  CHECK((c * c + s * s) == RotScalar(1));
  CHECK((c * c + s * s).eval(1, 0) == Rational(1));
  RotScalar s3 = s * s * s;
  CHECK(s3 == s * (RotScalar(1) - c * c));
  CHECK(rot_reduce({{{0, 3}, Rational(1)}}) == s * (RotScalar(1) - c * c));
  CHECK(rot_reduce({{{0, 2}, Rational(1)}}) == RotScalar(1) - c * c);
  // start (1, 0), end (0, 1)
  CHECK(c.eval(1, 0) == Rational(1));
  CHECK(s.eval(0, 1) == Rational(1));
  CHECK((c - c).is_zero());
}
