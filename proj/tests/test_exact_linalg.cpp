#include <doctest.h>

#include <random>

#include "support.hpp"
#include "toricnash/exact_linalg.hpp"

using namespace toricnash;

namespace {

IntMatrix rows(std::initializer_list<LatticeVector> rs) {
  std::vector<LatticeVector> v(rs);
  return IntMatrix::from_rows(v, v.front().rank());
}

IntMatrix cols(std::initializer_list<LatticeVector> cs) {
  std::vector<LatticeVector> v(cs);
  return IntMatrix::from_columns(v, v.front().rank());
}

std::vector<Rational> q(std::initializer_list<Rational> xs) { return xs; }

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  IntMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
  return a;
}

}  // namespace

TEST_CASE("primitive") {
  CHECK(primitive(LatticeVector{2, 4, 6}) == LatticeVector{1, 2, 3});
  CHECK(primitive(LatticeVector{1, 1, 2}) == LatticeVector{1, 1, 2});
  CHECK(primitive(LatticeVector{0, -6}) == LatticeVector{0, -1});
  CHECK_THROWS_AS(primitive(LatticeVector{0, 0}), Error);
  try {
    primitive(LatticeVector{0, 0, 0});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroVector);
  }
}

TEST_CASE("primitive is idempotent and has content one") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<Integer> x(3);
    for (auto& xi : x) xi = static_cast<long long>(rng() % 61) - 30;
    LatticeVector v(x);
    if (v.is_zero()) continue;
    auto p = primitive(v);
    CHECK(primitive(p) == p);
    CHECK(content(p.coords()) == 1);
    CHECK(content(v.coords()) * p == v);
  }
}

TEST_CASE("hnf examples") {
  auto id = IntMatrix::identity(2);
  auto r = hnf(id);
  CHECK(r.h == id);
  CHECK(r.u == id);

  r = hnf(rows({{1, 0, 0}, {1, 1, 2}}));
  CHECK(r.h == rows({{1, 0, 0}, {0, 1, 2}}));

  IntMatrix two = rows({{2, 0}, {0, 2}});
  r = hnf(two);
  CHECK(r.h == two);
  CHECK(r.u == id);
}

TEST_CASE("hnf transform is unimodular and reproduces H") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    auto a = random_matrix(rng, m, n, 9);
    auto r = hnf(a);
    CHECK(r.u * a == r.h);
    CHECK(abs(det(r.u)) == 1);
    CHECK(hnf(a).h == r.h);  // deterministic
    // Echelon shape with positive pivots and reduced entries above them.
    std::size_t lead = 0;
    for (std::size_t i = 0; i < m; ++i) {
      while (lead < n && r.h(i, lead) == 0) {
        for (std::size_t k = i; k < m; ++k) CHECK(r.h(k, lead) == 0);
        ++lead;
      }
      if (lead == n) break;
      CHECK(r.h(i, lead) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(r.h(k, lead) >= 0);
        CHECK(r.h(k, lead) < r.h(i, lead));
      }
      ++lead;
    }
  }
}

TEST_CASE("snf divisors") {
  CHECK(snf_divisors(IntMatrix::identity(3)) == std::vector<Integer>{1, 1, 1});
  CHECK(snf_divisors(rows({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}})) == std::vector<Integer>{1, 1, 2});
  CHECK(snf_divisors(rows({{1, 0, 0}, {1, 1, 2}})) == std::vector<Integer>{1, 1});
  CHECK(snf_divisors(rows({{2, 4}, {6, 8}})) == std::vector<Integer>{2, 4});
}

TEST_CASE("snf divisors multiply to |det| and divide each other") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 4;
    auto a = random_matrix(rng, n, n, 7);
    Integer d = det(a);
    auto div = snf_divisors(a);
    if (d == 0) {
      CHECK(div.size() < n);
      continue;
    }
    REQUIRE(div.size() == n);
    Integer prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      prod *= div[i];
      if (i > 0) CHECK(div[i] % div[i - 1] == 0);
    }
    CHECK(prod == abs(d));
  }
}

TEST_CASE("solve_rational") {
  auto x = solve_rational(cols({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}), LatticeVector{1, 1, 1});
  REQUIRE(x);
  CHECK(*x == q({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));

  x = solve_rational(IntMatrix::identity(3), LatticeVector{4, -5, 7});
  REQUIRE(x);
  CHECK(*x == q({4, -5, 7}));

  x = solve_rational(cols({{1, 0}, {1, 2}}), LatticeVector{0, 1});
  REQUIRE(x);
  CHECK(*x == q({Rational(-1, 2), Rational(1, 2)}));

  // Inconsistent and dependent systems give no answer.
  CHECK_FALSE(solve_rational(cols({{1, 0, 0}, {0, 1, 0}}), LatticeVector{0, 0, 1}));
  CHECK_FALSE(solve_rational(cols({{1, 1}, {2, 2}}), LatticeVector{1, 1}));
}

TEST_CASE("solve_rational re-substitutes exactly") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 4;
    auto a = random_matrix(rng, n, n, 6);
    std::vector<Integer> b(n);
    for (auto& bi : b) bi = static_cast<long long>(rng() % 21) - 10;
    auto x = solve_rational(a, LatticeVector(b));
    if (det(a) == 0) continue;
    REQUIRE(x);
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += Rational(a(i, j)) * (*x)[j];
      CHECK(s == Rational(b[i]));
    }
  }
}

TEST_CASE("det") {
  CHECK(det(IntMatrix::identity(4)) == 1);
  CHECK(det(rows({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}})) == 2);
  CHECK(det(rows({{1, 0}, {2, 5}})) == 5);
  CHECK_THROWS_AS(det(rows({{1, 0, 0}, {0, 1, 0}})), Error);
}

TEST_CASE("big integers do not overflow") {
  Integer big = Integer(1) << 100;
  LatticeVector v({big * 6, big * 4});
  CHECK(primitive(v) == LatticeVector{3, 2});
  IntMatrix a(2, 2);
  a(0, 0) = big;
  a(1, 1) = big;
  CHECK(det(a) == big * big);
}

TEST_CASE("rational helpers") {
  CHECK(floor(Rational(-3, 2)) == -2);
  CHECK(ceil(Rational(-3, 2)) == -1);
  CHECK(frac(Rational(-3, 2)) == Rational(1, 2));
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(-2)) == "-2");
  CHECK(parse_rational("-7/3") == Rational(-7, 3));
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("sublattice coordinates") {
  std::vector<LatticeVector> gens{{1, 0, 0}, {1, 1, 2}};
  auto s = Sublattice::span_of(gens, 3);
  CHECK(s.dim() == 2);
  CHECK_FALSE(s.is_full());
  // (1,1,2) - (1,0,0) = (0,1,2) is in the saturated span, (0,0,1) is not.
  auto l = s.to_local(LatticeVector{0, 1, 2});
  REQUIRE(l);
  CHECK(s.from_local(*l) == LatticeVector{0, 1, 2});
  CHECK_FALSE(s.to_local(LatticeVector{0, 0, 1}));
  for (const auto& e : s.equations()) CHECK(dot(e, LatticeVector{0, 1, 2}) == 0);
  // A local functional lifts to one agreeing on the span.
  std::vector<Integer> m{3, -1};
  auto lifted = s.lift_functional(m);
  for (const auto& v : {LatticeVector{1, 0, 0}, LatticeVector{2, 3, 6}}) {
    auto lv = *s.to_local(v);
    CHECK(dot(lifted, v) == dot(m, lv));
  }
  // The basis is a lattice basis of the span.
  CHECK(s.basis().size() == 2);
  CHECK(snf_divisors(IntMatrix::from_rows(s.basis(), 3)) == std::vector<Integer>{1, 1});
}

TEST_CASE("inverses") {
  auto a = rows({{2, 1}, {1, 1}});
  CHECK(inverse_unimodular(a) * a == IntMatrix::identity(2));
  CHECK_THROWS_AS(inverse_unimodular(rows({{2, 0}, {0, 1}})), Error);
  auto inv = inverse(to_rational(rows({{1, 0}, {2, 5}})));
  CHECK(inv(1, 1) == Rational(1, 5));
  CHECK(inv(1, 0) == Rational(-2, 5));
}
