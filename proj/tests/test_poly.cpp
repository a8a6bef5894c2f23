#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "slrec/poly.hpp"

using namespace slrec;
using P = Poly<Rat>;

static P make(std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long c : cs) v.emplace_back(c);
  return P(std::move(v));
}

TEST_CASE("compose") {
  P z2 = make({0, 0, 1}), zp1 = make({1, 1});
  CHECK(z2.compose(zp1) == make({1, 2, 1}));
  P q = make({3, -2, 0, 5});
  CHECK(P::var().compose(q) == q);
  CHECK(make({0, 2}).compose(make({-1, 1})) == make({-2, 2}));
}

TEST_CASE("iterate") {
  CHECK(make({0, 0, 1}).iterate(3) == P(std::vector<Rat>(9, Rat(0))) + make({0, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(make({-1, 1}).iterate(4) == make({-4, 1}));
  P half = make({0, 1});
  half = Rat(1, 2) * half;
  P it5 = half.iterate(5);
  CHECK(it5.degree() == 1);
  CHECK(it5.coeff(1) == Rat(1, 32));
  CHECK(make({0, 0, 1}).iterate(0) == P::var());
  CHECK_THROWS_AS(make({0, 0, 1}).iterate(40, 1000), std::overflow_error);
}

TEST_CASE("iterate additivity") {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rat> cs;
    long deg = 1 + rng() % 2;
    for (long i = 0; i <= deg; ++i) {
      Rat c((long)(rng() % 5) - 2, 1 + rng() % 3);
      c.canonicalize();
      cs.push_back(c);
    }
    P p(cs);
    if (p.degree() < 1) continue;
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; a + b <= 4; ++b)
        CHECK(p.iterate(a + b) == p.iterate(a).compose(p.iterate(b)));
  }
}

TEST_CASE("poly gcd") {
  CHECK(poly_gcd(make({-1, 0, 1}), make({-1, 1})) == make({-1, 1}));
  CHECK(poly_gcd(make({1, 0, 1}), make({-1, 0, 1})) == make({1}));
  CHECK(poly_gcd(make({0, -1, 0, 1}), make({0, 0, 1})) == make({0, 1}));
  CHECK_THROWS(poly_gcd(P::zero(), P::zero()));
  // gcd divides both
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    auto rnd = [&](long d) {
      std::vector<Rat> cs;
      for (long i = 0; i <= d; ++i) cs.emplace_back((long)(rng() % 7) - 3);
      return P(cs);
    };
    P a = rnd(4), b = rnd(3);
    if (a.is_zero() || b.is_zero()) continue;
    P g = poly_gcd(a, b);
    CHECK(P::divmod(a, g).second.is_zero());
    CHECK(P::divmod(b, g).second.is_zero());
  }
}

TEST_CASE("compose_mod agrees with compose then mod") {
  std::mt19937 rng(17);
  for (int t = 0; t < 25; ++t) {
    auto rnd = [&](long d) {
      std::vector<Rat> cs;
      for (long i = 0; i < d; ++i) cs.emplace_back((long)(rng() % 7) - 3);
      cs.emplace_back(1 + rng() % 3);
      return P(cs);
    };
    P p = rnd(3), q = rnd(2), m = rnd(4);
    CHECK(p.compose_mod(q, m) == P::divmod(p.compose(q), m).second);
  }
}

TEST_CASE("common roots: via explicit factors") {
  P a = make({-1, 1}) * make({-2, 1}) * make({3, 1});
  P b = make({-2, 1}) * make({5, 1});
  CHECK(common_root_exists(a, b, false));
  CHECK(common_root_exists(a, b, true));
  P c = make({-4, 1});
  CHECK_FALSE(common_root_exists(a, c, false));
  CHECK(common_root_exists(make({-1, 0, 1}), make({-1, 1}), false));
  // only common root is zero
  CHECK_FALSE(common_root_exists(make({0, 0, 1}), make({0, 0, 0, 1}), true));
  CHECK(common_root_exists(make({0, 0, 1}), make({0, 0, 0, 1}), false));
  // z^8 - z vs z^9 - z: gcd z^2 - z, root 1 survives exclude_zero
  P z8 = make({0, -1, 0, 0, 0, 0, 0, 0, 1});
  P z9 = make({0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(common_root_exists(z8, z9, true));
}

TEST_CASE("common roots agree with explicit rational root search") {
  std::mt19937 rng(23);
  for (int t = 0; t < 60; ++t) {
    std::vector<long> r1, r2;
    for (int i = 0; i < 3; ++i) r1.push_back((long)(rng() % 9) - 4);
    for (int i = 0; i < 2; ++i) r2.push_back((long)(rng() % 9) - 4);
    P a = make({1}), b = make({1});
    for (long r : r1) a = a * make({-r, 1});
    for (long r : r2) b = b * make({-r, 1});
    bool shared = false, shared_nz = false;
    for (long x : r1)
      for (long y : r2)
        if (x == y) {
          shared = true;
          if (x != 0) shared_nz = true;
        }
    CHECK(common_root_exists(a, b, false) == shared);
    CHECK(common_root_exists(a, b, true) == shared_nz);
  }
}
