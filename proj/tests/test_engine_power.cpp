#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "slrec/lemma41.hpp"
#include "slrec/lte.hpp"
#include "slrec/oracle.hpp"
#include "slrec/power_engine.hpp"

using namespace slrec;

TEST_CASE("lemma41 examples") {
  CHECK(lemma41_check(2, 1, 1, Int(3), Int(3), Int(1), Int(1), 2, 2));
  CHECK_FALSE(lemma41_check(2, 1, 1, Int(2), Int(3), Int(0), Int(0), 1, 1));
  CHECK(lemma41_check(5, 0, 0, Int(2), Int(3), Int(0), Int(0), 3, 2));
  CHECK_THROWS(lemma41_check(2, 1, 1, Int(2), Int(3), Int(5), Int(0), 1, 1));
}

TEST_CASE("lemma41 agrees with the torsion congruence solver") {
  std::mt19937 rng(71);
  for (int t = 0; t < 400; ++t) {
    long k = 1 + rng() % 6;
    long a = rng() % k, b = rng() % k;
    long d1 = 2 + rng() % 4, d2 = 2 + rng() % 4;
    if (rng() % 3 == 0) d1 = -d1;
    if (rng() % 3 == 0) d2 = -d2;
    long d3 = rng() % 3, d4 = rng() % 3;
    long m = rng() % 5, n = rng() % 5;
    Int A = pow(Int(d1), m) - d3, B = pow(Int(d2), n) - d4;
    if (!(pow(Int(std::abs(d1)), m) > d3) || !(pow(Int(std::abs(d2)), n) > d4)) continue;
    bool viaformula = lemma41_check(k, a, b, Int(d1), Int(d2), Int(d3), Int(d4), m, n);
    bool viacongr = oracle_torsion_exists(A, a, B, b, k);
    CHECK(viaformula == viacongr);
  }
}

TEST_CASE("lte_nu2 examples") {
  CHECK(lte_nu2(Int(3), Int(1), 2, true) == 3);
  CHECK(lte_nu2(Int(3), Int(1), 3, true) == 1);
  CHECK(lte_nu2(Int(1), Int(1), 5, false) == 1);
  CHECK_THROWS(lte_nu2(Int(3), Int(3), 4, true));
  CHECK_THROWS(lte_nu2(Int(2), Int(1), 2, true));
}

TEST_CASE("lte_nu2 equals direct valuation on a sample") {
  std::mt19937 rng(73);
  for (int t = 0; t < 400; ++t) {
    long x = 2 * (rng() % 50) + 1, y = 2 * (rng() % 50) + 1;
    if (rng() % 2) x = -x;
    if (rng() % 2) y = -y;
    long n = 1 + rng() % 32;
    for (bool minus : {true, false}) {
      Int direct = pow(Int(x), n);
      if (minus)
        direct -= pow(Int(y), n);
      else
        direct += pow(Int(y), n);
      if (is_zero(direct)) {
        CHECK_THROWS(lte_nu2(Int(x), Int(y), n, minus));
      } else {
        CHECK(lte_nu2(Int(x), Int(y), n, minus) == nu_p(direct, Int(2)));
      }
    }
  }
}

TEST_CASE("power engine spec examples") {
  // d1=2, d2=3, zeta=1, c=1: full quadrant
  PowerSpec full{Int(2), Int(3), {0, 1}, {0, 1}};
  SemiLin2 s = power_engine(full);
  for (long m = 0; m < 12; ++m)
    for (long n = 0; n < 12; ++n) CHECK(s.member(m, n));

  // d1=2, d2=3, zeta=1, c=-1: {0} x Z>=0
  PowerSpec neg{Int(2), Int(3), {0, 1}, {1, 2}};
  SemiLin2 s2 = power_engine(neg);
  for (long m = 0; m < 12; ++m)
    for (long n = 0; n < 12; ++n) CHECK(s2.member(m, n) == (m == 0));
}

TEST_CASE("power engine agrees with torsion oracle") {
  std::mt19937 rng(79);
  for (int t = 0; t < 12; ++t) {
    PowerSpec sp;
    sp.d1 = 2 + rng() % 4;
    sp.d2 = 2 + rng() % 4;
    if (rng() % 4 == 0) sp.d1 = -sp.d1;
    if (rng() % 4 == 0) sp.d2 = -sp.d2;
    long zo = 1 + rng() % 6, co = 1 + rng() % 6;
    sp.zeta = {static_cast<long>(rng() % zo), zo};
    sp.c = {static_cast<long>(rng() % co), co};
    SemiLin2 s = power_engine(sp);

    TorsionSpec ts;
    ts.d1 = sp.d1;
    ts.d2 = sp.d2;
    ts.k = sp.k();
    ts.a = sp.a();
    ts.e = sp.e();
    Window ow = torsion_window(ts, 10, 10);
    Window ew = Window::from_set(s, 10, 10);
    auto d = window_equal(ow, ew);
    INFO("spec " << t << " d1=" << sp.d1 << " d2=" << sp.d2 << " k=" << ts.k
                 << " a=" << ts.a << " e=" << ts.e << " diff at ("
                 << d.first_difference.x << "," << d.first_difference.y << ")");
    CHECK(d.equal);
  }
}
