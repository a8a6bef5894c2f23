#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "slrec/factor.hpp"
#include "slrec/numeric.hpp"

using namespace slrec;

TEST_CASE("nu_p on integers and rationals") {
  CHECK(nu_p(Int(12), Int(2)) == 2);
  CHECK(nu_p(Rat(3, 8), Int(2)) == -3);
  CHECK(nu_p(Int(40), Int(5)) == 1);
  CHECK(nu_p(Int(-48), Int(2)) == 4);
  CHECK_THROWS(nu_p(Int(0), Int(2)));
  CHECK_THROWS(nu_p(Rat(0), Int(3)));
}

TEST_CASE("nu_p additive on products") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    long a = static_cast<long>(rng() % 5000) + 1;
    long b = static_cast<long>(rng() % 5000) + 1;
    Int prod = Int(a) * Int(b);
    for (long p : {2L, 3L, 5L, 7L}) {
      CHECK(nu_p(prod, Int(p)) == nu_p(Int(a), Int(p)) + nu_p(Int(b), Int(p)));
    }
  }
}

TEST_CASE("factorize basics") {
  auto f = factorize(Int(12));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.sign == 1);
  CHECK(f.factors[0].first == 2);
  CHECK(f.factors[0].second == 2);
  CHECK(f.factors[1].first == 3);
  CHECK(f.factors[1].second == 1);

  auto g = factorize(Int(-6));
  CHECK(g.sign == -1);
  CHECK(g.reconstruct() == -6);

  auto one = factorize(Int(1));
  CHECK(one.sign == 1);
  CHECK(one.factors.empty());
  CHECK(one.reconstruct() == 1);

  CHECK_THROWS(factorize(Int(0)));
}

TEST_CASE("factorize round trip") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    long x = static_cast<long>(rng() % 1000000) + 1;
    if (rng() % 2) x = -x;
    auto f = factorize(Int(x));
    CHECK(f.reconstruct() == x);
    for (const auto& [p, e] : f.factors) CHECK(is_prime(p));
    for (size_t j = 1; j < f.factors.size(); ++j)
      CHECK(f.factors[j - 1].first < f.factors[j].first);
  }
  // a couple of big values
  Int big = Int("1234567890123456789");
  auto f = factorize(big);
  CHECK(f.reconstruct() == big);
  Int big2 = Int("29") * Int("1000003") * Int("1000033");
  auto f2 = factorize(big2);
  CHECK(f2.reconstruct() == big2);
  CHECK(f2.factors.size() == 3);
}

TEST_CASE("mult_order examples") {
  auto r = mult_order(2, 7);
  CHECK(r.preperiod == 0);
  CHECK(r.period == 3);
  r = mult_order(2, 12);
  CHECK(r.preperiod == 2);
  CHECK(r.period == 2);
  r = mult_order(1, 5);
  CHECK(r.preperiod == 0);
  CHECK(r.period == 1);
}

TEST_CASE("mult_order matches direct residue simulation") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    long M = static_cast<long>(rng() % 999) + 2;
    long u = static_cast<long>(rng() % 50);
    auto r = mult_order(Int(u), Int(M));
    // simulate and verify u^(n+period) == u^n for n >= preperiod, minimality
    std::vector<long> seq;
    long x = 1 % M;
    for (long i = 0; i < r.preperiod + 2 * r.period + 4; ++i) {
      seq.push_back(x);
      x = to_long(mod_floor(Int(x) * u, Int(M)));
    }
    for (long n = r.preperiod; n + r.period < static_cast<long>(seq.size()); ++n)
      CHECK(seq[n] == seq[n + r.period]);
    if (r.preperiod > 0) {
      long n = r.preperiod - 1;
      CHECK(seq[n] != seq[n + r.period]);
    }
    if (r.period > 1) {
      bool smaller_works = true;
      for (long p = 1; p < r.period && smaller_works; ++p) {
        smaller_works = true;
        for (long n = r.preperiod; n + p < static_cast<long>(seq.size()); ++n)
          if (seq[n] != seq[n + p]) {
            smaller_works = false;
            break;
          }
        CHECK_FALSE(smaller_works);
      }
    }
  }
}
