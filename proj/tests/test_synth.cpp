#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "slrec/synth.hpp"
#include "slrec/window.hpp"

using namespace slrec;

static void check_matches(const SemiLin2& s, const std::function<bool(long, long)>& pred,
                          long M, long N) {
  for (long m = 0; m < M; ++m)
    for (long n = 0; n < N; ++n) CHECK(s.member(m, n) == pred(m, n));
}

TEST_CASE("synthesize parity of m+n") {
  auto pred = [](long m, long n) { return (m + n) % 2 == 0; };
  SynthSpec spec;
  spec.L = 2;
  spec.theta = 0;
  SemiLin2 s = synthesize(pred, spec);
  check_matches(s, pred, 25, 25);
}

TEST_CASE("synthesize always false and simple threshold") {
  SynthSpec spec;
  spec.L = 1;
  spec.theta = 0;
  SemiLin2 e = synthesize([](long, long) { return false; }, spec);
  CHECK(e.components.empty());
  CHECK(e.sporadic.empty());

  spec.theta = 1;
  SemiLin2 s = synthesize([](long m, long) { return m >= 1; }, spec);
  check_matches(s, [](long m, long) { return m >= 1; }, 20, 20);
}

TEST_CASE("synthesize with a cone direction") {
  // membership flips across the line 2m = 3n and is residue-periodic inside
  auto pred = [](long m, long n) {
    long e = 2 * m - 3 * n;
    if (e >= 0) return (e % 4) < 2;
    return (m + n) % 3 == 0;
  };
  SynthSpec spec;
  spec.L = 12;
  spec.theta = 4;
  spec.dirs = {{3, 2}};
  SemiLin2 s = synthesize(pred, spec);
  check_matches(s, pred, 60, 60);
}

TEST_CASE("synthesize rejects contract violations") {
  // not periodic along rows at any modulus dividing 4
  auto pred = [](long m, long n) { return (m * m + n) % 3 == 0; };
  SynthSpec spec;
  spec.L = 4;
  spec.theta = 2;
  CHECK_THROWS_AS(synthesize(pred, spec), std::runtime_error);
}

TEST_CASE("synthesize randomized residue predicates") {
  std::mt19937 rng(61);
  for (int t = 0; t < 12; ++t) {
    long L = 1 + rng() % 6;
    long theta = rng() % 5;
    // truth table on residues with a diagonal-side split along a random slope
    long a = 1 + rng() % 3, b = 1 + rng() % 3;
    std::vector<char> tabp(L * L), tabn(L * L);
    for (auto& c : tabp) c = rng() % 2;
    for (auto& c : tabn) c = rng() % 2;
    // strip values near the boundary get their own table to exercise bands
    long rho = std::min<long>(theta, 2);
    std::vector<char> strip((2 * rho + 1) * L);
    for (auto& c : strip) c = rng() % 2;
    auto pred = [&](long m, long n) {
      long e = a * m - b * n;
      if (e >= -rho && e <= rho) return strip[(e + rho) * L + mod_floor(m, L)] != 0;
      const auto& tab = e > 0 ? tabp : tabn;
      return tab[mod_floor(m, L) * L + mod_floor(n, L)] != 0;
    };
    SynthSpec spec;
    spec.L = L;
    spec.theta = std::max<long>(theta, rho + 1);
    spec.dirs = {{b, a}};
    SemiLin2 s = synthesize(pred, spec);
    check_matches(s, pred, 50, 50);
  }
}
