#include <catch2/catch_amalgamated.hpp>

#include "slrec/cheby_engine.hpp"
#include "slrec/oracle.hpp"
#include "slrec/poly.hpp"
#include "slrec/window.hpp"

using namespace slrec;

// T_d as an exact rational polynomial: T_d(z + 1/z) = z^d + 1/z^d
static Poly<Rat> chebyshev_T(long d) {
  // T_0 = 2, T_1 = z, T_{k+1} = z T_k - T_{k-1}
  Poly<Rat> t0 = Poly<Rat>::constant(Rat(2)), t1 = Poly<Rat>::var();
  if (d == 0) return t0;
  for (long k = 1; k < d; ++k) {
    Poly<Rat> t2 = Poly<Rat>::var() * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

TEST_CASE("V_classify spec examples") {
  auto v = V_classify(2, 3, 1, 1, -1);
  CHECK_FALSE(v.full);
  CHECK(v.m0 == 2);
  CHECK(v.n0 == 1);
  CHECK(V_classify(4, 5, 6, 1, 1).full);
  CHECK(V_classify(3, 3, 1, -1, -1).full);
}

TEST_CASE("V dichotomy vs direct search (sampled)") {
  for (long r = 2; r <= 4; ++r)
    for (long s = 2; s <= 4; ++s)
      for (long t = 1; t <= 3; ++t)
        for (int e1 : {1, -1})
          for (int e2 : {1, -1}) {
            VClassification v = V_classify(r, s, t, e1, e2);
            long a1 = e1 < 0 ? 1 : 0, a2 = e2 < 0 ? 1 : 0;
            for (long m = v.m0; m < v.m0 + 4; ++m)
              for (long n = v.n0; n < v.n0 + 4; ++n) {
                bool direct = false;
                for (int eta : {1, -1})
                  for (int kappa : {1, -1})
                    direct = direct ||
                             torsion_exists_formula(pow(Int(r), m) - eta * t, a1,
                                                    pow(Int(s), n) - kappa * t, a2, 2);
                CHECK(direct == v.full);
              }
          }
}

TEST_CASE("cheby engine full-set identity") {
  ChebSpec c{2, 3, 1, 1, 1, 1};
  SemiLin2 s = chebyshev_engine(c);
  for (long m = 0; m < 15; ++m)
    for (long n = 0; n < 15; ++n) CHECK(s.member(m, n));
}

TEST_CASE("cheby engine vs gcd oracle on actual Chebyshev polynomials") {
  for (auto [r, s, t, e1, e2, e3] :
       std::vector<std::array<int, 6>>{{2, 3, 1, 1, 1, -1},
                                       {2, 2, 1, -1, 1, 1},
                                       {3, 2, 2, -1, -1, 1},
                                       {2, 3, 2, 1, -1, -1},
                                       {3, 3, 1, -1, -1, -1}}) {
    ChebSpec c{r, s, t, e1, e2, e3};
    SemiLin2 eng = chebyshev_engine(c);
    PolyTriple<Rat> tr;
    tr.f = Rat(e1) * chebyshev_T(r);
    tr.g = Rat(e2) * chebyshev_T(s);
    tr.c = Rat(e3) * (t == 1 ? Poly<Rat>::var() : chebyshev_T(t));
    Window ow = recurrence_window(tr, 6, 6);
    Window ew = Window::from_set(eng, 6, 6);
    auto d = window_equal(ow, ew);
    INFO("spec r=" << r << " s=" << s << " t=" << t << " e=(" << e1 << "," << e2
                   << "," << e3 << ") diff at (" << d.first_difference.x << ","
                   << d.first_difference.y << ")");
    CHECK(d.equal);
  }
}

TEST_CASE("cheby engine vs torsion-lift membership battery") {
  for (long r = 2; r <= 5; ++r)
    for (long s = 2; s <= 5; ++s)
      for (long t = 1; t <= 3; ++t)
        for (int e1 : {1, -1})
          for (int e2 : {1, -1})
            for (int e3 : {1, -1}) {
              ChebSpec c{r, s, t, e1, e2, e3};
              SemiLin2 eng = chebyshev_engine(c);
              for (long m = 0; m < 9; ++m)
                for (long n = 0; n < 9; ++n)
                  CHECK(eng.member(m, n) == cheby_membership(c, m, n));
            }
}
