#pragma once

// Predicate-to-SemiLin2 synthesis. The caller supplies a modulus L, a
// depth threshold theta, and the slope directions along which its
// congruence data is constant. The kernel refines {(1,0), dirs..., (0,1)}
// to a unimodular fan (consecutive rays have determinant 1, so integer
// cone coordinates are exact), tiles each sector's deep region by residue
// classes mod L with the two L-scaled rays as generators, adds band pieces
// along every ray and a pointwise finite part, and then verifies the
// assembly against the predicate on a box, erroring on any mismatch.
//
// Caller contract: pred(x) == pred(x + L*r) whenever r is a fan ray and x
// lies in a sector adjacent to r with both cone coordinates of the deeper
// kind (>= theta along every non-r direction).

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "slrec/linset.hpp"

namespace slrec {

struct SynthSpec {
  long L = 1;
  long theta = 1;
  std::vector<Pt> dirs;
  long verify_margin = 2;
};

namespace detail {

inline long det2(const Pt& u, const Pt& v) { return u.x * v.y - u.y * v.x; }

inline Pt primitive(Pt p) {
  long g = to_long(gcd(Int(p.x), Int(p.y)));
  if (g > 1) {
    p.x /= g;
    p.y /= g;
  }
  return p;
}

inline std::vector<Pt> unimodular_fan(const std::vector<Pt>& dirs) {
  std::vector<Pt> rays = {{1, 0}, {0, 1}};
  for (Pt d : dirs) {
    if (d.x < 0 || d.y < 0 || (d.x == 0 && d.y == 0))
      throw std::domain_error("synthesize: bad cone direction");
    if (d.x == 0 || d.y == 0) continue;
    rays.push_back(primitive(d));
  }
  std::sort(rays.begin(), rays.end(), [](const Pt& a, const Pt& b) {
    return det2(a, b) > 0;  // ascending slope
  });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  for (long guard = 0; guard < 100000; ++guard) {
    bool changed = false;
    for (size_t i = 0; i + 1 < rays.size(); ++i) {
      long d = det2(rays[i], rays[i + 1]);
      if (d < 1) throw std::logic_error("fan rays out of order");
      if (d > 1) {
        rays.insert(rays.begin() + i + 1,
                    primitive({rays[i].x + rays[i + 1].x, rays[i].y + rays[i + 1].y}));
        changed = true;
        break;
      }
    }
    if (!changed) return rays;
  }
  throw std::runtime_error("synthesize: fan refinement did not terminate");
}

}  // namespace detail

inline SemiLin2 synthesize(const std::function<bool(long, long)>& pred,
                           const SynthSpec& spec) {
  const long L = spec.L, theta = spec.theta;
  if (L < 1 || theta < 0) throw std::domain_error("synthesize: bad L/theta");
  std::vector<Pt> rays = detail::unimodular_fan(spec.dirs);
  size_t ns = rays.size() - 1;

  auto eval = [&](Pt p) { return pred(p.x, p.y); };
  auto at = [&](const Pt& u, const Pt& v, long a, long b) {
    return Pt{a * u.x + b * v.x, a * u.y + b * v.y};
  };
  auto lift = [&](long residue) { return theta + mod_floor(residue - theta, L); };

  // tables[s]: deep residue classes, bands along u, bands along v
  std::vector<std::vector<char>> deep(ns), bandu(ns), bandv(ns);
  for (size_t s = 0; s < ns; ++s) {
    const Pt &u = rays[s], &v = rays[s + 1];
    deep[s].assign(L * L, 0);
    for (long ar = 0; ar < L; ++ar)
      for (long br = 0; br < L; ++br)
        deep[s][ar * L + br] = eval(at(u, v, lift(ar), lift(br))) ? 1 : 0;
    bandu[s].assign(theta * L, 0);
    bandv[s].assign(theta * L, 0);
    for (long b0 = 0; b0 < theta; ++b0)
      for (long ar = 0; ar < L; ++ar)
        bandu[s][b0 * L + ar] = eval(at(u, v, lift(ar), b0)) ? 1 : 0;
    for (long a0 = 0; a0 < theta; ++a0)
      for (long br = 0; br < L; ++br)
        bandv[s][a0 * L + br] = eval(at(u, v, a0, lift(br))) ? 1 : 0;
  }

  // finite apex region, deduplicated across sectors
  std::set<Pt> apex_true;
  for (size_t s = 0; s < ns; ++s)
    for (long a = 0; a < theta; ++a)
      for (long b = 0; b < theta; ++b) {
        Pt p = at(rays[s], rays[s + 1], a, b);
        if (eval(p)) apex_true.insert(p);
      }

  auto assembled = [&](long m, long n) -> bool {
    if (m < 0 || n < 0) return false;
    Pt x{m, n};
    for (size_t s = 0; s < ns; ++s) {
      const Pt &u = rays[s], &v = rays[s + 1];
      long a = detail::det2(x, v), b = detail::det2(u, x);
      if (a < 0 || b < 0) continue;
      if (a >= theta && b >= theta) return deep[s][(a % L) * L + (b % L)] != 0;
      if (b < theta && a >= theta) return bandu[s][b * L + (a % L)] != 0;
      if (a < theta && b >= theta) return bandv[s][a * L + (b % L)] != 0;
      return apex_true.count(x) > 0;
    }
    throw std::logic_error("synthesize: point escaped the fan");
  };

  // verification pass
  long maxsum = 2;
  for (size_t s = 0; s < ns; ++s) {
    const Pt &u = rays[s], &v = rays[s + 1];
    maxsum = std::max({maxsum, u.x + v.x, u.y + v.y});
  }
  long W = std::max(64L, std::min((theta + L) * maxsum + spec.verify_margin * L * maxsum,
                                  (theta + 4 * L) * maxsum));
  for (long m = 0; m < W; ++m)
    for (long n = 0; n < W; ++n)
      if (assembled(m, n) != pred(m, n))
        throw std::runtime_error(
            "synthesis verification failed at (" + std::to_string(m) + "," +
            std::to_string(n) + "): periodicity contract violated");

  SemiLin2 out;
  for (const Pt& p : apex_true) out.sporadic.push_back(p);
  for (size_t s = 0; s < ns; ++s) {
    const Pt &u = rays[s], &v = rays[s + 1];
    Pt Lu{L * u.x, L * u.y}, Lv{L * v.x, L * v.y};
    for (long ar = 0; ar < L; ++ar)
      for (long br = 0; br < L; ++br)
        if (deep[s][ar * L + br])
          out.components.push_back(LinSet(at(u, v, lift(ar), lift(br)), {Lu, Lv}));
    for (long b0 = 0; b0 < theta; ++b0)
      for (long ar = 0; ar < L; ++ar)
        if (bandu[s][b0 * L + ar])
          out.components.push_back(LinSet(at(u, v, lift(ar), b0), {Lu}));
    for (long a0 = 0; a0 < theta; ++a0)
      for (long br = 0; br < L; ++br)
        if (bandv[s][a0 * L + br])
          out.components.push_back(LinSet(at(u, v, a0, lift(br)), {Lv}));
  }
  out.normalize();
  return out;
}

}  // namespace slrec
