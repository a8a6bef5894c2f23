#pragma once

// Linear and semilinear sets in Z^2_{>=0}: membership, union, intersection
// (via a Contejean-Devie Hilbert basis solver), row slices, diagonal,
// eventual-period bounds, and numerical semigroups.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "slrec/epset.hpp"
#include "slrec/numeric.hpp"

namespace slrec {

struct Pt {
  long x = 0;
  long y = 0;
  friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Pt& a, const Pt& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
  friend Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
  friend Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
};

struct LinSet {
  Pt base;
  std::vector<Pt> gens;  // deduplicated, none zero

  LinSet() = default;
  LinSet(Pt b, std::vector<Pt> g) : base(b), gens(std::move(g)) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    gens.erase(std::remove(gens.begin(), gens.end(), Pt{0, 0}), gens.end());
    if (base.x < 0 || base.y < 0) throw std::domain_error("LinSet: negative base");
    for (const Pt& p : gens)
      if (p.x < 0 || p.y < 0) throw std::domain_error("LinSet: negative generator");
  }
  friend bool operator==(const LinSet& a, const LinSet& b) {
    return a.base == b.base && a.gens == b.gens;
  }
  friend bool operator<(const LinSet& a, const LinSet& b) {
    return a.base != b.base ? a.base < b.base : a.gens < b.gens;
  }
};

// p - base a nonnegative integer combination of gens? Bounded DP: each
// nonzero generator raises the coordinate sum, so the search space is the
// rectangle up to the target.
inline bool member_lin(const LinSet& L, Pt p) {
  long dx = p.x - L.base.x, dy = p.y - L.base.y;
  if (dx < 0 || dy < 0) return false;
  std::vector<std::vector<char>> reach(dx + 1, std::vector<char>(dy + 1, 0));
  reach[0][0] = 1;
  for (long i = 0; i <= dx; ++i)
    for (long j = 0; j <= dy; ++j) {
      if (!reach[i][j]) continue;
      if (i == dx && j == dy) return true;
      for (const Pt& g : L.gens)
        if (i + g.x <= dx && j + g.y <= dy) reach[i + g.x][j + g.y] = 1;
    }
  return reach[dx][dy] != 0;
}

struct SemiLin2 {
  std::vector<LinSet> components;
  std::vector<Pt> sporadic;

  static SemiLin2 empty_set() { return {}; }
  static SemiLin2 full_set() {
    SemiLin2 s;
    s.components.push_back(LinSet({0, 0}, {{1, 0}, {0, 1}}));
    return s;
  }

  bool member(Pt p) const {
    if (p.x < 0 || p.y < 0) return false;
    if (std::binary_search(sporadic.begin(), sporadic.end(), p)) return true;
    for (const LinSet& L : components)
      if (member_lin(L, p)) return true;
    return false;
  }
  bool member(long m, long n) const { return member({m, n}); }

  void normalize() {
    std::sort(sporadic.begin(), sporadic.end());
    sporadic.erase(std::unique(sporadic.begin(), sporadic.end()), sporadic.end());
    std::sort(components.begin(), components.end());
    components.erase(std::unique(components.begin(), components.end()), components.end());
  }

  friend SemiLin2 set_union(const SemiLin2& a, const SemiLin2& b) {
    SemiLin2 r = a;
    r.components.insert(r.components.end(), b.components.begin(), b.components.end());
    r.sporadic.insert(r.sporadic.end(), b.sporadic.begin(), b.sporadic.end());
    r.normalize();
    return r;
  }
};

// ---- Hilbert basis machinery (Contejean-Devie completion) ----

// All minimal nonnegative nonzero solutions of A x = 0.
// `bound` caps each component; exceeding it throws.
inline std::vector<std::vector<long>> hilbert_basis(
    const std::vector<std::vector<long>>& A, long bound,
    const std::string& diag = "") {
  size_t rows = A.size(), n = rows ? A[0].size() : 0;
  auto apply = [&](const std::vector<long>& x) {
    std::vector<long> v(rows, 0);
    for (size_t r = 0; r < rows; ++r)
      for (size_t i = 0; i < n; ++i) v[r] += A[r][i] * x[i];
    return v;
  };
  auto is_zerov = [](const std::vector<long>& v) {
    for (long c : v)
      if (c != 0) return false;
    return true;
  };
  auto dominated = [](const std::vector<long>& x, const std::vector<std::vector<long>>& B) {
    for (const auto& b : B) {
      bool le = true;
      for (size_t i = 0; i < x.size(); ++i)
        if (b[i] > x[i]) {
          le = false;
          break;
        }
      if (le) return true;
    }
    return false;
  };
  std::vector<std::vector<long>> basis;
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> frontier;
  for (size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    frontier.push_back(e);
    seen.insert(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& x : frontier) {
      std::vector<long> v = apply(x);
      if (is_zerov(v)) {
        if (!dominated(x, basis)) basis.push_back(x);
        continue;
      }
      if (dominated(x, basis)) continue;
      for (size_t i = 0; i < n; ++i) {
        long dot = 0;
        for (size_t r = 0; r < rows; ++r) dot += v[r] * A[r][i];
        if (dot >= 0) continue;
        std::vector<long> y = x;
        y[i]++;
        if (y[i] > bound)
          throw std::runtime_error("hilbert_basis: saturation bound exceeded" +
                                   (diag.empty() ? "" : " (" + diag + ")"));
        if (seen.insert(y).second && !dominated(y, basis)) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return basis;
}

// Minimal solutions and homogeneous Hilbert basis of A x = b, x >= 0,
// via the homogenizing variable t.
struct DiophSolutions {
  std::vector<std::vector<long>> minimal;  // t == 1 solutions
  std::vector<std::vector<long>> homogeneous;  // t == 0 Hilbert basis
};

inline DiophSolutions solve_linear_diophantine(
    const std::vector<std::vector<long>>& A, const std::vector<long>& b,
    long bound, const std::string& diag = "") {
  size_t rows = A.size(), n = rows ? A[0].size() : 0;
  std::vector<std::vector<long>> Ah(rows, std::vector<long>(n + 1, 0));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t i = 0; i < n; ++i) Ah[r][i] = A[r][i];
    Ah[r][n] = -b[r];
  }
  DiophSolutions out;
  for (auto& h : hilbert_basis(Ah, bound, diag)) {
    long t = h[n];
    h.pop_back();
    if (t == 0)
      out.homogeneous.push_back(std::move(h));
    else if (t == 1)
      out.minimal.push_back(std::move(h));
    // t >= 2 minimal solutions never decompose into t<=1 pieces of the
    // inhomogeneous problem; they are irrelevant to it
  }
  return out;
}

inline long default_saturation_bound(const LinSet& a, const LinSet& b) {
  long coord = std::max({a.base.x, a.base.y, b.base.x, b.base.y, 1L});
  long gsum = 0;
  for (const Pt& g : a.gens) gsum += g.x + g.y;
  for (const Pt& g : b.gens) gsum += g.x + g.y;
  long ng = static_cast<long>(a.gens.size() + b.gens.size());
  return 2 * (coord + gsum) * std::max(ng, 1L);
}

// Intersection of two linear sets as an explicit SemiLin2.
inline SemiLin2 intersect_lin(const LinSet& L1, const LinSet& L2, long bound = -1) {
  if (bound < 0) bound = default_saturation_bound(L1, L2);
  size_t r1 = L1.gens.size(), r2 = L2.gens.size();
  std::vector<std::vector<long>> A(2, std::vector<long>(r1 + r2, 0));
  for (size_t i = 0; i < r1; ++i) {
    A[0][i] = L1.gens[i].x;
    A[1][i] = L1.gens[i].y;
  }
  for (size_t j = 0; j < r2; ++j) {
    A[0][r1 + j] = -L2.gens[j].x;
    A[1][r1 + j] = -L2.gens[j].y;
  }
  std::vector<long> b = {L2.base.x - L1.base.x, L2.base.y - L1.base.y};
  DiophSolutions sol = solve_linear_diophantine(A, b, bound, "intersect_lin");
  auto image = [&](const std::vector<long>& v) {
    Pt p = L1.base;
    for (size_t i = 0; i < r1; ++i) {
      p.x += v[i] * L1.gens[i].x;
      p.y += v[i] * L1.gens[i].y;
    }
    return p;
  };
  std::vector<Pt> incr;
  for (const auto& h : sol.homogeneous) {
    Pt d{0, 0};
    for (size_t i = 0; i < r1; ++i) {
      d.x += h[i] * L1.gens[i].x;
      d.y += h[i] * L1.gens[i].y;
    }
    if (!(d == Pt{0, 0})) incr.push_back(d);
  }
  SemiLin2 out;
  for (const auto& t : sol.minimal) {
    if (incr.empty())
      out.sporadic.push_back(image(t));
    else
      out.components.push_back(LinSet(image(t), incr));
  }
  out.normalize();
  return out;
}

// {offset + sum c_i g_i : c_i >= 0} as a canonical EPSet1; gens nonempty,
// all >= 1. Beyond the conductor membership is divisibility by gcd(gens).
inline EPSet1 numerical_semigroup_set(std::vector<long> gens, long offset) {
  if (gens.empty()) throw std::domain_error("numerical_semigroup_set: no generators");
  for (long g : gens)
    if (g < 1) throw std::domain_error("numerical_semigroup_set: generators must be >= 1");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  long g = gens[0];
  for (long x : gens) g = to_long(gcd(Int(g), Int(x)));
  std::vector<long> norm;
  for (long x : gens) norm.push_back(x / g);
  // conductor bound: product of the two smallest normalized generators
  long B = norm[0];
  if (norm.size() > 1) B = norm[0] * norm[1];
  std::vector<char> reach(B + norm[0] + 1, 0);
  reach[0] = 1;
  for (long v = 1; v < static_cast<long>(reach.size()); ++v)
    for (long x : norm)
      if (v >= x && reach[v - x]) {
        reach[v] = 1;
        break;
      }
  long conductor = 0;
  for (long v = static_cast<long>(reach.size()) - 1; v >= 0; --v)
    if (!reach[v]) {
      conductor = v + 1;
      break;
    }
  return EPSet1::from_predicate(
      [&](long y) {
        if (y < offset || (y - offset) % g != 0) return false;
        long k = (y - offset) / g;
        return k >= conductor || reach[k] != 0;
      },
      g, offset + g * conductor);
}

// exact row slice {n : (m, n) in S}
inline EPSet1 slice_row(const SemiLin2& S, long m) {
  EPSet1 out;
  for (const Pt& p : S.sporadic)
    if (p.x == m) out = set_union(out, EPSet1::singleton(p.y));
  for (const LinSet& L : S.components) {
    long dx = m - L.base.x;
    if (dx < 0) continue;
    std::vector<Pt> posx, zerox;
    for (const Pt& gn : L.gens) (gn.x > 0 ? posx : zerox).push_back(gn);
    std::vector<long> ys;
    for (const Pt& gn : zerox) ys.push_back(gn.y);
    // enumerate multiplicities on generators with positive first coordinate
    std::function<void(size_t, long, long)> rec = [&](size_t i, long rem, long yoff) {
      if (i == posx.size()) {
        if (rem != 0) return;
        EPSet1 part = ys.empty() ? EPSet1::singleton(yoff)
                                 : numerical_semigroup_set(ys, yoff);
        out = set_union(out, part);
        return;
      }
      for (long c = 0; c * posx[i].x <= rem; ++c)
        rec(i + 1, rem - c * posx[i].x, yoff + c * posx[i].y);
    };
    rec(0, dx, L.base.y);
  }
  return out;
}

inline EPSet1 slice_col(const SemiLin2& S, long n) {
  SemiLin2 t;
  for (const Pt& p : S.sporadic) t.sporadic.push_back({p.y, p.x});
  for (const LinSet& L : S.components) {
    std::vector<Pt> gs;
    for (const Pt& gn : L.gens) gs.push_back({gn.y, gn.x});
    t.components.push_back(LinSet({L.base.y, L.base.x}, gs));
  }
  t.normalize();
  return slice_row(t, n);
}

// the D of the uniform eventual-period bound: lcm over components of
// gcd{y : (0,y) generator}, or 1 when no component has such generators
inline long uniform_period_bound(const SemiLin2& S) {
  long D = 1;
  for (const LinSet& L : S.components) {
    long dj = 0;
    for (const Pt& gn : L.gens)
      if (gn.x == 0 && gn.y > 0) dj = to_long(gcd(Int(dj), Int(gn.y)));
    if (dj > 0) D = lcm(D, dj);
  }
  return D;
}

// {n : (n, n) in S}
inline EPSet1 diagonal(const SemiLin2& S, long bound = 100000) {
  EPSet1 out;
  for (const Pt& p : S.sporadic)
    if (p.x == p.y) out = set_union(out, EPSet1::singleton(p.x));
  for (const LinSet& L : S.components) {
    size_t n = L.gens.size();
    std::vector<std::vector<long>> A(1, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i) A[0][i] = L.gens[i].x - L.gens[i].y;
    std::vector<long> b = {L.base.y - L.base.x};
    DiophSolutions sol = solve_linear_diophantine(A, b, bound, "diagonal");
    std::vector<long> incr;
    for (const auto& h : sol.homogeneous) {
      long w = 0;
      for (size_t i = 0; i < n; ++i) w += h[i] * L.gens[i].x;
      if (w > 0) incr.push_back(w);
    }
    for (const auto& t : sol.minimal) {
      long v = L.base.x;
      for (size_t i = 0; i < n; ++i) v += t[i] * L.gens[i].x;
      EPSet1 part = incr.empty() ? EPSet1::singleton(v) : numerical_semigroup_set(incr, v);
      out = set_union(out, part);
    }
  }
  return out;
}

}  // namespace slrec
