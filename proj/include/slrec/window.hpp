#pragma once

// Exact boolean windows {(m,n) in [0,M) x [0,N)} with provenance, the
// verification surface every engine is checked against.

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "slrec/linset.hpp"

namespace slrec {

struct Window {
  long M = 0;
  long N = 0;
  std::vector<std::vector<char>> cells;  // [m][n]
  std::string provenance;
  std::vector<std::tuple<long, long, std::string>> cell_errors;

  bool at(long m, long n) const { return cells[m][n] != 0; }

  static Window from_predicate(const std::function<bool(long, long)>& pred,
                               long M, long N, std::string provenance) {
    Window w;
    w.M = M;
    w.N = N;
    w.provenance = std::move(provenance);
    w.cells.assign(M, std::vector<char>(N, 0));
    for (long m = 0; m < M; ++m)
      for (long n = 0; n < N; ++n) w.cells[m][n] = pred(m, n) ? 1 : 0;
    return w;
  }

  static Window from_set(const SemiLin2& S, long M, long N) {
    return from_predicate([&](long m, long n) { return S.member(m, n); }, M, N,
                          "semilin2");
  }

  std::vector<Pt> true_cells() const {
    std::vector<Pt> out;
    for (long m = 0; m < M; ++m)
      for (long n = 0; n < N; ++n)
        if (cells[m][n]) out.push_back({m, n});
    return out;
  }
};

// equal iff same shape and same cells; on mismatch reports the
// lexicographically least disagreeing cell
struct WindowDiff {
  bool equal = true;
  Pt first_difference{-1, -1};
};

inline WindowDiff window_equal(const Window& a, const Window& b) {
  WindowDiff d;
  if (a.M != b.M || a.N != b.N) {
    d.equal = false;
    d.first_difference = {-1, -1};
    return d;
  }
  for (long m = 0; m < a.M; ++m)
    for (long n = 0; n < a.N; ++n)
      if (a.cells[m][n] != b.cells[m][n]) {
        d.equal = false;
        d.first_difference = {m, n};
        return d;
      }
  return d;
}

}  // namespace slrec
