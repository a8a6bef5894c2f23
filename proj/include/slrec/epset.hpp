#pragma once

// Canonical eventually periodic subsets of Z>=0: finite exceptions below a
// threshold, then a periodic part given by residues. This is the dim-1
// semilinear representation; equality, Boolean algebra, and eventual
// periods are exact on it.

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "slrec/numeric.hpp"

namespace slrec {

class EPSet1 {
 public:
  EPSet1() = default;

  // membership(x) for x >= threshold  <=>  (x - threshold) mod period in residues
  static EPSet1 make(std::vector<long> exceptions, long threshold, long period,
                     std::vector<long> residues) {
    EPSet1 s;
    s.exc_ = std::move(exceptions);
    s.thr_ = threshold;
    s.per_ = period;
    s.res_ = std::move(residues);
    s.canonicalize();
    return s;
  }

  static EPSet1 empty_set() { return EPSet1(); }
  static EPSet1 full_set() { return make({}, 0, 1, {0}); }
  static EPSet1 singleton(long x) { return make({x}, x + 1, 0, {}); }
  static EPSet1 finite(std::vector<long> xs) {
    long t = 0;
    for (long x : xs) t = std::max(t, x + 1);
    return make(std::move(xs), t, 0, {});
  }
  // {base + step*k : k >= 0}; step = 0 gives the singleton {base}
  static EPSet1 progression(long base, long step) {
    if (step == 0) return singleton(base);
    return make({}, base, step, {0});
  }

  // Caller guarantees pred(x + period) == pred(x) for all x >= threshold.
  static EPSet1 from_predicate(const std::function<bool(long)>& pred,
                               long period, long threshold) {
    if (period < 0 || threshold < 0) throw std::domain_error("from_predicate: bad parameters");
    std::vector<long> exc, res;
    for (long x = 0; x < threshold; ++x)
      if (pred(x)) exc.push_back(x);
    if (period == 0) return make(std::move(exc), threshold, 0, {});
    for (long r = 0; r < period; ++r)
      if (pred(threshold + r)) res.push_back(r);
    return make(std::move(exc), threshold, period, std::move(res));
  }

  const std::vector<long>& exceptions() const { return exc_; }
  long threshold() const { return thr_; }
  long period() const { return per_; }
  const std::vector<long>& residues() const { return res_; }

  bool is_finite() const { return per_ == 0; }
  bool is_empty() const { return per_ == 0 && exc_.empty(); }

  // eventual period: 0 for finite sets, else the canonical minimal period
  long eventual_period() const { return per_; }

  bool member(long x) const {
    if (x < 0) return false;
    if (x < thr_) return std::binary_search(exc_.begin(), exc_.end(), x);
    if (per_ == 0) return false;
    return std::binary_search(res_.begin(), res_.end(), (x - thr_) % per_);
  }

  friend bool operator==(const EPSet1& a, const EPSet1& b) {
    return a.exc_ == b.exc_ && a.thr_ == b.thr_ && a.per_ == b.per_ && a.res_ == b.res_;
  }
  friend bool operator!=(const EPSet1& a, const EPSet1& b) { return !(a == b); }

  static EPSet1 binary_op(const EPSet1& a, const EPSet1& b,
                          const std::function<bool(bool, bool)>& op) {
    long L = lcm(std::max(a.per_, 1L), std::max(b.per_, 1L));
    long T = std::max(a.thr_, b.thr_);
    return from_predicate([&](long x) { return op(a.member(x), b.member(x)); }, L, T);
  }

  friend EPSet1 set_union(const EPSet1& a, const EPSet1& b) {
    return binary_op(a, b, [](bool x, bool y) { return x || y; });
  }
  friend EPSet1 set_intersect(const EPSet1& a, const EPSet1& b) {
    return binary_op(a, b, [](bool x, bool y) { return x && y; });
  }
  friend EPSet1 set_difference(const EPSet1& a, const EPSet1& b) {
    return binary_op(a, b, [](bool x, bool y) { return x && !y; });
  }
  EPSet1 complement() const {
    return from_predicate([&](long x) { return !member(x); }, std::max(per_, 1L), thr_);
  }

  // {k >= 0 : a + b*k in this}, b >= 1
  EPSet1 affine_preimage(long a, long b) const {
    if (b < 1) throw std::domain_error("affine_preimage: step must be >= 1");
    if (per_ == 0) {
      std::vector<long> ks;
      for (long e : exc_)
        if (e >= a && (e - a) % b == 0) ks.push_back((e - a) / b);
      return finite(std::move(ks));
    }
    long k0 = a >= thr_ ? 0 : (thr_ - a + b - 1) / b;
    long newper = per_ / to_long(gcd(Int(per_), Int(b)));
    return from_predicate([&](long k) { return member(a + b * k); }, newper, k0);
  }

  // {a + b*x : x in this}, b >= 1
  EPSet1 affine_image(long a, long b) const {
    if (b < 1) throw std::domain_error("affine_image: step must be >= 1");
    auto pred = [&](long y) { return y >= a && (y - a) % b == 0 && member((y - a) / b); };
    if (per_ == 0) {
      std::vector<long> ys;
      for (long e : exc_) ys.push_back(a + b * e);
      return finite(std::move(ys));
    }
    return from_predicate(pred, per_ * b, a + b * thr_);
  }

  std::vector<long> members_below(long bound) const {
    std::vector<long> out;
    for (long x = 0; x < bound; ++x)
      if (member(x)) out.push_back(x);
    return out;
  }

  // smallest member, if any
  long min_member() const {
    if (!exc_.empty()) return exc_.front();
    if (per_ == 0) throw std::domain_error("min of empty set");
    return thr_ + res_.front();
  }

 private:
  std::vector<long> exc_;  // sorted members < thr_
  long thr_ = 0;
  long per_ = 0;
  std::vector<long> res_;  // sorted subset of [0, per_)

  void canonicalize() {
    std::sort(exc_.begin(), exc_.end());
    exc_.erase(std::unique(exc_.begin(), exc_.end()), exc_.end());
    std::sort(res_.begin(), res_.end());
    res_.erase(std::unique(res_.begin(), res_.end()), res_.end());
    if (thr_ < 0 || per_ < 0) throw std::domain_error("EPSet1: negative parameters");
    for (long r : res_)
      if (r < 0 || r >= per_) throw std::domain_error("EPSet1: residue out of range");
    // exceptions at or above threshold must agree with the periodic part
    if (!exc_.empty() && exc_.back() >= thr_) {
      std::vector<long> keep;
      for (long e : exc_) {
        if (e < thr_) {
          keep.push_back(e);
        } else if (per_ == 0 ||
                   !std::binary_search(res_.begin(), res_.end(), (e - thr_) % per_)) {
          throw std::domain_error("EPSet1: exception above threshold breaks periodicity");
        }
      }
      exc_ = std::move(keep);
    }
    if (res_.empty()) per_ = 0;
    if (per_ == 0) {
      thr_ = exc_.empty() ? 0 : exc_.back() + 1;
      return;
    }
    // minimal period: smallest divisor d of per_ with residues invariant under +d
    for (long d = 1; d <= per_; ++d) {
      if (per_ % d != 0) continue;
      bool inv = true;
      for (long r : res_)
        if (!std::binary_search(res_.begin(), res_.end(), (r + d) % per_)) {
          inv = false;
          break;
        }
      if (inv) {
        if (d < per_) {
          std::set<long> nr;
          for (long r : res_) nr.insert(r % d);
          res_.assign(nr.begin(), nr.end());
          per_ = d;
        }
        break;
      }
    }
    // minimal threshold for that period
    while (thr_ > 0) {
      bool last_res = std::binary_search(res_.begin(), res_.end(), per_ - 1);
      bool was_exc = !exc_.empty() && exc_.back() == thr_ - 1;
      if (was_exc != last_res) break;
      for (long& r : res_) r = (r + 1) % per_;
      std::sort(res_.begin(), res_.end());
      if (was_exc) exc_.pop_back();
      --thr_;
    }
  }
};

}  // namespace slrec
