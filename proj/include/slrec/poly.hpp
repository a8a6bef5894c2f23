#pragma once

// Dense univariate polynomials over an exact field (Rat or CycRat):
// arithmetic, composition, iteration with a degree cap, gcd, and the
// common-complex-root test backing the brute-force oracle.

#include <optional>
#include <stdexcept>
#include <vector>

#include "slrec/cyclotomic.hpp"
#include "slrec/numeric.hpp"

namespace slrec {

template <class F>
F field_one();
template <>
inline Rat field_one<Rat>() { return Rat(1); }
template <>
inline CycRat field_one<CycRat>() { return CycRat(Rat(1)); }

constexpr long kDefaultDegreeCap = 1000000;

template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(const F& a) { return Poly(std::vector<F>{a}); }
  static Poly var() { return Poly(std::vector<F>{F(), field_one<F>()}); }

  const std::vector<F>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial reported as -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }

  F coeff(size_t i) const { return i < c_.size() ? c_[i] : F(); }
  F leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  F eval(const F& x) const {
    F r{};
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) { return Poly::zero() - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (slrec::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const F& s, const Poly& a) {
    std::vector<F> r = a.c_;
    for (F& x : r) x = x * s;
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // remainder and quotient by a nonzero divisor
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> rem = a.c_;
    long db = b.degree();
    F lcinv = inv(b.leading());
    std::vector<F> q(a.degree() >= db ? a.degree() - db + 1 : 0, F());
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
      if (slrec::is_zero(rem[i])) continue;
      F cq = rem[i] * lcinv;
      q[i - db] = cq;
      for (long j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - cq * b.c_[j];
    }
    if (static_cast<long>(rem.size()) > db) rem.resize(db < 0 ? 0 : db);
    return {Poly(std::move(q)), Poly(std::move(rem))};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return inv(leading()) * (*this);
  }

  // p(q)
  Poly compose(const Poly& q) const {
    Poly r;
    for (size_t i = c_.size(); i-- > 0;) r = r * q + Poly::constant(c_[i]);
    return r;
  }

  // p(q) mod m  (keeps intermediate degrees below deg m)
  Poly compose_mod(const Poly& q, const Poly& m) const {
    Poly qr = divmod(q, m).second;
    Poly r;
    for (size_t i = c_.size(); i-- > 0;) {
      r = r * qr + Poly::constant(c_[i]);
      r = divmod(r, m).second;
    }
    return r;
  }

  // p composed with itself iter times; p^o0 = z
  Poly iterate(long iter, long degree_cap = kDefaultDegreeCap) const {
    if (iter < 0) throw std::domain_error("negative iteration count");
    if (degree() >= 2) {
      Int predicted = pow(Int(degree()), static_cast<unsigned long>(iter));
      if (predicted > degree_cap)
        throw std::overflow_error("iteration degree cap exceeded");
    }
    Poly r = Poly::var();
    for (long i = 0; i < iter; ++i) r = this->compose(r);
    return r;
  }

  void trim() {
    while (!c_.empty() && slrec::is_zero(c_.back())) c_.pop_back();
  }

 private:
  std::vector<F> c_;
};

// monic gcd; remainders are rescaled each round to keep growth tolerable
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0,0)");
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly<F> r = Poly<F>::divmod(a, b).second;
    a = b;
    b = r.monic();
  }
  return a.monic();
}

// multiplicity of the root 0
template <class F>
long root_zero_multiplicity(const Poly<F>& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial");
  long v = 0;
  while (slrec::is_zero(p.coeff(v))) ++v;
  return v;
}

// true iff p and q share a complex root; with exclude_zero, a common
// nonzero root. Over C this is exactly deg(gcd) >= 1 after stripping the
// z^v factor when asked to.
template <class F>
bool common_root_exists(const Poly<F>& p, const Poly<F>& q, bool exclude_zero) {
  if (p.is_zero() && q.is_zero())
    throw std::domain_error("common_root_exists: both polynomials zero");
  const Poly<F>& single = p.is_zero() ? q : (q.is_zero() ? p : Poly<F>::zero());
  auto has_root = [&](const Poly<F>& s) {
    long d = s.degree() - (exclude_zero ? root_zero_multiplicity(s) : 0);
    return d >= 1;
  };
  if (p.is_zero() || q.is_zero()) return has_root(single);
  Poly<F> g = poly_gcd(p, q);
  return has_root(g);
}

}  // namespace slrec
