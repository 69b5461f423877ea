#ifndef WITT_JET_HPP
#define WITT_JET_HPP

#include <algorithm>
#include <vector>

#include "witt/laurent.hpp"

namespace witt {

template <typename S>
S ipow(const S& x, int n) {
  if (n < 0) {
    if (is_zero(x)) throw DomainError("negative power of zero");
    return ipow(S(1) / x, -n);
  }
  S r(1), b = x;
  while (n > 0) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n > 0) b *= b;
  }
  return r;
}

/// Truncated Taylor series sum_{k<=N} c_k (t - x)^k at a base point x.
/// Binary operations require equal base points and orders.
template <typename S>
class Jet {
 public:
  using Scalar = S;

  Jet(const S& x, std::vector<S> c) : x_(x), c_(std::move(c)) {
    if (c_.empty()) throw DomainError("jet needs at least one coefficient");
  }
  Jet(const S& x, int order) : x_(x), c_(static_cast<std::size_t>(order) + 1, S(0)) {
    if (order < 0) throw DomainError("negative jet order");
  }

  static Jet constant(const S& x, int order, const S& v) {
    Jet j(x, order);
    j.c_[0] = v;
    return j;
  }
  /// The coordinate function t as a jet at x.
  static Jet identity(const S& x, int order) {
    Jet j(x, order);
    j.c_[0] = x;
    if (order >= 1) j.c_[1] = S(1);
    return j;
  }
  /// (t - x)^k truncated.
  static Jet shifted_monomial(const S& x, int order, int k) {
    Jet j(x, order);
    if (k <= order) j.c_[static_cast<std::size_t>(k)] = S(1);
    return j;
  }

  const S& base() const { return x_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<S>& coeffs() const { return c_; }
  const S& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  S& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

  Jet truncated(int order) const {
    if (order > this->order()) throw DomainError("cannot extend a jet by truncation");
    return Jet(x_, std::vector<S>(c_.begin(), c_.begin() + order + 1));
  }

  Jet& operator+=(const Jet& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator*=(const S& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const S& s) { return a *= s; }
  friend Jet operator*(const S& s, Jet a) { return a *= s; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check(b);
    Jet r(a.x_, a.order());
    const int n = a.order();
    for (int i = 0; i <= n; ++i) {
      if (is_zero(a[i])) continue;
      for (int j = 0; i + j <= n; ++j)
        if (!is_zero(b[j])) r[i + j] += a[i] * b[j];
    }
    return r;
  }
  friend bool operator==(const Jet& a, const Jet& b) { return a.x_ == b.x_ && a.c_ == b.c_; }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

  /// d/dt, dropping one order.
  Jet derivative() const {
    if (order() == 0) throw DomainError("derivative of an order-0 jet");
    Jet r(x_, order() - 1);
    for (int k = 1; k <= order(); ++k) r[k - 1] = S(k) * c_[static_cast<std::size_t>(k)];
    return r;
  }

  /// Multiplicative inverse; needs c_0 != 0.
  Jet reciprocal() const {
    if (is_zero(c_[0])) throw DomainError("jet with vanishing constant term is not invertible");
    Jet r(x_, order());
    S inv0 = S(1) / c_[0];
    r[0] = inv0;
    for (int k = 1; k <= order(); ++k) {
      S acc(0);
      for (int j = 1; j <= k; ++j) acc += c_[static_cast<std::size_t>(j)] * r[k - j];
      r[k] = -acc * inv0;
    }
    return r;
  }

 private:
  void check(const Jet& o) const {
    if (!(x_ == o.x_)) throw DomainError("jets at different base points");
    if (c_.size() != o.c_.size()) throw DomainError("jets of different orders");
  }

  S x_;
  std::vector<S> c_;
};

using JetQ = Jet<Rational>;

/// g o s for a jet s with s(x) = x. Result has the smaller of the two orders.
template <typename S>
Jet<S> compose(const Jet<S>& g, const Jet<S>& s) {
  if (!(g.base() == s.base())) throw DomainError("composition of jets at different base points");
  if (!(s[0] == s.base())) throw DomainError("inner jet must fix the base point");
  const int n = std::min(g.order(), s.order());
  Jet<S> u = s.truncated(n);
  u[0] = S(0);  // s - x
  Jet<S> r = Jet<S>::constant(g.base(), n, g[n]);
  for (int k = n - 1; k >= 0; --k) {
    r = r * u;
    r[0] += g[k];
  }
  return r;
}

/// Compositional inverse r of s (s o r = id); needs s(x) = x and s'(x) != 0.
template <typename S>
Jet<S> reversion(const Jet<S>& s) {
  if (!(s[0] == s.base())) throw DomainError("reversion needs a jet fixing the base point");
  if (s.order() < 1 || is_zero(s[1])) throw DomainError("reversion needs s'(x) != 0");
  const int n = s.order();
  S inv1 = S(1) / s[1];
  Jet<S> r = Jet<S>::identity(s.base(), n);
  r[1] = inv1;
  for (int k = 2; k <= n; ++k) {
    Jet<S> e = compose(s, r);
    r[k] = -e[k] * inv1;
  }
  return r;
}

/// Taylor coefficients c_k = p^(k)(x)/k! for k <= order. Negative powers of t
/// need x != 0.
template <typename S>
Jet<S> taylor_jet(const LaurentPoly<S>& p, const S& x, int order) {
  Jet<S> j(x, order);
  for (const auto& [m, c] : p.terms()) {
    if (m < 0 && is_zero(x)) throw DomainError("Taylor expansion of t^" + std::to_string(m) + " at 0");
    for (int k = 0; k <= order; ++k) {
      if (m >= 0 && k > m) break;
      j[k] += c * S(binomial(m, k)) * ipow(x, m - k);
    }
  }
  return j;
}

/// Reassemble a polynomial in t from a jet at x (the jet read as a
/// polynomial in t - x).
template <typename S>
LaurentPoly<S> jet_to_poly(const Jet<S>& j) {
  LaurentPoly<S> r;
  LaurentPoly<S> base(S(1));
  LaurentPoly<S> lin = LaurentPoly<S>::t() - LaurentPoly<S>(j.base());
  for (int k = 0; k <= j.order(); ++k) {
    r += base * j[k];
    base *= lin;
  }
  return r;
}

}  // namespace witt

#endif
