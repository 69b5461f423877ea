#ifndef WITT_LAURENT_HPP
#define WITT_LAURENT_HPP

#include <map>
#include <utility>

#include "witt/dual.hpp"
#include "witt/rational.hpp"

namespace witt {

/// Finite Laurent polynomial sum c_k t^k over a field S. Zero coefficients
/// are never stored, so equality is structural.
template <typename S>
class LaurentPoly {
 public:
  using Scalar = S;
  using Terms = std::map<int, S>;

  LaurentPoly() = default;
  explicit LaurentPoly(const S& c) { add_term(0, c); }

  static LaurentPoly monomial(int k, const S& c = S(1)) {
    LaurentPoly p;
    p.add_term(k, c);
    return p;
  }
  static LaurentPoly t() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(int k, const S& c) {
    if (witt::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (witt::is_zero(it->second)) terms_.erase(it);
    }
  }

  int min_degree() const {
    if (terms_.empty()) throw DomainError("degree of the zero Laurent polynomial");
    return terms_.begin()->first;
  }
  int max_degree() const {
    if (terms_.empty()) throw DomainError("degree of the zero Laurent polynomial");
    return terms_.rbegin()->first;
  }

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d + k, c);
    return r;
  }

  template <typename T>
  LaurentPoly<T> cast() const {
    LaurentPoly<T> r;
    for (const auto& [d, c] : terms_) r.add_term(d, T(c));
    return r;
  }

  /// Evaluate at x; x must be invertible when negative powers occur.
  template <typename T>
  T operator()(const T& x) const {
    T acc(0);
    if (terms_.empty()) return acc;
    if (min_degree() < 0 && witt::is_zero(x))
      throw DomainError("evaluating a Laurent polynomial with negative powers at 0");
    for (const auto& [d, c] : terms_) {
      T p(1);
      if (d >= 0) {
        for (int i = 0; i < d; ++i) p *= x;
      } else {
        T inv = T(1) / x;
        for (int i = 0; i < -d; ++i) p *= inv;
      }
      acc += T(c) * p;
    }
    return acc;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
  }
  LaurentPoly& operator*=(const S& s) {
    if (witt::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [d, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(LaurentPoly a, const S& s) { return a *= s; }
  friend LaurentPoly operator*(const S& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  Terms terms_;
};

using LaurentQ = LaurentPoly<Rational>;

template <typename S>
LaurentPoly<S> derivative(const LaurentPoly<S>& p) {
  LaurentPoly<S> r;
  for (const auto& [d, c] : p.terms())
    if (d != 0) r.add_term(d - 1, S(d) * c);
  return r;
}

template <typename S>
LaurentPoly<S> derivative(const LaurentPoly<S>& p, int k) {
  LaurentPoly<S> r = p;
  for (int i = 0; i < k; ++i) r = derivative(r);
  return r;
}

/// Coefficient of t^-1.
template <typename S>
S residue0(const LaurentPoly<S>& p) {
  return p.coeff(-1);
}

template <typename S>
LaurentPoly<S> pow(const LaurentPoly<S>& p, int n) {
  if (n < 0) throw DomainError("negative power of a Laurent polynomial");
  LaurentPoly<S> r(S(1));
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

/// (t - x)^n for n >= 0.
template <typename S>
LaurentPoly<S> shifted_power(const S& x, int n) {
  return pow(LaurentPoly<S>::t() - LaurentPoly<S>(x), n);
}

}  // namespace witt

#endif
