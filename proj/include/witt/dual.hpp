#ifndef WITT_DUAL_HPP
#define WITT_DUAL_HPP

#include "witt/rational.hpp"

namespace witt {

/// a + b*h with h^2 = 0. Used to take exact first-order derivatives of
/// group actions along one-parameter families.
template <typename S>
struct Dual {
  S a{0};
  S b{0};

  Dual() = default;
  Dual(int v) : a(v) {}  // NOLINT(google-explicit-constructor)
  Dual(const S& v) : a(v) {}  // NOLINT(google-explicit-constructor)
  Dual(const S& v, const S& eps) : a(v), b(eps) {}

  Dual& operator+=(const Dual& o) { a += o.a; b += o.b; return *this; }
  Dual& operator-=(const Dual& o) { a -= o.a; b -= o.b; return *this; }
  Dual& operator*=(const Dual& o) {
    b = a * o.b + b * o.a;
    a *= o.a;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    if (is_zero(o.a)) throw DomainError("dual division by a nilpotent");
    S inv = S(1) / o.a;
    b = (b * o.a - a * o.b) * inv * inv;
    a *= inv;
    return *this;
  }

  friend Dual operator+(Dual x, const Dual& y) { return x += y; }
  friend Dual operator-(Dual x, const Dual& y) { return x -= y; }
  friend Dual operator*(Dual x, const Dual& y) { return x *= y; }
  friend Dual operator/(Dual x, const Dual& y) { return x /= y; }
  friend Dual operator-(const Dual& x) { return Dual(-x.a, -x.b); }
  friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }
};

template <typename S>
bool is_zero(const Dual<S>& d) {
  return is_zero(d.a) && is_zero(d.b);
}

using DualQ = Dual<Rational>;

}  // namespace witt

namespace Eigen {

template <typename S>
struct NumTraits<witt::Dual<S>> : GenericNumTraits<witt::Dual<S>> {
  using Real = witt::Dual<S>;
  using NonInteger = witt::Dual<S>;
  using Literal = witt::Dual<S>;
  using Nested = witt::Dual<S>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 300
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
