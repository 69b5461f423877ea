#ifndef WITT_FACTORED_HPP
#define WITT_FACTORED_HPP

#include <utility>
#include <vector>

#include "witt/laurent.hpp"

namespace witt {

/// scalar * t^t_power * prod (t - x_i)^{a_i} with distinct rational roots
/// kept sorted.
class FactoredPoly {
 public:
  using Root = std::pair<Rational, int>;

  FactoredPoly() = default;
  explicit FactoredPoly(std::vector<Root> roots, Rational scalar = Rational(1), int t_power = 0);

  const Rational& scalar() const { return scalar_; }
  const std::vector<Root>& roots() const { return roots_; }
  int t_power() const { return t_power_; }

  /// Sum of root multiplicities (the unit t^k is not counted).
  int degree() const;
  int multiplicity(const Rational& x) const;
  LaurentQ expand() const;

  /// f | p in k[t, t^-1]: p vanishes to order a_i at every root x_i.
  bool divides(const LaurentQ& p) const;

  friend bool operator==(const FactoredPoly& a, const FactoredPoly& b) {
    return a.scalar_ == b.scalar_ && a.roots_ == b.roots_ && a.t_power_ == b.t_power_;
  }
  friend bool operator!=(const FactoredPoly& a, const FactoredPoly& b) { return !(a == b); }

 private:
  Rational scalar_{1};
  std::vector<Root> roots_;
  int t_power_ = 0;
};

FactoredPoly radical(const FactoredPoly& f);

/// Res_0(f (a b' - a' b)).
Rational skew_residue_form(const LaurentQ& a, const LaurentQ& b, const LaurentQ& f);

inline LaurentQ lp_derivative(const LaurentQ& p) { return derivative(p); }

}  // namespace witt

#endif
