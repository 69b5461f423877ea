#ifndef WITT_DLOC_HPP
#define WITT_DLOC_HPP

#include <optional>
#include <vector>

#include "witt/jet.hpp"
#include "witt/localfn.hpp"

namespace witt {

/// Formal local diffeomorphism t -> s(t) at x, truncated at order N.
/// Acts on fields by f d -> (f o s)/s' d and on functionals by pullback,
/// (g . chi)(u) = chi(g(u)), so that act(compose(g, h)) = act(g) o act(h).
class DLocElement {
 public:
  DLocElement() : s_(JetQ::identity(Rational(0), 1)) {}
  explicit DLocElement(JetQ s);

  static DLocElement identity(const Rational& x, int order);
  /// t~ -> lambda t~ with t~ = t - x.
  static DLocElement dilation(const Rational& x, const Rational& lambda, int order);
  /// t -> t + a t~^{j+1}.
  static DLocElement elementary(const Rational& x, const Rational& a, int j, int order);

  const JetQ& jet() const { return s_; }
  const Rational& base() const { return s_.base(); }
  int order() const { return s_.order(); }

  DLocElement inverse() const { return DLocElement(reversion(s_)); }

  friend bool operator==(const DLocElement& a, const DLocElement& b) { return a.s_ == b.s_; }

 private:
  JetQ s_;
};

/// The substitution s_g o s_h.
DLocElement compose(const DLocElement& g, const DLocElement& h);

namespace detail {

/// Dual coordinates beta_{-1}..beta_{n-1} of chi, pulled back along s:
/// beta'_i = chi((t~^{i+1} o s)/s' d). Needs s.order() >= n + 1.
template <typename S>
std::vector<S> pullback_dual(const Jet<S>& s, const std::vector<S>& beta) {
  const int n = static_cast<int>(beta.size()) - 1;
  if (n < 0) return {};
  if (s.order() < n + 1) throw DomainError("jet order too small for the functional");
  Jet<S> inv = s.derivative().truncated(n).reciprocal();
  Jet<S> u = s.truncated(n);
  u[0] = S(0);
  Jet<S> power = Jet<S>::constant(s.base(), n, S(1));
  std::vector<S> out(beta.size(), S(0));
  for (int i = -1; i <= n - 1; ++i) {
    Jet<S> image = power * inv;
    S acc(0);
    for (int m = 0; m <= n; ++m)
      if (!is_zero(beta[static_cast<std::size_t>(m)])) acc += beta[static_cast<std::size_t>(m)] * image[m];
    out[static_cast<std::size_t>(i + 1)] = acc;
    if (i < n - 1) power = power * u;
  }
  return out;
}

}  // namespace detail

/// Image (f o s)/s' of a field jet; result order is min(order(u), N - 1).
JetQ act_on_field(const DLocElement& g, const JetQ& u);

/// Pullback of a one-point functional; needs order(chi) <= N - 1.
OnePointLocal act_on_local(const DLocElement& g, const OnePointLocal& chi);

/// (s d) . chi, computed as the h-derivative of act(t -> t + h s) with dual
/// numbers. Needs s(x) = 0.
OnePointLocal xi_action(const LaurentQ& s, const OnePointLocal& chi);

/// (u . chi)(v) = chi([u, v]) evaluated on v = e_i(x) for i <= order(chi),
/// computed from brackets directly.
OnePointLocal coadjoint_action(const LaurentQ& u, const OnePointLocal& chi);

/// (d . chi)(f d) = sum a_k f^(k+1)(x).
OnePointLocal shift_generator_action(const OnePointLocal& chi);

struct CanonicalForm {
  enum class Case { Even, Odd, One };

  int order = 0;
  Case parity = Case::Even;
  Rational c;                  // coefficient of e_{n-1}^*
  std::optional<Rational> b;   // coefficient of e_k^*, k = (n-1)/2, odd n > 1
  OnePointLocal form;          // the reduced functional
  DLocElement witness;         // act_on_local(witness, input) == form
};

/// Staircase elimination: for j = 1, 2, ... cancel the e_{n-1-j}^* coordinate
/// with t -> t + a t~^{j+1}, skipping the obstructed index k when n = 2k + 1.
/// No dilation is applied. For Wgeq0/Wgeq1 at x = 0 coordinates outside the
/// algebra's dual are ignored.
CanonicalForm canonicalize(const OnePointLocal& chi, AlgebraTag tag);

struct ComponentInvariant {
  int order = 0;
  bool at_origin = false;           // the x = 0 component for Wgeq0/Wgeq1
  std::optional<Rational> value;    // b^2/c (odd n > 1) or b_1 (n = 1); b for Wgeq1 at 0
  std::optional<Rational> leading;  // c, Wgeq1 at 0 only

  friend bool operator==(const ComponentInvariant& a, const ComponentInvariant& b) {
    return a.order == b.order && a.at_origin == b.at_origin && a.value == b.value && a.leading == b.leading;
  }
  friend bool operator<(const ComponentInvariant& a, const ComponentInvariant& b);
};

struct OrbitInvariant {
  AlgebraTag tag = AlgebraTag::W;
  std::vector<ComponentInvariant> components;  // sorted

  friend bool operator==(const OrbitInvariant& a, const OrbitInvariant& b) {
    return a.tag == b.tag && a.components == b.components;
  }
  friend bool operator!=(const OrbitInvariant& a, const OrbitInvariant& b) { return !(a == b); }
};

ComponentInvariant component_invariant(const OnePointLocal& chi, AlgebraTag tag);
OrbitInvariant orbit_invariant(const LocalFunction& chi);
bool orbit_equal(const LocalFunction& a, const LocalFunction& b);

/// Order partition plus the continuous invariant of each odd part.
struct PrimitiveDescriptor {
  std::vector<int> partition;
  std::vector<std::pair<int, Rational>> odd_invariants;  // sorted

  friend bool operator==(const PrimitiveDescriptor& a, const PrimitiveDescriptor& b) {
    return a.partition == b.partition && a.odd_invariants == b.odd_invariants;
  }
};
PrimitiveDescriptor primitive_descriptor(const LocalFunction& chi);

int orbit_dim(const LocalFunction& chi);
/// Dimension of the DLoc_x orbit of a one-point functional (tags W, Wgeq-1).
int dloc_orbit_dim(const OnePointLocal& chi);
bool closure_less(const OnePointLocal& minus, const OnePointLocal& plus, AlgebraTag tag);

enum class ClosureVerdict { Contained, NotContained, Unknown };
/// Whether minus lies in the closure of the pseudo-orbit of plus. Exact for
/// one-point functionals at a common base point; otherwise only the
/// componentwise sufficient condition is recognised and the rest is Unknown.
ClosureVerdict closure_relation(const LocalFunction& minus, const LocalFunction& plus);

LocalFunction shift(const LocalFunction& chi, const Rational& z);

}  // namespace witt

#endif
