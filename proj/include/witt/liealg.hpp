#ifndef WITT_LIEALG_HPP
#define WITT_LIEALG_HPP

#include <climits>
#include <string>
#include <string_view>

#include "witt/factored.hpp"
#include "witt/laurent.hpp"

namespace witt {

enum class AlgebraTag { W, Wgeq_m1, Wgeq0, Wgeq1, Vir };

std::string to_string(AlgebraTag tag);
/// Accepts "W", "Wgeq-1", "Wgeq0", "Wgeq1", "Vir".
AlgebraTag parse_tag(std::string_view s);

/// Smallest i with e_i = t^{i+1}d in the algebra; INT_MIN for W and Vir.
int lowest_index(AlgebraTag tag);
inline bool admits_index(AlgebraTag tag, int i) { return i >= lowest_index(tag); }

/// f d + c z. The tag fixes which f are allowed; c is zero unless the tag is Vir.
class VirElement {
 public:
  VirElement() = default;
  VirElement(LaurentQ f, Rational c, AlgebraTag tag);
  explicit VirElement(LaurentQ f, AlgebraTag tag = AlgebraTag::W) : VirElement(std::move(f), Rational(0), tag) {}

  static VirElement central(const Rational& c) { return VirElement(LaurentQ(), c, AlgebraTag::Vir); }

  const LaurentQ& field() const { return f_; }
  const Rational& central_part() const { return c_; }
  AlgebraTag tag() const { return tag_; }
  bool is_zero() const { return f_.is_zero() && c_.is_zero(); }

  VirElement& operator+=(const VirElement& o);
  VirElement& operator-=(const VirElement& o);
  VirElement& operator*=(const Rational& s);
  friend VirElement operator+(VirElement a, const VirElement& b) { return a += b; }
  friend VirElement operator-(VirElement a, const VirElement& b) { return a -= b; }
  friend VirElement operator*(VirElement a, const Rational& s) { return a *= s; }
  friend VirElement operator*(const Rational& s, VirElement a) { return a *= s; }
  friend bool operator==(const VirElement& a, const VirElement& b) {
    return a.tag_ == b.tag_ && a.f_ == b.f_ && a.c_ == b.c_;
  }
  friend bool operator!=(const VirElement& a, const VirElement& b) { return !(a == b); }

 private:
  LaurentQ f_;
  Rational c_;
  AlgebraTag tag_ = AlgebraTag::W;
};

/// f g' - f' g.
template <typename S>
LaurentPoly<S> field_bracket(const LaurentPoly<S>& f, const LaurentPoly<S>& g) {
  return f * derivative(g) - derivative(f) * g;
}

/// Res_0(f' g'' - f'' g').
Rational virasoro_cocycle(const LaurentQ& f, const LaurentQ& g);

VirElement witt_bracket(const VirElement& u, const VirElement& v);
VirElement vir_bracket(const VirElement& u, const VirElement& v);
/// Dispatches on the tag.
VirElement bracket(const VirElement& u, const VirElement& v);

/// f divides the field part and the central part vanishes (unless allowed).
bool wf_membership(const VirElement& u, const FactoredPoly& f, bool allow_central = false);

/// LaurentPoly grammar with an optional "c*z" term (Vir only).
VirElement parse_vir_element(std::string_view s, AlgebraTag tag);
std::string format_vir_element(const VirElement& u);

}  // namespace witt

#endif
