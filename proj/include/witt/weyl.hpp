#ifndef WITT_WEYL_HPP
#define WITT_WEYL_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "witt/liealg.hpp"
#include "witt/linalg.hpp"
#include "witt/sympoisson.hpp"

namespace witt {

/// Element of k[t, t^-1]<d> with d t = t d + 1, stored in normal order
/// sum c_{i,k} t^i d^k.
class WeylElement {
 public:
  using Key = std::pair<int, int>;  // (power of t, power of d)
  using Terms = std::map<Key, Rational>;

  WeylElement() = default;
  explicit WeylElement(const Rational& c) { add_term(0, 0, c); }
  static WeylElement monomial(int i, int k, const Rational& c = Rational(1));
  /// f d + c.
  static WeylElement from_field(const LaurentQ& f, const LaurentQ& c = LaurentQ());

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int i, int k, const Rational& c);

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Rational& s);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const Rational& s) { return a *= s; }
  friend WeylElement operator*(const Rational& s, WeylElement a) { return a *= s; }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

 private:
  Terms terms_;
};

/// Normal-ordered product, using d^b t^c = sum_j C(b, j) (c)_j t^{c-j} d^{b-j}.
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return weyl_mul(a, b); }
WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// f d -> f d + gamma f'.
WeylElement pi_gamma(const VirElement& u, const Rational& gamma);
/// A word u_1 u_2 ... u_r of U(W) mapped to the product of the images.
WeylElement pi_gamma_word(const std::vector<VirElement>& word, const Rational& gamma);

/// Coefficients in the d-left basis d^k t^i, keyed by (k, i).
std::map<std::pair<int, int>, Rational> to_anti_normal(const WeylElement& a);
WeylElement from_anti_normal(const std::map<std::pair<int, int>, Rational>& terms);

enum class PiImage { Pi0, Pi1 };
/// Pi0: a in k + A d. Pi1: a in k + d A.
bool pi_image_test(const WeylElement& a, PiImage which);

/// t^i d^k -> t^i y^k.
BPoly weyl_symbol(const WeylElement& a);

/// Kernel of the linear map sum c_w w -> sum c_w pi_gamma(w) on the formal span
/// of `words`; the columns of the result are coefficient vectors.
MatrixQ pi_kernel(const std::vector<std::vector<VirElement>>& words, const Rational& gamma);

/// sum c_k d^k delta_x in N_x = k[t, t^-1, (t-x)^-1]/k[t, t^-1], where
/// delta_x is the class of (t - x)^-1.
struct NVector {
  Rational x;
  std::vector<Rational> coeffs;

  NVector() = default;
  NVector(Rational x_, std::vector<Rational> c);
  static NVector delta(const Rational& x, int k = 0);

  bool is_zero() const { return coeffs.empty(); }
  /// Largest k with a nonzero coefficient; -1 for zero.
  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  friend bool operator==(const NVector& a, const NVector& b) { return a.x == b.x && a.coeffs == b.coeffs; }
  friend bool operator!=(const NVector& a, const NVector& b) { return !(a == b); }
};

NVector operator+(const NVector& a, const NVector& b);
NVector operator*(const Rational& s, const NVector& v);

NVector weyl_act_N(const WeylElement& a, const NVector& v);
NVector w_act_N_gamma(const VirElement& u, const NVector& v, const Rational& gamma);

struct SpanReport {
  int dimension = 0;
  bool delta_reached = false;
};

/// Span of the W-words of length <= bound applied to v, restricted to the
/// slice d^k delta_x with k <= bound. A bounded check, not a proof of
/// simplicity.
SpanReport cyclic_span(const NVector& v, const Rational& gamma, int bound);

/// Grammar: sums of products of rationals, t^i and d^k in any order, e.g.
/// "d*t - 2*t^-1*d^2".
WeylElement parse_weyl(std::string_view s);
std::string format_weyl(const WeylElement& a);

}  // namespace witt

#endif
