#ifndef WITT_LOCALFN_HPP
#define WITT_LOCALFN_HPP

#include <optional>
#include <vector>

#include "witt/liealg.hpp"
#include "witt/linalg.hpp"

namespace witt {

/// chi_{x; a_0..a_n}(f d) = sum_k a_k f^(k)(x). Trailing zero coefficients
/// are trimmed; an empty list is the zero functional.
struct OnePointLocal {
  Rational x;
  std::vector<Rational> coeffs;

  OnePointLocal() = default;
  OnePointLocal(Rational x_, std::vector<Rational> c);

  bool is_zero() const { return coeffs.empty(); }
  /// Highest derivative order; throws for the zero functional.
  int order() const;

  /// Coefficient of e_i^* (i >= -1) in the dual basis of e_i(x) = (t-x)^{i+1} d,
  /// i.e. a_{i+1} (i+1)!.
  Rational dual_coeff(int i) const;
  /// Inverse of dual_coeff: build from beta_{-1}, beta_0, ...
  static OnePointLocal from_dual(const Rational& x, const std::vector<Rational>& beta);

  friend bool operator==(const OnePointLocal& a, const OnePointLocal& b) {
    return a.x == b.x && a.coeffs == b.coeffs;
  }
  friend bool operator!=(const OnePointLocal& a, const OnePointLocal& b) { return !(a == b); }
};

/// Finite sum of one-point functionals on the algebra named by `tag`, kept in
/// a unique normal form: points sorted and distinct, zero components dropped,
/// and coefficients that vanish identically on the algebra cleared (a_0 at
/// x = 0 for Wgeq0, a_0 and a_1 at x = 0 for Wgeq1).
class LocalFunction {
 public:
  explicit LocalFunction(AlgebraTag tag = AlgebraTag::W) : tag_(tag) {}
  LocalFunction(AlgebraTag tag, std::vector<OnePointLocal> points, const Rational& central = Rational(0));
  LocalFunction(AlgebraTag tag, const OnePointLocal& p) : LocalFunction(tag, std::vector<OnePointLocal>{p}) {}

  AlgebraTag tag() const { return tag_; }
  const std::vector<OnePointLocal>& points() const { return points_; }
  bool is_zero() const { return points_.empty(); }

  friend bool operator==(const LocalFunction& a, const LocalFunction& b) {
    return a.tag_ == b.tag_ && a.points_ == b.points_;
  }
  friend bool operator!=(const LocalFunction& a, const LocalFunction& b) { return !(a == b); }

 private:
  AlgebraTag tag_;
  std::vector<OnePointLocal> points_;
};

/// Sum a_k f^(k)(x) for a field f.
Rational eval_one_point(const OnePointLocal& p, const LaurentQ& f);
Rational eval_local(const LocalFunction& chi, const VirElement& u);
Rational b_chi(const LocalFunction& chi, const VirElement& u, const VirElement& v);

/// Rank of B_chi on the per-point blocks e_{-1..n+1}(x), summed over points.
int rank_b(const LocalFunction& chi);

/// Orders of the components in weakly decreasing order.
std::vector<int> order_partition(const LocalFunction& chi);

/// Fields (t - center)^{i+1} d for lo <= i <= hi.
struct BasisWindow {
  Rational center{0};
  int lo = -1;
  int hi = 0;

  int size() const { return hi - lo + 1; }
  LaurentQ field(int i) const;
};

/// Throws unless the span of the window maps onto all jets that B_chi can
/// see, so that kernel and rank computed on the window are exact.
void require_complete_window(const LocalFunction& chi, const BasisWindow& w);

/// Gram matrix B_chi(w_i, w_j) over the window (no completeness check).
MatrixQ gram_matrix(const LocalFunction& chi, const BasisWindow& w);

/// Basis of {u in span(window) : B_chi(u, .) = 0}; the window must be complete.
std::vector<VirElement> isotropy_window(const LocalFunction& chi, const BasisWindow& w);

/// Minimal monic h = sum a_k t^k of degree <= dmax with
/// sum_k a_k seq[m + k] = 0 for every m that fits, or nothing.
/// Needs seq.size() >= 2 dmax + 2.
std::optional<LaurentQ> recurrence_detect(const std::vector<Rational>& seq, int dmax);

}  // namespace witt

#endif
