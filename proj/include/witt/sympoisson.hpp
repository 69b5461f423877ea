#ifndef WITT_SYMPOISSON_HPP
#define WITT_SYMPOISSON_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "witt/liealg.hpp"
#include "witt/localfn.hpp"

namespace witt {

/// Monomial in the generators e_i (i in Z) and the central z.
struct SymMonomial {
  std::vector<int> e;  // sorted, with repetition
  int z = 0;

  int degree() const { return static_cast<int>(e.size()) + z; }
  friend bool operator==(const SymMonomial& a, const SymMonomial& b) { return a.e == b.e && a.z == b.z; }
  friend bool operator<(const SymMonomial& a, const SymMonomial& b);
};

SymMonomial operator*(const SymMonomial& a, const SymMonomial& b);

/// Element of the symmetric algebra S(W) (or S(Vir) when z occurs), stored as
/// sorted monomials with nonzero coefficients.
class SymPoly {
 public:
  using Terms = std::map<SymMonomial, Rational>;

  SymPoly() = default;
  explicit SymPoly(const Rational& c) { add_term(SymMonomial{}, c); }
  static SymPoly gen(int i);
  static SymPoly z();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const SymMonomial& m, const Rational& c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Rational& s);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator-(SymPoly a) { return a *= Rational(-1); }
  friend SymPoly operator*(SymPoly a, const Rational& s) { return a *= s; }
  friend SymPoly operator*(const Rational& s, SymPoly a) { return a *= s; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

 private:
  Terms terms_;
};

/// Linear image of f d + c z: sum c_k e_{k-1} + c z.
SymPoly to_sympoly(const VirElement& u);

/// Leibniz extension of {e_i, e_j} = (j - i) e_{i+j}; with tag Vir the
/// generator bracket also carries the cocycle times z.
SymPoly poisson_bracket(const SymPoly& p, const SymPoly& q, AlgebraTag tag = AlgebraTag::W);

/// Algebra homomorphism e_i -> chi(t^{i+1} d), z -> 0.
Rational ev_chi(const SymPoly& p, const LocalFunction& chi);

/// det of the matrix with entries the images of [u_i, v_j].
SymPoly det_D(const std::vector<VirElement>& us, const std::vector<VirElement>& vs);

/// Whether ev_chi kills every D(u_0..u_n; v_0..v_n) with the u's and v's
/// drawn from the window fields t^{i+1} d. The window must be complete.
bool i_n_vanishes_at(const LocalFunction& chi, int n, const BasisWindow& window);

/// Polynomial in t, t^-1 and y with {y, t} = 1.
class BPoly {
 public:
  using Key = std::pair<int, int>;  // (power of y, power of t)
  using Terms = std::map<Key, Rational>;

  BPoly() = default;
  explicit BPoly(const Rational& c) { add_term(0, 0, c); }
  static BPoly monomial(int ypow, int tpow, const Rational& c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int ypow, int tpow, const Rational& c);
  Rational evaluate(const Rational& t, const Rational& y) const;

  BPoly& operator+=(const BPoly& o);
  BPoly& operator-=(const BPoly& o);
  BPoly& operator*=(const Rational& s);
  friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
  friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
  friend BPoly operator*(BPoly a, const Rational& s) { return a *= s; }
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  friend bool operator==(const BPoly& a, const BPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BPoly& a, const BPoly& b) { return !(a == b); }

 private:
  Terms terms_;
};

BPoly d_dy(const BPoly& p);
BPoly d_dt(const BPoly& p);
/// {F, G} = F_y G_t - F_t G_y.
BPoly poisson_bracket(const BPoly& f, const BPoly& g);

/// e_i -> t^{i+1} y + gamma (i+1) t^i; z goes to 0 (the map factors through W).
BPoly p_gamma_map(const SymPoly& p, const Rational& gamma);
bool j_gamma_member(const SymPoly& p, const Rational& gamma);

SymPoly parse_sympoly(std::string_view s);
std::string format_sympoly(const SymPoly& p);
std::string format_bpoly(const BPoly& p);

}  // namespace witt

#endif
