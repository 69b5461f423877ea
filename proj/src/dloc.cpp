#include "witt/dloc.hpp"

#include <algorithm>

#include "witt/dual.hpp"

namespace witt {

DLocElement::DLocElement(JetQ s) : s_(std::move(s)) {
  if (s_[0] != s_.base()) throw DomainError("a local diffeomorphism must fix its base point");
  if (s_.order() < 1 || s_[1].is_zero()) throw DomainError("a local diffeomorphism needs s'(x) != 0");
}

DLocElement DLocElement::identity(const Rational& x, int order) { return DLocElement(JetQ::identity(x, order)); }

DLocElement DLocElement::dilation(const Rational& x, const Rational& lambda, int order) {
  JetQ s = JetQ::identity(x, order);
  s[1] = lambda;
  return DLocElement(std::move(s));
}

DLocElement DLocElement::elementary(const Rational& x, const Rational& a, int j, int order) {
  if (j < 1) throw DomainError("elementary step needs j >= 1");
  JetQ s = JetQ::identity(x, order);
  if (j + 1 <= order) s[j + 1] += a;
  return DLocElement(std::move(s));
}

DLocElement compose(const DLocElement& g, const DLocElement& h) {
  if (g.order() != h.order()) throw DomainError("composing diffeomorphisms of different truncation orders");
  return DLocElement(compose(g.jet(), h.jet()));
}

JetQ act_on_field(const DLocElement& g, const JetQ& u) {
  if (u.base() != g.base()) throw DomainError("field jet and diffeomorphism at different base points");
  const int n = std::min(u.order(), g.order() - 1);
  if (n < 0) throw DomainError("order underflow");
  JetQ fs = compose(u.truncated(n), g.jet().truncated(n));
  return fs * g.jet().derivative().truncated(n).reciprocal();
}

namespace {

std::vector<Rational> dual_coords(const OnePointLocal& chi) {
  std::vector<Rational> beta;
  if (chi.is_zero()) return beta;
  for (int i = -1; i <= chi.order() - 1; ++i) beta.push_back(chi.dual_coeff(i));
  return beta;
}

// Lowest dual index that is visible on the algebra at the point.
int dual_lo(const Rational& x, AlgebraTag tag) {
  if (x.is_zero() && (tag == AlgebraTag::Wgeq0 || tag == AlgebraTag::Wgeq1)) return lowest_index(tag);
  return -1;
}

struct Reduction {
  std::vector<Rational> beta;  // beta[i + 1] is the coefficient of e_i^*
  JetQ witness;
};

Reduction reduce(const Rational& x, std::vector<Rational> beta, int lo, bool with_witness) {
  const int n = static_cast<int>(beta.size()) - 1;
  const int big_n = n + 2;
  auto project = [&](std::vector<Rational>& b) {
    for (int i = -1; i < lo && i + 1 < static_cast<int>(b.size()); ++i) b[static_cast<std::size_t>(i + 1)] = Rational(0);
  };
  project(beta);
  JetQ total = JetQ::identity(x, big_n);
  const Rational lead = beta[static_cast<std::size_t>(n)];
  for (int j = 1; n - 1 - j >= lo; ++j) {
    const int idx = n - 1 - j;
    const int slope = n - 1 - 2 * j;
    if (slope == 0) continue;
    const Rational& cur = beta[static_cast<std::size_t>(idx + 1)];
    if (cur.is_zero()) continue;
    Rational a = -cur / (Rational(slope) * lead);
    DLocElement step = DLocElement::elementary(x, a, j, big_n);
    beta = detail::pullback_dual(step.jet(), beta);
    project(beta);
    if (!beta[static_cast<std::size_t>(idx + 1)].is_zero())
      throw std::logic_error("staircase step failed to cancel coordinate " + std::to_string(idx));
    if (with_witness) total = compose(step.jet(), total);
  }
  return {std::move(beta), std::move(total)};
}

}  // namespace

OnePointLocal act_on_local(const DLocElement& g, const OnePointLocal& chi) {
  if (chi.is_zero()) return chi;
  if (chi.x != g.base()) throw DomainError("functional and diffeomorphism at different base points");
  if (chi.order() > g.order() - 1)
    throw DomainError("order overflow: functional of order " + std::to_string(chi.order()) +
                      " needs truncation order at least " + std::to_string(chi.order() + 1));
  return OnePointLocal::from_dual(chi.x, detail::pullback_dual(g.jet(), dual_coords(chi)));
}

OnePointLocal xi_action(const LaurentQ& s, const OnePointLocal& chi) {
  if (chi.is_zero()) return chi;
  if (!s(chi.x).is_zero()) throw DomainError("xi_action needs s(x) = 0");
  const int n = chi.order();
  JetQ sj = taylor_jet(s, chi.x, n + 1);
  Jet<DualQ> path(DualQ(chi.x), n + 1);
  for (int k = 0; k <= n + 1; ++k) path[k] = DualQ(Rational(0), sj[k]);
  path[0].a = chi.x;
  path[1].a += Rational(1);
  std::vector<DualQ> beta;
  for (const auto& b : dual_coords(chi)) beta.emplace_back(b);
  std::vector<DualQ> moved = detail::pullback_dual(path, beta);
  std::vector<Rational> tangent;
  for (const auto& d : moved) tangent.push_back(d.b);
  return OnePointLocal::from_dual(chi.x, tangent);
}

OnePointLocal coadjoint_action(const LaurentQ& u, const OnePointLocal& chi) {
  if (chi.is_zero()) return chi;
  std::vector<Rational> beta;
  for (int i = -1; i <= chi.order(); ++i)
    beta.push_back(eval_one_point(chi, field_bracket(u, shifted_power(chi.x, i + 1))));
  return OnePointLocal::from_dual(chi.x, beta);
}

OnePointLocal shift_generator_action(const OnePointLocal& chi) {
  std::vector<Rational> c{Rational(0)};
  c.insert(c.end(), chi.coeffs.begin(), chi.coeffs.end());
  return OnePointLocal(chi.x, std::move(c));
}

CanonicalForm canonicalize(const OnePointLocal& input, AlgebraTag tag) {
  LocalFunction normal(tag, input);
  if (normal.is_zero()) throw DomainError("the zero functional has no canonical form");
  const OnePointLocal& chi = normal.points().front();
  const int n = chi.order();
  Reduction r = reduce(chi.x, dual_coords(chi), dual_lo(chi.x, tag), true);

  CanonicalForm cf;
  cf.order = n;
  cf.c = r.beta[static_cast<std::size_t>(n)];
  if (n == 1)
    cf.parity = CanonicalForm::Case::One;
  else if (n % 2 == 1)
    cf.parity = CanonicalForm::Case::Odd;
  else
    cf.parity = CanonicalForm::Case::Even;
  const int k = (n - 1) / 2;
  if (cf.parity == CanonicalForm::Case::Odd) cf.b = r.beta[static_cast<std::size_t>(k + 1)];
  for (int i = -1; i < n - 1; ++i) {
    bool kept = cf.parity == CanonicalForm::Case::Odd && i == k;
    if (!kept && !r.beta[static_cast<std::size_t>(i + 1)].is_zero())
      throw std::logic_error("canonical form has a stray coordinate at index " + std::to_string(i));
  }
  cf.form = OnePointLocal::from_dual(chi.x, r.beta);
  cf.witness = DLocElement(std::move(r.witness));
  return cf;
}

bool operator<(const ComponentInvariant& a, const ComponentInvariant& b) {
  if (a.at_origin != b.at_origin) return a.at_origin < b.at_origin;
  if (a.order != b.order) return a.order < b.order;
  if (a.value != b.value) return a.value < b.value;
  return a.leading < b.leading;
}

ComponentInvariant component_invariant(const OnePointLocal& input, AlgebraTag tag) {
  LocalFunction normal(tag, input);
  if (normal.is_zero()) throw DomainError("the zero functional has no orbit invariant");
  const OnePointLocal& chi = normal.points().front();
  const int n = chi.order();
  const int lo = dual_lo(chi.x, tag);
  Reduction r = reduce(chi.x, dual_coords(chi), lo, false);
  const Rational& c = r.beta[static_cast<std::size_t>(n)];
  const int k = (n - 1) / 2;

  ComponentInvariant inv;
  inv.order = n;
  inv.at_origin = lo > -1;
  if (tag == AlgebraTag::Wgeq1 && inv.at_origin) {
    // no dilations in the group generated by Wgeq1, so c and b are both kept
    inv.leading = c;
    if (n % 2 == 1) inv.value = r.beta[static_cast<std::size_t>(k + 1)];
  } else if (n == 1) {
    inv.value = c;
  } else if (n % 2 == 1) {
    const Rational& b = r.beta[static_cast<std::size_t>(k + 1)];
    inv.value = b * b / c;
  }
  return inv;
}

OrbitInvariant orbit_invariant(const LocalFunction& chi) {
  if (chi.is_zero()) throw DomainError("the zero functional has no orbit invariant");
  OrbitInvariant inv;
  inv.tag = chi.tag();
  for (const auto& p : chi.points()) inv.components.push_back(component_invariant(p, chi.tag()));
  std::sort(inv.components.begin(), inv.components.end());
  return inv;
}

bool orbit_equal(const LocalFunction& a, const LocalFunction& b) {
  if (a.tag() != b.tag()) throw DomainError("tag mismatch: " + to_string(a.tag()) + " vs " + to_string(b.tag()));
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return orbit_invariant(a) == orbit_invariant(b);
}

PrimitiveDescriptor primitive_descriptor(const LocalFunction& chi) {
  PrimitiveDescriptor d;
  if (chi.is_zero()) return d;
  d.partition = order_partition(chi);
  for (const auto& c : orbit_invariant(chi).components)
    if (c.order % 2 == 1 && c.value) d.odd_invariants.emplace_back(c.order, *c.value);
  std::sort(d.odd_invariants.begin(), d.odd_invariants.end());
  return d;
}

int orbit_dim(const LocalFunction& chi) {
  int total = 0;
  for (const auto& p : chi.points()) {
    const int n = p.order();
    const int lo = dual_lo(p.x, chi.tag());
    if (lo == 0)
      total += n % 2 == 0 ? n : n - 1;
    else if (lo == 1)
      total += n % 2 == 0 ? n - 2 : n - 3;
    else
      total += 2 * ((n + 2) / 2);
  }
  return total;
}

int dloc_orbit_dim(const OnePointLocal& chi) {
  if (chi.is_zero()) return 0;
  const int n = chi.order();
  if (n == 1) return 1;
  return n % 2 == 0 ? n + 1 : n;
}

bool closure_less(const OnePointLocal& minus, const OnePointLocal& plus, AlgebraTag tag) {
  if (tag != AlgebraTag::W && tag != AlgebraTag::Wgeq_m1)
    throw DomainError("closure comparison is only available for W and Wgeq-1");
  if (!minus.is_zero() && !plus.is_zero() && minus.x != plus.x)
    throw DomainError("closure comparison needs a common base point");
  return dloc_orbit_dim(minus) < dloc_orbit_dim(plus);
}

ClosureVerdict closure_relation(const LocalFunction& minus, const LocalFunction& plus) {
  if (minus.tag() != plus.tag()) throw DomainError("tag mismatch");
  const AlgebraTag tag = plus.tag();
  if (tag != AlgebraTag::W && tag != AlgebraTag::Wgeq_m1) return ClosureVerdict::Unknown;
  auto below = [&](const OnePointLocal& m, const OnePointLocal& p) {
    return m == p || component_invariant(m, tag) == component_invariant(p, tag) || closure_less(m, p, tag);
  };
  const auto& mp = minus.points();
  const auto& pp = plus.points();
  if (mp.size() == 1 && pp.size() == 1 && mp[0].x == pp[0].x)
    return below(mp[0], pp[0]) ? ClosureVerdict::Contained : ClosureVerdict::NotContained;
  // componentwise: every component of minus sits below the component of plus
  // at the same point; components of plus may be dropped
  for (const auto& m : mp) {
    auto it = std::find_if(pp.begin(), pp.end(), [&](const OnePointLocal& p) { return p.x == m.x; });
    if (it == pp.end() || !below(m, *it)) return ClosureVerdict::Unknown;
  }
  return ClosureVerdict::Contained;
}

LocalFunction shift(const LocalFunction& chi, const Rational& z) {
  if (chi.tag() == AlgebraTag::Wgeq0 || chi.tag() == AlgebraTag::Wgeq1)
    throw DomainError("shifts are not available for " + to_string(chi.tag()));
  std::vector<OnePointLocal> moved;
  for (const auto& p : chi.points()) {
    Rational y = p.x + z;
    if (y.is_zero() && (chi.tag() == AlgebraTag::W || chi.tag() == AlgebraTag::Vir))
      throw DomainError("shift moves the base point " + p.x.str() + " onto 0");
    moved.emplace_back(y, p.coeffs);
  }
  return LocalFunction(chi.tag(), std::move(moved));
}

}  // namespace witt
