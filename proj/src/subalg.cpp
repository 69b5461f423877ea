#include "witt/subalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "witt/jet.hpp"

namespace witt {

namespace {

using Roots = std::vector<FactoredPoly::Root>;

// Coordinates of k[t, t^-1]/(f) as the Taylor jets at the roots of f.
class Quotient {
 public:
  explicit Quotient(const Roots& roots) : roots_(roots) {
    for (const auto& [x, m] : roots_) {
      if (x.is_zero()) throw DomainError("root 0 is a unit in k[t, t^-1]; floors must have f(0) != 0");
      dim_ += m;
    }
  }
  int dim() const { return dim_; }

  VectorQ coords(const LaurentQ& g) const {
    VectorQ v(dim_);
    Index at = 0;
    for (const auto& [x, m] : roots_) {
      JetQ j = taylor_jet(g, x, m - 1);
      for (int k = 0; k < m; ++k) v(at++) = j[k];
    }
    return v;
  }

  MatrixQ columns(const std::vector<LaurentQ>& gs) const {
    MatrixQ a(dim_, static_cast<Index>(gs.size()));
    for (std::size_t c = 0; c < gs.size(); ++c) a.col(static_cast<Index>(c)) = coords(gs[c]);
    return a;
  }

 private:
  Roots roots_;
  int dim_ = 0;
};

LaurentQ monic(const Roots& roots) { return FactoredPoly(roots).expand(); }

std::vector<LaurentQ> fields(const SubalgebraPresentation& k) {
  std::vector<LaurentQ> out;
  for (const auto& g : k.generators)
    if (!g.field().is_zero()) out.push_back(g.field());
  return out;
}

// h t^m for 0 <= m < dim spans (h)/(f0).
std::vector<LaurentQ> ideal_span(const LaurentQ& h, int dim) {
  std::vector<LaurentQ> out;
  for (int m = 0; m < dim; ++m) out.push_back(h * LaurentQ::monomial(m));
  return out;
}

void require_verified(const SubalgebraPresentation& k) {
  if (!verify_subalgebra(k)) throw DomainError("inconsistent presentation: the span is not closed under the bracket");
}

LaurentQ tilde_poly(const Rational& x, const std::vector<std::pair<int, Rational>>& terms) {
  LaurentQ p;
  for (const auto& [deg, c] : terms) p += shifted_power(x, deg) * c;
  return p;
}

// Row-reduced jets of the generators at x, columns indexed by the degree in
// t - x, so that pivots are leading degrees.
Rref<Rational> jets_at(const SubalgebraPresentation& k, const Rational& x, int a) {
  std::vector<LaurentQ> gs = fields(k);
  MatrixQ m(static_cast<Index>(gs.size()), a);
  for (std::size_t r = 0; r < gs.size(); ++r) {
    JetQ j = taylor_jet(gs[r], x, a - 1);
    for (int c = 0; c < a; ++c) m(static_cast<Index>(r), c) = j[c];
  }
  return rref(m);
}

Index row_with_pivot(const Rref<Rational>& r, Index col) {
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    if (r.pivots[i] == col) return static_cast<Index>(i);
  throw DomainError("inconsistent presentation: no generator with leading degree " + std::to_string(col));
}

}  // namespace

bool verify_subalgebra(const SubalgebraPresentation& k) {
  Quotient q(k.f0.roots());
  if (q.dim() == 0) return true;
  std::vector<LaurentQ> gs = fields(k);
  LaurentQ df0 = derivative(monic(k.f0.roots()));
  std::vector<LaurentQ> checks;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) checks.push_back(field_bracket(gs[i], gs[j]));
    // [g, f0 h] = g f0' h mod W(f0)
    for (const auto& p : ideal_span(gs[i] * df0, q.dim())) checks.push_back(p);
  }
  return in_column_span(q.columns(gs), q.columns(checks));
}

int codimension(const SubalgebraPresentation& k) {
  Quotient q(k.f0.roots());
  if (q.dim() == 0) return 0;
  return q.dim() - static_cast<int>(exact_rank(q.columns(fields(k))));
}

FactoredPoly minimal_f(const SubalgebraPresentation& k) {
  require_verified(k);
  const Roots& roots = k.f0.roots();
  Quotient q(roots);
  MatrixQ span = q.columns(fields(k));
  const Index rank = exact_rank(span);

  // all multiplicity vectors, by total degree
  std::vector<std::vector<int>> candidates{{}};
  for (const auto& r : roots) {
    std::vector<std::vector<int>> next;
    for (const auto& c : candidates)
      for (int e = 0; e <= r.second; ++e) {
        auto d = c;
        d.push_back(e);
        next.push_back(std::move(d));
      }
    candidates = std::move(next);
  }
  auto total = [](const std::vector<int>& v) {
    int s = 0;
    for (int e : v) s += e;
    return s;
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const auto& a, const auto& b) { return total(a) < total(b); });
  for (const auto& c : candidates) {
    Roots h;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (c[i] > 0) h.emplace_back(roots[i].first, c[i]);
    MatrixQ both(q.dim(), span.cols() + q.dim());
    both << span, q.columns(ideal_span(monic(h), q.dim()));
    if (exact_rank(both) == rank) return FactoredPoly(h);
  }
  throw std::logic_error("f0 itself must pass the divisor test");
}

std::vector<Rational> support(const SubalgebraPresentation& k) {
  const FactoredPoly f = minimal_f(k);
  std::vector<Rational> out;
  for (const auto& r : f.roots()) out.push_back(r.first);
  return out;
}

OnePointInvariants one_point_invariants(const SubalgebraPresentation& k) {
  FactoredPoly fk = minimal_f(k);
  if (fk.roots().size() != 1)
    throw DomainError("one-point invariants need a one-point support; this subalgebra has " +
                      std::to_string(fk.roots().size()) + " points");
  OnePointInvariants inv;
  inv.x = fk.roots()[0].first;
  inv.a = fk.roots()[0].second;
  inv.d = codimension(k);
  if (inv.a == inv.d) return inv;
  Rref<Rational> r = jets_at(k, inv.x, inv.a);
  std::set<int> leading;
  for (Index p : r.pivots) leading.insert(static_cast<int>(p));
  for (int n : leading) inv.ldeg.push_back(n - 1);
  for (int g = 1; g <= inv.a - 1; ++g)
    if (!leading.count(g)) inv.sdeg.push_back(g - 1);
  return inv;
}

ClassificationCode classify(const SubalgebraPresentation& k) {
  require_verified(k);
  const int d = codimension(k);
  if (d > 3) throw DomainError("codimension " + std::to_string(d) + " > 3 is not classified");
  ClassificationCode c;
  c.f = minimal_f(k);
  if (c.f.degree() == d) {
    c.code = "W(f)";
    return c;
  }
  const Roots& roots = c.f.roots();
  if (roots.size() == 1) {
    OnePointInvariants inv = one_point_invariants(k);
    Rref<Rational> r = jets_at(k, inv.x, inv.a);
    c.x = inv.x;
    auto entry = [&](Index pivot, Index col) { return r.matrix(row_with_pivot(r, pivot), col); };
    const auto& s = inv.sdeg;
    if (s == std::vector<int>{1}) {
      c.code = "W^{2;1}";
      c.alpha = entry(1, 2);
    } else if (s == std::vector<int>{2}) {
      c.code = "W^{2;2}";
      c.alpha = entry(1, 3);
    } else if (s == std::vector<int>{0, 2}) {
      c.code = "W^{3C1}";
      c.alpha = entry(2, 3);
    } else if (s == std::vector<int>{1, 2}) {
      c.code = "W^{3C2}";
      c.alpha = entry(1, 2);
      c.beta = entry(1, 3);
    } else if (s == std::vector<int>{1, 3}) {
      c.code = "W^{3C3}";
      c.alpha = entry(1, 2);
      c.beta = entry(1, 4);
    } else if (s == std::vector<int>{1, 4}) {
      c.code = "W^{3C4}";
      c.alpha = entry(1, 2);
      c.beta = entry(1, 5);
    } else if (s == std::vector<int>{2, 3}) {
      c.code = "W^{3C5}";
      c.alpha = entry(1, 3);
      c.beta = entry(1, 4);
    } else {
      throw DomainError("inconsistent presentation: gaps not in the tables");
    }
  } else if (roots.size() == 2 && roots[0].second == 2 && roots[1].second == 2) {
    c.code = "W^{3A}";
    const Rational& x = roots[0].first;
    const Rational& y = roots[1].first;
    Quotient q(roots);
    Rref<Rational> r = rref(q.columns(fields(k)).transpose());
    if (r.pivots.size() != 1) throw DomainError("inconsistent presentation for a W^{3A} floor");
    // g = (t-x)(t-y)(alpha t + beta): g'(x) = (x-y) q(x), g'(y) = (y-x) q(y)
    Rational qx = r.matrix(0, 1) / (x - y);
    Rational qy = r.matrix(0, 3) / (y - x);
    Rational alpha = (qx - qy) / (x - y);
    Rational beta = qx - alpha * x;
    Rational scale = alpha.is_zero() ? beta : alpha;
    c.x = x;
    c.y = y;
    c.alpha = alpha / scale;
    c.beta = beta / scale;
  } else if (roots.size() == 2 && (roots[0].second == 1 || roots[1].second == 1)) {
    const auto& xr = roots[0].second == 1 ? roots[1] : roots[0];
    const auto& yr = roots[0].second == 1 ? roots[0] : roots[1];
    c.x = xr.first;
    c.y = yr.first;
    Rref<Rational> r = jets_at(k, xr.first, xr.second);
    if (xr.second == 3) {
      c.code = "W^{3B1}";
      c.alpha = r.matrix(row_with_pivot(r, 1), 2);
    } else if (xr.second == 4) {
      c.code = "W^{3B2}";
      c.alpha = r.matrix(row_with_pivot(r, 1), 3);
    } else {
      throw DomainError("inconsistent presentation: two-point floor not in the tables");
    }
  } else {
    throw DomainError("inconsistent presentation: floor not in the tables");
  }
  if (!same_subalgebra(k, generate_table_subalgebra(c)))
    throw DomainError("inconsistent presentation: does not match the " + c.code + " row");
  return c;
}

SubalgebraPresentation generate_table_subalgebra(const ClassificationCode& c) {
  SubalgebraPresentation k;
  auto need = [&](const std::optional<Rational>& v, const char* name) -> const Rational& {
    if (!v) throw DomainError(c.code + " needs parameter " + name);
    return *v;
  };
  auto gen = [&](LaurentQ f) { k.generators.emplace_back(std::move(f), AlgebraTag::W); };
  if (c.code == "W(f)") {
    k.f0 = FactoredPoly(c.f.roots());
    return k;
  }
  const Rational& x = need(c.x, "x");
  if (x.is_zero()) throw DomainError("x must be nonzero");
  const Rational zero(0);
  const Rational& al = c.alpha ? *c.alpha : zero;
  const Rational& be = c.beta ? *c.beta : zero;
  using T = std::vector<std::pair<int, Rational>>;
  auto one_point = [&](int a, const std::vector<T>& gens) {
    k.f0 = FactoredPoly({{x, a}});
    for (const auto& g : gens) gen(tilde_poly(x, g));
  };
  const Rational one(1);
  if (c.code == "W^{2;1}") {
    one_point(3, {{{1, one}, {2, al}}});
  } else if (c.code == "W^{2;2}") {
    one_point(4, {{{1, one}, {3, al}}, {{2, one}}});
  } else if (c.code == "W^{3C1}") {
    one_point(4, {{{2, one}, {3, al}}});
  } else if (c.code == "W^{3C2}") {
    one_point(4, {{{1, one}, {2, al}, {3, be}}});
  } else if (c.code == "W^{3C3}") {
    one_point(5, {{{1, one}, {2, al}, {4, be}}, {{3, one}, {4, -al}}});
  } else if (c.code == "W^{3C4}") {
    one_point(6, {{{1, one}, {2, al}, {5, be}}, {{3, one}, {5, -al * al}}, {{4, one}, {5, Rational(-2) * al}}});
  } else if (c.code == "W^{3C5}") {
    one_point(5, {{{1, one}, {3, al}, {4, be}}, {{2, one}, {4, al / Rational(2)}}});
  } else if (c.code == "W^{3A}") {
    const Rational& y = need(c.y, "y");
    if (y.is_zero() || y == x) throw DomainError("W^{3A} needs y nonzero and y != x");
    if ((al * x + be).is_zero() || (al * y + be).is_zero())
      throw DomainError("W^{3A} needs alpha x + beta and alpha y + beta nonzero");
    k.f0 = FactoredPoly({{x, 2}, {y, 2}});
    gen(shifted_power(x, 1) * shifted_power(y, 1) * (LaurentQ::t() * al + LaurentQ(be)));
  } else if (c.code == "W^{3B1}" || c.code == "W^{3B2}") {
    const Rational& y = need(c.y, "y");
    if (y.is_zero() || y == x) throw DomainError(c.code + " needs y nonzero and y != x");
    const bool b1 = c.code == "W^{3B1}";
    const int a = b1 ? 3 : 4;
    k.f0 = FactoredPoly({{x, a}, {y, 1}});
    // (t - y) h with h = (x-jet) / (t - y) at x, so the x-jet is as in W^{2;1} / W^{2;2}
    std::vector<T> xs = b1 ? std::vector<T>{{{1, one}, {2, al}}} : std::vector<T>{{{1, one}, {3, al}}, {{2, one}}};
    JetQ inv_ty(x, a - 1);
    inv_ty[0] = x - y;
    inv_ty[1] = one;
    inv_ty = inv_ty.reciprocal();
    for (const auto& g : xs) {
      JetQ h = taylor_jet(tilde_poly(x, g), x, a - 1) * inv_ty;
      gen(shifted_power(y, 1) * jet_to_poly(h));
    }
  } else {
    throw DomainError("unknown table code " + c.code);
  }
  return k;
}

bool same_subalgebra(const SubalgebraPresentation& a, const SubalgebraPresentation& b) {
  std::map<Rational, int> lcm;
  for (const auto* k : {&a, &b})
    for (const auto& [x, m] : k->f0.roots()) lcm[x] = std::max(lcm[x], m);
  Roots roots(lcm.begin(), lcm.end());
  Quotient q(roots);
  if (q.dim() == 0) return true;
  auto span = [&](const SubalgebraPresentation& k) {
    std::vector<LaurentQ> gs = fields(k);
    for (const auto& p : ideal_span(monic(k.f0.roots()), q.dim())) gs.push_back(p);
    return q.columns(gs);
  };
  MatrixQ sa = span(a), sb = span(b);
  MatrixQ both(q.dim(), sa.cols() + sb.cols());
  both << sa, sb;
  const Index r = exact_rank(both);
  return exact_rank(sa) == r && exact_rank(sb) == r;
}

bool ldeg_semigroup_check(const OnePointInvariants& inv) {
  const auto& l = inv.ldeg;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (i == j) continue;
      const int s = l[i] + l[j];
      if (s < inv.a - 1 && std::find(l.begin(), l.end(), s) == l.end()) return false;
    }
  return true;
}

bool gaps_bound_check(const OnePointInvariants& inv) {
  std::vector<int> g;
  for (int s : inv.sdeg) g.push_back(s + 1);
  std::sort(g.begin(), g.end());
  if (g.empty()) return true;
  const int slack = g[0] == 1 ? -1 : 1;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] > 2 * static_cast<int>(i + 1) + slack) return false;
  return true;
}

namespace {

VirElement lift(const LaurentQ& f, const std::map<int, Rational>& lifts, int p) {
  return VirElement(f * LaurentQ::monomial(p), lifts.at(p), AlgebraTag::Vir);
}

}  // namespace

ZExpression vir_express_z(const LaurentQ& f, const std::map<int, Rational>& lifts) {
  if (f.is_zero()) throw DomainError("vir_express_z needs f != 0");
  const LaurentQ f2 = f * f;
  auto have = [&](int p) { return lifts.count(p) > 0; };
  std::optional<std::string> hint;
  // Res_0(t^{d-3} f^2) != 0 exactly when t^{2-d} occurs in f^2
  for (const auto& [deg, coeff] : f2.terms()) {
    const int d = 2 - deg;
    std::vector<int> qs;
    for (const auto& [q, lam] : lifts)
      if (2 * q != d && have(d - q)) qs.push_back(q);
    std::stable_sort(qs.begin(), qs.end(), [](int u, int v) { return std::abs(u) < std::abs(v); });
    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = i + 1; j < qs.size(); ++j) {
        const int q1 = qs[i], q2 = qs[j];
        // each (1/(2q - d)) [v_{d-q}, v_q] has field part f^2 t^{d-1}
        Rational c1 = Rational(1) / Rational(2 * q1 - d);
        Rational c2 = Rational(-1) / Rational(2 * q2 - d);
        VirElement sum = vir_bracket(lift(f, lifts, d - q1), lift(f, lifts, q1)) * c1 +
                         vir_bracket(lift(f, lifts, d - q2), lift(f, lifts, q2)) * c2;
        if (!sum.field().is_zero()) throw std::logic_error("field parts failed to cancel");
        if (sum.central_part().is_zero()) continue;
        Rational s = Rational(1) / sum.central_part();
        ZExpression e;
        e.f = f;
        e.d = d;
        e.q1 = q1;
        e.q2 = q2;
        e.terms.push_back({c1 * s, d - q1, q1});
        e.terms.push_back({c2 * s, d - q2, q2});
        return e;
      }
    if (!hint) {
      // the smallest q1 < q2 with (q1 - q2)(d - q1 - q2)(2 q1 - d)(2 q2 - d) != 0
      for (int q1 = 0; !hint; ++q1)
        for (int q2 = q1 + 1; q2 <= q1 + 4 && !hint; ++q2)
          if (2 * q1 != d && 2 * q2 != d && d != q1 + q2)
            hint = "d = " + std::to_string(d) + ", q1 = " + std::to_string(q1) + ", q2 = " + std::to_string(q2) +
                   " (lifts for p in {" + std::to_string(d - q1) + ", " + std::to_string(q1) + ", " +
                   std::to_string(d - q2) + ", " + std::to_string(q2) + "})";
    }
  }
  throw DomainError("insufficient p-range in the lifts; try " + *hint);
}

VirElement evaluate(const ZExpression& e, const std::map<int, Rational>& lifts) {
  VirElement acc(LaurentQ(), Rational(0), AlgebraTag::Vir);
  for (const auto& t : e.terms) acc += vir_bracket(lift(e.f, lifts, t.p), lift(e.f, lifts, t.q)) * t.coeff;
  return acc;
}

}  // namespace witt
