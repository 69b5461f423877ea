#include "doctest.h"
#include "gen.hpp"
#include "witt/dloc.hpp"
#include "witt/text.hpp"

using namespace witt;

namespace {

OnePointLocal P(int x, std::vector<Rational> c) { return OnePointLocal(Rational(x), std::move(c)); }
LocalFunction LW(std::vector<OnePointLocal> ps) { return LocalFunction(AlgebraTag::W, std::move(ps)); }

/// beta'_m = chi(g(e_m)): dualize the field action directly.
std::vector<Rational> dual_by_fields(const DLocElement& g, const OnePointLocal& chi) {
  const int n = chi.order();
  std::vector<Rational> out;
  for (int m = -1; m <= n - 1; ++m) {
    JetQ e = JetQ::shifted_monomial(chi.x, n, m + 1);
    JetQ image = act_on_field(g, e);
    Rational acc(0);
    for (int i = -1; i <= n - 1; ++i) acc += chi.dual_coeff(i) * image[i + 1];
    out.push_back(acc);
  }
  return out;
}

std::vector<Rational> dual_of(const OnePointLocal& chi, int n) {
  std::vector<Rational> out;
  for (int i = -1; i <= n - 1; ++i) out.push_back(chi.dual_coeff(i));
  return out;
}

DLocElement unipotent(test::Gen& g, const Rational& x, int order) {
  JetQ s = JetQ::identity(x, order);
  for (int k = 2; k <= order; ++k) s[k] = Rational(g.integer(-2, 2));
  return DLocElement(std::move(s));
}

}  // namespace

TEST_CASE("DLoc elements must fix the base point and be invertible") {
  JetQ s = JetQ::identity(Rational(1), 3);
  s[1] = Rational(0);
  CHECK_THROWS_AS(DLocElement{s}, DomainError);
  JetQ moved = JetQ::identity(Rational(1), 3);
  moved[0] = Rational(2);
  CHECK_THROWS_AS(DLocElement{moved}, DomainError);
}

TEST_CASE("act_on_field") {
  JetQ u(Rational(0), {0, 1, 2, 3, 4});
  CHECK(act_on_field(DLocElement::identity(Rational(0), 5), u) == u);
  for (int i = -1; i <= 3; ++i) {
    JetQ e = JetQ::shifted_monomial(Rational(0), 6, i + 1);
    JetQ image = act_on_field(DLocElement::elementary(Rational(0), Rational(1), 1, 7), e);
    CHECK(image[i + 1] == Rational(1));
    CHECK(image[i + 2] == Rational(i - 1));
    for (int k = 0; k <= i; ++k) CHECK(image[k].is_zero());
    JetQ scaled = act_on_field(DLocElement::dilation(Rational(0), Rational(3), 7), e);
    CHECK(scaled == e * pow(Rational(3), i));
  }
}

TEST_CASE("act_on_local on basis functionals") {
  const Rational x(2);
  for (int i = -1; i <= 4; ++i) {
    std::vector<Rational> beta(static_cast<std::size_t>(i + 2), Rational(0));
    beta.back() = Rational(1);
    OnePointLocal e = OnePointLocal::from_dual(x, beta);
    CHECK(act_on_local(DLocElement::dilation(x, Rational(-2), 7), e) == OnePointLocal::from_dual(x, [&] {
            auto b = beta;
            b.back() = pow(Rational(-2), i);
            return b;
          }()));
    for (int j = 1; j <= 3; ++j) {
      const Rational a(5, 3);
      OnePointLocal image = act_on_local(DLocElement::elementary(x, a, j, 7), e);
      CHECK(image.dual_coeff(i) == Rational(1));
      for (int m = i + 1; m <= 6; ++m) CHECK(image.dual_coeff(m).is_zero());
      if (i - j >= -1) CHECK(image.dual_coeff(i - j) == a * Rational(i - 2 * j));
      for (int m = i - j + 1; m < i; ++m) CHECK(image.dual_coeff(m).is_zero());
    }
  }
  OnePointLocal chi = P(1, {1, 2, 3});
  CHECK(act_on_local(DLocElement::identity(Rational(1), 4), chi) == chi);
  CHECK_THROWS_AS(act_on_local(DLocElement::identity(Rational(1), 2), chi), DomainError);
  CHECK_THROWS_AS(act_on_local(DLocElement::identity(Rational(2), 4), chi), DomainError);
}

TEST_CASE("act_on_local agrees with the dualized field action") {
  test::Gen g(51);
  for (int s = 0; s < 50; ++s) {
    const Rational x = g.nonzero();
    const int n = g.integer(0, 6);
    OnePointLocal chi = g.one_point(x, n);
    DLocElement h = g.dloc(x, n + 2);
    CHECK(dual_of(act_on_local(h, chi), n) == dual_by_fields(h, chi));
  }
}

TEST_CASE("group law") {
  test::Gen g(52);
  for (int s = 0; s < 50; ++s) {
    const Rational x = g.nonzero();
    const int n = g.integer(0, 6);
    OnePointLocal chi = g.one_point(x, n);
    DLocElement a = g.dloc(x, n + 2), b = g.dloc(x, n + 2);
    CHECK(act_on_local(compose(a, b), chi) == act_on_local(a, act_on_local(b, chi)));
    CHECK(act_on_local(a.inverse(), act_on_local(a, chi)) == chi);
  }
}

TEST_CASE("stabilizer of e_2k^* + beta e_k^*") {
  // t -> t + a t~^{k+1} + c t~^{2k+1} with c = (a^2 (k+1) - a beta) / 2 fixes the
  // functional up to its e_{-1}^* coordinate, which a t~^{2k+2} term clears.
  // Taking c = a^2 (k+1) - a beta / 2 instead does not.
  test::Gen g(53);
  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s < 10; ++s) {
      const Rational x = g.nonzero(), alpha = g.nonzero(), beta = g.rational();
      std::vector<Rational> dual(static_cast<std::size_t>(2 * k + 2), Rational(0));
      dual[static_cast<std::size_t>(2 * k + 1)] = Rational(1);
      dual[static_cast<std::size_t>(k + 1)] = beta;
      OnePointLocal chi = OnePointLocal::from_dual(x, dual);
      const int n = 2 * k + 1;
      auto element = [&](const Rational& c, const Rational& d) {
        JetQ sj = JetQ::identity(x, n + 2);
        sj[k + 1] += alpha;
        sj[2 * k + 1] += c;
        sj[2 * k + 2] += d;
        return DLocElement(sj);
      };
      const Rational c = (alpha * alpha * Rational(k + 1) - alpha * beta) / Rational(2);
      OnePointLocal image = act_on_local(element(c, Rational(0)), chi);
      for (int i = 0; i < n; ++i) CHECK(image.dual_coeff(i) == chi.dual_coeff(i));
      // the t~^{2k+2} step moves e_2k^* to e_{-1}^* with weight -(2k + 2)
      const Rational d = image.dual_coeff(-1) / Rational(2 * k + 2);
      CHECK(act_on_local(element(c, d), chi) == chi);
      if (k >= 2) CHECK(d.is_zero());
      const Rational printed = alpha * alpha * Rational(k + 1) - alpha * beta / Rational(2);
      CHECK(act_on_local(element(printed, d), chi).dual_coeff(0) != chi.dual_coeff(0));
    }
}

TEST_CASE("xi_action") {
  OnePointLocal chi = P(1, {1});
  OnePointLocal image = coadjoint_action(parse_laurent("t^2"), chi);
  CHECK(eval_one_point(image, parse_laurent("t")) == Rational(-1));
  CHECK_THROWS_AS(xi_action(parse_laurent("t^2"), chi), DomainError);
  CHECK(xi_action(LaurentQ(), P(1, {1, 2})).is_zero());
  LaurentQ s = parse_laurent("t^2 - t");
  CHECK(xi_action(s, P(1, {1, 2, 3})) == coadjoint_action(s, P(1, {1, 2, 3})));
}

TEST_CASE("shift generator is the coadjoint action of d") {
  test::Gen g(54);
  for (int s = 0; s < 30; ++s) {
    OnePointLocal chi = g.one_point(g.nonzero(), g.integer(0, 4));
    OnePointLocal d = shift_generator_action(chi);
    CHECK(d == coadjoint_action(LaurentQ(Rational(1)), chi));
    LaurentQ f = g.laurent(-3, 5);
    Rational direct(0);
    LaurentQ df = derivative(f);
    for (std::size_t k = 0; k < chi.coeffs.size(); ++k)
      direct += chi.coeffs[k] * derivative(df, static_cast<int>(k))(chi.x);
    CHECK(eval_one_point(d, f) == direct);
  }
}

TEST_CASE("canonicalize examples") {
  CanonicalForm one = canonicalize(P(1, {4, 3}), AlgebraTag::W);
  CHECK(one.parity == CanonicalForm::Case::One);
  CHECK(one.form == OnePointLocal::from_dual(Rational(1), {0, 3}));
  CHECK(one.c == Rational(3));

  CanonicalForm even = canonicalize(P(1, {4, 3, 5}), AlgebraTag::W);
  CHECK(even.parity == CanonicalForm::Case::Even);
  CHECK(even.c == Rational(10));
  CHECK(even.form == OnePointLocal::from_dual(Rational(1), {0, 0, 10}));
  CHECK_FALSE(even.b.has_value());

  test::Gen g(55);
  for (int s = 0; s < 30; ++s) {
    OnePointLocal chi = g.one_point(g.nonzero(), 3);
    CanonicalForm cf = canonicalize(chi, AlgebraTag::W);
    CHECK(cf.parity == CanonicalForm::Case::Odd);
    REQUIRE(cf.b.has_value());
    CHECK(cf.form == OnePointLocal::from_dual(chi.x, {0, 0, *cf.b, cf.c}));
    CHECK(act_on_local(cf.witness, chi) == cf.form);
  }
  CHECK_THROWS_AS(canonicalize(OnePointLocal(Rational(1), {}), AlgebraTag::W), DomainError);
}

TEST_CASE("canonicalize at the origin of Wgeq0 and Wgeq1") {
  test::Gen g(56);
  for (AlgebraTag tag : {AlgebraTag::Wgeq0, AlgebraTag::Wgeq1})
    for (int s = 0; s < 30; ++s) {
      const int n = g.integer(tag == AlgebraTag::Wgeq1 ? 2 : 1, 7);
      OnePointLocal chi = LocalFunction(tag, g.one_point(Rational(0), n)).points().front();
      CanonicalForm cf = canonicalize(chi, tag);
      CHECK(LocalFunction(tag, act_on_local(cf.witness, chi)) == LocalFunction(tag, cf.form));
      const OrbitInvariant inv = orbit_invariant(LocalFunction(tag, chi));
      for (int k = 0; k < 5; ++k) {
        DLocElement h = tag == AlgebraTag::Wgeq0 ? g.dloc(Rational(0), n + 2) : unipotent(g, Rational(0), n + 2);
        CHECK(orbit_invariant(LocalFunction(tag, act_on_local(h, chi))) == inv);
      }
    }
}

TEST_CASE("orbit_invariant") {
  auto inv = [](const OnePointLocal& p) { return orbit_invariant(LW({p})).components.front(); };
  CHECK(inv(P(1, {5, 0})).order == 0);
  CHECK(inv(P(1, {5, 2})).value == Rational(2));
  ComponentInvariant even = inv(P(1, {0, 0, 7}));
  CHECK(even.order == 2);
  CHECK_FALSE(even.value.has_value());
  CHECK(inv(OnePointLocal::from_dual(Rational(1), {0, 0, 3, 1})).value == Rational(9));
  CHECK(inv(OnePointLocal::from_dual(Rational(1), {0, 0, -3, 1})).value == Rational(9));
  CHECK_THROWS_AS(orbit_invariant(LW({})), DomainError);
}

TEST_CASE("orbit_equal") {
  CHECK(orbit_equal(LW({P(1, {1, 0})}), LW({P(2, {5, 0})})));
  CHECK_FALSE(orbit_equal(LW({P(1, {1, 0})}), LW({P(1, {1, 1})})));
  LocalFunction chi = LW({P(1, {1, 2, 3, 4}), P(-2, {0, 1})});
  CHECK(orbit_equal(chi, chi));
  CHECK(orbit_equal(LW({}), LW({})));
  CHECK_FALSE(orbit_equal(chi, LW({})));
  CHECK_THROWS_AS(orbit_equal(chi, LocalFunction(AlgebraTag::Vir, {P(1, {1})})), DomainError);
  // Wgeq1 has no dilations at the origin, so the sign flip is not an equivalence there
  LocalFunction a(AlgebraTag::Wgeq1, OnePointLocal::from_dual(Rational(0), {0, 0, 0, 1}));
  LocalFunction b(AlgebraTag::Wgeq1, OnePointLocal::from_dual(Rational(0), {0, 0, 0, 2}));
  CHECK_FALSE(orbit_equal(a, b));
  CHECK(orbit_equal(LocalFunction(AlgebraTag::W, OnePointLocal::from_dual(Rational(1), {0, 0, 0, 1})),
                    LocalFunction(AlgebraTag::W, OnePointLocal::from_dual(Rational(3), {0, 0, 0, 2}))));
}

TEST_CASE("orbit_dim") {
  CHECK(orbit_dim(LW({P(1, {1, 0})})) == 2);
  CHECK(orbit_dim(LW({P(1, {0, 0, 1}), P(2, {0, 0, 1}), P(3, {0, 1})})) == 10);
  CHECK(orbit_dim(LW({})) == 0);
}

TEST_CASE("orbit_dim equals rank_b") {
  test::Gen g(57);
  for (AlgebraTag tag : {AlgebraTag::W, AlgebraTag::Wgeq_m1, AlgebraTag::Wgeq0, AlgebraTag::Wgeq1})
    for (int s = 0; s < 30; ++s) {
      std::vector<OnePointLocal> ps;
      for (const auto& x : g.points(g.integer(1, 2))) ps.push_back(g.one_point(x, g.integer(0, 5)));
      if (tag != AlgebraTag::W) ps.push_back(g.one_point(Rational(0), g.integer(2, 6)));
      LocalFunction chi(tag, ps);
      CHECK(orbit_dim(chi) == rank_b(chi));
    }
}

TEST_CASE("primitive_descriptor") {
  LocalFunction chi = LW({P(1, {0, 0, 1}), P(2, {4, 3}), P(3, {0, 0, 0, 1})});
  PrimitiveDescriptor d = primitive_descriptor(chi);
  CHECK(d.partition == std::vector<int>{3, 2, 1});
  REQUIRE(d.odd_invariants.size() == 2);
  CHECK(d.odd_invariants[0] == std::make_pair(1, Rational(3)));
  CHECK(d.odd_invariants[1] == std::make_pair(3, Rational(0)));
}

TEST_CASE("closure order") {
  CHECK(closure_less(P(1, {1, 0}), P(1, {0, 0, 1}), AlgebraTag::W));
  CHECK_FALSE(closure_less(P(1, {0, 0, 1}), P(1, {0, 0, 1}), AlgebraTag::W));
  CHECK_FALSE(closure_less(P(1, {0, 0, 1}), P(1, {1, 0}), AlgebraTag::W));
  CHECK_THROWS_AS(closure_less(P(1, {1}), P(2, {1}), AlgebraTag::W), DomainError);
  CHECK(dloc_orbit_dim(P(1, {0, 1})) == 1);
  CHECK(dloc_orbit_dim(P(1, {0, 0, 0, 1})) == 3);
  CHECK(dloc_orbit_dim(P(1, {0, 0, 0, 0, 1})) == 5);

  CHECK(closure_relation(LW({P(1, {1})}), LW({P(1, {0, 0, 1})})) == ClosureVerdict::Contained);
  CHECK(closure_relation(LW({P(1, {0, 0, 1})}), LW({P(1, {1})})) == ClosureVerdict::NotContained);
  CHECK(closure_relation(LW({P(1, {1}), P(2, {1})}), LW({P(1, {0, 0, 1}), P(2, {0, 1, 1})})) ==
        ClosureVerdict::Contained);
  CHECK(closure_relation(LW({P(1, {0, 0, 1}), P(2, {1})}), LW({P(1, {1}), P(2, {0, 0, 1})})) ==
        ClosureVerdict::Unknown);
}

TEST_CASE("shift") {
  CHECK(shift(LW({P(1, {1, 2})}), Rational(1)) == LW({P(2, {1, 2})}));
  CHECK_THROWS_AS(shift(LW({P(1, {1})}), Rational(-1)), DomainError);
  CHECK_THROWS_AS(shift(LocalFunction(AlgebraTag::Wgeq0, P(1, {1})), Rational(1)), DomainError);
  CHECK(shift(LocalFunction(AlgebraTag::Wgeq_m1, P(1, {1})), Rational(-1)) ==
        LocalFunction(AlgebraTag::Wgeq_m1, P(0, {1})));
}
