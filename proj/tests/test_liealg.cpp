#include "doctest.h"
#include "gen.hpp"
#include "witt/liealg.hpp"
#include "witt/text.hpp"

using namespace witt;

namespace {
VirElement W(const char* s) { return parse_vir_element(s, AlgebraTag::W); }
VirElement V(const char* s) { return parse_vir_element(s, AlgebraTag::Vir); }
}  // namespace

TEST_CASE("witt_bracket examples") {
  CHECK(witt_bracket(W("t"), W("t^2")) == W("t^2"));
  CHECK(witt_bracket(W("t^3 - t^-1"), W("t^3 - t^-1")).is_zero());
  CHECK(witt_bracket(W("1"), W("t")) == W("1"));
}

TEST_CASE("vir_bracket examples") {
  VirElement r = vir_bracket(V("t^3"), V("t^-1"));
  CHECK(r.field() == parse_laurent("-4*t"));
  CHECK(r.central_part() == Rational(12));
  CHECK(format_vir_element(r) == "-4*t + 12*z");
  CHECK(vir_bracket(VirElement::central(Rational(1)), V("t^2 + 3*z")).is_zero());
  for (int m = -5; m <= 5; ++m) {
    VirElement u(LaurentQ::monomial(m + 1), Rational(0), AlgebraTag::Vir);
    VirElement v(LaurentQ::monomial(1 - m), Rational(0), AlgebraTag::Vir);
    CHECK(vir_bracket(u, v).central_part() == Rational(2 * (m * m * m - m)));
  }
}

TEST_CASE("tags are enforced") {
  CHECK_THROWS_AS(witt_bracket(W("t"), V("t")), DomainError);
  CHECK_THROWS_AS(vir_bracket(W("t"), W("t")), DomainError);
  CHECK_THROWS_AS(VirElement(parse_laurent("1"), Rational(0), AlgebraTag::Wgeq0), DomainError);
  CHECK_THROWS_AS(VirElement(parse_laurent("t"), Rational(1), AlgebraTag::W), DomainError);
  CHECK_NOTHROW(VirElement(parse_laurent("t^2"), Rational(0), AlgebraTag::Wgeq1));
  CHECK(parse_tag("Wgeq-1") == AlgebraTag::Wgeq_m1);
  CHECK(to_string(AlgebraTag::Wgeq1) == "Wgeq1");
  CHECK_THROWS_AS(parse_tag("Wgeq2"), ParseError);
}

TEST_CASE("subalgebra tags are closed under the bracket") {
  test::Gen g(21);
  for (AlgebraTag tag : {AlgebraTag::Wgeq_m1, AlgebraTag::Wgeq0, AlgebraTag::Wgeq1})
    for (int s = 0; s < 50; ++s) CHECK_NOTHROW(bracket(g.vir(tag), g.vir(tag)));
}

TEST_CASE("wf_membership") {
  CHECK(wf_membership(W("t^2 - t"), FactoredPoly({{1, 1}})));
  CHECK_FALSE(wf_membership(W("t"), FactoredPoly({{1, 2}})));
  CHECK(wf_membership(VirElement(), FactoredPoly({{1, 2}})));
  CHECK_FALSE(wf_membership(V("t^2 - t + z"), FactoredPoly({{1, 1}})));
  CHECK(wf_membership(V("t^2 - t + z"), FactoredPoly({{1, 1}}), true));
}

TEST_CASE("cocycle condition") {
  test::Gen g(22);
  for (int s = 0; s < 100; ++s) {
    LaurentQ f = g.laurent(-6, 6), h = g.laurent(-6, 6), k = g.laurent(-6, 6);
    Rational w = virasoro_cocycle(field_bracket(f, h), k) + virasoro_cocycle(field_bracket(h, k), f) +
                 virasoro_cocycle(field_bracket(k, f), h);
    CHECK(w.is_zero());
    CHECK(virasoro_cocycle(f, h) == test::cocycle_oracle(f, h));
  }
}

TEST_CASE("bracket of W(f^2 h^2) with W lands in W(f h)") {
  test::Gen g(23);
  for (int s = 0; s < 50; ++s) {
    std::vector<Rational> xs = g.points(2);
    FactoredPoly fh({{xs[0], 1}, {xs[1], 2}});
    FactoredPoly sq({{xs[0], 2}, {xs[1], 4}});
    VirElement u(sq.expand() * g.laurent(-3, 3));
    VirElement v(g.laurent(-4, 4));
    CHECK(wf_membership(witt_bracket(u, v), fh));
  }
}

TEST_CASE("the sign-flipped bracket violates Jacobi") {
  // (f g' + f' g) is symmetric and fails Jacobi, so it cannot be the Lie bracket
  auto plus = [](const LaurentQ& f, const LaurentQ& g) { return f * derivative(g) + derivative(f) * g; };
  LaurentQ a = parse_laurent("1"), b = parse_laurent("t"), c = parse_laurent("t^2");
  LaurentQ jac = plus(a, plus(b, c)) + plus(b, plus(c, a)) + plus(c, plus(a, b));
  CHECK_FALSE(jac.is_zero());
  LaurentQ ok = field_bracket(a, field_bracket(b, c)) + field_bracket(b, field_bracket(c, a)) +
                field_bracket(c, field_bracket(a, b));
  CHECK(ok.is_zero());
}

TEST_CASE("vir element grammar") {
  VirElement u = V("3*t^-2 + t - 5/2 + 7/3*z");
  CHECK(u.central_part() == Rational(7, 3));
  CHECK(parse_vir_element(format_vir_element(u), AlgebraTag::Vir) == u);
  CHECK_THROWS_AS(parse_vir_element("t + z", AlgebraTag::W), ParseError);
  CHECK_THROWS_AS(parse_vir_element("t + * z", AlgebraTag::Vir), ParseError);
}
