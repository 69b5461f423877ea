#include "doctest.h"
#include "gen.hpp"
#include "witt/localfn.hpp"
#include "witt/text.hpp"

using namespace witt;

namespace {
OnePointLocal P(int x, std::vector<Rational> c) { return OnePointLocal(Rational(x), std::move(c)); }
VirElement W(const char* s) { return parse_vir_element(s, AlgebraTag::W); }
LocalFunction LW(std::vector<OnePointLocal> ps) { return LocalFunction(AlgebraTag::W, std::move(ps)); }
}  // namespace

TEST_CASE("eval_local") {
  CHECK(eval_local(LW({P(1, {1, 2})}), W("t^3")) == Rational(7));
  CHECK(eval_local(LW({P(1, {1, 2})}), VirElement()).is_zero());
  CHECK(eval_local(LW({P(1, {1}), P(2, {1})}), W("t")) == Rational(3));
  LocalFunction vir(AlgebraTag::Vir, P(1, {1}));
  CHECK(eval_local(vir, parse_vir_element("t + 5*z", AlgebraTag::Vir)) == Rational(1));
}

TEST_CASE("normal form") {
  CHECK(LW({P(2, {1}), P(1, {0, 1}), P(2, {0, 3})}) == LW({P(1, {0, 1}), P(2, {1, 3})}));
  CHECK(LW({P(1, {1, 0, 0})}).points().front().coeffs.size() == 1);
  CHECK(LW({P(1, {1}), P(1, {-1})}).is_zero());
  CHECK_THROWS_AS(LW({P(0, {1})}), DomainError);
  CHECK_THROWS_AS(LocalFunction(AlgebraTag::Vir, {P(1, {1})}, Rational(1)), DomainError);
  LocalFunction w1(AlgebraTag::Wgeq1, P(0, {5, 6, 7}));
  CHECK(w1.points().front().coeffs == std::vector<Rational>{0, 0, 7});
  LocalFunction w0(AlgebraTag::Wgeq0, P(0, {5, 6}));
  CHECK(w0.points().front().coeffs == std::vector<Rational>{0, 6});
}

TEST_CASE("normal form does not depend on the presentation") {
  test::Gen g(41);
  for (int s = 0; s < 30; ++s) {
    LocalFunction chi = g.local(AlgebraTag::W, 3, 3);
    std::vector<OnePointLocal> split;
    for (const auto& p : chi.points()) {
      std::vector<Rational> a = p.coeffs, b(p.coeffs.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        b[k] = g.rational();
        a[k] -= b[k];
      }
      split.emplace_back(p.x, a);
      split.emplace_back(p.x, b);
    }
    std::shuffle(split.begin(), split.end(), g.engine());
    CHECK(LW(split) == chi);
  }
}

TEST_CASE("b_chi") {
  LocalFunction chi = LW({P(1, {1, 0})});
  CHECK(b_chi(chi, W("t^2 - 2*t + 1"), W("t^-3 + t^5")).is_zero());
  CHECK(b_chi(chi, W("t^2"), W("t^2")).is_zero());
  LocalFunction c01(AlgebraTag::Wgeq_m1, P(0, {0, 1}));
  VirElement d(parse_laurent("1"), AlgebraTag::Wgeq_m1), t2(parse_laurent("t^2"), AlgebraTag::Wgeq_m1);
  CHECK(b_chi(c01, d, t2) == Rational(2));
  LocalFunction vir(AlgebraTag::Vir, P(2, {1, 3}));
  CHECK(b_chi(vir, VirElement::central(Rational(1)), parse_vir_element("t^3", AlgebraTag::Vir)).is_zero());
}

TEST_CASE("rank_b") {
  CHECK(rank_b(LocalFunction(AlgebraTag::Wgeq_m1, P(0, {0, 0, 1}))) == 4);
  CHECK(rank_b(LW({P(1, {3, 2})})) == 2);
  CHECK(rank_b(LW({P(1, {0, 2})})) == 2);
  CHECK(rank_b(LW({P(1, {1}), P(2, {0, 0, 1})})) == 6);
  CHECK(rank_b(LW({})) == 0);
}

TEST_CASE("rank_b is even and matches the Gram matrix") {
  test::Gen g(42);
  for (int s = 0; s < 40; ++s) {
    LocalFunction chi = g.local(AlgebraTag::W, 2, 4);
    const int r = rank_b(chi);
    CHECK(r % 2 == 0);
    int size = 0;
    for (const auto& p : chi.points()) size += p.order() + 2;
    BasisWindow w{Rational(0), -1, size + 1};
    CHECK(static_cast<int>(exact_rank(gram_matrix(chi, w))) == r);
  }
}

TEST_CASE("order_partition") {
  CHECK(order_partition(LW({P(1, {1, 2})})) == std::vector<int>{1});
  CHECK(order_partition(LW({P(1, {1}), P(2, {0, 0, 5})})) == std::vector<int>{2, 0});
  CHECK(order_partition(LW({P(1, {1}), P(2, {1})})) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(order_partition(LW({})), DomainError);
}

TEST_CASE("recurrence_detect") {
  std::vector<Rational> ones(8, Rational(1));
  auto h = recurrence_detect(ones, 3);
  REQUIRE(h.has_value());
  CHECK(*h == parse_laurent("t - 1"));
  std::vector<Rational> harmonic;
  for (int i = 1; i <= 22; ++i) harmonic.emplace_back(1, i);
  CHECK_FALSE(recurrence_detect(harmonic, 10).has_value());
  auto z = recurrence_detect(std::vector<Rational>(6, Rational(0)), 2);
  REQUIRE(z.has_value());
  CHECK(*z == parse_laurent("1"));
  CHECK_THROWS_AS(recurrence_detect(ones, 4), DomainError);
}

TEST_CASE("recurrence of a local functional is the product of (t - x)^(n+1)") {
  test::Gen g(43);
  for (int s = 0; s < 20; ++s) {
    LocalFunction chi = g.local(AlgebraTag::W, 3, 2);
    int dmax = 0;
    LaurentQ expected(Rational(1));
    for (const auto& p : chi.points()) {
      dmax += p.order() + 1;
      expected *= shifted_power(p.x, p.order() + 1);
    }
    std::vector<Rational> seq;
    for (int i = 0; i < 2 * dmax + 2; ++i) seq.push_back(eval_local(chi, VirElement(LaurentQ::monomial(i))));
    auto h = recurrence_detect(seq, dmax);
    REQUIRE(h.has_value());
    CHECK(*h == expected);
  }
}

TEST_CASE("isotropy_window") {
  LocalFunction c10 = LW({P(1, {1, 0})});
  BasisWindow w{Rational(1), -1, 3};
  auto k = isotropy_window(c10, w);
  MatrixQ span(5, static_cast<Index>(k.size()));
  for (std::size_t j = 0; j < k.size(); ++j)
    for (int i = 0; i < 5; ++i)
      span(i, static_cast<Index>(j)) = taylor_jet(k[j].field(), Rational(1), 4)[i];
  VectorQ sq = VectorQ::Zero(5);
  sq(2) = Rational(1);
  CHECK(in_column_span(span, sq));

  LocalFunction c01 = LW({P(1, {0, 1})});
  auto k2 = isotropy_window(c01, w);
  CHECK(k2.size() == 3);
  for (const auto& u : k2) {
    JetQ j = taylor_jet(u.field(), Rational(1), 2);
    CHECK(j[0].is_zero());
    CHECK(j[2].is_zero());
  }
  CHECK(isotropy_window(LW({}), w).size() == 5);
  CHECK_THROWS_AS(isotropy_window(LW({P(1, {0, 0, 0, 0, 1})}), w), DomainError);
}

TEST_CASE("locality criterion: chi vanishes on W(h)") {
  test::Gen g(44);
  for (int s = 0; s < 20; ++s) {
    LocalFunction chi = g.local(AlgebraTag::W, 3, 3);
    LaurentQ h(Rational(1));
    for (const auto& p : chi.points()) h *= shifted_power(p.x, p.order() + 1);
    for (int k = 0; k < 10; ++k) CHECK(eval_local(chi, VirElement(h * g.laurent(-5, 5))).is_zero());
  }
}
