#ifndef WITT_SUBALG_HPP
#define WITT_SUBALG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/factored.hpp"
#include "witt/liealg.hpp"
#include "witt/linalg.hpp"

namespace witt {

/// The span of W(f0) and the field parts of `generators`. For tag Vir the
/// subalgebra is the preimage of that span, so it contains z.
struct SubalgebraPresentation {
  FactoredPoly f0;
  std::vector<VirElement> generators;
  AlgebraTag tag = AlgebraTag::W;
};

struct OnePointInvariants {
  Rational x;
  int d = 0;              // codimension
  int a = 0;              // f_k = (t - x)^a
  std::vector<int> ldeg;  // n_i - 1
  std::vector<int> sdeg;  // g_i - 1
};

/// Row of the codimension <= 3 tables. `f` is the minimal floor f_k; the
/// other fields are filled as the code requires.
struct ClassificationCode {
  std::string code;  // "W(f)", "W^{2;1}", ..., "W^{3C5}"
  FactoredPoly f;
  std::optional<Rational> x, y, alpha, beta;

  friend bool operator==(const ClassificationCode& a, const ClassificationCode& b) {
    return a.code == b.code && a.f == b.f && a.x == b.x && a.y == b.y && a.alpha == b.alpha && a.beta == b.beta;
  }
};

bool verify_subalgebra(const SubalgebraPresentation& k);
int codimension(const SubalgebraPresentation& k);
FactoredPoly minimal_f(const SubalgebraPresentation& k);
std::vector<Rational> support(const SubalgebraPresentation& k);
OnePointInvariants one_point_invariants(const SubalgebraPresentation& k);

/// Table row and parameters; (alpha, beta) of W^{3A} are scaled so that the
/// first nonzero one is 1, and x < y.
ClassificationCode classify(const SubalgebraPresentation& k);

/// Presentation of a table row, with f0 = f_k.
SubalgebraPresentation generate_table_subalgebra(const ClassificationCode& code);

/// Both presentations span the same subspace of W.
bool same_subalgebra(const SubalgebraPresentation& a, const SubalgebraPresentation& b);

bool ldeg_semigroup_check(const OnePointInvariants& inv);
bool gaps_bound_check(const OnePointInvariants& inv);

/// sum coeff [v_p, v_q] with v_p = f t^p d + lambda_p z.
struct ZExpression {
  struct Term {
    Rational coeff;
    int p = 0;
    int q = 0;
  };
  LaurentQ f;
  int d = 0;
  int q1 = 0;
  int q2 = 0;
  std::vector<Term> terms;
};

/// Two brackets of the v_p whose field parts cancel and whose central parts
/// leave exactly z. Only p listed in `lifts` may be used.
ZExpression vir_express_z(const LaurentQ& f, const std::map<int, Rational>& lifts);
VirElement evaluate(const ZExpression& e, const std::map<int, Rational>& lifts);

}  // namespace witt

#endif
