#include "witt/factored.hpp"

#include <algorithm>

#include "witt/jet.hpp"

namespace witt {

FactoredPoly::FactoredPoly(std::vector<Root> roots, Rational scalar, int t_power)
    : scalar_(std::move(scalar)), t_power_(t_power) {
  if (scalar_.is_zero()) throw DomainError("factored polynomial with zero scalar");
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.first < b.first; });
  for (auto& r : roots) {
    if (r.second < 0) throw DomainError("negative root multiplicity");
    if (r.second == 0) continue;
    if (!roots_.empty() && roots_.back().first == r.first)
      roots_.back().second += r.second;
    else
      roots_.push_back(std::move(r));
  }
}

int FactoredPoly::degree() const {
  int d = 0;
  for (const auto& r : roots_) d += r.second;
  return d;
}

int FactoredPoly::multiplicity(const Rational& x) const {
  for (const auto& r : roots_)
    if (r.first == x) return r.second;
  return 0;
}

LaurentQ FactoredPoly::expand() const {
  LaurentQ p = LaurentQ::monomial(t_power_, scalar_);
  for (const auto& [x, a] : roots_) p *= shifted_power(x, a);
  return p;
}

bool FactoredPoly::divides(const LaurentQ& p) const {
  if (p.is_zero()) return true;
  for (const auto& [x, a] : roots_) {
    if (x.is_zero()) {
      // over k[t, t^-1] the factor t is a unit only when negative powers are
      // allowed; we treat t as a genuine factor of polynomial p
      if (p.min_degree() < a) return false;
      continue;
    }
    JetQ j = taylor_jet(p, x, a - 1);
    for (const auto& c : j.coeffs())
      if (!c.is_zero()) return false;
  }
  return true;
}

FactoredPoly radical(const FactoredPoly& f) {
  std::vector<FactoredPoly::Root> roots;
  for (const auto& [x, a] : f.roots()) roots.emplace_back(x, 1);
  return FactoredPoly(std::move(roots));
}

Rational skew_residue_form(const LaurentQ& a, const LaurentQ& b, const LaurentQ& f) {
  return residue0(f * (a * derivative(b) - derivative(a) * b));
}

}  // namespace witt
