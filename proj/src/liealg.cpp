#include "witt/liealg.hpp"

#include "witt/text.hpp"

namespace witt {

std::string to_string(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::W: return "W";
    case AlgebraTag::Wgeq_m1: return "Wgeq-1";
    case AlgebraTag::Wgeq0: return "Wgeq0";
    case AlgebraTag::Wgeq1: return "Wgeq1";
    case AlgebraTag::Vir: return "Vir";
  }
  return "?";
}

AlgebraTag parse_tag(std::string_view s) {
  if (s == "W") return AlgebraTag::W;
  if (s == "Wgeq-1") return AlgebraTag::Wgeq_m1;
  if (s == "Wgeq0") return AlgebraTag::Wgeq0;
  if (s == "Wgeq1") return AlgebraTag::Wgeq1;
  if (s == "Vir") return AlgebraTag::Vir;
  throw ParseError("unknown algebra tag", std::string(s), 0);
}

int lowest_index(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::Wgeq_m1: return -1;
    case AlgebraTag::Wgeq0: return 0;
    case AlgebraTag::Wgeq1: return 1;
    default: return INT_MIN;
  }
}

VirElement::VirElement(LaurentQ f, Rational c, AlgebraTag tag) : f_(std::move(f)), c_(std::move(c)), tag_(tag) {
  if (!c_.is_zero() && tag_ != AlgebraTag::Vir)
    throw DomainError("central part is only allowed in Vir (tag " + to_string(tag_) + ")");
  if (!f_.is_zero() && f_.min_degree() - 1 < lowest_index(tag_))
    throw DomainError("coefficient t^" + std::to_string(f_.min_degree()) + " is not in " + to_string(tag_));
}

VirElement& VirElement::operator+=(const VirElement& o) {
  if (o.tag_ != tag_) throw DomainError("tag mismatch: " + to_string(tag_) + " vs " + to_string(o.tag_));
  f_ += o.f_;
  c_ += o.c_;
  return *this;
}

VirElement& VirElement::operator-=(const VirElement& o) {
  if (o.tag_ != tag_) throw DomainError("tag mismatch: " + to_string(tag_) + " vs " + to_string(o.tag_));
  f_ -= o.f_;
  c_ -= o.c_;
  return *this;
}

VirElement& VirElement::operator*=(const Rational& s) {
  f_ *= s;
  c_ *= s;
  return *this;
}

Rational virasoro_cocycle(const LaurentQ& f, const LaurentQ& g) {
  LaurentQ f1 = derivative(f), g1 = derivative(g);
  return residue0(f1 * derivative(g1) - derivative(f1) * g1);
}

VirElement witt_bracket(const VirElement& u, const VirElement& v) {
  if (u.tag() != v.tag()) throw DomainError("tag mismatch: " + to_string(u.tag()) + " vs " + to_string(v.tag()));
  if (u.tag() == AlgebraTag::Vir) throw DomainError("witt_bracket called on Vir elements");
  return VirElement(field_bracket(u.field(), v.field()), Rational(0), u.tag());
}

VirElement vir_bracket(const VirElement& u, const VirElement& v) {
  if (u.tag() != AlgebraTag::Vir || v.tag() != AlgebraTag::Vir)
    throw DomainError("vir_bracket needs Vir elements");
  return VirElement(field_bracket(u.field(), v.field()), virasoro_cocycle(u.field(), v.field()), AlgebraTag::Vir);
}

VirElement bracket(const VirElement& u, const VirElement& v) {
  if (u.tag() == AlgebraTag::Vir && v.tag() == AlgebraTag::Vir) return vir_bracket(u, v);
  return witt_bracket(u, v);
}

bool wf_membership(const VirElement& u, const FactoredPoly& f, bool allow_central) {
  if (!allow_central && !u.central_part().is_zero()) return false;
  return f.divides(u.field());
}

VirElement parse_vir_element(std::string_view s, AlgebraTag tag) {
  LaurentQ f;
  Rational c(0);
  for (const auto& term : text::parse_sum(s, "tz")) {
    int deg = 0, zdeg = 0;
    for (const auto& fac : term.factors) (fac.symbol == 't' ? deg : zdeg) += fac.exponent;
    if (zdeg == 0) {
      f.add_term(deg, term.coeff);
    } else if (zdeg == 1 && deg == 0) {
      if (tag != AlgebraTag::Vir) throw ParseError("central term outside Vir", "z", term.pos);
      c += term.coeff;
    } else {
      throw ParseError("z may only appear linearly and alone", "z", term.pos);
    }
  }
  return VirElement(std::move(f), c, tag);
}

std::string format_vir_element(const VirElement& u) {
  std::vector<std::pair<Rational, std::string>> terms;
  const auto& t = u.field().terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it)
    terms.emplace_back(it->second, it->first == 0 ? "" : text::power_string("t", it->first));
  terms.emplace_back(u.central_part(), "z");
  return text::format_sum(terms);
}

}  // namespace witt
