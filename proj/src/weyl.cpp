#include "witt/weyl.hpp"

#include <algorithm>
#include <deque>

#include "witt/text.hpp"

namespace witt {

namespace {

// c (c - 1) ... (c - j + 1)
Rational falling(int c, int j) {
  Rational r(1);
  for (int m = 0; m < j; ++m) r *= Rational(c - m);
  return r;
}

}  // namespace

WeylElement WeylElement::monomial(int i, int k, const Rational& c) {
  if (k < 0) throw DomainError("negative power of d");
  WeylElement w;
  w.add_term(i, k, c);
  return w;
}

WeylElement WeylElement::from_field(const LaurentQ& f, const LaurentQ& c) {
  WeylElement w;
  for (const auto& [i, a] : f.terms()) w.add_term(i, 1, a);
  for (const auto& [i, a] : c.terms()) w.add_term(i, 0, a);
  return w;
}

void WeylElement::add_term(int i, int k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(Key{i, k}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  WeylElement r;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const auto [i, bb] = ka;
      const auto [c, k] = kb;
      const Rational coeff = ca * cb;
      for (int j = 0; j <= bb; ++j) {
        if (c >= 0 && j > c) break;
        r.add_term(i + c - j, bb - j + k, coeff * binomial(bb, j) * falling(c, j));
      }
    }
  return r;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return weyl_mul(a, b) - weyl_mul(b, a); }

WeylElement pi_gamma(const VirElement& u, const Rational& gamma) {
  if (!u.central_part().is_zero()) throw DomainError("pi_gamma is defined on W; the central part must be 0");
  return WeylElement::from_field(u.field(), derivative(u.field()) * gamma);
}

WeylElement pi_gamma_word(const std::vector<VirElement>& word, const Rational& gamma) {
  WeylElement r(Rational(1));
  for (const auto& u : word) r = weyl_mul(r, pi_gamma(u, gamma));
  return r;
}

std::map<std::pair<int, int>, Rational> to_anti_normal(const WeylElement& a) {
  // t^i d^k = sum_j (-1)^j C(k, j) (i)_j d^{k-j} t^{i-j}
  std::map<std::pair<int, int>, Rational> out;
  for (const auto& [key, c] : a.terms()) {
    const auto [i, k] = key;
    for (int j = 0; j <= k; ++j) {
      if (i >= 0 && j > i) break;
      Rational v = c * binomial(k, j) * falling(i, j);
      if (j % 2 == 1) v = -v;
      Rational& slot = out[{k - j, i - j}];
      slot += v;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

WeylElement from_anti_normal(const std::map<std::pair<int, int>, Rational>& terms) {
  WeylElement r;
  for (const auto& [key, c] : terms)
    r += weyl_mul(WeylElement::monomial(0, key.first), WeylElement::monomial(key.second, 0)) * c;
  return r;
}

bool pi_image_test(const WeylElement& a, PiImage which) {
  if (which == PiImage::Pi0) {
    for (const auto& [key, c] : a.terms())
      if (key.second == 0 && key.first != 0) return false;
    return true;
  }
  for (const auto& [key, c] : to_anti_normal(a))
    if (key.first == 0 && key.second != 0) return false;
  return true;
}

BPoly weyl_symbol(const WeylElement& a) {
  BPoly p;
  for (const auto& [key, c] : a.terms()) p.add_term(key.second, key.first, c);
  return p;
}

MatrixQ pi_kernel(const std::vector<std::vector<VirElement>>& words, const Rational& gamma) {
  std::vector<WeylElement> images;
  std::map<WeylElement::Key, Index> rows;
  for (const auto& w : words) {
    images.push_back(pi_gamma_word(w, gamma));
    for (const auto& [key, c] : images.back().terms()) rows.try_emplace(key, 0);
  }
  Index r = 0;
  for (auto& [key, idx] : rows) idx = r++;
  MatrixQ m = MatrixQ::Zero(r, static_cast<Index>(words.size()));
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [key, v] : images[c].terms()) m(rows.at(key), static_cast<Index>(c)) = v;
  if (r == 0) return MatrixQ::Identity(static_cast<Index>(words.size()), static_cast<Index>(words.size()));
  return kernel_basis(m);
}

NVector::NVector(Rational x_, std::vector<Rational> c) : x(std::move(x_)), coeffs(std::move(c)) {
  if (x.is_zero()) throw DomainError("N_x needs x != 0");
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

NVector NVector::delta(const Rational& x, int k) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
  c.back() = Rational(1);
  return NVector(x, std::move(c));
}

NVector operator+(const NVector& a, const NVector& b) {
  if (a.x != b.x) throw DomainError("adding vectors of N_x at different points");
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) c[k] += a.coeffs[k];
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) c[k] += b.coeffs[k];
  return NVector(a.x, std::move(c));
}

NVector operator*(const Rational& s, const NVector& v) {
  std::vector<Rational> c = v.coeffs;
  for (auto& a : c) a *= s;
  return NVector(v.x, std::move(c));
}

namespace {

// Principal part at x: m -> coefficient of (t - x)^-m, m >= 1.
using Principal = std::map<int, Rational>;

Principal to_principal(const NVector& v) {
  Principal p;
  for (std::size_t k = 0; k < v.coeffs.size(); ++k) {
    if (v.coeffs[k].is_zero()) continue;
    // d^k delta_x = (-1)^k k! (t - x)^{-k-1}
    Rational c = v.coeffs[k] * factorial(static_cast<int>(k));
    if (k % 2 == 1) c = -c;
    p[static_cast<int>(k) + 1] += c;
  }
  return p;
}

NVector from_principal(const Rational& x, const Principal& p) {
  std::vector<Rational> c;
  for (const auto& [m, a] : p) {
    if (a.is_zero()) continue;
    const int k = m - 1;
    if (static_cast<int>(c.size()) <= k) c.resize(static_cast<std::size_t>(k) + 1, Rational(0));
    Rational v = a / factorial(k);
    c[static_cast<std::size_t>(k)] = k % 2 == 1 ? -v : v;
  }
  return NVector(x, std::move(c));
}

}  // namespace

NVector weyl_act_N(const WeylElement& a, const NVector& v) {
  const Rational& x = v.x;
  Principal out;
  const Principal p = to_principal(v);
  for (const auto& [key, c] : a.terms()) {
    const auto [i, k] = key;
    Principal q = p;
    for (int s = 0; s < k; ++s) {
      Principal next;
      for (const auto& [m, b] : q) next[m + 1] += b * Rational(-m);
      q = std::move(next);
    }
    // t^i (t - x)^-m = sum_{j < m} C(i, j) x^{i-j} (t - x)^{j-m} mod k[t, t^-1]
    for (const auto& [m, b] : q) {
      if (b.is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        Rational bin = binomial(i, j);
        if (bin.is_zero()) continue;
        out[m - j] += c * b * bin * pow(x, i - j);
      }
    }
  }
  return from_principal(x, out);
}

NVector w_act_N_gamma(const VirElement& u, const NVector& v, const Rational& gamma) {
  if (u.tag() == AlgebraTag::Vir && !u.central_part().is_zero())
    throw DomainError("N_x^gamma is a W-module; the central part must be 0");
  return weyl_act_N(pi_gamma(VirElement(u.field(), AlgebraTag::W), gamma), v);
}

SpanReport cyclic_span(const NVector& v, const Rational& gamma, int bound) {
  if (v.is_zero()) throw DomainError("cyclic_span needs v != 0");
  if (bound < 0) throw DomainError("bound must be nonnegative");
  if (v.order() > bound) throw DomainError("start vector lies outside the slice k <= bound");
  const Index dim = bound + 1;
  auto as_vector = [&](const NVector& w) {
    VectorQ c = VectorQ::Zero(dim);
    for (std::size_t k = 0; k < w.coeffs.size(); ++k) c(static_cast<Index>(k)) = w.coeffs[k];
    return c;
  };
  MatrixQ basis(dim, 0);
  auto try_add = [&](const NVector& w) {
    MatrixQ next(dim, basis.cols() + 1);
    next << basis, as_vector(w);
    if (exact_rank(next) == next.cols()) {
      basis = std::move(next);
      return true;
    }
    return false;
  };
  std::vector<NVector> frontier{v};
  try_add(v);
  for (int level = 0; level < bound && !frontier.empty(); ++level) {
    std::vector<NVector> fresh;
    for (const auto& w : frontier)
      for (int j = 0; j <= w.order() + 1; ++j) {
        NVector r = w_act_N_gamma(VirElement(shifted_power(v.x, j), AlgebraTag::W), w, gamma);
        if (!r.is_zero() && r.order() <= bound && try_add(r)) fresh.push_back(std::move(r));
      }
    frontier = std::move(fresh);
  }
  SpanReport rep;
  rep.dimension = static_cast<int>(basis.cols());
  MatrixQ delta = MatrixQ::Zero(dim, 1);
  delta(0, 0) = Rational(1);
  rep.delta_reached = in_column_span(basis, delta);
  return rep;
}

WeylElement parse_weyl(std::string_view s) {
  WeylElement r;
  for (const auto& term : text::parse_sum(s, "td")) {
    WeylElement m(term.coeff);
    for (const auto& f : term.factors) {
      if (f.symbol == 'd' && f.exponent < 0) throw ParseError("negative power of d", "d^" + std::to_string(f.exponent), f.pos);
      m = weyl_mul(m, f.symbol == 't' ? WeylElement::monomial(f.exponent, 0) : WeylElement::monomial(0, f.exponent));
    }
    r += m;
  }
  return r;
}

std::string format_weyl(const WeylElement& a) {
  std::vector<std::pair<WeylElement::Key, Rational>> order(a.terms().begin(), a.terms().end());
  std::sort(order.begin(), order.end(), [](const auto& u, const auto& v) {
    if (u.first.second != v.first.second) return u.first.second > v.first.second;
    return u.first.first > v.first.first;
  });
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [key, c] : order) {
    std::string mono;
    if (key.first != 0) mono = text::power_string("t", key.first);
    if (key.second != 0) mono += (mono.empty() ? "" : "*") + text::power_string("d", key.second);
    terms.emplace_back(c, mono);
  }
  return text::format_sum(terms);
}

}  // namespace witt
