#include "witt/sympoisson.hpp"

#include <algorithm>

#include "witt/text.hpp"

namespace witt {

bool operator<(const SymMonomial& a, const SymMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.e != b.e) return a.e < b.e;
  return a.z < b.z;
}

SymMonomial operator*(const SymMonomial& a, const SymMonomial& b) {
  SymMonomial r;
  r.e.reserve(a.e.size() + b.e.size());
  std::merge(a.e.begin(), a.e.end(), b.e.begin(), b.e.end(), std::back_inserter(r.e));
  r.z = a.z + b.z;
  return r;
}

SymPoly SymPoly::gen(int i) {
  SymPoly p;
  p.add_term(SymMonomial{{i}, 0}, Rational(1));
  return p;
}

SymPoly SymPoly::z() {
  SymPoly p;
  p.add_term(SymMonomial{{}, 1}, Rational(1));
  return p;
}

void SymPoly::add_term(const SymMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

SymPoly to_sympoly(const VirElement& u) {
  SymPoly p;
  for (const auto& [k, c] : u.field().terms()) p.add_term(SymMonomial{{k - 1}, 0}, c);
  p.add_term(SymMonomial{{}, 1}, u.central_part());
  return p;
}

namespace {

SymPoly generator_bracket(int i, int j, AlgebraTag tag) {
  SymPoly r = SymPoly::gen(i + j) * Rational(j - i);
  if (tag == AlgebraTag::Vir) {
    Rational c = virasoro_cocycle(LaurentQ::monomial(i + 1), LaurentQ::monomial(j + 1));
    r += SymPoly::z() * c;
  }
  return r;
}

SymMonomial drop_at(const SymMonomial& m, std::size_t pos) {
  SymMonomial r = m;
  r.e.erase(r.e.begin() + static_cast<std::ptrdiff_t>(pos));
  return r;
}

}  // namespace

SymPoly poisson_bracket(const SymPoly& p, const SymPoly& q, AlgebraTag tag) {
  SymPoly r;
  for (const auto& [ma, ca] : p.terms())
    for (const auto& [mb, cb] : q.terms()) {
      for (std::size_t a = 0; a < ma.e.size(); ++a)
        for (std::size_t b = 0; b < mb.e.size(); ++b) {
          SymMonomial rest = drop_at(ma, a) * drop_at(mb, b);
          SymPoly rest_poly;
          rest_poly.add_term(rest, ca * cb);
          r += generator_bracket(ma.e[a], mb.e[b], tag) * rest_poly;
        }
    }
  return r;
}

Rational ev_chi(const SymPoly& p, const LocalFunction& chi) {
  std::map<int, Rational> cache;
  auto value = [&](int i) -> const Rational& {
    auto it = cache.find(i);
    if (it != cache.end()) return it->second;
    if (!admits_index(chi.tag(), i))
      throw DomainError("generator e_" + std::to_string(i) + " is not in " + to_string(chi.tag()));
    Rational v(0);
    for (const auto& pt : chi.points()) v += eval_one_point(pt, LaurentQ::monomial(i + 1));
    return cache.emplace(i, v).first->second;
  };
  Rational acc(0);
  for (const auto& [m, c] : p.terms()) {
    if (m.z > 0) {
      if (chi.tag() != AlgebraTag::Vir) throw DomainError("z is not in " + to_string(chi.tag()));
      continue;  // chi(z) = 0
    }
    Rational term = c;
    for (int i : m.e) {
      term *= value(i);
      if (term.is_zero()) break;
    }
    acc += term;
  }
  return acc;
}

namespace {

SymPoly laplace(const std::vector<std::vector<SymPoly>>& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (row == m.size()) return SymPoly(Rational(1));
  SymPoly r;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::size_t c = cols[k];
    if (!m[row][c].is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      SymPoly minor = laplace(m, row + 1, cols);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      SymPoly term = m[row][c] * minor;
      if (sign > 0)
        r += term;
      else
        r -= term;
    }
    sign = -sign;
  }
  return r;
}

}  // namespace

SymPoly det_D(const std::vector<VirElement>& us, const std::vector<VirElement>& vs) {
  if (us.size() != vs.size()) throw DomainError("det_D needs equally many u's and v's");
  if (us.empty()) throw DomainError("det_D needs n >= 1");
  std::vector<std::vector<SymPoly>> m(us.size(), std::vector<SymPoly>(vs.size()));
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) m[i][j] = to_sympoly(bracket(us[i], vs[j]));
  std::vector<std::size_t> cols(vs.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return laplace(m, 0, cols);
}

namespace {

bool next_combination(std::vector<Index>& c, Index n) {
  const Index k = static_cast<Index>(c.size());
  for (Index i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (Index j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool i_n_vanishes_at(const LocalFunction& chi, int n, const BasisWindow& window) {
  if (n < 0) throw DomainError("n must be nonnegative");
  require_complete_window(chi, window);
  const Index size = window.size();
  const Index k = n + 1;
  if (k > size) return true;
  // ev_chi is a ring map, so ev_chi(D) is the minor of the Gram matrix.
  // Repeated fields give vanishing minors and reordering only flips signs,
  // so increasing index tuples suffice.
  MatrixQ g = gram_matrix(chi, window);
  std::vector<Index> rows(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = i;
  do {
    std::vector<Index> cols(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
    do {
      MatrixQ minor(k, k);
      for (Index a = 0; a < k; ++a)
        for (Index b = 0; b < k; ++b) minor(a, b) = g(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]);
      if (!exact_determinant(minor).is_zero()) return false;
    } while (next_combination(cols, size));
  } while (next_combination(rows, size));
  return true;
}

BPoly BPoly::monomial(int ypow, int tpow, const Rational& c) {
  BPoly p;
  p.add_term(ypow, tpow, c);
  return p;
}

void BPoly::add_term(int ypow, int tpow, const Rational& c) {
  if (ypow < 0) throw DomainError("negative power of y");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{ypow, tpow}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational BPoly::evaluate(const Rational& t, const Rational& y) const {
  Rational acc(0);
  for (const auto& [k, c] : terms_) {
    if (k.second < 0 && t.is_zero()) throw DomainError("evaluating t^-1 at t = 0");
    acc += c * pow(y, k.first) * pow(t, k.second);
  }
  return acc;
}

BPoly& BPoly::operator+=(const BPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BPoly& BPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  BPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BPoly d_dy(const BPoly& p) {
  BPoly r;
  for (const auto& [k, c] : p.terms())
    if (k.first > 0) r.add_term(k.first - 1, k.second, c * Rational(k.first));
  return r;
}

BPoly d_dt(const BPoly& p) {
  BPoly r;
  for (const auto& [k, c] : p.terms())
    if (k.second != 0) r.add_term(k.first, k.second - 1, c * Rational(k.second));
  return r;
}

BPoly poisson_bracket(const BPoly& f, const BPoly& g) { return d_dy(f) * d_dt(g) - d_dt(f) * d_dy(g); }

BPoly p_gamma_map(const SymPoly& p, const Rational& gamma) {
  std::map<int, BPoly> images;
  auto image = [&](int i) -> const BPoly& {
    auto it = images.find(i);
    if (it != images.end()) return it->second;
    BPoly b = BPoly::monomial(1, i + 1);
    b.add_term(0, i, gamma * Rational(i + 1));
    return images.emplace(i, std::move(b)).first->second;
  };
  BPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.z > 0) continue;
    BPoly term(c);
    for (int i : m.e) term = term * image(i);
    r += term;
  }
  return r;
}

bool j_gamma_member(const SymPoly& p, const Rational& gamma) { return p_gamma_map(p, gamma).is_zero(); }

SymPoly parse_sympoly(std::string_view s) {
  SymPoly r;
  for (const auto& term : text::parse_sum(s, "ez", "e")) {
    SymMonomial m;
    for (const auto& f : term.factors) {
      if (f.exponent < 0) throw ParseError("negative exponent in a symmetric-algebra monomial", "^", f.pos);
      for (int k = 0; k < f.exponent; ++k) {
        if (f.symbol == 'e')
          m.e.push_back(f.index);
        else
          ++m.z;
      }
    }
    std::sort(m.e.begin(), m.e.end());
    r.add_term(m, term.coeff);
  }
  return r;
}

std::string format_sympoly(const SymPoly& p) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [m, c] : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < m.e.size();) {
      std::size_t j = i;
      while (j < m.e.size() && m.e[j] == m.e[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += text::power_string("e_" + std::to_string(m.e[i]), static_cast<int>(j - i));
      i = j;
    }
    if (m.z > 0) {
      if (!mono.empty()) mono += "*";
      mono += text::power_string("z", m.z);
    }
    terms.emplace_back(c, mono);
  }
  return text::format_sum(terms);
}

std::string format_bpoly(const BPoly& p) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mono;
    if (k.second != 0) mono = text::power_string("t", k.second);
    if (k.first != 0) mono += (mono.empty() ? "" : "*") + text::power_string("y", k.first);
    terms.emplace_back(c, mono);
  }
  return text::format_sum(terms);
}

}  // namespace witt
