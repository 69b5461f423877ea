#include "witt/localfn.hpp"

#include <algorithm>
#include <map>

#include "witt/jet.hpp"

namespace witt {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Lowest basis index of the block at x: the algebra's own bound when the
// point is 0 and the algebra is cut at 0, otherwise -1.
int block_lo(AlgebraTag tag, const Rational& x) {
  if (x.is_zero() && (tag == AlgebraTag::Wgeq0 || tag == AlgebraTag::Wgeq1)) return lowest_index(tag);
  return -1;
}

}  // namespace

OnePointLocal::OnePointLocal(Rational x_, std::vector<Rational> c) : x(std::move(x_)), coeffs(std::move(c)) {
  trim(coeffs);
}

int OnePointLocal::order() const {
  if (coeffs.empty()) throw DomainError("the zero functional has no order");
  return static_cast<int>(coeffs.size()) - 1;
}

Rational OnePointLocal::dual_coeff(int i) const {
  if (i < -1 || i + 1 >= static_cast<int>(coeffs.size())) return Rational(0);
  return coeffs[static_cast<std::size_t>(i + 1)] * factorial(i + 1);
}

OnePointLocal OnePointLocal::from_dual(const Rational& x, const std::vector<Rational>& beta) {
  std::vector<Rational> c(beta.size());
  for (std::size_t k = 0; k < beta.size(); ++k) c[k] = beta[k] / factorial(static_cast<int>(k));
  return OnePointLocal(x, std::move(c));
}

LocalFunction::LocalFunction(AlgebraTag tag, std::vector<OnePointLocal> points, const Rational& central)
    : tag_(tag) {
  if (!central.is_zero()) throw DomainError("a local function vanishes on z; central value must be 0");
  std::map<Rational, std::vector<Rational>> merged;
  for (auto& p : points) {
    if (p.x.is_zero() && (tag == AlgebraTag::W || tag == AlgebraTag::Vir))
      throw DomainError("base point 0 is not allowed for tag " + to_string(tag));
    auto& acc = merged[p.x];
    if (acc.size() < p.coeffs.size()) acc.resize(p.coeffs.size(), Rational(0));
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) acc[k] += p.coeffs[k];
  }
  for (auto& [x, c] : merged) {
    if (x.is_zero()) {
      int lo = block_lo(tag, x);
      for (int k = 0; k <= lo && k < static_cast<int>(c.size()); ++k) c[static_cast<std::size_t>(k)] = Rational(0);
    }
    OnePointLocal p(x, std::move(c));
    if (!p.is_zero()) points_.push_back(std::move(p));
  }
}

Rational eval_one_point(const OnePointLocal& p, const LaurentQ& f) {
  if (p.is_zero() || f.is_zero()) return Rational(0);
  const int n = p.order();
  JetQ j = taylor_jet(f, p.x, n);
  Rational acc(0);
  for (int k = 0; k <= n; ++k)
    if (!p.coeffs[static_cast<std::size_t>(k)].is_zero()) acc += p.coeffs[static_cast<std::size_t>(k)] * factorial(k) * j[k];
  return acc;
}

Rational eval_local(const LocalFunction& chi, const VirElement& u) {
  if (u.tag() != chi.tag())
    throw DomainError("tag mismatch: functional on " + to_string(chi.tag()) + ", element of " + to_string(u.tag()));
  Rational acc(0);
  for (const auto& p : chi.points()) acc += eval_one_point(p, u.field());
  return acc;
}

Rational b_chi(const LocalFunction& chi, const VirElement& u, const VirElement& v) {
  return eval_local(chi, bracket(u, v));
}

int rank_b(const LocalFunction& chi) {
  int total = 0;
  for (const auto& p : chi.points()) {
    const int n = p.order();
    const int lo = block_lo(chi.tag(), p.x);
    const int size = n + 1 - lo + 1;
    if (size <= 0) continue;
    MatrixQ g = MatrixQ::Zero(size, size);
    for (int i = lo; i <= n + 1; ++i)
      for (int j = lo; j <= n + 1; ++j)
        if (i != j) g(i - lo, j - lo) = Rational(j - i) * p.dual_coeff(i + j);
    total += static_cast<int>(exact_rank(g));
  }
  return total;
}

std::vector<int> order_partition(const LocalFunction& chi) {
  if (chi.is_zero()) throw DomainError("the zero functional has no order partition");
  std::vector<int> parts;
  for (const auto& p : chi.points()) parts.push_back(p.order());
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

LaurentQ BasisWindow::field(int i) const {
  if (center.is_zero()) return LaurentQ::monomial(i + 1);
  if (i + 1 < 0) throw DomainError("window field (t - c)^k with k < 0 is not a Laurent polynomial");
  return shifted_power(center, i + 1);
}

void require_complete_window(const LocalFunction& chi, const BasisWindow& w) {
  const AlgebraTag tag = chi.tag();
  if (w.hi < w.lo) throw DomainError("empty window");
  if (!w.center.is_zero()) {
    if (tag == AlgebraTag::Wgeq0 || tag == AlgebraTag::Wgeq1)
      throw DomainError("windows for " + to_string(tag) + " must be centred at 0");
    if (w.lo < -1) throw DomainError("window below index -1 at a nonzero centre");
  } else if (w.lo < lowest_index(tag)) {
    throw DomainError("window index " + std::to_string(w.lo) + " is outside " + to_string(tag));
  }
  int need = 0;
  for (const auto& p : chi.points()) {
    need += p.order() + 2;
    if (p.x == w.center && w.lo > block_lo(tag, p.x))
      throw DomainError("window must start at index " + std::to_string(block_lo(tag, p.x)) +
                        " to see the point " + p.x.str());
  }
  if (w.size() < need)
    throw DomainError("window of size " + std::to_string(w.size()) + " is incomplete; need at least " +
                      std::to_string(need) + " consecutive fields");
}

MatrixQ gram_matrix(const LocalFunction& chi, const BasisWindow& w) {
  const int size = w.size();
  MatrixQ g = MatrixQ::Zero(size, size);
  std::vector<LaurentQ> fields;
  for (int i = w.lo; i <= w.hi; ++i) fields.push_back(w.field(i));
  for (const auto& p : chi.points()) {
    const int n = p.order();
    std::vector<JetQ> jets, djets;
    for (const auto& f : fields) {
      JetQ j = taylor_jet(f, p.x, n + 1);
      djets.push_back(j.derivative());
      jets.push_back(j.truncated(n));
    }
    for (int a = 0; a < size; ++a)
      for (int b = a + 1; b < size; ++b) {
        JetQ br = jets[a] * djets[b] - djets[a] * jets[b];
        Rational v(0);
        for (int k = 0; k <= n; ++k)
          if (!p.coeffs[static_cast<std::size_t>(k)].is_zero()) v += p.coeffs[static_cast<std::size_t>(k)] * factorial(k) * br[k];
        g(a, b) += v;
        g(b, a) -= v;
      }
  }
  return g;
}

std::vector<VirElement> isotropy_window(const LocalFunction& chi, const BasisWindow& w) {
  require_complete_window(chi, w);
  MatrixQ k = kernel_basis(gram_matrix(chi, w));
  std::vector<VirElement> out;
  for (Index c = 0; c < k.cols(); ++c) {
    LaurentQ f;
    for (Index r = 0; r < k.rows(); ++r)
      if (!k(r, c).is_zero()) f += w.field(w.lo + static_cast<int>(r)) * k(r, c);
    out.emplace_back(std::move(f), Rational(0), chi.tag());
  }
  return out;
}

std::optional<LaurentQ> recurrence_detect(const std::vector<Rational>& seq, int dmax) {
  if (dmax < 0) throw DomainError("dmax must be nonnegative");
  const std::size_t n = seq.size();
  if (n < static_cast<std::size_t>(2 * dmax + 2))
    throw DomainError("need at least " + std::to_string(2 * dmax + 2) + " terms, got " + std::to_string(n));

  // Berlekamp-Massey over Q: c is the connection polynomial 1 + c_1 x + ...
  std::vector<Rational> c{Rational(1)}, b{Rational(1)};
  int len = 0, shift = 1;
  Rational last(1);
  for (std::size_t i = 0; i < n; ++i) {
    Rational d = seq[i];
    for (int k = 1; k <= len && k < static_cast<int>(c.size()); ++k) d += c[static_cast<std::size_t>(k)] * seq[i - static_cast<std::size_t>(k)];
    if (d.is_zero()) {
      ++shift;
      continue;
    }
    std::vector<Rational> prev = c;
    Rational f = d / last;
    if (c.size() < b.size() + static_cast<std::size_t>(shift)) c.resize(b.size() + static_cast<std::size_t>(shift), Rational(0));
    for (std::size_t k = 0; k < b.size(); ++k) c[k + static_cast<std::size_t>(shift)] -= f * b[k];
    if (2 * len <= static_cast<int>(i)) {
      len = static_cast<int>(i) + 1 - len;
      b = std::move(prev);
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  if (len > dmax) return std::nullopt;

  // h(t) = t^len c(1/t)
  LaurentQ h;
  for (int k = 0; k <= len && k < static_cast<int>(c.size()); ++k) h.add_term(len - k, c[static_cast<std::size_t>(k)]);

  // certificate: h annihilates every window, and no relation of degree len-1
  // exists (the Hankel-type system below is inconsistent)
  for (std::size_t m = 0; m + static_cast<std::size_t>(len) < n; ++m) {
    Rational s(0);
    for (int k = 0; k <= len; ++k) s += h.coeff(k) * seq[m + static_cast<std::size_t>(k)];
    if (!s.is_zero()) throw std::logic_error("recurrence certificate failed");
  }
  if (len >= 1) {
    const int d = len - 1;
    const Index rows = static_cast<Index>(n) - d;
    MatrixQ a(rows, d);
    VectorQ rhs(rows);
    for (Index m = 0; m < rows; ++m) {
      for (int k = 0; k < d; ++k) a(m, k) = seq[static_cast<std::size_t>(m + k)];
      rhs(m) = -seq[static_cast<std::size_t>(m + d)];
    }
    bool smaller;
    if (d == 0) {
      smaller = true;
      for (Index m = 0; m < rows; ++m) smaller = smaller && rhs(m).is_zero();
    } else {
      smaller = solve_exact(a, rhs).has_value();
    }
    if (smaller) throw std::logic_error("recurrence minimality certificate failed");
  }
  return h;
}

}  // namespace witt
