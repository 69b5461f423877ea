#include "witt/text.hpp"

#include <algorithm>
#include <cctype>
#include <climits>

namespace witt {
namespace text {

namespace {

class Lexer {
 public:
  Lexer(std::string_view s, std::string_view symbols, std::string_view indexed)
      : s_(s), symbols_(symbols), indexed_(indexed) {}

  std::vector<Term> run() {
    std::vector<Term> out;
    skip();
    if (at_end()) fail("empty expression", 0);
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++i_;
    }
    while (true) {
      Term t = term();
      if (sign < 0) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      skip();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'", i_);
      sign = c == '-' ? -1 : 1;
      ++i_;
    }
    return out;
  }

 private:
  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
    std::size_t end = pos;
    while (end < s_.size() && !std::isspace(static_cast<unsigned char>(s_[end])) && s_[end] != '+' &&
           s_[end] != '*' && (end == pos || s_[end] != '-'))
      ++end;
    std::string tok = pos < s_.size() ? std::string(s_.substr(pos, std::max<std::size_t>(end - pos, 1))) : "<end>";
    throw ParseError(msg, tok, pos);
  }

  long integer(bool allow_sign) {
    skip();
    std::size_t start = i_;
    bool neg = false;
    if (allow_sign && !at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++i_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer", start);
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > INT_MAX) fail("integer out of range", start);
      ++i_;
    }
    return neg ? -v : v;
  }

  Term term() {
    skip();
    Term t;
    t.pos = i_;
    while (true) {
      skip();
      if (at_end()) fail("expected a factor", i_);
      std::size_t start = i_;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t b = i_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
        if (!at_end() && peek() == '/') {
          ++i_;
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed rational", start);
          while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
        }
        t.coeff *= Rational::parse(s_.substr(b, i_ - b));
      } else if (symbols_.find(c) != std::string_view::npos) {
        Factor f;
        f.symbol = c;
        f.pos = start;
        ++i_;
        if (indexed_.find(c) != std::string_view::npos) {
          if (at_end() || peek() != '_') fail("expected subscript after symbol", start);
          ++i_;
          f.has_index = true;
          f.index = static_cast<int>(integer(true));
        }
        skip();
        if (!at_end() && peek() == '^') {
          ++i_;
          f.exponent = static_cast<int>(integer(true));
        }
        t.factors.push_back(f);
      } else {
        fail("unexpected token", start);
      }
      skip();
      if (!at_end() && peek() == '*') {
        ++i_;
        continue;
      }
      break;
    }
    return t;
  }

  std::string_view s_;
  std::string_view symbols_;
  std::string_view indexed_;
  std::size_t i_ = 0;
};

}  // namespace

std::vector<Term> parse_sum(std::string_view s, std::string_view symbols, std::string_view indexed) {
  return Lexer(s, symbols, indexed).run();
}

std::string power_string(std::string_view base, int e) {
  std::string r(base);
  if (e != 1) r += "^" + std::to_string(e);
  return r;
}

std::string format_sum(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [c, mono] : terms) {
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    std::string body;
    if (mono.empty())
      body = mag.str();
    else if (mag == Rational(1))
      body = mono;
    else
      body = mag.str() + "*" + mono;
    if (out.empty())
      out = (c.sign() < 0 ? "-" : "") + body;
    else
      out += (c.sign() < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace text

LaurentQ parse_laurent(std::string_view s) {
  LaurentQ p;
  for (const auto& term : text::parse_sum(s, "t")) {
    int deg = 0;
    for (const auto& f : term.factors) deg += f.exponent;
    p.add_term(deg, term.coeff);
  }
  return p;
}

std::string format_laurent(const LaurentQ& p) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.emplace_back(it->second, it->first == 0 ? "" : text::power_string("t", it->first));
  return text::format_sum(terms);
}

std::vector<Rational> parse_rational_list(std::string_view s) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::size_t end = comma == std::string_view::npos ? s.size() : comma;
    std::string_view piece = s.substr(start, end - start);
    try {
      out.push_back(Rational::parse(piece));
    } catch (const ParseError&) {
      throw ParseError("malformed sequence entry", std::string(piece), start);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace witt
