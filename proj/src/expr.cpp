#include "uea/expr.hpp"

#include <cctype>
#include <charconv>

#include "uea/error.hpp"

namespace uea {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int dim) : s_(text), dim_(dim) {}

  ExprAst parse() {
    ExprAst ast;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      ExprTerm term = parse_term();
      if (negative) term.coeff = -term.coeff;
      ast.terms.push_back(std::move(term));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+', '-' or end of input");
      negative = peek() == '-';
      ++pos_;
    }
    return ast;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  unsigned long parse_uint(const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    unsigned long v = 0;
    const char* first = s_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
    if (ec != std::errc{} || v > 0xffffffffUL) fail(std::string(what) + " too large");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  ExprTerm parse_term() {
    skip_ws();
    ExprTerm term;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const long num = static_cast<long>(parse_uint("integer"));
      long den = 1;
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = static_cast<long>(parse_uint("denominator"));
        if (den == 0) throw ParseError("zero denominator", at);
      }
      term.coeff = Rational(num, den);
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x') fail("expected factor after '*'");
      }
    } else if (peek() != 'x') {
      fail("expected coefficient or factor");
    }
    for (;;) {
      skip_ws();
      if (peek() != 'x') break;
      term.factors.push_back(parse_factor());
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x') fail("expected factor after '*'");
      }
    }
    return term;
  }

  ExprFactor parse_factor() {
    ++pos_;  // 'x'
    const std::size_t at = pos_;
    const unsigned long gen = parse_uint("generator index");
    if (gen < 1 || gen > static_cast<unsigned long>(dim_)) {
      throw RangeError("generator x" + std::to_string(gen) + " at offset " + std::to_string(at) +
                       " is outside 1.." + std::to_string(dim_));
    }
    ExprFactor f{static_cast<int>(gen), 1};
    if (peek() == '^') {
      ++pos_;
      f.exp = static_cast<unsigned>(parse_uint("exponent"));
    }
    return f;
  }

  std::string_view s_;
  int dim_;
  std::size_t pos_ = 0;
};

std::string term_body(const ExprTerm& t, const Rational& magnitude) {
  std::string out;
  if (!magnitude.is_one() || t.factors.empty()) {
    out = magnitude.to_string();
    if (!t.factors.empty()) out += '*';
  }
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (i) out += '*';
    out += 'x' + std::to_string(t.factors[i].gen);
    if (t.factors[i].exp != 1) out += '^' + std::to_string(t.factors[i].exp);
  }
  return out;
}

}  // namespace

ExprAst parse_expr(std::string_view text, int dim) { return Parser(text, dim).parse(); }

std::string to_string(const ExprAst& ast) {
  std::string out;
  for (std::size_t i = 0; i < ast.terms.size(); ++i) {
    const ExprTerm& t = ast.terms[i];
    const bool neg = t.coeff.sign() < 0;
    if (i == 0) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_body(t, neg ? -t.coeff : t.coeff);
  }
  return out;
}

std::vector<std::pair<Word, Rational>> to_words(const ExprAst& ast) {
  std::vector<std::pair<Word, Rational>> out;
  for (const auto& t : ast.terms) {
    Word w;
    for (const auto& f : t.factors) {
      if (w.size() + f.exp > kMaxWordLength) {
        throw RangeError("expression term longer than " + std::to_string(kMaxWordLength) +
                         " letters");
      }
      w.insert(w.end(), f.exp, f.gen);
    }
    out.emplace_back(std::move(w), t.coeff);
  }
  return out;
}

Polynomial to_polynomial(const LieAlgebraSpec& spec, const ExprAst& ast) {
  return straighten_words(spec, to_words(ast));
}

}  // namespace uea
