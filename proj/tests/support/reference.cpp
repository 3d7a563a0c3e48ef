#include "reference.hpp"

#include <sstream>
#include <stdexcept>

namespace ref {

const std::vector<Algebra>& catalog() {
  static const std::vector<Algebra> algebras = {
      {"n3_1", 3, {{{3, 2}, {{1, -1}}}}},
      {"n4_1", 4, {{{4, 2}, {{1, -1}}}, {{4, 3}, {{2, -1}}}}},
      {"n5_1", 5, {{{5, 3}, {{1, -1}}}, {{5, 4}, {{2, -1}}}}},
      {"n5_2", 5, {{{4, 3}, {{2, -1}}}, {{5, 3}, {{1, -1}}}, {{5, 4}, {{3, -1}}}}},
      {"n5_3", 5, {{{4, 2}, {{1, -1}}}, {{5, 3}, {{1, -1}}}}},
      {"n5_4", 5, {{{4, 3}, {{1, -1}}}, {{5, 2}, {{1, -1}}}, {{5, 4}, {{2, -1}}}}},
      {"n5_5", 5, {{{5, 2}, {{1, -1}}}, {{5, 3}, {{2, -1}}}, {{5, 4}, {{3, -1}}}}},
      {"n5_6", 5,
       {{{4, 3}, {{1, -1}}}, {{5, 2}, {{1, -1}}}, {{5, 3}, {{2, -1}}}, {{5, 4}, {{3, -1}}}}},
  };
  return algebras;
}

const Algebra& algebra(const std::string& name) {
  for (const auto& a : catalog()) {
    if (a.name == name) return a;
  }
  throw std::out_of_range("no reference algebra " + name);
}

namespace {

void add_into(Result& out, const Result& in, const mpq_class& scale) {
  for (const auto& [m, c] : in) {
    mpq_class& slot = out[m];
    slot += scale * c;
    if (slot == 0) out.erase(m);
  }
}

Result go(const Algebra& alg, const Word& w, std::map<Word, Result>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  Result out;
  std::size_t pos = w.size();
  for (std::size_t p = w.size(); p-- > 1;) {
    if (w[p - 1] > w[p]) {
      pos = p - 1;
      break;
    }
  }
  if (pos == w.size()) {
    Exps e(static_cast<std::size_t>(alg.dim), 0);
    for (int g : w) ++e[static_cast<std::size_t>(g - 1)];
    out[e] = 1;
  } else {
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    add_into(out, go(alg, swapped, memo), 1);
    auto it = alg.brackets.find({w[pos], w[pos + 1]});
    if (it != alg.brackets.end()) {
      for (const auto& [g, c] : it->second) {
        Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        shorter.push_back(g);
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
        add_into(out, go(alg, shorter, memo), mpq_class(c));
      }
    }
  }
  memo.emplace(w, out);
  return out;
}

}  // namespace

Result straighten(const Algebra& alg, const Word& word) {
  std::map<Word, Result> memo;
  return go(alg, word, memo);
}

Result product(const Algebra& alg, const Exps& left, const Exps& right) {
  Word w;
  for (const Exps* side : {&left, &right}) {
    for (std::size_t i = 0; i < side->size(); ++i) w.insert(w.end(), (*side)[i], static_cast<int>(i + 1));
  }
  return straighten(alg, w);
}

Result from_polynomial(const uea::Polynomial& p) {
  Result r;
  for (const auto& [m, c] : p.terms()) {
    r[Exps(m.exponents().begin(), m.exponents().end())] = mpq_class(c.to_string());
  }
  return r;
}

std::string to_string(const Result& r) {
  std::ostringstream os;
  os << '{';
  for (const auto& [m, c] : r) {
    os << " (";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << "):" << c;
  }
  os << " }";
  return os.str();
}

}  // namespace ref
