#include "uea/straighten.hpp"

#include <iterator>
#include <map>
#include <string>

#include "uea/error.hpp"

namespace uea {

namespace {

// Letters are packed into a std::string so short words stay inline.
struct WordKey {
  std::size_t length = 0;
  std::size_t inversions = 0;
  std::string letters;

  friend auto operator<=>(const WordKey&, const WordKey&) = default;
};

std::size_t count_inversions(const std::string& w) {
  std::size_t inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) inv += (w[a] > w[b]) ? 1 : 0;
  }
  return inv;
}

WordKey make_key(std::string letters) {
  WordKey k;
  k.length = letters.size();
  k.inversions = count_inversions(letters);
  k.letters = std::move(letters);
  return k;
}

void accumulate(std::map<WordKey, Rational>& work, WordKey key, const Rational& coeff) {
  auto [it, inserted] = work.try_emplace(std::move(key), coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) work.erase(it);
}

// Position p of a pair w[p] > w[p+1], or npos when w is already ordered.
std::size_t find_inversion(const std::string& w, RewriteStrategy strategy) {
  if (w.size() < 2) return std::string::npos;
  if (strategy == RewriteStrategy::leftmost) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) return p;
    }
  } else {
    for (std::size_t p = w.size() - 1; p-- > 0;) {
      if (w[p] > w[p + 1]) return p;
    }
  }
  return std::string::npos;
}

Monomial sorted_word_to_monomial(const std::string& w, std::size_t dim) {
  Monomial m(dim);
  for (char ch : w) ++m[static_cast<std::size_t>(ch - 1)];
  return m;
}

std::string pack(const LieAlgebraSpec& spec, const Word& word) {
  std::string out;
  out.reserve(word.size());
  for (int g : word) {
    if (g < 1 || g > spec.dim()) {
      throw RangeError("letter x" + std::to_string(g) + " out of range for " + spec.name());
    }
    out.push_back(static_cast<char>(g));
  }
  return out;
}

void require_well_formed(const LieAlgebraSpec& spec) {
  if (!spec.well_formed()) {
    throw Error("spec '" + spec.name() + "' is malformed: " + spec.shape_errors().front());
  }
  if (spec.dim() > 120) throw RangeError("dimension too large for the rewriting engine");
}

}  // namespace

Polynomial straighten_words(const LieAlgebraSpec& spec,
                            const std::vector<std::pair<Word, Rational>>& combination,
                            RewriteStrategy strategy) {
  require_well_formed(spec);
  const auto dim = static_cast<std::size_t>(spec.dim());

  // Every rewrite produces strictly smaller keys (shorter, or same length with
  // one fewer inversion), so popping the largest key sees each word once with
  // all of its contributions already merged.
  std::map<WordKey, Rational> work;
  for (const auto& [word, coeff] : combination) {
    if (!coeff.is_zero()) accumulate(work, make_key(pack(spec, word)), coeff);
  }

  Polynomial result(dim);
  while (!work.empty()) {
    auto node = work.extract(std::prev(work.end()));
    const WordKey& key = node.key();
    const Rational& coeff = node.mapped();
    const std::string& w = key.letters;

    const std::size_t p = find_inversion(w, strategy);
    if (p == std::string::npos) {
      result.add_term(sorted_word_to_monomial(w, dim), coeff);
      continue;
    }

    std::string swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    accumulate(work, WordKey{key.length, key.inversions - 1, std::move(swapped)}, coeff);

    for (const auto& t : spec.bracket_terms(w[p], w[p + 1])) {
      std::string shorter;
      shorter.reserve(w.size() - 1);
      shorter.append(w, 0, p);
      shorter.push_back(static_cast<char>(t.gen));
      shorter.append(w, p + 2, std::string::npos);
      accumulate(work, make_key(std::move(shorter)), coeff * t.coeff);
    }
  }
  return result;
}

Polynomial straighten_word(const LieAlgebraSpec& spec, const Word& word, RewriteStrategy strategy) {
  return straighten_words(spec, {{word, Rational(1)}}, strategy);
}

Word to_word(const Monomial& m) {
  Word w;
  for (std::size_t i = 0; i < m.dim(); ++i) w.insert(w.end(), m[i], static_cast<int>(i + 1));
  return w;
}

Polynomial oracle_product(const LieAlgebraSpec& spec, const Monomial& left, const Monomial& right) {
  const auto dim = static_cast<std::size_t>(spec.dim());
  if (left.dim() != dim || right.dim() != dim) {
    throw DimensionMismatch("monomial dimension does not match " + spec.name());
  }
  Word w = to_word(left);
  const Word r = to_word(right);
  w.insert(w.end(), r.begin(), r.end());
  return straighten_word(spec, w);
}

Polynomial oracle_product(const LieAlgebraSpec& spec, const Polynomial& left,
                          const Polynomial& right) {
  const auto dim = static_cast<std::size_t>(spec.dim());
  if (left.dim() != dim || right.dim() != dim) {
    throw DimensionMismatch("polynomial dimension does not match " + spec.name());
  }
  std::vector<std::pair<Word, Rational>> combination;
  for (const auto& [ml, cl] : left.terms()) {
    for (const auto& [mr, cr] : right.terms()) {
      Word w = to_word(ml);
      const Word r = to_word(mr);
      w.insert(w.end(), r.begin(), r.end());
      combination.emplace_back(std::move(w), cl * cr);
    }
  }
  return straighten_words(spec, combination);
}

}  // namespace uea
