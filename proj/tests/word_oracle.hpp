#pragma once

// Test-only oracle: multiplies basis monomials by free-word rewriting from
// the defining relations, independently of the structure-constant table.
// Letters: v w c d; 'C' = c*, 'E' = d*. Each rule is an identity in the
// algebra, and the irreducible words are exactly the basis monomials, so
// whatever rewriting order is used the result is the normal form. The rule
// dE -> v - cC strictly reduces the d/E letter count, everything else
// shortens the word, so rewriting terminates.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacobson/algebra.hpp"

namespace jacobson::testing {

inline bool is_vertex(char x) { return x == 'v' || x == 'w'; }

inline char source_of(char x) {
  switch (x) {
    case 'v':
    case 'c':
    case 'C':
    case 'd':
      return 'v';
    case 'w':
    case 'E':
      return 'w';
  }
  throw std::logic_error("bad letter");
}

inline char range_of(char x) {
  switch (x) {
    case 'v':
    case 'c':
    case 'C':
    case 'E':
      return 'v';
    case 'w':
    case 'd':
      return 'w';
  }
  throw std::logic_error("bad letter");
}

// Applies one rewrite at the leftmost reducible position. Returns false when
// the word is irreducible; otherwise fills `out` with the signed replacement
// words (empty when the word annihilates).
inline bool rewrite_step(const std::string& word, std::vector<std::pair<int, std::string>>& out) {
  for (size_t k = 0; k + 1 < word.size(); ++k) {
    const char x = word[k];
    const char y = word[k + 1];
    const std::string head = word.substr(0, k);
    const std::string tail = word.substr(k + 2);
    if (range_of(x) != source_of(y)) {
      return true;  // non-composable: the whole word is 0
    }
    auto emit = [&](int sign, const std::string& mid) { out.emplace_back(sign, head + mid + tail); };
    if (is_vertex(x)) {  // composable vertex absorbs into its neighbor
      emit(1, std::string(1, y));
      return true;
    }
    if (is_vertex(y)) {
      emit(1, std::string(1, x));
      return true;
    }
    if (x == 'C' && y == 'c') {
      emit(1, "v");
      return true;
    }
    if (x == 'C' && y == 'd') return true;  // c*d = 0
    if (x == 'E' && y == 'c') return true;  // d*c = 0
    if (x == 'E' && y == 'd') {
      emit(1, "w");
      return true;
    }
    if (x == 'd' && y == 'E') {  // dd* = v - cc*
      emit(1, "v");
      emit(-1, "cC");
      return true;
    }
  }
  return false;
}

inline void rewrite_into(const std::string& word, int sign, std::map<std::string, int>& acc) {
  std::vector<std::pair<int, std::string>> next;
  if (!rewrite_step(word, next)) {
    acc[word] += sign;
    return;
  }
  for (const auto& [s, w] : next) {
    if (w.empty()) throw std::logic_error("rewriting produced an empty word");
    rewrite_into(w, sign * s, acc);
  }
}

inline std::string monomial_word(const Monomial& m) {
  switch (m.sector) {
    case Monomial::Sector::A: {
      std::string word(m.i, 'c');
      word.append(m.j, 'C');
      return word.empty() ? "v" : word;
    }
    case Monomial::Sector::B:
      return std::string(m.i, 'c') + "d";
    case Monomial::Sector::C:
      return "E" + std::string(m.j, 'C');
    case Monomial::Sector::D:
      return "w";
  }
  throw std::logic_error("bad sector");
}

inline Monomial word_monomial(const std::string& word) {
  if (word == "v") return Monomial::vertex_v();
  if (word == "w") return Monomial::vertex_w();
  std::uint32_t nc = 0, nC = 0;
  size_t pos = 0;
  if (word[0] == 'E') {
    pos = 1;
    while (pos < word.size() && word[pos] == 'C') ++nC, ++pos;
    if (pos != word.size()) throw std::logic_error("word not irreducible: " + word);
    return Monomial::monC(nC);
  }
  while (pos < word.size() && word[pos] == 'c') ++nc, ++pos;
  if (pos < word.size() && word[pos] == 'd') {
    if (pos + 1 != word.size()) throw std::logic_error("word not irreducible: " + word);
    return Monomial::monB(nc);
  }
  while (pos < word.size() && word[pos] == 'C') ++nC, ++pos;
  if (pos != word.size() || (nc == 0 && nC == 0)) {
    throw std::logic_error("word not irreducible: " + word);
  }
  return Monomial::monA(nc, nC);
}

inline Element oracle_mul(const Monomial& m1, const Monomial& m2, const FieldSpec& field) {
  std::map<std::string, int> acc;
  rewrite_into(monomial_word(m1) + monomial_word(m2), 1, acc);
  Element out(field);
  for (const auto& [word, mult] : acc) {
    out.add_term(word_monomial(word), Scalar::from_int(mult, field));
  }
  return out;
}

}  // namespace jacobson::testing
