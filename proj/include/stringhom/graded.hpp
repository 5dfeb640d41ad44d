#pragma once

#include "stringhom/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stringhom {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;
using Poly = std::map<Word, Rational>;  // finite signed combination of words, no zero coefficients

void add_term(Poly& p, const Word& w, const Rational& c);
void add_poly(Poly& p, const Poly& q, const Rational& s = 1);
Poly scaled(const Poly& p, const Rational& s);
Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);
std::string word_to_string(const Word& w, const std::vector<std::string>& labels);

struct GradedBasis {
  std::vector<std::pair<std::string, int>> elements;  // (label, degree)
  std::size_t size() const { return elements.size(); }
  int degree(std::size_t i) const { return elements[i].second; }
  const std::string& label(std::size_t i) const { return elements[i].first; }
};

// Letters of the tensor algebra on desuspended dual generators. Each letter has
// degree |v| - 1 for the basis element v it dualizes. An optional unit letter
// (dual of 1, degree -1) may serve as a derivation target or a one-form slot but
// never appears inside enumerated words.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::vector<int> degrees, std::optional<Letter> unit_letter, std::vector<std::string> labels = {});
  static Alphabet reduced(std::vector<int> degrees);  // no unit letter

  std::size_t size() const { return deg_.size(); }
  int degree(Letter l) const { return deg_[l]; }
  bool odd(Letter l) const { return (deg_[l] & 1) != 0; }
  int degree(const Word& w) const;
  bool odd(const Word& w) const;
  std::optional<Letter> unit() const { return unit_; }
  bool is_reduced(Letter l) const { return !unit_ || *unit_ != l; }
  bool is_reduced(const Word& w) const;
  std::vector<Letter> reduced_letters() const;
  int max_degree() const;
  const std::string& label(Letter l) const { return labels_[l]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string to_string(const Word& w) const { return word_to_string(w, labels_); }

 private:
  std::vector<int> deg_;
  std::optional<Letter> unit_;
  std::vector<std::string> labels_;
};

inline int sign_of(bool odd) { return odd ? -1 : 1; }

// Sign of reordering graded symbols: result[i] = symbol[perm[i]].
int koszul_sign(const std::vector<std::size_t>& permutation, const std::vector<int>& degrees);

Poly shuffle(const Alphabet& a, const Word& w1, const Word& w2);

// Moves the last letter to the front; the sign is the Koszul sign of that move.
std::pair<Word, int> rotate(const Alphabet& a, const Word& w);
// Moves the first letter to the end (inverse of rotate).
std::pair<Word, int> rotate_back(const Alphabet& a, const Word& w);
Poly rotate(const Alphabet& a, const Poly& p);
Poly rotate_back(const Alphabet& a, const Poly& p);
Poly norm(const Alphabet& a, const Word& w);
Poly norm(const Alphabet& a, const Poly& p);

struct CyclicWord {
  Word canonical;
  int sign = 1;  // w = sign * canonical in the quotient by graded commutators
};
std::optional<CyclicWord> canonicalize_necklace(const Alphabet& a, const Word& w);
// Projects a combination of words to canonical necklaces.
Poly to_necklaces(const Alphabet& a, const Poly& p);

enum class ComplexId { PLAIN_WORDS, NECKLACES, HOCH_VV, HOCH_VVDUAL, CYCLIC };
std::string complex_name(ComplexId id);

// A basis element of a word space: a word and, for derivations and one-forms, a
// distinguished letter (derivation target t_k, or the slot of dt_k).
struct BasisElement {
  Word word;
  int letter = -1;
  auto operator<=>(const BasisElement&) const = default;
};

struct WordSpace {
  ComplexId id = ComplexId::PLAIN_WORDS;
  int degree = 0;
  int weight_cap = 0;
  std::vector<BasisElement> basis;
  std::map<BasisElement, std::size_t> index;

  std::size_t size() const { return basis.size(); }
  std::optional<std::size_t> find(const BasisElement& e) const;
};

// All reduced words of the given word degree and length <= max_length, in
// length-then-lexicographic order.
std::vector<Word> words_of_degree(const Alphabet& a, int word_degree, int max_length);

// Degree conventions (complex degree n):
//   PLAIN_WORDS, NECKLACES: n = word degree.
//   HOCH_VV  (derivation w d/dt_k): n = deg(t_k) - deg(w) + 1.
//   HOCH_VVDUAL (one-form w dt_k):   n = -deg(w) - deg(t_k) - 1.
//   CYCLIC   (necklace q):           n = deg(q) + 1.
WordSpace enumerate_wordspace(const Alphabet& a, ComplexId id, int degree, int weight_cap);

// Largest word degree (hence length) occurring in the given complex degree.
int max_word_degree(const Alphabet& a, ComplexId id, int degree);

}  // namespace stringhom
