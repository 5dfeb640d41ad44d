#include "stringhom/graded.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stringhom {

void add_term(Poly& p, const Word& w, const Rational& c) {
  if (c == 0) return;
  auto it = p.find(w);
  if (it == p.end()) {
    p.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

void add_poly(Poly& p, const Poly& q, const Rational& s) {
  for (const auto& [w, c] : q) add_term(p, w, c * s);
}

Poly scaled(const Poly& p, const Rational& s) {
  Poly r;
  if (s == 0) return r;
  for (const auto& [w, c] : p) r.emplace(w, c * s);
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word concat(const Word& a, const Word& b, const Word& c) {
  Word r = concat(a, b);
  r.insert(r.end(), c.begin(), c.end());
  return r;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& labels) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i] < labels.size() ? labels[w[i]] : "t" + std::to_string(w[i]);
  }
  return s;
}

Alphabet::Alphabet(std::vector<int> degrees, std::optional<Letter> unit_letter, std::vector<std::string> labels)
    : deg_(std::move(degrees)), unit_(unit_letter), labels_(std::move(labels)) {
  if (deg_.size() > 255) throw std::invalid_argument("too many generators");
  if (unit_ && *unit_ >= deg_.size()) throw std::invalid_argument("unit letter out of range");
  if (labels_.empty())
    for (std::size_t i = 0; i < deg_.size(); ++i) labels_.push_back("t" + std::to_string(i));
  if (labels_.size() != deg_.size()) throw std::invalid_argument("label count mismatch");
}

Alphabet Alphabet::reduced(std::vector<int> degrees) { return Alphabet(std::move(degrees), std::nullopt); }

int Alphabet::degree(const Word& w) const {
  int d = 0;
  for (auto l : w) d += deg_[l];
  return d;
}

bool Alphabet::odd(const Word& w) const { return (degree(w) & 1) != 0; }

bool Alphabet::is_reduced(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](Letter l) { return is_reduced(l); });
}

std::vector<Letter> Alphabet::reduced_letters() const {
  std::vector<Letter> r;
  for (std::size_t i = 0; i < deg_.size(); ++i)
    if (is_reduced(static_cast<Letter>(i))) r.push_back(static_cast<Letter>(i));
  return r;
}

int Alphabet::max_degree() const {
  int m = 0;
  for (auto l : reduced_letters()) m = std::max(m, deg_[l]);
  return m;
}

int koszul_sign(const std::vector<std::size_t>& perm, const std::vector<int>& degrees) {
  if (perm.size() != degrees.size()) throw std::invalid_argument("koszul_sign: length mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw std::invalid_argument("koszul_sign: not a permutation");
    seen[p] = true;
  }
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j] && (degrees[perm[i]] & 1) && (degrees[perm[j]] & 1)) s = -s;
  return s;
}

namespace {
void shuffle_rec(const Alphabet& a, const Word& w1, std::size_t i, const Word& w2, std::size_t j, Word& cur,
                 int sign, int rest1_odd_parity, Poly& out) {
  // rest1_odd_parity: parity of the degree of w1[i..]
  if (i == w1.size() && j == w2.size()) {
    add_term(out, cur, sign);
    return;
  }
  if (i < w1.size()) {
    cur.push_back(w1[i]);
    shuffle_rec(a, w1, i + 1, w2, j, cur, sign, rest1_odd_parity ^ (a.odd(w1[i]) ? 1 : 0), out);
    cur.pop_back();
  }
  if (j < w2.size()) {
    cur.push_back(w2[j]);
    int s = (rest1_odd_parity && a.odd(w2[j])) ? -sign : sign;
    shuffle_rec(a, w1, i, w2, j + 1, cur, s, rest1_odd_parity, out);
    cur.pop_back();
  }
}
}  // namespace

Poly shuffle(const Alphabet& a, const Word& w1, const Word& w2) {
  Poly out;
  Word cur;
  shuffle_rec(a, w1, 0, w2, 0, cur, 1, a.odd(w1) ? 1 : 0, out);
  return out;
}

std::pair<Word, int> rotate(const Alphabet& a, const Word& w) {
  if (w.empty()) throw std::invalid_argument("rotate: empty word");
  Word r;
  r.reserve(w.size());
  r.push_back(w.back());
  r.insert(r.end(), w.begin(), w.end() - 1);
  Word rest(w.begin(), w.end() - 1);
  return {r, (a.odd(w.back()) && a.odd(rest)) ? -1 : 1};
}

std::pair<Word, int> rotate_back(const Alphabet& a, const Word& w) {
  if (w.empty()) throw std::invalid_argument("rotate_back: empty word");
  Word r(w.begin() + 1, w.end());
  int s = (a.odd(w.front()) && a.odd(r)) ? -1 : 1;
  r.push_back(w.front());
  return {r, s};
}

Poly rotate(const Alphabet& a, const Poly& p) {
  Poly out;
  for (const auto& [w, c] : p) {
    if (w.empty()) {
      add_term(out, w, c);
      continue;
    }
    auto [r, s] = rotate(a, w);
    add_term(out, r, c * s);
  }
  return out;
}

Poly rotate_back(const Alphabet& a, const Poly& p) {
  Poly out;
  for (const auto& [w, c] : p) {
    if (w.empty()) {
      add_term(out, w, c);
      continue;
    }
    auto [r, s] = rotate_back(a, w);
    add_term(out, r, c * s);
  }
  return out;
}

Poly norm(const Alphabet& a, const Word& w) {
  Poly out;
  if (w.empty()) {
    add_term(out, w, 1);
    return out;
  }
  Word cur = w;
  int s = 1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    add_term(out, cur, s);
    auto [r, t] = rotate(a, cur);
    cur = std::move(r);
    s *= t;
  }
  return out;
}

Poly norm(const Alphabet& a, const Poly& p) {
  Poly out;
  for (const auto& [w, c] : p) add_poly(out, norm(a, w), c);
  return out;
}

std::optional<CyclicWord> canonicalize_necklace(const Alphabet& a, const Word& w) {
  if (w.empty()) throw std::invalid_argument("canonicalize_necklace: empty word");
  CyclicWord best{w, 1};
  Word cur = w;
  int s = 1;
  for (std::size_t k = 1; k <= w.size(); ++k) {
    auto [r, t] = rotate(a, cur);
    cur = std::move(r);
    s *= t;
    if (cur == w) {
      if (s == -1) return std::nullopt;
      break;
    }
    if (cur < best.canonical) best = {cur, s};
  }
  // z^k w = s * cur and z^k w = w in the quotient, hence w = s * cur.
  return best;
}

Poly to_necklaces(const Alphabet& a, const Poly& p) {
  Poly out;
  for (const auto& [w, c] : p) {
    if (w.empty()) continue;
    auto cw = canonicalize_necklace(a, w);
    if (cw) add_term(out, cw->canonical, c * cw->sign);
  }
  return out;
}

std::string complex_name(ComplexId id) {
  switch (id) {
    case ComplexId::PLAIN_WORDS: return "PLAIN_WORDS";
    case ComplexId::NECKLACES: return "NECKLACES";
    case ComplexId::HOCH_VV: return "HOCH_VV";
    case ComplexId::HOCH_VVDUAL: return "HOCH_VVDUAL";
    case ComplexId::CYCLIC: return "CYCLIC";
  }
  return "?";
}

std::optional<std::size_t> WordSpace::find(const BasisElement& e) const {
  auto it = index.find(e);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {
void words_rec(const std::vector<Letter>& letters, const Alphabet& a, int remaining, int max_length, Word& cur,
               std::vector<Word>& out, std::size_t target_len) {
  if (cur.size() == target_len) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (auto l : letters) {
    int d = a.degree(l);
    // every remaining slot needs at least degree 1
    if (d > remaining - static_cast<int>(target_len - cur.size() - 1)) continue;
    cur.push_back(l);
    words_rec(letters, a, remaining - d, max_length, cur, out, target_len);
    cur.pop_back();
  }
}

void check_positive(const Alphabet& a) {
  for (auto l : a.reduced_letters())
    if (a.degree(l) < 1)
      throw std::invalid_argument("generator " + a.label(l) + " has non-positive degree " +
                                  std::to_string(a.degree(l)) + " (input is not simply connected)");
}
}  // namespace

std::vector<Word> words_of_degree(const Alphabet& a, int word_degree, int max_length) {
  check_positive(a);
  std::vector<Word> out;
  if (word_degree < 0) return out;
  auto letters = a.reduced_letters();
  int top = std::min(word_degree, max_length);
  for (int len = 0; len <= top; ++len) {
    Word cur;
    words_rec(letters, a, word_degree, max_length, cur, out, static_cast<std::size_t>(len));
  }
  return out;
}

WordSpace enumerate_wordspace(const Alphabet& a, ComplexId id, int degree, int weight_cap) {
  check_positive(a);
  WordSpace ws;
  ws.id = id;
  ws.degree = degree;
  ws.weight_cap = weight_cap;
  auto push = [&](BasisElement e) {
    ws.index.emplace(e, ws.basis.size());
    ws.basis.push_back(std::move(e));
  };
  switch (id) {
    case ComplexId::PLAIN_WORDS:
      for (auto& w : words_of_degree(a, degree, weight_cap)) push({w, -1});
      break;
    case ComplexId::NECKLACES:
    case ComplexId::CYCLIC: {
      int wd = id == ComplexId::CYCLIC ? degree - 1 : degree;
      if (wd < 1) break;
      for (auto& w : words_of_degree(a, wd, weight_cap)) {
        auto cw = canonicalize_necklace(a, w);
        if (cw && cw->canonical == w) push({w, -1});
      }
      break;
    }
    case ComplexId::HOCH_VV:
      for (std::size_t k = 0; k < a.size(); ++k) {
        int wd = a.degree(static_cast<Letter>(k)) + 1 - degree;
        for (auto& w : words_of_degree(a, wd, weight_cap)) push({w, static_cast<int>(k)});
      }
      break;
    case ComplexId::HOCH_VVDUAL:
      for (std::size_t k = 0; k < a.size(); ++k) {
        int wd = -degree - a.degree(static_cast<Letter>(k)) - 1;
        for (auto& w : words_of_degree(a, wd, weight_cap)) push({w, static_cast<int>(k)});
      }
      break;
  }
  return ws;
}

int max_word_degree(const Alphabet& a, ComplexId id, int degree) {
  int best = -1;
  auto upd = [&](int wd) { best = std::max(best, wd); };
  switch (id) {
    case ComplexId::PLAIN_WORDS:
    case ComplexId::NECKLACES: upd(degree); break;
    case ComplexId::CYCLIC: upd(degree - 1); break;
    case ComplexId::HOCH_VV:
      for (std::size_t k = 0; k < a.size(); ++k) upd(a.degree(static_cast<Letter>(k)) + 1 - degree);
      break;
    case ComplexId::HOCH_VVDUAL:
      for (std::size_t k = 0; k < a.size(); ++k) upd(-degree - a.degree(static_cast<Letter>(k)) - 1);
      break;
  }
  return std::max(best, 0);
}

}  // namespace stringhom
