#pragma once

#include "stringhom/algebra.hpp"
#include "stringhom/graded.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stringhom {

// Vector field sum_k images[k] d/dt_k. The degree is cohomological:
// a term w d/dt_k has degree deg(t_k) - deg(w).
struct Derivation {
  int degree = 0;
  std::vector<Poly> images;

  Derivation() = default;
  Derivation(int deg, std::size_t letters) : degree(deg), images(letters) {}
  bool is_zero() const;
  bool operator==(const Derivation& o) const { return degree == o.degree && images == o.images; }
  void add(const Derivation& o, const Rational& s = 1);
  Derivation scaled(const Rational& s) const;
  std::size_t max_weight() const;  // longest image word
};

// The derivation extended to words by the graded Leibniz rule.
Poly apply(const Alphabet& a, const Derivation& xi, const Word& w);
Poly apply(const Alphabet& a, const Derivation& xi, const Poly& p);
// Graded commutator [x, y] = x y - (-1)^{|x||y|} y x.
Derivation commutator(const Alphabet& a, const Derivation& x, const Derivation& y);
// Keeps only image words of length <= max_length.
Derivation truncated(const Derivation& xi, std::size_t max_length);
// Drops every image word that contains the unit letter.
Derivation reduced_part(const Alphabet& a, const Derivation& xi);
std::string to_string(const Alphabet& a, const Derivation& xi);

struct AInfinityStructure {
  Alphabet alphabet;
  Derivation m;       // degree 1
  bool minimal = true;
  bool cinfinity = false;
  int max_weight() const { return static_cast<int>(m.max_weight()); }
};

struct SymplecticForm {
  std::size_t n = 0;
  std::vector<Rational> omega;        // omega(i,j) at i*n+j
  std::vector<Rational> omega_inv;    // inverse matrix
  Poly omega_tensor;                  // [omega] as a combination of length-2 words
  Rational at(std::size_t i, std::size_t j) const { return omega[i * n + j]; }
  Rational inv(std::size_t i, std::size_t j) const { return omega_inv[i * n + j]; }
};

// The field dual to the algebra product: m(t_k) = sum (-1)^{|v_i|} c_{ij}^k t_i t_j.
// The unit (if unique) becomes letter 0 of the alphabet; the algebra must be unit-first.
AInfinityStructure structure_from_product(const FrobeniusAlgebraSpec& spec);
SymplecticForm symplectic_form(const FrobeniusAlgebraSpec& spec, const Alphabet& a);

struct ValidationError : std::runtime_error {
  ValidationReport report;
  explicit ValidationError(ValidationReport r)
      : std::runtime_error("algebra validation failed:\n" + r.to_string()), report(std::move(r)) {}
};

// Throws ValidationError if the algebra is invalid. It is reordered unit-first.
std::pair<AInfinityStructure, SymplecticForm> from_frobenius(const FrobeniusAlgebraSpec& spec);

struct Witness {
  Letter letter = 0;
  Word word;
  Rational coefficient;
};

std::optional<Witness> square_zero_witness(const Alphabet& a, const Derivation& m, std::size_t weight_cap);
bool check_square_zero(const Alphabet& a, const Derivation& m, std::size_t weight_cap);
bool check_cinfinity(const Alphabet& a, const Derivation& m);
Poly apply_to_omega(const Alphabet& a, const Derivation& xi, const SymplecticForm& f);
bool is_symplectic(const Alphabet& a, const Derivation& xi, const SymplecticForm& f);

// Right cyclic derivative: for each occurrence q = x t_j y, the term y x with
// the sign of moving x t_j past y.
Poly cyclic_derivative(const Alphabet& a, const Poly& q, Letter j);
// Degree of the Hamiltonian field of a necklace of word degree w: d - 2 - w.
inline int hamiltonian_degree(int necklace_word_degree, int formal_dimension) {
  return formal_dimension - 2 - necklace_word_degree;
}
// The field whose image of t_k is sum_j omega_inv(j,k) times the cyclic derivative at t_j.
Derivation hamiltonian(const Alphabet& a, const SymplecticForm& f, const Poly& q, int formal_dimension);

struct BracketResult {
  Poly necklaces;        // the bracket as canonical necklaces
  bool solved = true;    // false when the commutator is not Hamiltonian at this cap
};
BracketResult necklace_bracket(const Alphabet& a, const SymplecticForm& f, int formal_dimension, const Poly& q1,
                               const Poly& q2);

}  // namespace stringhom
