#pragma once

#include "stringhom/graded.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stringhom {

// Graded commutative algebra with an invariant pairing of degree d.
struct FrobeniusAlgebraSpec {
  std::string name;
  GradedBasis basis;
  int dimension = 0;               // formal dimension d
  std::vector<Rational> product;   // c_{ij}^k at (i*n + j)*n + k
  std::vector<Rational> pairing;   // <v_i, v_j> at i*n + j

  FrobeniusAlgebraSpec() = default;
  FrobeniusAlgebraSpec(std::string name, GradedBasis basis, int dimension);

  std::size_t size() const { return basis.size(); }
  int degree(std::size_t i) const { return basis.degree(i); }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return product[(i * size() + j) * size() + k]; }
  Rational& c(std::size_t i, std::size_t j, std::size_t k) { return product[(i * size() + j) * size() + k]; }
  const Rational& pair(std::size_t i, std::size_t j) const { return pairing[i * size() + j]; }
  Rational& pair(std::size_t i, std::size_t j) { return pairing[i * size() + j]; }
  // Sets <v_i,v_j> and its graded-symmetric partner.
  void set_pair_symmetric(std::size_t i, std::size_t j, const Rational& v);
  // Sets v_i v_j and its graded-commutative partner.
  void set_product_commutative(std::size_t i, std::size_t j, std::size_t k, const Rational& v);
  std::optional<std::size_t> unit_index() const;  // the unique degree-0 basis element
};

struct ValidationFailure {
  std::string kind;
  std::string message;
  std::vector<std::size_t> witness;  // basis indices
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  bool ok() const { return failures.empty(); }
  std::string to_string() const;
};

ValidationReport validate_frobenius(const FrobeniusAlgebraSpec& spec);

// Permutes the basis so that the unit comes first (no-op if it already does).
FrobeniusAlgebraSpec unit_first(const FrobeniusAlgebraSpec& spec);

FrobeniusAlgebraSpec sphere_algebra(int n);
FrobeniusAlgebraSpec projective_algebra(int n);
FrobeniusAlgebraSpec point_algebra();
FrobeniusAlgebraSpec tensor_algebra(const FrobeniusAlgebraSpec& a, const FrobeniusAlgebraSpec& b);
FrobeniusAlgebraSpec negate_pairing(const FrobeniusAlgebraSpec& spec);
FrobeniusAlgebraSpec scale_pairing(const FrobeniusAlgebraSpec& spec, const Rational& lambda);
// Basis change v_i -> lambda_i v_i.
FrobeniusAlgebraSpec rescale_basis(const FrobeniusAlgebraSpec& spec, const std::vector<Rational>& lambda);
bool same_structure(const FrobeniusAlgebraSpec& a, const FrobeniusAlgebraSpec& b);

// A diagonal sign rescaling fixing the unit and the product that negates the
// pairing, if one exists.
std::optional<std::vector<Rational>> flip_absorbing_rescaling(const FrobeniusAlgebraSpec& spec);

}  // namespace stringhom
