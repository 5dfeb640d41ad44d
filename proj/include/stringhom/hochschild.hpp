#pragma once

#include "stringhom/infinity.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stringhom {

// One-forms: (a, k) stands for a dt_k, kept in the normal form where dt_k is last.
using OneForm = std::map<BasisElement, Rational>;

void add_term(OneForm& f, const BasisElement& e, const Rational& c);

// x dt_l z, rewritten to normal form (z x) dt_l.
void add_normalized_form(const Alphabet& a, OneForm& out, const Word& x, Letter l, const Word& z, const Rational& c);
// Noncommutative de Rham differential of a word combination, in normal form.
OneForm de_rham(const Alphabet& a, const Poly& u);

OneForm lie_operator(const Alphabet& a, const Derivation& xi, const OneForm& form);
Poly lie_operator(const Alphabet& a, const Derivation& xi, const Poly& words);
Poly lie_operator_necklaces(const Alphabet& a, const Derivation& xi, const Poly& necklaces);

struct InvariantBreach : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complex degree conventions (see enumerate_wordspace): HOCH_VV and
// HOCH_VVDUAL differentials raise the degree by one, the CYCLIC differential
// lowers it by one.
int differential_step(ComplexId id);

struct ComplexSlice {
  ComplexId id = ComplexId::HOCH_VV;
  int degree = 0;
  int weight_cap = 0;
  WordSpace domain, codomain;
  SparseMatrix matrix;  // rows: codomain, columns: domain
  bool authoritative = true;
};

// Smallest weight cap making every slice touching degree n exhaustive.
int stabilization_cap(const Alphabet& a, ComplexId id, int degree);

ComplexSlice build_slice(const AInfinityStructure& s, ComplexId id, int degree, int weight_cap);

// Vector/element conversions relative to a word space.
SparseVector to_vector(const WordSpace& ws, const Derivation& xi);
Derivation to_derivation(const Alphabet& a, const WordSpace& ws, const SparseVector& v, int derivation_degree);
SparseVector to_vector(const WordSpace& ws, const OneForm& f);
OneForm to_form(const WordSpace& ws, const SparseVector& v);
SparseVector to_vector(const WordSpace& ws, const Poly& necklaces);
Poly to_poly(const WordSpace& ws, const SparseVector& v);

struct DegreeCohomology {
  int degree = 0;
  std::size_t rank = 0;
  std::size_t cochains = 0;
  std::vector<SparseVector> representatives;  // cocycles in the degree's word space
  WordSpace space;
  SubspaceBasis coboundaries;
  int weight_cap = 0;
  bool authoritative = true;
  bool stabilized = false;
};

struct CohomologyReport {
  ComplexId id = ComplexId::HOCH_VV;
  std::vector<DegreeCohomology> degrees;
  const DegreeCohomology* at(int degree) const;
};

struct CohomologyOptions {
  std::optional<int> weight_cap;  // default: stabilization_cap per degree
  bool verify_stabilization = true;
  bool keep_representatives = true;
};

DegreeCohomology cohomology_at(const AInfinityStructure& s, ComplexId id, int degree, int weight_cap,
                               bool keep_representatives = true);
CohomologyReport cohomology(const AInfinityStructure& s, ComplexId id, int min_degree, int max_degree,
                            const CohomologyOptions& opt = {});

// Hochschild cochain classes in HOCH_VV; degree is the complex degree.
struct HHClass {
  int degree = 0;
  Derivation representative;
};

inline int derivation_degree_of(int complex_degree) { return complex_degree - 1; }

// The coboundary d(xi) = [m, xi].
Derivation hochschild_differential(const AInfinityStructure& s, const Derivation& xi);
Derivation cup_product(const AInfinityStructure& s, const Derivation& x, const Derivation& y);
HHClass cup_product(const AInfinityStructure& s, const HHClass& x, const HHClass& y);
HHClass gerstenhaber_bracket(const AInfinityStructure& s, const HHClass& x, const HHClass& y);
// The class of d/dt_unit.
HHClass unit_class(const AInfinityStructure& s);

// Exact test whether a cocycle is a coboundary.
bool is_coboundary(const AInfinityStructure& s, const HHClass& x);
bool is_cocycle(const AInfinityStructure& s, const Derivation& xi);

// Coboundary membership with the image of the differential cached per degree.
class CoboundaryTester {
 public:
  explicit CoboundaryTester(const AInfinityStructure& s) : s_(s) {}
  bool is_coboundary(const HHClass& x);

 private:
  struct Entry {
    int weight_cap = 0;
    WordSpace space;
    EchelonForm image;
  };
  const Entry& entry(int degree, int min_weight);
  const AInfinityStructure& s_;
  std::map<int, Entry> cache_;
};

// Classes of a degree of HH(V,V) as HHClass objects.
std::vector<HHClass> hh_classes(const AInfinityStructure& s, int degree);

// Contraction with the pairing: w d/dt_k -> sum_j (-1)^{deg t_k} omega(k,j) w dt_j.
// Maps HOCH_VV degree n to HOCH_VVDUAL degree n - d.
OneForm duality_map(const AInfinityStructure& s, const SymplecticForm& f, const Derivation& xi);
SparseMatrix duality_matrix(const AInfinityStructure& s, const SymplecticForm& f, const WordSpace& from,
                            const WordSpace& to);

}  // namespace stringhom
