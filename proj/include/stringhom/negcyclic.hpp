#pragma once

#include "stringhom/hochschild.hpp"

#include <map>
#include <string>
#include <vector>

namespace stringhom {

// ---- Connes-Tsygan operators on plain words over the full alphabet ----
//
// Both column types are realized on words of a fixed internal degree
// (sum of the cohomological degrees |v| of the letters, unit letter allowed):
//   bar-type column:        -b'(w), where b'(w) = m(w)  (m acting as a derivation)
//   Hochschild-type column: b(w) = b'(w) + z^{-1}(m(w_1) w_2 ... w_L)
// with horizontal maps N (bar -> Hochschild) and 1 - z^{-1} (Hochschild -> bar).
// b commutes with N and 1 - z^{-1} against b'; negating the bar columns makes
// every square anticommute.

Poly bar_column_differential(const AInfinityStructure& s, const Poly& p);
Poly hochschild_column_differential(const AInfinityStructure& s, const Poly& p);
Poly one_minus_z_inverse(const Alphabet& a, const Poly& p);
Poly one_minus_z(const Alphabet& a, const Poly& p);

// Words over the full alphabet (unit letter included) with the given internal
// degree and length.
std::vector<Word> full_words(const Alphabet& a, int internal_degree, std::size_t length);

struct BicomplexSlice {
  int internal_degree = 0;
  std::size_t length = 0;  // domain words have this length; vertical maps go to length + 1
  std::vector<Word> domain, codomain;
  SparseMatrix bar_vertical, hochschild_vertical;  // length -> length + 1
  SparseMatrix norm_here, one_minus_z_here;         // on length-L words
  SparseMatrix norm_next, one_minus_z_next;         // on length-(L+1) words
  SparseMatrix z_here;                              // rotation on length-L words
};

BicomplexSlice build_bicomplex(const AInfinityStructure& s, int internal_degree, std::size_t length);

struct BicomplexCheck {
  bool vertical_square_zero = true;
  bool squares_anticommute = true;
  bool row_identities = true;   // N(1-z) = (1-z)N = 0
  bool bar_column_acyclic = true;
  std::string failure;
  bool ok() const { return vertical_square_zero && squares_anticommute && row_identities && bar_column_acyclic; }
};

// Checks every window with internal degree in [0, max_internal_degree] and
// word length 1..max_length.
BicomplexCheck check_bicomplex(const AInfinityStructure& s, int max_internal_degree, std::size_t max_length);

// ---- Negative cyclic cohomology ----
//
// Realized as the normalized mixed complex (L_m, B) on one-forms: an element is
// a pair (one-form w dt_k, column c >= 0) of degree
//     n = -(N_form - 2c),   N_form = HOCH_VVDUAL degree of w dt_k,
// with the differential L_m inside a column and B: column c -> column c - 1,
// B(w dt_unit) = d(w). The form dt_unit itself is excluded (reduced theory).
// The differential lowers n by one.

struct MixedElement {
  BasisElement form;
  int column = 0;
  auto operator<=>(const MixedElement&) const = default;
};

struct MixedSpace {
  int degree = 0;
  int columns = 0;
  int weight_cap = 0;
  std::vector<MixedElement> basis;
  std::map<MixedElement, std::size_t> index;
};

OneForm connes_operator(const Alphabet& a, const OneForm& f);  // B
MixedSpace mixed_space(const AInfinityStructure& s, int degree, int columns, int weight_cap);
SparseMatrix mixed_differential(const AInfinityStructure& s, const MixedSpace& from, const MixedSpace& to);

int hc_minus_column_cap(int degree);
int hc_minus_weight_cap(const Alphabet& a, int degree);

struct HCMinusDegree {
  int degree = 0;
  std::size_t rank = 0;
  std::size_t cyclic_rank = 0;  // HC-lambda at degree + 1
  bool agree = false;
  int columns = 0;
  int weight_cap = 0;
  bool column_stable = false;
  bool weight_stable = false;
  bool authoritative = true;
};

struct HCMinusReport {
  std::vector<HCMinusDegree> degrees;
  const HCMinusDegree* at(int degree) const;
};

struct HCMinusOptions {
  std::optional<int> columns;
  std::optional<int> weight_cap;
  bool verify = true;
};

std::size_t hc_minus_rank(const AInfinityStructure& s, int degree, int columns, int weight_cap);
HCMinusReport hc_minus(const AInfinityStructure& s, int min_degree, int max_degree, const HCMinusOptions& opt = {});

}  // namespace stringhom
