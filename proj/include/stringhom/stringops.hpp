#pragma once

#include "stringhom/hochschild.hpp"
#include "stringhom/negcyclic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stringhom {

struct SpaceModel {
  std::string name;
  FrobeniusAlgebraSpec spec;  // unit first
  int d = 0;
  AInfinityStructure structure;
  SymplecticForm form;
};

SpaceModel make_space(const FrobeniusAlgebraSpec& spec);  // throws ValidationError
SpaceModel sphere(int n);
SpaceModel complex_projective(int n);
SpaceModel point_space();
SpaceModel product_space(const SpaceModel& a, const SpaceModel& b);
// builtin names: s2, s3, cp2, s3xs3 (also sN, cpN)
SpaceModel builtin_space(const std::string& name);
SpaceModel orientation_flip(const SpaceModel& s);
SpaceModel with_scaled_pairing(const SpaceModel& s, const Rational& lambda);

// Degree dictionary. Loop homology H_p(LM) = HH^{d-p}(V,V) = HH^{-p}(V,V*);
// the loop-homology degree is k = p - d. Equivariant homology H^{S1}_n is the
// cyclic complex at degree n + 1, and negative cyclic degree n.
struct Grading {
  static int hh_from_lm(int lm_degree, int d) { return d - lm_degree; }
  static int lm_from_hh(int hh_degree, int d) { return d - hh_degree; }
  static int loop_from_lm(int lm_degree, int d) { return lm_degree - d; }
  static int hh_dual_from_lm(int lm_degree) { return -lm_degree; }
  static int cyclic_from_string(int n) { return n + 1; }
  static int string_from_cyclic(int cyclic_degree) { return cyclic_degree - 1; }
  static int hc_minus_from_string(int n) { return n; }
  // The grading in which the string bracket has degree zero (degree of Hamiltonian fields).
  static int lie_from_string(int n, int d) { return n + 2 - d; }
  static int string_from_lie(int lie, int d) { return lie + d - 2; }
};

struct LoopHomologyRow {
  int lm_degree = 0;
  int loop_degree = 0;
  int hh_degree = 0;
  std::size_t rank = 0;
  std::size_t dual_rank = 0;  // HH(V,V*) at hh_degree - d
  bool stabilized = false;
  bool authoritative = true;
};

std::vector<LoopHomologyRow> loop_homology(const SpaceModel& s, int min_lm, int max_lm);

struct LoopClass {
  int lm_degree = 0;
  HHClass hh;
};

std::vector<LoopClass> loop_classes(const SpaceModel& s, int lm_degree);
LoopClass loop_unit(const SpaceModel& s);
LoopClass loop_product(const SpaceModel& s, const LoopClass& a, const LoopClass& b);
LoopClass loop_bracket(const SpaceModel& s, const LoopClass& a, const LoopClass& b);
LoopClass loop_combination(const LoopClass& a, const Rational& ca, const LoopClass& b, const Rational& cb);
bool loop_is_zero(const SpaceModel& s, const LoopClass& a);
bool loop_equal(const SpaceModel& s, const LoopClass& a, const LoopClass& b);

// Structure constants of the loop product or bracket between two degrees,
// in the class bases modulo coboundaries.
struct LoopTable {
  int p = 0, q = 0, out = 0;
  bool bracket = false;
  std::vector<LoopClass> left, right, out_basis;
  std::vector<std::vector<std::vector<Rational>>> coeff;
  bool all_zero() const;
};

LoopTable loop_table(const SpaceModel& s, int p, int q, bool bracket);

struct StringHomologyRow {
  int n = 0;
  int cyclic_degree = 0;
  std::size_t rank = 0;            // from the cyclic complex
  std::size_t hc_minus_rank = 0;   // from the negative cyclic complex at degree n
  bool agree = false;
  bool stabilized = false;
  bool authoritative = true;
};

std::vector<StringHomologyRow> string_homology(const SpaceModel& s, int min_n, int max_n);

struct StringClass {
  int n = 0;
  Poly necklaces;
};

std::vector<StringClass> string_classes(const SpaceModel& s, int n);
StringClass string_bracket(const SpaceModel& s, const StringClass& a, const StringClass& b);
bool string_is_zero(const SpaceModel& s, const StringClass& a);

struct BracketTable {
  int n = 0, k = 0, out = 0;
  std::vector<StringClass> left, right, out_basis;
  // coeff[i][j][l]: coefficient of out_basis[l] in [left[i], right[j]] modulo boundaries
  std::vector<std::vector<std::vector<Rational>>> coeff;
  bool all_zero() const;
};

BracketTable string_bracket_table(const SpaceModel& s, int n, int k);

// The hamiltonian map on necklaces of cyclic degree P: a chain map
// (ham(L q) = [m, ham q]) and an isomorphism onto the symplectic fields.
struct HamiltonianCheck {
  bool chain_map = true;
  bool injective = true;
  bool onto_symplectic = true;
  std::size_t necklaces = 0;
  bool ok() const { return chain_map && injective && onto_symplectic; }
};

HamiltonianCheck check_hamiltonian(const SpaceModel& s, int cyclic_degree);

struct Sl2Basis {
  std::vector<Rational> e, h, f;  // coordinates in the table basis
};

// Looks for E, H, F in a bracket table on a single degree with
// [H,E] = 2E, [H,F] = -2F, [E,F] = H, verified exactly.
std::optional<Sl2Basis> find_sl2_basis(const BracketTable& t);

}  // namespace stringhom
