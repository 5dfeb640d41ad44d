#include "stringhom/stringops.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace stringhom {

SpaceModel make_space(const FrobeniusAlgebraSpec& input) {
  auto rep = validate_frobenius(input);
  if (!rep.ok()) throw ValidationError(rep);
  SpaceModel s;
  s.spec = unit_first(input);
  s.name = s.spec.name;
  s.d = s.spec.dimension;
  auto [st, f] = from_frobenius(s.spec);
  s.structure = std::move(st);
  s.form = std::move(f);
  if (!check_square_zero(s.structure.alphabet, s.structure.m, 4))
    throw InvariantBreach("structure field does not square to zero");
  return s;
}

SpaceModel sphere(int n) { return make_space(sphere_algebra(n)); }
SpaceModel complex_projective(int n) { return make_space(projective_algebra(n)); }
SpaceModel point_space() { return make_space(point_algebra()); }
SpaceModel product_space(const SpaceModel& a, const SpaceModel& b) {
  return make_space(tensor_algebra(a.spec, b.spec));
}

SpaceModel builtin_space(const std::string& name) {
  if (name == "s3xs3") {
    FrobeniusAlgebraSpec t = tensor_algebra(sphere_algebra(3), sphere_algebra(3));
    // tensor basis order: unit, the two degree-3 generators, their product
    t.basis.elements[1].first = "a";
    t.basis.elements[2].first = "b";
    t.basis.elements[3].first = "ab";
    t.name = "S3xS3";
    return make_space(t);
  }
  auto number = [&](std::size_t pos) {
    std::string digits = name.substr(pos);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw std::invalid_argument("unknown builtin space '" + name + "'");
    return std::stoi(digits);
  };
  if (name.rfind("cp", 0) == 0) return complex_projective(number(2));
  if (name.rfind("s", 0) == 0) return sphere(number(1));
  if (name == "pt") return point_space();
  throw std::invalid_argument("unknown builtin space '" + name + "'");
}

SpaceModel orientation_flip(const SpaceModel& s) {
  SpaceModel r = make_space(negate_pairing(s.spec));
  r.name = s.name + "(flipped)";
  return r;
}

SpaceModel with_scaled_pairing(const SpaceModel& s, const Rational& lambda) {
  return make_space(scale_pairing(s.spec, lambda));
}

std::vector<LoopHomologyRow> loop_homology(const SpaceModel& s, int min_lm, int max_lm) {
  std::vector<LoopHomologyRow> rows;
  for (int p = min_lm; p <= max_lm; ++p) {
    LoopHomologyRow r;
    r.lm_degree = p;
    r.loop_degree = Grading::loop_from_lm(p, s.d);
    r.hh_degree = Grading::hh_from_lm(p, s.d);
    auto vv = cohomology(s.structure, ComplexId::HOCH_VV, r.hh_degree, r.hh_degree, {std::nullopt, true, false});
    auto vd = cohomology(s.structure, ComplexId::HOCH_VVDUAL, Grading::hh_dual_from_lm(p),
                         Grading::hh_dual_from_lm(p), {std::nullopt, true, false});
    r.rank = vv.degrees[0].rank;
    r.dual_rank = vd.degrees[0].rank;
    r.stabilized = vv.degrees[0].stabilized && vd.degrees[0].stabilized;
    r.authoritative = vv.degrees[0].authoritative && vd.degrees[0].authoritative;
    rows.push_back(r);
  }
  return rows;
}

std::vector<LoopClass> loop_classes(const SpaceModel& s, int lm_degree) {
  std::vector<LoopClass> out;
  for (auto& c : hh_classes(s.structure, Grading::hh_from_lm(lm_degree, s.d))) out.push_back({lm_degree, c});
  return out;
}

LoopClass loop_unit(const SpaceModel& s) {
  HHClass u = unit_class(s.structure);
  return {Grading::lm_from_hh(u.degree, s.d), u};
}

LoopClass loop_product(const SpaceModel& s, const LoopClass& a, const LoopClass& b) {
  HHClass c = cup_product(s.structure, a.hh, b.hh);
  LoopClass r{Grading::lm_from_hh(c.degree, s.d), c};
  if (r.lm_degree != a.lm_degree + b.lm_degree - s.d) throw InvariantBreach("loop product degree contract violated");
  return r;
}

LoopClass loop_bracket(const SpaceModel& s, const LoopClass& a, const LoopClass& b) {
  HHClass c = gerstenhaber_bracket(s.structure, a.hh, b.hh);
  LoopClass r{Grading::lm_from_hh(c.degree, s.d), c};
  if (r.lm_degree != a.lm_degree + b.lm_degree - s.d + 1)
    throw InvariantBreach("loop bracket degree contract violated");
  return r;
}

LoopClass loop_combination(const LoopClass& a, const Rational& ca, const LoopClass& b, const Rational& cb) {
  if (a.lm_degree != b.lm_degree) throw std::invalid_argument("loop_combination: degree mismatch");
  LoopClass r = a;
  r.hh.representative = a.hh.representative.scaled(ca);
  r.hh.representative.add(b.hh.representative, cb);
  return r;
}

bool loop_is_zero(const SpaceModel& s, const LoopClass& a) { return is_coboundary(s.structure, a.hh); }

bool loop_equal(const SpaceModel& s, const LoopClass& a, const LoopClass& b) {
  if (a.lm_degree != b.lm_degree) return a.hh.representative.is_zero() && b.hh.representative.is_zero();
  return loop_is_zero(s, loop_combination(a, 1, b, -1));
}

namespace {
bool cube_is_zero(const std::vector<std::vector<std::vector<Rational>>>& coeff) {
  for (const auto& row : coeff)
    for (const auto& cell : row)
      for (const auto& c : cell)
        if (c != 0) return false;
  return true;
}
}  // namespace

bool LoopTable::all_zero() const { return cube_is_zero(coeff); }

LoopTable loop_table(const SpaceModel& s, int p, int q, bool bracket) {
  LoopTable t;
  t.p = p;
  t.q = q;
  t.bracket = bracket;
  t.out = p + q - s.d + (bracket ? 1 : 0);
  t.left = loop_classes(s, p);
  t.right = loop_classes(s, q);
  int N = Grading::hh_from_lm(t.out, s.d);
  DegreeCohomology dc = cohomology_at(s.structure, ComplexId::HOCH_VV, N, stabilization_cap(s.structure.alphabet, ComplexId::HOCH_VV, N));
  for (const auto& v : dc.representatives)
    t.out_basis.push_back({t.out, {N, to_derivation(s.structure.alphabet, dc.space, v, derivation_degree_of(N))}});
  for (const auto& x : t.left) {
    std::vector<std::vector<Rational>> row;
    for (const auto& y : t.right) {
      LoopClass z = bracket ? loop_bracket(s, x, y) : loop_product(s, x, y);
      std::vector<Rational> cell(t.out_basis.size());
      if (!z.hh.representative.is_zero()) {
        auto c = coordinates_modulo(dc.representatives, dc.coboundaries, to_vector(dc.space, z.hh.representative));
        if (!c) throw InvariantBreach("loop operation output is not a cocycle");
        cell = *c;
      }
      row.push_back(cell);
    }
    t.coeff.push_back(row);
  }
  return t;
}

std::vector<StringHomologyRow> string_homology(const SpaceModel& s, int min_n, int max_n) {
  std::vector<StringHomologyRow> rows;
  auto hcm = hc_minus(s.structure, Grading::hc_minus_from_string(min_n), Grading::hc_minus_from_string(max_n));
  for (int n = min_n; n <= max_n; ++n) {
    StringHomologyRow r;
    r.n = n;
    r.cyclic_degree = Grading::cyclic_from_string(n);
    auto cyc = cohomology(s.structure, ComplexId::CYCLIC, r.cyclic_degree, r.cyclic_degree, {std::nullopt, true, false});
    r.rank = cyc.degrees[0].rank;
    const HCMinusDegree* h = hcm.at(Grading::hc_minus_from_string(n));
    r.hc_minus_rank = h->rank;
    r.agree = r.rank == r.hc_minus_rank;
    r.stabilized = cyc.degrees[0].stabilized && h->column_stable && h->weight_stable;
    r.authoritative = cyc.degrees[0].authoritative && h->authoritative;
    rows.push_back(r);
  }
  return rows;
}

namespace {
struct CyclicDegreeData {
  DegreeCohomology dc;
};

CyclicDegreeData cyclic_data(const SpaceModel& s, int n) {
  int P = Grading::cyclic_from_string(n);
  int W = stabilization_cap(s.structure.alphabet, ComplexId::CYCLIC, P);
  return {cohomology_at(s.structure, ComplexId::CYCLIC, P, W)};
}
}  // namespace

std::vector<StringClass> string_classes(const SpaceModel& s, int n) {
  auto data = cyclic_data(s, n);
  std::vector<StringClass> out;
  for (const auto& v : data.dc.representatives) out.push_back({n, to_poly(data.dc.space, v)});
  return out;
}

StringClass string_bracket(const SpaceModel& s, const StringClass& a, const StringClass& b) {
  StringClass r;
  r.n = a.n + b.n - s.d + 2;
  auto br = necklace_bracket(s.structure.alphabet, s.form, s.d, a.necklaces, b.necklaces);
  if (!br.solved) throw std::runtime_error("commutator of Hamiltonian fields is not Hamiltonian at this cap");
  r.necklaces = br.necklaces;
  for (const auto& [w, c] : r.necklaces)
    if (s.structure.alphabet.degree(w) + 1 != Grading::cyclic_from_string(r.n))
      throw InvariantBreach("string bracket degree contract violated");
  return r;
}

bool string_is_zero(const SpaceModel& s, const StringClass& a) {
  if (a.necklaces.empty()) return true;
  auto data = cyclic_data(s, a.n);
  return in_span(to_vector(data.dc.space, a.necklaces), data.dc.coboundaries);
}

bool BracketTable::all_zero() const { return cube_is_zero(coeff); }

BracketTable string_bracket_table(const SpaceModel& s, int n, int k) {
  BracketTable t;
  t.n = n;
  t.k = k;
  t.out = n + k - s.d + 2;
  t.left = string_classes(s, n);
  t.right = string_classes(s, k);
  auto out = cyclic_data(s, t.out);
  for (const auto& v : out.dc.representatives) t.out_basis.push_back({t.out, to_poly(out.dc.space, v)});
  for (const auto& x : t.left) {
    std::vector<std::vector<Rational>> row;
    for (const auto& y : t.right) {
      StringClass z = string_bracket(s, x, y);
      std::vector<Rational> cell(t.out_basis.size());
      if (!z.necklaces.empty()) {
        auto c = coordinates_modulo(out.dc.representatives, out.dc.coboundaries, to_vector(out.dc.space, z.necklaces));
        if (!c) throw InvariantBreach("string bracket is not a cocycle");
        cell = *c;
      }
      row.push_back(cell);
    }
    t.coeff.push_back(row);
  }
  return t;
}

HamiltonianCheck check_hamiltonian(const SpaceModel& s, int P) {
  const Alphabet& a = s.structure.alphabet;
  HamiltonianCheck r;
  Derivation mbar = reduced_part(a, s.structure.m);
  int cap = std::max(stabilization_cap(a, ComplexId::CYCLIC, P), P + 2);
  WordSpace necks = enumerate_wordspace(a, ComplexId::CYCLIC, P, cap);
  const int n = s.d - P;  // complex degree of the hamiltonian fields
  WordSpace fields = enumerate_wordspace(a, ComplexId::HOCH_VV, n, cap);
  r.necklaces = necks.size();
  SparseMatrix H(fields.size(), necks.size());
  for (std::size_t c = 0; c < necks.size(); ++c) {
    Poly q{{necks.basis[c].word, Rational(1)}};
    Derivation h = hamiltonian(a, s.form, q, s.d);
    Derivation lhs = hamiltonian(a, s.form, lie_operator_necklaces(a, mbar, q), s.d);
    Derivation rhs = commutator(a, s.structure.m, h);
    lhs.degree = rhs.degree;  // the zero field carries no degree
    if (!(lhs == rhs)) r.chain_map = false;
    for (const auto& [i, v] : to_vector(fields, h).entries) H.set(i, c, v);
  }
  std::map<Word, std::size_t> rows;
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> cells;
  for (std::size_t c = 0; c < fields.size(); ++c) {
    Derivation xi(derivation_degree_of(n), a.size());
    xi.images[fields.basis[c].letter][fields.basis[c].word] = 1;
    for (const auto& [w, v] : apply_to_omega(a, xi, s.form)) {
      auto it = rows.emplace(w, rows.size()).first;
      cells.emplace_back(it->second, c, v);
    }
  }
  SparseMatrix S(rows.size(), fields.size());
  for (const auto& [i, c, v] : cells) S.set(i, c, v);
  std::size_t rk = rank(H);
  r.injective = rk == necks.size();
  r.onto_symplectic = rk == fields.size() - rank(S) && (S * H).is_zero();
  return r;
}

namespace {
using Vec = std::vector<Rational>;

Vec bracket_of(const BracketTable& t, const Vec& x, const Vec& y) {
  Vec r(t.out_basis.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (x[i] == 0 || y[j] == 0) continue;
      for (std::size_t l = 0; l < r.size(); ++l) r[l] += x[i] * y[j] * t.coeff[i][j][l];
    }
  return r;
}

Vec scaled_vec(const Vec& v, const Rational& s) {
  Vec r = v;
  for (auto& x : r) x *= s;
  return r;
}

// One-dimensional eigenspace of ad_h for eigenvalue lambda, if any.
std::optional<Vec> eigenvector(const BracketTable& t, const Vec& h, const Rational& lambda) {
  const std::size_t n = h.size();
  SparseMatrix M(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec ej(n);
    ej[j] = 1;
    Vec col = bracket_of(t, h, ej);
    for (std::size_t i = 0; i < n; ++i) M.set(i, j, col[i] - (i == j ? lambda : Rational(0)));
  }
  auto rki = rank_kernel_image(M);
  if (rki.kernel.dim() != 1) return std::nullopt;
  Vec v(n);
  for (const auto& [i, c] : rki.kernel.vectors[0].entries) v[i] = c;
  return v;
}
}  // namespace

std::optional<Sl2Basis> find_sl2_basis(const BracketTable& t) {
  const std::size_t n = t.left.size();
  if (n != 3 || t.right.size() != 3 || t.out_basis.size() != 3 || t.n != t.k || t.out != t.n) return std::nullopt;
  const std::vector<Rational> cand = {0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2)};
  for (std::size_t a = 0; a < cand.size(); ++a)
    for (std::size_t b = 0; b < cand.size(); ++b)
      for (std::size_t c = 0; c < cand.size(); ++c) {
        Vec h = {cand[a], cand[b], cand[c]};
        if (h[0] == 0 && h[1] == 0 && h[2] == 0) continue;
        auto e = eigenvector(t, h, 2);
        auto f0 = eigenvector(t, h, -2);
        if (!e || !f0) continue;
        Vec ef = bracket_of(t, *e, *f0);
        // [E, F0] must be a nonzero multiple of H
        std::size_t piv = 0;
        while (piv < 3 && h[piv] == 0) ++piv;
        Rational kappa = ef[piv] / h[piv];
        if (kappa == 0 || ef != scaled_vec(h, kappa)) continue;
        Vec f = scaled_vec(*f0, 1 / kappa);
        if (bracket_of(t, h, *e) == scaled_vec(*e, 2) && bracket_of(t, h, f) == scaled_vec(f, -2) &&
            bracket_of(t, *e, f) == h)
          return Sl2Basis{*e, h, f};
      }
  return std::nullopt;
}

}  // namespace stringhom
