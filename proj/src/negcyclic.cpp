#include "stringhom/negcyclic.hpp"

#include <algorithm>
#include <functional>

namespace stringhom {

Poly bar_column_differential(const AInfinityStructure& s, const Poly& p) {
  return scaled(apply(s.alphabet, s.m, p), -1);
}

Poly hochschild_column_differential(const AInfinityStructure& s, const Poly& p) {
  Poly out = apply(s.alphabet, s.m, p);
  for (const auto& [w, c] : p) {
    if (w.empty()) continue;
    Poly first;
    Word rest(w.begin() + 1, w.end());
    for (const auto& [u, cu] : s.m.images[w[0]]) add_term(first, concat(u, rest), cu);
    add_poly(out, rotate_back(s.alphabet, first), c);
  }
  return out;
}

Poly one_minus_z_inverse(const Alphabet& a, const Poly& p) {
  Poly out = p;
  add_poly(out, rotate_back(a, p), -1);
  return out;
}

Poly one_minus_z(const Alphabet& a, const Poly& p) {
  Poly out = p;
  add_poly(out, rotate(a, p), -1);
  return out;
}

namespace {
void full_rec(const Alphabet& a, int remaining, std::size_t length, Word& cur, std::vector<Word>& out) {
  if (cur.size() == length) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (std::size_t l = 0; l < a.size(); ++l) {
    int e = a.degree(static_cast<Letter>(l)) + 1;
    if (e > remaining) continue;
    cur.push_back(static_cast<Letter>(l));
    full_rec(a, remaining - e, length, cur, out);
    cur.pop_back();
  }
}

SparseMatrix operator_matrix(const std::vector<Word>& from, const std::vector<Word>& to,
                             const std::function<Poly(const Poly&)>& op) {
  std::map<Word, std::size_t> idx;
  for (std::size_t i = 0; i < to.size(); ++i) idx[to[i]] = i;
  SparseMatrix M(to.size(), from.size());
  for (std::size_t c = 0; c < from.size(); ++c)
    for (const auto& [w, v] : op(Poly{{from[c], Rational(1)}})) {
      auto it = idx.find(w);
      if (it == idx.end()) throw InvariantBreach("word operator left its target space");
      M.set(it->second, c, v);
    }
  return M;
}

SparseMatrix negated(const SparseMatrix& m) {
  SparseMatrix r(m.rows(), m.cols());
  for (const auto& [rc, v] : m.entries()) r.set(rc.first, rc.second, -v);
  return r;
}

bool equal(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.entries() == b.entries();
}
}  // namespace

std::vector<Word> full_words(const Alphabet& a, int internal_degree, std::size_t length) {
  for (std::size_t l = 0; l < a.size(); ++l)
    if (a.degree(static_cast<Letter>(l)) + 1 < 0) throw std::invalid_argument("negative internal degree");
  std::vector<Word> out;
  Word cur;
  full_rec(a, internal_degree, length, cur, out);
  return out;
}

BicomplexSlice build_bicomplex(const AInfinityStructure& s, int e, std::size_t L) {
  const Alphabet& a = s.alphabet;
  BicomplexSlice b;
  b.internal_degree = e;
  b.length = L;
  b.domain = full_words(a, e, L);
  b.codomain = full_words(a, e, L + 1);
  b.bar_vertical = operator_matrix(b.domain, b.codomain, [&](const Poly& p) { return bar_column_differential(s, p); });
  b.hochschild_vertical =
      operator_matrix(b.domain, b.codomain, [&](const Poly& p) { return hochschild_column_differential(s, p); });
  b.norm_here = operator_matrix(b.domain, b.domain, [&](const Poly& p) { return norm(a, p); });
  b.one_minus_z_here = operator_matrix(b.domain, b.domain, [&](const Poly& p) { return one_minus_z_inverse(a, p); });
  b.z_here = operator_matrix(b.domain, b.domain, [&](const Poly& p) { return one_minus_z(a, p); });
  b.norm_next = operator_matrix(b.codomain, b.codomain, [&](const Poly& p) { return norm(a, p); });
  b.one_minus_z_next =
      operator_matrix(b.codomain, b.codomain, [&](const Poly& p) { return one_minus_z_inverse(a, p); });
  return b;
}

BicomplexCheck check_bicomplex(const AInfinityStructure& s, int max_e, std::size_t max_length) {
  BicomplexCheck r;
  auto fail = [&](bool& flag, const std::string& what, int e, std::size_t L) {
    flag = false;
    if (r.failure.empty()) r.failure = what + " at internal degree " + std::to_string(e) + ", length " + std::to_string(L);
  };
  for (int e = 0; e <= max_e; ++e) {
    std::size_t prev_rank = 0;
    for (std::size_t L = 1; L <= max_length; ++L) {
      BicomplexSlice b = build_bicomplex(s, e, L);
      BicomplexSlice n = build_bicomplex(s, e, L + 1);
      if (!(n.bar_vertical * b.bar_vertical).is_zero()) fail(r.vertical_square_zero, "b'^2 != 0", e, L);
      if (!(n.hochschild_vertical * b.hochschild_vertical).is_zero()) fail(r.vertical_square_zero, "b^2 != 0", e, L);
      if (!equal(b.hochschild_vertical * b.norm_here, negated(b.norm_next * b.bar_vertical)))
        fail(r.squares_anticommute, "b N != -N b'", e, L);
      if (!equal(b.bar_vertical * b.one_minus_z_here, negated(b.one_minus_z_next * b.hochschild_vertical)))
        fail(r.squares_anticommute, "b'(1-z^-1) != -(1-z^-1) b", e, L);
      if (!(b.norm_here * b.z_here).is_zero() || !(b.z_here * b.norm_here).is_zero() ||
          !(b.norm_here * b.one_minus_z_here).is_zero() || !(b.one_minus_z_here * b.norm_here).is_zero())
        fail(r.row_identities, "N(1-z) or (1-z)N nonzero", e, L);
      std::size_t rk = rank(b.bar_vertical);
      if (b.domain.size() != rk + prev_rank) fail(r.bar_column_acyclic, "bar column has cohomology", e, L);
      prev_rank = rk;
    }
  }
  return r;
}

OneForm connes_operator(const Alphabet& a, const OneForm& f) {
  OneForm out;
  auto u = a.unit();
  if (!u) return out;
  for (const auto& [e, c] : f) {
    if (e.letter != *u || e.word.empty()) continue;
    for (const auto& [e2, c2] : de_rham(a, Poly{{e.word, c}})) add_term(out, e2, c2);
  }
  return out;
}

MixedSpace mixed_space(const AInfinityStructure& s, int degree, int columns, int weight_cap) {
  MixedSpace sp;
  sp.degree = degree;
  sp.columns = columns;
  sp.weight_cap = weight_cap;
  auto u = s.alphabet.unit();
  for (int k = 0; k < columns; ++k) {
    int nf = -degree + 2 * k;
    if (nf > 0) break;
    WordSpace ws = enumerate_wordspace(s.alphabet, ComplexId::HOCH_VVDUAL, nf, weight_cap);
    for (const auto& e : ws.basis) {
      if (u && e.word.empty() && e.letter == *u) continue;
      MixedElement me{e, k};
      sp.index.emplace(me, sp.basis.size());
      sp.basis.push_back(me);
    }
  }
  return sp;
}

SparseMatrix mixed_differential(const AInfinityStructure& s, const MixedSpace& from, const MixedSpace& to) {
  const Alphabet& a = s.alphabet;
  SparseMatrix M(to.basis.size(), from.basis.size());
  auto u = a.unit();
  auto put = [&](const BasisElement& e, int k, std::size_t col, const Rational& c) {
    if (!a.is_reduced(e.word)) throw InvariantBreach("unit letter survived in the mixed differential");
    if (u && e.word.empty() && e.letter == *u) return;  // quotient by the constant form
    auto it = to.index.find(MixedElement{e, k});
    if (it == to.index.end()) {
      if (static_cast<int>(e.word.size()) > to.weight_cap) return;
      throw InvariantBreach("mixed differential left its target space");
    }
    M.set(it->second, col, c);
  };
  for (std::size_t col = 0; col < from.basis.size(); ++col) {
    const MixedElement& me = from.basis[col];
    OneForm f{{me.form, Rational(1)}};
    for (const auto& [e, c] : lie_operator(a, s.m, f)) put(e, me.column, col, c);
    if (me.column > 0)
      for (const auto& [e, c] : connes_operator(a, f)) put(e, me.column - 1, col, c);
  }
  return M;
}

int hc_minus_column_cap(int degree) {
  // the degree + 1 space uses columns c with 2c <= degree + 1
  return degree + 1 < 0 ? 1 : (degree + 1) / 2 + 1;
}

int hc_minus_weight_cap(const Alphabet& a, int degree) {
  int w = 1;
  for (int n = degree - 1; n <= degree + 1; ++n)
    for (int k = 0; k < hc_minus_column_cap(degree); ++k) {
      int nf = -n + 2 * k;
      if (nf > 0) break;
      w = std::max(w, max_word_degree(a, ComplexId::HOCH_VVDUAL, nf));
    }
  return w;
}

std::size_t hc_minus_rank(const AInfinityStructure& s, int degree, int columns, int weight_cap) {
  MixedSpace up = mixed_space(s, degree + 1, columns, weight_cap);
  MixedSpace here = mixed_space(s, degree, columns, weight_cap);
  MixedSpace down = mixed_space(s, degree - 1, columns, weight_cap);
  SparseMatrix din = mixed_differential(s, up, here), dout = mixed_differential(s, here, down);
  if (!(dout * din).is_zero()) throw InvariantBreach("negative cyclic differential does not square to zero");
  return here.basis.size() - rank(dout) - rank(din);
}

const HCMinusDegree* HCMinusReport::at(int degree) const {
  for (const auto& d : degrees)
    if (d.degree == degree) return &d;
  return nullptr;
}

HCMinusReport hc_minus(const AInfinityStructure& s, int min_degree, int max_degree, const HCMinusOptions& opt) {
  HCMinusReport rep;
  for (int n = min_degree; n <= max_degree; ++n) {
    HCMinusDegree d;
    d.degree = n;
    int Cstar = hc_minus_column_cap(n), Wstar = hc_minus_weight_cap(s.alphabet, n);
    d.columns = opt.columns ? *opt.columns : Cstar;
    d.weight_cap = opt.weight_cap ? *opt.weight_cap : Wstar;
    d.authoritative = d.columns >= Cstar && d.weight_cap >= Wstar;
    d.rank = hc_minus_rank(s, n, d.columns, d.weight_cap);
    int Wc = stabilization_cap(s.alphabet, ComplexId::CYCLIC, n + 1);
    d.cyclic_rank = cohomology_at(s, ComplexId::CYCLIC, n + 1, Wc, false).rank;
    d.agree = d.rank == d.cyclic_rank;
    if (opt.verify) {
      d.column_stable = hc_minus_rank(s, n, d.columns + 1, d.weight_cap) == d.rank;
      d.weight_stable = hc_minus_rank(s, n, d.columns, d.weight_cap + 1) == d.rank;
    }
    rep.degrees.push_back(d);
  }
  return rep;
}

}  // namespace stringhom
