#include "stringhom/hochschild.hpp"

#include <algorithm>

namespace stringhom {

void add_term(OneForm& f, const BasisElement& e, const Rational& c) {
  if (c == 0) return;
  auto it = f.find(e);
  if (it == f.end()) {
    f.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
}

void add_normalized_form(const Alphabet& a, OneForm& out, const Word& x, Letter l, const Word& z, const Rational& c) {
  // moving z (degree deg z) to the front past x dt_l (parity deg x + deg t_l + 1)
  bool odd_mid = a.odd(x) != a.odd(l);
  odd_mid = !odd_mid;
  bool s = a.odd(z) && odd_mid;
  add_term(out, BasisElement{concat(z, x), l}, s ? -c : c);
}

OneForm de_rham(const Alphabet& a, const Poly& u) {
  OneForm out;
  for (const auto& [w, c] : u) {
    bool prefix_odd = false;
    for (std::size_t k = 0; k < w.size(); ++k) {
      Word x(w.begin(), w.begin() + k), z(w.begin() + k + 1, w.end());
      add_normalized_form(a, out, x, w[k], z, prefix_odd ? -c : c);
      if (a.odd(w[k])) prefix_odd = !prefix_odd;
    }
  }
  return out;
}

OneForm lie_operator(const Alphabet& a, const Derivation& xi, const OneForm& form) {
  OneForm out;
  const bool odd_xi = (xi.degree & 1) != 0;
  for (const auto& [e, c] : form) {
    for (const auto& [w, cw] : apply(a, xi, e.word)) add_term(out, BasisElement{w, e.letter}, c * cw);
    if (static_cast<std::size_t>(e.letter) >= xi.images.size()) continue;
    const Poly& img = xi.images[e.letter];
    if (img.empty()) continue;
    // L_xi(dx) = (-1)^{|xi|} d(xi(x)), and xi passes the prefix a
    bool s = odd_xi && (a.odd(e.word) != true);
    for (const auto& [u, cu] : img) {
      bool prefix_odd = false;
      for (std::size_t k = 0; k < u.size(); ++k) {
        Word x(u.begin(), u.begin() + k), z(u.begin() + k + 1, u.end());
        bool sg = s != prefix_odd;
        add_normalized_form(a, out, concat(e.word, x), u[k], z, sg ? Rational(-(c * cu)) : Rational(c * cu));
        if (a.odd(u[k])) prefix_odd = !prefix_odd;
      }
    }
  }
  return out;
}

Poly lie_operator(const Alphabet& a, const Derivation& xi, const Poly& words) { return apply(a, xi, words); }

Poly lie_operator_necklaces(const Alphabet& a, const Derivation& xi, const Poly& necklaces) {
  return to_necklaces(a, apply(a, xi, necklaces));
}

int differential_step(ComplexId id) { return id == ComplexId::CYCLIC ? -1 : 1; }

int stabilization_cap(const Alphabet& a, ComplexId id, int degree) {
  int w = 0;
  for (int n = degree - 1; n <= degree + 1; ++n) w = std::max(w, max_word_degree(a, id, n));
  return std::max(w, 1);
}

namespace {

template <class F>
void place(const WordSpace& cod, const BasisElement& e, const Rational& c, std::size_t col, SparseMatrix& M,
           ComplexSlice& slice, const Alphabet& a, F describe) {
  if (!a.is_reduced(e.word)) throw InvariantBreach("unit letter survived in the differential: " + describe());
  auto r = cod.find(e);
  if (!r) {
    if (static_cast<int>(e.word.size()) > slice.weight_cap) {
      slice.authoritative = false;
      return;
    }
    throw InvariantBreach("differential left the codomain degree: " + describe());
  }
  M.set(*r, col, c);
}

}  // namespace

ComplexSlice build_slice(const AInfinityStructure& s, ComplexId id, int degree, int weight_cap) {
  const Alphabet& a = s.alphabet;
  ComplexSlice slice;
  slice.id = id;
  slice.degree = degree;
  slice.weight_cap = weight_cap;
  slice.domain = enumerate_wordspace(a, id, degree, weight_cap);
  slice.codomain = enumerate_wordspace(a, id, degree + differential_step(id), weight_cap);
  slice.authoritative = weight_cap >= std::max(max_word_degree(a, id, degree),
                                               max_word_degree(a, id, degree + differential_step(id)));
  SparseMatrix M(slice.codomain.size(), slice.domain.size());
  Derivation mbar = reduced_part(a, s.m);
  for (std::size_t col = 0; col < slice.domain.size(); ++col) {
    const BasisElement& e = slice.domain.basis[col];
    auto describe = [&] { return complex_name(id) + " element " + a.to_string(e.word); };
    switch (id) {
      case ComplexId::HOCH_VV: {
        Derivation xi(derivation_degree_of(degree), a.size());
        xi.images[e.letter][e.word] = 1;
        Derivation dx = commutator(a, s.m, xi);
        for (std::size_t k = 0; k < dx.images.size(); ++k)
          for (const auto& [w, c] : dx.images[k])
            place(slice.codomain, BasisElement{w, static_cast<int>(k)}, c, col, M, slice, a, describe);
        break;
      }
      case ComplexId::HOCH_VVDUAL: {
        OneForm f{{e, Rational(1)}};
        for (const auto& [e2, c] : lie_operator(a, s.m, f)) place(slice.codomain, e2, c, col, M, slice, a, describe);
        break;
      }
      case ComplexId::CYCLIC: {
        Poly q{{e.word, Rational(1)}};
        for (const auto& [w, c] : lie_operator_necklaces(a, mbar, q))
          place(slice.codomain, BasisElement{w, -1}, c, col, M, slice, a, describe);
        break;
      }
      default: throw std::invalid_argument("build_slice: unsupported complex");
    }
  }
  slice.matrix = std::move(M);
  return slice;
}

SparseVector to_vector(const WordSpace& ws, const Derivation& xi) {
  std::map<std::size_t, Rational> m;
  for (std::size_t k = 0; k < xi.images.size(); ++k)
    for (const auto& [w, c] : xi.images[k]) {
      auto i = ws.find(BasisElement{w, static_cast<int>(k)});
      if (!i) throw std::out_of_range("derivation term outside the word space");
      m[*i] = c;
    }
  return SparseVector::from_map(m);
}

Derivation to_derivation(const Alphabet& a, const WordSpace& ws, const SparseVector& v, int derivation_degree) {
  Derivation xi(derivation_degree, a.size());
  for (const auto& [i, c] : v.entries) add_term(xi.images[ws.basis[i].letter], ws.basis[i].word, c);
  return xi;
}

SparseVector to_vector(const WordSpace& ws, const OneForm& f) {
  std::map<std::size_t, Rational> m;
  for (const auto& [e, c] : f) {
    auto i = ws.find(e);
    if (!i) throw std::out_of_range("one-form term outside the word space");
    m[*i] = c;
  }
  return SparseVector::from_map(m);
}

OneForm to_form(const WordSpace& ws, const SparseVector& v) {
  OneForm f;
  for (const auto& [i, c] : v.entries) add_term(f, ws.basis[i], c);
  return f;
}

SparseVector to_vector(const WordSpace& ws, const Poly& p) {
  std::map<std::size_t, Rational> m;
  for (const auto& [w, c] : p) {
    auto i = ws.find(BasisElement{w, -1});
    if (!i) throw std::out_of_range("word outside the word space");
    m[*i] = c;
  }
  return SparseVector::from_map(m);
}

Poly to_poly(const WordSpace& ws, const SparseVector& v) {
  Poly p;
  for (const auto& [i, c] : v.entries) add_term(p, ws.basis[i].word, c);
  return p;
}

const DegreeCohomology* CohomologyReport::at(int degree) const {
  for (const auto& d : degrees)
    if (d.degree == degree) return &d;
  return nullptr;
}

DegreeCohomology cohomology_at(const AInfinityStructure& s, ComplexId id, int degree, int weight_cap,
                               bool keep_representatives) {
  ComplexSlice out = build_slice(s, id, degree, weight_cap);
  ComplexSlice in = build_slice(s, id, degree - differential_step(id), weight_cap);
  if (!(out.matrix * in.matrix).is_zero())
    throw InvariantBreach("d^2 != 0 for " + complex_name(id) + " at degree " + std::to_string(degree));
  DegreeCohomology dc;
  dc.degree = degree;
  dc.weight_cap = weight_cap;
  dc.authoritative = out.authoritative && in.authoritative;
  dc.cochains = out.domain.size();
  if (keep_representatives) {
    auto k = rank_kernel_image(out.matrix);
    auto im = rank_kernel_image(in.matrix);
    dc.rank = k.kernel.dim() - im.rank;
    dc.representatives = complement_representatives(k.kernel, im.image);
    dc.coboundaries = im.image;
  } else {
    dc.rank = out.domain.size() - rank(out.matrix) - rank(in.matrix);
  }
  dc.space = std::move(out.domain);
  return dc;
}

CohomologyReport cohomology(const AInfinityStructure& s, ComplexId id, int min_degree, int max_degree,
                            const CohomologyOptions& opt) {
  CohomologyReport rep;
  rep.id = id;
  for (int n = min_degree; n <= max_degree; ++n) {
    int W = opt.weight_cap ? *opt.weight_cap : stabilization_cap(s.alphabet, id, n);
    DegreeCohomology dc = cohomology_at(s, id, n, W, opt.keep_representatives);
    if (opt.verify_stabilization) {
      DegreeCohomology up = cohomology_at(s, id, n, W + 1, false);
      dc.stabilized = up.rank == dc.rank;
    }
    rep.degrees.push_back(std::move(dc));
  }
  return rep;
}

Derivation hochschild_differential(const AInfinityStructure& s, const Derivation& xi) {
  return commutator(s.alphabet, s.m, xi);
}

Derivation cup_product(const AInfinityStructure& s, const Derivation& x, const Derivation& y) {
  const Alphabet& a = s.alphabet;
  Derivation r(x.degree + y.degree + 1, a.size());
  const bool odd_y = (y.degree & 1) != 0;
  for (std::size_t k = 0; k < s.m.images.size(); ++k)
    for (const auto& [w, c] : s.m.images[k]) {
      if (w.size() != 2) continue;
      const Poly& xi = x.images[w[0]];
      const Poly& yj = y.images[w[1]];
      if (xi.empty() || yj.empty()) continue;
      bool sg = odd_y && !a.odd(w[0]);
      Rational cc = sg ? Rational(-c) : c;
      for (const auto& [u, cu] : xi)
        for (const auto& [v, cv] : yj) add_term(r.images[k], concat(u, v), cc * cu * cv);
    }
  return r;
}

HHClass cup_product(const AInfinityStructure& s, const HHClass& x, const HHClass& y) {
  return {x.degree + y.degree, cup_product(s, x.representative, y.representative)};
}

HHClass gerstenhaber_bracket(const AInfinityStructure& s, const HHClass& x, const HHClass& y) {
  return {x.degree + y.degree - 1, commutator(s.alphabet, x.representative, y.representative)};
}

HHClass unit_class(const AInfinityStructure& s) {
  auto u = s.alphabet.unit();
  if (!u) throw std::logic_error("structure has no unit letter");
  HHClass c{0, Derivation(-1, s.alphabet.size())};
  c.representative.images[*u][Word{}] = 1;
  return c;
}

bool is_cocycle(const AInfinityStructure& s, const Derivation& xi) { return hochschild_differential(s, xi).is_zero(); }

bool is_coboundary(const AInfinityStructure& s, const HHClass& x) { return CoboundaryTester(s).is_coboundary(x); }

const CoboundaryTester::Entry& CoboundaryTester::entry(int degree, int min_weight) {
  auto it = cache_.find(degree);
  if (it != cache_.end() && it->second.weight_cap >= min_weight) return it->second;
  int W = std::max(stabilization_cap(s_.alphabet, ComplexId::HOCH_VV, degree), min_weight);
  ComplexSlice in = build_slice(s_, ComplexId::HOCH_VV, degree - 1, W);
  auto im = rank_kernel_image(in.matrix);
  Entry e{W, in.codomain, EchelonForm(in.codomain.size(), im.image.vectors)};
  return cache_[degree] = std::move(e);
}

bool CoboundaryTester::is_coboundary(const HHClass& x) {
  if (x.representative.is_zero()) return true;
  const Entry& e = entry(x.degree, static_cast<int>(x.representative.max_weight()));
  return e.image.contains(to_vector(e.space, x.representative));
}

std::vector<HHClass> hh_classes(const AInfinityStructure& s, int degree) {
  int W = stabilization_cap(s.alphabet, ComplexId::HOCH_VV, degree);
  DegreeCohomology dc = cohomology_at(s, ComplexId::HOCH_VV, degree, W);
  std::vector<HHClass> out;
  for (const auto& v : dc.representatives)
    out.push_back({degree, to_derivation(s.alphabet, dc.space, v, derivation_degree_of(degree))});
  return out;
}

OneForm duality_map(const AInfinityStructure& s, const SymplecticForm& f, const Derivation& xi) {
  OneForm out;
  const Alphabet& a = s.alphabet;
  for (std::size_t k = 0; k < xi.images.size(); ++k)
    for (std::size_t j = 0; j < f.n; ++j) {
      Rational o = f.at(k, j);
      if (o == 0) continue;
      if (a.odd(static_cast<Letter>(k))) o = -o;
      for (const auto& [w, c] : xi.images[k]) add_term(out, BasisElement{w, static_cast<int>(j)}, o * c);
    }
  return out;
}

SparseMatrix duality_matrix(const AInfinityStructure& s, const SymplecticForm& f, const WordSpace& from,
                            const WordSpace& to) {
  SparseMatrix M(to.size(), from.size());
  for (std::size_t col = 0; col < from.size(); ++col) {
    Derivation xi(0, s.alphabet.size());
    xi.images[from.basis[col].letter][from.basis[col].word] = 1;
    for (const auto& [e, c] : duality_map(s, f, xi)) {
      auto r = to.find(e);
      if (!r) throw InvariantBreach("duality map left the target space");
      M.set(*r, col, c);
    }
  }
  return M;
}

}  // namespace stringhom
