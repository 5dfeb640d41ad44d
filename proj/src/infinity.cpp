#include "stringhom/infinity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace stringhom {

bool Derivation::is_zero() const {
  return std::all_of(images.begin(), images.end(), [](const Poly& p) { return p.empty(); });
}

void Derivation::add(const Derivation& o, const Rational& s) {
  if (images.size() < o.images.size()) images.resize(o.images.size());
  for (std::size_t k = 0; k < o.images.size(); ++k) add_poly(images[k], o.images[k], s);
}

Derivation Derivation::scaled(const Rational& s) const {
  Derivation r(degree, images.size());
  for (std::size_t k = 0; k < images.size(); ++k) r.images[k] = stringhom::scaled(images[k], s);
  return r;
}

std::size_t Derivation::max_weight() const {
  std::size_t m = 0;
  for (const auto& p : images)
    for (const auto& [w, c] : p) m = std::max(m, w.size());
  return m;
}

Poly apply(const Alphabet& a, const Derivation& xi, const Word& w) {
  Poly out;
  const bool odd_xi = (xi.degree & 1) != 0;
  bool prefix_odd = false;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] < xi.images.size()) {
      const Poly& img = xi.images[w[k]];
      if (!img.empty()) {
        int s = (odd_xi && prefix_odd) ? -1 : 1;
        Word pre(w.begin(), w.begin() + k), suf(w.begin() + k + 1, w.end());
        for (const auto& [u, c] : img) add_term(out, concat(pre, u, suf), c * s);
      }
    }
    if (a.odd(w[k])) prefix_odd = !prefix_odd;
  }
  return out;
}

Poly apply(const Alphabet& a, const Derivation& xi, const Poly& p) {
  Poly out;
  for (const auto& [w, c] : p) add_poly(out, apply(a, xi, w), c);
  return out;
}

Derivation commutator(const Alphabet& a, const Derivation& x, const Derivation& y) {
  std::size_t n = std::max(x.images.size(), y.images.size());
  Derivation r(x.degree + y.degree, n);
  const int s = ((x.degree & 1) && (y.degree & 1)) ? 1 : -1;  // -(-1)^{|x||y|}
  for (std::size_t k = 0; k < n; ++k) {
    if (k < y.images.size()) add_poly(r.images[k], apply(a, x, y.images[k]));
    if (k < x.images.size()) add_poly(r.images[k], apply(a, y, x.images[k]), s);
  }
  return r;
}

Derivation truncated(const Derivation& xi, std::size_t max_length) {
  Derivation r(xi.degree, xi.images.size());
  for (std::size_t k = 0; k < xi.images.size(); ++k)
    for (const auto& [w, c] : xi.images[k])
      if (w.size() <= max_length) r.images[k].emplace(w, c);
  return r;
}

Derivation reduced_part(const Alphabet& a, const Derivation& xi) {
  Derivation r(xi.degree, xi.images.size());
  for (std::size_t k = 0; k < xi.images.size(); ++k)
    for (const auto& [w, c] : xi.images[k])
      if (a.is_reduced(w)) r.images[k].emplace(w, c);
  return r;
}

std::string to_string(const Alphabet& a, const Derivation& xi) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < xi.images.size(); ++k)
    for (const auto& [w, c] : xi.images[k]) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.get_str() << ")[" << a.to_string(w) << "]d/d" << a.label(static_cast<Letter>(k));
    }
  if (first) os << "0";
  return os.str();
}

AInfinityStructure structure_from_product(const FrobeniusAlgebraSpec& spec) {
  const std::size_t n = spec.size();
  std::vector<int> deg;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    deg.push_back(spec.degree(i) - 1);
    labels.push_back("t[" + spec.basis.label(i) + "]");
  }
  auto u = spec.unit_index();
  std::optional<Letter> unit;
  if (u) {
    if (*u != 0) throw std::invalid_argument("structure_from_product: unit must be the first basis element");
    unit = 0;
  }
  AInfinityStructure s;
  s.alphabet = Alphabet(deg, unit, labels);
  s.m = Derivation(1, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = spec.c(i, j, k);
        if (c == 0) continue;
        int sg = (spec.degree(i) & 1) ? -1 : 1;
        add_term(s.m.images[k], Word{static_cast<Letter>(i), static_cast<Letter>(j)}, c * sg);
      }
  s.minimal = true;
  s.cinfinity = check_cinfinity(s.alphabet, s.m);
  return s;
}

namespace {
std::vector<Rational> dense_inverse(std::vector<Rational> m, std::size_t n) {
  std::vector<Rational> inv(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p * n + c] == 0) ++p;
    if (p == n) throw std::invalid_argument("matrix is singular");
    if (p != c)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(m[p * n + k], m[c * n + k]);
        std::swap(inv[p * n + k], inv[c * n + k]);
      }
    Rational piv = m[c * n + c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c * n + k] /= piv;
      inv[c * n + k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r * n + c] == 0) continue;
      Rational f = m[r * n + c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r * n + k] -= f * m[c * n + k];
        inv[r * n + k] -= f * inv[c * n + k];
      }
    }
  }
  return inv;
}
}  // namespace

SymplecticForm symplectic_form(const FrobeniusAlgebraSpec& spec, const Alphabet& a) {
  SymplecticForm f;
  f.n = spec.size();
  f.omega.assign(f.n * f.n, Rational(0));
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = 0; j < f.n; ++j) {
      // <s a, s b> = (-1)^{|a|} <a, b>
      Rational v = spec.pair(i, j);
      if (spec.degree(i) & 1) v = -v;
      f.omega[i * f.n + j] = v;
      if (v == 0) continue;
      Letter li = static_cast<Letter>(i), lj = static_cast<Letter>(j);
      add_term(f.omega_tensor, Word{li, lj}, v);
      int s = (a.odd(li) && a.odd(lj)) ? 1 : -1;
      add_term(f.omega_tensor, Word{lj, li}, v * s);
    }
  f.omega_inv = dense_inverse(f.omega, f.n);
  return f;
}

std::pair<AInfinityStructure, SymplecticForm> from_frobenius(const FrobeniusAlgebraSpec& input) {
  auto rep = validate_frobenius(input);
  if (!rep.ok()) throw ValidationError(rep);
  FrobeniusAlgebraSpec spec = unit_first(input);
  auto s = structure_from_product(spec);
  auto f = symplectic_form(spec, s.alphabet);
  return {std::move(s), std::move(f)};
}

std::optional<Witness> square_zero_witness(const Alphabet& a, const Derivation& m, std::size_t weight_cap) {
  for (std::size_t k = 0; k < m.images.size(); ++k) {
    Poly img = apply(a, m, m.images[k]);
    for (const auto& [w, c] : img)
      if (w.size() <= weight_cap) return Witness{static_cast<Letter>(k), w, c};
  }
  return std::nullopt;
}

bool check_square_zero(const Alphabet& a, const Derivation& m, std::size_t weight_cap) {
  return !square_zero_witness(a, m, weight_cap).has_value();
}

bool check_cinfinity(const Alphabet& a, const Derivation& m) {
  for (const auto& img : m.images) {
    // every (u, v) that pairs nontrivially with img arises by unshuffling a support word
    std::set<std::pair<Word, Word>> splits;
    for (const auto& [w, c] : img) {
      const std::size_t L = w.size();
      if (L < 2 || L > 20) continue;
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << L); ++mask) {
        Word u, v;
        for (std::size_t i = 0; i < L; ++i) ((mask >> i) & 1 ? u : v).push_back(w[i]);
        splits.emplace(u, v);
      }
    }
    for (const auto& [u, v] : splits) {
      Rational acc = 0;
      for (const auto& [w, c] : shuffle(a, u, v)) {
        auto it = img.find(w);
        if (it != img.end()) acc += it->second * c;
      }
      if (acc != 0) return false;
    }
  }
  return true;
}

Poly apply_to_omega(const Alphabet& a, const Derivation& xi, const SymplecticForm& f) {
  return apply(a, xi, f.omega_tensor);
}

bool is_symplectic(const Alphabet& a, const Derivation& xi, const SymplecticForm& f) {
  return apply_to_omega(a, xi, f).empty();
}

Poly cyclic_derivative(const Alphabet& a, const Poly& q, Letter j) {
  Poly out;
  for (const auto& [w, c] : q)
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] != j) continue;
      Word x(w.begin(), w.begin() + k), y(w.begin() + k + 1, w.end());
      bool s = (a.odd(x) != a.odd(j)) && a.odd(y);
      add_term(out, concat(y, x), s ? -c : c);
    }
  return out;
}

Derivation hamiltonian(const Alphabet& a, const SymplecticForm& f, const Poly& q, int formal_dimension) {
  int wd = q.empty() ? 0 : a.degree(q.begin()->first);
  Derivation xi(hamiltonian_degree(wd, formal_dimension), a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    Poly dj;
    bool computed = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      Rational c = f.inv(j, k);
      if (c == 0) continue;
      if (!computed) dj = cyclic_derivative(a, q, static_cast<Letter>(j)), computed = true;
      add_poly(xi.images[k], dj, c);
    }
  }
  return xi;
}

BracketResult necklace_bracket(const Alphabet& a, const SymplecticForm& f, int d, const Poly& q1, const Poly& q2) {
  BracketResult res;
  if (q1.empty() || q2.empty()) return res;
  Derivation h1 = hamiltonian(a, f, q1, d), h2 = hamiltonian(a, f, q2, d);
  Derivation eta = commutator(a, h1, h2);
  if (eta.is_zero()) return res;
  int out_degree = a.degree(q1.begin()->first) + a.degree(q2.begin()->first) - d + 2;
  WordSpace ws = enumerate_wordspace(a, ComplexId::NECKLACES, out_degree, std::max(out_degree, 0));

  std::map<std::pair<std::size_t, Word>, std::size_t> coord;
  auto index_of = [&](std::size_t k, const Word& w) {
    auto [it, ins] = coord.emplace(std::make_pair(k, w), coord.size());
    return it->second;
  };
  std::vector<std::map<std::size_t, Rational>> cols;
  for (const auto& e : ws.basis) {
    Derivation h = hamiltonian(a, f, Poly{{e.word, Rational(1)}}, d);
    std::map<std::size_t, Rational> col;
    for (std::size_t k = 0; k < h.images.size(); ++k)
      for (const auto& [w, c] : h.images[k]) col[index_of(k, w)] = c;
    cols.push_back(std::move(col));
  }
  std::map<std::size_t, Rational> target;
  for (std::size_t k = 0; k < eta.images.size(); ++k)
    for (const auto& [w, c] : eta.images[k]) target[index_of(k, w)] = c;
  SparseMatrix M(coord.size(), cols.size() + 1);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, c] : cols[j]) M.set(r, j, c);
  for (const auto& [r, c] : target) M.set(r, cols.size(), c);
  auto rki = rank_kernel_image(M);
  for (const auto& v : rki.kernel.vectors) {
    Rational last = v.get(cols.size());
    if (last == 0) continue;
    for (const auto& [j, c] : v.entries)
      if (j < cols.size()) add_term(res.necklaces, ws.basis[j].word, -c / last);
    return res;
  }
  res.solved = false;
  return res;
}

}  // namespace stringhom
