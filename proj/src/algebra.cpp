#include "stringhom/algebra.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace stringhom {

FrobeniusAlgebraSpec::FrobeniusAlgebraSpec(std::string n, GradedBasis b, int d)
    : name(std::move(n)), basis(std::move(b)), dimension(d) {
  std::size_t s = basis.size();
  product.assign(s * s * s, Rational(0));
  pairing.assign(s * s, Rational(0));
}

void FrobeniusAlgebraSpec::set_pair_symmetric(std::size_t i, std::size_t j, const Rational& v) {
  pair(i, j) = v;
  pair(j, i) = ((degree(i) & 1) && (degree(j) & 1)) ? Rational(-v) : v;
}

void FrobeniusAlgebraSpec::set_product_commutative(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  c(i, j, k) = v;
  c(j, i, k) = ((degree(i) & 1) && (degree(j) & 1)) ? Rational(-v) : v;
}

std::optional<std::size_t> FrobeniusAlgebraSpec::unit_index() const {
  std::optional<std::size_t> u;
  for (std::size_t i = 0; i < size(); ++i)
    if (degree(i) == 0) {
      if (u) return std::nullopt;
      u = i;
    }
  return u;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& f : failures) os << f.kind << ": " << f.message << "\n";
  return os.str();
}

ValidationReport validate_frobenius(const FrobeniusAlgebraSpec& s) {
  ValidationReport rep;
  const std::size_t n = s.size();
  auto fail = [&](std::string kind, std::string msg, std::vector<std::size_t> w) {
    rep.failures.push_back({std::move(kind), std::move(msg), std::move(w)});
  };
  auto lab = [&](std::size_t i) { return s.basis.label(i); };
  if (n == 0) {
    fail("empty", "basis is empty", {});
    return rep;
  }
  if (s.product.size() != n * n * n || s.pairing.size() != n * n) {
    fail("shape", "structure constant arrays do not match the basis size", {});
    return rep;
  }
  std::set<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    if (!labels.insert(lab(i)).second) fail("labels", "duplicate label '" + lab(i) + "'", {i});

  std::size_t zero_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.degree(i) < 0) fail("degree", "negative degree for '" + lab(i) + "'", {i});
    if (s.degree(i) == 0) ++zero_count;
    if (s.degree(i) == 1) fail("simply-connected", "H^1 is nonzero: '" + lab(i) + "' has degree 1", {i});
  }
  if (zero_count != 1) fail("simply-connected", "H^0 must be one-dimensional", {});
  auto u = s.unit_index();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (s.c(i, j, k) != 0 && s.degree(k) != s.degree(i) + s.degree(j))
          fail("homogeneity", "product " + lab(i) + "*" + lab(j) + " has a component on " + lab(k) +
                                  " of the wrong degree", {i, j, k});

  if (u) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t k = 0; k < n; ++k) {
        Rational want = (k == x) ? 1 : 0;
        if (s.c(*u, x, k) != want || s.c(x, *u, k) != want) {
          fail("unit", "unit law fails for '" + lab(x) + "'", {*u, x, k});
          break;
        }
      }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        int sg = ((s.degree(i) & 1) && (s.degree(j) & 1)) ? -1 : 1;
        if (s.c(i, j, k) != sg * s.c(j, i, k))
          fail("commutativity", lab(i) + "*" + lab(j) + " is not graded commutative", {i, j, k});
      }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) {
          Rational l = 0, r = 0;
          for (std::size_t m = 0; m < n; ++m) {
            l += s.c(a, b, m) * s.c(m, c, k);
            r += s.c(b, c, m) * s.c(a, m, k);
          }
          if (l != r) fail("associativity", "(" + lab(a) + "*" + lab(b) + ")*" + lab(c) + " != " + lab(a) + "*(" + lab(b) + "*" + lab(c) + ")", {a, b, c});
        }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.pair(i, j) != 0 && s.degree(i) + s.degree(j) != s.dimension)
        fail("pairing-degree", "<" + lab(i) + "," + lab(j) + "> is nonzero but degrees do not sum to d", {i, j});
      int sg = ((s.degree(i) & 1) && (s.degree(j) & 1)) ? -1 : 1;
      if (s.pair(i, j) != sg * s.pair(j, i))
        fail("pairing-symmetry", "<" + lab(i) + "," + lab(j) + "> is not graded symmetric", {i, j});
    }

  SparseMatrix P(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) P.set(i, j, s.pair(i, j));
  auto rki = rank_kernel_image(P);
  for (const auto& v : rki.kernel.vectors) {
    std::size_t w = v.entries.back().first;
    fail("nondegeneracy", "pairing is degenerate; kernel involves '" + lab(w) + "'", {w});
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Rational l = 0, r = 0;
        for (std::size_t m = 0; m < n; ++m) {
          l += s.c(a, b, m) * s.pair(m, c);
          r += s.c(b, c, m) * s.pair(a, m);
        }
        if (l != r) fail("invariance", "<" + lab(a) + "*" + lab(b) + "," + lab(c) + "> != <" + lab(a) + "," + lab(b) + "*" + lab(c) + ">", {a, b, c});
      }
  return rep;
}

FrobeniusAlgebraSpec unit_first(const FrobeniusAlgebraSpec& s) {
  auto u = s.unit_index();
  if (!u) throw std::invalid_argument("algebra has no unique degree-0 element");
  if (*u == 0) return s;
  const std::size_t n = s.size();
  std::vector<std::size_t> perm;  // new index -> old index
  perm.push_back(*u);
  for (std::size_t i = 0; i < n; ++i)
    if (i != *u) perm.push_back(i);
  GradedBasis b;
  for (auto p : perm) b.elements.push_back(s.basis.elements[p]);
  FrobeniusAlgebraSpec r(s.name, b, s.dimension);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.pair(i, j) = s.pair(perm[i], perm[j]);
      for (std::size_t k = 0; k < n; ++k) r.c(i, j, k) = s.c(perm[i], perm[j], perm[k]);
    }
  return r;
}

FrobeniusAlgebraSpec sphere_algebra(int n) {
  if (n < 2) throw std::invalid_argument("sphere dimension must be at least 2");
  GradedBasis b;
  b.elements = {{"1", 0}, {"x", n}};
  FrobeniusAlgebraSpec s("S" + std::to_string(n), b, n);
  s.c(0, 0, 0) = 1;
  s.c(0, 1, 1) = 1;
  s.c(1, 0, 1) = 1;
  s.set_pair_symmetric(0, 1, 1);
  return s;
}

FrobeniusAlgebraSpec projective_algebra(int n) {
  if (n < 1) throw std::invalid_argument("complex projective dimension must be at least 1");
  GradedBasis b;
  for (int i = 0; i <= n; ++i) b.elements.push_back({i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)), 2 * i});
  FrobeniusAlgebraSpec s("CP" + std::to_string(n), b, 2 * n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) s.c(i, j, i + j) = 1;
    s.pair(i, n - i) = 1;
  }
  return s;
}

FrobeniusAlgebraSpec point_algebra() {
  GradedBasis b;
  b.elements = {{"1", 0}};
  FrobeniusAlgebraSpec s("pt", b, 0);
  s.c(0, 0, 0) = 1;
  s.pair(0, 0) = 1;
  return s;
}

FrobeniusAlgebraSpec tensor_algebra(const FrobeniusAlgebraSpec& A, const FrobeniusAlgebraSpec& B) {
  const std::size_t na = A.size(), nb = B.size();
  GradedBasis b;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      std::string la = A.basis.label(i), lb = B.basis.label(j);
      std::string l;
      if (A.degree(i) == 0 && B.degree(j) == 0) l = "1";
      else if (A.degree(i) == 0) l = lb;
      else if (B.degree(j) == 0) l = la;
      else l = la + "*" + lb;
      b.elements.push_back({l, A.degree(i) + B.degree(j)});
    }
  // disambiguate labels coming from identical factors
  std::set<std::string> seen;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      auto& l = b.elements[i * nb + j].first;
      if (A.degree(i) != 0 && B.degree(j) == 0) l += "_1";
      if (A.degree(i) == 0 && B.degree(j) != 0) l += "_2";
    }
  FrobeniusAlgebraSpec s(A.name + "x" + B.name, b, A.dimension + B.dimension);
  auto idx = [&](std::size_t i, std::size_t j) { return i * nb + j; };
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          int sg = ((B.degree(j1) & 1) && (A.degree(i2) & 1)) ? -1 : 1;
          s.pair(idx(i1, j1), idx(i2, j2)) = sg * A.pair(i1, i2) * B.pair(j1, j2);
          for (std::size_t k1 = 0; k1 < na; ++k1) {
            if (A.c(i1, i2, k1) == 0) continue;
            for (std::size_t k2 = 0; k2 < nb; ++k2)
              s.c(idx(i1, j1), idx(i2, j2), idx(k1, k2)) += sg * A.c(i1, i2, k1) * B.c(j1, j2, k2);
          }
        }
  return s;
}

FrobeniusAlgebraSpec negate_pairing(const FrobeniusAlgebraSpec& spec) { return scale_pairing(spec, -1); }

FrobeniusAlgebraSpec scale_pairing(const FrobeniusAlgebraSpec& spec, const Rational& lambda) {
  FrobeniusAlgebraSpec r = spec;
  for (auto& v : r.pairing) v *= lambda;
  return r;
}

FrobeniusAlgebraSpec rescale_basis(const FrobeniusAlgebraSpec& spec, const std::vector<Rational>& l) {
  const std::size_t n = spec.size();
  if (l.size() != n) throw std::invalid_argument("rescale_basis: wrong length");
  FrobeniusAlgebraSpec r = spec;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.pair(i, j) = spec.pair(i, j) * l[i] * l[j];
      for (std::size_t k = 0; k < n; ++k) r.c(i, j, k) = spec.c(i, j, k) * l[i] * l[j] / l[k];
    }
  return r;
}

bool same_structure(const FrobeniusAlgebraSpec& a, const FrobeniusAlgebraSpec& b) {
  return a.size() == b.size() && a.dimension == b.dimension && a.product == b.product && a.pairing == b.pairing;
}

std::optional<std::vector<Rational>> flip_absorbing_rescaling(const FrobeniusAlgebraSpec& spec) {
  const std::size_t n = spec.size();
  if (n > 20) throw std::invalid_argument("flip_absorbing_rescaling: basis too large");
  auto u = spec.unit_index();
  FrobeniusAlgebraSpec target = negate_pairing(spec);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (u && ((mask >> *u) & 1)) continue;
    std::vector<Rational> l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = ((mask >> i) & 1) ? -1 : 1;
    if (same_structure(rescale_basis(spec, l), target)) return l;
  }
  return std::nullopt;
}

}  // namespace stringhom
