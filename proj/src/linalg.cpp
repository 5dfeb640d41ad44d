#include "stringhom/linalg.hpp"

#include <algorithm>
#include <set>

namespace stringhom {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  auto is_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_int(num, true) || !is_int(den, false)) throw std::invalid_argument("malformed rational '" + text + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational SparseVector::get(std::size_t i) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), i,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != entries.end() && it->first == i) return it->second;
  return 0;
}

void SparseVector::push(std::size_t i, const Rational& v) {
  if (v == 0) return;
  if (!entries.empty() && entries.back().first >= i) throw std::logic_error("SparseVector::push out of order");
  entries.emplace_back(i, v);
}

SparseVector SparseVector::from_map(const std::map<std::size_t, Rational>& m) {
  SparseVector v;
  for (const auto& [i, c] : m) v.push(i, c);
  return v;
}

SparseVector SparseVector::from_dense(const std::vector<Rational>& d) {
  SparseVector v;
  for (std::size_t i = 0; i < d.size(); ++i) v.push(i, d[i]);
  return v;
}

SparseVector add_scaled(const SparseVector& a, const SparseVector& b, const Rational& s) {
  SparseVector r;
  std::size_t i = 0, j = 0;
  while (i < a.entries.size() || j < b.entries.size()) {
    if (j == b.entries.size() || (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
      r.entries.push_back(a.entries[i++]);
    } else if (i == a.entries.size() || b.entries[j].first < a.entries[i].first) {
      Rational v = s * b.entries[j].second;
      r.push(b.entries[j].first, v);
      ++j;
    } else {
      Rational v = a.entries[i].second + s * b.entries[j].second;
      r.push(a.entries[i].first, v);
      ++i, ++j;
    }
  }
  return r;
}

SparseVector scaled(const SparseVector& a, const Rational& s) {
  SparseVector r;
  if (s == 0) return r;
  for (const auto& [i, v] : a.entries) r.entries.emplace_back(i, v * s);
  return r;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::set index out of range");
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::add index out of range");
  if (v == 0) return;
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    entries_.emplace(std::make_pair(r, c), v);
  } else {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.entries_.emplace(std::make_pair(rc.second, rc.first), v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("SparseMatrix product dimension mismatch");
  std::vector<std::vector<std::pair<std::size_t, Rational>>> orows(o.rows_);
  for (const auto& [rc, v] : o.entries_) orows[rc.first].emplace_back(rc.second, v);
  SparseMatrix p(rows_, o.cols_);
  for (const auto& [rc, v] : entries_)
    for (const auto& [c, w] : orows[rc.second]) p.add(rc.first, c, v * w);
  return p;
}

SparseVector SparseMatrix::column(std::size_t c) const {
  std::map<std::size_t, Rational> m;
  for (const auto& [rc, v] : entries_)
    if (rc.second == c) m[rc.first] = v;
  return SparseVector::from_map(m);
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [rc, v] : entries_) {
    Rational xc = x.get(rc.second);
    if (xc != 0) acc[rc.first] += v * xc;
  }
  std::map<std::size_t, Rational> clean;
  for (auto& [i, v] : acc)
    if (v != 0) clean[i] = v;
  return SparseVector::from_map(clean);
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<SparseVector> rows(rows_);
  for (const auto& [rc, v] : entries_) rows[rc.first].entries.emplace_back(rc.second, v);
  return rows;
}

EliminationOptions& default_elimination_options() {
  static EliminationOptions opt;
  return opt;
}

namespace {

// Integer row with strictly increasing column indices and primitive content.
struct IntRow {
  std::vector<std::size_t> idx;
  std::vector<mpz_class> val;

  std::size_t size() const { return idx.size(); }
  const mpz_class* at(std::size_t c) const {
    auto it = std::lower_bound(idx.begin(), idx.end(), c);
    if (it == idx.end() || *it != c) return nullptr;
    return &val[it - idx.begin()];
  }
};

void make_primitive(IntRow& r) {
  if (r.val.empty()) return;
  mpz_class g = 0;
  for (const auto& v : r.val) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (r.val.front() < 0) g = -g;
  if (g != 1)
    for (auto& v : r.val) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const SparseVector& v) {
  IntRow r;
  mpz_class l = 1;
  for (const auto& e : v.entries) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
  for (const auto& e : v.entries) {
    r.idx.push_back(e.first);
    r.val.push_back(e.second.get_num() * (l / e.second.get_den()));
  }
  make_primitive(r);
  return r;
}

// r <- p*r - a*s, where a is r's entry and p is s's entry in the pivot column.
IntRow combine(const IntRow& r, const mpz_class& p, const IntRow& s, const mpz_class& a) {
  IntRow out;
  out.idx.reserve(r.size() + s.size());
  out.val.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  mpz_class t;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r.idx[i] < s.idx[j])) {
      out.idx.push_back(r.idx[i]);
      out.val.push_back(p * r.val[i]);
      ++i;
    } else if (i == r.size() || s.idx[j] < r.idx[i]) {
      out.idx.push_back(s.idx[j]);
      out.val.push_back(-a * s.val[j]);
      ++j;
    } else {
      t = p * r.val[i] - a * s.val[j];
      if (t != 0) {
        out.idx.push_back(r.idx[i]);
        out.val.push_back(t);
      }
      ++i, ++j;
    }
  }
  make_primitive(out);
  return out;
}

struct Echelon {
  std::vector<IntRow> rows;  // pivot rows in increasing pivot order after finish()
  std::vector<std::size_t> pivots;
};

// Dense fraction-free elimination of the active block on columns >= c0.
void dense_phase(std::vector<IntRow>& active, std::size_t c0, std::size_t ncols, Echelon& out) {
  std::size_t w = ncols - c0;
  std::vector<std::vector<mpz_class>> D(active.size(), std::vector<mpz_class>(w));
  for (std::size_t r = 0; r < active.size(); ++r)
    for (std::size_t k = 0; k < active[r].size(); ++k) D[r][active[r].idx[k] - c0] = active[r].val[k];
  std::vector<bool> used(D.size(), false);
  mpz_class g;
  for (std::size_t c = 0; c < w; ++c) {
    std::size_t best = D.size();
    std::size_t best_bits = 0;
    for (std::size_t r = 0; r < D.size(); ++r) {
      if (used[r] || D[r][c] == 0) continue;
      std::size_t b = mpz_sizeinbase(D[r][c].get_mpz_t(), 2);
      if (best == D.size() || b < best_bits) best = r, best_bits = b;
    }
    if (best == D.size()) continue;
    used[best] = true;
    const mpz_class p = D[best][c];
    for (std::size_t r = 0; r < D.size(); ++r) {
      if (used[r] || D[r][c] == 0) continue;
      const mpz_class a = D[r][c];
      g = 0;
      for (std::size_t k = c; k < w; ++k) {
        D[r][k] = p * D[r][k] - a * D[best][k];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), D[r][k].get_mpz_t());
      }
      if (g > 1)
        for (std::size_t k = c; k < w; ++k) mpz_divexact(D[r][k].get_mpz_t(), D[r][k].get_mpz_t(), g.get_mpz_t());
    }
    IntRow row;
    for (std::size_t k = c; k < w; ++k)
      if (D[best][k] != 0) row.idx.push_back(k + c0), row.val.push_back(D[best][k]);
    make_primitive(row);
    out.rows.push_back(std::move(row));
    out.pivots.push_back(c + c0);
  }
  active.clear();
}

Echelon eliminate(std::vector<IntRow> active, std::size_t ncols, const EliminationOptions& opt) {
  Echelon out;
  std::vector<std::set<std::size_t>> col_rows(ncols);
  std::size_t nnz = 0;
  for (std::size_t r = 0; r < active.size(); ++r) {
    for (auto c : active[r].idx) col_rows[c].insert(r);
    nnz += active[r].size();
  }
  std::vector<bool> alive(active.size(), true);
  std::size_t alive_count = active.size();

  for (std::size_t c = 0; c < ncols; ++c) {
    if (alive_count >= opt.dense_min_rows &&
        static_cast<double>(nnz) >= opt.dense_fill_threshold * static_cast<double>(alive_count) *
                                         static_cast<double>(ncols - c)) {
      std::vector<IntRow> rest;
      for (std::size_t r = 0; r < active.size(); ++r)
        if (alive[r]) rest.push_back(std::move(active[r]));
      dense_phase(rest, c, ncols, out);
      return out;
    }
    if (col_rows[c].empty()) continue;
    std::size_t best = 0;
    std::size_t best_bits = 0, best_len = 0;
    bool have = false;
    for (auto r : col_rows[c]) {
      std::size_t b = mpz_sizeinbase(active[r].at(c)->get_mpz_t(), 2);
      std::size_t l = active[r].size();
      if (!have || b < best_bits || (b == best_bits && l < best_len)) {
        best = r, best_bits = b, best_len = l, have = true;
      }
    }
    std::vector<std::size_t> targets(col_rows[c].begin(), col_rows[c].end());
    for (auto c2 : active[best].idx) col_rows[c2].erase(best);
    alive[best] = false;
    --alive_count;
    nnz -= active[best].size();
    const IntRow& piv = active[best];
    const mpz_class p = *piv.at(c);
    for (auto r : targets) {
      if (r == best) continue;
      const mpz_class a = *active[r].at(c);
      IntRow nr = combine(active[r], p, piv, a);
      for (auto c2 : active[r].idx) col_rows[c2].erase(r);
      nnz -= active[r].size();
      active[r] = std::move(nr);
      for (auto c2 : active[r].idx) col_rows[c2].insert(r);
      nnz += active[r].size();
    }
    out.rows.push_back(std::move(active[best]));
    out.pivots.push_back(c);
  }
  return out;
}

// Clear every pivot column from all other pivot rows.
void back_substitute(Echelon& e) {
  for (std::size_t k = e.rows.size(); k-- > 0;) {
    std::size_t c = e.pivots[k];
    mpz_class p = *e.rows[k].at(c);
    for (std::size_t j = 0; j < k; ++j) {
      const mpz_class* a = e.rows[j].at(c);
      if (!a) continue;
      mpz_class av = *a;
      e.rows[j] = combine(e.rows[j], p, e.rows[k], av);
    }
  }
}

SparseVector to_rational_row(const IntRow& r, std::size_t pivot) {
  SparseVector v;
  mpz_class p = *r.at(pivot);
  for (std::size_t k = 0; k < r.size(); ++k) v.entries.emplace_back(r.idx[k], Rational(r.val[k], p));
  for (auto& e : v.entries) e.second.canonicalize();
  return v;
}

}  // namespace

RankKernelImage rank_kernel_image(const SparseMatrix& m, const EliminationOptions& opt) {
  std::vector<IntRow> rows;
  for (const auto& rv : m.row_vectors())
    if (!rv.empty()) rows.push_back(to_int_row(rv));
  Echelon e = eliminate(std::move(rows), m.cols(), opt);
  back_substitute(e);

  RankKernelImage res;
  res.rank = e.pivots.size();
  res.pivot_columns = e.pivots;
  res.kernel.ambient_dim = m.cols();
  res.image.ambient_dim = m.rows();

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  // column f of the reduced rows, per pivot row
  std::vector<std::vector<std::pair<std::size_t, Rational>>> by_col(m.cols());
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    mpz_class p = *e.rows[k].at(e.pivots[k]);
    for (std::size_t t = 0; t < e.rows[k].size(); ++t) {
      std::size_t c = e.rows[k].idx[t];
      if (is_pivot[c]) continue;
      Rational q(e.rows[k].val[t], p);
      q.canonicalize();
      by_col[c].emplace_back(e.pivots[k], -q);
    }
  }
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::map<std::size_t, Rational> v;
    v[f] = 1;
    for (const auto& [c, q] : by_col[f]) v[c] = q;
    res.kernel.vectors.push_back(SparseVector::from_map(v));
  }
  if (!e.pivots.empty()) {
    std::vector<std::map<std::size_t, Rational>> cols(m.cols());
    for (const auto& [rc, v] : m.entries())
      if (is_pivot[rc.second]) cols[rc.second][rc.first] = v;
    for (auto c : e.pivots) res.image.vectors.push_back(SparseVector::from_map(cols[c]));
  }
  return res;
}

std::size_t rank(const SparseMatrix& m, const EliminationOptions& opt) {
  std::vector<IntRow> rows;
  for (const auto& rv : m.row_vectors())
    if (!rv.empty()) rows.push_back(to_int_row(rv));
  return eliminate(std::move(rows), m.cols(), opt).pivots.size();
}

EchelonForm::EchelonForm(std::size_t ambient_dim, const std::vector<SparseVector>& vectors,
                         const EliminationOptions& opt)
    : dim_(ambient_dim) {
  std::vector<IntRow> rows;
  for (const auto& v : vectors) {
    if (!v.entries.empty() && v.entries.back().first >= ambient_dim)
      throw std::invalid_argument("vector exceeds ambient dimension");
    if (!v.empty()) rows.push_back(to_int_row(v));
  }
  Echelon e = eliminate(std::move(rows), ambient_dim, opt);
  back_substitute(e);
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    pivot_row_[e.pivots[k]] = rows_.size();
    rows_.push_back(to_rational_row(e.rows[k], e.pivots[k]));
    pivots_.push_back(e.pivots[k]);
  }
}

SparseVector EchelonForm::reduce(const SparseVector& v) const {
  if (!v.entries.empty() && v.entries.back().first >= dim_) throw std::invalid_argument("dimension mismatch");
  SparseVector r = v;
  // rows are fully reduced, so each pivot can be cleared independently using the original coordinate
  for (const auto& [c, val] : v.entries) {
    auto it = pivot_row_.find(c);
    if (it == pivot_row_.end()) continue;
    Rational cur = r.get(c);
    if (cur != 0) r = add_scaled(r, rows_[it->second], -cur);
  }
  // reduction may introduce no new pivot entries since rows have zeros at other pivots
  return r;
}

bool EchelonForm::contains(const SparseVector& v) const { return reduce(v).empty(); }

std::optional<std::vector<Rational>> EchelonForm::coordinates(const SparseVector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Rational> c(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v.get(pivots_[k]);
  return c;
}

bool EchelonForm::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  std::size_t c = r.entries.front().first;
  r = scaled(r, 1 / r.entries.front().second);
  for (auto& row : rows_) {
    Rational a = row.get(c);
    if (a != 0) row = add_scaled(row, r, -a);
  }
  pivot_row_[c] = rows_.size();
  rows_.push_back(std::move(r));
  pivots_.push_back(c);
  return true;
}

bool in_span(const SparseVector& v, const SubspaceBasis& basis) {
  if (!v.entries.empty() && v.entries.back().first >= basis.ambient_dim)
    throw std::invalid_argument("in_span: dimension mismatch");
  return EchelonForm(basis.ambient_dim, basis.vectors).contains(v);
}

std::size_t quotient_rank(const SubspaceBasis& numerator, const SubspaceBasis& denominator) {
  if (numerator.ambient_dim != denominator.ambient_dim) throw std::invalid_argument("quotient_rank: dimension mismatch");
  EchelonForm num(numerator.ambient_dim, numerator.vectors);
  for (const auto& v : denominator.vectors)
    if (!num.contains(v)) throw InclusionError("denominator not contained in numerator", v);
  EchelonForm den(denominator.ambient_dim, denominator.vectors);
  return num.rank() - den.rank();
}

std::vector<SparseVector> complement_representatives(const SubspaceBasis& numerator,
                                                     const SubspaceBasis& denominator) {
  EchelonForm acc(numerator.ambient_dim, denominator.vectors);
  std::vector<SparseVector> reps;
  for (const auto& v : numerator.vectors)
    if (acc.insert(v)) reps.push_back(v);
  return reps;
}

std::optional<std::vector<Rational>> coordinates_modulo(const std::vector<SparseVector>& basis,
                                                        const SubspaceBasis& modulo, const SparseVector& v) {
  EchelonForm mod(modulo.ambient_dim, modulo.vectors);
  std::vector<SparseVector> red;
  for (const auto& b : basis) red.push_back(mod.reduce(b));
  SparseVector target = mod.reduce(v);
  std::vector<Rational> c(basis.size());
  if (target.empty()) return c;
  SparseMatrix M(modulo.ambient_dim, basis.size() + 1);
  for (std::size_t j = 0; j < red.size(); ++j)
    for (const auto& [i, x] : red[j].entries) M.set(i, j, x);
  for (const auto& [i, x] : target.entries) M.set(i, basis.size(), x);
  auto rki = rank_kernel_image(M);
  for (const auto& k : rki.kernel.vectors) {
    Rational last = k.get(basis.size());
    if (last == 0) continue;
    for (const auto& [j, x] : k.entries)
      if (j < basis.size()) c[j] = -x / last;
    return c;
  }
  return std::nullopt;
}
}  // namespace stringhom
