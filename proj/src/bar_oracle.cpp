#include "stringhom/bar_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace stringhom {

namespace {

int sum_degrees(const FrobeniusAlgebraSpec& s, const std::vector<std::size_t>& args) {
  int d = 0;
  for (auto a : args) d += s.degree(a);
  return d;
}

int internal_degree(const FrobeniusAlgebraSpec& s, Coefficients c, const BarCochain& f) {
  int v = s.degree(f.value);
  return (c == Coefficients::V ? v : -v) - sum_degrees(s, f.arguments);
}

void tuples(const FrobeniusAlgebraSpec& s, const std::vector<std::size_t>& reduced, std::size_t p, int total,
            std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == p) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (auto r : reduced) {
    int d = s.degree(r);
    if (d > total) continue;
    cur.push_back(r);
    tuples(s, reduced, p, total - d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BarSpace bar_space(const FrobeniusAlgebraSpec& s, Coefficients c, int degree) {
  BarSpace sp;
  sp.degree = degree;
  std::vector<std::size_t> reduced;
  int min_deg = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.degree(i) > 0) {
      reduced.push_back(i);
      min_deg = min_deg == 0 ? s.degree(i) : std::min(min_deg, s.degree(i));
    }
  if (!reduced.empty() && min_deg < 2) throw std::invalid_argument("bar oracle needs reduced degrees >= 2");
  for (std::size_t e = 0; e < s.size(); ++e) {
    int v = c == Coefficients::V ? s.degree(e) : -s.degree(e);
    // degree = p + v - sum, sum >= min_deg * p
    for (std::size_t p = 0;; ++p) {
      int sum = static_cast<int>(p) + v - degree;
      if (p == 0) {
        if (sum == 0) {
          BarCochain f{{}, e};
          sp.index.emplace(f, sp.basis.size());
          sp.basis.push_back(f);
        }
        continue;
      }
      // sum - min_deg * p decreases in p, so the first failure is final
      if (reduced.empty() || sum < min_deg * static_cast<int>(p)) break;
      std::vector<std::vector<std::size_t>> ts;
      std::vector<std::size_t> cur;
      tuples(s, reduced, p, sum, cur, ts);
      for (auto& t : ts) {
        BarCochain f{t, e};
        sp.index.emplace(f, sp.basis.size());
        sp.basis.push_back(f);
      }
    }
  }
  return sp;
}

SparseMatrix bar_differential(const FrobeniusAlgebraSpec& s, Coefficients c, const BarSpace& from,
                              const BarSpace& to) {
  SparseMatrix M(to.basis.size(), from.basis.size());
  const std::size_t n = s.size();
  auto put = [&](const std::vector<std::size_t>& args, std::size_t value, std::size_t col, const Rational& v) {
    if (v == 0) return;
    auto it = to.index.find(BarCochain{args, value});
    if (it == to.index.end()) throw std::logic_error("bar differential left its target degree");
    M.add(it->second, col, v);
  };
  for (std::size_t col = 0; col < from.basis.size(); ++col) {
    const BarCochain& f = from.basis[col];
    const std::size_t p = f.arguments.size();
    const int fdeg = internal_degree(s, c, f);
    const std::size_t e = f.value;
    for (std::size_t a = 0; a < n; ++a) {
      if (s.degree(a) == 0) continue;
      std::vector<std::size_t> left{a};
      left.insert(left.end(), f.arguments.begin(), f.arguments.end());
      std::vector<std::size_t> right = f.arguments;
      right.push_back(a);
      int sl = ((fdeg & 1) && (s.degree(a) & 1)) ? -1 : 1;
      int sr = (p + 1) % 2 ? -1 : 1;
      for (std::size_t b = 0; b < n; ++b) {
        if (c == Coefficients::V) {
          put(left, b, col, sl * s.c(a, e, b));
          put(right, b, col, sr * s.c(e, a, b));
        } else {
          // (a.phi)(x) = (-1)^{|a|(|phi|+|x|)} phi(x a), (phi.a)(x) = phi(a x)
          int sa = ((s.degree(a) & 1) && ((s.degree(b) - s.degree(e)) & 1)) ? -1 : 1;
          put(left, b, col, sl * sa * s.c(b, a, e));
          put(right, b, col, sr * s.c(a, b, e));
        }
      }
    }
    for (std::size_t i = 0; i < p; ++i) {
      int si = (i + 1) % 2 ? -1 : 1;
      for (std::size_t x = 0; x < n; ++x) {
        if (s.degree(x) == 0) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (s.degree(y) == 0) continue;
          const Rational& cxy = s.c(x, y, f.arguments[i]);
          if (cxy == 0) continue;
          std::vector<std::size_t> args(f.arguments.begin(), f.arguments.begin() + i);
          args.push_back(x);
          args.push_back(y);
          args.insert(args.end(), f.arguments.begin() + i + 1, f.arguments.end());
          put(args, e, col, si * cxy);
        }
      }
    }
  }
  return M;
}

std::size_t bar_oracle_rank(const FrobeniusAlgebraSpec& input, Coefficients c, int degree) {
  FrobeniusAlgebraSpec s = unit_first(input);
  BarSpace prev = bar_space(s, c, degree - 1), cur = bar_space(s, c, degree), next = bar_space(s, c, degree + 1);
  SparseMatrix din = bar_differential(s, c, prev, cur), dout = bar_differential(s, c, cur, next);
  if (!(dout * din).is_zero()) throw std::logic_error("bar oracle differential does not square to zero");
  return cur.basis.size() - rank(dout) - rank(din);
}

OracleReport bar_oracle(const FrobeniusAlgebraSpec& spec, Coefficients c, int min_degree, int max_degree) {
  OracleReport r;
  r.coefficients = c;
  for (int n = min_degree; n <= max_degree; ++n) r.ranks[n] = bar_oracle_rank(spec, c, n);
  return r;
}

}  // namespace stringhom
