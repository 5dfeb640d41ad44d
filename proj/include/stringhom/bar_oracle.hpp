#pragma once

#include "stringhom/algebra.hpp"

#include <map>
#include <vector>

namespace stringhom {

// Normalized cochains Hom(Abar^{(x)p}, M) for M = A or its linear dual, with the
// classical Hochschild differential. Independent of the derivation model.
enum class Coefficients { V, VDUAL };

struct BarCochain {
  std::vector<std::size_t> arguments;  // reduced basis indices
  std::size_t value = 0;               // basis index of the coefficient module
  auto operator<=>(const BarCochain&) const = default;
};

struct BarSpace {
  int degree = 0;
  std::vector<BarCochain> basis;
  std::map<BarCochain, std::size_t> index;
};

// Classical degree: p + |value| - sum |arguments| (or -|value| for the dual).
BarSpace bar_space(const FrobeniusAlgebraSpec& unit_first_spec, Coefficients c, int degree);
SparseMatrix bar_differential(const FrobeniusAlgebraSpec& unit_first_spec, Coefficients c, const BarSpace& from,
                              const BarSpace& to);

struct OracleReport {
  Coefficients coefficients = Coefficients::V;
  std::map<int, std::size_t> ranks;
};

std::size_t bar_oracle_rank(const FrobeniusAlgebraSpec& spec, Coefficients c, int degree);
OracleReport bar_oracle(const FrobeniusAlgebraSpec& spec, Coefficients c, int min_degree, int max_degree);

}  // namespace stringhom
