#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stringhom {

// mpq_class keeps values canonical (lowest terms, positive denominator).
using Rational = mpq_class;

std::string to_fraction_string(const Rational& q);   // always "p/q"
Rational parse_rational(const std::string& text);    // accepts "p", "p/q", "-p/q"

// Sparse vector: strictly increasing indices, no stored zeros.
struct SparseVector {
  std::vector<std::pair<std::size_t, Rational>> entries;

  bool empty() const { return entries.empty(); }
  Rational get(std::size_t i) const;
  void push(std::size_t i, const Rational& v);  // indices must be appended in increasing order
  bool operator==(const SparseVector& o) const { return entries == o.entries; }
  static SparseVector from_map(const std::map<std::size_t, Rational>& m);
  static SparseVector from_dense(const std::vector<Rational>& v);
};

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }

  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  Rational get(std::size_t r, std::size_t c) const;
  const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const { return entries_; }

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  bool is_zero() const { return entries_.empty(); }
  SparseVector column(std::size_t c) const;
  SparseVector apply(const SparseVector& x) const;
  std::vector<SparseVector> row_vectors() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<SparseVector> vectors;
  std::size_t dim() const { return vectors.size(); }
};

struct EliminationOptions {
  // Switch to dense elimination once the active block is at least this full.
  double dense_fill_threshold = 0.25;
  // Dense switching is only considered for blocks with at least this many rows.
  std::size_t dense_min_rows = 48;
};

EliminationOptions& default_elimination_options();

struct RankKernelImage {
  std::size_t rank = 0;
  SubspaceBasis kernel;
  SubspaceBasis image;
  std::vector<std::size_t> pivot_columns;
};

RankKernelImage rank_kernel_image(const SparseMatrix& m,
                                  const EliminationOptions& opt = default_elimination_options());
std::size_t rank(const SparseMatrix& m, const EliminationOptions& opt = default_elimination_options());

// Reduced row echelon form of a family of vectors, reusable for repeated
// membership and reduction queries.
class EchelonForm {
 public:
  EchelonForm() = default;
  EchelonForm(std::size_t ambient_dim, const std::vector<SparseVector>& vectors,
              const EliminationOptions& opt = default_elimination_options());

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Remainder of v after clearing all pivot coordinates (zero iff v is in the span).
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  // Coefficients c with v = sum c_i * rows_i where rows_i are the echelon rows; nullopt if outside.
  std::optional<std::vector<Rational>> coordinates(const SparseVector& v) const;
  // Adds v if independent; returns true when the rank grew.
  bool insert(const SparseVector& v);
  const std::vector<SparseVector>& rows() const { return rows_; }

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVector> rows_;        // row i has pivot pivots_[i] with coefficient 1
  std::vector<std::size_t> pivots_;
  std::map<std::size_t, std::size_t> pivot_row_;
};

bool in_span(const SparseVector& v, const SubspaceBasis& basis);

struct InclusionError : std::runtime_error {
  SparseVector witness;
  InclusionError(const std::string& msg, SparseVector w) : std::runtime_error(msg), witness(std::move(w)) {}
};

// dim(numerator) - dim(denominator); throws InclusionError if denominator is not inside numerator.
std::size_t quotient_rank(const SubspaceBasis& numerator, const SubspaceBasis& denominator);

// Vectors of numerator that extend a basis of denominator to a basis of span(numerator) + span(denominator).
std::vector<SparseVector> complement_representatives(const SubspaceBasis& numerator,
                                                     const SubspaceBasis& denominator);

SparseVector add_scaled(const SparseVector& a, const SparseVector& b, const Rational& s);  // a + s*b
SparseVector scaled(const SparseVector& a, const Rational& s);

// Coordinates c with v - sum c_i basis_i in span(modulo); nullopt if v is not in
// span(basis) + span(modulo). basis must be independent modulo `modulo`.
std::optional<std::vector<Rational>> coordinates_modulo(const std::vector<SparseVector>& basis,
                                                        const SubspaceBasis& modulo, const SparseVector& v);
}  // namespace stringhom
