#ifndef DERLIE_RATMAT_HPP
#define DERLIE_RATMAT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "derlie/rational.hpp"

namespace derlie {

/// Dense matrix of exact rationals, row-major. Desk-scale sizes; correctness
/// over speed. Immutable use pattern: operations return fresh values.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

  /// Build from a list of column vectors (all of length `rows`).
  static RatMatrix fromColumns(const std::vector<RatVec>& columns, std::size_t rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  RatVec column(std::size_t c) const;
  std::vector<RatVec> columns() const;

  /// Matrix-vector product; v.size() must equal cols().
  RatVec apply(const RatVec& v) const;

  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row, ascending
  RatMatrix reduced;
};

/// Unique reduced row-echelon form, deterministic pivoting (first nonzero
/// column, first nonzero row).
RrefResult rref(const RatMatrix& m);

/// Basis of the null space {v : m v = 0}; size is cols - rank. Each vector is
/// the standard rref back-substitution solution with a 1 in its free column.
std::vector<RatVec> kernelBasis(const RatMatrix& m);

/// Coefficients c with sum c_i span_i == target, or nullopt when target is
/// outside the span. Throws Error(DimensionMismatch) on ragged input.
std::optional<RatVec> inSpan(const std::vector<RatVec>& span, const RatVec& target);

/// Incremental row space with exact membership tests. Seeding it with boundary
/// vectors and then offering cycles is how homology representatives get picked.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambientDim) : dim_(ambientDim) {}

  std::size_t ambientDim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  bool contains(const RatVec& v) const;

  /// Insert v; returns true when the rank grew (v was independent).
  bool add(RatVec v);

 private:
  RatVec reduce(RatVec v) const;

  std::size_t dim_;
  // rows kept in echelon form: rows_[i] has leading 1 at leads_[i]
  std::vector<RatVec> rows_;
  std::vector<std::size_t> leads_;
};

}  // namespace derlie

#endif
