#include "derlie/ratmat.hpp"

#include <algorithm>

#include "derlie/error.hpp"

namespace derlie {

RatMatrix RatMatrix::fromColumns(const std::vector<RatVec>& columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error(errc::DimensionMismatch, "column length disagrees with row count");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatVec RatMatrix::row(std::size_t r) const {
  RatVec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

RatVec RatMatrix::column(std::size_t c) const {
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<RatVec> RatMatrix::columns() const {
  std::vector<RatVec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_)
    throw Error(errc::DimensionMismatch, "vector length disagrees with column count");
  RatVec out(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!isZero(at(r, c)) && !isZero(v[c])) out[r] += at(r, c) * v[c];
  return out;
}

RrefResult rref(const RatMatrix& m) {
  RrefResult res;
  res.reduced = m;
  RatMatrix& a = res.reduced;
  std::size_t pivotRow = 0;
  for (std::size_t col = 0; col < a.cols() && pivotRow < a.rows(); ++col) {
    // first nonzero row at or below pivotRow
    std::size_t sel = pivotRow;
    while (sel < a.rows() && isZero(a.at(sel, col))) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivotRow)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pivotRow, c));
    Rat inv = 1 / a.at(pivotRow, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(pivotRow, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivotRow || isZero(a.at(r, col))) continue;
      Rat factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= factor * a.at(pivotRow, c);
    }
    res.pivots.push_back(col);
    ++pivotRow;
  }
  res.rank = res.pivots.size();
  return res;
}

std::vector<RatVec> kernelBasis(const RatMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (std::size_t p : r.pivots) isPivot[p] = true;

  std::vector<RatVec> basis;
  for (std::size_t freeCol = 0; freeCol < m.cols(); ++freeCol) {
    if (isPivot[freeCol]) continue;
    RatVec v(m.cols(), Rat(0));
    v[freeCol] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.reduced.at(i, freeCol);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> inSpan(const std::vector<RatVec>& span, const RatVec& target) {
  for (const RatVec& v : span)
    if (v.size() != target.size())
      throw Error(errc::DimensionMismatch, "span and target vectors have different lengths");

  // Solve span-as-columns * c = target by eliminating the augmented system.
  const std::size_t rows = target.size();
  const std::size_t cols = span.size();
  RatMatrix aug(rows, cols + 1);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) aug.at(r, c) = span[c][r];
  for (std::size_t r = 0; r < rows; ++r) aug.at(r, cols) = target[r];

  RrefResult red = rref(aug);
  RatVec coeffs(cols, Rat(0));
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] == cols) return std::nullopt;  // pivot in the target column
    coeffs[red.pivots[i]] = red.reduced.at(i, cols);
  }
  return coeffs;
}

RatVec SpanBuilder::reduce(RatVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = v[leads_[i]];
    if (isZero(c)) continue;
    Rat factor = c;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!isZero(rows_[i][j])) v[j] -= factor * rows_[i][j];
  }
  return v;
}

bool SpanBuilder::contains(const RatVec& v) const {
  RatVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rat& x) { return isZero(x); });
}

bool SpanBuilder::add(RatVec v) {
  if (v.size() != dim_) throw Error(errc::DimensionMismatch, "vector does not match ambient dimension");
  RatVec r = reduce(std::move(v));
  std::size_t lead = dim_;
  for (std::size_t j = 0; j < dim_; ++j)
    if (!isZero(r[j])) { lead = j; break; }
  if (lead == dim_) return false;
  Rat inv = 1 / r[lead];
  for (Rat& x : r) x *= inv;
  rows_.push_back(std::move(r));
  leads_.push_back(lead);
  return true;
}

}  // namespace derlie
