#ifndef HECKEFORGE_MODULE_HPP
#define HECKEFORGE_MODULE_HPP

#include <map>
#include <vector>

#include "heckeforge/ratfrac.hpp"

namespace heckeforge {

// Dense matrix over the exact fraction field.
class FMatrix {
public:
  FMatrix() = default;
  FMatrix(int rows, int cols, std::vector<std::string> vars);
  static FMatrix identity(int n, std::vector<std::string> vars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<std::string>& vars() const { return vars_; }

  RatFrac& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const RatFrac& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  FMatrix operator-() const;
  friend FMatrix operator+(const FMatrix& a, const FMatrix& b);
  friend FMatrix operator-(const FMatrix& a, const FMatrix& b);
  friend FMatrix operator*(const FMatrix& a, const FMatrix& b);
  FMatrix scaled(const RatFrac& c) const;
  friend bool operator==(const FMatrix& a, const FMatrix& b);
  friend bool operator!=(const FMatrix& a, const FMatrix& b) { return !(a == b); }

  bool is_zero() const;
  std::vector<RatFrac> apply(const std::vector<RatFrac>& x) const;
  RatFrac trace() const;
  int rank() const;
  FMatrix inverse() const;  // throws when singular

  // Basis of the right kernel.
  std::vector<std::vector<RatFrac>> nullspace() const;

  // Characteristic polynomial evaluated at t (det(A - t I)).
  RatFrac charpoly_at(const RatFrac& t) const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::string> vars_;
  std::vector<RatFrac> a_;
};

RatFrac det(const FMatrix& a);

// Incremental sparse row echelon keyed by integer columns; used by the
// induction saturation. Stored rows keep unit leading coefficient at their
// smallest column.
class SparseEchelon {
public:
  using Row = std::map<int, RatFrac>;

  // Reduce then insert; returns true if the row added a pivot.
  bool add_row(Row row);
  // Eliminate all pivot columns from a vector.
  Row reduce(Row vec) const;
  bool has_pivot(int col) const { return pivot_row_.count(col) > 0; }
  std::size_t pivot_count() const { return pivot_row_.size(); }

private:
  std::vector<Row> rows_;
  std::map<int, std::size_t> pivot_row_;
};

}  // namespace heckeforge

#endif
