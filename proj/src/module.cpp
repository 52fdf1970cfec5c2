#include "heckeforge/module.hpp"

#include <stdexcept>

namespace heckeforge {

FMatrix::FMatrix(int rows, int cols, std::vector<std::string> vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)) {
  a_.assign(static_cast<std::size_t>(rows) * cols, RatFrac::zero(vars_));
}

FMatrix FMatrix::identity(int n, std::vector<std::string> vars) {
  FMatrix m(n, n, vars);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatFrac::one(vars);
  return m;
}

FMatrix FMatrix::operator-() const {
  FMatrix r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

FMatrix operator+(const FMatrix& a, const FMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("FMatrix: shape");
  FMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) {
    r.a_[i] += b.a_[i];
    r.a_[i].normalize();
  }
  return r;
}

FMatrix operator-(const FMatrix& a, const FMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("FMatrix: shape");
  FMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) {
    r.a_[i] -= b.a_[i];
    r.a_[i].normalize();
  }
  return r;
}

FMatrix operator*(const FMatrix& a, const FMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("FMatrix: shape");
  FMatrix r(a.rows_, b.cols_, a.vars_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  for (auto& x : r.a_) x.normalize();
  return r;
}

FMatrix FMatrix::scaled(const RatFrac& c) const {
  FMatrix r = *this;
  for (auto& x : r.a_) {
    x *= c;
    x.normalize();
  }
  return r;
}

bool operator==(const FMatrix& a, const FMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

bool FMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<RatFrac> FMatrix::apply(const std::vector<RatFrac>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("FMatrix: apply shape");
  std::vector<RatFrac> y(rows_, RatFrac::zero(vars_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || x[j].is_zero()) continue;
      y[i] += at(i, j) * x[j];
    }
  for (auto& t : y) t.normalize();
  return y;
}

RatFrac FMatrix::trace() const {
  RatFrac t = RatFrac::zero(vars_);
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  t.normalize();
  return t;
}

namespace {

// In-place Gaussian elimination; returns rank, optionally accumulating the
// transform into an augmented block.
int gauss(std::vector<std::vector<RatFrac>>& m, std::vector<int>* pivot_cols = nullptr) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    RatFrac inv = m[rank][c].inverse();
    for (int cc = c; cc < cols; ++cc) {
      m[rank][cc] *= inv;
      m[rank][cc].normalize();
    }
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      RatFrac f = m[r][c];
      for (int cc = c; cc < cols; ++cc) {
        m[r][cc] -= f * m[rank][cc];
        m[r][cc].normalize();
      }
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++rank;
  }
  return rank;
}

}  // namespace

int FMatrix::rank() const {
  std::vector<std::vector<RatFrac>> m(rows_, std::vector<RatFrac>(cols_, RatFrac::zero(vars_)));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  return gauss(m);
}

FMatrix FMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("FMatrix: inverse of non-square");
  std::vector<std::vector<RatFrac>> m(rows_,
                                      std::vector<RatFrac>(2 * cols_, RatFrac::zero(vars_)));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);
    m[i][cols_ + i] = RatFrac::one(vars_);
  }
  std::vector<int> pivots;
  int rank = gauss(m, &pivots);
  if (rank < rows_) throw std::domain_error("FMatrix: singular");
  for (int i = 0; i < rank; ++i)
    if (pivots[i] != i) throw std::domain_error("FMatrix: singular");
  FMatrix r(rows_, cols_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = m[i][cols_ + j];
  return r;
}

std::vector<std::vector<RatFrac>> FMatrix::nullspace() const {
  std::vector<std::vector<RatFrac>> m(rows_, std::vector<RatFrac>(cols_, RatFrac::zero(vars_)));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  std::vector<int> pivots;
  gauss(m, &pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<RatFrac>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RatFrac> v(cols_, RatFrac::zero(vars_));
    v[f] = RatFrac::one(vars_);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatFrac FMatrix::charpoly_at(const RatFrac& t) const {
  if (rows_ != cols_) throw std::invalid_argument("FMatrix: charpoly of non-square");
  FMatrix shifted = *this;
  for (int i = 0; i < rows_; ++i) shifted.at(i, i) -= t;
  return det(shifted);
}

RatFrac det(const FMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: non-square");
  int n = a.rows();
  std::vector<std::vector<RatFrac>> m(n, std::vector<RatFrac>(n, RatFrac::zero(a.vars())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);
  RatFrac d = RatFrac::one(a.vars());
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int r = c; r < n; ++r)
      if (!m[r][c].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) return RatFrac::zero(a.vars());
    if (pr != c) {
      std::swap(m[pr], m[c]);
      d = -d;
    }
    d *= m[c][c];
    d.normalize();
    RatFrac inv = m[c][c].inverse();
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      RatFrac f = m[r][c] * inv;
      for (int cc = c; cc < n; ++cc) {
        m[r][cc] -= f * m[c][cc];
        m[r][cc].normalize();
      }
    }
  }
  return d;
}

bool SparseEchelon::add_row(Row row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  int lead = row.begin()->first;
  RatFrac inv = row.begin()->second.inverse();
  for (auto& [c, x] : row) {
    x *= inv;
    x.normalize();
  }
  pivot_row_.emplace(lead, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

SparseEchelon::Row SparseEchelon::reduce(Row vec) const {
  auto it = vec.begin();
  while (it != vec.end()) {
    auto p = pivot_row_.find(it->first);
    if (p == pivot_row_.end()) {
      ++it;
      continue;
    }
    RatFrac f = it->second;
    const Row& prow = rows_[p->second];
    for (const auto& [c, x] : prow) {
      auto jt = vec.find(c);
      if (jt == vec.end()) {
        RatFrac t = -(f * x);
        t.normalize();
        if (!t.is_zero()) vec.emplace(c, std::move(t));
      } else {
        jt->second -= f * x;
        jt->second.normalize();
        if (jt->second.is_zero()) vec.erase(jt);
      }
    }
    it = vec.lower_bound(p->first);  // leading col was erased; continue after it
  }
  return vec;
}

}  // namespace heckeforge
