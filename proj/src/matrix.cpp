#include "grouprep/matrix.hpp"

#include <string>

namespace grouprep {

QuadMatrix QuadMatrix::identity(int n) {
  QuadMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = QuadNumber(1);
  return m;
}

bool QuadMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool QuadMatrix::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const QuadNumber& x = at(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

QuadMatrix QuadMatrix::transpose() const {
  QuadMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QuadNumber QuadMatrix::trace() const {
  if (!is_square()) throw DimensionMismatchError("trace of non-square matrix");
  QuadNumber t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

QuadMatrix QuadMatrix::operator-() const {
  QuadMatrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
  return r;
}

QuadMatrix operator+(const QuadMatrix& a, const QuadMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatchError("matrix addition shape mismatch");
  QuadMatrix r(a.rows_, a.cols_);
  for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
  return r;
}

QuadMatrix operator-(const QuadMatrix& a, const QuadMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatchError("matrix subtraction shape mismatch");
  QuadMatrix r(a.rows_, a.cols_);
  for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
  return r;
}

QuadMatrix operator*(const QuadMatrix& a, const QuadMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatchError("matrix product shape mismatch: " +
                                 std::to_string(a.cols_) + " vs " +
                                 std::to_string(b.rows_));
  QuadMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const QuadNumber& aik = a.at(i, k);
      if (aik.is_zero()) continue;  // regular representations are sparse
      for (int j = 0; j < b.cols_; ++j) {
        const QuadNumber& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

QuadMatrix operator*(const QuadNumber& s, const QuadMatrix& m) {
  QuadMatrix r(m.rows_, m.cols_);
  for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = s * m.a_[k];
  return r;
}

std::strong_ordering operator<=>(const QuadMatrix& a, const QuadMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (size_t k = 0; k < a.a_.size(); ++k)
    if (auto c = a.a_[k] <=> b.a_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::vector<QuadNumber> QuadMatrix::apply(const std::vector<QuadNumber>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionMismatchError("matrix-vector shape mismatch");
  std::vector<QuadNumber> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const QuadNumber& x = at(i, j);
      if (!x.is_zero() && !v[j].is_zero()) r[i] += x * v[j];
    }
  return r;
}

std::vector<int> rref_in_place(QuadMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    QuadNumber inv = m.at(row, col).inverse();
    for (int j = col; j < m.cols(); ++j)
      if (!m.at(row, j).is_zero()) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const QuadNumber f = m.at(i, col);
      if (f.is_zero()) continue;
      for (int j = col; j < m.cols(); ++j)
        if (!m.at(row, j).is_zero()) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

QuadMatrix QuadMatrix::inverse() const {
  if (!is_square()) throw DimensionMismatchError("inverse of non-square matrix");
  int n = rows_;
  QuadMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = QuadNumber(1);
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw SingularMatrixError("matrix is singular");
  QuadMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

int QuadMatrix::rank() const {
  QuadMatrix c = *this;
  return static_cast<int>(rref_in_place(c).size());
}

QuadMatrix QuadMatrix::nullspace() const {
  QuadMatrix r = *this;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QuadMatrix basis(cols_, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, static_cast<int>(k)) = QuadNumber(1);
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      basis.at(pivots[pr], static_cast<int>(k)) = -r.at(static_cast<int>(pr), fc);
  }
  return basis;
}

QuadNumber QuadMatrix::max_abs() const {
  QuadNumber best;
  for (const auto& x : a_) {
    QuadNumber ax = x.abs();
    if ((ax - best).sign() > 0) best = ax;
  }
  return best;
}

QuadMatrix kronecker(const QuadMatrix& a, const QuadMatrix& b) {
  QuadMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      const QuadNumber& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l) {
          const QuadNumber& bkl = b.at(k, l);
          if (!bkl.is_zero()) r.at(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
        }
    }
  return r;
}

}  // namespace grouprep
