#pragma once
#include <compare>
#include <string>
#include <vector>

#include "grouprep/quad_number.hpp"

namespace grouprep {

// Dense matrix over the exact scalar field.
class QuadMatrix {
 public:
  QuadMatrix() = default;
  QuadMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static QuadMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  QuadNumber& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const QuadNumber& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }
  QuadNumber& operator()(int i, int j) { return at(i, j); }
  const QuadNumber& operator()(int i, int j) const { return at(i, j); }

  bool is_zero() const;
  bool is_identity() const;

  QuadMatrix transpose() const;
  QuadNumber trace() const;
  QuadMatrix operator-() const;

  friend QuadMatrix operator+(const QuadMatrix& a, const QuadMatrix& b);
  friend QuadMatrix operator-(const QuadMatrix& a, const QuadMatrix& b);
  friend QuadMatrix operator*(const QuadMatrix& a, const QuadMatrix& b);
  friend QuadMatrix operator*(const QuadNumber& s, const QuadMatrix& m);
  friend bool operator==(const QuadMatrix& a, const QuadMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  // Lexicographic by shape, then entries (canonical-display order).
  friend std::strong_ordering operator<=>(const QuadMatrix& a, const QuadMatrix& b);

  std::vector<QuadNumber> apply(const std::vector<QuadNumber>& v) const;

  // Gauss-Jordan inverse; throws SingularMatrixError.
  QuadMatrix inverse() const;
  int rank() const;
  // Basis of the right nullspace, as columns of the returned matrix
  // (cols() x k, possibly k = 0).
  QuadMatrix nullspace() const;

  // Largest |entry| of the matrix (exact).  Zero matrix gives 0.
  QuadNumber max_abs() const;

  friend QuadMatrix kronecker(const QuadMatrix& a, const QuadMatrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<QuadNumber> a_;
};

// In-place reduced row echelon form; returns the pivot column of each
// pivot row in order.
std::vector<int> rref_in_place(QuadMatrix& m);

}  // namespace grouprep
