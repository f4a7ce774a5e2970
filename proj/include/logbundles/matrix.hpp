#ifndef LOGB_MATRIX_HPP
#define LOGB_MATRIX_HPP

#include <optional>
#include <vector>

#include "logbundles/poly.hpp"

namespace logbund {

/// Dense matrix over an exact field.
class FMatrix {
 public:
  FMatrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
  FMatrix(const Field& f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Fq(f, 0L)) {}

  static FMatrix identity(const Field& f, int n);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Fq& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Fq& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  FMatrix operator*(const FMatrix& o) const;
  FMatrix operator+(const FMatrix& o) const;
  FMatrix operator-(const FMatrix& o) const;
  FMatrix transpose() const;
  bool operator==(const FMatrix& o) const;

  /// Reduced row echelon form in place; returns pivot column indices.
  std::vector<int> rref();
  int rank() const;
  /// Basis of the right kernel, one vector per column of the result.
  FMatrix kernel() const;
  Fq det() const;
  /// One solution of A x = b, if any.
  std::optional<std::vector<Fq>> solve(const std::vector<Fq>& b) const;

  /// Characteristic polynomial, coefficients ascending, monic of degree n.
  std::vector<Fq> charpoly() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Fq> a_;
};

/// Matrix of polynomials with twist labels: entry (i,j) is zero or homogeneous
/// of degree col_twists[j] - row_twists[i].
struct GradedMatrix {
  Ring ring;
  std::vector<int> row_twists;
  std::vector<int> col_twists;
  std::vector<std::vector<Poly>> e;

  GradedMatrix() = default;
  GradedMatrix(Ring r, std::vector<int> rows, std::vector<int> cols);

  int rows() const { return static_cast<int>(row_twists.size()); }
  int cols() const { return static_cast<int>(col_twists.size()); }
  Poly& at(int i, int j) { return e[i][j]; }
  const Poly& at(int i, int j) const { return e[i][j]; }

  /// Check the degree convention entrywise (zero entries exempt).
  void validate() const;
  bool is_zero() const;

  GradedMatrix operator*(const GradedMatrix& o) const;
  /// Transpose with dualized twists (free-module duality).
  GradedMatrix transpose_dual() const;
  /// Twisted view M(k): all twists shifted by -k.
  GradedMatrix twisted(int k) const;
  GradedMatrix drop_row(int i) const;
  GradedMatrix drop_col(int j) const;

  /// Exact rank over the fraction field (fraction-free elimination).
  int rank() const;
  /// Exact determinant (square only), by fraction-free elimination.
  Poly det() const;
};

/// All maximal minors of an m x n matrix with m = n+1 (delete one row each),
/// in row-deletion order. Used for degeneracy loci of almost-square matrices.
std::vector<Poly> maximal_minors_delete_row(const GradedMatrix& m);

}  // namespace logbund

#endif
