#include "logbundles/matrix.hpp"

#include <algorithm>

namespace logbund {

FMatrix FMatrix::identity(const Field& f, int n) {
  FMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Fq(f, 1);
  return m;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
  check(cols_ == o.rows_, errc::internal, "matrix dimension mismatch");
  FMatrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Fq& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
  check(rows_ == o.rows_ && cols_ == o.cols_, errc::internal, "matrix dimension mismatch");
  FMatrix r(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  return r;
}

FMatrix FMatrix::operator-(const FMatrix& o) const {
  check(rows_ == o.rows_ && cols_ == o.cols_, errc::internal, "matrix dimension mismatch");
  FMatrix r(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

FMatrix FMatrix::transpose() const {
  FMatrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool FMatrix::operator==(const FMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != o.at(i, j)) return false;
  return true;
}

std::vector<int> FMatrix::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (!at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    Fq inv = at(r, c).inv();
    for (int j = c; j < cols_; ++j) at(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      Fq f = at(i, c);
      for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int FMatrix::rank() const {
  FMatrix tmp = *this;
  return static_cast<int>(tmp.rref().size());
}

FMatrix FMatrix::kernel() const {
  FMatrix tmp = *this;
  std::vector<int> pivots = tmp.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  int nk = cols_ - static_cast<int>(pivots.size());
  FMatrix k(field_, cols_, nk);
  int col = 0;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    k.at(c, col) = Fq(field_, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) k.at(pivots[r], col) = -tmp.at(static_cast<int>(r), c);
    ++col;
  }
  return k;
}

Fq FMatrix::det() const {
  check(rows_ == cols_, errc::internal, "determinant of non-square matrix");
  FMatrix tmp = *this;
  Fq d(field_, 1);
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int i = c; i < rows_; ++i)
      if (!tmp.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Fq(field_, 0L);
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(tmp.at(p, j), tmp.at(c, j));
      d = -d;
    }
    d *= tmp.at(c, c);
    Fq inv = tmp.at(c, c).inv();
    for (int i = c + 1; i < rows_; ++i) {
      if (tmp.at(i, c).is_zero()) continue;
      Fq f = tmp.at(i, c) * inv;
      for (int j = c; j < cols_; ++j) tmp.at(i, j) -= f * tmp.at(c, j);
    }
  }
  return d;
}

std::optional<std::vector<Fq>> FMatrix::solve(const std::vector<Fq>& b) const {
  check(static_cast<int>(b.size()) == rows_, errc::internal, "rhs size mismatch");
  FMatrix aug(field_, rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> pivots = aug.rref();
  for (int c : pivots)
    if (c == cols_) return std::nullopt;  // inconsistent
  std::vector<Fq> x(cols_, Fq(field_, 0L));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
  return x;
}

std::vector<Fq> FMatrix::charpoly() const {
  check(rows_ == cols_, errc::internal, "charpoly of non-square matrix");
  int n = rows_;
  const Fq zero(field_, 0L), one(field_, 1);
  if (n == 0) return {one};
  FMatrix h = *this;
  // similarity reduction to upper Hessenberg form
  for (int c = 0; c + 2 < n; ++c) {
    int p = -1;
    for (int i = c + 1; i < n; ++i)
      if (!h.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(p, j), h.at(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, p), h.at(i, c + 1));
    }
    Fq inv = h.at(c + 1, c).inv();
    for (int i = c + 2; i < n; ++i) {
      if (h.at(i, c).is_zero()) continue;
      Fq m = h.at(i, c) * inv;
      for (int j = 0; j < n; ++j) h.at(i, j) -= m * h.at(c + 1, j);
      for (int j = 0; j < n; ++j) h.at(j, c + 1) += m * h.at(j, i);
    }
  }
  // recurrence on leading principal minors of (lambda*I - H)
  std::vector<std::vector<Fq>> p(n + 1);
  p[0] = {one};
  for (int k = 1; k <= n; ++k) {
    // p_k = (lambda - h_{k,k}) p_{k-1} - sum_m h_{k-m,k} (prod subdiag) p_{k-m-1}
    std::vector<Fq> pk(k + 1, zero);
    for (int t = 0; t < k; ++t) {
      pk[t + 1] += p[k - 1][t];
      pk[t] -= h.at(k - 1, k - 1) * p[k - 1][t];
    }
    Fq prod = one;
    for (int m = 1; m < k; ++m) {
      prod *= h.at(k - m, k - m - 1);
      if (prod.is_zero()) break;
      Fq c = h.at(k - m - 1, k - 1) * prod;
      if (c.is_zero()) continue;
      for (int t = 0; t < k - m; ++t) pk[t] -= c * p[k - m - 1][t];
    }
    p[k] = std::move(pk);
  }
  return p[n];
}

GradedMatrix::GradedMatrix(Ring r, std::vector<int> rows, std::vector<int> cols)
    : ring(std::move(r)), row_twists(std::move(rows)), col_twists(std::move(cols)) {
  e.assign(row_twists.size(), std::vector<Poly>(col_twists.size(), Poly::zero(ring)));
}

void GradedMatrix::validate() const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const Poly& p = e[i][j];
      if (p.is_zero()) continue;
      check(p.is_homogeneous() && p.degree() == col_twists[j] - row_twists[i],
            errc::internal, "graded matrix degree convention violated");
    }
}

bool GradedMatrix::is_zero() const {
  for (const auto& row : e)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& o) const {
  check(cols() == o.rows(), errc::internal, "graded matrix dimension mismatch");
  GradedMatrix r(ring, row_twists, o.col_twists);
  for (int i = 0; i < rows(); ++i)
    for (int k = 0; k < cols(); ++k) {
      if (e[i][k].is_zero()) continue;
      for (int j = 0; j < o.cols(); ++j) {
        if (o.e[k][j].is_zero()) continue;
        r.e[i][j] += e[i][k] * o.e[k][j];
      }
    }
  return r;
}

GradedMatrix GradedMatrix::transpose_dual() const {
  std::vector<int> rt, ct;
  for (int t : col_twists) rt.push_back(-t);
  for (int t : row_twists) ct.push_back(-t);
  GradedMatrix r(ring, rt, ct);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) r.e[j][i] = e[i][j];
  return r;
}

GradedMatrix GradedMatrix::twisted(int k) const {
  GradedMatrix r = *this;
  for (int& t : r.row_twists) t -= k;
  for (int& t : r.col_twists) t -= k;
  return r;
}

GradedMatrix GradedMatrix::drop_row(int i) const {
  check(i >= 0 && i < rows(), errc::index_out_of_range, "row index");
  GradedMatrix r = *this;
  r.row_twists.erase(r.row_twists.begin() + i);
  r.e.erase(r.e.begin() + i);
  return r;
}

GradedMatrix GradedMatrix::drop_col(int j) const {
  check(j >= 0 && j < cols(), errc::index_out_of_range, "column index");
  GradedMatrix r = *this;
  r.col_twists.erase(r.col_twists.begin() + j);
  for (auto& row : r.e) row.erase(row.begin() + j);
  return r;
}

namespace {

/// Fraction-free (Bareiss) elimination on a polynomial matrix. Returns the
/// rank; when `det_out` is non-null the matrix must be square and the exact
/// determinant is stored there.
int bareiss(std::vector<std::vector<Poly>> a, const Ring& ring, Poly* det_out) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  Poly prev = Poly::constant(ring, 1);
  int sign = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) {
      if (det_out) {
        *det_out = Poly::zero(ring);
        return r;
      }
      continue;
    }
    if (pr != r) {
      std::swap(a[pr], a[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]).divide_exact(prev);
      a[i][c] = Poly::zero(ring);
    }
    prev = a[r][c];
    ++r;
  }
  if (det_out) {
    if (r < rows)
      *det_out = Poly::zero(ring);
    else {
      *det_out = sign < 0 ? -a[rows - 1][cols - 1] : a[rows - 1][cols - 1];
    }
  }
  return r;
}

}  // namespace

int GradedMatrix::rank() const { return bareiss(e, ring, nullptr); }

Poly GradedMatrix::det() const {
  check(rows() == cols(), errc::internal, "determinant of non-square matrix");
  if (rows() == 0) return Poly::constant(ring, 1);
  Poly d(ring);
  bareiss(e, ring, &d);
  return d;
}

std::vector<Poly> maximal_minors_delete_row(const GradedMatrix& m) {
  check(m.rows() == m.cols() + 1, errc::internal, "expected (n+1) x n matrix");
  std::vector<Poly> out;
  for (int skip = 0; skip < m.rows(); ++skip) out.push_back(m.drop_row(skip).det());
  return out;
}

}  // namespace logbund
