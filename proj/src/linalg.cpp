#include "qorc/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace qorc {

MatZ clear_denominators(const MatQ& m) {
  MatZ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      l = boost::multiprecision::lcm(l, Int(denominator(m(i, j))));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = Int(numerator(m(i, j))) * (l / Int(denominator(m(i, j))));
  }
  return out;
}

int rank(const MatZ& m) {
  MatZ a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Int prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return static_cast<int>(r);
}

int rank(const MatQ& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rank(clear_denominators(m));
}

Int det(const MatZ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  MatZ a = m;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index r = 0; r < n - 1; ++r) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < n; ++i)
      if (a(i, r) != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != r) { a.row(piv).swap(a.row(r)); sign = -sign; }
    for (Eigen::Index i = r + 1; i < n; ++i) {
      for (Eigen::Index j = r + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(r, r) - a(i, r) * a(r, j)) / prev;
      a(i, r) = 0;
    }
    prev = a(r, r);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Rat det(const MatQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  Rat scale = 1;
  MatZ a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Int l = 1;
    for (Eigen::Index j = 0; j < n; ++j)
      l = boost::multiprecision::lcm(l, Int(denominator(m(i, j))));
    scale *= Rat(l);
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = Int(numerator(m(i, j))) * (l / Int(denominator(m(i, j))));
  }
  return Rat(det(a)) / scale;
}

MatQ rref(MatQ m, std::vector<int>* pivot_cols) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  if (pivot_cols) pivot_cols->clear();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    Rat p = m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) /= p;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
    ++r;
  }
  return m;
}

MatQ kernel_basis(const MatQ& m) {
  const Eigen::Index cols = m.cols();
  if (cols == 0) return MatQ(0, 0);
  if (m.rows() == 0) return MatQ::Identity(cols, cols);
  std::vector<int> piv;
  MatQ r = rref(m, &piv);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_piv[c]) free_cols.push_back(static_cast<int>(c));
  MatQ k = MatQ::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int f = free_cols[fi];
    k(f, static_cast<Eigen::Index>(fi)) = 1;
    for (size_t pi = 0; pi < piv.size(); ++pi)
      k(piv[pi], static_cast<Eigen::Index>(fi)) = -r(static_cast<Eigen::Index>(pi), f);
  }
  return k;
}

MatQ column_space_basis(const MatQ& m) {
  if (m.rows() == 0 || m.cols() == 0) return MatQ(m.rows(), 0);
  std::vector<int> piv;
  rref(m, &piv);
  MatQ b(m.rows(), static_cast<Eigen::Index>(piv.size()));
  for (size_t i = 0; i < piv.size(); ++i) b.col(static_cast<Eigen::Index>(i)) = m.col(piv[i]);
  return b;
}

MatQ preimage_basis(const MatQ& m, const MatQ& s) {
  const Eigen::Index n = m.cols();
  if (s.cols() == 0) return kernel_basis(m);
  MatQ aug(m.rows(), n + s.cols());
  aug.leftCols(n) = m;
  aug.rightCols(s.cols()) = -s;
  MatQ k = kernel_basis(aug);
  MatQ cand = k.topRows(n);
  return column_space_basis(cand);
}

bool is_invertible(const MatQ& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

MatQ inverse(const MatQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
  const Eigen::Index n = m.rows();
  MatQ aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatQ::Identity(n, n);
  std::vector<int> piv;
  MatQ r = rref(std::move(aug), &piv);
  // Full rank iff every pivot lands in the left block.
  if (static_cast<Eigen::Index>(piv.size()) != n || (n > 0 && piv.back() >= n))
    throw std::invalid_argument("inverse: singular matrix");
  return r.rightCols(n);
}

bool solve(const MatQ& a, const MatQ& b, MatQ& x) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const Eigen::Index n = a.cols(), k = b.cols();
  MatQ aug(a.rows(), n + k);
  aug.leftCols(n) = a;
  aug.rightCols(k) = b;
  std::vector<int> piv;
  MatQ r = rref(std::move(aug), &piv);
  // Any pivot in the b-block means inconsistency.
  for (int c : piv)
    if (c >= n) return false;
  x = MatQ::Zero(n, k);
  for (size_t pi = 0; pi < piv.size(); ++pi)
    x.row(piv[pi]) = r.block(static_cast<Eigen::Index>(pi), n, 1, k);
  return true;
}

}  // namespace qorc
