#pragma once

#include <optional>
#include <vector>

#include "qcm/field.hpp"
#include "qcm/matrix.hpp"

namespace qcm {

// Result of one-sweep fraction-free Gauss-Jordan elimination (Bareiss-style).
// After the sweep every pivot entry equals `denom` (the determinant of the
// pivot submatrix) and pivot columns are zero off the pivot row. Divisions in
// the update are exact over any integral domain with exact_div.
template <class T>
struct Echelon {
  Matrix<T> m;
  std::vector<std::size_t> pivot_rows;   // row of the k-th pivot
  std::vector<std::size_t> pivot_cols;   // column of the k-th pivot
  T denom;                               // one() if rank zero
  std::size_t rank() const { return pivot_cols.size(); }
};

// `one` supplies the multiplicative identity (carries the field for
// FieldElement, the ring arity for polynomials).
template <class T>
Echelon<T> fraction_free_gauss_jordan(Matrix<T> m, const T& one) {
  Echelon<T> e{std::move(m), {}, {}, one};
  T prev = one;
  std::size_t r = 0;
  for (std::size_t col = 0; col < e.m.cols() && r < e.m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < e.m.rows() && is_zero(e.m.at(piv, col))) ++piv;
    if (piv == e.m.rows()) continue;
    if (piv != r) e.m.swap_rows(piv, r);
    const T p = e.m.at(r, col);
    for (std::size_t i = 0; i < e.m.rows(); ++i) {
      if (i == r) continue;
      const T mi = e.m.at(i, col);
      for (std::size_t j = 0; j < e.m.cols(); ++j) {
        if (j == col) continue;
        e.m.at(i, j) = exact_div(p * e.m.at(i, j) - mi * e.m.at(r, j), prev);
      }
      e.m.at(i, col) = e.m.zero();
    }
    prev = p;
    e.pivot_rows.push_back(r);
    e.pivot_cols.push_back(col);
    ++r;
  }
  e.denom = prev;
  return e;
}

// Kernel basis from the Gauss-Jordan form: one vector per free column, with
// entry `denom` at the free column and -m[pivot_row][free] at pivot columns.
template <class T>
std::vector<std::vector<T>> kernel_basis_from_echelon(const Echelon<T>& e) {
  std::vector<bool> is_pivot(e.m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t j = 0; j < e.m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<T> v(e.m.cols(), e.m.zero());
    v[j] = e.denom;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
      v[e.pivot_cols[k]] = e.m.zero() - e.m.at(e.pivot_rows[k], j);
    basis.push_back(std::move(v));
  }
  return basis;
}

using Vec = std::vector<FieldElement>;
using Mat = Matrix<FieldElement>;

Mat identity_matrix(std::size_t n, const Field& f);

// Exact rank / kernel over the coefficient field. Over Q the rows are scaled
// to integers first so the Bareiss sweep stays fraction-free; over F_p the
// sweep is ordinary elimination. Kernel vectors are normalized so the free
// coordinate is 1 (reduced basis, deterministic).
std::size_t rank(const Mat& m);
std::vector<Vec> kernel_basis(const Mat& m);

// Unique solution of A x = b for invertible square A; nullopt when singular.
std::optional<Vec> solve_square(const Mat& a, const Vec& b);

// Inverse of a square matrix; nullopt when singular.
std::optional<Mat> inverse(const Mat& a);

}  // namespace qcm
