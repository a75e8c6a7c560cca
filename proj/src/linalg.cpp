#include "qcm/linalg.hpp"

namespace qcm {

namespace {

// Scale each row to integer entries with content 1 (kernel unchanged).
void integerize_rows(Mat& m) {
  const Field& f = m.zero().field();
  if (f.kind != FieldKind::Rationals) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class den_lcm = 1, num_gcd = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m.at(i, j).rational();
      if (q == 0) continue;
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    }
    if (num_gcd == 0) continue;
    mpq_class s(den_lcm, num_gcd);
    s.canonicalize();
    FieldElement fs = FieldElement::from_rational(f, s);
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) *= fs;
  }
}

}  // namespace

Mat identity_matrix(std::size_t n, const Field& f) {
  Mat m(n, n, FieldElement(f));
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement(f, 1);
  return m;
}

std::size_t rank(const Mat& m) {
  Mat c = m;
  integerize_rows(c);
  return fraction_free_gauss_jordan(std::move(c), FieldElement(m.zero().field(), 1)).rank();
}

std::vector<Vec> kernel_basis(const Mat& m) {
  Mat c = m;
  integerize_rows(c);
  auto ech = fraction_free_gauss_jordan(std::move(c), FieldElement(m.zero().field(), 1));
  auto basis = kernel_basis_from_echelon(ech);
  // normalize: free coordinate 1
  const FieldElement inv = ech.denom.inverse();
  for (auto& v : basis)
    for (auto& x : v) x *= inv;
  return basis;
}

std::optional<Vec> solve_square(const Mat& a, const Vec& b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) throw Error("solve_square shape mismatch");
  const Field& f = a.zero().field();
  Mat aug(a.rows(), a.cols() + 1, a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  integerize_rows(aug);
  auto ech = fraction_free_gauss_jordan(std::move(aug), FieldElement(f, 1));
  if (ech.rank() != a.cols() || (ech.rank() && ech.pivot_cols.back() == a.cols()))
    return std::nullopt;
  Vec x(a.cols(), FieldElement(f));
  for (std::size_t k = 0; k < ech.pivot_cols.size(); ++k)
    x[ech.pivot_cols[k]] = ech.m.at(ech.pivot_rows[k], a.cols()) / ech.denom;
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw Error("inverse of non-square matrix");
  const Field& f = a.zero().field();
  const std::size_t n = a.rows();
  if (n == 0) return a;
  Mat aug(n, 2 * n, a.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = FieldElement(f, 1);
  }
  auto ech = fraction_free_gauss_jordan(std::move(aug), FieldElement(f, 1));
  if (ech.rank() < n || ech.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n, a.zero());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      inv.at(ech.pivot_cols[k], j) = ech.m.at(ech.pivot_rows[k], n + j) / ech.denom;
  return inv;
}

}  // namespace qcm
