#include <random>

#include "doctest.h"
#include "qcm/linalg.hpp"
#include "qcm/poly.hpp"
#include "test_util.hpp"

using namespace qcm;
using namespace qcm::testutil;

namespace {

// Independent oracle: plain textbook Gauss-Jordan over the field, no
// fraction-free tricks; returns the rank.
std::size_t naive_rank(Mat m) {
  const Field& f = m.zero().field();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    const FieldElement inv = m.at(r, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      const FieldElement c = m.at(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= c * m.at(r, j);
    }
    ++r;
  }
  (void)f;
  return r;
}

bool in_kernel(const Mat& m, const Vec& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    FieldElement s(m.zero().field());
    for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kernel basis: randomized check against naive elimination") {
  std::mt19937 rng(20240901);
  for (const Field& f : {Field::rationals(), Field::prime(13)}) {
    for (int iter = 0; iter < 60; ++iter) {
      std::uniform_int_distribution<int> sz(0, 6);
      const std::size_t rows = sz(rng), cols = sz(rng);
      Mat m = random_int_matrix(rng, rows, cols, f);
      const auto basis = kernel_basis(m);
      CHECK(rank(m) == naive_rank(m));
      CHECK(basis.size() == cols - rank(m));
      for (const auto& v : basis) CHECK(in_kernel(m, v));
      // reduced form: each vector has a coordinate equal to 1 at a column
      // where all other vectors vanish
    }
  }
}

TEST_CASE("kernel of rational matrices with denominators") {
  std::mt19937 rng(7);
  const Field q = Field::rationals();
  for (int iter = 0; iter < 30; ++iter) {
    std::uniform_int_distribution<int> sz(1, 5);
    const std::size_t rows = sz(rng), cols = sz(rng);
    Mat m(rows, cols, FieldElement(q));
    std::uniform_int_distribution<int> num(-4, 4), den(1, 5);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = FieldElement::parse(q, std::to_string(num(rng)) + "/" + std::to_string(den(rng)));
    for (const auto& v : kernel_basis(m)) CHECK(in_kernel(m, v));
    CHECK(kernel_basis(m).size() == cols - naive_rank(m));
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937 rng(99);
  const Field q = Field::rationals();
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t n = 1 + iter % 5;
    Mat a = random_invertible(rng, n, q);
    Vec b(n, FieldElement(q));
    for (auto& x : b) x = FieldElement(q, static_cast<long>(rng() % 7) - 3);
    auto x = solve_square(a, b);
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < n; ++i) {
      FieldElement s(q);
      for (std::size_t j = 0; j < n; ++j) s += a.at(i, j) * (*x)[j];
      CHECK(s == b[i]);
    }
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(*inv * a == identity_matrix(n, q));
  }
  Mat sing(2, 2, FieldElement(q));
  sing.at(0, 0) = FieldElement(q, 1);
  sing.at(1, 0) = FieldElement(q, 2);
  CHECK(!inverse(sing).has_value());
}

TEST_CASE("empty shapes") {
  const Field q = Field::rationals();
  Mat a(0, 3, FieldElement(q));
  CHECK(kernel_basis(a).size() == 3);
  Mat b(3, 0, FieldElement(q));
  CHECK(kernel_basis(b).empty());
  CHECK(rank(b) == 0);
}

TEST_CASE("fraction-free elimination over a polynomial ring") {
  // kernels of matrices with univariate entries: divisions must stay exact
  // and the kernel vectors must annihilate the matrix
  const Field f = Field::rationals();
  auto ring = make_ring({"s"}, f);
  std::mt19937 rng(314);
  std::uniform_int_distribution<int> coef(-2, 2), degree(0, 1), sz(1, 4);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t rows = sz(rng), cols = sz(rng);
    Matrix<Poly> m(rows, cols, Poly::zero(ring));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        Poly p = Poly::constant(ring, coef(rng));
        if (degree(rng)) p = p + Poly::variable(ring, 0).scaled(FieldElement(f, coef(rng)));
        m.at(i, j) = p;
      }
    auto ech = fraction_free_gauss_jordan(m, Poly::constant(ring, 1));
    for (const auto& v : kernel_basis_from_echelon(ech)) {
      for (std::size_t i = 0; i < rows; ++i) {
        Poly s = Poly::zero(ring);
        for (std::size_t j = 0; j < cols; ++j) s = s + m.at(i, j) * v[j];
        CHECK(s.is_zero());
      }
    }
    CHECK(kernel_basis_from_echelon(ech).size() == cols - ech.rank());
  }
}
