#include <random>

#include "doctest.h"
#include "qcm/representation.hpp"
#include "test_util.hpp"

using namespace qcm;
using namespace qcm::testutil;

namespace {

const char* kKroneckerPoint =
    "field Q\n"
    "dim 1 3\n"
    "dim 2 3\n"
    "map a 3 3\n"
    "0 0 0\n"
    "1 0 0\n"
    "0 1 0\n"
    "map b 3 3\n"
    "1 0 0\n"
    "0 0 0\n"
    "0 0 1\n";

}  // namespace

TEST_CASE("parse the kronecker d=(3,3) point") {
  auto q = kronecker();
  auto m = Representation::parse(kKroneckerPoint, q);
  CHECK(m.dims() == DimVector{3, 3});
  CHECK(m.matrix(0).at(1, 0).is_one());
  CHECK(m.matrix(1).at(2, 2).is_one());
  CHECK(m.serialize() == kKroneckerPoint);
}

TEST_CASE("zero representation is valid for any quiver") {
  auto m = Representation::zero(two_loop(), Field::rationals(), {3});
  CHECK(m.all_maps_zero());
  CHECK(m.total_dim() == 3);
}

TEST_CASE("parse errors") {
  auto q = two_loop();
  // declared dim 2 but 3x2 matrix on a loop
  CHECK_THROWS_WITH_AS(
      Representation::parse("field Q\ndim 1 2\nmap al 3 2\n0 0\n0 0\n0 0\nmap be 2 2\n0 0\n0 0\n", q),
      doctest::Contains("dims require"), Error);
  CHECK_THROWS_WITH_AS(Representation::parse("field Q\ndim 1 1\nmap al 1 1\n0\n", q),
                       doctest::Contains("missing matrix"), Error);
  CHECK_THROWS_WITH_AS(
      Representation::parse("field Q\ndim 1 1\nmap al 1 1\n1/0\nmap be 1 1\n0\n", q),
      doctest::Contains("zero denominator"), Error);
  CHECK_THROWS_WITH_AS(
      Representation::parse("field F5\ndim 1 1\nmap al 1 1\n1/5\nmap be 1 1\n0\n", q),
      doctest::Contains("not in F5"), Error);
  CHECK_THROWS_WITH_AS(Representation::parse("dim 1 1\n", q), doctest::Contains("field"), Error);
}

TEST_CASE("parse/serialize round-trip on random representations") {
  std::mt19937 rng(31337);
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    for (int iter = 0; iter < 15; ++iter) {
      auto q = random_tree_quiver(rng, 1 + static_cast<int>(rng() % 5));
      auto d = random_dims(rng, q->vertex_count());
      auto m = random_representation(rng, q, d, f);
      auto back = Representation::parse(m.serialize(), q);
      CHECK(back == m);
      CHECK(back.serialize() == m.serialize());
    }
  }
}

TEST_CASE("scaling") {
  auto q = kronecker();
  auto m = Representation::parse(kKroneckerPoint, q);
  const Field f = Field::rationals();

  auto id = m.scale(FieldElement(f, 1));
  CHECK(id == m);

  auto zero = m.scale(FieldElement(f));
  CHECK(zero.all_maps_zero());

  auto doubled = m.scale(FieldElement(f, 2));
  CHECK(doubled.matrix(0).at(1, 0) == FieldElement(f, 2));
  CHECK(doubled.matrix(1).at(0, 0) == FieldElement(f, 2));

  // scale(scale(m, a), b) == scale(m, ab)
  std::mt19937 rng(5);
  for (int iter = 0; iter < 10; ++iter) {
    auto l1 = FieldElement(f, static_cast<long>(rng() % 7) - 3);
    auto l2 = FieldElement(f, static_cast<long>(rng() % 7) - 3);
    CHECK(m.scale(l1).scale(l2) == m.scale(l1 * l2));
  }
}

TEST_CASE("direct sum shapes and block structure") {
  auto q = a2();
  const Field f = Field::rationals();
  auto s1 = Representation::simple(q, f, 0);
  auto s2 = Representation::simple(q, f, 1);
  auto sum = direct_sum(s1, s2);
  CHECK(sum.dims() == DimVector{1, 1});
  CHECK(sum.all_maps_zero());
  auto sum2 = direct_sum(sum, sum);
  CHECK(sum2.dims() == DimVector{2, 2});
}
