#include "doctest.h"
#include "qcm/field.hpp"

using namespace qcm;

TEST_CASE("rational arithmetic is exact") {
  const Field q = Field::rationals();
  auto a = FieldElement::parse(q, "2/3");
  auto b = FieldElement::parse(q, "-1/6");
  CHECK((a + b).str() == "1/2");
  CHECK((a * b).str() == "-1/9");
  CHECK((a / b).str() == "-4");
  CHECK((a - a).is_zero());
  CHECK(a.pow(0).is_one());
  CHECK(a.pow(-2).str() == "9/4");
}

TEST_CASE("prime field arithmetic") {
  const Field f7 = Field::prime(7);
  auto a = FieldElement(f7, 3);
  auto b = FieldElement(f7, 5);
  CHECK((a + b).residue() == 1);
  CHECK((a * b).residue() == 1);
  CHECK((a / b).residue() == 2);  // 3 * 5^{-1} = 3*3 = 9 = 2
  CHECK(FieldElement(f7, -1).residue() == 6);
  CHECK(FieldElement::parse(f7, "1/2").residue() == 4);
  CHECK_THROWS_AS(FieldElement::parse(f7, "1/7"), Error);
  CHECK_THROWS_AS(Field::prime(6), Error);
}

TEST_CASE("field parsing and mismatch") {
  CHECK(parse_field("Q").kind == FieldKind::Rationals);
  CHECK(parse_field("F32003").p == 32003);
  CHECK_THROWS_AS(parse_field("R"), Error);
  CHECK_THROWS_AS(FieldElement::parse(Field::rationals(), "1/0"), Error);
  CHECK_THROWS_AS(FieldElement::parse(Field::rationals(), "x"), Error);
  auto a = FieldElement(Field::rationals(), 1);
  auto b = FieldElement(Field::prime(5), 1);
  CHECK_THROWS_AS(a + b, Error);
}
