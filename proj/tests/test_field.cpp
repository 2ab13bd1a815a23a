#include <doctest.h>

#include "ginv/errors.hpp"
#include "ginv/field.hpp"

using namespace ginv;

TEST_CASE("prime field arithmetic") {
  Field f = make_prime_field(5);
  CHECK(f->p() == 5);
  CHECK(f->m() == 1);
  CHECK(f->q() == 5);
  CHECK(f->add(3, 4) == 2);
  CHECK(f->sub(1, 3) == 3);
  CHECK(f->neg(2) == 3);
  CHECK(f->mul(3, 4) == 2);
  CHECK(f->inv(3) == 2);
  CHECK(f->pow(2, 3) == 3);
  CHECK(f->pow(4, 0) == 1);
  for (fel a = 1; a < 5; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(make_prime_field(4), Error);
  try {
    make_prime_field(6);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotPrime);
  }
  try {
    make_extension_field(2, 2, {1, 0, 1});  // x^2+1 = (x+1)^2 over GF(2)
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ReducibleModulus);
  }
  Field f = make_prime_field(3);
  try {
    f->inv(0);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::DivZero);
  }
}

TEST_CASE("GF(4) via x^2+x+1") {
  Field f = make_extension_field(2, 2, {1, 1, 1});
  CHECK(f->q() == 4);
  // alpha = element 2 (coefficients (0,1)); alpha^2 = alpha + 1 = 3
  CHECK(f->mul(2, 2) == 3);
  CHECK(f->mul(2, 3) == 1);  // alpha * alpha^2 = alpha^3 = 1
  for (fel a = 1; a < 4; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
  CHECK(f->add(2, 3) == 1);  // alpha + (alpha+1) = 1
  CHECK(f->pow(2, 3) == 1);
}

TEST_CASE("GF(9) multiplicative order") {
  Field f = make_extension_field(3, 2, {1, 0, 1});  // x^2+1 irreducible over GF(3)
  CHECK(f->q() == 9);
  for (fel a = 1; a < 9; ++a) {
    CHECK(f->mul(a, f->inv(a)) == 1);
    CHECK(f->pow(a, 8) == 1);  // Lagrange in the unit group
  }
}

TEST_CASE("from_int validates range") {
  Field f = make_prime_field(7);
  CHECK(f->from_int(6, "t") == 6);
  try {
    f->from_int(7, "t");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::Input);
  }
  try {
    f->from_int(-1, "t");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::Input);
  }
}
