#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ginv/algebra.hpp"
#include "ginv/errors.hpp"
#include "ginv/gaussian.hpp"

using namespace ginv;

namespace {

std::vector<ComponentData> analyzed(const Group& G, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto idems = central_primitive_idempotents(G, rng);
  return analyze_components(G, idems, kDefaultScanCap, false);
}

}  // namespace

TEST_CASE("closed-form simple counts") {
  Field f2 = make_prime_field(2);
  CHECK(simple_count_closed(f2, 0, 2, true) == 0);
  CHECK(simple_count_closed(f2, 1, 2, true) == 1);
  CHECK(simple_count_closed(f2, 2, 2, true) == 5);
  CHECK(simple_count_closed(f2, 3, 2, true) == 21);
  CHECK(simple_count_closed(f2, 2, 1, true) == 3);
  CHECK(simple_count_closed(f2, 3, 1, true) == 7);
  Field f5 = make_prime_field(5);
  CHECK(simple_count_closed(f5, 2, 1, true) == 6);
  try {
    simple_count_closed(f5, 2, 2, false);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::MultNotOne);
  }
}

TEST_CASE("tables for the binary cyclic example use the closed form") {
  auto comps = analyzed(fixtures::gf2_shift3(), 3);
  Field f = make_prime_field(2);
  GaussianTable t0 = build_gaussian_table(f, comps[0]);
  CHECK(t0.closed_form);
  CHECK(t0.b == std::vector<bigint>{0, 1, 5, 21});
  GaussianTable t1 = build_gaussian_table(f, comps[1]);
  CHECK(t1.closed_form);
  CHECK(t1.b == std::vector<bigint>{0, 1, 3, 7});
}

TEST_CASE("high-multiplicity component is counted by enumeration") {
  auto comps = analyzed(fixtures::gf5_s3(), 3);
  Field f = make_prime_field(5);
  REQUIRE(comps.size() == 3);
  REQUIRE(comps[2].mult_in_A == 2);
  CHECK(simple_count_enumerated(comps[2], 1) == 1);
  CHECK(simple_count_enumerated(comps[2], 2) == 6);
  CHECK(simple_count_enumerated(comps[2], 3) == 31);
  GaussianTable t2 = build_gaussian_table(f, comps[2]);
  CHECK_FALSE(t2.closed_form);
  CHECK(t2.b == std::vector<bigint>{0, 1, 6, 31});
  CHECK(submodule_count(t2, 3, 0) == 1);
  CHECK(submodule_count(t2, 3, 1) == 31);
  CHECK(submodule_count(t2, 3, 2) == 31);
  CHECK(submodule_count(t2, 3, 3) == 1);
  CHECK(submodule_count(t2, 2, 3) == 0);  // k > n
}

TEST_CASE("total and one-generator counts") {
  Field f2 = make_prime_field(2);
  auto c2 = analyzed(fixtures::gf2_shift3(), 3);
  CHECK(count_all_invariant(f2, c2) == 704);
  CHECK(count_one_generator(f2, c2) == 175);

  Field f5 = make_prime_field(5);
  auto c5 = analyzed(fixtures::gf5_s3(), 3);
  CHECK(count_all_invariant(f5, c5) == 1024);
  CHECK(count_one_generator(f5, c5) == 881);
}

TEST_CASE("submodule count guardrails") {
  GaussianTable bad;
  bad.b = {0, 2, 3};  // no consistent geometry: (3-0)(3-2) / ((2-0)(2-1)) = 3/2
  try {
    submodule_count(bad, 2, 1);  // (3-0)/(2-0), inexact
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::InexactDivision);
  }
  GaussianTable small;
  small.b = {0, 1};
  try {
    submodule_count(small, 2, 1);  // n beyond the table
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::KTooLarge);
  }
}
