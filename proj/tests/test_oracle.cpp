#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "ginv/enumerate.hpp"
#include "ginv/errors.hpp"
#include "ginv/gaussian.hpp"
#include "ginv/oracle.hpp"

using namespace ginv;

TEST_CASE("oracle finds all 704 binary invariant codes") {
  Group G = fixtures::gf2_shift3();
  auto all = oracle_all_submodules(G);
  CHECK(all.size() == 704);
  CHECK(all.front().dim() == 0);
  CHECK(all.back().dim() == 9);
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1].dim() <= all[i].dim());
    CHECK_FALSE(all[i - 1] == all[i]);
  }
  for (const auto& s : all) CHECK(oracle_check_invariant(G, s));
}

TEST_CASE("oracle matches the structured enumeration set for the swap action") {
  Group G = fixtures::gf3_swap();
  auto all = oracle_all_submodules(G);
  CHECK(all.size() == 36);

  std::mt19937_64 rng(1);
  auto idems = central_primitive_idempotents(G, rng);
  auto comps = analyze_components(G, idems, kDefaultScanCap, false);
  std::vector<SumOutput> sums;
  for (const auto& cd : comps) {
    GaussianTable t = build_gaussian_table(G->field(), cd);
    std::vector<Submodule> mods;
    for (const auto& s : cd.simples) mods.push_back(s.mod);
    sums.push_back(sum_of_simples(
        mods, cd.mult_in_M, [t](std::uint32_t k) { return t.b.at(k); }));
  }
  std::set<std::vector<fel>> pipeline_keys;
  EnumerateOptions opts;
  for_each_invariant_code(comps, sums, opts, [&](const CodeRecord& r) {
    pipeline_keys.insert(r.code.key());
  });
  std::set<std::vector<fel>> oracle_keys;
  for (const auto& s : all) oracle_keys.insert(s.key());
  CHECK(pipeline_keys == oracle_keys);
  CHECK(count_all_invariant(G->field(), comps) == 36);
}

TEST_CASE("trivial group sees every subspace") {
  Field f = make_prime_field(2);
  Group G = build_group(f, {identity_matrix(f, 2)});
  auto all = oracle_all_submodules(G);
  CHECK(all.size() == 5);  // 0, three lines, the plane
}

TEST_CASE("oracle respects its word cap") {
  Group G = fixtures::gf5_s3();  // 5^9 vectors, far past the default cap
  try {
    oracle_all_submodules(G);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::TooLarge);
  }
}
