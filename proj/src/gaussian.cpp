#include "ginv/gaussian.hpp"

#include <algorithm>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

bigint pow_big(std::uint64_t base, std::uint32_t e) {
  bigint r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

bigint simple_count_closed(const Field& F, std::uint32_t t, std::uint32_t d,
                           bool mult_in_algebra_is_one) {
  require(mult_in_algebra_is_one, Err::MultNotOne,
          "closed-form simple count needs multiplicity one in the group algebra");
  if (t == 0) return 0;
  return (pow_big(F->q(), t * d) - 1) / (pow_big(F->q(), d) - 1);
}

bigint simple_count_enumerated(const ComponentData& cd, std::uint32_t t) {
  if (t == 0) return 0;
  const Field& F = cd.component.basis().f;
  Submodule U = Submodule::zero(F, cd.component.ambient());
  std::uint32_t picked = 0;
  for (const SimpleEntry& s : cd.simples) {
    if (picked == t) break;
    if (U.contains(s.mod)) continue;
    Submodule next = submodule_sum(U, s.mod);
    require(next.dim() == U.dim() + cd.simple_dim, Err::Internal,
            "independent simple did not add a full copy");
    U = std::move(next);
    ++picked;
  }
  require(picked == t, Err::KTooLarge, "component holds fewer independent simples than requested");
  bigint count = 0;
  for (const SimpleEntry& s : cd.simples)
    if (U.contains(s.mod)) ++count;
  return count;
}

GaussianTable build_gaussian_table(const Field& F, const ComponentData& cd) {
  GaussianTable t;
  t.closed_form = (cd.mult_in_A == 1);
  t.b.resize(cd.mult_in_M + 1);
  t.b[0] = 0;
  for (std::uint32_t i = 1; i <= cd.mult_in_M; ++i)
    t.b[i] = t.closed_form ? simple_count_closed(F, i, cd.simple_dim, true)
                           : simple_count_enumerated(cd, i);
  return t;
}

bigint submodule_count(const GaussianTable& t, std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  if (k == 0) return 1;
  require(n < t.b.size(), Err::KTooLarge, "multiplicity exceeds the prepared table");
  bigint num = 1, den = 1;
  for (std::uint32_t j = 0; j < k; ++j) {
    num *= t.b[n] - t.b[j];
    den *= t.b[k] - t.b[j];
  }
  bigint q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  require(r == 0, Err::InexactDivision, "submodule count quotient is not an integer");
  return q;
}

bigint count_all_invariant(const Field& F, const std::vector<ComponentData>& comps) {
  bigint total = 1;
  for (const ComponentData& cd : comps) {
    GaussianTable t = build_gaussian_table(F, cd);
    bigint per = 1;  // the zero choice
    for (std::uint32_t k = 1; k <= cd.mult_in_M; ++k) per += submodule_count(t, cd.mult_in_M, k);
    total *= per;
  }
  return total;
}

bigint count_one_generator(const Field& F, const std::vector<ComponentData>& comps) {
  bigint total = 1;
  for (const ComponentData& cd : comps) {
    GaussianTable t = build_gaussian_table(F, cd);
    const std::uint32_t l = std::min(cd.mult_in_M, cd.mult_in_A);
    bigint per = 1;
    for (std::uint32_t k = 1; k <= l; ++k) per += submodule_count(t, cd.mult_in_M, k);
    total *= per;
  }
  return total - 1;
}

}  // namespace ginv
