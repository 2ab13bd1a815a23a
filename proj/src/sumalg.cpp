#include "ginv/sumalg.hpp"

#include <algorithm>
#include <map>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

// Lexicographically first / next k-subset of {0..r-1}.
std::vector<std::uint32_t> first_subset(std::uint32_t k) {
  std::vector<std::uint32_t> s(k);
  for (std::uint32_t i = 0; i < k; ++i) s[i] = i;
  return s;
}

bool next_subset(std::vector<std::uint32_t>& s, std::uint32_t r) {
  const std::uint32_t k = static_cast<std::uint32_t>(s.size());
  for (std::uint32_t i = k; i-- > 0;) {
    if (s[i] < r - (k - i)) {
      ++s[i];
      for (std::uint32_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// All j-subsets of the sorted pool, via positions.
void for_each_subset_of(const std::vector<std::uint32_t>& pool, std::uint32_t j,
                        const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  const std::uint32_t m = static_cast<std::uint32_t>(pool.size());
  if (j > m) return;
  std::vector<std::uint32_t> pos = first_subset(j);
  std::vector<std::uint32_t> sub(j);
  while (true) {
    for (std::uint32_t i = 0; i < j; ++i) sub[i] = pool[pos[i]];
    fn(sub);
    if (j == 0 || !next_subset(pos, m)) break;
  }
}

}  // namespace

SumOutput sum_of_simples(const std::vector<Submodule>& simples, std::uint32_t mult,
                         const SimpleCountFn& simple_count, bool early_exit) {
  const std::uint32_t r = static_cast<std::uint32_t>(simples.size());
  require(r > 0, Err::InconsistentInput, "no simples given");
  const std::uint32_t d = simples[0].dim();
  require(d > 0, Err::InconsistentInput, "zero module is not simple");

  Submodule all = Submodule::zero(simples[0].basis().f, simples[0].ambient());
  std::set<std::vector<fel>> distinct;
  for (const Submodule& s : simples) {
    require(s.dim() == d, Err::InconsistentInput, "simples must share one dimension");
    require(distinct.insert(s.key()).second, Err::InconsistentInput, "duplicate simple");
    all = submodule_sum(all, s);
  }
  require(all.dim() == mult * d, Err::InconsistentInput,
          "simples do not span a component of the given multiplicity");

  SumOutput out;
  out.sums.push_back(SumEntry{{}, Submodule::zero(simples[0].basis().f, simples[0].ambient())});
  std::set<std::vector<fel>> seen_keys;
  seen_keys.insert(out.sums[0].mod.key());
  std::set<std::vector<std::uint32_t>> admitted_set;
  for (std::uint32_t i = 0; i < r; ++i) {
    out.sums.push_back(SumEntry{{i}, simples[i]});
    require(seen_keys.insert(simples[i].key()).second, Err::Internal, "duplicate singleton");
    out.admitted.push_back({i});
    admitted_set.insert({i});
  }

  for (std::uint32_t k = 2; k <= std::min(mult, r); ++k) {
    // Count of simples inside a direct sum of k summands, beyond the k given.
    const bigint extra = simple_count(k) - k;
    std::vector<std::uint32_t> y = first_subset(k);
    do {
      if (out.excluded.count(y)) continue;

      Submodule sum = simples[y[0]];
      for (std::uint32_t i = 1; i < k; ++i) sum = submodule_sum(sum, simples[y[i]]);
      require(sum.dim() == k * d, Err::Internal, "non-excluded subset summed non-directly");
      require(seen_keys.insert(sum.key()).second, Err::Internal, "non-excluded subset repeated a sum");
      out.admitted.push_back(y);
      admitted_set.insert(y);
      out.sums.push_back(SumEntry{y, sum});

      // Every other simple inside this sum makes any subset of the combined
      // pool of the same-or-larger size redundant.
      std::vector<std::uint32_t> inside = y;
      bigint found = 0;
      for (std::uint32_t t = 0; t < r; ++t) {
        if (std::find(y.begin(), y.end(), t) != y.end()) continue;
        if (early_exit && found >= extra) break;
        if (sum.contains(simples[t])) {
          inside.push_back(t);
          ++found;
        }
      }
      std::sort(inside.begin(), inside.end());
      for (std::uint32_t j = k; j <= std::min<std::uint32_t>(
                                         static_cast<std::uint32_t>(inside.size()), mult);
           ++j) {
        for_each_subset_of(inside, j, [&](const std::vector<std::uint32_t>& u) {
          if (!admitted_set.count(u)) out.excluded.insert(u);
        });
      }
    } while (next_subset(y, r));
  }
  return out;
}

}  // namespace ginv
