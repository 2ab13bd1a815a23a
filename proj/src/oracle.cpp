#include "ginv/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ginv/errors.hpp"
#include "ginv/modaction.hpp"

namespace ginv {

std::vector<Submodule> oracle_all_submodules(const Group& G, std::uint64_t cap) {
  const Field& F = G->field();
  const std::uint32_t n = G->n();
  const std::uint64_t q = F->q();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    require(total <= cap / q, Err::TooLarge, "oracle vector scan exceeds the cap");
    total *= q;
  }

  std::vector<Submodule> found;
  std::set<std::vector<fel>> keys;
  auto add = [&](Submodule s) {
    if (keys.insert(s.key()).second) found.push_back(std::move(s));
  };

  Vec v(n, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::uint32_t i = 0; i < n; ++i) {
      v[i] = static_cast<fel>(rest % q);
      rest /= q;
    }
    add(cyclic_submodule(G, v));
  }

  // Close under pairwise sums; new entries re-enter the pairing.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(submodule_sum(found[i], found[j]));

  std::sort(found.begin(), found.end(), [](const Submodule& a, const Submodule& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.key() < b.key();
  });
  return found;
}

bool oracle_check_invariant(const Group& G, const Submodule& S) {
  for (std::uint32_t s = 0; s < G->generator_count(); ++s) {
    const Matrix& M = G->element(G->generator_index(s));
    for (std::uint32_t i = 0; i < S.dim(); ++i)
      if (!S.contains(mat_vec(M, S.basis().row(i)))) return false;
  }
  return true;
}

}  // namespace ginv
