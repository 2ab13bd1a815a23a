#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ginv/algebra.hpp"
#include "ginv/group.hpp"
#include "ginv/linalg.hpp"

namespace ginv {

// One term of a group-algebra element given as words in the input
// generators: coeff * (gens[w0] * gens[w1] * ...), empty word = identity.
struct IdempotentWord {
  fel coeff = 0;
  std::vector<std::uint32_t> word;
};

// A problem instance as read from JSON, before group closure.
struct ProblemSpec {
  Field field;
  std::uint32_t n = 0;
  std::vector<Matrix> generators;
  std::vector<std::vector<IdempotentWord>> idempotents;  // optional, may be empty
};

// Parse a problem object; all complaints are E_INPUT with a JSON-path hint.
ProblemSpec parse_problem(const nlohmann::json& j);
ProblemSpec load_problem(const std::string& path);

// Resolve the word description against the closed group.
AlgebraElement resolve_idempotent(const Group& G, const std::vector<IdempotentWord>& words);

}  // namespace ginv
