#include "ginv/problem.hpp"

#include <fstream>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

const nlohmann::json& get_field(const nlohmann::json& j, const char* key,
                                const std::string& where) {
  require(j.is_object(), Err::Input, where + ": expected an object");
  auto it = j.find(key);
  require(it != j.end(), Err::Input, where + ": missing \"" + key + "\"");
  return *it;
}

std::uint64_t get_uint(const nlohmann::json& j, const std::string& where) {
  require(j.is_number_unsigned(), Err::Input, where + ": expected a non-negative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

ProblemSpec parse_problem(const nlohmann::json& j) {
  ProblemSpec ps;
  require(j.is_object(), Err::Input, "problem: expected a JSON object");

  const nlohmann::json& jf = get_field(j, "field", "problem");
  std::uint64_t p = get_uint(get_field(jf, "p", "field"), "field.p");
  std::uint64_t m = jf.contains("m") ? get_uint(jf["m"], "field.m") : 1;
  require(m >= 1, Err::Input, "field.m: must be at least 1");
  if (m == 1 && !jf.contains("modulus")) {
    ps.field = make_prime_field(p);
  } else {
    require(jf.contains("modulus"), Err::Input, "field.modulus: required when m > 1");
    const nlohmann::json& jm = jf["modulus"];
    require(jm.is_array(), Err::Input, "field.modulus: expected an array");
    std::vector<fel> mod;
    for (std::size_t i = 0; i < jm.size(); ++i)
      mod.push_back(static_cast<fel>(get_uint(jm[i], "field.modulus[" + std::to_string(i) + "]")));
    ps.field = make_extension_field(p, static_cast<std::uint32_t>(m), mod);
  }

  const nlohmann::json& jg = get_field(j, "generators", "problem");
  require(jg.is_array() && !jg.empty(), Err::Input,
          "generators: expected a non-empty array of matrices");
  for (std::size_t gi = 0; gi < jg.size(); ++gi) {
    const std::string gwhere = "generators[" + std::to_string(gi) + "]";
    const nlohmann::json& jmat = jg[gi];
    require(jmat.is_array() && !jmat.empty(), Err::Input, gwhere + ": expected an array of rows");
    const std::uint32_t rows = static_cast<std::uint32_t>(jmat.size());
    Matrix M(ps.field, rows, rows);
    for (std::uint32_t r = 0; r < rows; ++r) {
      const nlohmann::json& jrow = jmat[r];
      const std::string rwhere = gwhere + "[" + std::to_string(r) + "]";
      require(jrow.is_array() && jrow.size() == rows, Err::Input,
              rwhere + ": expected a row of length " + std::to_string(rows));
      for (std::uint32_t cidx = 0; cidx < rows; ++cidx)
        M.at(r, cidx) = ps.field->from_int(
            get_uint(jrow[cidx], rwhere + "[" + std::to_string(cidx) + "]"),
            rwhere + "[" + std::to_string(cidx) + "]");
    }
    ps.generators.push_back(std::move(M));
  }
  ps.n = ps.generators[0].rows;
  for (const Matrix& M : ps.generators)
    require(M.rows == ps.n, Err::Input, "generators: matrices must share one dimension");
  if (j.contains("n"))
    require(get_uint(j["n"], "n") == ps.n, Err::Input,
            "n: does not match the generator dimension");

  if (j.contains("idempotents")) {
    const nlohmann::json& je = j["idempotents"];
    require(je.is_array(), Err::Input, "idempotents: expected an array");
    for (std::size_t ei = 0; ei < je.size(); ++ei) {
      const std::string ewhere = "idempotents[" + std::to_string(ei) + "]";
      require(je[ei].is_array(), Err::Input, ewhere + ": expected an array of terms");
      std::vector<IdempotentWord> terms;
      for (std::size_t ti = 0; ti < je[ei].size(); ++ti) {
        const std::string twhere = ewhere + "[" + std::to_string(ti) + "]";
        const nlohmann::json& jt = je[ei][ti];
        IdempotentWord w;
        w.coeff = ps.field->from_int(get_uint(get_field(jt, "coeff", twhere), twhere + ".coeff"),
                                     twhere + ".coeff");
        const nlohmann::json& jw = get_field(jt, "word", twhere);
        require(jw.is_array(), Err::Input, twhere + ".word: expected an array");
        for (std::size_t wi = 0; wi < jw.size(); ++wi) {
          std::uint64_t s = get_uint(jw[wi], twhere + ".word[" + std::to_string(wi) + "]");
          require(s < ps.generators.size(), Err::Input,
                  twhere + ".word[" + std::to_string(wi) + "]: generator index out of range");
          w.word.push_back(static_cast<std::uint32_t>(s));
        }
        terms.push_back(std::move(w));
      }
      ps.idempotents.push_back(std::move(terms));
    }
  }
  return ps;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::Input, "cannot open problem file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Err::Input, std::string("problem file is not valid JSON: ") + e.what());
  }
  return parse_problem(j);
}

AlgebraElement resolve_idempotent(const Group& G, const std::vector<IdempotentWord>& words) {
  const Field& F = G->field();
  AlgebraElement e = alg_zero(G);
  for (const IdempotentWord& w : words) {
    std::uint32_t idx = 0;  // identity; the word multiplies generators left to right
    for (std::uint32_t s : w.word) idx = G->mul(idx, G->generator_index(s));
    e.c[idx] = F->add(e.c[idx], w.coeff);
  }
  return e;
}

}  // namespace ginv
