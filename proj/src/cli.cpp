#include "ginv/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ginv/algebra.hpp"
#include "ginv/enumerate.hpp"
#include "ginv/errors.hpp"
#include "ginv/gaussian.hpp"
#include "ginv/group.hpp"
#include "ginv/isomap.hpp"
#include "ginv/modaction.hpp"
#include "ginv/oracle.hpp"
#include "ginv/problem.hpp"
#include "ginv/sumalg.hpp"

namespace ginv {

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string file;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultScanCap;
  std::uint32_t max_order = GroupTable::kDefaultMaxOrder;
  bool parallel = false;
};

// Everything the pipeline derives from a problem file.
struct Session {
  ProblemSpec ps;
  Group G;
  std::vector<AlgebraElement> idems;
  std::vector<ComponentData> comps;
};

Session open_session(const CommonOpts& o, bool analyze = true) {
  Session s;
  s.ps = load_problem(o.file);
  s.G = build_group(s.ps.field, s.ps.generators, o.max_order);
  if (analyze) {
    std::mt19937_64 rng(o.seed);
    s.idems = central_primitive_idempotents(s.G, rng);
    s.comps = analyze_components(s.G, s.idems, o.cap, o.parallel);
  }
  return s;
}

std::vector<SumOutput> build_sums(const Session& s) {
  std::vector<SumOutput> out;
  for (const ComponentData& cd : s.comps) {
    GaussianTable t = build_gaussian_table(s.G->field(), cd);
    std::vector<Submodule> mods;
    for (const SimpleEntry& e : cd.simples) mods.push_back(e.mod);
    out.push_back(sum_of_simples(
        mods, cd.mult_in_M, [&t](std::uint32_t k) { return submodule_count(t, k, 1); }));
  }
  return out;
}

std::vector<std::string> basis_strings(const Field& F, const Submodule& S) {
  std::vector<std::string> rows;
  for (std::uint32_t i = 0; i < S.dim(); ++i) rows.push_back(vec_to_string(F, S.basis().row(i)));
  return rows;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) r += sep;
    r += v[i];
  }
  return r;
}

std::string idx_set_string(const std::vector<std::uint32_t>& idx) {
  std::string r = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) r += ",";
    r += std::to_string(idx[i]);
  }
  return r + "]";
}

json idx_set_json(const std::vector<std::uint32_t>& idx) {
  json a = json::array();
  for (std::uint32_t i : idx) a.push_back(i);
  return a;
}

void cmd_components(const CommonOpts& o, std::ostream& out) {
  Session s = open_session(o);
  if (o.format == "json") {
    json j;
    j["order"] = s.G->order();
    j["components"] = json::array();
    for (std::size_t i = 0; i < s.comps.size(); ++i) {
      const ComponentData& cd = s.comps[i];
      json c;
      c["index"] = i;
      c["dim"] = cd.component.dim();
      c["idempotent"] = cd.idem.c;
      c["basis"] = basis_strings(s.G->field(), cd.component);
      j["components"].push_back(std::move(c));
    }
    out << j.dump() << "\n";
    return;
  }
  out << "group order: " << s.G->order() << "\n";
  out << "components: " << s.comps.size() << "\n";
  for (std::size_t i = 0; i < s.comps.size(); ++i) {
    const ComponentData& cd = s.comps[i];
    out << "component " << i << ": dim=" << cd.component.dim()
        << " idempotent=" << alg_to_string(cd.idem)
        << " basis=" << join(basis_strings(s.G->field(), cd.component), " ") << "\n";
  }
}

void cmd_simples(const CommonOpts& o, std::ostream& out) {
  Session s = open_session(o);
  if (o.format == "json") {
    json j;
    j["components"] = json::array();
    for (std::size_t i = 0; i < s.comps.size(); ++i) {
      const ComponentData& cd = s.comps[i];
      json c;
      c["index"] = i;
      c["dim"] = cd.component.dim();
      c["simple_dim"] = cd.simple_dim;
      c["mult_in_module"] = cd.mult_in_M;
      c["mult_in_algebra"] = cd.mult_in_A;
      c["simples"] = json::array();
      for (const SimpleEntry& e : cd.simples)
        c["simples"].push_back(vec_to_string(s.G->field(), e.generator));
      j["components"].push_back(std::move(c));
    }
    out << j.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < s.comps.size(); ++i) {
    const ComponentData& cd = s.comps[i];
    out << "component " << i << ": dim=" << cd.component.dim() << " d=" << cd.simple_dim
        << " n=" << cd.mult_in_M << " k=" << cd.mult_in_A << " simples=" << cd.simples.size()
        << "\n";
    for (const SimpleEntry& e : cd.simples)
      out << "  " << vec_to_string(s.G->field(), e.generator) << "\n";
  }
}

void cmd_sums(const CommonOpts& o, std::ostream& out) {
  Session s = open_session(o);
  std::vector<SumOutput> sums = build_sums(s);
  if (o.format == "json") {
    json j;
    j["components"] = json::array();
    for (std::size_t i = 0; i < sums.size(); ++i) {
      json c;
      c["index"] = i;
      c["distinct_sums"] = sums[i].sums.size();
      c["sets"] = json::array();
      for (const SumEntry& e : sums[i].sums) c["sets"].push_back(idx_set_json(e.idx));
      j["components"].push_back(std::move(c));
    }
    out << j.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < sums.size(); ++i) {
    std::vector<std::uint64_t> by_size;
    for (const SumEntry& e : sums[i].sums) {
      if (by_size.size() <= e.idx.size()) by_size.resize(e.idx.size() + 1, 0);
      ++by_size[e.idx.size()];
    }
    out << "component " << i << ": distinct sums=" << sums[i].sums.size()
        << " by summand count=";
    for (std::size_t k = 0; k < by_size.size(); ++k) out << (k ? "," : "") << by_size[k];
    out << "\n";
  }
}

void cmd_count(const CommonOpts& o, std::ostream& out, bool one_gen) {
  Session s = open_session(o);
  bigint c = one_gen ? count_one_generator(s.G->field(), s.comps)
                     : count_all_invariant(s.G->field(), s.comps);
  if (o.format == "json")
    out << json{{"count", c.str()}}.dump() << "\n";
  else
    out << c.str() << "\n";
}

void cmd_enumerate(const CommonOpts& o, std::ostream& out, const std::string& emit, bool weights,
                   std::uint32_t max_dim) {
  Session s = open_session(o);
  std::vector<SumOutput> sums = build_sums(s);
  const bool want_basis = (emit == "basis" || emit == "both");
  const bool want_gens = (emit == "generators" || emit == "both");
  std::vector<AlgebraElement> block_idems;
  if (want_basis) {
    std::vector<AlgebraElement> user;
    for (const auto& words : s.ps.idempotents) user.push_back(resolve_idempotent(s.G, words));
    block_idems = pick_block_idempotents(s.G, s.comps, user);
  }
  EnumerateOptions opts;
  opts.compute_weights = weights;
  opts.weight_max_dim = max_dim;
  const bool as_json = (o.format == "json");
  bigint emitted = for_each_invariant_code(s.comps, sums, opts, [&](const CodeRecord& rec) {
    if (as_json) {
      json j;
      j["dim"] = rec.dim;
      j["decomposition"] = json::array();
      for (const auto& idx : rec.decomposition) j["decomposition"].push_back(idx_set_json(idx));
      if (want_gens) {
        j["generators"] = json::array();
        for (const Vec& g : rec.generators) j["generators"].push_back(vec_to_string(s.G->field(), g));
      }
      if (want_basis) {
        j["basis"] = json::array();
        for (const Vec& b : code_basis(s.G, rec, s.comps, block_idems))
          j["basis"].push_back(vec_to_string(s.G->field(), b));
      }
      if (rec.min_weight) j["min_weight"] = *rec.min_weight;
      out << j.dump() << "\n";
      return;
    }
    out << "dim=" << rec.dim << " choice=";
    for (const auto& idx : rec.decomposition) out << idx_set_string(idx);
    if (want_gens) {
      std::vector<std::string> gs;
      for (const Vec& g : rec.generators) gs.push_back(vec_to_string(s.G->field(), g));
      out << " gens=" << join(gs, ",");
    }
    if (want_basis) {
      std::vector<std::string> bs;
      for (const Vec& b : code_basis(s.G, rec, s.comps, block_idems))
        bs.push_back(vec_to_string(s.G->field(), b));
      out << " basis=" << join(bs, ",");
    }
    if (rec.min_weight) out << " min_weight=" << *rec.min_weight;
    out << "\n";
  });
  require(emitted == count_all_invariant(s.G->field(), s.comps), Err::Internal,
          "enumerated record count disagrees with the counting formula");
}

void cmd_basis(const CommonOpts& o, std::ostream& out, const std::vector<std::string>& vecs) {
  require(!vecs.empty(), Err::Input, "basis needs at least one --vector");
  Session s = open_session(o);
  std::vector<SumOutput> sums = build_sums(s);
  const Field& F = s.G->field();

  Submodule C = Submodule::zero(F, s.G->n());
  for (const std::string& vs : vecs) {
    Vec v = vec_from_string(F, vs);
    require(v.size() == s.G->n(), Err::Input, "--vector has the wrong length: " + vs);
    C = submodule_sum(C, cyclic_submodule(s.G, v));
  }

  CodeRecord rec;
  rec.code = C;
  rec.dim = C.dim();
  std::uint32_t covered = 0;
  for (std::size_t j = 0; j < s.comps.size(); ++j) {
    Submodule Cj = submodule_intersection(C, s.comps[j].component);
    covered += Cj.dim();
    bool found = false;
    for (const SumEntry& e : sums[j].sums)
      if (e.mod == Cj) {
        rec.decomposition.push_back(e.idx);
        for (std::uint32_t i : e.idx) rec.generators.push_back(s.comps[j].simples[i].generator);
        found = true;
        break;
      }
    require(found, Err::Internal, "component projection missing from the sum table");
  }
  require(covered == C.dim(), Err::Internal, "component projections do not exhaust the code");

  std::vector<AlgebraElement> user;
  for (const auto& words : s.ps.idempotents) user.push_back(resolve_idempotent(s.G, words));
  std::vector<AlgebraElement> block_idems = pick_block_idempotents(s.G, s.comps, user);
  std::vector<Vec> rows = code_basis(s.G, rec, s.comps, block_idems);

  if (o.format == "json") {
    json j;
    j["dim"] = rec.dim;
    j["decomposition"] = json::array();
    for (const auto& idx : rec.decomposition) j["decomposition"].push_back(idx_set_json(idx));
    j["basis"] = json::array();
    for (const Vec& b : rows) j["basis"].push_back(vec_to_string(F, b));
    out << j.dump() << "\n";
    return;
  }
  out << "dim=" << rec.dim << " choice=";
  for (const auto& idx : rec.decomposition) out << idx_set_string(idx);
  out << "\n";
  for (const Vec& b : rows) out << vec_to_string(F, b) << "\n";
}

Matrix load_matrix(const Field& F, const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::Input, "cannot open matrix file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Err::Input, std::string("matrix file is not valid JSON: ") + e.what());
  }
  require(j.is_object() && j.contains("matrix") && j["matrix"].is_array(), Err::Input,
          "matrix file needs a \"matrix\" array");
  const json& jm = j["matrix"];
  const std::uint32_t rows = static_cast<std::uint32_t>(jm.size());
  require(rows > 0, Err::Input, "matrix must be non-empty");
  Matrix M(F, rows, rows);
  for (std::uint32_t r = 0; r < rows; ++r) {
    require(jm[r].is_array() && jm[r].size() == rows, Err::Input, "matrix must be square");
    for (std::uint32_t c = 0; c < rows; ++c) {
      require(jm[r][c].is_number_unsigned(), Err::Input, "matrix entries must be integers");
      M.at(r, c) = F->from_int(jm[r][c].get<std::int64_t>(), "matrix entry");
    }
  }
  return M;
}

void cmd_iso_check(const CommonOpts& o, std::ostream& out, const std::string& matrix_file) {
  Session s = open_session(o, /*analyze=*/false);
  RegularBasisRep rep = build_regular_rep(s.G);
  Matrix A = load_matrix(s.G->field(), matrix_file);
  bool ok = check_weight_iso(A, rep);
  if (o.format == "json")
    out << json{{"intertwines", ok}}.dump() << "\n";
  else
    out << (ok ? "true" : "false") << "\n";
}

void cmd_iso_search(const CommonOpts& o, std::ostream& out, std::uint64_t budget) {
  Session s = open_session(o, /*analyze=*/false);
  RegularBasisRep rep = build_regular_rep(s.G);
  std::optional<Matrix> A = search_weight_iso(rep, budget);
  if (o.format == "json") {
    json j;
    j["found"] = A.has_value();
    if (A) {
      j["matrix"] = json::array();
      for (std::uint32_t i = 0; i < A->rows; ++i)
        j["matrix"].push_back(vec_to_string(s.G->field(), A->row(i)));
    }
    out << j.dump() << "\n";
    return;
  }
  if (!A) {
    out << "none\n";
    return;
  }
  for (std::uint32_t i = 0; i < A->rows; ++i)
    out << vec_to_string(s.G->field(), A->row(i)) << "\n";
}

void cmd_oracle(const CommonOpts& o, std::ostream& out, std::uint64_t cap, bool list) {
  Session s = open_session(o, /*analyze=*/false);
  std::vector<Submodule> subs = oracle_all_submodules(s.G, cap);
  for (const Submodule& m : subs)
    require(oracle_check_invariant(s.G, m), Err::Internal, "oracle produced a non-invariant space");
  if (o.format == "json") {
    json j;
    j["count"] = subs.size();
    if (list) {
      j["submodules"] = json::array();
      for (const Submodule& m : subs)
        j["submodules"].push_back(
            json{{"dim", m.dim()}, {"basis", basis_strings(s.G->field(), m)}});
    }
    out << j.dump() << "\n";
    return;
  }
  out << subs.size() << "\n";
  if (list)
    for (const Submodule& m : subs)
      out << "dim=" << m.dim() << " basis=" << join(basis_strings(s.G->field(), m), " ") << "\n";
}

void cmd_verify_idempotents(const CommonOpts& o, std::ostream& out) {
  Session s = open_session(o, /*analyze=*/false);
  require(!s.ps.idempotents.empty(), Err::Input, "problem file supplies no idempotents");
  std::vector<AlgebraElement> es;
  for (const auto& words : s.ps.idempotents) es.push_back(resolve_idempotent(s.G, words));
  BasicSetReport rep = verify_basic_set(es);
  std::mt19937_64 rng(o.seed);
  std::vector<AlgebraElement> central = central_primitive_idempotents(s.G, rng);

  if (o.format == "json") {
    json j;
    j["elements"] = json::array();
    for (std::size_t i = 0; i < es.size(); ++i)
      j["elements"].push_back(json{{"coeffs", es[i].c},
                                   {"idempotent", static_cast<bool>(rep.idempotent[i])},
                                   {"central", static_cast<bool>(rep.central[i])},
                                   {"nonzero", static_cast<bool>(rep.nonzero[i])}});
    j["pairwise_orthogonal"] = rep.pairwise_orthogonal;
    j["complete"] = rep.complete;
    j["valid"] = rep.valid;
    j["isomorphic_pairs"] = json::array();
    for (auto [a, b] : rep.isomorphic_pairs) j["isomorphic_pairs"].push_back(json::array({a, b}));
    j["central_primitive"] = json::array();
    for (const AlgebraElement& e : central) j["central_primitive"].push_back(e.c);
    out << j.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < es.size(); ++i)
    out << "element " << i << ": coeffs=" << alg_to_string(es[i])
        << " idempotent=" << (rep.idempotent[i] ? "yes" : "no")
        << " central=" << (rep.central[i] ? "yes" : "no")
        << " nonzero=" << (rep.nonzero[i] ? "yes" : "no") << "\n";
  out << "pairwise orthogonal: " << (rep.pairwise_orthogonal ? "yes" : "no") << "\n";
  out << "complete: " << (rep.complete ? "yes" : "no") << "\n";
  out << "valid basic set: " << (rep.valid ? "yes" : "no") << "\n";
  out << "isomorphic ideal pairs:";
  for (auto [a, b] : rep.isomorphic_pairs) out << " (" << a << "," << b << ")";
  out << "\n";
  out << "central primitive idempotents:";
  for (const AlgebraElement& e : central) out << " " << alg_to_string(e);
  out << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"invariant linear codes under a finite matrix group"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string emit = "generators";
  bool weights = false;
  std::uint32_t max_dim = kDefaultWeightMaxDim;
  std::uint64_t budget = kDefaultIsoBudget;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  bool oracle_list = false;
  std::vector<std::string> vectors;
  std::string matrix_file;

  auto add_common = [&](CLI::App* c, bool needs_cap = true) {
    c->add_option("file", o.file, "problem JSON file")->required();
    c->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    c->add_option("--seed", o.seed, "random seed for the idempotent splitting");
    c->add_option("--max-order", o.max_order, "largest group order to close");
    if (needs_cap) {
      c->add_option("--cap", o.cap, "component vector-scan cap");
      c->add_flag("--parallel", o.parallel, "analyze components concurrently");
    }
  };

  CLI::App* c_components = app.add_subcommand("components", "homogeneous components of F^n");
  add_common(c_components);
  CLI::App* c_simples = app.add_subcommand("simples", "simple submodules per component");
  add_common(c_simples);
  CLI::App* c_sums = app.add_subcommand("sums", "distinct sums of simples per component");
  add_common(c_sums);
  CLI::App* c_enum = app.add_subcommand("enumerate", "all invariant codes, one per line");
  add_common(c_enum);
  c_enum->add_option("--emit", emit, "what to print per code")
      ->check(CLI::IsMember({"generators", "basis", "both"}));
  c_enum->add_flag("--weights", weights, "compute minimum weights");
  c_enum->add_option("--max-dim", max_dim, "largest dimension to weight-scan");
  CLI::App* c_count = app.add_subcommand("count", "number of invariant codes");
  add_common(c_count);
  CLI::App* c_count1 = app.add_subcommand("count-1gen", "number of one-generator codes");
  add_common(c_count1);
  CLI::App* c_basis = app.add_subcommand("basis", "structured basis of the code spanned by vectors");
  add_common(c_basis);
  c_basis->add_option("--vector", vectors, "generator vector (repeatable)");
  CLI::App* c_isoc = app.add_subcommand("iso-check", "verify a weight-preserving intertwiner");
  add_common(c_isoc, false);
  c_isoc->add_option("--matrix", matrix_file, "JSON file with the candidate matrix")->required();
  CLI::App* c_isos = app.add_subcommand("iso-search", "search for a weight-preserving intertwiner");
  add_common(c_isos, false);
  c_isos->add_option("--budget", budget, "node budget for the search");
  CLI::App* c_oracle = app.add_subcommand("oracle", "brute-force census of invariant subspaces");
  add_common(c_oracle, false);
  c_oracle->add_option("--cap", oracle_cap, "largest q^n the oracle will scan");
  c_oracle->add_flag("--list", oracle_list, "print every subspace");
  CLI::App* c_verify = app.add_subcommand("verify-idempotents", "check the supplied idempotents");
  add_common(c_verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_components)) cmd_components(o, out);
    if (app.got_subcommand(c_simples)) cmd_simples(o, out);
    if (app.got_subcommand(c_sums)) cmd_sums(o, out);
    if (app.got_subcommand(c_enum)) cmd_enumerate(o, out, emit, weights, max_dim);
    if (app.got_subcommand(c_count)) cmd_count(o, out, false);
    if (app.got_subcommand(c_count1)) cmd_count(o, out, true);
    if (app.got_subcommand(c_basis)) cmd_basis(o, out, vectors);
    if (app.got_subcommand(c_isoc)) cmd_iso_check(o, out, matrix_file);
    if (app.got_subcommand(c_isos)) cmd_iso_search(o, out, budget);
    if (app.got_subcommand(c_oracle)) cmd_oracle(o, out, oracle_cap, oracle_list);
    if (app.got_subcommand(c_verify)) cmd_verify_idempotents(o, out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";  // what() already carries the code name
    switch (e.code()) {
      case Err::OrderExceeded:
      case Err::ComponentTooLarge:
      case Err::TooLarge:
      case Err::BudgetExceeded:
        return 3;
      case Err::Internal:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ginv
