#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <random>

#include "ginv/algebra.hpp"
#include "ginv/cli.hpp"
#include "ginv/enumerate.hpp"
#include "ginv/gaussian.hpp"
#include "ginv/problem.hpp"
#include "ginv/sumalg.hpp"

using nlohmann::json;

namespace {

#ifndef GINV_DATA_DIR
#error "GINV_DATA_DIR must point at the repository's data directory"
#endif

std::string data(const std::string& name) {
  return std::string(GINV_DATA_DIR) + "/" + name;
}

struct CliResult {
  int rc = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "ginv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.rc = ginv::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> ls;
  std::istringstream in(s);
  std::string l;
  while (std::getline(in, l)) ls.push_back(l);
  return ls;
}

}  // namespace

TEST_CASE("count commands print the known totals") {
  CliResult r = run({"count", data("gf2_c3.json")});
  CHECK(r.rc == 0);
  CHECK(r.out == "704\n");
  CHECK(r.err.empty());

  CHECK(run({"count-1gen", data("gf2_c3.json")}).out == "175\n");
  CHECK(run({"count", data("gf5_s3.json")}).out == "1024\n");
  CHECK(run({"count-1gen", data("gf5_s3.json")}).out == "881\n");
  CHECK(run({"count", data("gf3_swap.json")}).out == "36\n");

  CliResult j = run({"count", data("gf2_c3.json"), "--format", "json"});
  CHECK(json::parse(j.out) == json{{"count", "704"}});
}

TEST_CASE("output is deterministic and seed independent") {
  CliResult a = run({"simples", data("gf5_s3.json"), "--format", "json"});
  CliResult b = run({"simples", data("gf5_s3.json"), "--format", "json"});
  CliResult c = run({"simples", data("gf5_s3.json"), "--format", "json", "--seed", "99"});
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("components and simples reports") {
  CliResult r = run({"components", data("gf2_c3.json")});
  CHECK(r.rc == 0);
  CHECK(r.out.find("group order: 3") != std::string::npos);
  CHECK(r.out.find("components: 2") != std::string::npos);

  CliResult j = run({"simples", data("gf5_s3.json"), "--format", "json"});
  json parsed = json::parse(j.out);
  REQUIRE(parsed["components"].size() == 3);
  CHECK(parsed["components"][0]["simple_dim"] == 1);
  CHECK(parsed["components"][2]["simple_dim"] == 2);
  CHECK(parsed["components"][2]["mult_in_module"] == 3);
  CHECK(parsed["components"][2]["mult_in_algebra"] == 2);
  CHECK(parsed["components"][2]["simples"].size() == 31);

  CliResult p = run({"simples", data("gf5_s3.json"), "--format", "json", "--parallel"});
  CHECK(p.out == j.out);
}

TEST_CASE("sums report shows the per-size census") {
  CliResult r = run({"sums", data("gf2_c3.json")});
  CHECK(r.rc == 0);
  CHECK(r.out.find("component 0: distinct sums=44 by summand count=1,21,21,1") !=
        std::string::npos);
  CHECK(r.out.find("component 1: distinct sums=16 by summand count=1,7,7,1") !=
        std::string::npos);
}

TEST_CASE("enumerate emits one well-formed record per code") {
  CliResult r = run({"enumerate", data("gf2_c3.json"), "--format", "json", "--weights"});
  CHECK(r.rc == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 704);
  std::size_t dim9 = 0;
  for (const auto& l : ls) {
    json rec = json::parse(l);
    REQUIRE(rec.contains("dim"));
    REQUIRE(rec["decomposition"].size() == 2);
    std::size_t picked = 0;
    for (const auto& idx : rec["decomposition"]) picked += idx.size();
    CHECK(rec["generators"].size() == picked);
    if (rec["dim"] > 0) CHECK(rec["min_weight"].is_number());
    if (rec["dim"] == 9) {
      ++dim9;
      CHECK(rec["min_weight"] == 1);
    }
  }
  CHECK(dim9 == 1);
}

TEST_CASE("enumerate can attach structured bases") {
  CliResult r = run({"enumerate", data("gf5_s3.json"), "--format", "json", "--emit", "both"});
  CHECK(r.rc == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 1024);
  for (const auto& l : ls) {
    json rec = json::parse(l);
    CHECK(rec["basis"].size() == rec["dim"]);
  }
}

TEST_CASE("basis command decomposes a spanned code") {
  CliResult r = run({"basis", data("gf5_s3.json"), "--vector", "100000032"});
  CHECK(r.rc == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 5);  // header + four basis rows
  CHECK(ls[0].find("dim=4") != std::string::npos);

  CliResult j = run({"basis", data("gf5_s3.json"), "--vector", "100000032",
                     "--format", "json"});
  json parsed = json::parse(j.out);
  CHECK(parsed["dim"] == 4);
  CHECK(parsed["basis"].size() == 4);
  CHECK(parsed["decomposition"][0].empty());
  CHECK(parsed["decomposition"][1].empty());
  CHECK(parsed["decomposition"][2].size() == 2);
}

TEST_CASE("intertwiner commands") {
  CliResult chk = run({"iso-check", data("gf3_sigma2.json"), "--matrix",
                       data("m_matrix.json")});
  CHECK(chk.rc == 0);
  CHECK(chk.out == "true\n");

  CliResult j = run({"iso-check", data("gf3_sigma2.json"), "--matrix",
                     data("m_matrix.json"), "--format", "json"});
  CHECK(json::parse(j.out) == json{{"intertwines", true}});

  CliResult s = run({"iso-search", data("gf3_swap.json")});
  CHECK(s.rc == 0);
  CHECK(lines_of(s.out).size() == 4);

  CliResult sj = run({"iso-search", data("gf3_sigma2.json"), "--format", "json"});
  json found = json::parse(sj.out);
  CHECK(found["found"] == true);
  CHECK(found["matrix"].size() == 4);
}

TEST_CASE("oracle command and its cap") {
  CliResult r = run({"oracle", data("gf2_c3.json")});
  CHECK(r.rc == 0);
  CHECK(r.out == "704\n");

  CliResult capped = run({"oracle", data("gf2_c3.json"), "--cap", "10"});
  CHECK(capped.rc == 3);
  CHECK(capped.err.find("E_TOO_LARGE") != std::string::npos);

  CliResult listed = run({"oracle", data("gf3_swap.json"), "--list", "--format", "json"});
  json parsed = json::parse(listed.out);
  CHECK(parsed["count"] == 36);
  CHECK(parsed["submodules"].size() == 36);
}

TEST_CASE("idempotent verification report") {
  CliResult r = run({"verify-idempotents", data("gf5_s3.json")});
  CHECK(r.rc == 0);
  CHECK(r.out.find("valid basic set: yes") != std::string::npos);
  CHECK(r.out.find("isomorphic ideal pairs: (2,3)") != std::string::npos);

  CliResult j = run({"verify-idempotents", data("gf5_s3.json"), "--format", "json"});
  json parsed = json::parse(j.out);
  CHECK(parsed["valid"] == true);
  CHECK(parsed["complete"] == true);
  REQUIRE(parsed["elements"].size() == 4);
  CHECK(parsed["elements"][0]["central"] == true);
  CHECK(parsed["elements"][2]["central"] == false);
  REQUIRE(parsed["central_primitive"].size() == 3);
  CHECK(parsed["central_primitive"][0] == json::array({1, 1, 1, 1, 1, 1}));

  // a problem file without idempotents cannot be verified
  CliResult none = run({"verify-idempotents", data("gf2_c3.json")});
  CHECK(none.rc == 2);
  CHECK(none.err.find("E_INPUT") != std::string::npos);
}

TEST_CASE("failure modes map to distinct exit codes") {
  CliResult missing = run({"count", "/nonexistent/nowhere.json"});
  CHECK(missing.rc == 2);
  CHECK(missing.err.find("E_INPUT") != std::string::npos);

  CliResult order = run({"count", data("gf2_c3.json"), "--max-order", "2"});
  CHECK(order.rc == 3);
  CHECK(order.err.find("E_ORDER_EXCEEDED") != std::string::npos);

  auto bad_path = std::filesystem::temp_directory_path() / "ginv_cli_bad_problem.json";
  {
    std::ofstream f(bad_path);
    f << "{\"field\": {\"p\": 4}, \"generators\": [[[1]]]}";
  }
  CliResult bad = run({"count", bad_path.string()});
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("E_NOT_PRIME") != std::string::npos);
  std::filesystem::remove(bad_path);

  CliResult unknown = run({"frobnicate"});
  CHECK(unknown.rc == 2);

  CliResult help = run({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("enumerate") != std::string::npos);
}

TEST_CASE("json enumeration round-trips against the library") {
  CliResult r = run({"enumerate", data("gf2_c3.json"), "--format", "json"});
  auto ls = lines_of(r.out);
  using ginv::bigint;
  // rebuild the pipeline directly and compare the per-record skeleton
  auto ps = ginv::load_problem(data("gf2_c3.json"));
  auto G = ginv::build_group(ps.field, ps.generators);
  std::mt19937_64 rng(0);
  auto idems = ginv::central_primitive_idempotents(G, rng);
  auto comps = ginv::analyze_components(G, idems, ginv::kDefaultScanCap, false);
  std::vector<ginv::SumOutput> sums;
  for (const auto& cd : comps) {
    ginv::GaussianTable t = ginv::build_gaussian_table(G->field(), cd);
    std::vector<ginv::Submodule> mods;
    for (const auto& s : cd.simples) mods.push_back(s.mod);
    sums.push_back(ginv::sum_of_simples(
        mods, cd.mult_in_M, [t](std::uint32_t k) { return t.b.at(k); }));
  }
  std::size_t at = 0;
  ginv::EnumerateOptions opts;
  ginv::for_each_invariant_code(comps, sums, opts, [&](const ginv::CodeRecord& rec) {
    json line = json::parse(ls.at(at++));
    CHECK(line["dim"] == rec.dim);
    for (std::size_t j = 0; j < rec.decomposition.size(); ++j)
      CHECK(line["decomposition"][j].get<std::vector<std::uint32_t>>() ==
            rec.decomposition[j]);
  });
  CHECK(at == ls.size());
}
