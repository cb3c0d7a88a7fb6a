#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "../tools/cli.hpp"
#include "weylchar/guard.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& argv) {
  std::ostringstream out, err;
  const int code = weylchar::cli::run_command(argv, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("normalize") {
  const auto r = run({"--p", "5", "normalize", "x1^2*y1^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "y1^2*x1^2 + 4*y1*x1 + 2\n");

  const auto rj =
      run({"--p", "5", "--json", "normalize", "x1*y1"});
  CHECK(rj.code == 0);
  const auto j = json::parse(rj.out);
  CHECK(j["algebra"] == "weyl");
  CHECK(j["n"] == 1);
  CHECK(j["p"] == 5);
  CHECK(j["element"] == "y1*x1 + 1");

  const auto rp =
      run({"--algebra", "poisson", "--p", "5", "normalize", "x1*y1"});
  CHECK(rp.out == "x1*y1\n");
}

TEST_CASE("comm and bracket") {
  const auto r = run({"--algebra", "weyl", "--n", "1", "--p", "5", "comm",
                      "x1^2", "y1"});
  CHECK(r.code == 0);
  CHECK(r.out == "2*x1\n");

  // global flags may also follow the subcommand
  const auto r2 = run({"comm", "--algebra", "weyl", "--n", "1", "--p", "5",
                       "x1^2", "y1"});
  CHECK(r2.code == 0);
  CHECK(r2.out == "2*x1\n");

  const auto rb = run({"--p", "5", "bracket", "x1^2", "y1"});
  CHECK(rb.code == 0);
  CHECK(rb.out == "2*x1\n");

  const auto bad = run({"--algebra", "poisson", "--p", "5", "comm", "x1",
                        "y1"});
  CHECK(bad.code == 2);
}

TEST_CASE("central and decompose") {
  CHECK(run({"--p", "2", "central", "x1^2"}).out == "true\n");
  CHECK(run({"--p", "2", "central", "y1*x1"}).out == "false\n");
  const auto j =
      json::parse(run({"--p", "2", "--json", "central", "x1^2"}).out);
  CHECK(j["central"] == true);

  const auto dec =
      json::parse(run({"--p", "2", "--json", "decompose", "x1^3"}).out);
  REQUIRE(dec["parts"].size() == 1);
  CHECK(dec["parts"][0]["monomial"] == "x1");
  CHECK(dec["parts"][0]["coefficient"] == "x1^2");

  const auto frob = json::parse(
      run({"--algebra", "poisson", "--p", "2", "--json", "decompose",
           "x1^5", "--m", "2"})
          .out);
  CHECK(frob["P"] == 4);
  REQUIRE(frob["parts"].size() == 1);
  CHECK(frob["parts"][0]["monomial"] == "x1");
  CHECK(frob["parts"][0]["coefficient"] == "x1^4");
}

TEST_CASE("check, apply, kernel with an inline map") {
  const std::string valid_map =
      R"({"kind":"weyl","n":1,"p":2,"u":["x1"],"v":["y1^2*x1 - y1"]})";
  const auto rc = run({"check", "--map", valid_map});
  CHECK(rc.code == 0);
  CHECK(rc.out == "valid\n");

  const std::string invalid_map =
      R"({"kind":"weyl","n":1,"p":5,"u":["x1^2"],"v":["y1"]})";
  const auto ri = run({"--json", "check", "--map", invalid_map});
  CHECK(ri.code == 1);
  const auto j = json::parse(ri.out);
  CHECK(j["valid"] == false);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["relation"] == "[u1, v1]");
  CHECK(j["violations"][0]["actual"] == "2*x1");
  CHECK(j["violations"][0]["expected"] == "1");

  const auto ra = run({"apply", "--map", valid_map, "y1^2*x1"});
  CHECK(ra.code == 0);
  CHECK(ra.out == "y1^4*x1^3\n");

  const auto rk =
      run({"--json", "kernel", "--map", valid_map, "--bound", "8"});
  CHECK(rk.code == 0);
  const auto kj = json::parse(rk.out);
  CHECK(kj["degree_bound"] == 8);
  CHECK(kj["dimension"] == 0);
  CHECK(kj["basis"].empty());
  CHECK(kj["source_dimension"] == 45);

  const auto missing = run({"kernel", "--bound", "4"});
  CHECK(missing.code == 2);

  const auto bad_json = run({"check", "--map", "{nope"});
  CHECK(bad_json.code == 2);
}

TEST_CASE("maps load from files") {
  const std::string path = "cli_test_map.json";
  {
    std::ofstream f(path);
    f << R"({"kind":"poisson","n":1,"p":3,"u":["x1 + y1^2"],"v":["y1"]})";
  }
  const auto r = run({"check", "--map-file", path});
  CHECK(r.code == 0);
  CHECK(r.out == "valid\n");
  const auto ra = run({"apply", "--map-file", path, "x1"});
  CHECK(ra.out == "y1^2 + x1\n");
  std::remove(path.c_str());

  CHECK(run({"check", "--map-file", "does_not_exist.json"}).code == 2);
}

TEST_CASE("growth, member, depend") {
  const auto r =
      run({"--n", "1", "--p", "2", "growth", "--gens", "x1,y1", "--N", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "N,d_N\n0,1\n1,3\n2,6\n3,10\n");

  const auto rj = json::parse(run({"--n", "1", "--p", "2", "--json", "growth",
                                   "--gens", "x1,y1", "--N", "10", "--fit"})
                                  .out);
  CHECK(rj["dims"].size() == 11);
  CHECK(rj["dims"][10] == 66);
  CHECK(rj["fit"]["exponent"].is_number());
  CHECK(rj["fit"]["window"].size() == 2);

  const auto rm = run({"--n", "2", "--p", "2", "member", "--gens", "y1,y2",
                       "--N", "4", "x1"});
  CHECK(rm.code == 0);
  CHECK(rm.out == "false\n");

  const auto rd = json::parse(
      run({"--json", "--p", "5", "depend", "x1", "x1^3"}).out);
  CHECK(rd["dependent"] == true);
  CHECK(rd["q"] == 3);
  CHECK(rd["r"] == 1);
  CHECK(rd["f"] == 1);
  CHECK(run({"--p", "5", "depend", "x1", "y1"}).out == "independent\n");
}

TEST_CASE("rectify") {
  const auto r = run({"--p", "2", "--json", "rectify", "x1", "y1 + x1^3"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["status"] == "rectified");
  CHECK(j["u"] == "y1");
  CHECK(j["v"] == "x1^3 + y1");
  REQUIRE(j["steps"].size() == 1);
  CHECK(j["steps"][0]["Def"] == 2);
  CHECK(j["steps"][0]["q"] == 3);
  CHECK(j["steps"][0]["k"] == 1);
  CHECK(j["steps"][0]["s"] == 1);
  CHECK(j["steps"][0]["f_1"] == 1);
  CHECK(j["word_length_u"] == 3);

  // step trace emits one JSON line per step before the result
  const auto rt = run({"--p", "2", "rectify", "x1", "y1 + x1^3", "--trace"});
  CHECK(rt.code == 0);
  CHECK(rt.out.find("\"Def\":2") != std::string::npos);

  // degree cap produces a computational failure, exit 1
  const auto rc = run({"--p", "2", "rectify", "x1", "y1 + x1^3",
                       "--max-degree", "2"});
  CHECK(rc.code == 1);

  // commuting pair is a usage error, exit 2
  const auto ru = run({"--p", "2", "rectify", "x1", "x1^2"});
  CHECK(ru.code == 2);
}

TEST_CASE("verify-paper runs the whole battery green") {
  const auto r = run({"verify-paper", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify-paper wiring") {
  const auto r = run({"verify-paper", "--p", "2", "--only",
                      "commutation-ladder"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] commutation-ladder") != std::string::npos);

  const auto rj = json::parse(
      run({"--json", "verify-paper", "--only", "yx-power-identity"}).out);
  REQUIRE(rj.size() == 1);
  CHECK(rj[0]["name"] == "yx-power-identity");
  CHECK(rj[0]["passed"] == true);
  CHECK(rj[0]["seconds"].is_number());

  const auto unknown = run({"verify-paper", "--only", "nonsense"});
  CHECK(unknown.code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"normalize", "x3"}).code == 2);          // index out of range
  CHECK(run({"normalize", "x1 +"}).code == 2);        // syntax
  CHECK(run({"--p", "4", "normalize", "x1"}).code == 2);  // not prime
  CHECK(run({}).code == 2);                           // no subcommand
  CHECK(run({"frobnicate"}).code == 2);               // unknown subcommand
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("normalize") != std::string::npos);
}

TEST_CASE("WEYLCHAR_MAX_TERMS caps computations") {
  const auto saved = weylchar::max_term_count();
  setenv("WEYLCHAR_MAX_TERMS", "10", 1);
  const auto r =
      run({"--n", "2", "--p", "5", "normalize", "(x1 + y1 + x2 + y2)^6"});
  CHECK(r.code == 1);
  unsetenv("WEYLCHAR_MAX_TERMS");
  weylchar::set_max_term_count(saved);
  const auto ok =
      run({"--n", "2", "--p", "5", "normalize", "(x1 + y1 + x2 + y2)^6"});
  CHECK(ok.code == 0);

  setenv("WEYLCHAR_MAX_TERMS", "banana", 1);
  CHECK(run({"normalize", "x1"}).code == 2);
  unsetenv("WEYLCHAR_MAX_TERMS");
  weylchar::set_max_term_count(saved);
}

TEST_CASE("published schema covers every JSON output shape") {
  std::ifstream in(std::string(WEYLCHAR_DOCS_DIR) +
                   "/cli_output.schema.json");
  REQUIRE(in.good());
  json schema;
  in >> schema;
  const auto& defs = schema.at("$defs");
  for (const char* name :
       {"element_result", "central_result", "decompose_result",
        "check_result", "kernel_result", "growth_result", "member_result",
        "depend_result", "rectify_result", "verify_result"}) {
    REQUIRE(defs.contains(name));
  }

  // spot-check emitted keys against the schema's required lists
  auto required_keys = [&](const char* def) {
    std::vector<std::string> keys;
    for (const auto& k : defs.at(def).at("required")) {
      keys.push_back(k.get<std::string>());
    }
    return keys;
  };
  const auto elem = json::parse(run({"--json", "normalize", "x1"}).out);
  for (const auto& k : required_keys("element_result")) {
    REQUIRE(elem.contains(k));
  }
  const auto kern = json::parse(
      run({"--json", "kernel", "--map",
           R"({"kind":"weyl","n":1,"p":2,"u":["x1"],"v":["y1"]})", "--bound",
           "2"})
          .out);
  for (const auto& k : required_keys("kernel_result")) {
    REQUIRE(kern.contains(k));
  }
  const auto rect = json::parse(
      run({"--p", "2", "--json", "rectify", "x1", "y1 + x1^3"}).out);
  for (const auto& k : required_keys("rectify_result")) {
    REQUIRE(rect.contains(k));
  }
}
