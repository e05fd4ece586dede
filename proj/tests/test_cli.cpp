#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "prkit/io.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = prkit::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string gen(const std::vector<std::string>& args) {
  std::vector<std::string> full{"gen"};
  full.insert(full.end(), args.begin(), args.end());
  const auto o = cli(full);
  REQUIRE(o.code == prkit::cli::kOk);
  return o.out;
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(PRKIT_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(f.good(), "missing golden file " << name);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check verdicts and anchors") {
    const auto s3 = gen({"sigma-n", "3"});
    auto o = cli({"check", "--property", "posetal"}, s3);
    CHECK(o.code == 0);
    CHECK(o.out.rfind("posetal: true\ntheorem: README.md#preorderal-criterion\n", 0) == 0);
    o = cli({"check", "--property", "bounded-posetal"}, s3);
    CHECK(o.out.rfind("bounded-posetal: false\n", 0) == 0);
    o = cli({"check", "--property", "p-structure"}, s3);
    CHECK(o.out.find("\"degree\":3") != std::string::npos);
    o = cli({"check", "--property", "bounded-posetal"}, gen({"two-element-lattical"}));
    CHECK(o.out.rfind("bounded-posetal: true\ntheorem: README.md#bounds-criterion\n", 0) == 0);
    o = cli({"check", "--property", "partitioned"}, gen({"cyclic-group", "2"}));
    CHECK(o.out.rfind("partitioned: false\n", 0) == 0);
  }

  TEST_CASE("degree, classify and induce") {
    CHECK(cli({"degree"}, gen({"sigma-n", "4"})).out == "4\n");
    const auto cls = prkit::parse_json(cli({"classify"}, gen({"cyclic-group", "2"})).out);
    CHECK(cls["preorderal"] == true);
    CHECK(cls["pas"]["totally_matching"] == true);
    CHECK(cls["pas"]["orbit_theorem_holds"] == true);
    const auto induced = prkit::parse_json(cli({"induce"}, gen({"cyclic-group", "2"})).out);
    CHECK(induced["kind"] == "pr-structure");
    CHECK(induced["props"].size() == 4);
  }

  TEST_CASE("canonical output matches golden files") {
    for (int n = 1; n <= 4; ++n)
      CHECK(cli({"canonical"}, gen({"sigma-n", std::to_string(n)})).out ==
            golden("sigma_n_" + std::to_string(n) + ".canonical.json"));
    CHECK(cli({"canonical"}, gen({"two-element-lattical"})).out == golden("two_element_lattical.canonical.json"));
    CHECK(cli({"canonical"}, gen({"cyclic-group", "2"})).out == golden("sigma_z2.canonical.json"));
    // Canonical documents are accepted as input and reproduce themselves.
    const auto g = golden("sigma_n_3.canonical.json");
    CHECK(cli({"canonical"}, g).out == g);
  }

  TEST_CASE("fiber, suprema and witness") {
    auto j = prkit::parse_json(cli({"fiber", "--index-size", "2"}, gen({"two-element-lattical"})).out);
    CHECK(j["kind"] == "fiber-report");
    j = prkit::parse_json(cli({"suprema", "--index-size", "2"}, gen({"cyclic-group", "2"})).out);
    CHECK(j["result"]["complete"] == false);
    j = prkit::parse_json(
        cli({"suprema", "--index-size", "2", "--family", R"x(["({0},{})","({},{1})"])x"}, gen({"cyclic-group", "2"}))
            .out);
    CHECK(j["result"]["suprema"].empty());
    const std::string chain = R"({"kind":"binrel","carrier":["a","b"],"pairs":[["a","a"],["b","b"],["a","b"]]})";
    j = prkit::parse_json(cli({"suprema", "--family", R"(["a","b"])"}, chain).out);
    CHECK(j["result"]["suprema"] == prkit::Json::array({"b"}));
    CHECK(j["notions"]["reflexive"] == true);
    j = prkit::parse_json(cli({"witness", "--realizer", "1"}, gen({"cyclic-group", "2"})).out);
    CHECK(j["verified"] == true);
    CHECK(j["theorem"] == "README.md#incompleteness-theorem");
  }

  TEST_CASE("search and enumerate") {
    auto o = cli({"search", "--implication", "posetal=>p-structure", "--props", "2", "--reals", "2"});
    CHECK(o.code == 0);
    CHECK(prkit::parse_json(o.out)["counterexamples"].size() == 1);
    o = cli({"search", "--implication", "posetal=>preorderal", "--props", "2", "--reals", "2"});
    CHECK(o.code == 0);
    CHECK(prkit::parse_json(o.out)["counterexamples"].empty());
    o = cli({"enumerate", "--props", "1", "--reals", "1"});
    CHECK(o.code == 0);
    CHECK(std::count(o.out.begin(), o.out.end(), '\n') == 2);
    o = cli({"enumerate", "--random", "--seed", "7", "--count", "3", "--props", "3", "--reals", "3"});
    CHECK(o.out == cli({"enumerate", "--random", "--seed", "7", "--count", "3", "--props", "3", "--reals", "3"}).out);
  }

  TEST_CASE("exit codes") {
    CHECK(cli({}).code == prkit::cli::kUsage);
    CHECK(cli({"frobnicate"}).code == prkit::cli::kUsage);
    CHECK(cli({"degree"}, "{").code == prkit::cli::kBadInput);
    CHECK(cli({"degree"}, R"({"kind":"pas"})").code == prkit::cli::kBadInput);
    CHECK(cli({"check", "--property", "purple"}, gen({"sigma-n", "2"})).code == prkit::cli::kUsage);
    CHECK(cli({"witness", "--realizer", "0"}, gen({"right-projection", "2"})).code == prkit::cli::kPrecondition);
    CHECK(cli({"suprema", "--index-size", "3", "--max-fiber-size", "10"}, gen({"sigma-n", "3"})).code ==
          prkit::cli::kBudget);
    const auto o = cli({"degree"}, "{");
    CHECK(o.err.find("line 1") != std::string::npos);
  }
}
