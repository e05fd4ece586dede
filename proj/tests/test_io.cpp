#include <doctest.h>

#include <string>

#include "prkit/catalog.hpp"
#include "prkit/io.hpp"

using namespace prkit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::invariant_violation;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("pr-structure round trip") {
    for (const auto& s : {sigma_n(1), sigma_n(4), two_element_lattical(), induce_sigma(cyclic_group(2))}) {
      const std::string text = dump(to_json(s));
      CHECK(text.back() == '\n');
      const auto back = pr_structure_from_json(parse_json(text));
      CHECK(back == s);
      CHECK(dump(to_json(back)) == text);
    }
  }

  TEST_CASE("other documents round trip") {
    const PAS partial({"a", "b"}, {1, -1, 0, 0});
    CHECK(pas_from_json(to_json(partial)) == partial);

    const BinRel rel({"x", "y", "z"}, {{0, 1}, {2, 2}});
    const auto rel_back = binrel_from_json(to_json(rel));
    CHECK(rel_back.names() == rel.names());
    CHECK(rel_back.pairs() == rel.pairs());

    const SubPASPair sp{PAS({"e"}, {0}), cyclic_group(2), {0}};
    const auto sp_back = sub_pas_from_json(to_json(sp));
    CHECK(sp_back.sub == sp.sub);
    CHECK(sp_back.super == sp.super);
    CHECK(sp_back.embedding == sp.embedding);

    const auto form = canonicalize(sigma_n(3));
    CHECK(canonical_from_json(to_json(form)) == form);
    const auto doc = document_from_json(to_json(form));
    REQUIRE(std::holds_alternative<PRStructure>(doc));
    CHECK(equivalent(std::get<PRStructure>(doc), sigma_n(3)));
    CHECK(std::holds_alternative<PAS>(read_document(dump(to_json(partial)))));
  }

  TEST_CASE("key order is fixed") {
    const std::string text = dump(to_json(sigma_n(2)));
    CHECK(text.find("\"kind\"") < text.find("\"props\""));
    CHECK(text.find("\"props\"") < text.find("\"reals\""));
    CHECK(text.find("\"reals\"") < text.find("\"rho\""));
  }

  TEST_CASE("parse errors name line and column") {
    try {
      parse_json("{\n  \"kind\": \n}");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
      CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
  }

  TEST_CASE("schema violations") {
    auto bad = [](const std::string& text) {
      return kind_of([&] { (void)read_document(text); });
    };
    CHECK(bad("[]") == ErrorKind::malformed_input);
    CHECK(bad(R"({"props": ["a"]})") == ErrorKind::malformed_input);
    CHECK(bad(R"({"kind": "mystery"})") == ErrorKind::malformed_input);
    CHECK(bad(R"({"kind": "pr-structure", "props": ["a"], "reals": ["r"],
                  "rho": [{"from": "a", "to": "b", "realizers": ["r"]}]})") == ErrorKind::malformed_input);
    CHECK(bad(R"({"kind": "pr-structure", "props": ["a"], "reals": ["r"],
                  "rho": [{"from": "a", "to": "a", "realizers": ["r"]},
                          {"from": "a", "to": "a", "realizers": []}]})") == ErrorKind::malformed_input);
    CHECK(bad(R"({"kind": "pr-structure", "props": ["a", "a"], "reals": ["r"], "rho": []})") ==
          ErrorKind::malformed_input);
    CHECK(bad(R"({"kind": "pas", "carrier": ["0"], "table": [{"left": "0", "right": "0"}]})") ==
          ErrorKind::malformed_input);
    CHECK(bad(R"({"kind": "binrel", "carrier": ["x"], "pairs": [["x"]]})") == ErrorKind::malformed_input);
    CHECK(bad(R"({"kind": "sub-pas", "sub": {"kind": "pas", "carrier": ["e"], "table": []},
                  "super": {"kind": "pas", "carrier": ["0"], "table": []}, "embedding": {}})") ==
          ErrorKind::malformed_input);
    CHECK(bad("{\"kind\": 3}") == ErrorKind::malformed_input);
    CHECK(bad("{") == ErrorKind::parse);
  }
}
