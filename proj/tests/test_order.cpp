#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "prkit/appstruct.hpp"
#include "prkit/canonical.hpp"
#include "prkit/catalog.hpp"
#include "prkit/order.hpp"

using namespace prkit;

namespace {

// Props are the monoid elements; rho(a, m·a) = {m}.
PRStructure cayley(const std::vector<std::size_t>& table, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("m" + std::to_string(i));
  PRStructure::Builder b(names, names);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a) b.add(a, table[m * n + a], m);
  return std::move(b).build();
}

}  // namespace

TEST_SUITE("order") {
  TEST_CASE("sigma_n preorder witness") {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto s = sigma_n(n);
      const auto w = find_preorder_witness(s);
      REQUIRE(w);
      CHECK(s.name(w->identity) == std::to_string(n));
      CHECK(is_valid_preorder_witness(s, *w));
      PreorderWitness by_min{real(n - 1), {}};
      for (std::size_t si = 0; si < n; ++si)
        for (std::size_t r = 0; r < n; ++r) by_min.composition.push_back(real(std::min(si, r)));
      CHECK(is_valid_preorder_witness(s, by_min));
      CHECK(is_posetal(s));
    }
  }

  TEST_CASE("preorder witness absent without a diagonal realizer") {
    PRStructure::Builder b({"a", "b"}, {"r"});
    b.add(0, 0, 0);
    CHECK_FALSE(find_preorder_witness(std::move(b).build()));
  }

  TEST_CASE("two-element lattical example") {
    const auto s = two_element_lattical();
    const auto w = find_preorder_witness(s);
    REQUIRE(w);
    CHECK(s.name(w->identity) == "i");
    CHECK(is_posetal(s));
    const auto bw = find_bounds_witness(s);
    REQUIRE(bw);
    CHECK(s.name(bw->bottom) == "bot");
    CHECK(s.name(bw->top) == "top");
    CHECK(s.name(bw->bottom_real) == "b");
    CHECK(s.name(bw->top_real) == "t");
    CHECK(is_bounded_posetal(s));
    CHECK_FALSE(p_structure_sufficient_top(s));
    CHECK_FALSE(p_structure_sufficient_bottom(s));
    CHECK_FALSE(partitioned_posetal_p_check(s));
    CHECK_THROWS_AS(extract_monoid(s), Error);
  }

  TEST_CASE("sigma_3 is posetal but not bounded") {
    const auto s = sigma_n(3);
    CHECK(is_posetal(s));
    CHECK_FALSE(find_bounds_witness(s));
    CHECK_FALSE(is_bounded_posetal(s));
    CHECK_FALSE(partitioned_posetal_p_check(s));
  }

  TEST_CASE("structures from relations") {
    BinRel sym({"a", "b"}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}});
    CHECK(is_preorderal(sigma_from_bin(sym)));
    CHECK_FALSE(is_posetal(sigma_from_bin(sym)));
    BinRel chain({"0", "1", "2"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}});
    const auto s = sigma_from_bin(chain);
    CHECK(is_bounded_posetal(s));
    CHECK(p_structure_sufficient_top(s));
    CHECK(p_structure_sufficient_bottom(s));
    CHECK(partitioned_posetal_p_check(s));
    const auto m = extract_monoid(s);
    CHECK(m.size() == 1);
    CHECK(is_bounded_posetal(sigma_from_bin(BinRel({"x"}, {{0, 0}}))));
  }

  TEST_CASE("posetal induced structures have bounds") {
    const auto s = induce_sigma(right_projection_magma(2));
    REQUIRE(is_posetal(s));
    const auto bw = find_bounds_witness(s);
    REQUIRE(bw);
    CHECK(idx(bw->bottom) == 0);
    CHECK(idx(bw->top) == 3);
    const auto w = find_preorder_witness(s);
    REQUIRE(w);
    for (std::size_t a = 0; a < 4; ++a) {
      CHECK(s.realizes(w->identity, prop(0), prop(a)));
      CHECK(s.realizes(w->identity, prop(a), prop(3)));
    }
  }

  TEST_CASE("monoid recovered from its Cayley structure") {
    const std::vector<std::size_t> z2{0, 1, 1, 0};
    const auto m = extract_monoid(cayley(z2, 2));
    REQUIRE(m.size() == 2);
    CHECK(idx(m.unit) == 0);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) CHECK(idx(m.carrier[m.op(x, y)]) == z2[x * 2 + y]);

  }

  TEST_CASE("monoid composite left open by the table") {
    // r: x -> y and s: x -> z never chain, so s□r is unconstrained.
    PRStructure::Builder b({"x", "y", "z"}, {"i", "r", "s"});
    b.add(0, 0, 0).add(1, 1, 0).add(2, 2, 0).add(0, 1, 1).add(0, 2, 2);
    const auto s = std::move(b).build();
    REQUIRE(is_partitioned(s));
    REQUIRE(is_preorderal(s));
    CHECK_THROWS_WITH_AS(extract_monoid(s), doctest::Contains("not determined"), Error);
  }

  TEST_CASE("deciders agree with the direct oracles") {
    for (std::size_t np = 1; np <= 2; ++np)
      for (std::size_t nr = 1; nr <= 2; ++nr)
        oracle::for_each_structure(np, nr, [](const PRStructure& s) {
          CHECK(is_preorderal(s) == oracle::preorderal(s));
          CHECK(is_posetal(s) == oracle::posetal(s));
          CHECK(is_bounded_posetal(s) == oracle::bounded_posetal(s));
          if (auto w = find_preorder_witness(s)) CHECK(is_valid_preorder_witness(s, *w));
          if (p_structure_sufficient_top(s) || p_structure_sufficient_bottom(s)) CHECK(is_p_structure(s));
          CHECK_NOTHROW(partitioned_posetal_p_check(s));
          if (is_posetal(s)) CHECK(is_antisymmetric(s));
        });
  }

  TEST_CASE("fibers of the two-element lattical example") {
    const auto s = two_element_lattical();
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto r = check_fiber(s, k);
      CHECK(r.size == oracle::ipow(2, k));
      CHECK(r.is_bounded_lattice());
      CHECK(r.pointwise_failures.empty());
      CHECK(r.maps_checked > 0);
      CHECK(r.reindexing_failures.empty() == (k < 3));
    }
    // In P^3 the middle elements are pairwise incomparable, so the meet of
    // (top,bot,bot) and (top,top,bot) is the bottom; restricted to the first
    // index both become top.
    const auto r3 = check_fiber(s, 3);
    CHECK(std::find(r3.reindexing_failures.begin(), r3.reindexing_failures.end(),
                    "map [0] breaks the meet of (top,bot,bot) and (top,top,bot)") != r3.reindexing_failures.end());
    CHECK(r3.distributive == false);
    const auto r2 = check_fiber(s, 2);
    // Diamond: bottom (bot,bot), top (top,top), two incomparable middles.
    CHECK(r2.labels[*r2.bottom] == "(bot,bot)");
    CHECK(r2.labels[*r2.top] == "(top,top)");
    CHECK(r2.distributive == true);
  }

  TEST_CASE("fibers of sigma_3 and of a singleton") {
    const auto r1 = check_fiber(sigma_n(3), 1);
    CHECK(r1.is_lattice());
    CHECK(r1.labels[*r1.bottom] == "(1)");
    CHECK(r1.labels[*r1.top] == "(3)");
    const auto r2 = check_fiber(sigma_n(3), 2);
    CHECK(r2.is_poset());
    CHECK(r2.size == 9);
    const auto one = check_fiber(sigma_from_bin(BinRel({"x"}, {{0, 0}})), 2);
    CHECK(one.size == 1);
    CHECK(one.is_bounded_lattice());
    CHECK(check_fiber(sigma_n(3), 2, {9, 1, true}).size == 9);
    CHECK_THROWS_AS(check_fiber(sigma_n(3), 3, {20, 1, false}), Error);
  }
}
