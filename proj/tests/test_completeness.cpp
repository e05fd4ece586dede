#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "prkit/catalog.hpp"
#include "prkit/completeness.hpp"
#include "prkit/order.hpp"

using namespace prkit;

namespace {

BinRel chain3() { return BinRel({"1", "2", "3"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}}); }

// Fiber index of a tuple of subsets, first coordinate least significant.
std::size_t fiber_index(const PowerTuple& t, std::size_t n) {
  std::size_t e = 0, w = 1;
  for (Subset x : t) {
    e += x * w;
    w <<= n;
  }
  return e;
}

}  // namespace

TEST_SUITE("completeness") {
  TEST_CASE("suprema in small relations") {
    const std::vector<std::size_t> fam_b{1};
    const auto r1 = find_supremum(chain3(), fam_b);
    CHECK(r1.supremum() == 1u);
    CHECK(r1.adjoint_supremum() == 1u);

    const std::vector<std::size_t> fam12{0, 1};
    const auto r2 = find_supremum(chain3(), fam12);
    CHECK(r2.suprema == std::vector<std::size_t>{1});
    CHECK(r2.adjoint_suprema == std::vector<std::size_t>{1});
    // Candidates 1 and 3 are refuted, each with a named clause.
    bool saw_ub = false, saw_least = false;
    for (const auto& ref : r2.refutations) {
      if (ref.candidate == 0) saw_ub = saw_ub || ref.clause == SupremumResult::Clause::not_upper_bound;
      if (ref.candidate == 2) saw_least = saw_least || ref.clause == SupremumResult::Clause::not_least;
    }
    CHECK(saw_ub);
    CHECK(saw_least);

    const std::vector<std::size_t> fam_x{0};
    const auto r3 = find_supremum(BinRel({"x", "y"}), fam_x);
    CHECK_FALSE(r3.supremum());
    CHECK(find_supremum(chain3(), std::vector<std::size_t>{}).supremum() == 0u);
    CHECK_THROWS_AS(find_supremum(chain3(), fam12, 2), Error);
    CHECK_THROWS_AS(find_supremum(chain3(), std::vector<std::size_t>{5}), Error);
  }

  TEST_CASE("supremum and adjoint supremum on non-preorders") {
    const std::vector<std::size_t> fam{0, 1};
    const auto pre = compare_bound_notions(chain3(), fam);
    CHECK(pre.suprema == 1);
    CHECK(pre.adjoint_suprema == 1);

    // Empty relation: transitive, not reflexive. Every element is an
    // adjoint-supremum of a nonempty family, none a supremum.
    const std::vector<std::size_t> fx{0};
    const auto empty = compare_bound_notions(BinRel({"x", "y"}), fx);
    CHECK(empty.transitive);
    CHECK_FALSE(empty.reflexive);
    CHECK(empty.suprema == 0);
    CHECK(empty.adjoint_suprema == 2);
    CHECK(empty.adjoint_are_suprema == false);
    const auto empty_fam = compare_bound_notions(BinRel({"x", "y"}), std::vector<std::size_t>{});
    CHECK(empty_fam.suprema == 0);
    CHECK(empty_fam.adjoint_suprema == 0);

    // Reflexive, not transitive: a≤b, b≤c, a≰c. For {a, b}, b is the least
    // upper bound but b ≤ c while a ≰ c.
    BinRel r({"a", "b", "c"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
    const auto rep = compare_bound_notions(r, fam);
    CHECK(rep.reflexive);
    CHECK_FALSE(rep.transitive);
    CHECK(rep.adjoint_are_suprema);
    CHECK(rep.suprema == 1);
    CHECK(rep.adjoint_suprema == 0);
    CHECK_FALSE(rep.suprema_are_adjoint);
  }

  TEST_CASE("the notions coincide on preorders") {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::random;
    spec.min_props = spec.max_props = 3;
    spec.max_reals = 3;
    spec.limit = 200;
    enumerate_structures(spec, [](std::uint64_t, const Generated& g) {
      const auto& s = std::get<PRStructure>(g);
      if (!is_preorderal(s)) return true;
      const BinRel rel = fiber_relation(Fiber(s, 1));
      for (std::uint64_t m = 0; m < 8; ++m) {
        std::vector<std::size_t> fam;
        for (std::size_t x = 0; x < 3; ++x)
          if ((m >> x) & 1U) fam.push_back(x);
        const auto res = find_supremum(rel, fam);
        CHECK(res.suprema == res.adjoint_suprema);
      }
      CHECK(is_fiber_complete(s, 1).complete == is_fiber_complete(s, 1, BoundKind::adjoint_supremum).complete);
      return true;
    });
  }

  TEST_CASE("fiber completeness") {
    // Σ of a complete lattice: the diamond 0 < a, b < 1.
    BinRel diamond({"0", "a", "b", "1"}, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
    const auto res = is_fiber_complete(sigma_from_bin(diamond), 1);
    CHECK(res.complete);
    CHECK(res.families == 16);
    CHECK(is_fiber_complete(sigma_from_bin(BinRel({"x"}, {{0, 0}})), 3).complete);

    // Two incomparable elements: {a, b} has no upper bound.
    BinRel anti({"a", "b"}, {{0, 0}, {1, 1}});
    const auto inc = is_fiber_complete(sigma_from_bin(anti), 1);
    CHECK_FALSE(inc.complete);
    // The empty family needs a least element, and there is none.
    CHECK(inc.counterexample == std::vector<std::size_t>{});
    CHECK_FALSE(is_complete(anti).complete);
    CHECK_THROWS_AS(is_fiber_complete(sigma_n(3), 3, BoundKind::supremum, 1 << 20, 256), Error);
    CHECK_THROWS_AS(is_fiber_complete(sigma_n(3), 2, BoundKind::supremum, 100), Error);
  }

  TEST_CASE("block-constant functions") {
    const auto z2 = cyclic_group(2);
    const std::vector<Subset> blocks{0b01, 0b10};
    CHECK(count_block_constant_functions(z2, blocks) == 4);
    const auto f = nonrepresentable_function(z2, blocks);
    REQUIRE(f);
    CHECK(*f == std::vector<std::size_t>{0, 0});
    std::size_t representable = 0;
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        const std::vector<std::size_t> v{a, b};
        representable += is_representable(z2, blocks, v) ? 1 : 0;
      }
    CHECK(representable == 2);

    const PAS one({"*"}, {0});
    const std::vector<Subset> whole{0b1};
    CHECK(count_block_constant_functions(one, whole) == 1);
    CHECK_FALSE(nonrepresentable_function(one, whole));

    CHECK(nonrepresentable_function(right_projection_magma(2), blocks));
    const std::vector<Subset> overlap{0b11, 0b10};
    CHECK_THROWS_AS(nonrepresentable_function(z2, overlap), Error);
    const std::vector<Subset> empty{0b00};
    CHECK_THROWS_AS(count_block_constant_functions(z2, empty), Error);

    const auto z3 = cyclic_group(3);
    const std::vector<Subset> three{0b001, 0b010, 0b100};
    CHECK(count_block_constant_functions(z3, three) == 27);
  }

  TEST_CASE("incompleteness certificate for Z/2") {
    const auto z2 = cyclic_group(2);
    const auto cert = incompleteness_witness(z2, 0);
    CHECK(cert.domain == std::vector<std::size_t>{0, 1});
    CHECK(cert.entries.size() == 16);
    CHECK(verify_certificate(z2, cert));

    // The witnessed family has no supremum in the fiber over the carrier.
    const auto sigma = induce_sigma(z2);
    const Fiber fb(sigma, 2);
    std::vector<std::size_t> fam;
    for (const auto& phi : cert.family) fam.push_back(fiber_index(phi, 2));
    CHECK(fam == std::vector<std::size_t>{1, 8});
    CHECK(fb.label(1) == "({0},{})");
    const auto res = find_supremum(fiber_relation(fb), fam);
    CHECK_FALSE(res.supremum());
    CHECK_FALSE(is_fiber_complete(sigma, 2).complete);

    // Tampering with an entry breaks verification.
    auto bad = cert;
    for (auto& e : bad.entries)
      if (e.clause == IncompletenessCertificate::Clause::refuted_by_extension) {
        e.refuter = e.candidate;
        break;
      }
    CHECK_FALSE(verify_certificate(z2, bad));
  }

  TEST_CASE("incompleteness certificate for Z/3 and preconditions") {
    const auto z3 = cyclic_group(3);
    const auto cert = incompleteness_witness(z3, 0);
    CHECK(cert.entries.size() == 512);
    CHECK(verify_certificate(z3, cert));
    const bool any_extension = std::any_of(cert.entries.begin(), cert.entries.end(), [](const auto& e) {
      return e.clause == IncompletenessCertificate::Clause::refuted_by_extension;
    });
    CHECK(any_extension);

    CHECK_THROWS_AS(incompleteness_witness(right_projection_magma(2), 0), Error);
    CHECK_THROWS_AS(incompleteness_witness(PAS({"*"}, {0}), 0), Error);
    CHECK_THROWS_AS(incompleteness_witness(cyclic_group(4), 0, 1000), Error);
  }

  TEST_CASE("power-set entailment") {
    const auto z2 = cyclic_group(2);
    CHECK(power_entails(z2, {0b01, 0}, {0b10, 0}));
    CHECK_FALSE(power_entails(z2, {0b01, 0b01}, {0b10, 0b01}));
    CHECK_THROWS_AS(power_entails(z2, {0}, {0}), Error);
  }
}
