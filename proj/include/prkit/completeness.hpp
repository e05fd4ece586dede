#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "prkit/appstruct.hpp"
#include "prkit/core.hpp"
#include "prkit/fiber.hpp"
#include "prkit/kernels.hpp"

namespace prkit {

inline constexpr std::uint64_t kDefaultMaxFamilies = std::uint64_t{1} << 20;

// Suprema of a family in an arbitrary finite relation R:
//   supremum b:          R(a_i, b) for all i, and R(a_i, c) for all i ⇒ R(b, c);
//   adjoint-supremum b:  for all c, (R(a_i, c) for all i) ⇔ R(b, c).
struct SupremumResult {
  enum class Clause { not_upper_bound, not_least, adjoint_mismatch };
  struct Refutation {
    std::size_t candidate;
    Clause clause;
    std::size_t witness;  // family member (not_upper_bound) or c (otherwise)
  };

  std::vector<std::size_t> family;
  std::vector<std::size_t> suprema;
  std::vector<std::size_t> adjoint_suprema;
  std::vector<Refutation> refutations;  // one per candidate per failed notion

  std::optional<std::size_t> supremum() const {
    return suprema.empty() ? std::nullopt : std::optional(suprema.front());
  }
  std::optional<std::size_t> adjoint_supremum() const {
    return adjoint_suprema.empty() ? std::nullopt : std::optional(adjoint_suprema.front());
  }
};

SupremumResult find_supremum(const BinRel& rel, std::span<const std::size_t> family, std::size_t max_carrier = 4096);

// What the two notions did on one instance, with the implications between
// them checked: transitive ⇒ suprema are adjoint-suprema; reflexive ⇒
// adjoint-suprema are suprema; preorder ⇒ suprema are mutually related.
// Throws invariant_violation if an implication fails.
struct BoundNotionsReport {
  bool reflexive = false;
  bool transitive = false;
  std::size_t suprema = 0;
  std::size_t adjoint_suprema = 0;
  bool suprema_are_adjoint = true;
  bool adjoint_are_suprema = true;
  bool unique_up_to_equivalence = true;
};
BoundNotionsReport compare_bound_notions(const BinRel& rel, std::span<const std::size_t> family);

// The fiber relation as a BinRel labelled by tuples.
BinRel fiber_relation(const Fiber& fiber);

struct CompletenessResult {
  bool complete = true;
  std::optional<std::vector<std::size_t>> counterexample;  // fiber element indices
  std::uint64_t families = 0;
};

// Exhaustive over all subsets of the fiber P^k (a family's suprema only
// depend on its image set). Needs |fiber| ≤ 63 and 2^|fiber| ≤ max_families.
CompletenessResult is_fiber_complete(const PRStructure& s, std::size_t index_size,
                                     BoundKind kind = BoundKind::supremum,
                                     std::uint64_t max_families = kDefaultMaxFamilies,
                                     std::size_t max_fiber_size = kDefaultMaxFiberSize);
// Same sweep on an explicit relation.
CompletenessResult is_complete(const BinRel& rel, BoundKind kind = BoundKind::supremum,
                               std::uint64_t max_families = kDefaultMaxFamilies);

// Functions constant on each block, encoded by one value per block.
std::uint64_t count_block_constant_functions(const PAS& pas, std::span<const Subset> blocks);
bool is_representable(const PAS& pas, std::span<const Subset> blocks, std::span<const std::size_t> values);
// First block-constant function (lexicographic over block values) that no
// r represents on the union of the blocks. Blocks must be nonempty and
// pairwise disjoint.
std::optional<std::vector<std::size_t>> nonrepresentable_function(const PAS& pas, std::span<const Subset> blocks);

// Elements of P(R)^R: one subset per carrier element.
using PowerTuple = std::vector<Subset>;

// ⊢ on P(R)^R for the structure induced by `pas` (index set = carrier).
bool power_entails(const PAS& pas, const PowerTuple& phi, const PowerTuple& psi);

struct IncompletenessCertificate {
  enum class Clause {
    not_upper_bound,         // some φ_a does not entail the candidate
    misses_singleton_bound,  // the singleton-image map is an upper bound not above the candidate
    refuted_by_extension,    // a non-representable block function gives an upper bound not above it
  };
  struct Entry {
    PowerTuple candidate;
    Clause clause;
    std::size_t member = 0;                 // a, for not_upper_bound
    PowerTuple refuter;                     // the upper bound used otherwise
    std::vector<Subset> blocks;             // refuted_by_extension only
    std::vector<std::size_t> block_values;  // refuted_by_extension only
  };

  std::size_t realizer = 0;
  std::vector<std::size_t> domain;  // a ∈ Dom(r), indexing the family
  std::vector<PowerTuple> family;   // φ_a(x) = {a} if x = a else ∅
  std::vector<Entry> entries;       // one per candidate, lexicographic order
};

// For a totally matching structure and r with |R|^|Im(r)| > |R|: the family
// (φ_a)_{a ∈ Dom(r)} and, for every candidate ψ in P(R)^R, a recorded reason
// why ψ is not its supremum. Throws precondition if the hypotheses fail and
// invariant_violation if some candidate cannot be refuted.
IncompletenessCertificate incompleteness_witness(const PAS& pas, std::size_t r,
                                                 std::uint64_t max_candidates = kDefaultMaxFamilies);

// Re-checks every entry of a certificate and that all candidates are covered.
bool verify_certificate(const PAS& pas, const IncompletenessCertificate& cert);

const char* to_string(IncompletenessCertificate::Clause c);
const char* to_string(SupremumResult::Clause c);

}  // namespace prkit
