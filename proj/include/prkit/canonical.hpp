#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prkit/bitset.hpp"
#include "prkit/core.hpp"

namespace prkit {

// Antichain representation of a PR-structure: the realizers are replaced by
// the ⊆-maximal rho⁻ images, each a bitset over pair indices a*|P|+b, and a
// member realizes (a, b) iff it contains that pair. Members are kept sorted by
// their element lists, which makes equality of forms decide equivalence.
struct CanonicalForm {
  std::vector<std::string> props;
  std::vector<Bitset> antichain;

  std::size_t degree() const { return antichain.size(); }
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// Drops every realizer whose rho⁻ is contained in another's, keeping the first
// of any group with equal images. At least one realizer always survives.
PRStructure reduce_dominated(const PRStructure& s);

CanonicalForm canonicalize(const PRStructure& s);

// Rebuilds (P, antichain, membership) with realizers named I0, I1, ...
PRStructure structure_of(const CanonicalForm& form);

enum class Equivalence { equivalent, proposition_mismatch, antichain_mismatch };
const char* to_string(Equivalence e);

// Proposition sets are compared by name; realizers may differ arbitrarily.
Equivalence compare(const PRStructure& a, const PRStructure& b);
inline bool equivalent(const PRStructure& a, const PRStructure& b) {
  return compare(a, b) == Equivalence::equivalent;
}

// Least number of realizers of an equivalent structure.
std::size_t degree(const PRStructure& s);
inline bool is_p_structure(const PRStructure& s) { return degree(s) == 1; }

// Same structure with propositions listed in `order` (a permutation of the
// existing names).
PRStructure reorder_props(const PRStructure& s, const std::vector<std::string>& order);

// Structures that behave pointwise only up to a size bound. For a relation Ψ
// on the carrier and n ≥ 2: `small_subsets` has a realizer per J ⊆ Ψ with
// |J| < n; `punctured` has a realizer Ψ∖{p} per p ∈ Ψ.
struct PumpingStructures {
  PRStructure small_subsets;
  PRStructure punctured;
};
PumpingStructures pumping_structures(const BinRel& psi, std::size_t n);

// Largest k such that every pair-set T with |T| ≤ k satisfies
// entails_pairset(T) ⇔ (∀(a,b) ∈ T. a ⊢ b), plus the first T (smallest size,
// then lowest mask) where that fails.
struct CutoffReport {
  std::size_t pointwise_up_to = 0;
  std::optional<std::vector<PropPair>> first_failure;
};
CutoffReport pointwise_cutoff(const PRStructure& s, std::size_t max_pairs = 20);

}  // namespace prkit
