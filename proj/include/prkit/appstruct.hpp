#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prkit/core.hpp"

namespace prkit {

// Subsets of a carrier of at most 64 elements, bit x = element x.
using Subset = std::uint64_t;

inline constexpr std::size_t kDefaultMaxCarrier = 12;
inline constexpr std::size_t kDefaultMaxNestedCarrier = 8;

// A finite partial applicative structure: carrier plus a partial application
// table, -1 marking x·y undefined.
class PAS {
 public:
  PAS(std::vector<std::string> carrier, std::vector<int> table);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& table() const { return table_; }
  std::size_t find(const std::string& name) const;

  std::optional<std::size_t> apply(std::size_t x, std::size_t y) const;
  bool is_total() const;

  // Dom(r), Im(r) of the partial map [r] = (x ↦ r·x).
  Subset domain(std::size_t r) const;
  Subset image(std::size_t r) const;

  friend bool operator==(const PAS&, const PAS&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> table_;
};

// {r | ∀a ∈ A. r·a defined and in B}
Subset arrow_set(const PAS& pas, Subset a, Subset b);

// Name of a subset, "{x,y}" in carrier order.
std::string subset_name(const std::vector<std::string>& carrier, Subset s);

// Σ[R]: propositions are all subsets (proposition id = subset mask),
// realizers are the carrier, rho(A, B) = arrow_set(A, B).
PRStructure induce_sigma(const PAS& pas, std::size_t max_carrier = kDefaultMaxCarrier);

struct PasPreorderWitness {
  std::size_t identity = 0;
  std::vector<std::size_t> composition;  // at s*n+r
};
// 𝐢 with 𝐢·a = a and, per (r, s), the least t with t·a = s·(r·a) wherever the
// right side is defined.
std::optional<PasPreorderWitness> pas_preorder_witness(const PAS& pas);

// r·s = s, or the forward orbit of s under [r] hits an undefined application
// before any value repeats.
bool orbit_condition(const PAS& pas, std::size_t r, std::size_t s);

// Checks, on this instance: posetal Σ[R] forces the orbit condition for all
// (r, s); a total [r] is then the identity; when Σ[R] is preorderal the total
// represented maps contain the identity and compose, and every [s]∘[r] is
// extended by some [t]. Returns false if any of these fails.
bool check_orbit_theorem(const PAS& pas, std::size_t max_carrier = kDefaultMaxCarrier);

bool is_totally_matching(const PAS& pas);

// For total tables: posetal Σ[R] iff x·y = y everywhere. Returns the right-hand
// side; throws invariant_violation when the two sides disagree.
bool magma_posetal_check(const PAS& pas, std::size_t max_carrier = kDefaultMaxCarrier);

struct Pairing {
  std::size_t p = 0, p0 = 0, p1 = 0;
};
// Least (p, p0, p1) with (p·a0)·a1 defined and p_i·((p·a0)·a1) = a_i.
std::optional<Pairing> find_pairing(const PAS& pas);
// Least k with (k·x)·y = x for all x, y.
std::optional<std::size_t> find_k_combinator(const PAS& pas);

// A sub-structure embedded into a larger one.
struct SubPASPair {
  PAS sub;
  PAS super;
  std::vector<std::size_t> embedding;  // sub element -> super element
};
// Throws malformed_input unless the embedding is injective and sub-application
// agrees with super-application wherever it is defined.
void validate(const SubPASPair& sp);

// Propositions (I, J) with I ⊆ sub, J ⊆ super, e(I) ⊆ J; realizers are sub
// elements r with r·x ∈ I' for x ∈ I (in sub) and e(r)·y ∈ J' for y ∈ J (in
// super).
PRStructure induce_nested(const SubPASPair& sp, std::size_t max_carrier = kDefaultMaxNestedCarrier);
// Propositions are subsets of the super carrier; realizers are sub elements r
// with e(r) ∈ arrow_set_super(I, I').
PRStructure induce_relative(const SubPASPair& sp, std::size_t max_carrier = kDefaultMaxNestedCarrier);

}  // namespace prkit
