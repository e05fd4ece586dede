#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "prkit/appstruct.hpp"
#include "prkit/core.hpp"

namespace prkit {

// Σ[B]: one realizer "*", rho(a, b) = {*} iff (a, b) ∈ B.
PRStructure sigma_from_bin(const BinRel& b);

// Σ_n on P = R = {1..n}: rho(i, j) = {x | i = j ≤ x ≤ n, or i = x < j}.
PRStructure sigma_n(std::size_t n);

// Propositions bot, top; realizers b, i, t.
PRStructure two_element_lattical();

// Carriers are named "0", "1", ...
PAS cyclic_group(std::size_t n);
PAS klein_group();  // Z/2 × Z/2, elements "00", "01", "10", "11"
PAS right_projection_magma(std::size_t n);  // x·y = y
PAS left_projection_magma(std::size_t n);   // x·y = x
PAS constant_magma(std::size_t n, std::size_t c);

enum class GeneratorKind { exhaustive, random };
enum class GeneratedFamily { pr_structure, partial_magma, magma };

// PR-structures range over min_props..max_props × min_reals..max_reals;
// magmas use `carrier`. Exhaustive order: sizes ascending (props, then reals),
// then tables lexicographically with the first cell most significant.
// Random item i is drawn from a generator seeded by (seed, i), so any index
// range can be produced independently.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::exhaustive;
  GeneratedFamily family = GeneratedFamily::pr_structure;
  std::size_t min_props = 1;
  std::size_t max_props = 1;
  std::size_t min_reals = 1;
  std::size_t max_reals = 1;
  std::size_t carrier = 2;
  std::uint64_t seed = 0;
  std::uint64_t limit = 0;  // random: number of items; exhaustive: 0 = no cap
};

using Generated = std::variant<PRStructure, PAS>;

inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 32;

class StructureEnumerator {
 public:
  // Throws malformed_input on inconsistent bounds and budget_exceeded when an
  // exhaustive space exceeds kMaxEnumeration or the limit.
  explicit StructureEnumerator(GeneratorSpec spec);

  const GeneratorSpec& spec() const { return spec_; }
  std::uint64_t size() const { return total_; }
  Generated at(std::uint64_t i) const;

 private:
  struct Block {
    std::size_t props, reals;
    std::uint64_t first, count;
  };

  GeneratorSpec spec_;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
};

// Streams items in index order; the sink returns false to stop early.
void enumerate_structures(const GeneratorSpec& spec,
                          const std::function<bool(std::uint64_t, const Generated&)>& sink);

}  // namespace prkit
