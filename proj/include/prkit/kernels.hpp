#pragma once

// Data-parallel inner loops. Every kernel exists twice with the same
// signature: prkit::parallel (OpenMP) is what the library calls, and
// prkit::serial is the plain-loop reference kept for cross-checking and
// benchmarking. Results never depend on the thread schedule.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "prkit/bitset.hpp"
#include "prkit/core.hpp"

namespace prkit {

enum class BoundKind { supremum, adjoint_supremum };

// Upper-bound rows of a relation on a fiber with at most 63 elements:
// up[x] has bit c set iff x relates to c.
using UpRows = std::span<const std::uint64_t>;

namespace serial {

// Indices of the ⊆-maximal sets; among equal sets only the lowest index is kept.
std::vector<std::size_t> maximal_sets(std::span<const Bitset> sets);

// Smallest family (as a subset mask of the fiber, ascending order) that has no
// supremum (resp. adjoint-supremum), or nullopt if every family has one.
std::optional<std::uint64_t> first_family_without_bound(UpRows up, BoundKind kind);

// For every realizer pair (r, s), stored at s*|R|+r: the least t that lies in
// rho(a, c) whenever r ∈ rho(a, b) and s ∈ rho(b, c). Pairs with no such chain
// get `fallback`; pairs where no t works get bits::npos.
std::vector<std::size_t> composition_table(const PRStructure& s, std::size_t fallback);

// Flat cell array (one word per cell, |P| = 2^n) of the arrow-set table of a
// partial application table on n ≤ 63 elements; -1 marks undefined entries.
std::vector<Word> arrow_cells(std::size_t n, std::span<const int> table);

}  // namespace serial

namespace parallel {

std::vector<std::size_t> maximal_sets(std::span<const Bitset> sets);
std::optional<std::uint64_t> first_family_without_bound(UpRows up, BoundKind kind);
std::vector<std::size_t> composition_table(const PRStructure& s, std::size_t fallback);
std::vector<Word> arrow_cells(std::size_t n, std::span<const int> table);

int max_threads();

}  // namespace parallel

// Does the family `family` (subset mask) of a fiber with rows `up` have `b` as
// a supremum / adjoint-supremum?
inline bool is_bound_of(UpRows up, std::uint64_t family, std::size_t b, BoundKind kind) {
  const std::size_t f = up.size();
  std::uint64_t ub = f == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f) - 1;
  for (std::uint64_t m = family; m != 0; m &= m - 1) ub &= up[static_cast<std::size_t>(std::countr_zero(m))];
  if (kind == BoundKind::adjoint_supremum) return ub == up[b];
  return ((ub >> b) & 1U) != 0 && (ub & ~up[b]) == 0;
}

}  // namespace prkit
