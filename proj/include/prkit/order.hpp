#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prkit/core.hpp"
#include "prkit/fiber.hpp"

namespace prkit {

// Identity realizer and a choice of composites s□r, stored at s*|R|+r.
struct PreorderWitness {
  RealId identity{};
  std::vector<RealId> composition;

  RealId compose(RealId s, RealId r, std::size_t num_reals) const {
    return composition[idx(s) * num_reals + idx(r)];
  }
};

struct BoundsWitness {
  PropId bottom{};
  PropId top{};
  RealId bottom_real{};  // in rho(bottom, a) for every a
  RealId top_real{};     // in rho(a, top) for every a
};

// Least identity; for each (r, s) the least valid s□r. Pairs with no chain
// a -r-> b -s-> c get the identity.
std::optional<PreorderWitness> find_preorder_witness(const PRStructure& s);
// Checks a claimed witness against the structure.
bool is_valid_preorder_witness(const PRStructure& s, const PreorderWitness& w);

bool is_preorderal(const PRStructure& s);
bool is_antisymmetric(const PRStructure& s);
bool is_posetal(const PRStructure& s);

// Lexicographically least (bottom, top, bottom_real, top_real).
std::optional<BoundsWitness> find_bounds_witness(const PRStructure& s);
bool is_bounded_posetal(const PRStructure& s);

// Bounded-posetal and rho(a, ⊤) = {t} for every a (resp. rho(⊥, a) = {b}).
bool p_structure_sufficient_top(const PRStructure& s);
bool p_structure_sufficient_bottom(const PRStructure& s);

// Whether s is partitioned, posetal and has fiber minima (or maxima). When the
// hypotheses hold this also confirms s is a P-structure, throwing
// invariant_violation otherwise.
bool partitioned_posetal_p_check(const PRStructure& s);

// The monoid of a partitioned preorderal structure on the realizers that occur
// in some cell. Throws precondition when s is not partitioned or not
// preorderal, and when some composite s□r of carrier elements is left
// unconstrained by the table (so not determined by it).
struct Monoid {
  std::vector<RealId> carrier;
  RealId unit{};
  std::vector<std::size_t> table;  // carrier positions, table[s*n+r] = s□r

  std::size_t size() const { return carrier.size(); }
  std::size_t op(std::size_t s, std::size_t r) const { return table[s * size() + r]; }
};
Monoid extract_monoid(const PRStructure& s);

struct FiberReport {
  std::size_t index_size = 0;
  std::size_t size = 0;
  bool pairset_route = false;
  bool reflexive = false;
  bool transitive = false;
  bool antisymmetric = false;
  std::optional<std::size_t> bottom;
  std::optional<std::size_t> top;
  std::vector<std::pair<std::size_t, std::size_t>> missing_meets;
  std::vector<std::pair<std::size_t, std::size_t>> missing_joins;
  std::optional<bool> distributive;  // computed for lattices of at most 256 elements
  std::vector<std::string> pointwise_failures;
  std::vector<std::string> reindexing_failures;
  std::size_t maps_checked = 0;
  std::vector<std::string> labels;  // element labels for reporting

  bool is_poset() const { return reflexive && transitive && antisymmetric; }
  bool is_lattice() const { return is_poset() && missing_meets.empty() && missing_joins.empty(); }
  bool is_bounded_lattice() const { return is_lattice() && bottom && top; }
};

struct FiberOptions {
  std::size_t max_fiber_size = kDefaultMaxFiberSize;
  std::size_t max_reindex_size = 3;
  bool pairset_route = false;
};

FiberReport check_fiber(const PRStructure& s, std::size_t index_size, const FiberOptions& opts = {});

}  // namespace prkit
