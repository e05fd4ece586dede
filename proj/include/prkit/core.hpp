#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prkit/bitset.hpp"
#include "prkit/error.hpp"

namespace prkit {

enum class PropId : std::uint32_t {};
enum class RealId : std::uint32_t {};

constexpr std::size_t idx(PropId p) { return static_cast<std::size_t>(p); }
constexpr std::size_t idx(RealId r) { return static_cast<std::size_t>(r); }
constexpr PropId prop(std::size_t i) { return static_cast<PropId>(i); }
constexpr RealId real(std::size_t i) { return static_cast<RealId>(i); }

using PropPair = std::pair<PropId, PropId>;

// A finite PR-structure: propositions, realizers and the realizer table rho.
// Cells are fixed-width realizer bitsets laid out row-major by (from, to).
// Instances are immutable; use PRStructure::Builder to make one.
class PRStructure {
 public:
  class Builder;

  std::size_t num_props() const { return props_.size(); }
  std::size_t num_reals() const { return reals_.size(); }
  std::size_t words_per_cell() const { return wpc_; }

  const std::vector<std::string>& prop_names() const { return props_; }
  const std::vector<std::string>& real_names() const { return reals_; }
  const std::string& name(PropId p) const { return props_.at(idx(p)); }
  const std::string& name(RealId r) const { return reals_.at(idx(r)); }

  PropId find_prop(const std::string& name) const;
  RealId find_real(const std::string& name) const;

  // rho(a, b) as a view onto the flat table.
  std::span<const Word> cell(PropId a, PropId b) const { return cell_at(idx(a) * num_props() + idx(b)); }
  std::span<const Word> cell_at(std::size_t pair_index) const {
    return {cells_.data() + pair_index * wpc_, wpc_};
  }
  Bitset cell_set(PropId a, PropId b) const { return Bitset(num_reals(), cell(a, b)); }
  bool realizes(RealId r, PropId a, PropId b) const { return bits::test(cell(a, b), idx(r)); }

  std::span<const Word> raw_cells() const { return cells_; }

  void check(PropId p) const;
  void check(RealId r) const;

  friend bool operator==(const PRStructure&, const PRStructure&) = default;

 private:
  PRStructure() = default;

  std::vector<std::string> props_;
  std::vector<std::string> reals_;
  std::size_t wpc_ = 1;
  std::vector<Word> cells_;
};

class PRStructure::Builder {
 public:
  // Throws malformed_input on empty or duplicate names.
  Builder(std::vector<std::string> props, std::vector<std::string> reals);

  Builder& add(PropId a, PropId b, RealId r);
  Builder& add(std::size_t a, std::size_t b, std::size_t r) { return add(prop(a), prop(b), real(r)); }
  Builder& set_cell(std::size_t pair_index, std::span<const Word> realizers);
  // Replaces the whole flat table (|P|^2 * words_per_cell words).
  Builder& set_cells(std::vector<Word> cells);

  std::size_t num_props() const { return s_.num_props(); }
  std::size_t num_reals() const { return s_.num_reals(); }

  PRStructure build() &&;

 private:
  PRStructure s_;
};

// Two I-indexed tuples of propositions.
struct FamilyPair {
  std::vector<PropId> phi;
  std::vector<PropId> psi;

  std::size_t index_size() const { return phi.size(); }
};

// A finite carrier with a binary relation, stored as a dense bit matrix.
class BinRel {
 public:
  explicit BinRel(std::vector<std::string> carrier);
  BinRel(std::vector<std::string> carrier, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  bool related(std::size_t a, std::size_t b) const { return rows_[a].test(b); }
  void relate(std::size_t a, std::size_t b);
  const Bitset& row(std::size_t a) const { return rows_[a]; }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  std::size_t find(const std::string& name) const;

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;
  bool is_preorder() const { return is_reflexive() && is_transitive(); }
  bool is_partial_order() const { return is_preorder() && is_antisymmetric(); }

 private:
  std::vector<std::string> names_;
  std::vector<Bitset> rows_;
};

// φ ⊢_I ψ: some realizer lies in every rho(φ(i), ψ(i)). True for I = ∅.
bool entails_indexed(const PRStructure& s, const FamilyPair& f);
// As entails_indexed, also returning the common realizers.
Bitset entailment_witnesses(const PRStructure& s, const FamilyPair& f);

// a ⊢ b: rho(a, b) is nonempty.
bool entails(const PRStructure& s, PropId a, PropId b);

// The intersection over a set of pairs; the indexed relation only depends on
// the image pair-set of the family.
bool entails_pairset(const PRStructure& s, std::span<const PropPair> pairs);
Bitset pairset_witnesses(const PRStructure& s, std::span<const PropPair> pairs);
// Pair-set given as a |P|^2 bitset over pair indices a*|P|+b.
bool entails_pairset(const PRStructure& s, const Bitset& pair_mask);

std::vector<PropPair> image_pairs(const FamilyPair& f);

// (φ∘m, ψ∘m) for m: I → J given as a vector of J-indices.
FamilyPair reindex(const FamilyPair& f, std::span<const std::size_t> m);

// rho⁻(r) as a bitset over pair indices a*|P|+b.
Bitset rho_inverse(const PRStructure& s, RealId r);
std::vector<PropPair> rho_inverse_pairs(const PRStructure& s, RealId r);

bool is_partitioned(const PRStructure& s);
// Reference route: pairwise disjointness of the rho⁻ images.
bool rho_inverses_disjoint(const PRStructure& s);

// Same structure with realizers reordered: new realizer k is old perm[k].
PRStructure permute_realizers(const PRStructure& s, std::span<const std::size_t> perm);

}  // namespace prkit
