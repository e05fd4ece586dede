#pragma once

#include <cstddef>
#include <vector>

#include "prkit/bitset.hpp"
#include "prkit/core.hpp"

namespace prkit {

inline constexpr std::size_t kDefaultMaxFiberSize = 256;

// The fiber P^I for |I| = k, with ⊢_I materialized as a dense bit matrix.
// Element e encodes the tuple (t_0, ..., t_{k-1}) as Σ t_i·|P|^i.
class Fiber {
 public:
  // Computes ⊢_I by intersecting cells directly, or (pairset_route) through
  // entails_pairset on the image pair-set of each family.
  Fiber(const PRStructure& s, std::size_t index_size, std::size_t max_size = kDefaultMaxFiberSize,
        bool pairset_route = false);

  const PRStructure& structure() const { return *s_; }
  std::size_t index_size() const { return k_; }
  std::size_t size() const { return rows_.size(); }

  std::vector<PropId> tuple(std::size_t e) const;
  std::size_t index_of(const std::vector<PropId>& t) const;
  std::string label(std::size_t e) const;  // "(a,b,c)"

  bool entails(std::size_t x, std::size_t y) const { return rows_[x].test(y); }
  const Bitset& above(std::size_t x) const { return rows_[x]; }  // {y | x ⊢ y}
  const Bitset& below(std::size_t y) const { return cols_[y]; }  // {x | x ⊢ y}

  // Pullback along m: [k'] → [k], m given by images in [k].
  std::size_t pullback(std::size_t e, const std::vector<std::size_t>& m) const;

 private:
  const PRStructure* s_;
  std::size_t k_;
  std::vector<Bitset> rows_;
  std::vector<Bitset> cols_;
};

// Number of elements of P^k, or bits::npos if it exceeds `cap`.
std::size_t fiber_size(std::size_t num_props, std::size_t k, std::size_t cap);

// Fiber relation rows; the library uses the parallel kernel.
namespace serial {
std::vector<Bitset> fiber_rows(const PRStructure& s, std::size_t k);
}
namespace parallel {
std::vector<Bitset> fiber_rows(const PRStructure& s, std::size_t k);
}

}  // namespace prkit
