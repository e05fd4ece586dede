#include "prkit/core.hpp"

#include <algorithm>
#include <set>

namespace prkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_input: return "malformed input";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::budget_exceeded: return "budget exceeded";
    case ErrorKind::invariant_violation: return "invariant violation";
    case ErrorKind::parse: return "parse error";
  }
  return "error";
}

namespace {

void check_names(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) fail(ErrorKind::malformed_input, std::string(what) + " must be nonempty");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(ErrorKind::malformed_input, std::string(what) + ": empty name");
    if (!seen.insert(n).second) fail(ErrorKind::malformed_input, std::string(what) + ": duplicate name '" + n + "'");
  }
}

}  // namespace

PropId PRStructure::find_prop(const std::string& n) const {
  auto it = std::find(props_.begin(), props_.end(), n);
  if (it == props_.end()) fail(ErrorKind::malformed_input, "unknown proposition '" + n + "'");
  return prop(static_cast<std::size_t>(it - props_.begin()));
}

RealId PRStructure::find_real(const std::string& n) const {
  auto it = std::find(reals_.begin(), reals_.end(), n);
  if (it == reals_.end()) fail(ErrorKind::malformed_input, "unknown realizer '" + n + "'");
  return real(static_cast<std::size_t>(it - reals_.begin()));
}

void PRStructure::check(PropId p) const {
  if (idx(p) >= num_props())
    fail(ErrorKind::malformed_input, "proposition id " + std::to_string(idx(p)) + " out of range");
}

void PRStructure::check(RealId r) const {
  if (idx(r) >= num_reals())
    fail(ErrorKind::malformed_input, "realizer id " + std::to_string(idx(r)) + " out of range");
}

PRStructure::Builder::Builder(std::vector<std::string> props, std::vector<std::string> reals) {
  check_names(props, "propositions");
  check_names(reals, "realizers");
  s_.props_ = std::move(props);
  s_.reals_ = std::move(reals);
  s_.wpc_ = words_for(s_.reals_.size());
  s_.cells_.assign(s_.props_.size() * s_.props_.size() * s_.wpc_, 0);
}

PRStructure::Builder& PRStructure::Builder::add(PropId a, PropId b, RealId r) {
  s_.check(a);
  s_.check(b);
  s_.check(r);
  const std::size_t base = (idx(a) * s_.num_props() + idx(b)) * s_.wpc_;
  s_.cells_[base + idx(r) / kWordBits] |= Word{1} << (idx(r) % kWordBits);
  return *this;
}

PRStructure::Builder& PRStructure::Builder::set_cell(std::size_t pair_index, std::span<const Word> realizers) {
  if (pair_index >= s_.num_props() * s_.num_props())
    fail(ErrorKind::malformed_input, "pair index out of range");
  if (realizers.size() != s_.wpc_) fail(ErrorKind::malformed_input, "cell width mismatch");
  Bitset cell(s_.num_reals(), realizers);
  std::copy(cell.words().begin(), cell.words().end(), s_.cells_.begin() + static_cast<std::ptrdiff_t>(pair_index * s_.wpc_));
  return *this;
}

PRStructure::Builder& PRStructure::Builder::set_cells(std::vector<Word> cells) {
  if (cells.size() != s_.cells_.size()) fail(ErrorKind::malformed_input, "cell table size mismatch");
  const std::size_t tail = s_.num_reals() % kWordBits;
  if (tail != 0) {
    const Word mask = (Word{1} << tail) - 1;
    for (std::size_t i = s_.wpc_ - 1; i < cells.size(); i += s_.wpc_)
      if ((cells[i] & ~mask) != 0) fail(ErrorKind::malformed_input, "cell names a realizer out of range");
  }
  s_.cells_ = std::move(cells);
  return *this;
}

PRStructure PRStructure::Builder::build() && { return std::move(s_); }

BinRel::BinRel(std::vector<std::string> carrier) : names_(std::move(carrier)) {
  check_names(names_, "carrier");
  rows_.assign(names_.size(), Bitset(names_.size()));
}

BinRel::BinRel(std::vector<std::string> carrier, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : BinRel(std::move(carrier)) {
  for (auto [a, b] : pairs) relate(a, b);
}

void BinRel::relate(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) fail(ErrorKind::malformed_input, "relation pair out of range");
  rows_[a].set(b);
}

std::vector<std::pair<std::size_t, std::size_t>> BinRel::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b : rows_[a].elements()) out.emplace_back(a, b);
  return out;
}

std::size_t BinRel::find(const std::string& n) const {
  auto it = std::find(names_.begin(), names_.end(), n);
  if (it == names_.end()) fail(ErrorKind::malformed_input, "unknown carrier element '" + n + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

bool BinRel::is_reflexive() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (!related(a, a)) return false;
  return true;
}

bool BinRel::is_transitive() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b : rows_[a].elements())
      if (!rows_[b].is_subset_of(rows_[a])) return false;
  return true;
}

bool BinRel::is_antisymmetric() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b : rows_[a].elements())
      if (a != b && related(b, a)) return false;
  return true;
}

Bitset entailment_witnesses(const PRStructure& s, const FamilyPair& f) {
  if (f.phi.size() != f.psi.size()) fail(ErrorKind::malformed_input, "family tuples differ in length");
  Bitset acc(s.num_reals(), true);
  for (std::size_t i = 0; i < f.phi.size(); ++i) {
    s.check(f.phi[i]);
    s.check(f.psi[i]);
    acc &= s.cell(f.phi[i], f.psi[i]);
  }
  return acc;
}

bool entails_indexed(const PRStructure& s, const FamilyPair& f) { return entailment_witnesses(s, f).any(); }

bool entails(const PRStructure& s, PropId a, PropId b) {
  s.check(a);
  s.check(b);
  return bits::any(s.cell(a, b));
}

Bitset pairset_witnesses(const PRStructure& s, std::span<const PropPair> pairs) {
  Bitset acc(s.num_reals(), true);
  for (auto [a, b] : pairs) {
    s.check(a);
    s.check(b);
    acc &= s.cell(a, b);
  }
  return acc;
}

bool entails_pairset(const PRStructure& s, std::span<const PropPair> pairs) {
  return pairset_witnesses(s, pairs).any();
}

bool entails_pairset(const PRStructure& s, const Bitset& pair_mask) {
  if (pair_mask.size() != s.num_props() * s.num_props()) fail(ErrorKind::malformed_input, "pair mask width mismatch");
  Bitset acc(s.num_reals(), true);
  for (std::size_t p = pair_mask.find_first(); p != bits::npos; p = pair_mask.find_next(p + 1)) acc &= s.cell_at(p);
  return acc.any();
}

std::vector<PropPair> image_pairs(const FamilyPair& f) {
  std::vector<PropPair> out;
  for (std::size_t i = 0; i < f.phi.size(); ++i) out.emplace_back(f.phi[i], f.psi[i]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FamilyPair reindex(const FamilyPair& f, std::span<const std::size_t> m) {
  FamilyPair out;
  out.phi.reserve(m.size());
  out.psi.reserve(m.size());
  for (std::size_t j : m) {
    if (j >= f.index_size()) fail(ErrorKind::malformed_input, "reindexing map out of range");
    out.phi.push_back(f.phi[j]);
    out.psi.push_back(f.psi[j]);
  }
  return out;
}

Bitset rho_inverse(const PRStructure& s, RealId r) {
  s.check(r);
  const std::size_t n = s.num_props() * s.num_props();
  Bitset out(n);
  for (std::size_t p = 0; p < n; ++p)
    if (bits::test(s.cell_at(p), idx(r))) out.set(p);
  return out;
}

std::vector<PropPair> rho_inverse_pairs(const PRStructure& s, RealId r) {
  std::vector<PropPair> out;
  const std::size_t np = s.num_props();
  for (std::size_t p : rho_inverse(s, r).elements()) out.emplace_back(prop(p / np), prop(p % np));
  return out;
}

bool is_partitioned(const PRStructure& s) {
  const std::size_t n = s.num_props() * s.num_props();
  for (std::size_t p = 0; p < n; ++p)
    if (bits::count(s.cell_at(p)) > 1) return false;
  return true;
}

bool rho_inverses_disjoint(const PRStructure& s) {
  std::vector<Bitset> inv;
  for (std::size_t r = 0; r < s.num_reals(); ++r) inv.push_back(rho_inverse(s, real(r)));
  for (std::size_t r = 0; r < inv.size(); ++r)
    for (std::size_t t = r + 1; t < inv.size(); ++t)
      if (inv[r].intersects(inv[t])) return false;
  return true;
}

PRStructure permute_realizers(const PRStructure& s, std::span<const std::size_t> perm) {
  if (perm.size() != s.num_reals()) fail(ErrorKind::malformed_input, "permutation size mismatch");
  std::vector<std::string> names;
  for (std::size_t k : perm) names.push_back(s.name(real(k)));
  PRStructure::Builder b(s.prop_names(), std::move(names));
  const std::size_t np = s.num_props();
  for (std::size_t p = 0; p < np * np; ++p)
    for (std::size_t k = 0; k < perm.size(); ++k)
      if (bits::test(s.cell_at(p), perm[k])) b.add(p / np, p % np, k);
  return std::move(b).build();
}

}  // namespace prkit
