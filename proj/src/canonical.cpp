#include "prkit/canonical.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "prkit/kernels.hpp"

namespace prkit {

namespace {

std::vector<Bitset> all_rho_inverses(const PRStructure& s) {
  // One pass over the table instead of |R| passes.
  const std::size_t n = s.num_props() * s.num_props();
  std::vector<Bitset> inv(s.num_reals(), Bitset(n));
  for (std::size_t p = 0; p < n; ++p) {
    auto c = s.cell_at(p);
    for (std::size_t r = bits::find_first(c); r != bits::npos; r = bits::find_next(c, r + 1)) inv[r].set(p);
  }
  return inv;
}

}  // namespace

const char* to_string(Equivalence e) {
  switch (e) {
    case Equivalence::equivalent: return "equivalent";
    case Equivalence::proposition_mismatch: return "proposition sets differ";
    case Equivalence::antichain_mismatch: return "canonical antichains differ";
  }
  return "?";
}

PRStructure reduce_dominated(const PRStructure& s) {
  const auto inv = all_rho_inverses(s);
  const auto keep = parallel::maximal_sets(inv);
  std::vector<std::string> names;
  for (std::size_t r : keep) names.push_back(s.name(real(r)));
  PRStructure::Builder b(s.prop_names(), std::move(names));
  const std::size_t np = s.num_props();
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t p : inv[keep[k]].elements()) b.add(p / np, p % np, k);
  return std::move(b).build();
}

CanonicalForm canonicalize(const PRStructure& s) {
  auto inv = all_rho_inverses(s);
  CanonicalForm form{s.prop_names(), {}};
  for (std::size_t r : parallel::maximal_sets(inv)) form.antichain.push_back(std::move(inv[r]));
  std::sort(form.antichain.begin(), form.antichain.end(),
            [](const Bitset& a, const Bitset& b) { return element_order_less(a, b); });
  return form;
}

PRStructure structure_of(const CanonicalForm& form) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < form.antichain.size(); ++k) names.push_back("I" + std::to_string(k));
  if (names.empty()) fail(ErrorKind::malformed_input, "canonical form with an empty antichain");
  PRStructure::Builder b(form.props, std::move(names));
  const std::size_t np = form.props.size();
  for (std::size_t k = 0; k < form.antichain.size(); ++k) {
    if (form.antichain[k].size() != np * np) fail(ErrorKind::malformed_input, "antichain member width mismatch");
    for (std::size_t p : form.antichain[k].elements()) b.add(p / np, p % np, k);
  }
  return std::move(b).build();
}

PRStructure reorder_props(const PRStructure& s, const std::vector<std::string>& order) {
  if (order.size() != s.num_props()) fail(ErrorKind::malformed_input, "proposition order has wrong length");
  std::vector<std::size_t> old_of;
  for (const auto& n : order) old_of.push_back(idx(s.find_prop(n)));
  PRStructure::Builder b(order, s.real_names());
  const std::size_t np = s.num_props();
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t c = 0; c < np; ++c) b.set_cell(a * np + c, s.cell(prop(old_of[a]), prop(old_of[c])));
  return std::move(b).build();
}

Equivalence compare(const PRStructure& a, const PRStructure& b) {
  const std::set<std::string> pa(a.prop_names().begin(), a.prop_names().end());
  const std::set<std::string> pb(b.prop_names().begin(), b.prop_names().end());
  if (pa != pb) return Equivalence::proposition_mismatch;
  const CanonicalForm ca = canonicalize(a);
  const CanonicalForm cb =
      a.prop_names() == b.prop_names() ? canonicalize(b) : canonicalize(reorder_props(b, a.prop_names()));
  return ca.antichain == cb.antichain ? Equivalence::equivalent : Equivalence::antichain_mismatch;
}

std::size_t degree(const PRStructure& s) { return canonicalize(s).degree(); }

PumpingStructures pumping_structures(const BinRel& psi, std::size_t n) {
  if (n < 2) fail(ErrorKind::precondition, "pumping bound n must be at least 2 (n = 1 leaves only the empty realizer)");
  const auto pairs = psi.pairs();
  if (pairs.empty()) fail(ErrorKind::precondition, "pumping relation must be nonempty");
  if (pairs.size() > 24) fail(ErrorKind::budget_exceeded, "pumping relation has more than 24 pairs");

  auto pair_name = [&](std::size_t k) { return "(" + psi.names()[pairs[k].first] + "," + psi.names()[pairs[k].second] + ")"; };
  auto subset_name = [&](std::uint32_t mask) {
    std::string out = "{";
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) out += (out.size() > 1 ? "," : "") + pair_name(k);
    return out + "}";
  };
  auto build = [&](const std::vector<std::uint32_t>& masks) {
    std::vector<std::string> names;
    for (auto m : masks) names.push_back(subset_name(m));
    PRStructure::Builder b(psi.names(), std::move(names));
    for (std::size_t r = 0; r < masks.size(); ++r)
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((masks[r] >> k) & 1U) b.add(pairs[k].first, pairs[k].second, r);
    return std::move(b).build();
  };

  std::vector<std::uint32_t> small;
  const std::uint32_t all = (1U << pairs.size()) - 1;
  for (std::uint32_t m = 0; m <= all; ++m)
    if (static_cast<std::size_t>(std::popcount(m)) < n) small.push_back(m);
  std::vector<std::uint32_t> punctured;
  for (std::size_t k = 0; k < pairs.size(); ++k) punctured.push_back(all & ~(1U << k));
  return {build(small), build(punctured)};
}

CutoffReport pointwise_cutoff(const PRStructure& s, std::size_t max_pairs) {
  const std::size_t np = s.num_props(), npairs = np * np;
  if (npairs > max_pairs || npairs > 30)
    fail(ErrorKind::budget_exceeded, "pair-set enumeration over " + std::to_string(npairs) + " pairs exceeds budget");
  std::vector<bool> related(npairs);
  for (std::size_t p = 0; p < npairs; ++p) related[p] = bits::any(s.cell_at(p));

  CutoffReport rep{npairs, std::nullopt};
  std::size_t best_size = npairs + 1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << npairs); ++m) {
    const auto size = static_cast<std::size_t>(std::popcount(m));
    if (size >= best_size) continue;
    bool pointwise = true;
    Bitset acc(s.num_reals(), true);
    for (std::uint64_t t = m; t != 0; t &= t - 1) {
      const auto p = static_cast<std::size_t>(std::countr_zero(t));
      pointwise = pointwise && related[p];
      acc &= s.cell_at(p);
    }
    if (pointwise != acc.any()) {
      best_size = size;
      best_mask = m;
    }
  }
  if (best_size <= npairs) {
    rep.pointwise_up_to = best_size - 1;
    std::vector<PropPair> t;
    for (std::size_t p = 0; p < npairs; ++p)
      if ((best_mask >> p) & 1U) t.emplace_back(prop(p / np), prop(p % np));
    rep.first_failure = std::move(t);
  }
  return rep;
}

}  // namespace prkit
