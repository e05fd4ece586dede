#include "prkit/order.hpp"

#include "prkit/canonical.hpp"
#include "prkit/kernels.hpp"

namespace prkit {

namespace {

constexpr std::size_t kUnconstrained = bits::npos - 1;

Bitset diagonal_common(const PRStructure& s) {
  Bitset acc(s.num_reals(), true);
  for (std::size_t a = 0; a < s.num_props(); ++a) acc &= s.cell(prop(a), prop(a));
  return acc;
}

Bitset row_common(const PRStructure& s, std::size_t from) {
  Bitset acc(s.num_reals(), true);
  for (std::size_t a = 0; a < s.num_props(); ++a) acc &= s.cell(prop(from), prop(a));
  return acc;
}

Bitset column_common(const PRStructure& s, std::size_t to) {
  Bitset acc(s.num_reals(), true);
  for (std::size_t a = 0; a < s.num_props(); ++a) acc &= s.cell(prop(a), prop(to));
  return acc;
}

std::optional<std::pair<std::size_t, std::size_t>> first_bottom(const PRStructure& s) {
  for (std::size_t p = 0; p < s.num_props(); ++p)
    if (auto c = row_common(s, p); c.any()) return std::pair{p, c.find_first()};
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> first_top(const PRStructure& s) {
  for (std::size_t p = 0; p < s.num_props(); ++p)
    if (auto c = column_common(s, p); c.any()) return std::pair{p, c.find_first()};
  return std::nullopt;
}

}  // namespace

std::optional<PreorderWitness> find_preorder_witness(const PRStructure& s) {
  const Bitset diag = diagonal_common(s);
  if (diag.none()) return std::nullopt;
  const std::size_t identity = diag.find_first();
  const auto table = parallel::composition_table(s, identity);
  PreorderWitness w{real(identity), {}};
  w.composition.reserve(table.size());
  for (std::size_t t : table) {
    if (t == bits::npos) return std::nullopt;
    w.composition.push_back(real(t));
  }
  return w;
}

bool is_valid_preorder_witness(const PRStructure& s, const PreorderWitness& w) {
  const std::size_t np = s.num_props(), nr = s.num_reals();
  if (w.composition.size() != nr * nr) return false;
  for (std::size_t a = 0; a < np; ++a)
    if (!s.realizes(w.identity, prop(a), prop(a))) return false;
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b)
      for (std::size_t c = 0; c < np; ++c)
        for (std::size_t r = 0; r < nr; ++r) {
          if (!s.realizes(real(r), prop(a), prop(b))) continue;
          for (std::size_t t = 0; t < nr; ++t)
            if (s.realizes(real(t), prop(b), prop(c)) &&
                !s.realizes(w.compose(real(t), real(r), nr), prop(a), prop(c)))
              return false;
        }
  return true;
}

bool is_preorderal(const PRStructure& s) { return find_preorder_witness(s).has_value(); }

bool is_antisymmetric(const PRStructure& s) {
  for (std::size_t a = 0; a < s.num_props(); ++a)
    for (std::size_t b = a + 1; b < s.num_props(); ++b)
      if (entails(s, prop(a), prop(b)) && entails(s, prop(b), prop(a))) return false;
  return true;
}

bool is_posetal(const PRStructure& s) { return is_antisymmetric(s) && is_preorderal(s); }

std::optional<BoundsWitness> find_bounds_witness(const PRStructure& s) {
  const auto bot = first_bottom(s);
  const auto top = first_top(s);
  if (!bot || !top) return std::nullopt;
  return BoundsWitness{prop(bot->first), prop(top->first), real(bot->second), real(top->second)};
}

bool is_bounded_posetal(const PRStructure& s) { return is_posetal(s) && find_bounds_witness(s).has_value(); }

bool p_structure_sufficient_top(const PRStructure& s) {
  if (!is_bounded_posetal(s)) return false;
  for (std::size_t top = 0; top < s.num_props(); ++top) {
    const Bitset first = s.cell_set(prop(0), prop(top));
    if (first.count() != 1) continue;
    bool all_same = true;
    for (std::size_t a = 1; a < s.num_props() && all_same; ++a) all_same = s.cell_set(prop(a), prop(top)) == first;
    if (all_same) return true;
  }
  return false;
}

bool p_structure_sufficient_bottom(const PRStructure& s) {
  if (!is_bounded_posetal(s)) return false;
  for (std::size_t bot = 0; bot < s.num_props(); ++bot) {
    const Bitset first = s.cell_set(prop(bot), prop(0));
    if (first.count() != 1) continue;
    bool all_same = true;
    for (std::size_t a = 1; a < s.num_props() && all_same; ++a) all_same = s.cell_set(prop(bot), prop(a)) == first;
    if (all_same) return true;
  }
  return false;
}

bool partitioned_posetal_p_check(const PRStructure& s) {
  const bool hyp = is_partitioned(s) && is_posetal(s) && (first_bottom(s) || first_top(s));
  if (hyp && !is_p_structure(s))
    fail(ErrorKind::invariant_violation, "partitioned posetal structure with fiber minima is not a P-structure");
  return hyp;
}

Monoid extract_monoid(const PRStructure& s) {
  if (!is_partitioned(s)) fail(ErrorKind::precondition, "monoid extraction needs a partitioned structure");
  const Bitset diag = diagonal_common(s);
  if (diag.none()) fail(ErrorKind::precondition, "monoid extraction needs a preorderal structure");
  const std::size_t nr = s.num_reals();
  const auto comp = parallel::composition_table(s, kUnconstrained);

  Monoid m;
  std::vector<std::size_t> pos(nr, bits::npos);
  Bitset used(nr);
  for (std::size_t p = 0; p < s.num_props() * s.num_props(); ++p) used |= s.cell_at(p);
  for (std::size_t r : used.elements()) {
    pos[r] = m.carrier.size();
    m.carrier.push_back(real(r));
  }
  m.unit = real(diag.find_first());

  const std::size_t n = m.size();
  m.table.assign(n * n, 0);
  for (std::size_t si = 0; si < n; ++si)
    for (std::size_t ri = 0; ri < n; ++ri) {
      const std::size_t t = comp[idx(m.carrier[si]) * nr + idx(m.carrier[ri])];
      if (t == bits::npos) fail(ErrorKind::precondition, "monoid extraction needs a preorderal structure");
      if (t == kUnconstrained)
        fail(ErrorKind::precondition, "composite " + s.name(m.carrier[si]) + "□" + s.name(m.carrier[ri]) +
                                          " is not determined by the table (no chain a -r-> b -s-> c)");
      m.table[si * n + ri] = pos[t];
    }
  const std::size_t u = pos[idx(m.unit)];
  for (std::size_t x = 0; x < n; ++x) {
    if (m.op(u, x) != x || m.op(x, u) != x) fail(ErrorKind::invariant_violation, "extracted monoid violates the unit law");
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (m.op(m.op(x, y), z) != m.op(x, m.op(y, z)))
          fail(ErrorKind::invariant_violation, "extracted monoid is not associative");
  }
  return m;
}

FiberReport check_fiber(const PRStructure& s, std::size_t index_size, const FiberOptions& opts) {
  const Fiber fib(s, index_size, opts.max_fiber_size, opts.pairset_route);
  const std::size_t f = fib.size();
  FiberReport rep;
  rep.index_size = index_size;
  rep.size = f;
  rep.pairset_route = opts.pairset_route;
  for (std::size_t e = 0; e < f; ++e) rep.labels.push_back(fib.label(e));

  rep.reflexive = rep.transitive = rep.antisymmetric = true;
  for (std::size_t x = 0; x < f; ++x) {
    rep.reflexive = rep.reflexive && fib.entails(x, x);
    for (std::size_t y : fib.above(x).elements()) {
      rep.transitive = rep.transitive && fib.above(y).is_subset_of(fib.above(x));
      rep.antisymmetric = rep.antisymmetric && (x == y || !fib.entails(y, x));
    }
  }
  const Bitset all(f, true);
  for (std::size_t x = 0; x < f && !rep.bottom; ++x)
    if (fib.above(x) == all) rep.bottom = x;
  for (std::size_t x = 0; x < f && !rep.top; ++x)
    if (fib.below(x) == all) rep.top = x;

  // Greatest (for meets) or least (for joins) element of `set`; least index wins.
  auto extreme = [&](const Fiber& fb, const Bitset& set, bool greatest) -> std::size_t {
    for (std::size_t m = set.find_first(); m != bits::npos; m = set.find_next(m + 1))
      if (set.is_subset_of(greatest ? fb.below(m) : fb.above(m))) return m;
    return bits::npos;
  };
  std::vector<std::size_t> meet(f * f, bits::npos), join(f * f, bits::npos);
  for (std::size_t x = 0; x < f; ++x)
    for (std::size_t y = x; y < f; ++y) {
      meet[x * f + y] = meet[y * f + x] = extreme(fib, fib.below(x) & fib.below(y), true);
      join[x * f + y] = join[y * f + x] = extreme(fib, fib.above(x) & fib.above(y), false);
      if (x == y) continue;
      if (meet[x * f + y] == bits::npos) rep.missing_meets.emplace_back(x, y);
      if (join[x * f + y] == bits::npos) rep.missing_joins.emplace_back(x, y);
    }

  if (rep.is_lattice() && f <= 256) {
    bool dist = true;
    for (std::size_t x = 0; x < f && dist; ++x)
      for (std::size_t y = 0; y < f && dist; ++y)
        for (std::size_t z = 0; z < f && dist; ++z)
          dist = meet[x * f + join[y * f + z]] == join[meet[x * f + y] * f + meet[x * f + z]];
    rep.distributive = dist;
  }

  // Componentwise bounds against meets/joins of the base order.
  if (rep.is_lattice() && index_size > 0) {
    const FiberReport base = index_size == 1 ? rep : check_fiber(s, 1, {opts.max_fiber_size, 0, opts.pairset_route});
    if (!base.is_lattice()) {
      rep.pointwise_failures.push_back("base order is not a lattice; componentwise checks skipped");
    } else {
      const Fiber b1(s, 1, opts.max_fiber_size);
      auto base_op = [&](std::size_t a, std::size_t c, bool is_meet) {
        return extreme(b1, is_meet ? (b1.below(a) & b1.below(c)) : (b1.above(a) & b1.above(c)), is_meet);
      };
      for (std::size_t x = 0; x < f; ++x)
        for (std::size_t y = x + 1; y < f; ++y) {
          const auto tx = fib.tuple(x), ty = fib.tuple(y);
          const auto tm = fib.tuple(meet[x * f + y]), tj = fib.tuple(join[x * f + y]);
          for (std::size_t i = 0; i < index_size; ++i) {
            const std::size_t bm = base_op(idx(tx[i]), idx(ty[i]), true);
            const std::size_t bj = base_op(idx(tx[i]), idx(ty[i]), false);
            if (!entails(s, tm[i], prop(bm)))
              rep.pointwise_failures.push_back("meet of " + rep.labels[x] + " and " + rep.labels[y] + " at index " +
                                               std::to_string(i));
            if (!entails(s, prop(bj), tj[i]))
              rep.pointwise_failures.push_back("join of " + rep.labels[x] + " and " + rep.labels[y] + " at index " +
                                               std::to_string(i));
          }
        }
    }
  }

  // Preservation of found bounds, meets and joins under every pullback
  // along maps [k'] -> [k] with k' <= max_reindex_size.
  for (std::size_t k2 = 0; k2 <= opts.max_reindex_size; ++k2) {
    if (index_size == 0 && k2 > 0) break;
    const Fiber small(s, k2, opts.max_fiber_size, opts.pairset_route);
    const std::size_t g = small.size();
    const Bitset all2(g, true);
    auto is_meet = [&](std::size_t a, std::size_t c, std::size_t m) {
      const Bitset lower = small.below(a) & small.below(c);
      return lower.test(m) && lower.is_subset_of(small.below(m));
    };
    auto is_join = [&](std::size_t a, std::size_t c, std::size_t m) {
      const Bitset upper = small.above(a) & small.above(c);
      return upper.test(m) && upper.is_subset_of(small.above(m));
    };
    std::vector<std::size_t> m(k2, 0);
    while (true) {
      ++rep.maps_checked;
      std::string mname = "[";
      for (std::size_t i = 0; i < k2; ++i) mname += (i ? "," : "") + std::to_string(m[i]);
      mname += "]";
      if (rep.bottom && small.above(fib.pullback(*rep.bottom, m)) != all2)
        rep.reindexing_failures.push_back("map " + mname + " does not preserve the minimum");
      if (rep.top && small.below(fib.pullback(*rep.top, m)) != all2)
        rep.reindexing_failures.push_back("map " + mname + " does not preserve the maximum");
      for (std::size_t x = 0; x < f; ++x)
        for (std::size_t y = x + 1; y < f; ++y) {
          const std::size_t px = fib.pullback(x, m), py = fib.pullback(y, m);
          if (meet[x * f + y] != bits::npos && !is_meet(px, py, fib.pullback(meet[x * f + y], m)))
            rep.reindexing_failures.push_back("map " + mname + " breaks the meet of " + rep.labels[x] + " and " +
                                              rep.labels[y]);
          if (join[x * f + y] != bits::npos && !is_join(px, py, fib.pullback(join[x * f + y], m)))
            rep.reindexing_failures.push_back("map " + mname + " breaks the join of " + rep.labels[x] + " and " +
                                              rep.labels[y]);
        }
      std::size_t i = 0;
      while (i < k2 && ++m[i] == index_size) m[i++] = 0;
      if (i == k2) break;
    }
  }
  return rep;
}

}  // namespace prkit
