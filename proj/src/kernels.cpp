#include "prkit/kernels.hpp"

#include <omp.h>

#include <limits>

namespace prkit {

namespace {

bool dominated(std::span<const Bitset> sets, std::size_t i) {
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (j == i || !sets[i].is_subset_of(sets[j])) continue;
    if (sets[i] != sets[j] || j < i) return true;
  }
  return false;
}

bool has_bound(UpRows up, std::uint64_t family, BoundKind kind) {
  const std::size_t f = up.size();
  std::uint64_t ub = f == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f) - 1;
  for (std::uint64_t m = family; m != 0; m &= m - 1) ub &= up[static_cast<std::size_t>(std::countr_zero(m))];
  if (kind == BoundKind::adjoint_supremum) {
    for (std::size_t b = 0; b < f; ++b)
      if (up[b] == ub) return true;
    return false;
  }
  for (std::uint64_t m = ub; m != 0; m &= m - 1)
    if ((ub & ~up[static_cast<std::size_t>(std::countr_zero(m))]) == 0) return true;
  return false;
}

std::uint64_t family_count(UpRows up) {
  if (up.size() >= 64) fail(ErrorKind::budget_exceeded, "fiber too large for family enumeration");
  return std::uint64_t{1} << up.size();
}

// rows[r][a] = {b | r ∈ rho(a, b)}
std::vector<std::vector<Bitset>> successor_rows(const PRStructure& s) {
  const std::size_t np = s.num_props(), nr = s.num_reals();
  std::vector<std::vector<Bitset>> rows(nr, std::vector<Bitset>(np, Bitset(np)));
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b) {
      auto c = s.cell(prop(a), prop(b));
      for (std::size_t r = bits::find_first(c); r != bits::npos; r = bits::find_next(c, r + 1)) rows[r][a].set(b);
    }
  return rows;
}

std::size_t compose_one(const PRStructure& s, const std::vector<std::vector<Bitset>>& rows, std::size_t r,
                        std::size_t t, std::size_t fallback) {
  const std::size_t np = s.num_props();
  Bitset cand(s.num_reals(), true);
  bool constrained = false;
  for (std::size_t a = 0; a < np; ++a) {
    Bitset reach(np);
    const Bitset& mid = rows[r][a];
    for (std::size_t b = mid.find_first(); b != bits::npos; b = mid.find_next(b + 1)) reach |= rows[t][b];
    for (std::size_t c = reach.find_first(); c != bits::npos; c = reach.find_next(c + 1)) {
      cand &= s.cell(prop(a), prop(c));
      constrained = true;
    }
  }
  if (!constrained) return fallback;
  return cand.find_first();
}

void fill_arrow_row(std::size_t n, std::span<const int> table, std::size_t a_mask, std::vector<Word>& cells) {
  const std::size_t np = std::size_t{1} << n;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t img = 0;
    bool defined = true;
    for (std::size_t x = 0; x < n && defined; ++x) {
      if (((a_mask >> x) & 1U) == 0) continue;
      const int v = table[r * n + x];
      if (v < 0) defined = false;
      else img |= std::size_t{1} << v;
    }
    if (!defined) continue;
    for (std::size_t b = img; b < np; b = (b + 1) | img) cells[a_mask * np + b] |= Word{1} << r;
  }
}

void check_arrow_input(std::size_t n, std::span<const int> table) {
  if (n == 0 || n > 20) fail(ErrorKind::budget_exceeded, "arrow table needs 1 <= n <= 20");
  if (table.size() != n * n) fail(ErrorKind::malformed_input, "application table size mismatch");
}

}  // namespace

namespace serial {

std::vector<std::size_t> maximal_sets(std::span<const Bitset> sets) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (!dominated(sets, i)) keep.push_back(i);
  return keep;
}

std::optional<std::uint64_t> first_family_without_bound(UpRows up, BoundKind kind) {
  const std::uint64_t total = family_count(up);
  for (std::uint64_t fam = 0; fam < total; ++fam)
    if (!has_bound(up, fam, kind)) return fam;
  return std::nullopt;
}

std::vector<std::size_t> composition_table(const PRStructure& s, std::size_t fallback) {
  const auto rows = successor_rows(s);
  const std::size_t nr = s.num_reals();
  std::vector<std::size_t> out(nr * nr);
  for (std::size_t t = 0; t < nr; ++t)
    for (std::size_t r = 0; r < nr; ++r) out[t * nr + r] = compose_one(s, rows, r, t, fallback);
  return out;
}

std::vector<Word> arrow_cells(std::size_t n, std::span<const int> table) {
  check_arrow_input(n, table);
  const std::size_t np = std::size_t{1} << n;
  std::vector<Word> cells(np * np, 0);
  for (std::size_t a = 0; a < np; ++a) fill_arrow_row(n, table, a, cells);
  return cells;
}

}  // namespace serial

namespace parallel {

int max_threads() { return omp_get_max_threads(); }

std::vector<std::size_t> maximal_sets(std::span<const Bitset> sets) {
  const auto n = static_cast<std::int64_t>(sets.size());
  std::vector<char> keep(sets.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) keep[static_cast<std::size_t>(i)] = dominated(sets, static_cast<std::size_t>(i)) ? 0 : 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (keep[i]) out.push_back(i);
  return out;
}

std::optional<std::uint64_t> first_family_without_bound(UpRows up, BoundKind kind) {
  const std::uint64_t total = family_count(up);
  constexpr std::uint64_t kBlock = std::uint64_t{1} << 14;
  for (std::uint64_t lo = 0; lo < total; lo += kBlock) {
    const std::uint64_t hi = std::min(total, lo + kBlock);
    std::uint64_t found = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for reduction(min : found) schedule(static)
    for (std::uint64_t fam = lo; fam < hi; ++fam)
      if (fam < found && !has_bound(up, fam, kind)) found = fam;
    if (found != std::numeric_limits<std::uint64_t>::max()) return found;
  }
  return std::nullopt;
}

std::vector<std::size_t> composition_table(const PRStructure& s, std::size_t fallback) {
  const auto rows = successor_rows(s);
  const std::size_t nr = s.num_reals();
  std::vector<std::size_t> out(nr * nr);
  const auto total = static_cast<std::int64_t>(nr * nr);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t k = 0; k < total; ++k) {
    const auto u = static_cast<std::size_t>(k);
    out[u] = compose_one(s, rows, u % nr, u / nr, fallback);
  }
  return out;
}

std::vector<Word> arrow_cells(std::size_t n, std::span<const int> table) {
  check_arrow_input(n, table);
  const std::size_t np = std::size_t{1} << n;
  std::vector<Word> cells(np * np, 0);
  const auto total = static_cast<std::int64_t>(np);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t a = 0; a < total; ++a) fill_arrow_row(n, table, static_cast<std::size_t>(a), cells);
  return cells;
}

}  // namespace parallel

}  // namespace prkit
