#include "prkit/catalog.hpp"

#include <random>
#include <string>

namespace prkit {

PRStructure sigma_from_bin(const BinRel& b) {
  PRStructure::Builder out(b.names(), {"*"});
  for (auto [x, y] : b.pairs()) out.add(x, y, 0);
  return std::move(out).build();
}

namespace {

std::vector<std::string> numbered(std::size_t first, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::to_string(first + i));
  return out;
}

PAS table_magma(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  if (n == 0) fail(ErrorKind::malformed_input, "carrier size must be positive");
  std::vector<int> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<int>(op(x, y));
  return PAS(numbered(0, n), std::move(table));
}

}  // namespace

PRStructure sigma_n(std::size_t n) {
  if (n == 0) fail(ErrorKind::malformed_input, "sigma_n needs n >= 1");
  auto names = numbered(1, n);
  PRStructure::Builder b(names, names);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t x = 1; x <= n; ++x)
        if ((i == j && j <= x) || (i == x && x < j)) b.add(i - 1, j - 1, x - 1);
  return std::move(b).build();
}

PRStructure two_element_lattical() {
  PRStructure::Builder b({"bot", "top"}, {"b", "i", "t"});
  constexpr std::size_t bot = 0, top = 1, rb = 0, ri = 1, rt = 2;
  b.add(bot, bot, rb).add(bot, bot, ri);
  b.add(bot, top, rb).add(bot, top, rt);
  b.add(top, top, ri).add(top, top, rt);
  return std::move(b).build();
}

PAS cyclic_group(std::size_t n) {
  return table_magma(n, [n](std::size_t x, std::size_t y) { return (x + y) % n; });
}

PAS klein_group() {
  std::vector<int> table(16);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) table[x * 4 + y] = static_cast<int>(x ^ y);
  return PAS({"00", "01", "10", "11"}, std::move(table));
}

PAS right_projection_magma(std::size_t n) {
  return table_magma(n, [](std::size_t, std::size_t y) { return y; });
}

PAS left_projection_magma(std::size_t n) {
  return table_magma(n, [](std::size_t x, std::size_t) { return x; });
}

PAS constant_magma(std::size_t n, std::size_t c) {
  if (c >= n) fail(ErrorKind::malformed_input, "constant outside the carrier");
  return table_magma(n, [c](std::size_t, std::size_t) { return c; });
}

namespace {

// base^exp, or 0 if it exceeds `cap`.
std::uint64_t bounded_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / base) return 0;
    out *= base;
  }
  return out;
}

PRStructure pr_from_digits(std::size_t np, std::size_t nr, const std::vector<Word>& cells) {
  PRStructure::Builder b(numbered(0, np), numbered(0, nr));
  b.set_cells(cells);
  return std::move(b).build();
}

PAS magma_from_digits(std::size_t n, const std::vector<int>& table) { return PAS(numbered(0, n), table); }

}  // namespace

StructureEnumerator::StructureEnumerator(GeneratorSpec spec) : spec_(spec) {
  const bool pr = spec_.family == GeneratedFamily::pr_structure;
  if (pr) {
    if (spec_.min_props == 0 || spec_.min_reals == 0 || spec_.min_props > spec_.max_props ||
        spec_.min_reals > spec_.max_reals)
      fail(ErrorKind::malformed_input, "proposition and realizer bounds must satisfy 1 <= min <= max");
    if (spec_.max_reals > 64) fail(ErrorKind::budget_exceeded, "generated structures are limited to 64 realizers");
  } else if (spec_.carrier == 0 || spec_.carrier > 64) {
    fail(ErrorKind::malformed_input, "carrier size must lie in 1..64");
  }

  if (spec_.kind == GeneratorKind::random) {
    if (spec_.limit == 0) fail(ErrorKind::malformed_input, "random generation needs a positive count limit");
    total_ = spec_.limit;
    return;
  }

  auto push = [&](std::size_t p, std::size_t r, std::uint64_t count) {
    if (count == 0 || total_ + count > kMaxEnumeration)
      fail(ErrorKind::budget_exceeded, "exhaustive space exceeds " + std::to_string(kMaxEnumeration) + " items");
    blocks_.push_back({p, r, total_, count});
    total_ += count;
  };
  if (pr) {
    for (std::size_t p = spec_.min_props; p <= spec_.max_props; ++p)
      for (std::size_t r = spec_.min_reals; r <= spec_.max_reals; ++r) {
        if (r * p * p >= 63) fail(ErrorKind::budget_exceeded, "exhaustive space exceeds 2^63 tables");
        push(p, r, bounded_pow(2, r * p * p, kMaxEnumeration));
      }
  } else {
    const std::size_t n = spec_.carrier;
    const std::uint64_t radix = spec_.family == GeneratedFamily::partial_magma ? n + 1 : n;
    push(0, 0, bounded_pow(radix, n * n, kMaxEnumeration));
  }
  if (spec_.limit != 0 && total_ > spec_.limit)
    fail(ErrorKind::budget_exceeded,
         "exhaustive space of " + std::to_string(total_) + " items exceeds the limit " + std::to_string(spec_.limit));
}

Generated StructureEnumerator::at(std::uint64_t i) const {
  if (i >= total_) fail(ErrorKind::malformed_input, "enumeration index out of range");
  const bool pr = spec_.family == GeneratedFamily::pr_structure;
  const std::size_t n = spec_.carrier;

  if (spec_.kind == GeneratorKind::random) {
    std::seed_seq seq{static_cast<std::uint32_t>(spec_.seed), static_cast<std::uint32_t>(spec_.seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    if (pr) {
      std::uniform_int_distribution<std::size_t> props(spec_.min_props, spec_.max_props);
      std::uniform_int_distribution<std::size_t> reals(spec_.min_reals, spec_.max_reals);
      const std::size_t np = props(rng);
      const std::size_t nr = reals(rng);
      const Word mask = nr == 64 ? ~Word{0} : (Word{1} << nr) - 1;
      std::vector<Word> cells(np * np);
      for (auto& c : cells) c = rng() & mask;
      return pr_from_digits(np, nr, cells);
    }
    const int lo = spec_.family == GeneratedFamily::partial_magma ? -1 : 0;
    std::uniform_int_distribution<int> value(lo, static_cast<int>(n) - 1);
    std::vector<int> table(n * n);
    for (auto& v : table) v = value(rng);
    return magma_from_digits(n, table);
  }

  std::size_t k = 0;
  while (i >= blocks_[k].first + blocks_[k].count) ++k;
  std::uint64_t code = i - blocks_[k].first;
  if (pr) {
    const std::size_t np = blocks_[k].props;
    const std::size_t nr = blocks_[k].reals;
    const Word mask = (Word{1} << nr) - 1;
    std::vector<Word> cells(np * np);
    for (std::size_t c = cells.size(); c-- > 0;) {
      cells[c] = code & mask;
      code >>= nr;
    }
    return pr_from_digits(np, nr, cells);
  }
  const bool partial = spec_.family == GeneratedFamily::partial_magma;
  const std::uint64_t radix = partial ? n + 1 : n;
  std::vector<int> table(n * n);
  for (std::size_t c = table.size(); c-- > 0;) {
    table[c] = static_cast<int>(code % radix) - (partial ? 1 : 0);
    code /= radix;
  }
  return magma_from_digits(n, table);
}

void enumerate_structures(const GeneratorSpec& spec,
                          const std::function<bool(std::uint64_t, const Generated&)>& sink) {
  const StructureEnumerator en(spec);
  for (std::uint64_t i = 0; i < en.size(); ++i)
    if (!sink(i, en.at(i))) return;
}

}  // namespace prkit
