#include "prkit/completeness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>

namespace prkit {

const char* to_string(SupremumResult::Clause c) {
  switch (c) {
    case SupremumResult::Clause::not_upper_bound: return "not-upper-bound";
    case SupremumResult::Clause::not_least: return "not-least";
    case SupremumResult::Clause::adjoint_mismatch: return "adjoint-mismatch";
  }
  return "?";
}

const char* to_string(IncompletenessCertificate::Clause c) {
  switch (c) {
    case IncompletenessCertificate::Clause::not_upper_bound: return "not-upper-bound";
    case IncompletenessCertificate::Clause::misses_singleton_bound: return "misses-singleton-bound";
    case IncompletenessCertificate::Clause::refuted_by_extension: return "refuted-by-extension";
  }
  return "?";
}

SupremumResult find_supremum(const BinRel& rel, std::span<const std::size_t> family, std::size_t max_carrier) {
  const std::size_t n = rel.size();
  if (n > max_carrier)
    fail(ErrorKind::budget_exceeded, "carrier of " + std::to_string(n) + " elements exceeds " + std::to_string(max_carrier));
  SupremumResult out;
  for (std::size_t a : family) {
    if (a >= n) fail(ErrorKind::malformed_input, "family member out of range");
    out.family.push_back(a);
  }

  // ub = common upper bounds of the family.
  Bitset ub(n, true);
  for (std::size_t a : out.family) ub &= rel.row(a);

  using Clause = SupremumResult::Clause;
  for (std::size_t b = 0; b < n; ++b) {
    if (!ub.test(b)) {
      std::size_t member = 0;
      for (std::size_t a : out.family)
        if (!rel.related(a, b)) {
          member = a;
          break;
        }
      out.refutations.push_back({b, Clause::not_upper_bound, member});
    } else {
      std::size_t bad = bits::npos;
      for (std::size_t c : ub.elements())
        if (!rel.related(b, c)) {
          bad = c;
          break;
        }
      if (bad == bits::npos)
        out.suprema.push_back(b);
      else
        out.refutations.push_back({b, Clause::not_least, bad});
    }
    std::size_t mismatch = bits::npos;
    for (std::size_t c = 0; c < n && mismatch == bits::npos; ++c)
      if (ub.test(c) != rel.related(b, c)) mismatch = c;
    if (mismatch == bits::npos)
      out.adjoint_suprema.push_back(b);
    else
      out.refutations.push_back({b, Clause::adjoint_mismatch, mismatch});
  }
  return out;
}

BoundNotionsReport compare_bound_notions(const BinRel& rel, std::span<const std::size_t> family) {
  const SupremumResult res = find_supremum(rel, family, rel.size());
  BoundNotionsReport rep;
  rep.reflexive = rel.is_reflexive();
  rep.transitive = rel.is_transitive();
  rep.suprema = res.suprema.size();
  rep.adjoint_suprema = res.adjoint_suprema.size();
  auto contains = [](const std::vector<std::size_t>& v, std::size_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  for (std::size_t b : res.suprema) rep.suprema_are_adjoint = rep.suprema_are_adjoint && contains(res.adjoint_suprema, b);
  for (std::size_t b : res.adjoint_suprema) rep.adjoint_are_suprema = rep.adjoint_are_suprema && contains(res.suprema, b);
  for (std::size_t b : res.suprema)
    for (std::size_t c : res.suprema)
      if (!rel.related(b, c)) rep.unique_up_to_equivalence = false;

  if (rep.transitive && !rep.suprema_are_adjoint)
    fail(ErrorKind::invariant_violation, "transitive relation with a supremum that is not an adjoint-supremum");
  if (rep.reflexive && !rep.adjoint_are_suprema)
    fail(ErrorKind::invariant_violation, "reflexive relation with an adjoint-supremum that is not a supremum");
  if (rep.reflexive && rep.transitive && !rep.unique_up_to_equivalence)
    fail(ErrorKind::invariant_violation, "preorder with two suprema that are not equivalent");
  return rep;
}

BinRel fiber_relation(const Fiber& fiber) {
  std::vector<std::string> labels;
  labels.reserve(fiber.size());
  for (std::size_t e = 0; e < fiber.size(); ++e) labels.push_back(fiber.label(e));
  BinRel rel(std::move(labels));
  for (std::size_t x = 0; x < fiber.size(); ++x)
    for (std::size_t y : fiber.above(x).elements()) rel.relate(x, y);
  return rel;
}

namespace {

CompletenessResult sweep(std::span<const std::uint64_t> up, BoundKind kind, std::uint64_t max_families) {
  const std::size_t f = up.size();
  if (f > 63) fail(ErrorKind::budget_exceeded, "fiber of " + std::to_string(f) + " elements exceeds 63");
  const std::uint64_t total = std::uint64_t{1} << f;
  if (total > max_families)
    fail(ErrorKind::budget_exceeded,
         std::to_string(total) + " families exceed the budget of " + std::to_string(max_families));
  CompletenessResult out;
  const auto found = parallel::first_family_without_bound(up, kind);
  if (!found) {
    out.families = total;
    return out;
  }
  out.complete = false;
  out.families = *found + 1;
  std::vector<std::size_t> members;
  for (std::uint64_t m = *found; m != 0; m &= m - 1) members.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  out.counterexample = std::move(members);
  return out;
}

}  // namespace

CompletenessResult is_fiber_complete(const PRStructure& s, std::size_t index_size, BoundKind kind,
                                     std::uint64_t max_families, std::size_t max_fiber_size) {
  const Fiber fb(s, index_size, std::min<std::size_t>(max_fiber_size, 63));
  std::vector<std::uint64_t> up(fb.size());
  for (std::size_t x = 0; x < fb.size(); ++x) up[x] = fb.above(x).words()[0];
  return sweep(up, kind, max_families);
}

CompletenessResult is_complete(const BinRel& rel, BoundKind kind, std::uint64_t max_families) {
  if (rel.size() > 63) fail(ErrorKind::budget_exceeded, "carrier exceeds 63 elements");
  std::vector<std::uint64_t> up(rel.size());
  for (std::size_t x = 0; x < rel.size(); ++x) up[x] = rel.row(x).words()[0];
  return sweep(up, kind, max_families);
}

namespace {

void check_blocks(const PAS& pas, std::span<const Subset> blocks) {
  const Subset all = pas.size() == 64 ? ~Subset{0} : (Subset{1} << pas.size()) - 1;
  Subset seen = 0;
  for (Subset b : blocks) {
    if (b == 0) fail(ErrorKind::precondition, "blocks must be nonempty");
    if ((b & ~all) != 0) fail(ErrorKind::malformed_input, "block names elements outside the carrier");
    if ((b & seen) != 0) fail(ErrorKind::precondition, "blocks must be pairwise disjoint");
    seen |= b;
  }
}

// Advances `values` to the next tuple in lexicographic order; false on wrap.
bool next_tuple(std::vector<std::size_t>& values, std::size_t radix) {
  for (std::size_t i = values.size(); i-- > 0;) {
    if (++values[i] < radix) return true;
    values[i] = 0;
  }
  return false;
}

}  // namespace

std::uint64_t count_block_constant_functions(const PAS& pas, std::span<const Subset> blocks) {
  check_blocks(pas, blocks);
  std::uint64_t count = 0;
  std::vector<std::size_t> values(blocks.size(), 0);
  do {
    ++count;
  } while (next_tuple(values, pas.size()));
  return count;
}

bool is_representable(const PAS& pas, std::span<const Subset> blocks, std::span<const std::size_t> values) {
  if (values.size() != blocks.size()) fail(ErrorKind::malformed_input, "one value per block expected");
  for (std::size_t r = 0; r < pas.size(); ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < blocks.size() && ok; ++i)
      for (Subset m = blocks[i]; m != 0 && ok; m &= m - 1)
        ok = pas.apply(r, static_cast<std::size_t>(std::countr_zero(m))) == values[i];
    if (ok) return true;
  }
  return false;
}

std::optional<std::vector<std::size_t>> nonrepresentable_function(const PAS& pas, std::span<const Subset> blocks) {
  check_blocks(pas, blocks);
  std::vector<std::size_t> values(blocks.size(), 0);
  do {
    if (!is_representable(pas, blocks, values)) return values;
  } while (next_tuple(values, pas.size()));
  return std::nullopt;
}

bool power_entails(const PAS& pas, const PowerTuple& phi, const PowerTuple& psi) {
  const std::size_t n = pas.size();
  if (phi.size() != n || psi.size() != n) fail(ErrorKind::malformed_input, "tuple length must equal the carrier size");
  Subset acc = n == 64 ? ~Subset{0} : (Subset{1} << n) - 1;
  for (std::size_t x = 0; x < n && acc != 0; ++x) acc &= arrow_set(pas, phi[x], psi[x]);
  return acc != 0;
}

namespace {

using Cert = IncompletenessCertificate;

PowerTuple decode_candidate(std::uint64_t code, std::size_t n) {
  // Lexicographic: the first coordinate is the most significant digit.
  PowerTuple psi(n);
  for (std::size_t x = n; x-- > 0;) {
    psi[x] = code & ((Subset{1} << n) - 1);
    code >>= n;
  }
  return psi;
}

Cert::Entry refute(const PAS& pas, std::size_t r, const std::vector<PowerTuple>& family,
                   const std::vector<std::size_t>& domain, const PowerTuple& sgl, PowerTuple psi) {
  const std::size_t n = pas.size();
  Cert::Entry e;
  e.candidate = std::move(psi);
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!power_entails(pas, family[i], e.candidate)) {
      e.clause = Cert::Clause::not_upper_bound;
      e.member = domain[i];
      return e;
    }
  if (!power_entails(pas, e.candidate, sgl)) {
    e.clause = Cert::Clause::misses_singleton_bound;
    e.refuter = sgl;
    return e;
  }

  // ψ'(b) = ⋃ {ψ(a) | r·a = b}, one block per b ∈ Im(r).
  std::vector<std::size_t> image;
  for (Subset m = pas.image(r); m != 0; m &= m - 1) image.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  std::vector<Subset> blocks(image.size(), 0);
  for (std::size_t a : domain) {
    const std::size_t b = *pas.apply(r, a);
    const auto pos = static_cast<std::size_t>(std::find(image.begin(), image.end(), b) - image.begin());
    blocks[pos] |= e.candidate[a];
  }
  const auto phi = nonrepresentable_function(pas, blocks);
  if (!phi) fail(ErrorKind::invariant_violation, "every block-constant function is representable");

  PowerTuple tilde(n, 0);
  for (std::size_t a : domain)
    for (Subset m = e.candidate[a]; m != 0; m &= m - 1) {
      const std::size_t x = static_cast<std::size_t>(std::countr_zero(m));
      for (std::size_t i = 0; i < blocks.size(); ++i)
        if ((blocks[i] >> x) & 1U) tilde[a] |= Subset{1} << (*phi)[i];
    }
  for (const auto& member : family)
    if (!power_entails(pas, member, tilde))
      fail(ErrorKind::invariant_violation, "constructed element is not an upper bound of the family");
  if (power_entails(pas, e.candidate, tilde))
    fail(ErrorKind::invariant_violation, "candidate entails the constructed element");
  e.clause = Cert::Clause::refuted_by_extension;
  e.refuter = std::move(tilde);
  e.blocks = std::move(blocks);
  e.block_values = *phi;
  return e;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > (std::uint64_t{1} << 62) / std::max<std::uint64_t>(base, 1)) return ~std::uint64_t{0};
    out *= base;
  }
  return out;
}

void build_family(const PAS& pas, std::size_t r, Cert& cert) {
  const std::size_t n = pas.size();
  for (Subset m = pas.domain(r); m != 0; m &= m - 1) {
    const std::size_t a = static_cast<std::size_t>(std::countr_zero(m));
    cert.domain.push_back(a);
    PowerTuple phi(n, 0);
    phi[a] = Subset{1} << a;
    cert.family.push_back(std::move(phi));
  }
}

PowerTuple singleton_map(const PAS& pas, std::size_t r) {
  PowerTuple sgl(pas.size(), 0);
  for (std::size_t x = 0; x < pas.size(); ++x)
    if (auto v = pas.apply(r, x)) sgl[x] = Subset{1} << *v;
  return sgl;
}

}  // namespace

IncompletenessCertificate incompleteness_witness(const PAS& pas, std::size_t r, std::uint64_t max_candidates) {
  const std::size_t n = pas.size();
  if (r >= n) fail(ErrorKind::malformed_input, "realizer out of range");
  if (!is_totally_matching(pas)) fail(ErrorKind::precondition, "structure is not totally matching");
  const std::size_t im = static_cast<std::size_t>(std::popcount(pas.image(r)));
  if (checked_pow(n, im) <= n)
    fail(ErrorKind::precondition, "|R|^|Im(r)| does not exceed |R| for realizer '" + pas.names()[r] + "'");
  if (n * n > 63 || checked_pow(2, n * n) > max_candidates)
    fail(ErrorKind::budget_exceeded, "candidate space 2^" + std::to_string(n * n) + " exceeds the budget of " +
                                         std::to_string(max_candidates));

  Cert cert;
  cert.realizer = r;
  build_family(pas, r, cert);
  const PowerTuple sgl = singleton_map(pas, r);

  const std::uint64_t total = std::uint64_t{1} << (n * n);
  cert.entries.resize(total);
  std::atomic<bool> failed{false};
  std::string message;
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(total); ++c) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      cert.entries[static_cast<std::size_t>(c)] =
          refute(pas, r, cert.family, cert.domain, sgl, decode_candidate(static_cast<std::uint64_t>(c), n));
    } catch (const Error& err) {
#pragma omp critical(prkit_certificate_error)
      if (!failed.exchange(true)) message = err.what();
    }
  }
  if (failed) fail(ErrorKind::invariant_violation, message);
  return cert;
}

bool verify_certificate(const PAS& pas, const IncompletenessCertificate& cert) {
  const std::size_t n = pas.size();
  const std::size_t r = cert.realizer;
  if (r >= n || n * n > 63) return false;

  Cert fresh;
  build_family(pas, r, fresh);
  if (fresh.domain != cert.domain || fresh.family != cert.family) return false;
  if (cert.entries.size() != (std::uint64_t{1} << (n * n))) return false;
  const PowerTuple sgl = singleton_map(pas, r);

  for (std::size_t c = 0; c < cert.entries.size(); ++c) {
    const auto& e = cert.entries[c];
    if (e.candidate != decode_candidate(c, n)) return false;
    switch (e.clause) {
      case Cert::Clause::not_upper_bound: {
        const auto it = std::find(cert.domain.begin(), cert.domain.end(), e.member);
        if (it == cert.domain.end()) return false;
        if (power_entails(pas, cert.family[static_cast<std::size_t>(it - cert.domain.begin())], e.candidate))
          return false;
        break;
      }
      case Cert::Clause::misses_singleton_bound:
      case Cert::Clause::refuted_by_extension:
        if (e.refuter.size() != n) return false;
        for (const auto& member : cert.family)
          if (!power_entails(pas, member, e.refuter)) return false;
        if (power_entails(pas, e.candidate, e.refuter)) return false;
        if (e.clause == Cert::Clause::misses_singleton_bound && e.refuter != sgl) return false;
        break;
    }
  }
  return true;
}

}  // namespace prkit
