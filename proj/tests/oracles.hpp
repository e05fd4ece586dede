#pragma once

// Test-side reference computations. These work from the definitions with
// plain loops and never call the library's deciders.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "prkit/core.hpp"

namespace oracle {

using prkit::PRStructure;

inline std::size_t np(const PRStructure& s) { return s.num_props(); }

inline bool in_cell(const PRStructure& s, std::size_t a, std::size_t b, std::size_t r) {
  return s.realizes(prkit::real(r), prkit::prop(a), prkit::prop(b));
}

// Some realizer lies in rho(a, b) for every pair of the list.
inline bool common_realizer(const PRStructure& s, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  for (std::size_t r = 0; r < s.num_reals(); ++r) {
    bool all = true;
    for (auto [a, b] : pairs) all = all && in_cell(s, a, b, r);
    if (all) return true;
  }
  return false;
}

// Pair-set T ⊆ P×P given as a mask over a*|P|+b.
inline std::vector<std::pair<std::size_t, std::size_t>> pairs_of(const PRStructure& s, std::uint64_t mask) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < np(s) * np(s); ++p)
    if ((mask >> p) & 1U) out.emplace_back(p / np(s), p % np(s));
  return out;
}

inline bool pairset(const PRStructure& s, std::uint64_t mask) { return common_realizer(s, pairs_of(s, mask)); }

// Signature of ⊢ over all pair-sets; equal signatures mean equal ⊢_I for all I.
inline std::vector<bool> signature(const PRStructure& s) {
  const std::uint64_t n = std::uint64_t{1} << (np(s) * np(s));
  std::vector<bool> out(n);
  for (std::uint64_t m = 0; m < n; ++m) out[m] = pairset(s, m);
  return out;
}

inline bool pointwise(const PRStructure& s) {
  const std::uint64_t n = std::uint64_t{1} << (np(s) * np(s));
  for (std::uint64_t m = 0; m < n; ++m) {
    bool each = true;
    for (auto pr : pairs_of(s, m)) each = each && common_realizer(s, {pr});
    if (each != pairset(s, m)) return false;
  }
  return true;
}

// Every fiber reflexive and transitive. A family over any I is determined, for
// these clauses, by the set of tuples it takes: sets D ⊆ P for reflexivity and
// sets T ⊆ P³ for transitivity.
inline bool preorderal(const PRStructure& s) {
  const std::size_t n = np(s);
  for (std::uint64_t d = 0; d < (std::uint64_t{1} << n); ++d) {
    std::vector<std::pair<std::size_t, std::size_t>> diag;
    for (std::size_t a = 0; a < n; ++a)
      if ((d >> a) & 1U) diag.emplace_back(a, a);
    if (!common_realizer(s, diag)) return false;
  }
  const std::size_t triples = n * n * n;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << triples); ++t) {
    std::vector<std::pair<std::size_t, std::size_t>> ab, bc, ac;
    for (std::size_t k = 0; k < triples; ++k)
      if ((t >> k) & 1U) {
        const std::size_t a = k / (n * n), b = (k / n) % n, c = k % n;
        ab.emplace_back(a, b);
        bc.emplace_back(b, c);
        ac.emplace_back(a, c);
      }
    if (common_realizer(s, ab) && common_realizer(s, bc) && !common_realizer(s, ac)) return false;
  }
  return true;
}

// φ ⊢ ψ and ψ ⊢ φ force φ = ψ in every fiber.
inline bool antisymmetric_fibers(const PRStructure& s) {
  const std::size_t n = np(s);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) {
    const auto fwd = pairs_of(s, m);
    std::vector<std::pair<std::size_t, std::size_t>> back;
    bool diagonal = true;
    for (auto [a, b] : fwd) {
      back.emplace_back(b, a);
      diagonal = diagonal && a == b;
    }
    if (!diagonal && common_realizer(s, fwd) && common_realizer(s, back)) return false;
  }
  return true;
}

inline bool posetal(const PRStructure& s) { return preorderal(s) && antisymmetric_fibers(s); }

// Tuples of P^k, first coordinate least significant.
inline std::vector<std::size_t> tuple(std::size_t code, std::size_t n, std::size_t k) {
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) {
    t[i] = code % n;
    code /= n;
  }
  return t;
}

inline bool fiber_entails(const PRStructure& s, const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < x.size(); ++i) pairs.emplace_back(x[i], y[i]);
  return common_realizer(s, pairs);
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

// Posetal, and for every k ≤ |P| the fiber P^k has a least and a greatest
// element, both preserved by every reindexing map [k2] → [k] with k2 ≤ |P|.
inline bool bounded_posetal(const PRStructure& s) {
  if (!posetal(s)) return false;
  const std::size_t n = np(s);
  std::vector<std::vector<std::size_t>> mins(n + 1), maxs(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t f = ipow(n, k);
    bool found_min = false, found_max = false;
    for (std::size_t e = 0; e < f; ++e) {
      bool is_min = true, is_max = true;
      for (std::size_t x = 0; x < f; ++x) {
        is_min = is_min && fiber_entails(s, tuple(e, n, k), tuple(x, n, k));
        is_max = is_max && fiber_entails(s, tuple(x, n, k), tuple(e, n, k));
      }
      if (is_min && !found_min) {
        mins[k] = tuple(e, n, k);
        found_min = true;
      }
      if (is_max && !found_max) {
        maxs[k] = tuple(e, n, k);
        found_max = true;
      }
    }
    if (!found_min || !found_max) return false;
  }
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t k2 = 1; k2 <= n; ++k2)
      for (std::size_t code = 0; code < ipow(k, k2); ++code) {
        const auto m = tuple(code, k, k2);
        std::vector<std::size_t> pm(k2), pM(k2);
        for (std::size_t i = 0; i < k2; ++i) {
          pm[i] = mins[k][m[i]];
          pM[i] = maxs[k][m[i]];
        }
        if (pm != mins[k2] || pM != maxs[k2]) return false;
      }
  return true;
}

// Calls f on every structure with the given sizes (realizer bit r of cell p
// is bit p*nr + r of the code).
inline void for_each_structure(std::size_t props, std::size_t reals, const std::function<void(const PRStructure&)>& f) {
  const std::size_t bits = props * props * reals;
  std::vector<std::string> pn, rn;
  for (std::size_t i = 0; i < props; ++i) pn.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < reals; ++i) rn.push_back("r" + std::to_string(i));
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    PRStructure::Builder b(pn, rn);
    for (std::size_t k = 0; k < bits; ++k)
      if ((code >> k) & 1U) b.add((k / reals) / props, (k / reals) % props, k % reals);
    f(std::move(b).build());
  }
}

// Partial application by brute force: {r | r·a ∈ B for all a ∈ A}.
inline std::uint64_t arrow(const std::vector<int>& table, std::size_t n, std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x)
      if ((a >> x) & 1U) {
        const int v = table[r * n + x];
        ok = ok && v >= 0 && ((b >> v) & 1U);
      }
    if (ok) out |= std::uint64_t{1} << r;
  }
  return out;
}

}  // namespace oracle
