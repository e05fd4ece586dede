#include "prkit/appstruct.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "prkit/kernels.hpp"
#include "prkit/order.hpp"

namespace prkit {

PAS::PAS(std::vector<std::string> carrier, std::vector<int> table) : names_(std::move(carrier)), table_(std::move(table)) {
  if (names_.empty()) fail(ErrorKind::malformed_input, "carrier must be nonempty");
  if (names_.size() > 64) fail(ErrorKind::budget_exceeded, "carrier larger than 64 elements");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size())
    fail(ErrorKind::malformed_input, "duplicate carrier names");
  if (table_.size() != names_.size() * names_.size()) fail(ErrorKind::malformed_input, "application table size mismatch");
  for (int v : table_)
    if (v < -1 || v >= static_cast<int>(names_.size())) fail(ErrorKind::malformed_input, "application value out of range");
}

std::size_t PAS::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) fail(ErrorKind::malformed_input, "unknown carrier element '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

std::optional<std::size_t> PAS::apply(std::size_t x, std::size_t y) const {
  if (x >= size() || y >= size()) fail(ErrorKind::malformed_input, "application argument out of range");
  const int v = table_[x * size() + y];
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

bool PAS::is_total() const {
  return std::none_of(table_.begin(), table_.end(), [](int v) { return v < 0; });
}

Subset PAS::domain(std::size_t r) const {
  Subset d = 0;
  for (std::size_t x = 0; x < size(); ++x)
    if (table_[r * size() + x] >= 0) d |= Subset{1} << x;
  return d;
}

Subset PAS::image(std::size_t r) const {
  Subset im = 0;
  for (std::size_t x = 0; x < size(); ++x)
    if (const int v = table_[r * size() + x]; v >= 0) im |= Subset{1} << v;
  return im;
}

Subset arrow_set(const PAS& pas, Subset a, Subset b) {
  Subset out = 0;
  for (std::size_t r = 0; r < pas.size(); ++r) {
    bool ok = true;
    for (Subset m = a; m != 0 && ok; m &= m - 1) {
      const auto v = pas.apply(r, static_cast<std::size_t>(std::countr_zero(m)));
      ok = v && ((b >> *v) & 1U);
    }
    if (ok) out |= Subset{1} << r;
  }
  return out;
}

std::string subset_name(const std::vector<std::string>& carrier, Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x = 0; x < carrier.size(); ++x)
    if ((s >> x) & 1U) {
      if (!first) out += ",";
      out += carrier[x];
      first = false;
    }
  return out + "}";
}

namespace {

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    fail(ErrorKind::budget_exceeded, std::string(what) + " has " + std::to_string(n) + " elements, above --max-carrier " +
                                         std::to_string(cap));
}

std::vector<std::string> all_subset_names(const std::vector<std::string>& carrier) {
  std::vector<std::string> out;
  for (Subset s = 0; s < (Subset{1} << carrier.size()); ++s) out.push_back(subset_name(carrier, s));
  return out;
}

// Arrow cells of `super`, with realizer bits moved to sub positions.
std::vector<Word> pulled_arrow_cells(const SubPASPair& sp) {
  auto cells = parallel::arrow_cells(sp.super.size(), sp.super.table());
  for (Word& w : cells) {
    Word out = 0;
    for (std::size_t r = 0; r < sp.sub.size(); ++r)
      if ((w >> sp.embedding[r]) & 1U) out |= Word{1} << r;
    w = out;
  }
  return cells;
}

}  // namespace

PRStructure induce_sigma(const PAS& pas, std::size_t max_carrier) {
  check_cap(pas.size(), std::min<std::size_t>(max_carrier, 20), "carrier");
  PRStructure::Builder b(all_subset_names(pas.names()), pas.names());
  b.set_cells(parallel::arrow_cells(pas.size(), pas.table()));
  return std::move(b).build();
}

std::optional<PasPreorderWitness> pas_preorder_witness(const PAS& pas) {
  const std::size_t n = pas.size();
  std::optional<std::size_t> identity;
  for (std::size_t i = 0; i < n && !identity; ++i) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = pas.apply(i, a) == a;
    if (ok) identity = i;
  }
  if (!identity) return std::nullopt;

  PasPreorderWitness w{*identity, std::vector<std::size_t>(n * n)};
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t r = 0; r < n; ++r) {
      std::optional<std::size_t> found;
      for (std::size_t t = 0; t < n && !found; ++t) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
          const auto ra = pas.apply(r, a);
          if (!ra) continue;
          const auto sra = pas.apply(s, *ra);
          if (sra) ok = pas.apply(t, a) == sra;
        }
        if (ok) found = t;
      }
      if (!found) return std::nullopt;
      w.composition[s * n + r] = *found;
    }
  return w;
}

bool orbit_condition(const PAS& pas, std::size_t r, std::size_t s) {
  if (pas.apply(r, s) == s) return true;
  std::vector<bool> seen(pas.size(), false);
  std::size_t x = s;
  // A repetition-free orbit in an n-element carrier leaves it within n steps.
  for (std::size_t step = 0; step <= pas.size(); ++step) {
    if (seen[x]) return false;
    seen[x] = true;
    const auto next = pas.apply(r, x);
    if (!next) return true;
    x = *next;
  }
  return false;
}

bool check_orbit_theorem(const PAS& pas, std::size_t max_carrier) {
  const PRStructure sigma = induce_sigma(pas, max_carrier);
  const std::size_t n = pas.size();
  const Subset full = (Subset{1} << n) - 1;
  bool ok = true;

  if (is_posetal(sigma)) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) ok = ok && orbit_condition(pas, r, s);
      if (pas.domain(r) == full)
        for (std::size_t x = 0; x < n; ++x) ok = ok && pas.apply(r, x) == x;
    }
  }

  if (is_preorderal(sigma)) {
    // Total represented maps: contain the identity and compose.
    std::set<std::vector<std::size_t>> total_maps;
    for (std::size_t r = 0; r < n; ++r) {
      if (pas.domain(r) != full) continue;
      std::vector<std::size_t> f(n);
      for (std::size_t x = 0; x < n; ++x) f[x] = *pas.apply(r, x);
      total_maps.insert(std::move(f));
    }
    std::vector<std::size_t> id(n);
    for (std::size_t x = 0; x < n; ++x) id[x] = x;
    ok = ok && total_maps.count(id) == 1;
    for (const auto& f : total_maps)
      for (const auto& g : total_maps) {
        std::vector<std::size_t> gf(n);
        for (std::size_t x = 0; x < n; ++x) gf[x] = g[f[x]];
        ok = ok && total_maps.count(gf) == 1;
      }
    // Every [s]∘[r] is extended by some [t].
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        bool extended = false;
        for (std::size_t t = 0; t < n && !extended; ++t) {
          bool ext = true;
          for (std::size_t a = 0; a < n && ext; ++a) {
            const auto ra = pas.apply(r, a);
            const auto sra = ra ? pas.apply(s, *ra) : std::nullopt;
            if (sra) ext = pas.apply(t, a) == sra;
          }
          extended = ext;
        }
        ok = ok && extended;
      }
  }
  return ok;
}

bool is_totally_matching(const PAS& pas) {
  const std::size_t n = pas.size();
  const Subset full = (Subset{1} << n) - 1;
  for (std::size_t x = 0; x < n; ++x) {
    Subset reached = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (const auto v = pas.apply(r, x)) reached |= Subset{1} << *v;
    if (reached != full) return false;
  }
  return true;
}

bool magma_posetal_check(const PAS& pas, std::size_t max_carrier) {
  if (!pas.is_total()) fail(ErrorKind::precondition, "magma check needs a total application table");
  bool right_projection = true;
  for (std::size_t x = 0; x < pas.size(); ++x)
    for (std::size_t y = 0; y < pas.size(); ++y) right_projection = right_projection && pas.apply(x, y) == y;
  const bool posetal = is_posetal(induce_sigma(pas, max_carrier));
  if (posetal != right_projection)
    fail(ErrorKind::invariant_violation, "posetal induced structure disagrees with the right-projection test");
  return right_projection;
}

std::optional<Pairing> find_pairing(const PAS& pas) {
  const std::size_t n = pas.size();
  for (std::size_t p = 0; p < n; ++p) {
    // pairs[a0*n+a1] = (p·a0)·a1, all must be defined.
    std::vector<std::size_t> pairs(n * n);
    bool defined = true;
    for (std::size_t a0 = 0; a0 < n && defined; ++a0) {
      const auto pa = pas.apply(p, a0);
      for (std::size_t a1 = 0; a1 < n && defined; ++a1) {
        const auto v = pa ? pas.apply(*pa, a1) : std::nullopt;
        defined = v.has_value();
        if (defined) pairs[a0 * n + a1] = *v;
      }
    }
    if (!defined) continue;
    auto projects = [&](std::size_t q, bool second) {
      for (std::size_t a0 = 0; a0 < n; ++a0)
        for (std::size_t a1 = 0; a1 < n; ++a1)
          if (pas.apply(q, pairs[a0 * n + a1]) != (second ? a1 : a0)) return false;
      return true;
    };
    for (std::size_t p0 = 0; p0 < n; ++p0) {
      if (!projects(p0, false)) continue;
      for (std::size_t p1 = 0; p1 < n; ++p1)
        if (projects(p1, true)) return Pairing{p, p0, p1};
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> find_k_combinator(const PAS& pas) {
  const std::size_t n = pas.size();
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      const auto kx = pas.apply(k, x);
      for (std::size_t y = 0; y < n && ok; ++y) ok = kx && pas.apply(*kx, y) == x;
    }
    if (ok) return k;
  }
  return std::nullopt;
}

void validate(const SubPASPair& sp) {
  if (sp.embedding.size() != sp.sub.size()) fail(ErrorKind::malformed_input, "embedding must map every sub element");
  std::set<std::size_t> seen;
  for (std::size_t e : sp.embedding) {
    if (e >= sp.super.size()) fail(ErrorKind::malformed_input, "embedding value out of range");
    if (!seen.insert(e).second) fail(ErrorKind::malformed_input, "embedding is not injective");
  }
  for (std::size_t x = 0; x < sp.sub.size(); ++x)
    for (std::size_t y = 0; y < sp.sub.size(); ++y)
      if (const auto v = sp.sub.apply(x, y)) {
        if (sp.super.apply(sp.embedding[x], sp.embedding[y]) != sp.embedding[*v])
          fail(ErrorKind::malformed_input, "embedding is not compatible with application at (" + sp.sub.names()[x] +
                                               "," + sp.sub.names()[y] + ")");
      }
}

PRStructure induce_relative(const SubPASPair& sp, std::size_t max_carrier) {
  validate(sp);
  check_cap(sp.super.size(), std::min<std::size_t>(max_carrier, 20), "super carrier");
  PRStructure::Builder b(all_subset_names(sp.super.names()), sp.sub.names());
  b.set_cells(pulled_arrow_cells(sp));
  return std::move(b).build();
}

PRStructure induce_nested(const SubPASPair& sp, std::size_t max_carrier) {
  validate(sp);
  check_cap(sp.super.size(), std::min<std::size_t>(max_carrier, 20), "super carrier");
  const std::size_t n = sp.sub.size(), m = sp.super.size();

  struct Level {
    Subset inner, outer;
  };
  std::vector<Level> props;
  for (Subset i = 0; i < (Subset{1} << n); ++i) {
    Subset ei = 0;
    for (std::size_t x = 0; x < n; ++x)
      if ((i >> x) & 1U) ei |= Subset{1} << sp.embedding[x];
    for (Subset j = 0; j < (Subset{1} << m); ++j)
      if ((ei & ~j) == 0) props.push_back({i, j});
  }
  if (props.size() > 4096)
    fail(ErrorKind::budget_exceeded, "nested structure would have " + std::to_string(props.size()) + " propositions");

  std::vector<std::string> names;
  for (const auto& p : props)
    names.push_back("(" + subset_name(sp.sub.names(), p.inner) + "," + subset_name(sp.super.names(), p.outer) + ")");

  const auto sub_cells = parallel::arrow_cells(n, sp.sub.table());
  const auto super_cells = pulled_arrow_cells(sp);
  const std::size_t np = props.size();
  std::vector<Word> cells(np * np);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t c = 0; c < np; ++c)
      cells[a * np + c] = sub_cells[props[a].inner * (Subset{1} << n) + props[c].inner] &
                          super_cells[props[a].outer * (Subset{1} << m) + props[c].outer];
  PRStructure::Builder b(std::move(names), sp.sub.names());
  b.set_cells(std::move(cells));
  return std::move(b).build();
}

}  // namespace prkit
