#include "prkit/fiber.hpp"

namespace prkit {

std::size_t fiber_size(std::size_t num_props, std::size_t k, std::size_t cap) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n > cap / num_props) return bits::npos;
    n *= num_props;
  }
  return n > cap ? bits::npos : n;
}

namespace {

Bitset row_of(const PRStructure& s, std::size_t k, std::size_t x, std::size_t f) {
  const std::size_t np = s.num_props();
  Bitset row(f);
  std::vector<std::size_t> xs(k);
  for (std::size_t i = 0, v = x; i < k; ++i, v /= np) xs[i] = v % np;
  Bitset acc(s.num_reals());
  for (std::size_t y = 0; y < f; ++y) {
    acc = Bitset(s.num_reals(), true);
    bool alive = true;
    for (std::size_t i = 0, v = y; i < k && alive; ++i, v /= np) {
      acc &= s.cell_at(xs[i] * np + v % np);
      alive = acc.any();
    }
    if (alive) row.set(y);
  }
  return row;
}

std::vector<Bitset> pairset_rows(const PRStructure& s, std::size_t k, std::size_t f) {
  const std::size_t np = s.num_props();
  std::vector<Bitset> rows(f, Bitset(f));
  for (std::size_t x = 0; x < f; ++x)
    for (std::size_t y = 0; y < f; ++y) {
      FamilyPair fam;
      for (std::size_t i = 0, u = x, v = y; i < k; ++i, u /= np, v /= np) {
        fam.phi.push_back(prop(u % np));
        fam.psi.push_back(prop(v % np));
      }
      if (entails_pairset(s, image_pairs(fam))) rows[x].set(y);
    }
  return rows;
}

}  // namespace

namespace serial {

std::vector<Bitset> fiber_rows(const PRStructure& s, std::size_t k) {
  const std::size_t f = fiber_size(s.num_props(), k, bits::npos - 1);
  std::vector<Bitset> rows;
  rows.reserve(f);
  for (std::size_t x = 0; x < f; ++x) rows.push_back(row_of(s, k, x, f));
  return rows;
}

}  // namespace serial

namespace parallel {

std::vector<Bitset> fiber_rows(const PRStructure& s, std::size_t k) {
  const std::size_t f = fiber_size(s.num_props(), k, bits::npos - 1);
  std::vector<Bitset> rows(f);
  const auto total = static_cast<std::int64_t>(f);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t x = 0; x < total; ++x)
    rows[static_cast<std::size_t>(x)] = row_of(s, k, static_cast<std::size_t>(x), f);
  return rows;
}

}  // namespace parallel

Fiber::Fiber(const PRStructure& s, std::size_t index_size, std::size_t max_size, bool pairset_route)
    : s_(&s), k_(index_size) {
  const std::size_t f = fiber_size(s.num_props(), index_size, max_size);
  if (f == bits::npos)
    fail(ErrorKind::budget_exceeded, "fiber over index size " + std::to_string(index_size) + " exceeds --max-fiber-size " +
                                         std::to_string(max_size));
  rows_ = pairset_route ? pairset_rows(s, index_size, f) : parallel::fiber_rows(s, index_size);
  cols_.assign(f, Bitset(f));
  for (std::size_t x = 0; x < f; ++x)
    for (std::size_t y : rows_[x].elements()) cols_[y].set(x);
}

std::vector<PropId> Fiber::tuple(std::size_t e) const {
  std::vector<PropId> t(k_);
  const std::size_t np = s_->num_props();
  for (std::size_t i = 0; i < k_; ++i, e /= np) t[i] = prop(e % np);
  return t;
}

std::size_t Fiber::index_of(const std::vector<PropId>& t) const {
  if (t.size() != k_) fail(ErrorKind::malformed_input, "tuple length does not match the index size");
  std::size_t e = 0;
  for (std::size_t i = k_; i-- > 0;) {
    s_->check(t[i]);
    e = e * s_->num_props() + idx(t[i]);
  }
  return e;
}

std::string Fiber::label(std::size_t e) const {
  std::string out = "(";
  const auto t = tuple(e);
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + s_->name(t[i]);
  return out + ")";
}

std::size_t Fiber::pullback(std::size_t e, const std::vector<std::size_t>& m) const {
  const auto t = tuple(e);
  const std::size_t np = s_->num_props();
  std::size_t out = 0;
  for (std::size_t i = m.size(); i-- > 0;) out = out * np + idx(t.at(m[i]));
  return out;
}

}  // namespace prkit
