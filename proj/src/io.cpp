#include "prkit/io.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace prkit {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    fail(ErrorKind::parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object()) fail(ErrorKind::malformed_input, "expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(ErrorKind::malformed_input, std::string("missing member '") + key + "'");
  return *it;
}

std::string str(const Json& v, const char* what) {
  if (!v.is_string()) fail(ErrorKind::malformed_input, std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> names(const Json& v, const char* what) {
  if (!v.is_array()) fail(ErrorKind::malformed_input, std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(str(x, what));
  return out;
}

void expect_kind(const Json& doc, const char* kind) {
  const std::string k = str(member(doc, "kind"), "kind");
  if (k != kind) fail(ErrorKind::malformed_input, "expected kind '" + std::string(kind) + "', found '" + k + "'");
}

std::size_t index_in(const std::vector<std::string>& carrier, const std::string& name, const char* what) {
  auto it = std::find(carrier.begin(), carrier.end(), name);
  if (it == carrier.end()) fail(ErrorKind::malformed_input, std::string("unknown ") + what + " '" + name + "'");
  return static_cast<std::size_t>(it - carrier.begin());
}

Json pair_list(const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (auto [a, b] : pairs) out.push_back({labels[a], labels[b]});
  return out;
}

Json subset_tuple(const PowerTuple& t, const PAS& pas) {
  Json out = Json::array();
  for (Subset s : t) out.push_back(subset_name(pas.names(), s));
  return out;
}

}  // namespace

Json to_json(const PRStructure& s) {
  Json rho = Json::array();
  const std::size_t np = s.num_props();
  for (std::size_t p = 0; p < np * np; ++p) {
    const auto cell = s.cell_at(p);
    if (!bits::any(cell)) continue;
    Json reals = Json::array();
    for (std::size_t r = bits::find_first(cell); r != bits::npos; r = bits::find_next(cell, r + 1))
      reals.push_back(s.name(real(r)));
    rho.push_back({{"from", s.name(prop(p / np))}, {"to", s.name(prop(p % np))}, {"realizers", std::move(reals)}});
  }
  return {{"kind", "pr-structure"}, {"props", s.prop_names()}, {"reals", s.real_names()}, {"rho", std::move(rho)}};
}

PRStructure pr_structure_from_json(const Json& doc) {
  expect_kind(doc, "pr-structure");
  PRStructure::Builder b(names(member(doc, "props"), "props"), names(member(doc, "reals"), "reals"));
  const Json& rho = member(doc, "rho");
  if (!rho.is_array()) fail(ErrorKind::malformed_input, "rho must be an array");
  const auto props = names(member(doc, "props"), "props");
  const auto reals = names(member(doc, "reals"), "reals");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& entry : rho) {
    const std::size_t a = index_in(props, str(member(entry, "from"), "from"), "proposition");
    const std::size_t c = index_in(props, str(member(entry, "to"), "to"), "proposition");
    if (!seen.emplace(a, c).second)
      fail(ErrorKind::malformed_input, "duplicate rho entry for (" + props[a] + ", " + props[c] + ")");
    for (const auto& r : names(member(entry, "realizers"), "realizers")) b.add(a, c, index_in(reals, r, "realizer"));
  }
  return std::move(b).build();
}

Json to_json(const PAS& pas) {
  Json table = Json::array();
  const std::size_t n = pas.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (auto v = pas.apply(x, y))
        table.push_back({{"left", pas.names()[x]}, {"right", pas.names()[y]}, {"value", pas.names()[*v]}});
  return {{"kind", "pas"}, {"carrier", pas.names()}, {"table", std::move(table)}};
}

PAS pas_from_json(const Json& doc) {
  expect_kind(doc, "pas");
  const auto carrier = names(member(doc, "carrier"), "carrier");
  const Json& table = member(doc, "table");
  if (!table.is_array()) fail(ErrorKind::malformed_input, "table must be an array");
  const std::size_t n = carrier.size();
  std::vector<int> values(n * n, -1);
  for (const auto& entry : table) {
    const std::size_t x = index_in(carrier, str(member(entry, "left"), "left"), "carrier element");
    const std::size_t y = index_in(carrier, str(member(entry, "right"), "right"), "carrier element");
    const std::size_t v = index_in(carrier, str(member(entry, "value"), "value"), "carrier element");
    if (values[x * n + y] >= 0)
      fail(ErrorKind::malformed_input, "duplicate table entry for " + carrier[x] + "·" + carrier[y]);
    values[x * n + y] = static_cast<int>(v);
  }
  return PAS(carrier, std::move(values));
}

Json to_json(const SubPASPair& sp) {
  Json emb = Json::object();
  for (std::size_t i = 0; i < sp.embedding.size(); ++i) emb[sp.sub.names()[i]] = sp.super.names()[sp.embedding[i]];
  return {{"kind", "sub-pas"}, {"sub", to_json(sp.sub)}, {"super", to_json(sp.super)}, {"embedding", std::move(emb)}};
}

SubPASPair sub_pas_from_json(const Json& doc) {
  expect_kind(doc, "sub-pas");
  SubPASPair sp{pas_from_json(member(doc, "sub")), pas_from_json(member(doc, "super")), {}};
  const Json& emb = member(doc, "embedding");
  if (!emb.is_object()) fail(ErrorKind::malformed_input, "embedding must be an object");
  for (const auto& name : sp.sub.names()) {
    auto it = emb.find(name);
    if (it == emb.end()) fail(ErrorKind::malformed_input, "embedding misses sub element '" + name + "'");
    sp.embedding.push_back(index_in(sp.super.names(), str(*it, "embedding value"), "super element"));
  }
  if (emb.size() != sp.sub.size()) fail(ErrorKind::malformed_input, "embedding names elements outside the sub carrier");
  validate(sp);
  return sp;
}

Json to_json(const BinRel& rel) {
  return {{"kind", "binrel"}, {"carrier", rel.names()}, {"pairs", pair_list(rel.pairs(), rel.names())}};
}

BinRel binrel_from_json(const Json& doc) {
  expect_kind(doc, "binrel");
  BinRel rel(names(member(doc, "carrier"), "carrier"));
  const Json& pairs = member(doc, "pairs");
  if (!pairs.is_array()) fail(ErrorKind::malformed_input, "pairs must be an array");
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) fail(ErrorKind::malformed_input, "each pair must be a two-element array");
    rel.relate(rel.find(str(p[0], "pair element")), rel.find(str(p[1], "pair element")));
  }
  return rel;
}

Json to_json(const CanonicalForm& form) {
  const std::size_t np = form.props.size();
  Json antichain = Json::array();
  for (const auto& member_set : form.antichain) {
    Json pairs = Json::array();
    for (std::size_t p : member_set.elements()) pairs.push_back({form.props[p / np], form.props[p % np]});
    antichain.push_back(std::move(pairs));
  }
  return {{"kind", "canonical-form"}, {"props", form.props}, {"degree", form.degree()}, {"antichain", std::move(antichain)}};
}

CanonicalForm canonical_from_json(const Json& doc) {
  expect_kind(doc, "canonical-form");
  CanonicalForm form;
  form.props = names(member(doc, "props"), "props");
  const std::size_t np = form.props.size();
  const Json& antichain = member(doc, "antichain");
  if (!antichain.is_array()) fail(ErrorKind::malformed_input, "antichain must be an array");
  for (const auto& m : antichain) {
    Bitset set(np * np);
    if (!m.is_array()) fail(ErrorKind::malformed_input, "antichain members must be arrays of pairs");
    for (const auto& p : m) {
      if (!p.is_array() || p.size() != 2) fail(ErrorKind::malformed_input, "each pair must be a two-element array");
      set.set(index_in(form.props, str(p[0], "pair element"), "proposition") * np +
              index_in(form.props, str(p[1], "pair element"), "proposition"));
    }
    form.antichain.push_back(std::move(set));
  }
  // Re-derive the canonical form so an unsorted or non-antichain file is normalized.
  return canonicalize(structure_of(form));
}

Json to_json(const FiberReport& r) {
  auto label = [&](const std::optional<std::size_t>& e) -> Json {
    if (!e) return nullptr;
    return r.labels[*e];
  };
  Json distributive = nullptr;
  if (r.distributive) distributive = *r.distributive;
  return {{"kind", "fiber-report"},
          {"index_size", r.index_size},
          {"size", r.size},
          {"pairset_route", r.pairset_route},
          {"reflexive", r.reflexive},
          {"transitive", r.transitive},
          {"antisymmetric", r.antisymmetric},
          {"poset", r.is_poset()},
          {"lattice", r.is_lattice()},
          {"bounded_lattice", r.is_bounded_lattice()},
          {"bottom", label(r.bottom)},
          {"top", label(r.top)},
          {"missing_meets", pair_list(r.missing_meets, r.labels)},
          {"missing_joins", pair_list(r.missing_joins, r.labels)},
          {"distributive", distributive},
          {"pointwise_failures", r.pointwise_failures},
          {"reindexing_failures", r.reindexing_failures},
          {"maps_checked", r.maps_checked}};
}

Json to_json(const CompletenessResult& result, const std::vector<std::string>& labels) {
  Json counter = nullptr;
  if (result.counterexample) {
    counter = Json::array();
    for (std::size_t e : *result.counterexample) counter.push_back(labels[e]);
  }
  return {{"complete", result.complete}, {"families_checked", result.families}, {"counterexample", std::move(counter)}};
}

Json to_json(const SupremumResult& result, const std::vector<std::string>& labels) {
  auto list = [&](const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (std::size_t e : v) out.push_back(labels[e]);
    return out;
  };
  Json refutations = Json::array();
  for (const auto& ref : result.refutations)
    refutations.push_back(
        {{"candidate", labels[ref.candidate]}, {"clause", to_string(ref.clause)}, {"witness", labels[ref.witness]}});
  return {{"family", list(result.family)},
          {"suprema", list(result.suprema)},
          {"adjoint_suprema", list(result.adjoint_suprema)},
          {"refutations", std::move(refutations)}};
}

Json to_json(const IncompletenessCertificate& cert, const PAS& pas) {
  using Clause = IncompletenessCertificate::Clause;
  Json domain = Json::array();
  for (std::size_t a : cert.domain) domain.push_back(pas.names()[a]);
  Json family = Json::array();
  for (const auto& t : cert.family) family.push_back(subset_tuple(t, pas));
  Json entries = Json::array();
  for (const auto& e : cert.entries) {
    Json j = {{"candidate", subset_tuple(e.candidate, pas)}, {"clause", to_string(e.clause)}};
    if (e.clause == Clause::not_upper_bound) {
      j["member"] = pas.names()[e.member];
    } else {
      j["refuter"] = subset_tuple(e.refuter, pas);
    }
    if (e.clause == Clause::refuted_by_extension) {
      Json blocks = Json::array();
      for (Subset b : e.blocks) blocks.push_back(subset_name(pas.names(), b));
      Json values = Json::array();
      for (std::size_t v : e.block_values) values.push_back(pas.names()[v]);
      j["blocks"] = std::move(blocks);
      j["block_values"] = std::move(values);
    }
    entries.push_back(std::move(j));
  }
  return {{"kind", "incompleteness-certificate"},
          {"carrier", pas.names()},
          {"realizer", pas.names()[cert.realizer]},
          {"domain", std::move(domain)},
          {"family", std::move(family)},
          {"candidates", cert.entries.size()},
          {"entries", std::move(entries)}};
}

Json to_json(const PreorderWitness& w, const PRStructure& s) {
  const std::size_t nr = s.num_reals();
  Json comp = Json::array();
  for (std::size_t si = 0; si < nr; ++si)
    for (std::size_t r = 0; r < nr; ++r)
      comp.push_back({{"s", s.name(real(si))},
                      {"r", s.name(real(r))},
                      {"composite", s.name(w.compose(real(si), real(r), nr))}});
  return {{"identity", s.name(w.identity)}, {"composition", std::move(comp)}};
}

Json to_json(const BoundsWitness& w, const PRStructure& s) {
  return {{"bottom", s.name(w.bottom)},
          {"top", s.name(w.top)},
          {"bottom_realizer", s.name(w.bottom_real)},
          {"top_realizer", s.name(w.top_real)}};
}

Document document_from_json(const Json& doc) {
  const std::string kind = str(member(doc, "kind"), "kind");
  if (kind == "pr-structure") return pr_structure_from_json(doc);
  if (kind == "pas") return pas_from_json(doc);
  if (kind == "sub-pas") return sub_pas_from_json(doc);
  if (kind == "binrel") return binrel_from_json(doc);
  if (kind == "canonical-form") return structure_of(canonical_from_json(doc));
  fail(ErrorKind::malformed_input, "unknown document kind '" + kind + "'");
}

Document read_document(std::string_view text) { return document_from_json(parse_json(text)); }

}  // namespace prkit
