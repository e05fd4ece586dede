#include "commands.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "prkit/appstruct.hpp"
#include "prkit/canonical.hpp"
#include "prkit/catalog.hpp"
#include "prkit/completeness.hpp"
#include "prkit/fiber.hpp"
#include "prkit/io.hpp"
#include "prkit/order.hpp"

namespace prkit::cli {

namespace {

// Anchors into README.md naming the result a verdict rests on.
constexpr const char* kPreorderalAnchor = "README.md#preorderal-criterion";
constexpr const char* kBoundsAnchor = "README.md#bounds-criterion";
constexpr const char* kPointwiseAnchor = "README.md#pointwise-characterization";
constexpr const char* kCanonicalAnchor = "README.md#canonical-form";
constexpr const char* kPartitionedAnchor = "README.md#partitioned-structures";
constexpr const char* kFiberAnchor = "README.md#fiber-lattices";
constexpr const char* kSupremumAnchor = "README.md#suprema";
constexpr const char* kIncompletenessAnchor = "README.md#incompleteness-theorem";
constexpr const char* kOrbitAnchor = "README.md#orbit-theorem";

struct Common {
  std::string input = "-";
  std::size_t max_carrier = kDefaultMaxCarrier;
  std::size_t max_fiber_size = kDefaultMaxFiberSize;
  std::uint64_t max_families = kDefaultMaxFamilies;
  std::string mode = "nested";
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) fail(ErrorKind::malformed_input, "cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

PRStructure as_structure(const Document& doc, const Common& c) {
  if (const auto* s = std::get_if<PRStructure>(&doc)) return *s;
  if (const auto* p = std::get_if<PAS>(&doc)) return induce_sigma(*p, c.max_carrier);
  if (const auto* b = std::get_if<BinRel>(&doc)) return sigma_from_bin(*b);
  const auto& sp = std::get<SubPASPair>(doc);
  if (c.mode == "relative") return induce_relative(sp, c.max_carrier);
  return induce_nested(sp, c.max_carrier);
}

std::optional<std::pair<PropId, PropId>> symmetric_pair(const PRStructure& s) {
  for (std::size_t a = 0; a < s.num_props(); ++a)
    for (std::size_t b = a + 1; b < s.num_props(); ++b)
      if (entails(s, prop(a), prop(b)) && entails(s, prop(b), prop(a))) return std::pair{prop(a), prop(b)};
  return std::nullopt;
}

void print_verdict(std::ostream& out, const std::string& property, bool verdict, const char* anchor,
                   const Json& witness) {
  out << property << ": " << (verdict ? "true" : "false") << "\n";
  out << "theorem: " << anchor << "\n";
  if (!witness.is_null()) out << "witness: " << witness.dump() << "\n";
}

void cmd_check(const std::string& property, const Common& c, std::istream& in, std::ostream& out) {
  const PRStructure s = as_structure(read_document(read_text(c.input, in)), c);
  if (property == "partitioned") {
    Json w = nullptr;
    const std::size_t np = s.num_props();
    for (std::size_t p = 0; p < np * np && w.is_null(); ++p)
      if (bits::count(s.cell_at(p)) > 1) w = {{"from", s.name(prop(p / np))}, {"to", s.name(prop(p % np))}};
    print_verdict(out, property, w.is_null(), kPartitionedAnchor, w);
    return;
  }
  if (property == "p-structure") {
    const CanonicalForm form = canonicalize(s);
    print_verdict(out, property, form.degree() == 1, kPointwiseAnchor, {{"degree", form.degree()}});
    return;
  }
  const auto pre = find_preorder_witness(s);
  if (property == "preorderal") {
    print_verdict(out, property, pre.has_value(), kPreorderalAnchor, pre ? to_json(*pre, s) : Json(nullptr));
    return;
  }
  const auto sym = symmetric_pair(s);
  const bool posetal = pre && !sym;
  Json w = nullptr;
  if (sym) w = {{"mutually_entailing", {s.name(sym->first), s.name(sym->second)}}};
  if (property == "posetal") {
    if (posetal) w = to_json(*pre, s);
    print_verdict(out, property, posetal, kPreorderalAnchor, w);
    return;
  }
  if (property == "bounded-posetal") {
    const auto bounds = posetal ? find_bounds_witness(s) : std::nullopt;
    if (bounds) w = to_json(*bounds, s);
    print_verdict(out, property, bounds.has_value(), kBoundsAnchor, w);
    return;
  }
  fail(ErrorKind::malformed_input, "unknown property '" + property + "'");
}

Json classification(const PRStructure& s) {
  const CanonicalForm form = canonicalize(s);
  const bool pre = is_preorderal(s);
  const bool anti = is_antisymmetric(s);
  return {{"kind", "classification"},
          {"props", s.num_props()},
          {"reals", s.num_reals()},
          {"partitioned", is_partitioned(s)},
          {"preorderal", pre},
          {"antisymmetric", anti},
          {"posetal", pre && anti},
          {"bounded_posetal", is_bounded_posetal(s)},
          {"p_structure", form.degree() == 1},
          {"degree", form.degree()},
          {"theorems", {kPreorderalAnchor, kBoundsAnchor, kCanonicalAnchor}}};
}

void cmd_classify(const Common& c, std::istream& in, std::ostream& out) {
  const Document doc = read_document(read_text(c.input, in));
  Json j = classification(as_structure(doc, c));
  if (const auto* p = std::get_if<PAS>(&doc)) {
    bool orbit = true;
    for (std::size_t r = 0; r < p->size(); ++r)
      for (std::size_t t = 0; t < p->size(); ++t) orbit = orbit && orbit_condition(*p, r, t);
    const auto pairing = find_pairing(*p);
    const auto k = find_k_combinator(*p);
    j["pas"] = {{"total", p->is_total()},
                {"totally_matching", is_totally_matching(*p)},
                {"orbit_condition", orbit},
                {"orbit_theorem_holds", check_orbit_theorem(*p, c.max_carrier)},
                {"pairing", pairing ? Json({p->names()[pairing->p], p->names()[pairing->p0], p->names()[pairing->p1]})
                                    : Json(nullptr)},
                {"k_combinator", k ? Json(p->names()[*k]) : Json(nullptr)},
                {"theorem", kOrbitAnchor}};
  }
  out << dump(j);
}

std::vector<std::size_t> family_indices(const BinRel& rel, const std::string& spec) {
  const Json fam = parse_json(spec);
  if (!fam.is_array()) fail(ErrorKind::malformed_input, "--family must be a JSON array of element labels");
  std::vector<std::size_t> out;
  for (const auto& e : fam) {
    if (!e.is_string()) fail(ErrorKind::malformed_input, "--family must be a JSON array of element labels");
    out.push_back(rel.find(e.get<std::string>()));
  }
  return out;
}

void cmd_suprema(std::size_t k, const std::string& family, bool adjoint, const Common& c, std::istream& in,
                 std::ostream& out) {
  const Document doc = read_document(read_text(c.input, in));
  Json j;
  if (const auto* b = std::get_if<BinRel>(&doc); b && k == 0) {
    // A bare relation: work on it directly.
    if (!family.empty()) {
      const auto fam = family_indices(*b, family);
      j = {{"kind", "suprema"}, {"theorem", kSupremumAnchor}, {"result", to_json(find_supremum(*b, fam), b->names())}};
      const BoundNotionsReport rep = compare_bound_notions(*b, fam);
      j["notions"] = {{"reflexive", rep.reflexive},
                     {"transitive", rep.transitive},
                     {"suprema_are_adjoint", rep.suprema_are_adjoint},
                     {"adjoint_are_suprema", rep.adjoint_are_suprema},
                     {"unique_up_to_equivalence", rep.unique_up_to_equivalence}};
    } else {
      const auto kind = adjoint ? BoundKind::adjoint_supremum : BoundKind::supremum;
      j = {{"kind", "completeness"},
           {"theorem", kSupremumAnchor},
           {"notion", adjoint ? "adjoint-supremum" : "supremum"},
           {"result", to_json(is_complete(*b, kind, c.max_families), b->names())}};
    }
    out << dump(j);
    return;
  }
  if (k == 0) fail(ErrorKind::malformed_input, "--index-size must be positive for structure inputs");
  const PRStructure s = as_structure(doc, c);
  const Fiber fb(s, k, c.max_fiber_size);
  const BinRel rel = fiber_relation(fb);
  if (!family.empty()) {
    const auto fam = family_indices(rel, family);
    j = {{"kind", "suprema"},
         {"theorem", kSupremumAnchor},
         {"index_size", k},
         {"result", to_json(find_supremum(rel, fam, c.max_fiber_size), rel.names())}};
  } else {
    const auto kind = adjoint ? BoundKind::adjoint_supremum : BoundKind::supremum;
    j = {{"kind", "completeness"},
         {"theorem", kSupremumAnchor},
         {"index_size", k},
         {"notion", adjoint ? "adjoint-supremum" : "supremum"},
         {"result", to_json(is_fiber_complete(s, k, kind, c.max_families, c.max_fiber_size), rel.names())}};
  }
  out << dump(j);
}

void cmd_witness(const std::string& realizer, const Common& c, std::istream& in, std::ostream& out) {
  const Document doc = read_document(read_text(c.input, in));
  const auto* pas = std::get_if<PAS>(&doc);
  if (!pas) fail(ErrorKind::malformed_input, "witness needs a pas document");
  const auto cert = incompleteness_witness(*pas, pas->find(realizer), c.max_families);
  Json j = to_json(cert, *pas);
  j["verified"] = verify_certificate(*pas, cert);
  j["theorem"] = kIncompletenessAnchor;
  out << dump(j);
}

void cmd_gen(const std::string& what, const std::string& arg, std::istream& in, std::ostream& out) {
  auto number = [&]() -> std::size_t {
    try {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(arg, &pos);
      if (pos != arg.size()) throw std::invalid_argument(arg);
      return v;
    } catch (const std::logic_error&) {
      fail(ErrorKind::malformed_input, "'" + what + "' needs a numeric argument");
    }
  };
  if (what == "sigma-n") {
    out << dump(to_json(sigma_n(number())));
  } else if (what == "two-element-lattical") {
    out << dump(to_json(two_element_lattical()));
  } else if (what == "from-bin") {
    const Document doc = read_document(read_text(arg, in));
    const auto* b = std::get_if<BinRel>(&doc);
    if (!b) fail(ErrorKind::malformed_input, "from-bin needs a binrel document");
    out << dump(to_json(sigma_from_bin(*b)));
  } else if (what == "cyclic-group") {
    out << dump(to_json(cyclic_group(number())));
  } else if (what == "klein-group") {
    out << dump(to_json(klein_group()));
  } else if (what == "right-projection") {
    out << dump(to_json(right_projection_magma(number())));
  } else if (what == "left-projection") {
    out << dump(to_json(left_projection_magma(number())));
  } else {
    fail(ErrorKind::malformed_input, "unknown generator '" + what + "'");
  }
}

struct Bounds {
  std::string family = "pr";
  std::size_t min_props = 1, max_props = 2;
  std::size_t min_reals = 1, max_reals = 2;
  std::size_t carrier = 2;
  bool random = false;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
};

void add_bounds(CLI::App* cmd, Bounds& b) {
  cmd->add_option("--family", b.family, "pr, partial-magma or magma")
      ->check(CLI::IsMember({"pr", "partial-magma", "magma"}));
  cmd->add_option("--min-props", b.min_props);
  cmd->add_option("--props", b.max_props, "largest number of propositions");
  cmd->add_option("--min-reals", b.min_reals);
  cmd->add_option("--reals", b.max_reals, "largest number of realizers");
  cmd->add_option("--carrier", b.carrier, "carrier size for magmas");
  cmd->add_flag("--random", b.random, "sample instead of enumerating");
  cmd->add_option("--seed", b.seed);
  cmd->add_option("--count", b.count, "random: number of samples; exhaustive: cap (0 = none)");
}

GeneratorSpec to_spec(const Bounds& b) {
  GeneratorSpec spec;
  spec.kind = b.random ? GeneratorKind::random : GeneratorKind::exhaustive;
  spec.family = b.family == "pr"              ? GeneratedFamily::pr_structure
                : b.family == "partial-magma" ? GeneratedFamily::partial_magma
                                              : GeneratedFamily::magma;
  spec.min_props = b.min_props;
  spec.max_props = b.max_props;
  spec.min_reals = b.min_reals;
  spec.max_reals = b.max_reals;
  spec.carrier = b.carrier;
  spec.seed = b.seed;
  spec.limit = b.count;
  return spec;
}

Json bounds_json(const Bounds& b) {
  Json j = {{"family", b.family}, {"mode", b.random ? "random" : "exhaustive"}};
  if (b.family == "pr") {
    j["props"] = {b.min_props, b.max_props};
    j["reals"] = {b.min_reals, b.max_reals};
  } else {
    j["carrier"] = b.carrier;
  }
  if (b.random) j["seed"] = b.seed;
  if (b.count != 0) j["count"] = b.count;
  return j;
}

Json generated_json(const Generated& g) {
  return std::visit([](const auto& x) { return to_json(x); }, g);
}

void cmd_enumerate(const Bounds& b, std::ostream& out) {
  enumerate_structures(to_spec(b), [&](std::uint64_t, const Generated& g) {
    out << generated_json(g).dump() << "\n";
    return true;
  });
}

// Predicates usable in `search`; fibers are checked for index sizes 1..depth.
bool predicate(const std::string& name, const PRStructure& s, std::size_t depth, std::size_t max_fiber) {
  if (name == "partitioned") return is_partitioned(s);
  if (name == "preorderal") return is_preorderal(s);
  if (name == "antisymmetric") return is_antisymmetric(s);
  if (name == "posetal") return is_posetal(s);
  if (name == "bounded-posetal") return is_bounded_posetal(s);
  if (name == "p-structure") return is_p_structure(s);
  if (name == "lattical" || name == "distributive") {
    FiberOptions opts;
    opts.max_fiber_size = max_fiber;
    opts.max_reindex_size = 0;
    for (std::size_t k = 1; k <= depth; ++k) {
      const FiberReport r = check_fiber(s, k, opts);
      if (!r.is_bounded_lattice()) return false;
      if (name == "distributive" && !r.distributive.value_or(false)) return false;
    }
    return true;
  }
  fail(ErrorKind::malformed_input, "unknown predicate '" + name + "'");
}

struct Literal {
  std::string name;
  bool negated = false;
};

std::vector<Literal> parse_conjunction(const std::string& text) {
  std::vector<Literal> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '&')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    Literal lit;
    if (!item.empty() && item[0] == '!') {
      lit.negated = true;
      item.erase(0, 1);
    }
    if (item.empty()) fail(ErrorKind::malformed_input, "empty predicate in '" + text + "'");
    lit.name = item;
    out.push_back(lit);
  }
  if (out.empty()) fail(ErrorKind::malformed_input, "empty conjunction");
  return out;
}

void cmd_search(const std::string& implication, const Bounds& b, std::size_t depth, std::size_t max_found,
                const Common& c, std::ostream& out) {
  const auto arrow = implication.find("=>");
  if (arrow == std::string::npos) fail(ErrorKind::malformed_input, "--implication must have the form A=>B");
  const auto lhs = parse_conjunction(implication.substr(0, arrow));
  const auto rhs = parse_conjunction(implication.substr(arrow + 2));
  // Validate predicate names before the sweep.
  const PRStructure probe = sigma_n(1);
  for (const auto& l : lhs) predicate(l.name, probe, 1, c.max_fiber_size);
  for (const auto& l : rhs) predicate(l.name, probe, 1, c.max_fiber_size);

  const StructureEnumerator en(to_spec(b));
  auto holds = [&](const std::vector<Literal>& conj, const PRStructure& s) {
    return std::all_of(conj.begin(), conj.end(),
                       [&](const Literal& l) { return predicate(l.name, s, depth, c.max_fiber_size) != l.negated; });
  };

  constexpr std::uint64_t kChunk = 1024;
  Json found = Json::array();
  std::uint64_t premises = 0, checked = 0;
  for (std::uint64_t start = 0; start < en.size() && found.size() < max_found; start += kChunk) {
    const std::uint64_t end = std::min(en.size(), start + kChunk);
    std::vector<char> premise(end - start, 0), counter(end - start, 0);
    std::string error;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = static_cast<std::int64_t>(start); i < static_cast<std::int64_t>(end); ++i) {
      try {
        const Generated g = en.at(static_cast<std::uint64_t>(i));
        const PRStructure s = std::holds_alternative<PAS>(g) ? induce_sigma(std::get<PAS>(g), c.max_carrier)
                                                              : std::get<PRStructure>(g);
        const auto k = static_cast<std::size_t>(static_cast<std::uint64_t>(i) - start);
        premise[k] = holds(lhs, s);
        counter[k] = premise[k] && !holds(rhs, s);
      } catch (const std::exception& e) {
#pragma omp critical(prkit_search_error)
        if (error.empty()) error = e.what();
      }
    }
    if (!error.empty()) fail(ErrorKind::budget_exceeded, error);
    for (std::uint64_t i = start; i < end; ++i) {
      ++checked;
      premises += static_cast<std::uint64_t>(premise[i - start]);
      if (counter[i - start] && found.size() < max_found)
        found.push_back({{"index", i}, {"structure", generated_json(en.at(i))}});
      if (found.size() >= max_found) break;
    }
  }
  out << dump({{"kind", "search"},
               {"implication", implication},
               {"bounds", bounds_json(b)},
               {"fiber_depth", depth},
               {"checked", checked},
               {"premise_holds", premises},
               {"counterexamples", std::move(found)}});
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse:
    case ErrorKind::malformed_input: return kBadInput;
    case ErrorKind::precondition: return kPrecondition;
    case ErrorKind::budget_exceeded: return kBudget;
    case ErrorKind::invariant_violation: return kInvariant;
  }
  return kBadInput;
}

}  // namespace

void apply_thread_env() {
  const char* v = std::getenv("PRKIT_THREADS");
  if (v == nullptr) return;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end != v && *end == '\0' && n > 0) omp_set_num_threads(static_cast<int>(n));
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app("Finite PR-structures: deciders, canonical forms, fibers and completeness", "prkit");
  app.require_subcommand(1);

  Common c;
  auto add_common = [&](CLI::App* cmd, bool input = true) {
    if (input) cmd->add_option("input", c.input, "JSON document (default: stdin)");
    cmd->add_option("--max-carrier", c.max_carrier, "largest PAS carrier to induce");
    cmd->add_option("--max-fiber-size", c.max_fiber_size, "largest fiber to materialize");
    cmd->add_option("--max-families", c.max_families, "largest family or candidate space to sweep");
    cmd->add_option("--mode", c.mode, "sub-pas inducing mode")->check(CLI::IsMember({"nested", "relative"}));
  };

  std::string property;
  auto* check = app.add_subcommand("check", "Decide one property");
  check->add_option("--property", property)
      ->required()
      ->check(CLI::IsMember({"partitioned", "preorderal", "posetal", "bounded-posetal", "p-structure"}));
  add_common(check);

  auto* canonical = app.add_subcommand("canonical", "Print the canonical form");
  add_common(canonical);
  auto* degree_cmd = app.add_subcommand("degree", "Print the degree");
  add_common(degree_cmd);
  auto* classify = app.add_subcommand("classify", "Print every decided property");
  add_common(classify);
  auto* induce = app.add_subcommand("induce", "Induce a PR-structure from a PAS, sub-PAS or relation");
  add_common(induce);

  std::size_t index_size = 1;
  std::size_t max_reindex = 3;
  bool pairset_route = false;
  auto* fiber = app.add_subcommand("fiber", "Report on one fiber");
  fiber->add_option("--index-size", index_size)->required();
  fiber->add_option("--max-reindex-size", max_reindex, "largest domain of reindexing maps checked");
  fiber->add_flag("--pairset-route", pairset_route, "compute entailment through image pair-sets");
  add_common(fiber);

  std::string family;
  bool adjoint = false;
  std::size_t sup_index = 0;
  auto* suprema = app.add_subcommand("suprema", "Suprema of a family, or an exhaustive completeness sweep");
  suprema->add_option("--index-size", sup_index, "fiber index size (0 with a binrel input: the relation itself)");
  suprema->add_option("--family", family, "JSON array of element labels");
  suprema->add_flag("--adjoint", adjoint, "sweep for adjoint-suprema");
  add_common(suprema);

  std::string realizer;
  auto* witness = app.add_subcommand("witness", "Incompleteness certificate for a PAS");
  witness->add_option("--realizer", realizer)->required();
  add_common(witness);

  std::string gen_what, gen_arg;
  auto* gen = app.add_subcommand("gen", "Emit a catalog structure");
  gen->add_option("generator", gen_what)
      ->required()
      ->check(CLI::IsMember({"sigma-n", "two-element-lattical", "from-bin", "cyclic-group", "klein-group",
                             "right-projection", "left-projection"}));
  gen->add_option("arg", gen_arg, "N, or a binrel file for from-bin");

  Bounds bounds;
  std::string implication;
  std::size_t depth = 2;
  std::size_t max_found = 1;
  auto* search = app.add_subcommand("search", "Look for counterexamples to A=>B over generated structures");
  search->add_option("--implication", implication, "conjunctions of predicates, '!' negates, e.g. posetal&lattical=>p-structure")
      ->required();
  search->add_option("--fiber-depth", depth, "index sizes checked by lattical/distributive");
  search->add_option("--max-counterexamples", max_found);
  add_bounds(search, bounds);
  add_common(search, false);

  auto* enumerate = app.add_subcommand("enumerate", "Stream generated structures, one JSON document per line");
  add_bounds(enumerate, bounds);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) {
      cmd_check(property, c, in, out);
    } else if (*canonical) {
      out << dump(to_json(canonicalize(as_structure(read_document(read_text(c.input, in)), c))));
    } else if (*degree_cmd) {
      out << degree(as_structure(read_document(read_text(c.input, in)), c)) << "\n";
    } else if (*classify) {
      cmd_classify(c, in, out);
    } else if (*induce) {
      out << dump(to_json(as_structure(read_document(read_text(c.input, in)), c)));
    } else if (*fiber) {
      FiberOptions opts;
      opts.max_fiber_size = c.max_fiber_size;
      opts.max_reindex_size = max_reindex;
      opts.pairset_route = pairset_route;
      Json j = to_json(check_fiber(as_structure(read_document(read_text(c.input, in)), c), index_size, opts));
      j["theorem"] = kFiberAnchor;
      out << dump(j);
    } else if (*suprema) {
      cmd_suprema(sup_index, family, adjoint, c, in, out);
    } else if (*witness) {
      cmd_witness(realizer, c, in, out);
    } else if (*gen) {
      cmd_gen(gen_what, gen_arg, in, out);
    } else if (*search) {
      cmd_search(implication, bounds, depth, max_found, c, out);
    } else if (*enumerate) {
      cmd_enumerate(bounds, out);
    }
  } catch (const Error& e) {
    err << "prkit: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kOk;
}

}  // namespace prkit::cli
