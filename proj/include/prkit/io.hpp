#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "prkit/appstruct.hpp"
#include "prkit/canonical.hpp"
#include "prkit/completeness.hpp"
#include "prkit/core.hpp"
#include "prkit/order.hpp"

namespace prkit {

// Documents keep key order, so output is byte-stable for a given input.
using Json = nlohmann::ordered_json;

// Throws Error(parse) naming line and column.
Json parse_json(std::string_view text);
// Two-space indentation plus a trailing newline.
std::string dump(const Json& doc);

Json to_json(const PRStructure& s);
Json to_json(const PAS& pas);
Json to_json(const SubPASPair& sp);
Json to_json(const BinRel& rel);
Json to_json(const CanonicalForm& form);
Json to_json(const FiberReport& report);
Json to_json(const CompletenessResult& result, const std::vector<std::string>& labels);
Json to_json(const SupremumResult& result, const std::vector<std::string>& labels);
Json to_json(const IncompletenessCertificate& cert, const PAS& pas);
Json to_json(const PreorderWitness& w, const PRStructure& s);
Json to_json(const BoundsWitness& w, const PRStructure& s);

// Each throws malformed_input on schema violations.
PRStructure pr_structure_from_json(const Json& doc);
PAS pas_from_json(const Json& doc);
SubPASPair sub_pas_from_json(const Json& doc);
BinRel binrel_from_json(const Json& doc);
CanonicalForm canonical_from_json(const Json& doc);

using Document = std::variant<PRStructure, PAS, SubPASPair, BinRel>;
// Dispatches on the "kind" member.
Document document_from_json(const Json& doc);
Document read_document(std::string_view text);

}  // namespace prkit
