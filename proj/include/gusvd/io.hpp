#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "gusvd/brute_oracle.hpp"
#include "gusvd/matrix.hpp"
#include "gusvd/orbit_invariant.hpp"
#include "gusvd/partition.hpp"
#include "gusvd/pencil.hpp"

namespace gusvd {

using Json = nlohmann::ordered_json;

// Version tag written into (and accepted from) every document.
inline constexpr const char* kSchemaVersion = "gusvd/1";

// {"schema", "p", "e", "m", "n", "entries": [row-major element codes]}
Json matrix_to_json(const Matrix& a);
// Throws ValidationError naming the offending field.
Matrix matrix_from_json(const Json& doc);

// {"schema", "p", "e", "m", "n", "inv": [[low-first codes]...], "R", "Rp", "J"}
Json invariant_to_json(const OrbitInvariant& inv, const Field& field);
std::pair<OrbitInvariant, FieldPtr> invariant_from_json(const Json& doc);

// "m=2;n=2;inv=[[1,1],[1,1]];R=[];Rp=[];J=[]"
std::string canonical_invariant_string(const OrbitInvariant& inv);

Json partition_to_json(const Partition& p);
// "3,2,2" -> [3,2,2]; empty text is the empty partition. Rejects increasing lists.
Partition parse_partition(const std::string& text, const std::string& what);

Json label_to_json(const IndecomposableLabel& label);
Json count_report_to_json(const CountReport& r);
Json completeness_report_to_json(const CompletenessReport& r);

}  // namespace gusvd
