#include "gusvd/io.hpp"

#include <charconv>
#include <sstream>

#include "gusvd/errors.hpp"

namespace gusvd {

namespace {

const Json& field_of(const Json& doc, const char* key) {
  if (!doc.is_object()) throw ValidationError("document must be a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ValidationError(std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t uint_of(const Json& doc, const char* key) {
  const Json& v = field_of(doc, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ValidationError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

void check_schema(const Json& doc) {
  auto it = doc.find("schema");
  if (it != doc.end() && (!it->is_string() || it->get<std::string>() != kSchemaVersion)) {
    throw ValidationError(std::string("field 'schema' must be \"") + kSchemaVersion + "\"");
  }
}

FieldPtr field_from(const Json& doc) {
  const auto p = uint_of(doc, "p");
  const auto e = uint_of(doc, "e");
  if (p > 65536 || e > 16) throw ValidationError("fields 'p'/'e' out of range");
  return make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
}

Partition partition_field(const Json& doc, const char* key) {
  const Json& v = field_of(doc, key);
  if (!v.is_array()) throw ValidationError(std::string("field '") + key + "' must be an array");
  std::vector<int> parts;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<long long>() <= 0 || x.get<long long>() > 1000000) {
      throw ValidationError(std::string("field '") + key + "' must hold positive integers");
    }
    parts.push_back(x.get<int>());
  }
  try {
    return Partition(parts);
  } catch (const ValidationError&) {
    throw ValidationError(std::string("field '") + key + "' must be weakly decreasing");
  }
}

std::string list_str(const std::vector<std::uint32_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

Json matrix_to_json(const Matrix& a) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["p"] = a.field().p();
  j["e"] = a.field().e();
  j["m"] = a.rows();
  j["n"] = a.cols();
  j["entries"] = a.codes();
  return j;
}

Matrix matrix_from_json(const Json& doc) {
  check_schema(doc);
  const FieldPtr field = field_from(doc);
  const auto m = uint_of(doc, "m");
  const auto n = uint_of(doc, "n");
  const Json& entries = field_of(doc, "entries");
  if (!entries.is_array()) throw ValidationError("field 'entries' must be an array");
  if (m > 4096 || n > 4096 || entries.size() != m * n) {
    throw ValidationError("field 'entries' has " + std::to_string(entries.size()) + " values, expected m*n = " +
                          std::to_string(m * n));
  }
  std::vector<std::uint32_t> codes;
  codes.reserve(entries.size());
  for (const auto& x : entries) {
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() >= field->order()) {
      throw ValidationError("field 'entries' must hold integers in [0, " + std::to_string(field->order()) + ")");
    }
    codes.push_back(x.get<std::uint32_t>());
  }
  return Matrix::from_codes(field, m, n, codes);
}

Json invariant_to_json(const OrbitInvariant& inv, const Field& field) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["p"] = field.p();
  j["e"] = field.e();
  j["m"] = inv.m;
  j["n"] = inv.n;
  Json factors = Json::array();
  for (const auto& f : inv.inv_factors) factors.push_back(f.codes());
  j["inv"] = factors;
  j["R"] = partition_to_json(inv.r_rows);
  j["Rp"] = partition_to_json(inv.rp_rows);
  j["J"] = partition_to_json(inv.j_pairs);
  j["canonical"] = canonical_invariant_string(inv);
  return j;
}

std::pair<OrbitInvariant, FieldPtr> invariant_from_json(const Json& doc) {
  check_schema(doc);
  const FieldPtr field = field_from(doc);
  OrbitInvariant inv;
  inv.m = uint_of(doc, "m");
  inv.n = uint_of(doc, "n");
  const Json& factors = field_of(doc, "inv");
  if (!factors.is_array()) throw ValidationError("field 'inv' must be an array of coefficient lists");
  for (const auto& f : factors) {
    if (!f.is_array() || f.empty()) throw ValidationError("field 'inv' must hold non-empty coefficient lists");
    std::vector<Elem> c;
    for (const auto& x : f) {
      if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() >= field->order()) {
        throw ValidationError("field 'inv' coefficients must be integers in [0, " + std::to_string(field->order()) +
                              ")");
      }
      c.push_back(Elem{x.get<std::uint32_t>()});
    }
    if (c.back().code == 0) throw ValidationError("field 'inv' coefficient lists must not have trailing zeros");
    inv.inv_factors.push_back(Poly{field, std::move(c)});
  }
  inv.r_rows = partition_field(doc, "R");
  inv.rp_rows = partition_field(doc, "Rp");
  inv.j_pairs = partition_field(doc, "J");
  inv.validate(*field);
  return {std::move(inv), field};
}

std::string canonical_invariant_string(const OrbitInvariant& inv) {
  std::ostringstream os;
  os << "m=" << inv.m << ";n=" << inv.n << ";inv=[";
  for (std::size_t i = 0; i < inv.inv_factors.size(); ++i) {
    os << (i ? "," : "") << list_str(inv.inv_factors[i].codes());
  }
  os << "];R=" << inv.r_rows.str() << ";Rp=" << inv.rp_rows.str() << ";J=" << inv.j_pairs.str();
  return os.str();
}

Json partition_to_json(const Partition& p) { return Json(p.parts()); }

Partition parse_partition(const std::string& text, const std::string& what) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string tok = text.substr(pos, end - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
      throw ValidationError(what + ": '" + tok + "' is not a non-negative integer");
    }
    if (v > 0) parts.push_back(v);
    pos = end + 1;
  }
  try {
    return Partition(parts);
  } catch (const ValidationError&) {
    throw ValidationError(what + " must be weakly decreasing");
  }
}

Json label_to_json(const IndecomposableLabel& label) {
  Json j;
  j["label"] = label.str();
  switch (label.kind) {
    case BlockKind::kInv: j["kind"] = "inv"; break;
    case BlockKind::kJ: j["kind"] = "J"; break;
    case BlockKind::kJp: j["kind"] = "J'"; break;
    case BlockKind::kR: j["kind"] = "R"; break;
    case BlockKind::kRp: j["kind"] = "R'"; break;
  }
  if (label.kind == BlockKind::kInv) {
    j["f"] = label.f.codes();
  } else {
    j["d"] = label.d;
  }
  return j;
}

Json count_report_to_json(const CountReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["oracle_count"] = r.oracle_count;
  j["formula_count"] = r.formula_count;
  Json strata = Json::array();
  for (const auto& s : r.strata) {
    strata.push_back({{"invertible_dim", s.invertible_dim}, {"oracle", s.oracle}, {"formula", s.formula}});
  }
  j["strata"] = strata;
  j["message"] = r.message;
  return j;
}

Json completeness_report_to_json(const CompletenessReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["orbit_count"] = r.orbit_count;
  j["distinct_invariants"] = r.distinct_invariants;
  j["failures"] = r.failures;
  if (!r.failures.empty()) j["counterexample"] = r.counterexample;
  return j;
}

}  // namespace gusvd
