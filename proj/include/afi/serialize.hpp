#pragma once

// JSON encodings of the result types. Matrices are arrays of row strings
// ("++-+"), the same sign alphabet as the text format.
//
// Census record files are JSON Lines: one object per line with keys
//   triple {n,k,r,m,u}, canonical [rows], row_mult, col_mult,
//   standard_params (object or null), raw_count.

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "afi/canonical.hpp"
#include "afi/census.hpp"
#include "afi/construct.hpp"
#include "afi/core.hpp"
#include "afi/feasibility.hpp"
#include "afi/text_format.hpp"
#include "afi/verify.hpp"

namespace afi {

using json = nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";

inline void to_json(json& j, const SignMatrix& m) { j = row_strings(m); }
inline void from_json(const json& j, SignMatrix& m) {
  m = from_row_strings(j.get<std::vector<std::string>>(), kDefaultDimensionCap);
}

inline void to_json(json& j, const Triple& t) {
  j = json{{"n", t.n}, {"k", t.k}, {"r", t.r}, {"m", t.m}, {"u", t.u}};
}
inline void from_json(const json& j, Triple& t) {
  j.at("n").get_to(t.n);
  j.at("k").get_to(t.k);
  j.at("r").get_to(t.r);
  j.at("m").get_to(t.m);
  j.at("u").get_to(t.u);
}

template <class T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}
template <class T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

inline void to_json(json& j, const FeasibilityVerdict& v) {
  j = json{{"n", v.n},
           {"k", v.k},
           {"r", v.r},
           {"elementary_ok", v.elementary_ok},
           {"exists", v.exists},
           {"m", optional_to_json(v.m)},
           {"u", optional_to_json(v.u)},
           {"reason", std::string(to_string(v.reason))}};
}
inline void from_json(const json& j, FeasibilityVerdict& v) {
  j.at("n").get_to(v.n);
  j.at("k").get_to(v.k);
  j.at("r").get_to(v.r);
  j.at("elementary_ok").get_to(v.elementary_ok);
  j.at("exists").get_to(v.exists);
  v.m = optional_from_json<std::int64_t>(j.at("m"));
  v.u = optional_from_json<std::int64_t>(j.at("u"));
  const auto reason = reason_from_string(j.at("reason").get<std::string>());
  if (!reason) throw json::other_error::create(501, "unknown feasibility reason", &j);
  v.reason = *reason;
}

inline void to_json(json& j, const CountBounds& b) {
  j = json{{"n", b.n},         {"k", b.k},         {"m", b.m},
           {"lower", b.lower}, {"upper", b.upper}, {"exact", optional_to_json(b.exact)}};
}
inline void from_json(const json& j, CountBounds& b) {
  j.at("n").get_to(b.n);
  j.at("k").get_to(b.k);
  j.at("m").get_to(b.m);
  j.at("lower").get_to(b.lower);
  j.at("upper").get_to(b.upper);
  b.exact = optional_from_json<std::int64_t>(j.at("exact"));
}

inline void to_json(json& j, const Rank2Params& p) {
  j = json{{"n", p.n},     {"k", p.k},     {"m", p.m},     {"u", p.u},     {"a", p.a},
           {"b", p.b},     {"c", p.c},     {"a_p", p.a_p}, {"a_m", p.a_m}, {"b_p", p.b_p},
           {"b_m", p.b_m}, {"c1p", p.c1p}, {"c1m", p.c1m}, {"c2p", p.c2p}, {"c2m", p.c2m},
           {"t", p.t},     {"q", p.q},     {"l", p.l},     {"x", p.x()},   {"y", p.y()}};
}
inline void from_json(const json& j, Rank2Params& p) {
  for (auto [key, field] : std::initializer_list<std::pair<const char*, std::int64_t*>>{{"n", &p.n}, {"k", &p.k}, {"m", &p.m}, {"u", &p.u},
                            {"a", &p.a}, {"b", &p.b}, {"c", &p.c}, {"a_p", &p.a_p},
                            {"a_m", &p.a_m}, {"b_p", &p.b_p}, {"b_m", &p.b_m},
                            {"c1p", &p.c1p}, {"c1m", &p.c1m}, {"c2p", &p.c2p},
                            {"c2m", &p.c2m}, {"t", &p.t}, {"q", &p.q}, {"l", &p.l}})
    j.at(key).get_to(*field);
}

inline void to_json(json& j, const VerifyReport& r) {
  j = json{{"n", r.n},
           {"k", r.k},
           {"is_idempotent", r.is_idempotent},
           {"rank", r.rank},
           {"trace", r.trace},
           {"row_negative_counts", r.row_negative_counts},
           {"diag_negative_count", optional_to_json(r.diag_negative_count)},
           {"inferred_triple", optional_to_json(r.inferred_triple)},
           {"first_column_positive", r.first_column_positive},
           {"rank_identity_holds", optional_to_json(r.rank_identity_holds)},
           {"row_negatives_identity_holds", optional_to_json(r.row_negatives_identity_holds)}};
}
inline void from_json(const json& j, VerifyReport& r) {
  j.at("n").get_to(r.n);
  j.at("k").get_to(r.k);
  j.at("is_idempotent").get_to(r.is_idempotent);
  j.at("rank").get_to(r.rank);
  j.at("trace").get_to(r.trace);
  j.at("row_negative_counts").get_to(r.row_negative_counts);
  r.diag_negative_count = optional_from_json<std::int64_t>(j.at("diag_negative_count"));
  r.inferred_triple = optional_from_json<Triple>(j.at("inferred_triple"));
  j.at("first_column_positive").get_to(r.first_column_positive);
  r.rank_identity_holds = optional_from_json<bool>(j.at("rank_identity_holds"));
  r.row_negatives_identity_holds = optional_from_json<bool>(j.at("row_negatives_identity_holds"));
}

inline void to_json(json& j, const CensusRecord& r) {
  j = json{{"triple", r.triple},
           {"canonical", r.canonical},
           {"row_mult", r.row_mult},
           {"col_mult", r.col_mult},
           {"standard_params", optional_to_json(r.standard_params)},
           {"raw_count", r.raw_count}};
}
inline void from_json(const json& j, CensusRecord& r) {
  j.at("triple").get_to(r.triple);
  j.at("canonical").get_to(r.canonical);
  j.at("row_mult").get_to(r.row_mult);
  j.at("col_mult").get_to(r.col_mult);
  r.standard_params = optional_from_json<Rank2Params>(j.at("standard_params"));
  j.at("raw_count").get_to(r.raw_count);
}

inline void to_json(json& j, const TypePartition& tp) {
  j = json{{"classes", tp.classes}, {"orientation", tp.orientation}, {"multiplicity", tp.multiplicity}};
}

inline void write_records(std::ostream& out, const std::vector<CensusRecord>& records) {
  for (const auto& r : records) out << json(r).dump() << '\n';
}

inline std::vector<CensusRecord> read_records(std::istream& in) {
  std::vector<CensusRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(json::parse(line).get<CensusRecord>());
  }
  return out;
}

}  // namespace afi
