// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Instance files. Rationals are written as JSON integers or "p/q" strings;
// floating-point JSON numbers are rejected so that files stay exact.

#ifndef NASHCORE_JSON_IO_H_
#define NASHCORE_JSON_IO_H_

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nashcore/errors.h"
#include "nashcore/feasibility.h"
#include "nashcore/instance.h"
#include "nashcore/rational.h"
#include "nashcore/surd.h"
#include "nashcore/utility.h"

namespace nashcore {

using Json = nlohmann::ordered_json;

namespace json_internal {

[[noreturn]] inline void Fail(const std::string& path, const std::string& what) {
  throw FormatError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

inline const Json& Field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) Fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(path, "missing key \"" + key + "\"");
  return *it;
}

inline long ReadInt(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) Fail(path, "expected an integer");
  return v.get<long>();
}

inline std::string ReadString(const Json& v, const std::string& path) {
  if (!v.is_string()) Fail(path, "expected a string");
  return v.get<std::string>();
}

inline Rational ReadRational(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return ParseRational(v.get<std::string>());
    } catch (const FormatError& e) {
      Fail(path, e.what());
    }
  }
  if (v.is_number_float()) Fail(path, "floating-point numbers are not allowed; write \"p/q\"");
  Fail(path, "expected an integer or a \"p/q\" string");
}

inline const Json& ReadArray(const Json& v, const std::string& path) {
  if (!v.is_array()) Fail(path, "expected an array");
  return v;
}

}  // namespace json_internal

inline Json RationalToJson(const Rational& q) {
  if (IsInteger(q) && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(ToString(q));
}

inline Json SurdToJson(const Surd& s) {
  if (s.IsRational()) return RationalToJson(s.ToRational());
  return Json(s.ToString());
}

// Candidate ids of a committee, in index order.
inline Json CommitteeToJson(const Instance& inst, const Committee& c) {
  Json out = Json::array();
  for (int x : c) out.push_back(inst.candidate_id(x));
  return out;
}

inline Committee ParseIdList(const Json& v, const std::unordered_map<std::string, int>& index,
                             const std::string& path) {
  json_internal::ReadArray(v, path);
  Committee c;
  for (size_t i = 0; i < v.size(); ++i) {
    std::string p = path + "/" + std::to_string(i);
    std::string id = json_internal::ReadString(v[i], p);
    auto it = index.find(id);
    if (it == index.end()) json_internal::Fail(p, "unknown candidate id '" + id + "'");
    c.push_back(it->second);
  }
  Committee n = Normalized(c);
  if (n.size() != c.size()) json_internal::Fail(path, "duplicate candidate id");
  return n;
}

namespace json_internal {

inline Utility ParseUtility(const Json& u, int m, const std::unordered_map<std::string, int>& index,
                            const std::string& path) {
  std::string kind = ReadString(Field(u, "kind", path), path + "/kind");
  try {
    if (kind == "approval") {
      return Utility::Approval(m, ParseIdList(Field(u, "approved", path), index, path + "/approved"));
    }
    if (kind == "additive") {
      const Json& w = ReadArray(Field(u, "weights", path), path + "/weights");
      if (static_cast<int>(w.size()) != m) Fail(path + "/weights", "expected one weight per candidate");
      std::vector<Rational> weights;
      for (size_t j = 0; j < w.size(); ++j) {
        weights.push_back(ReadRational(w[j], path + "/weights/" + std::to_string(j)));
      }
      return Utility::Additive(std::move(weights));
    }
    if (kind == "coverage") {
      const Json& e = ReadArray(Field(u, "elements", path), path + "/elements");
      std::vector<Rational> elements;
      for (size_t j = 0; j < e.size(); ++j) {
        elements.push_back(ReadRational(e[j], path + "/elements/" + std::to_string(j)));
      }
      const Json& c = Field(u, "covers", path);
      if (!c.is_object()) Fail(path + "/covers", "expected an object keyed by candidate id");
      std::vector<std::vector<int>> covers(m);
      for (auto it = c.begin(); it != c.end(); ++it) {
        std::string p = path + "/covers/" + it.key();
        auto found = index.find(it.key());
        if (found == index.end()) Fail(p, "unknown candidate id");
        ReadArray(it.value(), p);
        for (size_t j = 0; j < it.value().size(); ++j) {
          covers[found->second].push_back(static_cast<int>(ReadInt(it.value()[j], p + "/" + std::to_string(j))));
        }
      }
      return Utility::Coverage(m, std::move(elements), std::move(covers));
    }
    if (kind == "xos") {
      const Json& cl = ReadArray(Field(u, "clauses", path), path + "/clauses");
      std::vector<std::vector<Rational>> clauses;
      for (size_t q = 0; q < cl.size(); ++q) {
        std::string p = path + "/clauses/" + std::to_string(q);
        ReadArray(cl[q], p);
        if (static_cast<int>(cl[q].size()) != m) Fail(p, "expected one weight per candidate");
        std::vector<Rational> clause;
        for (size_t j = 0; j < cl[q].size(); ++j) clause.push_back(ReadRational(cl[q][j], p + "/" + std::to_string(j)));
        clauses.push_back(std::move(clause));
      }
      return Utility::Xos(std::move(clauses));
    }
    if (kind == "table") {
      const Json& entries = ReadArray(Field(u, "entries", path), path + "/entries");
      std::map<Committee, Rational> table;
      Committee support;
      for (size_t q = 0; q < entries.size(); ++q) {
        std::string p = path + "/entries/" + std::to_string(q);
        Committee set = ParseIdList(Field(entries[q], "set", p), index, p + "/set");
        Rational value = ReadRational(Field(entries[q], "value", p), p + "/value");
        if (!table.emplace(set, value).second) Fail(p, "duplicate table entry");
        support = Union(support, set);
      }
      if (u.contains("support")) support = ParseIdList(u["support"], index, path + "/support");
      return Utility::Table(m, std::move(support), std::move(table));
    }
    if (kind == "lb00") {
      int beta = static_cast<int>(ReadInt(Field(u, "beta", path), path + "/beta"));
      long r = ReadInt(Field(u, "r", path), path + "/r");
      const Json& role = ReadArray(Field(u, "role", path), path + "/role");
      if (role.size() != 2) Fail(path + "/role", "expected two party names");
      const Json& parties = Field(u, "parties", path);
      if (!parties.is_object()) Fail(path + "/parties", "expected an object keyed by party name");
      std::map<std::string, Committee> by_name;
      for (auto it = parties.begin(); it != parties.end(); ++it) {
        by_name[it.key()] = ParseIdList(it.value(), index, path + "/parties/" + it.key());
      }
      std::vector<std::string> names;
      std::vector<int> party_of(m, -1);
      for (const auto& [name, members] : by_name) {
        for (int x : members) {
          if (party_of[x] != -1) Fail(path + "/parties/" + name, "candidate in two parties");
          party_of[x] = static_cast<int>(names.size());
        }
        names.push_back(name);
      }
      auto party_index = [&](const Json& v, const std::string& p) {
        std::string name = ReadString(v, p);
        auto it = by_name.find(name);
        if (it == by_name.end()) Fail(p, "unknown party '" + name + "'");
        return static_cast<int>(std::distance(by_name.begin(), it));
      };
      int pa = party_index(role[0], path + "/role/0");
      int pb = party_index(role[1], path + "/role/1");
      return Utility::Lb00(beta, r, pa, pb, std::move(party_of), std::move(names));
    }
  } catch (const MalformedUtilityError& e) {
    Fail(path, e.what());
  } catch (const ParameterError& e) {
    Fail(path, e.what());
  }
  Fail(path + "/kind", "unknown utility kind '" + kind + "'");
}

inline std::vector<ConstraintRow> ParseRows(const Json& c, const char* bound_key, int m,
                                            const std::unordered_map<std::string, int>& index,
                                            const std::string& path) {
  (void)m;
  const Json& rows = ReadArray(Field(c, "rows", path), path + "/rows");
  std::vector<ConstraintRow> out;
  for (size_t q = 0; q < rows.size(); ++q) {
    std::string p = path + "/rows/" + std::to_string(q);
    ConstraintRow row;
    row.set = ParseIdList(Field(rows[q], "set", p), index, p + "/set");
    row.bound = ReadInt(Field(rows[q], bound_key, p), p + "/" + bound_key);
    out.push_back(std::move(row));
  }
  return out;
}

inline FeasibilityFamily ParseConstraint(const Json& c, int m, int k,
                                         const std::unordered_map<std::string, int>& index,
                                         const std::string& path) {
  std::string kind = ReadString(Field(c, "kind", path), path + "/kind");
  try {
    if (kind == "cardinality") return FeasibilityFamily::Cardinality(m, k);
    if (kind == "explicit") {
      const Json& sets = ReadArray(Field(c, "sets", path), path + "/sets");
      std::vector<Committee> members;
      for (size_t q = 0; q < sets.size(); ++q) {
        members.push_back(ParseIdList(sets[q], index, path + "/sets/" + std::to_string(q)));
      }
      return FeasibilityFamily::Explicit(m, k, std::move(members));
    }
    if (kind == "partition") {
      const Json& groups = ReadArray(Field(c, "groups", path), path + "/groups");
      const Json& caps = ReadArray(Field(c, "caps", path), path + "/caps");
      std::vector<Committee> g;
      std::vector<long> cap;
      for (size_t q = 0; q < groups.size(); ++q) {
        g.push_back(ParseIdList(groups[q], index, path + "/groups/" + std::to_string(q)));
      }
      for (size_t q = 0; q < caps.size(); ++q) cap.push_back(ReadInt(caps[q], path + "/caps/" + std::to_string(q)));
      return FeasibilityFamily::Partition(m, k, std::move(g), std::move(cap));
    }
    if (kind == "packing") return FeasibilityFamily::Packing(m, k, ParseRows(c, "cap", m, index, path));
    if (kind == "covering") return FeasibilityFamily::Covering(m, k, ParseRows(c, "min", m, index, path));
  } catch (const ParameterError& e) {
    Fail(path, e.what());
  }
  Fail(path + "/kind", "unknown constraint kind '" + kind + "'");
}

inline Json IdList(const std::vector<std::string>& ids, const Committee& c) {
  Json out = Json::array();
  for (int x : c) out.push_back(ids[x]);
  return out;
}

inline Json UtilityToJson(const Utility& u, const std::vector<std::string>& ids) {
  Json out;
  out["kind"] = UtilityKindName(u.kind());
  switch (u.kind()) {
    case UtilityKind::kApproval:
      out["approved"] = IdList(ids, u.approved());
      break;
    case UtilityKind::kAdditive: {
      Json w = Json::array();
      for (const auto& x : u.weights()) w.push_back(RationalToJson(x));
      out["weights"] = w;
      break;
    }
    case UtilityKind::kCoverage: {
      Json e = Json::array();
      for (const auto& x : u.weights()) e.push_back(RationalToJson(x));
      out["elements"] = e;
      Json covers = Json::object();
      for (size_t j = 0; j < u.covers().size(); ++j) {
        if (!u.covers()[j].empty()) covers[ids[j]] = u.covers()[j];
      }
      out["covers"] = covers;
      break;
    }
    case UtilityKind::kXos: {
      Json clauses = Json::array();
      for (const auto& clause : u.clauses()) {
        Json c = Json::array();
        for (const auto& x : clause) c.push_back(RationalToJson(x));
        clauses.push_back(c);
      }
      out["clauses"] = clauses;
      break;
    }
    case UtilityKind::kTable: {
      out["support"] = IdList(ids, u.table_support());
      Json entries = Json::array();
      for (const auto& [set, value] : u.table()) {
        if (set.empty()) continue;
        entries.push_back(Json{{"set", IdList(ids, set)}, {"value", RationalToJson(value)}});
      }
      out["entries"] = entries;
      break;
    }
    case UtilityKind::kLb00: {
      out["beta"] = u.beta();
      out["r"] = u.r();
      out["role"] = Json::array({u.party_names()[u.party_a()], u.party_names()[u.party_b()]});
      Json parties = Json::object();
      for (size_t p = 0; p < u.party_names().size(); ++p) {
        Committee members;
        for (size_t j = 0; j < u.party_of().size(); ++j) {
          if (u.party_of()[j] == static_cast<int>(p)) members.push_back(static_cast<int>(j));
        }
        parties[u.party_names()[p]] = IdList(ids, members);
      }
      out["parties"] = parties;
      break;
    }
  }
  return out;
}

inline Json ConstraintToJson(const FeasibilityFamily& f, const std::vector<std::string>& ids) {
  Json out;
  out["kind"] = ConstraintKindName(f.kind());
  switch (f.kind()) {
    case ConstraintKind::kCardinality:
      break;
    case ConstraintKind::kExplicit: {
      Json sets = Json::array();
      std::vector<Committee> members(f.explicit_sets().begin(), f.explicit_sets().end());
      for (const auto& s : members) sets.push_back(IdList(ids, s));
      out["sets"] = sets;
      break;
    }
    case ConstraintKind::kPartition: {
      Json groups = Json::array();
      Json caps = Json::array();
      for (const auto& row : f.rows()) {
        groups.push_back(IdList(ids, row.set));
        caps.push_back(row.bound);
      }
      out["groups"] = groups;
      out["caps"] = caps;
      break;
    }
    case ConstraintKind::kPacking:
    case ConstraintKind::kCovering: {
      const char* key = f.kind() == ConstraintKind::kPacking ? "cap" : "min";
      Json rows = Json::array();
      for (const auto& row : f.rows()) rows.push_back(Json{{"set", IdList(ids, row.set)}, {key, row.bound}});
      out["rows"] = rows;
      break;
    }
    case ConstraintKind::kMatroidOracle:
      throw FormatError("matroid oracles have no file representation");
  }
  return out;
}

}  // namespace json_internal

inline Instance InstanceFromJson(const Json& j, AxiomPolicy default_policy = AxiomPolicy::kCheck) {
  using namespace json_internal;
  if (!j.is_object()) Fail("", "instance must be a JSON object");
  const Json& cands = ReadArray(Field(j, "candidates", ""), "/candidates");
  std::vector<std::string> ids;
  std::unordered_map<std::string, int> index;
  for (size_t c = 0; c < cands.size(); ++c) {
    std::string p = "/candidates/" + std::to_string(c);
    ids.push_back(ReadString(cands[c], p));
    if (!index.emplace(ids.back(), static_cast<int>(c)).second) Fail(p, "duplicate candidate id");
  }
  if (ids.empty()) Fail("/candidates", "at least one candidate is required");
  int m = static_cast<int>(ids.size());
  const Json& utils = ReadArray(Field(j, "utilities", ""), "/utilities");
  long n = ReadInt(Field(j, "n", ""), "/n");
  if (n < 1 || static_cast<size_t>(n) != utils.size()) Fail("/n", "must equal the number of utilities (>= 1)");
  bool has_k = j.contains("k");
  bool has_budget = j.contains("sizes") || j.contains("budget");
  if (has_k == has_budget) Fail("", "exactly one of \"k\" or {\"sizes\",\"budget\"} is required");
  AxiomPolicy policy = default_policy;
  if (j.contains("axioms")) {
    std::string a = ReadString(j["axioms"], "/axioms");
    if (a == "check") policy = AxiomPolicy::kCheck;
    else if (a == "trust") policy = AxiomPolicy::kTrust;
    else Fail("/axioms", "expected \"check\" or \"trust\"");
  }
  std::vector<Utility> utilities;
  for (size_t i = 0; i < utils.size(); ++i) {
    utilities.push_back(ParseUtility(utils[i], m, index, "/utilities/" + std::to_string(i)));
  }
  int k = m;
  if (has_k) {
    k = static_cast<int>(ReadInt(j["k"], "/k"));
    if (k < 0) Fail("/k", "must be nonnegative");
  }
  Json constraint = j.contains("constraint") ? j["constraint"] : Json{{"kind", "cardinality"}};
  FeasibilityFamily family = ParseConstraint(constraint, m, k, index, "/constraint");
  try {
    if (has_k) return Instance::WithK(ids, std::move(utilities), std::move(family), policy);
    const Json& s = ReadArray(Field(j, "sizes", ""), "/sizes");
    if (static_cast<int>(s.size()) != m) Fail("/sizes", "expected one size per candidate");
    std::vector<Rational> sizes;
    for (size_t c = 0; c < s.size(); ++c) sizes.push_back(ReadRational(s[c], "/sizes/" + std::to_string(c)));
    Rational budget = ReadRational(Field(j, "budget", ""), "/budget");
    return Instance::WithBudget(ids, std::move(utilities), std::move(family), std::move(sizes),
                                std::move(budget), policy);
  } catch (const MalformedUtilityError& e) {
    Fail("/utilities", e.what());
  } catch (const ModeError& e) {
    Fail("", e.what());
  }
}

inline Json InstanceToJson(const Instance& inst) {
  using namespace json_internal;
  Json out;
  out["n"] = inst.n();
  out["candidates"] = inst.candidates();
  Json utils = Json::array();
  for (const auto& u : inst.utilities()) utils.push_back(UtilityToJson(u, inst.candidates()));
  out["utilities"] = utils;
  if (inst.k_mode()) {
    out["k"] = inst.k();
  } else {
    Json sizes = Json::array();
    for (const auto& s : inst.sizes()) sizes.push_back(RationalToJson(s));
    out["sizes"] = sizes;
    out["budget"] = RationalToJson(inst.budget());
  }
  if (inst.policy() == AxiomPolicy::kTrust) out["axioms"] = "trust";
  out["constraint"] = ConstraintToJson(inst.family(), inst.candidates());
  return out;
}

inline Json ParseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

inline Instance LoadInstance(const std::string& path, AxiomPolicy policy = AxiomPolicy::kCheck) {
  return InstanceFromJson(ParseJsonText(ReadFile(path)), policy);
}

inline std::string DumpJson(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nashcore

#endif  // NASHCORE_JSON_IO_H_
