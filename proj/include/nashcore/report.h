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

// Report plumbing shared by the command-line tool: run manifests, input
// digests, parameter parsing and JSON forms of library results.

#ifndef NASHCORE_REPORT_H_
#define NASHCORE_REPORT_H_

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nashcore/errors.h"
#include "nashcore/interval.h"
#include "nashcore/json_io.h"
#include "nashcore/random.h"
#include "nashcore/rational.h"
#include "nashcore/solvers.h"
#include "nashcore/verifiers.h"

namespace nashcore {

inline constexpr const char* kVersion = "1.0.0";

// Lowercase hex SHA-256 of a byte string.
inline std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw Error("cannot allocate a digest context");
  bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
            EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) == 1 &&
            EVP_DigestFinal_ex(ctx, digest, &length) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw Error("SHA-256 computation failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

struct GammaValue {
  Rational value;
  bool over_approximation = false;  // produced from e^B
  std::string source;
};

// Smallest rational with `digits` significant decimal digits that is at
// least the upper end of the interval.
inline Rational DecimalCeiling(const Interval& x, int digits) {
  Rational hi = x.UpperRational();
  if (hi <= 0) throw ParameterError("decimal ceiling needs a positive value");
  Rational scale = 1;
  int exponent = 0;
  while (hi >= scale * 10) {
    scale *= 10;
    ++exponent;
  }
  while (hi < scale) {
    scale /= 10;
    --exponent;
  }
  Rational unit = scale / Pow(Rational(10), static_cast<unsigned long>(digits - 1));
  return Rational(Ceil(hi / unit)) * unit;
}

// Accepts "p/q", decimals and "e^B" with rational B.
inline GammaValue ParseGamma(const std::string& text) {
  GammaValue g;
  g.source = text;
  if (text.rfind("e^", 0) == 0) {
    Rational b = ParseRational(text.substr(2));
    g.value = DecimalCeiling(Exp(Interval(b)), 12);
    g.over_approximation = true;
    return g;
  }
  if (text == "e") return ParseGamma("e^1");
  g.value = ParseRational(text);
  return g;
}

// Comma-separated candidate ids. When none of the tokens is an id and all
// of them are indices in [0, m), they are read as indices.
inline Committee ParseCommitteeIds(const Instance& inst, const std::string& text) {
  std::vector<std::string> ids;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) ids.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) ids.push_back(cur);
  const auto& known = inst.candidates();
  bool any_id = false, all_indices = true;
  Committee indices;
  for (const auto& t : ids) {
    any_id = any_id || std::find(known.begin(), known.end(), t) != known.end();
    bool digits = !t.empty() && t.size() < 10 && t.find_first_not_of("0123456789") == std::string::npos;
    if (digits && std::stol(t) < inst.m()) indices.push_back(static_cast<int>(std::stol(t)));
    else all_indices = false;
  }
  if (any_id || !all_indices) return inst.CommitteeOf(ids);
  Committee c = Normalized(indices);
  if (c.size() != indices.size()) throw FormatError("duplicate candidate in committee");
  return c;
}

class Manifest {
 public:
  Manifest(std::string command, std::uint64_t seed) : command_(std::move(command)), seed_(seed) {}

  void Flag(const std::string& name, Json value) { flags_[name] = std::move(value); }
  void Input(const std::string& path, const std::string& bytes) { inputs_[path] = Sha256Hex(bytes); }
  void WallClock(double seconds) { wall_clock_ = seconds; }

  Json ToJson(int exit_status) const {
    Json flags = Json::object();
    for (const auto& [k, v] : flags_) flags[k] = v;
    Json inputs = Json::object();
    for (const auto& [k, v] : inputs_) inputs[k] = Json{{"sha256", v}};
    Json out{{"command", command_},
             {"flags", flags},
             {"inputs", inputs},
             {"version", kVersion},
             {"rng", kRngName},
             {"seed", seed_},
             {"exit_status", exit_status}};
    if (wall_clock_) out["wall_clock_seconds"] = *wall_clock_;
    return out;
  }

 private:
  std::string command_;
  std::uint64_t seed_;
  std::map<std::string, Json> flags_;
  std::map<std::string, std::string> inputs_;
  std::optional<double> wall_clock_;
};

inline Json ScoreToJson(const Score& s) {
  Json out{{"rule", RuleName(s.rule)}, {"value", s.value.ToString()}};
  if (s.rule == Rule::kSnw) out["log_value_approx"] = s.Display();
  return out;
}

inline Json VerificationReportToJson(const Instance& inst, const VerificationReport& r) {
  Json out{{"notion", NotionName(r.notion)},
           {"parameter", RationalToJson(r.parameter)},
           {"verdict", r.pass ? "pass" : "fail"},
           {"sets_enumerated", r.sets_enumerated},
           {"vacuous", r.vacuous},
           {"vacuous_coalitions", r.vacuous_coalitions}};
  if (!r.mode.empty()) out["mode"] = r.mode;
  if (r.degenerate_equality) out["degenerate_equality"] = true;
  if (!r.pass) {
    Json witness{{"coalition", r.coalition}};
    if (r.deviation) witness["deviation"] = CommitteeToJson(inst, *r.deviation);
    if (r.endowment >= 0) witness["endowment"] = r.endowment;
    if (!r.certificate.empty()) {
      Json cert = Json::array();
      for (const auto& e : r.certificate) {
        cert.push_back(Json{{"hat_w", CommitteeToJson(inst, e.hat_w)}, {"w_prime", CommitteeToJson(inst, e.w_prime)}});
      }
      witness["certificate"] = cert;
    }
    out["witness"] = witness;
  }
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

}  // namespace nashcore

#endif  // NASHCORE_REPORT_H_
