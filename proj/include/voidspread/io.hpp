// Copyright 2026 The voidspread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parsing, serialization, and run-manifest plumbing shared by the command
// line front end:
//
//   regions    "a:b,c:d"        site-inclusive intervals, "-inf"/"+inf" rays
//   t ranges   "start..end[:step]" or a single value
//   operators  "site:xexp:zexp,..." generalized Pauli factors
//
// Every command writes a manifest recording the full parameter set, seeds,
// budget, tool version, wall time, and an FNV-1a digest of each output file.
// Primary outputs carry no timing or other volatile data, so a rerun with
// the same parameters reproduces them byte for byte.

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "voidspread/pauli.hpp"
#include "voidspread/region.hpp"

namespace voidspread {
namespace io {

inline constexpr const char kVersion[] = "0.1.0";

using nlohmann::json;

// ---------------------------------------------------------------------------
// Parsing

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline long long parse_ll(const std::string& s, const char* what) {
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": bad integer '" + s +
                                "'");
  }
  if (used != s.size())
    throw std::invalid_argument(std::string(what) + ": bad integer '" + s +
                                "'");
  return v;
}

inline site_t parse_site(const std::string& s) {
  if (s == "-inf") return kNegInf;
  if (s == "+inf" || s == "inf") return kPosInf;
  return parse_ll(s, "site");
}

// "a:b" (sites a through b inclusive) or a single site "a".
inline Interval parse_interval(const std::string& s) {
  std::vector<std::string> parts = split(s, ':');
  if (parts.size() == 1) {
    site_t v = parse_site(parts[0]);
    return Interval(v, v);
  }
  if (parts.size() != 2)
    throw std::invalid_argument("interval: expected 'a:b', got '" + s + "'");
  return Interval(parse_site(parts[0]), parse_site(parts[1]));
}

// Comma-separated intervals; an empty string is the empty region.
inline Region parse_region(const std::string& s) {
  if (s.empty()) return Region();
  std::vector<Interval> ivs;
  for (const std::string& part : split(s, ','))
    ivs.push_back(parse_interval(part));
  return Region(ivs);
}

// "start..end[:step]" inclusive, or a single value.
inline std::vector<int> parse_t_range(const std::string& s) {
  size_t dots = s.find("..");
  if (dots == std::string::npos)
    return {static_cast<int>(parse_ll(s, "t"))};
  long long start = parse_ll(s.substr(0, dots), "t range start");
  std::string rest = s.substr(dots + 2);
  long long step = 1;
  size_t colon = rest.find(':');
  if (colon != std::string::npos) {
    step = parse_ll(rest.substr(colon + 1), "t range step");
    rest = rest.substr(0, colon);
  }
  long long end = parse_ll(rest, "t range end");
  if (step < 1) throw std::invalid_argument("t range: step must be >= 1");
  if (end < start)
    throw std::invalid_argument("t range: end before start in '" + s + "'");
  std::vector<int> out;
  for (long long v = start; v <= end; v += step)
    out.push_back(static_cast<int>(v));
  return out;
}

// "site:xexp:zexp,..."; the empty string is the identity.
inline PauliString parse_op_spec(const std::string& s, int q) {
  PauliString p;
  p.q = q;
  if (s.empty()) return p;
  for (const std::string& part : split(s, ',')) {
    std::vector<std::string> f = split(part, ':');
    if (f.size() != 3)
      throw std::invalid_argument(
          "operator spec: expected 'site:xexp:zexp', got '" + part + "'");
    site_t site = parse_ll(f[0], "operator site");
    if (p.sites.count(site))
      throw std::invalid_argument("operator spec: duplicate site " + f[0]);
    p.set(site, static_cast<int>(parse_ll(f[1], "x exponent")),
          static_cast<int>(parse_ll(f[2], "z exponent")));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Rendering

inline std::string site_str(site_t v) {
  if (v <= kNegInf) return "-inf";
  if (v >= kPosInf) return "+inf";
  return std::to_string(v);
}

inline std::string interval_spec(const Interval& iv) {
  return site_str(iv.a) + ":" + site_str(iv.b);
}

inline std::string region_spec(const Region& r) {
  std::string out;
  for (const Interval& iv : r.components()) {
    if (!out.empty()) out.push_back(',');
    out += interval_spec(iv);
  }
  return out;
}

inline json site_json(site_t v) {
  if (v <= kNegInf) return json("-inf");
  if (v >= kPosInf) return json("+inf");
  return json(v);
}

inline json region_json(const Region& r) {
  json arr = json::array();
  for (const Interval& iv : r.components())
    arr.push_back({{"a", site_json(iv.a)}, {"b", site_json(iv.b)}});
  return arr;
}

// ---------------------------------------------------------------------------
// Digests and files

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string digest_string(std::string_view data) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4)
    out.push_back(hex[(h >> shift) & 0xf]);
  return out;
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

// ---------------------------------------------------------------------------
// Run manifests

struct RunManifest {
  std::string subcommand;
  json params = json::object();
  json seeds = json::object();
  long long budget = 0;
  std::string version = kVersion;
  double wall_seconds = 0.0;
  // Output filename -> content digest, in writing order.
  std::vector<std::pair<std::string, std::string>> outputs;
};

inline json manifest_json(const RunManifest& m) {
  json outs = json::object();
  for (const auto& [name, digest] : m.outputs) outs[name] = digest;
  return json{{"subcommand", m.subcommand}, {"version", m.version},
              {"params", m.params},         {"seeds", m.seeds},
              {"budget", m.budget},         {"wall_seconds", m.wall_seconds},
              {"outputs", outs}};
}

// Writes content to path and records its digest in the manifest.
inline void emit_output(RunManifest& m, const std::string& path,
                        const std::string& content) {
  write_text_file(path, content);
  m.outputs.emplace_back(path, digest_string(content));
}

inline void write_manifest(const std::string& path, const RunManifest& m) {
  write_text_file(path, manifest_json(m).dump(2) + "\n");
}

}  // namespace io
}  // namespace voidspread
