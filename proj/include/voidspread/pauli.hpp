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

// Generalized Pauli (clock/shift) strings over Z_q, the three product
// initial-operator families, and the void predicate.
//
// A string stores, per nontrivial site, the exponent pair (x, z) of
// X^x Z^z. Phases are never tracked: every quantity computed downstream
// depends only on squared overlap magnitudes, and the implemented gate
// tables map basis strings to basis strings up to a unimodular phase.

#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "voidspread/region.hpp"

namespace voidspread {

using boost::multiprecision::cpp_int;

enum class Model { kRandomZ, kFreePropagation, kPerfectTensor };

inline std::string model_name(Model m) {
  switch (m) {
    case Model::kRandomZ: return "random-z";
    case Model::kFreePropagation: return "free";
    case Model::kPerfectTensor: return "perfect-tensor";
  }
  throw std::logic_error("model_name: bad enum");
}

inline Model model_from_name(const std::string& s) {
  if (s == "random-z") return Model::kRandomZ;
  if (s == "free") return Model::kFreePropagation;
  if (s == "perfect-tensor" || s == "pt") return Model::kPerfectTensor;
  throw std::invalid_argument("unknown model: " + s);
}

struct PauliString {
  int q = 2;
  // site -> (xexp, zexp); entries equal to (0,0) are never stored.
  std::map<site_t, std::array<int, 2>> sites;

  bool is_identity() const { return sites.empty(); }

  void set(site_t s, int xexp, int zexp) {
    xexp = ((xexp % q) + q) % q;
    zexp = ((zexp % q) + q) % q;
    if (xexp == 0 && zexp == 0)
      sites.erase(s);
    else
      sites[s] = {xexp, zexp};
  }

  std::array<int, 2> at(site_t s) const {
    auto it = sites.find(s);
    return it == sites.end() ? std::array<int, 2>{0, 0} : it->second;
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

// Exact site set of nontrivial tensor factors, as maximal runs.
inline Region support(const PauliString& p) {
  std::vector<Interval> runs;
  for (const auto& [s, e] : p.sites) {
    if (!runs.empty() && runs.back().b == s - 1)
      runs.back().b = s;
    else
      runs.emplace_back(s, s);
  }
  return Region(runs);
}

// True iff p acts as the identity on every site of A while keeping
// nontrivial support in every component of the complement of A, with the
// complement taken over p's span extended so that each component of A is
// interior. Put differently: trivial on A, and nontrivial somewhere left of
// A, right of A, and inside every gap between consecutive components of A.
// An empty A hosts no void.
inline bool has_void_in(const PauliString& p, const Region& A) {
  if (A.is_empty() || p.is_identity()) return false;
  for (const auto& [s, e] : p.sites)
    if (A.contains(s)) return false;
  const auto& comps = A.components();
  if (!comps.front().left_infinite()) {
    bool left = false;
    for (const auto& [s, e] : p.sites)
      if (s < A.min_site()) {
        left = true;
        break;
      }
    if (!left) return false;
  }
  if (!comps.back().right_infinite()) {
    bool right = false;
    for (const auto& [s, e] : p.sites)
      if (s > A.max_site()) {
        right = true;
        break;
      }
    if (!right) return false;
  }
  for (size_t i = 0; i + 1 < comps.size(); ++i) {
    bool gap = false;
    for (const auto& [s, e] : p.sites)
      if (s > comps[i].b && s < comps[i + 1].a) {
        gap = true;
        break;
      }
    if (!gap) return false;
  }
  return true;
}

// Text form: "site:(x,z);site:(x,z)@q=Q"; the identity is "@q=Q".
inline std::string to_text(const PauliString& p) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, e] : p.sites) {
    if (!first) out << ';';
    out << s << ":(" << e[0] << ',' << e[1] << ')';
    first = false;
  }
  out << "@q=" << p.q;
  return out.str();
}

inline PauliString pauli_from_text(const std::string& text) {
  auto at = text.rfind("@q=");
  if (at == std::string::npos)
    throw std::invalid_argument("pauli_from_text: missing @q= suffix");
  PauliString p;
  p.q = std::stoi(text.substr(at + 3));
  if (p.q < 2) throw std::invalid_argument("pauli_from_text: q < 2");
  std::string body = text.substr(0, at);
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    site_t s;
    int x, z;
    if (std::sscanf(item.c_str(), "%lld:(%d,%d)", &s, &x, &z) != 3)
      throw std::invalid_argument("pauli_from_text: bad item '" + item + "'");
    p.set(s, x, z);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Initial operator families.
//
//   random-z:        arbitrary Z-power per site                -> q^|region|
//   free:            per pair (2i, 2i+1): X^m Z^n  ⊗  X^m Z^{q-n} -> q^|region|
//   perfect-tensor:  X-power at even sites, Z-power at odd sites -> q^|region|
//
// Every family is parameterized by "digits": |region| independent base-q
// digits in left-to-right little-endian order. rank/unrank is the bijection
// between digit words and family members; rank(identity) = 0.
// ---------------------------------------------------------------------------

struct InitialSetSpec {
  Model model = Model::kRandomZ;
  int q = 2;
  Region region;
};

// True iff every component has an even left endpoint and an odd right
// endpoint (the pairing convention of the free family).
inline bool pair_aligned(const Region& r) {
  for (const auto& c : r.components()) {
    if (!c.finite()) return false;
    if (((c.a % 2) + 2) % 2 != 0) return false;
    if (((c.b % 2) + 2) % 2 != 1) return false;
  }
  return true;
}

inline void validate_initial_spec(const InitialSetSpec& spec) {
  if (spec.q < 2) throw std::invalid_argument("initial set: q < 2");
  if (spec.model == Model::kPerfectTensor && spec.q != 3)
    throw std::invalid_argument("perfect-tensor family requires q = 3");
  if (!spec.region.finite())
    throw std::invalid_argument("initial set: region must be finite");
  if (spec.model == Model::kFreePropagation && !pair_aligned(spec.region))
    throw std::invalid_argument(
        "free family: region components must start at an even site and end "
        "at an odd site");
}

// All sites of the region, left to right. One digit lives on each site.
inline std::vector<site_t> digit_sites(const InitialSetSpec& spec) {
  std::vector<site_t> sites;
  for (const auto& c : spec.region.components())
    for (site_t s = c.a; s <= c.b; ++s) sites.push_back(s);
  return sites;
}

inline cpp_int initial_set_cardinality(const InitialSetSpec& spec) {
  validate_initial_spec(spec);
  cpp_int n = 1;
  auto total = spec.region.size();
  for (site_t i = 0; i < *total; ++i) n *= spec.q;
  return n;
}

// Writes the exponent pair contributed by digit `d` living on `site` into p.
// For the free family the digit on an even site is the shared X power of the
// pair and the digit on the following odd site is the Z power n (the partner
// site receives Z^{q-n}).
inline void apply_digit(const InitialSetSpec& spec, PauliString& p,
                        site_t site, int d) {
  if (d == 0) return;
  switch (spec.model) {
    case Model::kRandomZ:
      p.set(site, p.at(site)[0], p.at(site)[1] + d);
      return;
    case Model::kPerfectTensor:
      if (((site % 2) + 2) % 2 == 0)
        p.set(site, p.at(site)[0] + d, p.at(site)[1]);
      else
        p.set(site, p.at(site)[0], p.at(site)[1] + d);
      return;
    case Model::kFreePropagation: {
      bool even = ((site % 2) + 2) % 2 == 0;
      if (even) {
        // Shared X power m on both partners.
        p.set(site, p.at(site)[0] + d, p.at(site)[1]);
        p.set(site + 1, p.at(site + 1)[0] + d, p.at(site + 1)[1]);
      } else {
        // Z power n on the even partner; the odd site carries q - n.
        p.set(site - 1, p.at(site - 1)[0], p.at(site - 1)[1] + d);
        p.set(site, p.at(site)[0], p.at(site)[1] - d);
      }
      return;
    }
  }
  throw std::logic_error("apply_digit: bad model");
}

inline PauliString unrank(const InitialSetSpec& spec, cpp_int k) {
  validate_initial_spec(spec);
  if (k < 0 || k >= initial_set_cardinality(spec))
    throw std::out_of_range("unrank: k out of range");
  PauliString p;
  p.q = spec.q;
  for (site_t site : digit_sites(spec)) {
    int d = static_cast<int>(k % spec.q);
    k /= spec.q;
    apply_digit(spec, p, site, d);
  }
  return p;
}

inline cpp_int rank(const InitialSetSpec& spec, const PauliString& p) {
  validate_initial_spec(spec);
  if (p.q != spec.q) throw std::invalid_argument("rank: q mismatch");
  // Recover digits from the exponent pairs.
  std::vector<site_t> sites = digit_sites(spec);
  cpp_int k = 0;
  for (size_t i = sites.size(); i-- > 0;) {
    site_t s = sites[i];
    auto e = p.at(s);
    int d = 0;
    switch (spec.model) {
      case Model::kRandomZ:
        if (e[0] != 0) throw std::invalid_argument("rank: not a Z string");
        d = e[1];
        break;
      case Model::kPerfectTensor:
        if (((s % 2) + 2) % 2 == 0) {
          if (e[1] != 0)
            throw std::invalid_argument("rank: Z power on an even site");
          d = e[0];
        } else {
          if (e[0] != 0)
            throw std::invalid_argument("rank: X power on an odd site");
          d = e[1];
        }
        break;
      case Model::kFreePropagation:
        if (((s % 2) + 2) % 2 == 0)
          d = e[0];  // shared X power
        else
          d = p.at(s - 1)[1];  // Z power n stored on the even partner
        break;
    }
    k = k * spec.q + d;
  }
  // Round-trip validation: rejects strings outside the family.
  if (unrank(spec, k) != p)
    throw std::invalid_argument("rank: string is not a member of the family");
  return k;
}

// Calls fn(rank, string) for every member, identity (rank 0) first. The
// caller is responsible for budget checks; see void_census for the capped
// front end.
template <typename Fn>
void enumerate_initial_set(const InitialSetSpec& spec, Fn&& fn) {
  cpp_int n = initial_set_cardinality(spec);
  for (cpp_int k = 0; k < n; ++k) fn(k, unrank(spec, k));
}

}  // namespace voidspread
