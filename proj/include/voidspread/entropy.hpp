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

// Renyi-2 entropy of a union of disjoint intervals after a global quench,
// computed by minimum-cost matchings of interval endpoints.
//
// An interval system is A_1 = [l_1, r_1], ..., A_n = [l_n, r_n] with
// l_1 < r_1 < l_2 < ... < r_n, evolved for t layers. A candidate
// "endpoint configuration" gamma pairs some left endpoints with right
// endpoints (each endpoint used at most once); a pair {l_i, r_j} is allowed
// only when it is connectable in time t, meaning 2t > |l_i - r_j|. Its cost
// is
//
//   f_gamma = n_gamma * t + sum over pairs |l_i - r_j|
//
// where n_gamma counts unpaired endpoints. The entropy in s_eq units (units
// of log q) is the minimum of f_gamma over all configurations. Three
// equivalent evaluators are provided: full enumeration, a permutation form,
// and a linear match-or-skip dynamic program over adjacent endpoints; their
// agreement is enforced by the test suite.
//
// Lengths here are coordinate differences: [l, r] has size r - l. A lattice
// interval of sites [a, b] (b - a + 1 sites) corresponds to the system
// interval [a, b + 1].

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace voidspread {

struct Segment {
  long long l = 0;
  long long r = 0;
};

struct IntervalSystem {
  std::vector<Segment> intervals;
  long long t = 0;
};

// One endpoint matching: pairs.first is the index i of a left endpoint l_i,
// pairs.second the index j of a right endpoint r_j (both 0-based).
struct EndpointConfig {
  std::vector<std::pair<int, int>> pairs;
  int unpaired = 0;
  long long cost = 0;
};

inline constexpr int kDefaultPermutationCap = 9;

inline void validate_system(const IntervalSystem &system) {
  if (system.intervals.empty()) {
    throw std::invalid_argument("IntervalSystem: at least one interval");
  }
  if (system.t < 0) {
    throw std::invalid_argument("IntervalSystem: t must be non-negative");
  }
  long long prev = system.intervals.front().l - 1;
  for (const Segment &seg : system.intervals) {
    if (!(prev < seg.l && seg.l < seg.r)) {
      throw std::invalid_argument(
          "IntervalSystem: endpoints must satisfy l1 < r1 < l2 < ... < rn");
    }
    prev = seg.r;
  }
}

inline bool connectable(long long t, long long left, long long right) {
  long long gap = left < right ? right - left : left - right;
  return 2 * t > gap;
}

namespace detail {

// Enumerates matchings recursively, one left endpoint at a time. With
// adjacency_only, left endpoint i may only pair with right endpoint i (its
// own interval) or i - 1 (across the preceding gap) — the pairs whose
// endpoints are adjacent in the sorted endpoint sequence.
inline void enumerate_rec(const IntervalSystem &system, bool adjacency_only,
                          int i, unsigned used_rights,
                          std::vector<std::pair<int, int>> &pairs,
                          const std::function<void(const EndpointConfig &)> &fn) {
  const int n = static_cast<int>(system.intervals.size());
  if (i == n) {
    EndpointConfig config;
    config.pairs = pairs;
    config.unpaired = 2 * n - 2 * static_cast<int>(pairs.size());
    long long cost = static_cast<long long>(config.unpaired) * system.t;
    for (const auto &[li, rj] : pairs) {
      long long l = system.intervals[li].l;
      long long r = system.intervals[rj].r;
      cost += l < r ? r - l : l - r;
    }
    config.cost = cost;
    fn(config);
    return;
  }
  enumerate_rec(system, adjacency_only, i + 1, used_rights, pairs, fn);
  for (int j = 0; j < n; ++j) {
    if (adjacency_only && j != i && j != i - 1) {
      continue;
    }
    if (used_rights & (1u << j)) {
      continue;
    }
    if (!connectable(system.t, system.intervals[i].l,
                     system.intervals[j].r)) {
      continue;
    }
    pairs.emplace_back(i, j);
    enumerate_rec(system, adjacency_only, i + 1, used_rights | (1u << j),
                  pairs, fn);
    pairs.pop_back();
  }
}

inline void require_cap(const IntervalSystem &system, int cap) {
  if (static_cast<int>(system.intervals.size()) > cap) {
    throw std::length_error("entropy: interval count exceeds enumeration cap");
  }
}

}  // namespace detail

// Streams every legal endpoint configuration (with its cost) to fn.
inline void for_each_config(
    const IntervalSystem &system, bool adjacency_only,
    const std::function<void(const EndpointConfig &)> &fn,
    int cap = kDefaultPermutationCap) {
  validate_system(system);
  detail::require_cap(system, cap);
  std::vector<std::pair<int, int>> pairs;
  detail::enumerate_rec(system, adjacency_only, 0, 0u, pairs, fn);
}

inline std::vector<EndpointConfig> enumerate_configs(
    const IntervalSystem &system, bool adjacency_only,
    int cap = kDefaultPermutationCap) {
  std::vector<EndpointConfig> out;
  for_each_config(
      system, adjacency_only,
      [&](const EndpointConfig &config) { out.push_back(config); }, cap);
  return out;
}

// Minimum configuration cost. adjacency_only restricts candidate pairs to
// adjacent endpoints; the minimum is the same either way.
inline long long s2_hol2(const IntervalSystem &system,
                         bool adjacency_only = false,
                         int cap = kDefaultPermutationCap) {
  long long best = -1;
  for_each_config(
      system, adjacency_only,
      [&](const EndpointConfig &config) {
        if (best < 0 || config.cost < best) {
          best = config.cost;
        }
      },
      cap);
  return best;
}

// Permutation form: every left endpoint is matched to exactly one right
// endpoint, each match contributing the single-interval entropy
// min(2t, |l_i - r_sigma(i)|), minimized over permutations sigma.
inline long long s2_hol1(const IntervalSystem &system,
                         int cap = kDefaultPermutationCap) {
  validate_system(system);
  detail::require_cap(system, cap);
  const int n = static_cast<int>(system.intervals.size());
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  long long best = -1;
  do {
    long long total = 0;
    for (int i = 0; i < n; ++i) {
      long long l = system.intervals[i].l;
      long long r = system.intervals[sigma[i]].r;
      long long gap = l < r ? r - l : l - r;
      total += std::min(2 * system.t, gap);
    }
    if (best < 0 || total < best) {
      best = total;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

// Match-or-skip dynamic program over the sorted endpoint sequence
// l_1, r_1, l_2, r_2, ..., r_n. Consecutive endpoints always form a
// left/right couple (either an interval or a gap), so the adjacent-pairs
// minimum is a linear chain matching: each endpoint is left unpaired (cost
// t) or paired with its predecessor (cost |difference|, if connectable).
inline long long s2_adjacent_dp(const IntervalSystem &system) {
  validate_system(system);
  std::vector<long long> points;
  points.reserve(system.intervals.size() * 2);
  for (const Segment &seg : system.intervals) {
    points.push_back(seg.l);
    points.push_back(seg.r);
  }
  const int m = static_cast<int>(points.size());
  std::vector<long long> dp(m + 1, 0);
  for (int k = 1; k <= m; ++k) {
    dp[k] = dp[k - 1] + system.t;
    if (k >= 2 && connectable(system.t, points[k - 2], points[k - 1])) {
      dp[k] = std::min(dp[k], dp[k - 2] + (points[k - 1] - points[k - 2]));
    }
  }
  return dp[m];
}

// I_2(A_1, A_2) = S_2(A_1) + S_2(A_2) - S_2(A_1 A_2), all via s2_hol2.
inline long long mutual_information_2(const IntervalSystem &system) {
  validate_system(system);
  if (system.intervals.size() != 2) {
    throw std::invalid_argument(
        "mutual_information_2: exactly two intervals required");
  }
  IntervalSystem a1{{system.intervals[0]}, system.t};
  IntervalSystem a2{{system.intervals[1]}, system.t};
  return s2_hol2(a1) + s2_hol2(a2) - s2_hol2(system);
}

}  // namespace voidspread
