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

// Closed-form large-q predictions for the random-void-distribution (RVD)
// model: the probability that a spreading operator is trivial on a chosen
// region at time t, the void-count lower bound G for a single interval, the
// two-interval Renyi-2 entropy, operator transition probabilities, and the
// connected/disconnected competition when the initial operator already
// contains a void.
//
// Every probability here is an exact power of the local dimension q. To keep
// tiny values exact (q^{-2|A|} underflows double well before |A| = 40), they
// are returned as a QPower: a (mantissa, exponent) pair standing for
// mantissa * q^exponent, with a float view for display only.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace voidspread {

using boost::multiprecision::cpp_int;

// Exact value mantissa * q^exponent. In this library the mantissa is always
// 0 or 1; it exists so that "impossible" (probability zero) has a
// representation distinct from any power of q.
struct QPower {
  long long q = 2;
  long long mantissa = 1;
  long long exponent = 0;

  static QPower zero(long long q) { return QPower{q, 0, 0}; }
  static QPower power_of_q(long long q, long long exponent) {
    return QPower{q, 1, exponent};
  }

  bool is_zero() const { return mantissa == 0; }

  double to_double() const {
    if (mantissa == 0) {
      return 0.0;
    }
    return static_cast<double>(mantissa) *
           std::pow(static_cast<double>(q), static_cast<double>(exponent));
  }

  // log base q; only defined for mantissa == 1.
  long long log_q() const {
    if (mantissa != 1) {
      throw std::domain_error("QPower::log_q: value is not a power of q");
    }
    return exponent;
  }

  // Exact integer view, defined for non-negative exponents.
  cpp_int to_integer() const {
    if (mantissa == 0) {
      return 0;
    }
    if (exponent < 0) {
      throw std::domain_error("QPower::to_integer: negative exponent");
    }
    cpp_int result = 1;
    for (long long i = 0; i < exponent; ++i) {
      result *= q;
    }
    return result * mantissa;
  }
};

inline bool operator==(const QPower &a, const QPower &b) {
  if (a.q != b.q) {
    return false;
  }
  if (a.mantissa == 0 || b.mantissa == 0) {
    return a.mantissa == b.mantissa;
  }
  return a.mantissa == b.mantissa && a.exponent == b.exponent;
}

inline bool operator!=(const QPower &a, const QPower &b) { return !(a == b); }

inline QPower operator*(const QPower &a, const QPower &b) {
  if (a.q != b.q) {
    throw std::invalid_argument("QPower: mismatched bases");
  }
  if (a.mantissa == 0 || b.mantissa == 0) {
    return QPower::zero(a.q);
  }
  return QPower{a.q, a.mantissa * b.mantissa, a.exponent + b.exponent};
}

// Total order treating zero as smaller than every power of q (all powers of
// q are positive, so this is the numeric order).
inline bool operator<(const QPower &a, const QPower &b) {
  if (a.q != b.q) {
    throw std::invalid_argument("QPower: mismatched bases");
  }
  if (a.mantissa == 0) {
    return b.mantissa != 0;
  }
  if (b.mantissa == 0) {
    return false;
  }
  if (a.exponent != b.exponent) {
    return a.exponent < b.exponent;
  }
  return a.mantissa < b.mantissa;
}

inline bool operator<=(const QPower &a, const QPower &b) { return !(b < a); }
inline bool operator>(const QPower &a, const QPower &b) { return b < a; }
inline bool operator>=(const QPower &a, const QPower &b) { return !(a < b); }

// A question of the form "with what probability is the time-t operator
// trivial on every component A_1..A_n", posed purely in terms of component
// lengths. The causal flag records whether the target region lies inside the
// forward light cone of the initial operator; geometry is the caller's
// responsibility because the model never sees actual coordinates.
struct RvdQuery {
  long long q = 2;
  std::vector<long long> component_lengths;
  long long t = 0;
  bool causal = true;
  std::optional<long long> initial_void_length;
};

namespace detail {

inline void require_base(long long q) {
  if (q < 2) {
    throw std::invalid_argument("rvd: q must be at least 2");
  }
}

inline void require_time(long long t) {
  if (t < 0) {
    throw std::invalid_argument("rvd: t must be non-negative");
  }
}

inline void require_length(long long len, const char *what) {
  if (len < 0) {
    throw std::invalid_argument(std::string("rvd: ") + what +
                                " must be non-negative");
  }
}

}  // namespace detail

// Probability that an initially void-free operator is trivial on every
// component of the query at time t:
//
//   P = q^{-2 sum |A_i|}   if 2t >= max |A_i| and the region is causal,
//   P = 0                  otherwise.
//
// The time threshold is inclusive: a component of length exactly 2t can just
// barely be vacated.
inline QPower rvd_void_probability(const RvdQuery &query) {
  detail::require_base(query.q);
  detail::require_time(query.t);
  if (query.initial_void_length.has_value()) {
    throw std::invalid_argument(
        "rvd_void_probability: query must not carry an initial void; use "
        "initial_void_probability");
  }
  if (query.component_lengths.empty()) {
    throw std::invalid_argument(
        "rvd_void_probability: at least one component required");
  }
  long long total = 0;
  long long longest = 0;
  for (long long len : query.component_lengths) {
    if (len <= 0) {
      throw std::invalid_argument(
          "rvd_void_probability: component lengths must be positive");
    }
    total += len;
    longest = std::max(longest, len);
  }
  if (!query.causal || 2 * query.t < longest) {
    return QPower::zero(query.q);
  }
  return QPower::power_of_q(query.q, -2 * total);
}

// Expected number of operators launched from interval B that develop a void
// covering the single interval A (A inside B's light cone):
//
//   G = q^{|B| - 2|A|}  when |B| > 2|A| and 2t > |A|,
//   G = 1               otherwise (ties included).
inline QPower rvd_G(long long q, long long len_a, long long len_b,
                    long long t) {
  detail::require_base(q);
  detail::require_time(t);
  detail::require_length(len_a, "len_a");
  detail::require_length(len_b, "len_b");
  if (len_b <= 2 * len_a || 2 * t <= len_a) {
    return QPower::power_of_q(q, 0);
  }
  return QPower::power_of_q(q, len_b - 2 * len_a);
}

// Renyi-2 entropy (in s_eq units, i.e. units of log q) of two intervals of
// lengths |A_1| <= |A_2| separated by a gap of length |R|. Inputs in either
// order are symmetrized. For a narrow gap the intervals share entanglement
// across R; for a wide gap they are independent single intervals. Both
// branches agree when |R| = |A_1|.
inline long long rvd_two_interval_s2(long long len_a1, long long len_a2,
                                     long long len_r, long long t) {
  detail::require_time(t);
  if (len_a1 <= 0 || len_a2 <= 0) {
    throw std::invalid_argument(
        "rvd_two_interval_s2: interval lengths must be positive");
  }
  detail::require_length(len_r, "len_r");
  if (len_a1 > len_a2) {
    std::swap(len_a1, len_a2);
  }
  if (len_r < len_a1) {
    return std::min({4 * t, len_r + 2 * t, len_a1 + len_a2});
  }
  return std::min(2 * t, len_a1) + std::min(2 * t, len_a2);
}

struct TransitionResult {
  QPower probability;
  bool causal = true;
};

// Probability that a given void-free operator of length l_i evolves, after t
// layers, into one specific void-free operator of length l_f. Independent of
// which operators are chosen; summing over the ~q^{2 l_f} maximal-length
// finals (l_f = l_i + 2t) gives exactly 1. Growing faster than the light
// cone is impossible and reported with causal = false.
inline TransitionResult transition_probability(long long q, long long l_i,
                                               long long l_f, long long t) {
  detail::require_base(q);
  detail::require_time(t);
  if (l_i <= 0 || l_f <= 0) {
    throw std::invalid_argument(
        "transition_probability: operator lengths must be positive");
  }
  if (l_f > l_i + 2 * t) {
    return TransitionResult{QPower::zero(q), false};
  }
  return TransitionResult{QPower::power_of_q(q, -l_i - l_f - 2 * t), true};
}

// Average probability for a random operator drawn from the stationary
// distribution to be trivial on a region of lenA sites: one in d_A^2.
inline QPower haar_average_trivial_probability(long long q, long long len_a) {
  detail::require_base(q);
  detail::require_length(len_a, "len_a");
  return QPower::power_of_q(q, -2 * len_a);
}

// Competition between the two ways an operator that starts with an internal
// void of length |G| can present a void covering A at time t.
//
//   connected:    the two halves merge and later re-open a void; value
//                 q^{-2|A|}, possible once 2t > |A| and 2t > |G|.
//   disconnected: the halves never touch, each retreating from its side of
//                 A; value q^{|G| - |A| - 2t}, possible once 2t >= |A| - |G|.
//
// The exponents cross at t = (|A| + |G|)/2; below it the disconnected
// process dominates, above it the connected one. With |G| = 0 the best
// branch reduces exactly to rvd_void_probability of a single component.
struct InitialVoidBreakdown {
  QPower connected;
  bool connected_admissible = false;
  QPower disconnected;
  bool disconnected_admissible = false;
  QPower best;
  double crossover_t = 0.0;
};

inline InitialVoidBreakdown initial_void_probability(long long q,
                                                     long long len_a,
                                                     long long len_g,
                                                     long long t) {
  detail::require_base(q);
  detail::require_time(t);
  if (len_a <= 0) {
    throw std::invalid_argument(
        "initial_void_probability: len_a must be positive");
  }
  detail::require_length(len_g, "len_g");
  InitialVoidBreakdown out;
  out.connected = QPower::power_of_q(q, -2 * len_a);
  out.connected_admissible = (2 * t > len_a) && (2 * t > len_g);
  out.disconnected = QPower::power_of_q(q, len_g - len_a - 2 * t);
  out.disconnected_admissible = (2 * t >= len_a - len_g);
  out.crossover_t = static_cast<double>(len_a + len_g) / 2.0;
  out.best = QPower::zero(q);
  if (out.connected_admissible) {
    out.best = out.connected;
  }
  if (out.disconnected_admissible && out.best < out.disconnected) {
    out.best = out.disconnected;
  }
  return out;
}

}  // namespace voidspread
