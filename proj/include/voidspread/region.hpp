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

// Integer-interval geometry on a 1D lattice of sites, together with the
// causal-shadow regions used by the counting and constraint layers:
//
//   past_domain   D(A) : sites whose full forward light cone stays inside A
//   causal_region J(A) : sites within light-cone distance t of A
//   center_region X(A) : sites that can reach both ends of a single interval A
//   k_regions / k_left_right : intersections J(.) with D(.) of enlarged layouts
//
// Sites are integers, intervals are closed, |[a,b]| = b - a + 1, and the
// light-cone speed is fixed to one site per layer. Semi-infinite rays are
// first-class region components so that layouts flanked by rays are
// expressible; size queries on rays report "infinite" (std::nullopt) rather
// than failing.

#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace voidspread {

using site_t = long long;

// Ray sentinels. Scaled down from the numeric limits so that adding or
// subtracting a layer count can never overflow.
inline constexpr site_t kNegInf = std::numeric_limits<site_t>::min() / 4;
inline constexpr site_t kPosInf = std::numeric_limits<site_t>::max() / 4;

struct Interval {
  site_t a = 0;
  site_t b = 0;

  Interval() = default;
  Interval(site_t lo, site_t hi) : a(lo), b(hi) {
    if (a > b) throw std::invalid_argument("Interval: a > b");
  }

  bool left_infinite() const { return a <= kNegInf; }
  bool right_infinite() const { return b >= kPosInf; }
  bool finite() const { return !left_infinite() && !right_infinite(); }

  // Site count; std::nullopt when a ray is present.
  std::optional<site_t> size() const {
    if (!finite()) return std::nullopt;
    return b - a + 1;
  }

  bool contains(site_t x) const { return a <= x && x <= b; }
  bool contains(const Interval& o) const { return a <= o.a && o.b <= b; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// A normalized, ordered union of pairwise disjoint, non-adjacent intervals.
// Adjacent or overlapping inputs are merged on construction.
class Region {
 public:
  Region() = default;
  Region(std::initializer_list<Interval> parts)
      : Region(std::vector<Interval>(parts)) {}
  explicit Region(Interval single) : Region({single}) {}
  explicit Region(std::vector<Interval> parts) {
    std::sort(parts.begin(), parts.end(),
              [](const Interval& x, const Interval& y) { return x.a < y.a; });
    for (const Interval& p : parts) {
      if (!components_.empty() && p.a <= components_.back().b + 1) {
        components_.back().b = std::max(components_.back().b, p.b);
      } else {
        components_.push_back(p);
      }
    }
  }

  static Region empty() { return Region(); }
  static Region left_ray(site_t b) { return Region(Interval(kNegInf, b)); }
  static Region right_ray(site_t a) { return Region(Interval(a, kPosInf)); }

  const std::vector<Interval>& components() const { return components_; }
  bool is_empty() const { return components_.empty(); }
  bool finite() const {
    for (const auto& c : components_)
      if (!c.finite()) return false;
    return true;
  }

  // Total site count; std::nullopt means "infinite" (some ray present).
  std::optional<site_t> size() const {
    site_t n = 0;
    for (const auto& c : components_) {
      auto s = c.size();
      if (!s) return std::nullopt;
      n += *s;
    }
    return n;
  }

  bool contains(site_t x) const {
    for (const auto& c : components_)
      if (c.contains(x)) return true;
    return false;
  }

  bool contains(const Region& o) const {
    for (const auto& oc : o.components()) {
      bool inside = false;
      for (const auto& c : components_)
        if (c.contains(oc)) {
          inside = true;
          break;
        }
      if (!inside) return false;
    }
    return true;
  }

  site_t min_site() const {
    if (is_empty()) throw std::logic_error("Region::min_site on empty region");
    return components_.front().a;
  }
  site_t max_site() const {
    if (is_empty()) throw std::logic_error("Region::max_site on empty region");
    return components_.back().b;
  }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<Interval> components_;
};

inline Region region_union(const Region& x, const Region& y) {
  std::vector<Interval> parts = x.components();
  parts.insert(parts.end(), y.components().begin(), y.components().end());
  return Region(parts);
}

inline Region region_intersection(const Region& x, const Region& y) {
  std::vector<Interval> parts;
  for (const auto& cx : x.components())
    for (const auto& cy : y.components()) {
      site_t lo = std::max(cx.a, cy.a);
      site_t hi = std::min(cx.b, cy.b);
      if (lo <= hi) parts.emplace_back(lo, hi);
    }
  return Region(parts);
}

// Complement of `r` within the closed window `span`.
inline Region region_complement_in(const Region& r, const Interval& span) {
  std::vector<Interval> parts;
  site_t cursor = span.a;
  const Region clipped = region_intersection(r, Region(span));
  for (const auto& c : clipped.components()) {
    if (c.a > cursor) parts.emplace_back(cursor, c.a - 1);
    cursor = c.b + 1;
    if (cursor > span.b) break;
  }
  if (cursor <= span.b) parts.emplace_back(cursor, span.b);
  return Region(parts);
}

namespace detail {
inline site_t shift_lo(site_t a, site_t d) { return a <= kNegInf ? a : a + d; }
inline site_t shift_hi(site_t b, site_t d) { return b >= kPosInf ? b : b + d; }
}  // namespace detail

// D(A): each component [a,b] -> [a+t, b-t] (dropped when empty); rays shrink
// on their finite end only.
inline Region past_domain(const Region& A, site_t t) {
  if (t < 0) throw std::invalid_argument("past_domain: t < 0");
  std::vector<Interval> parts;
  for (const auto& c : A.components()) {
    site_t lo = detail::shift_lo(c.a, +t);
    site_t hi = detail::shift_hi(c.b, -t);
    if (lo <= hi) parts.emplace_back(lo, hi);
  }
  return Region(parts);
}

// J(A): each component [a,b] -> [a-t, b+t]; overlapping results merge.
inline Region causal_region(const Region& A, site_t t) {
  if (t < 0) throw std::invalid_argument("causal_region: t < 0");
  std::vector<Interval> parts;
  for (const auto& c : A.components()) {
    parts.emplace_back(detail::shift_lo(c.a, -t), detail::shift_hi(c.b, +t));
  }
  return Region(parts);
}

// X(A) for a single finite interval A = [a,b]: sites that can reach past both
// ends of A within t layers, i.e. [b-t+1, a+t-1]; empty when 2t <= |A|.
inline Region center_region(const Interval& A, site_t t) {
  if (t < 0) throw std::invalid_argument("center_region: t < 0");
  if (!A.finite())
    throw std::invalid_argument("center_region: A must be a finite interval");
  site_t lo = A.b - t + 1;
  site_t hi = A.a + t - 1;
  if (lo > hi) return Region::empty();
  return Region(Interval(lo, hi));
}

inline Region center_region(const Region& A, site_t t) {
  if (A.components().size() != 1)
    throw std::invalid_argument("center_region: A must be a single interval");
  return center_region(A.components()[0], t);
}

struct KRegions {
  Region K_R;    // J(R) ∩ D(A1 R A2)
  Region K_A1;   // J(A1) ∩ D(B1 A1 R), B1 the left ray adjoining A1
};

// Layout: three contiguous adjacent finite intervals A1, R, A2 in
// left-to-right order.
inline KRegions k_regions(const Interval& A1, const Interval& R,
                          const Interval& A2, site_t t) {
  if (!(A1.finite() && R.finite() && A2.finite()))
    throw std::invalid_argument("k_regions: intervals must be finite");
  if (A1.b + 1 != R.a || R.b + 1 != A2.a)
    throw std::invalid_argument(
        "k_regions: A1, R, A2 must be adjacent and ordered left to right");
  KRegions out;
  out.K_R = region_intersection(causal_region(Region(R), t),
                                past_domain(Region(Interval(A1.a, A2.b)), t));
  out.K_A1 = region_intersection(
      causal_region(Region(A1), t),
      past_domain(Region(Interval(kNegInf, R.b)), t));
  return out;
}

struct KLeftRight {
  Region K_l;  // J(A) ∩ D(L1 A B)
  Region K_r;  // J(B) ∩ D(A B L2)
};

// Layout: A immediately left-adjacent to B; L1/L2 are the flanking rays.
inline KLeftRight k_left_right(const Interval& A, const Interval& B, site_t t) {
  if (!(A.finite() && B.finite()))
    throw std::invalid_argument("k_left_right: intervals must be finite");
  if (A.b + 1 != B.a)
    throw std::invalid_argument("k_left_right: A must be adjacent left of B");
  KLeftRight out;
  out.K_l = region_intersection(causal_region(Region(A), t),
                                past_domain(Region(Interval(kNegInf, B.b)), t));
  out.K_r = region_intersection(causal_region(Region(B), t),
                                past_domain(Region(Interval(A.a, kPosInf)), t));
  return out;
}

}  // namespace voidspread
