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

// Executable verification of the unitarity counting identities that tie void
// formation to containment counts and mutual information. Every check
// compares two exactly computed integers — census counts and powers of q —
// so a verdict never involves floating point. Identities only hold in
// specific time windows; outside a window a report is marked not applicable,
// and window boundaries (where the strict inequalities tie) are skipped and
// labeled so that sweeps can count them.
//
// The complement of a two-interval region is unbounded on both sides. Its
// containment count enters only through the factor N(complement, J; t) with
// a finite initial window J, which the census evaluates directly: sites
// beyond the evolution window can never carry support, so the two infinite
// flanks act as ordinary allowed regions. Truncation independence of this
// factor is spot-checked in the test suite rather than assumed.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "voidspread/census.hpp"
#include "voidspread/philox.hpp"
#include "voidspread/region.hpp"
#include "voidspread/rvd.hpp"

namespace voidspread {

struct ConstraintReport {
  std::string id;
  Model model = Model::kFreePropagation;
  int q = 3;
  int t = 0;
  std::string inputs;
  cpp_int left = 0;   // exactly computed left-hand side
  cpp_int right = 0;  // exactly computed right-hand side (or lower bound)
  bool applicable = false;
  bool pass = true;
  std::string notes;
};

// A report only counts against a suite when it was applicable and failed.
inline bool report_ok(const ConstraintReport& r) {
  return !r.applicable || r.pass;
}

namespace detail {

inline cpp_int qpow_ll(int q, long long e) {
  if (e < 0) throw std::logic_error("qpow_ll: negative exponent");
  cpp_int r = 1;
  for (long long i = 0; i < e; ++i) r *= q;
  return r;
}

inline site_t interval_size(const Interval& iv) {
  if (iv.left_infinite() || iv.right_infinite())
    throw std::invalid_argument("constraint regions must be finite");
  return iv.b - iv.a + 1;
}

inline std::string interval_str(const Interval& iv) {
  std::ostringstream os;
  os << "[" << iv.a << "," << iv.b << "]";
  return os.str();
}

inline std::string region_str(const Region& r) {
  if (r.is_empty()) return "{}";
  std::ostringstream os;
  bool first = true;
  for (const auto& iv : r.components()) {
    if (!first) os << "+";
    first = false;
    os << "[";
    if (iv.left_infinite())
      os << "-inf";
    else
      os << iv.a;
    os << ",";
    if (iv.right_infinite())
      os << "+inf";
    else
      os << iv.b;
    os << "]";
  }
  return os.str();
}

inline ConstraintReport base_report(std::string id, Model model, int q, int t,
                                    std::string inputs) {
  ConstraintReport r;
  r.id = std::move(id);
  r.model = model;
  r.q = q;
  r.t = t;
  r.inputs = std::move(inputs);
  return r;
}

inline void mark_boundary(ConstraintReport& r, const std::string& what) {
  r.applicable = false;
  r.pass = true;
  r.notes = "boundary " + what + ", skipped";
}

inline void mark_window(ConstraintReport& r, const std::string& window) {
  r.applicable = false;
  r.pass = true;
  r.notes = "not applicable, window requires " + window;
}

inline void settle(ConstraintReport& r, cpp_int left, cpp_int right) {
  r.applicable = true;
  r.left = std::move(left);
  r.right = std::move(right);
  r.pass = r.left == r.right;
}

}  // namespace detail

// Void count through a single interval's own light cone: G(A, J(A); t) must
// equal 1 before the cone midpoint crosses A and q^{2t-|A|} after.
inline ConstraintReport check_cone_void_growth(Model model, int q,
                                               const Interval& A, int t,
                                               const CensusOptions& opts = {}) {
  const site_t len = detail::interval_size(A);
  ConstraintReport r = detail::base_report("cone_void_growth", model, q, t,
                                           "A=" + detail::interval_str(A));
  if (2 * static_cast<site_t>(t) == len) {
    detail::mark_boundary(r, "2t = |A|");
    return r;
  }
  cpp_int g = count_voids(model, q, Region(A), causal_region(Region(A), t), t,
                          opts);
  cpp_int want = 2 * static_cast<site_t>(t) < len
                     ? cpp_int(1)
                     : detail::qpow_ll(q, 2LL * t - len);
  detail::settle(r, std::move(g), std::move(want));
  return r;
}

// Identities for a gap R between two intervals A1, A2 (adjacent ordered
// layout A1 R A2). Emits four reports:
//   disjoint_factorization  2t < |R|:        N_A = N_A1 * N_A2
//   gap_transfer            l1 < 2t <= l2:   q^|R| G(R,K(R)) = q^|S| G(S,K(S))
//   gap_vs_complement       2t > l2:         q^{2t+|R|} G(R,K(R)) =
//                                            q^|A| N(comp, J(A1 R A2))
//   complement_containment  2t > |A|+|R|:    N(comp, J(A1 R A2)) =
//                                            q^{2t+|R|-|A|}
// where S is the smaller of A1, A2, K(S) is J(S) cut to the past domain of
// the lattice on S's far side through R, l1 = max(|S|, |R|),
// l2 = max(|larger|, |R|), and comp is the complement of A1 A2 (two infinite
// flanks plus R).
inline std::vector<ConstraintReport> check_gap_transfer(
    Model model, int q, const Interval& A1, const Interval& R,
    const Interval& A2, int t, const CensusOptions& opts = {}) {
  const site_t la1 = detail::interval_size(A1);
  const site_t lr = detail::interval_size(R);
  const site_t la2 = detail::interval_size(A2);
  if (A1.b + 1 != R.a || R.b + 1 != A2.a)
    throw std::invalid_argument(
        "check_gap_transfer: A1, R, A2 must be adjacent left to right");
  const site_t la = la1 + la2;
  const site_t l1 = std::max(std::min(la1, la2), lr);
  const site_t l2 = std::max(std::max(la1, la2), lr);
  const site_t tt = 2 * static_cast<site_t>(t);
  const std::string inputs = "A1=" + detail::interval_str(A1) +
                             " R=" + detail::interval_str(R) +
                             " A2=" + detail::interval_str(A2);

  const Region region_a({A1, A2});
  const Region complement({Interval(kNegInf, A1.a - 1), R,
                           Interval(A2.b + 1, kPosInf)});
  const Region j_all = causal_region(Region(Interval(A1.a, A2.b)), t);
  const KRegions ks = k_regions(A1, R, A2, t);

  bool have_gr = false;
  cpp_int gr = 0;
  auto gap_voids = [&]() -> const cpp_int& {
    if (!have_gr) {
      gr = count_voids(model, q, Region(R), ks.K_R, t, opts);
      have_gr = true;
    }
    return gr;
  };
  bool have_nc = false;
  cpp_int nc = 0;
  auto complement_count = [&]() -> const cpp_int& {
    if (!have_nc) {
      nc = count_contained(model, q, complement, j_all, t, opts);
      have_nc = true;
    }
    return nc;
  };

  std::vector<ConstraintReport> out;

  {  // Factorization across a still-causally-separating gap.
    ConstraintReport r =
        detail::base_report("disjoint_factorization", model, q, t, inputs);
    if (tt == lr) {
      detail::mark_boundary(r, "2t = |R|");
    } else if (tt > lr) {
      detail::mark_window(r, "2t < |R|");
    } else {
      cpp_int na = count_contained(model, q, region_a,
                                   causal_region(region_a, t), t, opts);
      cpp_int n1 = count_contained(model, q, Region(A1),
                                   causal_region(Region(A1), t), t, opts);
      cpp_int n2 = count_contained(model, q, Region(A2),
                                   causal_region(Region(A2), t), t, opts);
      detail::settle(r, std::move(na), n1 * n2);
    }
    out.push_back(std::move(r));
  }

  {  // Void count in the gap transfers to the smaller flanking interval.
    ConstraintReport r =
        detail::base_report("gap_transfer", model, q, t, inputs);
    if (tt == l1) {
      detail::mark_boundary(r, "2t = max(min(|A1|,|A2|), |R|)");
    } else if (tt < l1 || tt > l2) {
      detail::mark_window(r, "max(min(|A1|,|A2|),|R|) < 2t <= max side");
    } else {
      const bool left_smaller = la1 <= la2;
      const Interval& small = left_smaller ? A1 : A2;
      const site_t ls = left_smaller ? la1 : la2;
      Region ray = left_smaller ? Region(Interval(kNegInf, R.b))
                                : Region(Interval(R.a, kPosInf));
      Region k_small = region_intersection(causal_region(Region(small), t),
                                           past_domain(ray, t));
      cpp_int gs = count_voids(model, q, Region(small), k_small, t, opts);
      detail::settle(r, gap_voids() * detail::qpow_ll(q, lr),
                     gs * detail::qpow_ll(q, ls));
      r.notes = std::string("smaller side ") + (left_smaller ? "A1" : "A2") +
                " K=" + detail::region_str(k_small);
    }
    out.push_back(std::move(r));
  }

  {  // Gap void count against containment in the complement.
    ConstraintReport r =
        detail::base_report("gap_vs_complement", model, q, t, inputs);
    if (tt == l2) {
      detail::mark_boundary(r, "2t = max(max(|A1|,|A2|), |R|)");
    } else if (tt < l2) {
      detail::mark_window(r, "2t > max(max(|A1|,|A2|),|R|)");
    } else {
      detail::settle(r, gap_voids() * detail::qpow_ll(q, 2LL * t + lr),
                     complement_count() * detail::qpow_ll(q, la));
      r.notes = "complement = " + detail::region_str(complement);
    }
    out.push_back(std::move(r));
  }

  {  // Late-time containment in the complement is a pure power of q.
    ConstraintReport r =
        detail::base_report("complement_containment", model, q, t, inputs);
    if (tt == la + lr) {
      detail::mark_boundary(r, "2t = |A| + |R|");
    } else if (tt < la + lr) {
      detail::mark_window(r, "2t > |A| + |R|");
    } else {
      detail::settle(r, complement_count(),
                     detail::qpow_ll(q, 2LL * t + lr - la));
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Two adjacent intervals exchange void counts through their outward cones:
// q^|A| G(A, K_l; t) = q^|B| G(B, K_r; t) once 2t exceeds both lengths.
inline ConstraintReport check_adjacent_balance(Model model, int q,
                                               const Interval& A,
                                               const Interval& B, int t,
                                               const CensusOptions& opts = {}) {
  const site_t la = detail::interval_size(A);
  const site_t lb = detail::interval_size(B);
  ConstraintReport r = detail::base_report(
      "adjacent_balance", model, q, t,
      "A=" + detail::interval_str(A) + " B=" + detail::interval_str(B));
  const site_t m = std::max(la, lb);
  if (2 * static_cast<site_t>(t) == m) {
    detail::mark_boundary(r, "2t = max(|A|,|B|)");
    return r;
  }
  if (2 * static_cast<site_t>(t) < m) {
    detail::mark_window(r, "2t > max(|A|,|B|)");
    return r;
  }
  KLeftRight k = k_left_right(A, B, t);
  cpp_int ga = count_voids(model, q, Region(A), k.K_l, t, opts);
  cpp_int gb = count_voids(model, q, Region(B), k.K_r, t, opts);
  detail::settle(r, ga * detail::qpow_ll(q, la), gb * detail::qpow_ll(q, lb));
  r.notes =
      "K_l=" + detail::region_str(k.K_l) + " K_r=" + detail::region_str(k.K_r);
  return r;
}

// Model void count dominates the random-void-distribution prediction. The
// initial window is clipped to A's light cone (and the lattice when one is
// set) before |B| enters the bound; an empty clipped window makes both sides
// equal to one. The inequality is an exact integer statement on gate-aligned
// layouts (every component of A of even size starting on the active
// sublattice, as elsewhere in this suite); one site of misalignment can
// leave the count an O(1) amount below the predicted power, which the check
// then reports as a failure.
inline ConstraintReport check_rvd_lower_bound(Model model, int q,
                                              const Interval& A,
                                              const Region& B, int t,
                                              const CensusOptions& opts = {}) {
  const site_t la = detail::interval_size(A);
  ConstraintReport r = detail::base_report(
      "rvd_lower_bound", model, q, t,
      "A=" + detail::interval_str(A) + " B=" + detail::region_str(B));
  Region cone = causal_region(Region(A), t);
  if (opts.lattice) cone = region_intersection(cone, Region(*opts.lattice));
  Region clipped = region_intersection(B, cone);
  r.applicable = true;
  if (clipped.is_empty()) {
    r.left = 1;
    r.right = 1;
    r.pass = true;
    r.notes = "B misses the light cone of A; both sides 1";
    return r;
  }
  r.left = count_voids(model, q, Region(A), clipped, t, opts);
  QPower bound = rvd_G(q, la, *clipped.size(), t);
  r.right = bound.to_integer();
  r.pass = r.left >= r.right;
  r.notes = "B clipped to " + detail::region_str(clipped);
  return r;
}

// Mutual information between two intervals is carried entirely by voids in
// the gap: N_A = N_A1 N_A2 G(R, K(R); t) and I2(A1,A2) = log_q G(R, K(R); t).
// Two reports, one per identity.
inline std::vector<ConstraintReport> check_mutual_info_void_link(
    Model model, int q, const Interval& A1, const Interval& R,
    const Interval& A2, int t, const CensusOptions& opts = {}) {
  const site_t lr = detail::interval_size(R);
  if (A1.b + 1 != R.a || R.b + 1 != A2.a)
    throw std::invalid_argument(
        "check_mutual_info_void_link: A1, R, A2 must be adjacent");
  const std::string inputs = "A1=" + detail::interval_str(A1) +
                             " R=" + detail::interval_str(R) +
                             " A2=" + detail::interval_str(A2);
  std::vector<ConstraintReport> out;
  ConstraintReport product =
      detail::base_report("void_link_product", model, q, t, inputs);
  ConstraintReport mutual =
      detail::base_report("void_link_mutual_info", model, q, t, inputs);
  if (2 * static_cast<site_t>(t) == lr) {
    detail::mark_boundary(product, "2t = |R|");
    detail::mark_boundary(mutual, "2t = |R|");
    out.push_back(std::move(product));
    out.push_back(std::move(mutual));
    return out;
  }
  const Region region_a({A1, A2});
  const KRegions ks = k_regions(A1, R, A2, t);
  cpp_int g = count_voids(model, q, Region(R), ks.K_R, t, opts);
  cpp_int na = count_contained(model, q, region_a, causal_region(region_a, t),
                               t, opts);
  cpp_int n1 = count_contained(model, q, Region(A1),
                               causal_region(Region(A1), t), t, opts);
  cpp_int n2 = count_contained(model, q, Region(A2),
                               causal_region(Region(A2), t), t, opts);
  detail::settle(product, std::move(na), n1 * n2 * g);
  product.notes = "K(R)=" + detail::region_str(ks.K_R);

  long long i2 = renyi2(model, q, Region(A1), t, opts) +
                 renyi2(model, q, Region(A2), t, opts) -
                 renyi2(model, q, region_a, t, opts);
  mutual.applicable = true;
  mutual.right = g;
  if (i2 < 0) {
    mutual.left = 0;
    mutual.pass = false;
    mutual.notes = "negative mutual information";
  } else {
    mutual.left = detail::qpow_ll(q, i2);
    mutual.pass = mutual.left == mutual.right;
    std::ostringstream os;
    os << "I2 = " << i2 << " in log-q units";
    mutual.notes = os.str();
  }
  out.push_back(std::move(product));
  out.push_back(std::move(mutual));
  return out;
}

// Deterministic counter-based layout sampler for constraint sweeps. All
// geometry is drawn with even component sizes and left endpoints matching
// the layer parity, the alignment under which the closed counting forms
// hold in both circuit families; adjacent even-size blocks keep the
// alignment automatically.
class LayoutSampler {
 public:
  explicit LayoutSampler(unsigned long long seed, uint32_t stream = 0)
      : seed_(seed), stream_(stream) {}

  // Uniform draw on [lo, hi], inclusive.
  long long uniform(long long lo, long long hi) {
    if (hi < lo) throw std::invalid_argument("uniform: empty range");
    const unsigned long long span =
        static_cast<unsigned long long>(hi - lo) + 1ULL;
    unsigned long long w =
        (static_cast<unsigned long long>(next_word()) << 32) | next_word();
    return lo + static_cast<long long>(w % span);
  }

 private:
  uint32_t next_word() {
    if (have_ == 0) {
      block_ = philox4x32(
          {static_cast<uint32_t>(counter_),
           static_cast<uint32_t>(counter_ >> 32), stream_, 0x6c61796fu},
          {static_cast<uint32_t>(seed_), static_cast<uint32_t>(seed_ >> 32)});
      ++counter_;
      have_ = 4;
    }
    return block_[4 - have_--];
  }

  unsigned long long seed_;
  uint32_t stream_;
  unsigned long long counter_ = 0;
  std::array<uint32_t, 4> block_{};
  int have_ = 0;
};

struct SweepOptions {
  int layouts = 200;
  unsigned long long seed = 20260814ULL;
  int q = 3;
  int min_t = 1;
  int max_t = 9;
  CensusOptions census;
};

struct SweepSummary {
  long long reports = 0;
  long long applicable = 0;
  long long passed = 0;
  long long failed = 0;
  long long skipped = 0;        // not applicable for any reason
  long long boundary_ties = 0;  // skipped specifically at a window boundary
  std::map<std::string, long long> applicable_by_id;
  std::vector<ConstraintReport> all;
};

namespace detail {

inline void absorb(SweepSummary& s, ConstraintReport r) {
  ++s.reports;
  if (r.applicable) {
    ++s.applicable;
    ++s.applicable_by_id[r.id];
    if (r.pass)
      ++s.passed;
    else
      ++s.failed;
  } else {
    ++s.skipped;
    if (r.notes.rfind("boundary", 0) == 0) ++s.boundary_ties;
  }
  s.all.push_back(std::move(r));
}

}  // namespace detail

// Randomized geometry sweep running every check on deterministic layouts.
// Layout sizes are kept small enough that each census runs in microseconds
// through the kernel path.
inline SweepSummary run_constraint_sweep(Model model,
                                         const SweepOptions& o = {}) {
  if (o.layouts < 0) throw std::invalid_argument("sweep: layouts < 0");
  if (o.max_t < o.min_t || o.min_t < 0)
    throw std::invalid_argument("sweep: bad t range");
  LayoutSampler rng(o.seed, model == Model::kPerfectTensor ? 2u : 1u);
  SweepSummary s;
  for (int layout = 0; layout < o.layouts; ++layout) {
    // Cycling t guarantees every applicability window is visited; the
    // geometry itself stays randomized.
    const int t = o.min_t + layout % (o.max_t - o.min_t + 1);
    const site_t a0 = (t % 2) + 2 * rng.uniform(0, 4);
    const site_t la1 = 2 * rng.uniform(1, 3);
    const site_t lr = 2 * rng.uniform(1, 2);
    const site_t la2 = 2 * rng.uniform(1, 3);
    const Interval A1(a0, a0 + la1 - 1);
    const Interval R(A1.b + 1, A1.b + lr);
    const Interval A2(R.b + 1, R.b + la2);

    detail::absorb(s, check_cone_void_growth(model, o.q, A1, t, o.census));
    for (auto& r : check_gap_transfer(model, o.q, A1, R, A2, t, o.census))
      detail::absorb(s, std::move(r));
    for (auto& r :
         check_mutual_info_void_link(model, o.q, A1, R, A2, t, o.census))
      detail::absorb(s, std::move(r));

    const site_t lb = 2 * rng.uniform(1, 3);
    const Interval B(A1.b + 1, A1.b + lb);
    detail::absorb(s, check_adjacent_balance(model, o.q, A1, B, t, o.census));

    const Region cone = causal_region(Region(A1), t);
    const site_t lo = rng.uniform(cone.min_site(), cone.max_site());
    const site_t hi = rng.uniform(lo, cone.max_site());
    detail::absorb(s, check_rvd_lower_bound(model, o.q, A1,
                                            Region(Interval(lo, hi)), t,
                                            o.census));
  }
  return s;
}

}  // namespace voidspread
