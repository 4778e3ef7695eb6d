// Copyright 2026 The voidspread Authors
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

// Acceptance gate: twelve end-to-end checks covering the whole library, run
// against exact counts, closed forms, and Monte Carlo references. Prints one
// PASS/FAIL line per check and exits nonzero when any of them fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "voidspread/census.hpp"
#include "voidspread/constraints.hpp"
#include "voidspread/entropy.hpp"
#include "voidspread/gates.hpp"
#include "voidspread/haar.hpp"
#include "voidspread/pauli.hpp"
#include "voidspread/region.hpp"
#include "voidspread/rvd.hpp"

namespace {

using namespace voidspread;

// ---------------------------------------------------------------------------
// Harness plumbing.

struct Tally {
  std::atomic<long long> checked{0};
  std::atomic<long long> bad{0};
  std::mutex mu;
  std::string first_bad;

  void ok() { checked.fetch_add(1, std::memory_order_relaxed); }
  void fail(const std::string& what) {
    checked.fetch_add(1, std::memory_order_relaxed);
    if (bad.fetch_add(1, std::memory_order_relaxed) == 0) {
      std::lock_guard<std::mutex> lock(mu);
      if (first_bad.empty()) first_bad = what;
    }
  }
  void expect(bool cond, const std::string& what) {
    if (cond)
      ok();
    else
      fail(what);
  }
};

template <class Fn>
void parallel_for(long long n, Fn&& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  int tn = hw ? static_cast<int>(hw) : 4;
  if (tn > n) tn = static_cast<int>(n > 0 ? n : 1);
  if (tn <= 1) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::mutex err_mu;
  std::string err;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(tn));
  for (int k = 0; k < tn; ++k) {
    pool.emplace_back([&] {
      try {
        for (;;) {
          long long i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= n) return;
          fn(i);
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (err.empty()) err = e.what();
        next.store(n);
      }
    });
  }
  for (auto& th : pool) th.join();
  if (!err.empty()) throw std::runtime_error(err);
}

cpp_int pow_q(int q, long long e) {
  cpp_int r = 1;
  for (long long i = 0; i < e; ++i) r *= q;
  return r;
}

std::string istr(const cpp_int& v) { return v.str(); }

// Rows shared between checks: the exhaustive closed-form sweep feeds the
// count lower-bound audit, and the cone-count sweep feeds the closed-form
// cross-check.
struct WindowRow {
  long long len_a = 0;
  long long len_b = 0;
  int t = 0;
  cpp_int G = 0;
};
std::vector<WindowRow> g_closed_form_rows;   // aligned free-model sweep
std::vector<WindowRow> g_cone_rows;          // cone counts, both models
std::vector<WindowRow> g_scan_rows_narrow;   // finite-chain scan, |A| = 2, large t
std::vector<WindowRow> g_scan_rows_wide;     // finite-chain scan, |A| = 8, all t
std::mutex g_rows_mu;

// ---------------------------------------------------------------------------
// 1. Single-interval entropy: census-backed Renyi-2 equals min(2t, |A|) in
//    both Clifford models for |A| in {4, 6, 10} at every time step.

bool criterion_1() {
  Tally tally;
  const std::vector<long long> lens = {4, 6, 10};
  const int t_max = 12;
  std::vector<std::tuple<Model, long long, int>> jobs;
  for (Model m : {Model::kFreePropagation, Model::kPerfectTensor})
    for (long long len : lens)
      for (int t = 0; t <= t_max; ++t) jobs.emplace_back(m, len, t);
  parallel_for(static_cast<long long>(jobs.size()), [&](long long i) {
    auto [m, len, t] = jobs[static_cast<size_t>(i)];
    for (long long a : {static_cast<long long>(t % 2), static_cast<long long>(t % 2 + 4)}) {
      Interval A(a, a + len - 1);
      long long s2 = renyi2(m, 3, Region(A), t);
      long long want = std::min<long long>(2 * t, len);
      tally.expect(s2 == want,
                   model_name(m) + " |A|=" + std::to_string(len) +
                       " a=" + std::to_string(a) + " t=" + std::to_string(t) +
                       ": S2=" + std::to_string(s2) +
                       " want " + std::to_string(want));
    }
  });
  std::printf("    entropy points checked: %lld, mismatches: %lld\n",
              tally.checked.load(), tally.bad.load());
  if (tally.bad.load()) std::printf("    first mismatch: %s\n", tally.first_bad.c_str());
  return tally.bad.load() == 0;
}

// ---------------------------------------------------------------------------
// 2. Free-model window counts: for every aligned interval A (even length
//    <= 6, left endpoint matching the time parity) and every pair-aligned
//    window B (even start, even length <= 10) inside the causal region and a
//    40-site coordinate range, the exact census count of A-covering voids
//    equals q^{|B n X(A)|}, with zero mismatches.

bool criterion_2() {
  Tally tally;
  const long long L = 40;
  struct Job {
    Interval A;
    int t;
  };
  std::vector<Job> jobs;
  for (int t = 1; t <= 9; ++t)
    for (long long len : {2, 4, 6})
      for (long long a = t % 2; a + len - 1 < L; a += 2)
        jobs.push_back({Interval(a, a + len - 1), t});
  std::vector<std::vector<WindowRow>> rows(jobs.size());
  parallel_for(static_cast<long long>(jobs.size()), [&](long long i) {
    const Job& job = jobs[static_cast<size_t>(i)];
    Region J = causal_region(Region(job.A), job.t);
    Region X = center_region(job.A, job.t);
    long long lo = std::max<long long>(0, J.min_site());
    long long hi = std::min<long long>(L - 1, J.max_site());
    for (long long b0 = lo + ((lo % 2 + 2) % 2); b0 <= hi; b0 += 2) {
      for (long long lb = 2; lb <= 10 && b0 + lb - 1 <= hi; lb += 2) {
        Interval B(b0, b0 + lb - 1);
        CensusResult r = census(Model::kFreePropagation, 3, Region(job.A),
                                Region(B), job.t);
        Region overlap = region_intersection(Region(B), X);
        long long sz = overlap.is_empty() ? 0 : *overlap.size();
        cpp_int want = pow_q(3, sz);
        cpp_int closed = free_model_G_closed_form(3, job.A, Region(B), job.t);
        bool good = (r.G == want) && (closed == want);
        tally.expect(good, "A=[" + std::to_string(job.A.a) + "," +
                               std::to_string(job.A.b) + "] B=[" +
                               std::to_string(b0) + "," +
                               std::to_string(b0 + lb - 1) +
                               "] t=" + std::to_string(job.t) + ": census " +
                               istr(r.G) + ", closed form " + istr(closed) +
                               ", overlap power " + istr(want));
        rows[static_cast<size_t>(i)].push_back(
            WindowRow{*Region(job.A).size(), lb, job.t, r.G});
      }
    }
  });
  {
    std::lock_guard<std::mutex> lock(g_rows_mu);
    for (auto& v : rows)
      g_closed_form_rows.insert(g_closed_form_rows.end(), v.begin(), v.end());
  }
  std::printf("    aligned (A, B, t) layouts checked: %lld, mismatches: %lld\n",
              tally.checked.load(), tally.bad.load());
  if (tally.bad.load()) std::printf("    first mismatch: %s\n", tally.first_bad.c_str());
  return tally.bad.load() == 0;
}

// ---------------------------------------------------------------------------
// 3. Cone counts: the number of A-covering voids launched from the full
//    causal region is exactly q^(2t-|A|) once 2t > |A| and exactly 1 when
//    2t < |A|, for both models (the tie 2t = |A| is excluded).

bool criterion_3() {
  Tally tally;
  std::vector<std::tuple<Model, long long, int, long long>> jobs;
  for (Model m : {Model::kFreePropagation, Model::kPerfectTensor})
    for (long long len : {2, 4, 6})
      for (int t = 0; t <= 8; ++t) {
        if (2 * t == len) continue;
        for (long long a : {static_cast<long long>(t % 2), static_cast<long long>(t % 2 + 2)})
          jobs.emplace_back(m, len, t, a);
      }
  std::vector<WindowRow> rows(jobs.size());
  parallel_for(static_cast<long long>(jobs.size()), [&](long long i) {
    auto [m, len, t, a] = jobs[static_cast<size_t>(i)];
    Interval A(a, a + len - 1);
    Region J = causal_region(Region(A), t);
    CensusResult r = census(m, 3, Region(A), J, t);
    cpp_int want = (2 * t < len) ? cpp_int(1) : pow_q(3, 2 * t - len);
    tally.expect(r.G == want,
                 model_name(m) + " |A|=" + std::to_string(len) +
                     " a=" + std::to_string(a) + " t=" + std::to_string(t) +
                     ": G=" + istr(r.G) + " want " + istr(want));
    rows[static_cast<size_t>(i)] = WindowRow{len, len + 2 * t, t, r.G};
  });
  {
    std::lock_guard<std::mutex> lock(g_rows_mu);
    g_cone_rows = rows;
  }
  std::printf("    cone layouts checked: %lld, mismatches: %lld\n",
              tally.checked.load(), tally.bad.load());
  if (tally.bad.load()) std::printf("    first mismatch: %s\n", tally.first_bad.c_str());
  return tally.bad.load() == 0;
}

// ---------------------------------------------------------------------------
// 4. Reconstruction from the center region: every operator on X(A) extends
//    to exactly one initial operator in the cone whose evolution is trivial
//    on A. Exhaustive over the initial family on X(A). The free family
//    satisfies this at every placement; the perfect-tensor family on its
//    aligned layouts (even |A|, left endpoint matching the time parity),
//    mirroring the domain of checks 2 and 3.

bool criterion_4() {
  Tally tally;
  struct Job {
    Model m;
    Interval A;
    int t;
  };
  std::vector<Job> jobs;
  for (long long len = 1; len <= 4; ++len)
    for (int t = 1; t <= 6; ++t) {
      if (2 * t <= len) continue;
      for (long long a : {0LL, 1LL})
        jobs.push_back({Model::kFreePropagation, Interval(a, a + len - 1), t});
    }
  for (long long len : {2, 4})
    for (int t = 1; t <= 6; ++t) {
      if (2 * t <= len) continue;
      for (long long a : {static_cast<long long>(t % 2), static_cast<long long>(t % 2 + 2)})
        jobs.push_back({Model::kPerfectTensor, Interval(a, a + len - 1), t});
    }
  std::atomic<long long> extensions{0};
  parallel_for(static_cast<long long>(jobs.size()), [&](long long i) {
    const Job& job = jobs[static_cast<size_t>(i)];
    Region X = center_region(job.A, job.t);
    InitialSetSpec xs{job.m, 3, detail::initial_region_for(job.m, X)};
    cpp_int n = initial_set_cardinality(xs);
    for (cpp_int k = 0; k < n; ++k) {
      PauliString otilde = unrank(xs, k);
      cpp_int count = x_statement_check(job.m, 3, job.A, job.t, otilde);
      extensions.fetch_add(1, std::memory_order_relaxed);
      tally.expect(count == 1,
                   model_name(job.m) + " A=[" + std::to_string(job.A.a) + "," +
                       std::to_string(job.A.b) + "] t=" +
                       std::to_string(job.t) + " rank " + istr(k) +
                       ": extension count " + istr(count));
    }
  });
  std::printf("    center-region operators checked: %lld, wrong counts: %lld\n",
              extensions.load(), tally.bad.load());
  if (tally.bad.load()) std::printf("    first mismatch: %s\n", tally.first_bad.c_str());
  return tally.bad.load() == 0;
}

// ---------------------------------------------------------------------------
// 5. Finite-chain window scan: perfect-tensor model on an 80-site chain with
//    open ends, fixed window B = [40, 47]. For 120 sampled two-site A in the
//    bulk, the void count at late times is at least 3^4 and its minimum over
//    the samples is exactly 3^4; for 120 sampled eight-site A the count
//    never drops below 1 and strictly exceeds it somewhere.

bool criterion_5() {
  const long long L = 80;
  const Interval B(40, 47);
  const int t_max = 60;
  const int large_t_min = 48;
  const int samples = 120;
  const long long margin = 3;
  CensusOptions opts;
  opts.lattice = Interval(0, L - 1);
  opts.enforce_cone_in_lattice = false;

  bool all_good = true;
  for (long long len : {2, 8}) {
    std::mt19937_64 rng(20260814ULL + static_cast<unsigned long long>(len));
    std::uniform_int_distribution<long long> pos(margin, L - 1 - margin - (len - 1));
    std::vector<long long> starts(samples);
    for (auto& a : starts) a = pos(rng);
    std::vector<std::vector<WindowRow>> rows(starts.size());
    Tally tally;
    parallel_for(static_cast<long long>(starts.size()), [&](long long i) {
      Interval A(starts[static_cast<size_t>(i)],
                 starts[static_cast<size_t>(i)] + len - 1);
      for (int t = 1; t <= t_max; ++t) {
        CensusResult r =
            census(Model::kPerfectTensor, 3, Region(A), Region(B), t, opts);
        tally.expect(r.G >= 1, "G < 1");
        rows[static_cast<size_t>(i)].push_back(WindowRow{len, 8, t, r.G});
      }
    });
    cpp_int min_large = -1, max_all = 0;
    bool any_above_one = false;
    long long large_rows = 0;
    std::vector<WindowRow> flat;
    for (auto& v : rows)
      for (auto& row : v) {
        flat.push_back(row);
        if (row.G > 1) any_above_one = true;
        if (row.G > max_all) max_all = row.G;
        if (row.t >= large_t_min) {
          ++large_rows;
          if (min_large < 0 || row.G < min_large) min_large = row.G;
        }
      }
    if (len == 2) {
      bool floor_exact = (min_large == 81);
      std::printf("    |A|=2: %lld late-time rows, min count %s (floor 81), "
                  "max %s\n",
                  large_rows, istr(min_large).c_str(), istr(max_all).c_str());
      all_good = all_good && floor_exact && tally.bad.load() == 0;
      std::lock_guard<std::mutex> lock(g_rows_mu);
      for (auto& row : flat)
        if (row.t >= large_t_min) g_scan_rows_narrow.push_back(row);
    } else {
      std::printf("    |A|=8: all %zu rows >= 1, strictly above 1: %s, max %s\n",
                  flat.size(), any_above_one ? "yes" : "no",
                  istr(max_all).c_str());
      all_good = all_good && any_above_one && tally.bad.load() == 0;
      std::lock_guard<std::mutex> lock(g_rows_mu);
      g_scan_rows_wide = flat;
    }
  }
  return all_good;
}

// ---------------------------------------------------------------------------
// 6. Entropy estimators agree: the permutation form, the configuration
//    minimum, and the adjacent-pairs dynamic program coincide on 10^4 random
//    interval systems with up to six intervals.

bool criterion_6() {
  Tally tally;
  const long long systems = 10000;
  parallel_for(systems, [&](long long i) {
    std::mt19937_64 rng(0x5eedULL * 1000003ULL + static_cast<unsigned long long>(i));
    int n = 1 + static_cast<int>(rng() % 6);
    std::set<long long> pts;
    std::uniform_int_distribution<long long> coord(0, 60);
    while (static_cast<int>(pts.size()) < 2 * n) pts.insert(coord(rng));
    IntervalSystem sys;
    auto it = pts.begin();
    for (int k = 0; k < n; ++k) {
      long long l = *it++;
      long long r = *it++;
      sys.intervals.push_back(Segment{l, r});
    }
    sys.t = static_cast<long long>(rng() % 81);
    long long a = s2_hol1(sys);
    long long b = s2_hol2(sys);
    long long c = s2_adjacent_dp(sys);
    tally.expect(a == b && b == c,
                 "system " + std::to_string(i) + ": " + std::to_string(a) +
                     " / " + std::to_string(b) + " / " + std::to_string(c));
  });
  std::printf("    random interval systems checked: %lld, disagreements: %lld\n",
              tally.checked.load(), tally.bad.load());
  if (tally.bad.load()) std::printf("    first mismatch: %s\n", tally.first_bad.c_str());
  return tally.bad.load() == 0;
}

// ---------------------------------------------------------------------------
// 7. Closed forms against the estimators: the two-interval entropy formula
//    equals the configuration minimum for every geometry with lengths up to
//    20 and t up to 25, and the window-count power law reproduces the cone
//    counts of check 3 when |B| = |A| + 2t.

bool criterion_7() {
  Tally tally;
  std::vector<std::tuple<long long, long long, long long>> geoms;
  for (long long l1 = 1; l1 <= 20; ++l1)
    for (long long l2 = 1; l2 <= 20; ++l2)
      for (long long lr = 1; lr <= 20; ++lr) geoms.emplace_back(l1, l2, lr);
  parallel_for(static_cast<long long>(geoms.size()), [&](long long i) {
    auto [l1, l2, lr] = geoms[static_cast<size_t>(i)];
    IntervalSystem sys;
    sys.intervals.push_back(Segment{0, l1});
    sys.intervals.push_back(Segment{l1 + lr, l1 + lr + l2});
    for (long long t = 0; t <= 25; ++t) {
      sys.t = t;
      long long closed = rvd_two_interval_s2(l1, l2, lr, t);
      long long est = s2_hol2(sys);
      tally.expect(closed == est,
                   "l1=" + std::to_string(l1) + " l2=" + std::to_string(l2) +
                       " gap=" + std::to_string(lr) + " t=" + std::to_string(t) +
                       ": " + std::to_string(closed) + " vs " +
                       std::to_string(est));
    }
  });
  long long two_interval_checked = tally.checked.load();
  // Cross-check the count power law against the stored cone counts.
  long long cone_checked = 0;
  for (const WindowRow& row : g_cone_rows) {
    QPower p = rvd_G(3, row.len_a, row.len_b, row.t);
    cpp_int want = pow_q(3, p.log_q());
    ++cone_checked;
    tally.expect(want == row.G,
                 "cone |A|=" + std::to_string(row.len_a) +
                     " t=" + std::to_string(row.t) + ": power law " +
                     istr(want) + " vs census " + istr(row.G));
  }
  std::printf("    two-interval geometries: %lld, cone rows: %lld, "
              "disagreements: %lld\n",
              two_interval_checked, cone_checked, tally.bad.load());
  if (tally.bad.load()) std::printf("    first mismatch: %s\n", tally.first_bad.c_str());
  return tally.bad.load() == 0;
}

// ---------------------------------------------------------------------------
// 8. Count lower bound: the random-circuit window count q^(|B|-2|A|) bounds
//    the exact void count from below on every aligned layout from check 2,
//    every asserted row of the finite-chain scan, and 200 fresh random
//    aligned perfect-tensor layouts.

bool criterion_8() {
  Tally tally;
  for (const WindowRow& row : g_closed_form_rows) {
    QPower bound = rvd_G(3, row.len_a, row.len_b, row.t);
    tally.expect(row.G >= pow_q(3, bound.log_q()),
                 "aligned sweep |A|=" + std::to_string(row.len_a) +
                     " |B|=" + std::to_string(row.len_b) +
                     " t=" + std::to_string(row.t) + ": G=" + istr(row.G));
  }
  for (const WindowRow& row : g_scan_rows_narrow)
    tally.expect(row.G >= 81, "scan |A|=2 t=" + std::to_string(row.t));
  for (const WindowRow& row : g_scan_rows_wide)
    tally.expect(row.G >= 1, "scan |A|=8 t=" + std::to_string(row.t));

  // Fresh random aligned perfect-tensor layouts with arbitrary windows
  // inside the causal region.
  std::mt19937_64 rng(0xB0B5ULL);
  long long fresh_applicable = 0;
  for (int k = 0; k < 200; ++k) {
    int t = 1 + static_cast<int>(rng() % 8);
    long long len = 2 * (1 + static_cast<long long>(rng() % 3));
    long long a = t % 2 + 2 * static_cast<long long>(rng() % 5);
    Interval A(a, a + len - 1);
    Region J = causal_region(Region(A), t);
    long long jl = J.min_site(), jh = J.max_site();
    long long b0 = jl + static_cast<long long>(rng() % (jh - jl + 1));
    long long b1 = b0 + static_cast<long long>(rng() % (jh - b0 + 1));
    ConstraintReport r = check_rvd_lower_bound(Model::kPerfectTensor, 3, A,
                                               Region(Interval(b0, b1)), t);
    if (r.applicable) ++fresh_applicable;
    tally.expect(report_ok(r), "fresh layout " + r.inputs +
                                   " t=" + std::to_string(t) + ": count " +
                                   istr(r.left) + " < bound " + istr(r.right));
  }
  std::printf("    bound comparisons: %lld (fresh applicable layouts: %lld), "
              "violations: %lld\n",
              tally.checked.load(), fresh_applicable, tally.bad.load());
  if (tally.bad.load()) std::printf("    first violation: %s\n", tally.first_bad.c_str());
  return tally.bad.load() == 0 && fresh_applicable > 0;
}

// ---------------------------------------------------------------------------
// 9. Constraint sweep: every geometric consistency check passes on 200
//    random layouts per model; windows skipped at a boundary tie are counted
//    rather than silently dropped.

bool criterion_9() {
  bool good = true;
  for (Model m : {Model::kFreePropagation, Model::kPerfectTensor}) {
    SweepOptions o;
    o.layouts = 200;
    SweepSummary s = run_constraint_sweep(m, o);
    std::printf("    %s: %lld reports, %lld applicable, %lld failed, "
                "%lld skipped (%lld boundary ties)\n",
                model_name(m).c_str(), s.reports, s.applicable, s.failed,
                s.skipped, s.boundary_ties);
    good = good && s.failed == 0;
    for (const char* id : {"gap_transfer", "gap_vs_complement",
                           "complement_containment", "adjacent_balance",
                           "rvd_lower_bound"}) {
      auto it = s.applicable_by_id.find(id);
      if (it == s.applicable_by_id.end() || it->second <= 0) {
        std::printf("    %s: check %s never applicable\n",
                    model_name(m).c_str(), id);
        good = false;
      }
    }
  }
  return good;
}

// ---------------------------------------------------------------------------
// 10. Haar brickwork sanity: spreading weights of an evolved operator sum to
//     one (exhaustively for L <= 3), the Renyi-2 entropy of a region equals
//     that of its complement, and every weight outside the gate light cone
//     is exactly zero. 500 sampled circuits at q = 2.

bool criterion_10() {
  Tally tally;
  const int samples = 500;
  std::atomic<long long> exhaustive{0}, causality{0};
  parallel_for(samples, [&](long long s) {
    const int L = 2 + static_cast<int>(s % 5);        // 2..6
    const int layers = 1 + static_cast<int>((s / 5) % 4);  // 1..4
    SampledCircuit c = sample_circuit(2, L, layers, 0xFACEULL,
                                      static_cast<std::uint32_t>(s));
    std::mt19937_64 rng(0xFACEULL * 2654435761ULL +
                        static_cast<unsigned long long>(s));
    // Random nontrivial product operator on one or two sites.
    PauliString alpha(2);
    long long s0 = static_cast<long long>(rng() % L);
    int e0 = 1 + static_cast<int>(rng() % 3);
    alpha.set(s0, e0 & 1, (e0 >> 1) & 1);
    if (L >= 2 && rng() % 2 == 0) {
      long long s1 = static_cast<long long>(rng() % L);
      if (s1 != s0) {
        int e1 = 1 + static_cast<int>(rng() % 3);
        alpha.set(s1, e1 & 1, (e1 >> 1) & 1);
      }
    }

    // Light-cone window grown by the same overlap rule the evolution uses.
    Region supp = support(alpha);
    long long lo = supp.min_site(), hi = supp.max_site();
    for (const PlacedGate& g : c.gates) {
      const long long ga = g.left_site, gb = g.left_site + 1;
      if (gb < lo || ga > hi) continue;
      lo = std::min(lo, ga);
      hi = std::max(hi, gb);
    }
    WindowedOperator w = evolve_heisenberg(c, alpha);
    tally.expect(w.lo == lo && w.hi == hi, "window mismatch vs gate replay");

    // Unitarity of the spreading weights.
    if (L <= 3) {
      exhaustive.fetch_add(1, std::memory_order_relaxed);
      double total = 0.0;
      const long long nops = detail::ipow_ll(4, L);
      for (long long r = 0; r < nops; ++r) {
        PauliString beta(2);
        long long rem = r;
        for (int site = 0; site < L; ++site) {
          beta.set(site, static_cast<int>(rem % 2),
                   static_cast<int>((rem / 2) % 2));
          rem /= 4;
        }
        total += spreading_weight(c, alpha, beta);
      }
      tally.expect(std::abs(total - 1.0) < 1e-10,
                   "exhaustive weight sum " + std::to_string(total));
    } else {
      const double dim = static_cast<double>(w.m.rows());
      double total = w.m.squaredNorm() / dim;
      tally.expect(std::abs(total - 1.0) < 1e-10,
                   "norm weight sum " + std::to_string(total));
    }

    // Entropy of a region equals the entropy of its complement.
    long long cut_a = static_cast<long long>(rng() % L);
    long long cut_b = static_cast<long long>(rng() % L);
    if (cut_a > cut_b) std::swap(cut_a, cut_b);
    if (cut_b - cut_a + 1 >= L) cut_b = cut_a;  // keep the complement nonempty
    Region A((Interval(cut_a, cut_b)));
    Region Abar = region_complement_in(A, Interval(0, L - 1));
    double sa = renyi2_exact(c, A);
    double sb = renyi2_exact(c, Abar);
    tally.expect(std::abs(sa - sb) < 1e-10,
                 "S2(A)=" + std::to_string(sa) + " S2(comp)=" +
                     std::to_string(sb));

    // Exact zeros outside the light cone.
    if (lo > 0 || hi < L - 1) {
      causality.fetch_add(1, std::memory_order_relaxed);
      long long outside = lo > 0 ? lo - 1 : hi + 1;
      PauliString beta(2);
      beta.set(outside, 1, 0);
      tally.expect(spreading_weight(c, alpha, beta) == 0.0,
                   "nonzero weight outside the cone");
      PauliString straddle(2);
      straddle.set(outside, 1, 0);
      straddle.set(std::min(std::max(lo, 0LL), static_cast<long long>(L - 1)),
                   0, 1);
      tally.expect(spreading_weight(c, alpha, straddle) == 0.0,
                   "nonzero straddling weight outside the cone");
    }
  });
  std::printf("    circuits: %d (exhaustive sums: %lld, cone zero checks: "
              "%lld), failures: %lld\n",
              samples, exhaustive.load(), causality.load(), tally.bad.load());
  if (tally.bad.load()) std::printf("    first failure: %s\n", tally.first_bad.c_str());
  return tally.bad.load() == 0;
}

// ---------------------------------------------------------------------------
// 11. Off-diagonal spreading correlations shrink with the local dimension:
//     the mean magnitude of the purity's off-diagonal remainder at L = 4,
//     |A| = 2, two layers decreases strictly from q = 2 to 3 to 4, with
//     non-overlapping two-sigma intervals. Deviations from the q^(-2|A|)
//     scale are recorded without a pass/fail tolerance.

bool criterion_11() {
  const int L = 4, layers = 2, samples = 2000;
  const Region A((Interval(1, 2)));
  struct Stat {
    double mean = 0.0, se = 0.0;
  };
  std::vector<Stat> stats;
  for (int q : {2, 3, 4}) {
    std::vector<double> vals(samples);
    parallel_for(samples, [&](long long s) {
      SampledCircuit c = sample_circuit(q, L, layers, 0xD1CEULL,
                                        static_cast<std::uint32_t>(s));
      vals[static_cast<size_t>(s)] = std::abs(offdiagonal_defect(c, A));
    });
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= samples;
    double var = 0.0;
    for (double v : vals) var += (v - mean) * (v - mean);
    var /= (samples - 1);
    double se = std::sqrt(var / samples);
    double scale = std::pow(q, -4.0);
    std::printf("    q=%d: mean |defect| = %.6g +- %.2g  (q^-4 = %.6g, "
                "ratio %.3f)\n",
                q, mean, 2 * se, scale, mean / scale);
    stats.push_back(Stat{mean, se});
  }
  bool ordered = true;
  for (size_t i = 0; i + 1 < stats.size(); ++i) {
    if (!(stats[i].mean - 2 * stats[i].se > stats[i + 1].mean + 2 * stats[i + 1].se))
      ordered = false;
  }
  if (!ordered) std::printf("    two-sigma intervals overlap or are misordered\n");
  return ordered;
}

// ---------------------------------------------------------------------------
// 12. Gate-level spreading pattern: a single-site perfect-tensor operator
//     grows with sharp fronts, its support after t layers filling exactly
//     the window [-(t-1), t] around the initial gate pair; and a 40-site
//     initial operator develops no more interior voids per layer than the
//     single-site one for the first 40 layers.

bool criterion_12() {
  Tally tally;
  CircuitSpec circuit;
  circuit.model = Model::kPerfectTensor;
  circuit.q = 3;
  PauliString single(3);
  single.set(0, 1, 0);
  SupportBitmap one = support_bitmap(single, circuit, 81);
  tally.expect(one.rows.size() == 82, "row count");
  for (int r = 0; r < static_cast<int>(one.rows.size()); ++r) {
    const auto& row = one.rows[static_cast<size_t>(r)];
    long long first = -1, last = -1;
    for (long long i = 0; i < static_cast<long long>(row.size()); ++i)
      if (row[static_cast<size_t>(i)]) {
        if (first < 0) first = i;
        last = i;
      }
    long long lo = one.origin + first, hi = one.origin + last;
    long long want_lo = r == 0 ? 0 : -(r - 1);
    long long want_hi = r == 0 ? 0 : r;
    tally.expect(first >= 0 && lo == want_lo && hi == want_hi,
                 "layer " + std::to_string(r) + ": support [" +
                     std::to_string(lo) + "," + std::to_string(hi) +
                     "] want [" + std::to_string(want_lo) + "," +
                     std::to_string(want_hi) + "]");
  }

  // The canonical 40-site member of the initial family: X power on even
  // sites, Z power on odd sites. Exhaustive convention scans (digit
  // patterns, placements, first-layer parity, run-width and area metrics)
  // all leave the same two exceptional rows, so the comparison below prints
  // every deviation rather than hiding any.
  PauliString block(3);
  for (long long s = 0; s < 40; ++s) {
    if (s % 2 == 0)
      block.set(s, 1, 0);
    else
      block.set(s, 0, 1);
  }
  SupportBitmap wide = support_bitmap(block, circuit, 40);
  long long wide_total = 0, single_total = 0, pointwise_bad = 0;
  for (int r = 0; r <= 40; ++r) {
    int voids_wide = interior_void_count(wide.rows[static_cast<size_t>(r)]);
    int voids_one = interior_void_count(one.rows[static_cast<size_t>(r)]);
    wide_total += voids_wide;
    single_total += voids_one;
    if (voids_wide > voids_one) {
      ++pointwise_bad;
      std::printf("    layer %d: 40-site operator has %d interior voids, "
                  "single-site has %d\n",
                  r, voids_wide, voids_one);
    }
  }
  std::printf("    sharp fronts over 82 layers: %s; interior voids over 41 "
              "layers: 40-site total %lld vs single-site %lld, rows above "
              "the single-site count: %lld\n",
              tally.bad.load() == 0 ? "exact" : "BROKEN", wide_total,
              single_total, pointwise_bad);
  if (pointwise_bad > 0)
    std::printf("    the excess rows sit at the self-similar closure times "
                "of the single-site pattern, where its void count briefly "
                "collapses; the block operator keeps one seam void there\n");
  if (tally.bad.load()) std::printf("    first failure: %s\n", tally.first_bad.c_str());
  return tally.bad.load() == 0 && pointwise_bad == 0;
}

struct Criterion {
  int number;
  const char* label;
  bool (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "single-interval entropy saturates as min(2t, |A|) in both models",
       criterion_1},
      {2, "aligned free-model window counts equal the overlap power, "
          "exhaustively", criterion_2},
      {3, "cone void counts follow the q^(2t-|A|) growth law in both models",
       criterion_3},
      {4, "every center-region operator has exactly one trivializing "
          "extension", criterion_4},
      {5, "finite-chain window scan holds the late-time random-void floor",
       criterion_5},
      {6, "entropy estimators agree on random interval systems", criterion_6},
      {7, "closed-form entropy and count formulas match the estimators",
       criterion_7},
      {8, "exact void counts never fall below the random-circuit bound",
       criterion_8},
      {9, "geometric consistency checks pass on random layout sweeps",
       criterion_9},
      {10, "Haar spreading weights are unitary, symmetric, and causal",
       criterion_10},
      {11, "off-diagonal spreading correlations shrink with the local "
           "dimension", criterion_11},
      {12, "gate-level fronts are sharp and larger operators make fewer "
           "voids", criterion_12},
  };
  int failures = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria) {
    const auto c0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - c0)
            .count();
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    std::printf("%s  criterion %2d: %s  [%.1fs]\n", ok ? "PASS" : "FAIL",
                c.number, c.label, dt);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("%d/%zu criteria passed in %.1fs\n",
              static_cast<int>(criteria.size()) - failures, criteria.size(),
              total);
  return failures == 0 ? 0 : 1;
}
