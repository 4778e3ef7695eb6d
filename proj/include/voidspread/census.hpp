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

// Exact counting of initial-set operators by where their Heisenberg image
// lands: N(A,B;t) counts operators in I ∩ B whose image is contained in A,
// G(A,B;t) counts those whose image develops a void in A (plus the identity
// contribution of 1), and the Renyi-2 entropy follows from N by operator
// counting.
//
// Two interchangeable computations are provided. The enumeration path walks
// the full rank space of I ∩ B, evolving every string through the circuit —
// the definitional method, range-partitioned across threads and guarded by a
// string budget. The kernel path exploits that both gate tables are additive,
// so evolution is Z_q-linear on the digit coordinates of I ∩ B: containment
// counts are q^(kernel dimension) from Gaussian elimination, and void counts
// follow by inclusion–exclusion over the complement zones of A. The two are
// cross-checked exhaustively in the test suite.

#pragma once

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <vector>

#include "voidspread/gates.hpp"
#include "voidspread/linear.hpp"
#include "voidspread/pauli.hpp"
#include "voidspread/region.hpp"

namespace voidspread {

enum class Method { kAuto, kEnumerate, kKernel };

struct CensusOptions {
  Method method = Method::kAuto;
  unsigned long long budget = 100'000'000ULL;  // enumeration cap, in strings
  int threads = 0;                             // 0 = hardware concurrency
  std::optional<Interval> lattice;
  bool enforce_cone_in_lattice = true;
};

struct CensusResult {
  Model model = Model::kFreePropagation;
  int q = 3;
  Region A;
  Region B;
  int t = 0;
  cpp_int N = 0;
  cpp_int G = 0;
  cpp_int enumerated = 0;  // |I ∩ B|
  double seconds = 0.0;
};

class BudgetError : public std::runtime_error {
 public:
  cpp_int required;
  explicit BudgetError(const cpp_int& r)
      : std::runtime_error("enumeration budget exceeded; required " +
                           r.str() + " strings"),
        required(r) {}
};

// The closed counting forms hold when every component of A has even size
// with its left endpoint matching the layer parity: [even, odd] components
// at even t, [odd, even] components at odd t.
inline bool parity_legal(const Region& A, int t) {
  for (const auto& iv : A.components()) {
    if (iv.left_infinite() || iv.right_infinite()) return false;
    if (((iv.b - iv.a) % 2) == 0) return false;  // odd component size
    if ((((iv.a - t) % 2) + 2) % 2 != 0) return false;
  }
  return !A.is_empty();
}

namespace detail {

// Largest subregion of B usable as an initial-set region for the model: the
// free-propagation family is built from site pairs (2i, 2i+1), so partial
// pairs cannot host a nonidentity member and are dropped.
inline Region initial_region_for(Model model, const Region& B) {
  if (model != Model::kFreePropagation) return B;
  std::vector<Interval> kept;
  for (const auto& iv : B.components()) {
    if (iv.left_infinite() || iv.right_infinite())
      throw std::invalid_argument("initial region must be finite");
    site_t a = iv.a, b = iv.b;
    if (((a % 2) + 2) % 2 != 0) ++a;  // first pair start inside
    while (a + 1 <= b) {
      kept.emplace_back(a, a + 1);
      a += 2;
    }
  }
  return Region(kept);
}

// Census working geometry: the evolution window, per-site classification
// (inside A / presence zone index), and the digit layout of I ∩ B.
struct CensusFrame {
  InitialSetSpec ispec;           // model, q, pair-clipped B
  std::vector<site_t> digits;     // digit sites, left to right
  site_t wlo = 0, whi = -1;       // evolution window (inclusive)
  std::vector<int> site_class;    // 0 = in A, k >= 1 = presence zone k, per window site
  int num_zones = 0;
  bool a_empty = false;
  bool a_covers_all = false;      // complement of A is empty
};

inline CensusFrame make_frame(Model model, int q, const Region& A,
                              const Region& B, int t,
                              const CensusOptions& opts) {
  if (model == Model::kRandomZ)
    throw std::invalid_argument("census: no circuit for the random-z family");
  for (const auto& iv : B.components())
    if (iv.left_infinite() || iv.right_infinite())
      throw std::invalid_argument("census: B must be finite");

  CensusFrame f;
  f.ispec = InitialSetSpec{model, q, initial_region_for(model, B)};
  if (!f.ispec.region.is_empty()) validate_initial_spec(f.ispec);
  f.digits = digit_sites(f.ispec);

  // Evolution window: span of the causal region of B, or the lattice itself
  // when cones are allowed to hit the open boundary.
  if (f.ispec.region.is_empty()) {
    f.wlo = 0;
    f.whi = -1;
  } else {
    Region reach = causal_region(f.ispec.region, t);
    if (opts.lattice) {
      if (opts.enforce_cone_in_lattice) {
        for (const auto& iv : reach.components())
          if (iv.a < opts.lattice->a || iv.b > opts.lattice->b)
            throw std::invalid_argument(
                "census: light cone exits the lattice (pass "
                "enforce_cone_in_lattice=false for reflecting boundaries)");
        f.wlo = reach.min_site();
        f.whi = reach.max_site();
      } else {
        f.wlo = opts.lattice->a;
        f.whi = opts.lattice->b;
        for (const auto& iv : f.ispec.region.components())
          if (iv.a < f.wlo || iv.b > f.whi)
            throw std::invalid_argument("census: B must lie in the lattice");
      }
    } else {
      f.wlo = reach.min_site();
      f.whi = reach.max_site();
    }
  }

  // Presence zones: the components of the complement of A that the void
  // predicate requires support in — every gap between consecutive components
  // plus each finite flank.
  f.a_empty = A.is_empty();
  std::vector<Interval> zones;
  if (!f.a_empty) {
    const auto& comps = A.components();
    if (!comps.front().left_infinite())
      zones.push_back(Interval(kNegInf, comps.front().a - 1));
    for (size_t i = 0; i + 1 < comps.size(); ++i)
      zones.push_back(Interval(comps[i].b + 1, comps[i + 1].a - 1));
    if (!comps.back().right_infinite())
      zones.push_back(Interval(comps.back().b + 1, kPosInf));
    f.a_covers_all = zones.empty() && comps.size() == 1 &&
                     comps.front().left_infinite() &&
                     comps.front().right_infinite();
  }
  f.num_zones = static_cast<int>(zones.size());
  if (f.num_zones > 20)
    throw std::invalid_argument("census: too many presence zones");

  f.site_class.assign(static_cast<size_t>(f.whi - f.wlo + 1), -1);
  for (site_t s = f.wlo; s <= f.whi; ++s) {
    int cls = -1;
    if (!f.a_empty && A.contains(s)) {
      cls = 0;
    } else {
      for (int z = 0; z < f.num_zones; ++z)
        if (s >= zones[z].a && s <= zones[z].b) {
          cls = z + 1;
          break;
        }
    }
    f.site_class[static_cast<size_t>(s - f.wlo)] = cls;
  }
  return f;
}

// Initial exponent footprint of one unit of digit k, as (site, dx, dz).
inline void digit_footprint(const InitialSetSpec& spec, site_t digit_site,
                            std::vector<std::array<site_t, 3>>& out) {
  out.clear();
  switch (spec.model) {
    case Model::kRandomZ:
      out.push_back({digit_site, 0, 1});
      break;
    case Model::kPerfectTensor:
      if ((((digit_site % 2) + 2) % 2) == 0)
        out.push_back({digit_site, 1, 0});
      else
        out.push_back({digit_site, 0, 1});
      break;
    case Model::kFreePropagation:
      if ((((digit_site % 2) + 2) % 2) == 0) {
        out.push_back({digit_site, 1, 0});
        out.push_back({digit_site + 1, 1, 0});
      } else {
        out.push_back({digit_site - 1, 0, 1});
        out.push_back({digit_site, 0, spec.q - 1});
      }
      break;
  }
}

struct PassCounts {
  unsigned long long contained = 0;
  unsigned long long voids = 0;
};

// Walk ranks [start, start+count) of I ∩ B, evolving every string.
inline PassCounts enumerate_range(const CensusFrame& f,
                                  const TwoSiteCliffordGate& gate, int t,
                                  const cpp_int& start,
                                  unsigned long long count) {
  const int D = static_cast<int>(f.digits.size());
  const int q = f.ispec.q;
  std::vector<int> d(D, 0);
  {
    cpp_int k = start;
    for (int i = 0; i < D && k != 0; ++i) {
      d[i] = static_cast<int>(k % q);
      k /= q;
    }
  }
  std::vector<std::vector<std::array<site_t, 3>>> feet(D);
  for (int i = 0; i < D; ++i) digit_footprint(f.ispec, f.digits[i], feet[i]);

  const size_t W = f.site_class.size();
  std::vector<int8_t> xs0(W), zs0(W), xs(W), zs(W);
  PassCounts pc;
  const unsigned full_mask = (1u << f.num_zones) - 1u;
  for (unsigned long long step = 0; step < count; ++step) {
    std::fill(xs0.begin(), xs0.end(), 0);
    std::fill(zs0.begin(), zs0.end(), 0);
    for (int i = 0; i < D; ++i) {
      if (d[i] == 0) continue;
      for (const auto& fp : feet[i]) {
        size_t idx = static_cast<size_t>(fp[0] - f.wlo);
        xs0[idx] = static_cast<int8_t>((xs0[idx] + d[i] * fp[1]) % q);
        zs0[idx] = static_cast<int8_t>((zs0[idx] + d[i] * fp[2]) % q);
      }
    }
    xs = xs0;
    zs = zs0;
    evolve_window(gate, xs, zs, f.wlo, 0, t);

    bool outside_a = false;   // any nontrivial site not in A
    bool inside_a = false;    // any nontrivial site in A
    unsigned zones_hit = 0;
    for (size_t i = 0; i < W; ++i) {
      if ((xs[i] | zs[i]) == 0) continue;
      int cls = f.site_class[i];
      if (cls == 0)
        inside_a = true;
      else {
        outside_a = true;
        if (cls > 0) zones_hit |= 1u << (cls - 1);
      }
    }
    if (!outside_a) ++pc.contained;
    if (!f.a_empty && !inside_a && f.num_zones > 0 && zones_hit == full_mask)
      ++pc.voids;

    for (int i = 0; i < D; ++i) {  // odometer
      if (++d[i] < q) break;
      d[i] = 0;
    }
  }
  return pc;
}

// Images of the digit basis vectors under evolution; column k is the evolved
// exponent vector of one unit of digit k, interleaved (x, z) per site.
inline std::vector<std::vector<int>> digit_images(
    const CensusFrame& f, const TwoSiteCliffordGate& gate, int t) {
  const int D = static_cast<int>(f.digits.size());
  const size_t W = f.site_class.size();
  std::vector<std::vector<int>> images(D);
  std::vector<std::array<site_t, 3>> foot;
  std::vector<int8_t> xs(W), zs(W);
  for (int k = 0; k < D; ++k) {
    std::fill(xs.begin(), xs.end(), 0);
    std::fill(zs.begin(), zs.end(), 0);
    digit_footprint(f.ispec, f.digits[k], foot);
    for (const auto& fp : foot) {
      size_t idx = static_cast<size_t>(fp[0] - f.wlo);
      xs[idx] = static_cast<int8_t>(fp[1] % f.ispec.q);
      zs[idx] = static_cast<int8_t>(fp[2] % f.ispec.q);
    }
    evolve_window(gate, xs, zs, f.wlo, 0, t);
    images[k].resize(2 * W);
    for (size_t i = 0; i < W; ++i) {
      images[k][2 * i] = xs[i];
      images[k][2 * i + 1] = zs[i];
    }
  }
  return images;
}

// Rank of the constraint system "evolved exponents vanish on every window
// site whose class is in `classes`".
inline int constraint_rank(const CensusFrame& f,
                           const std::vector<std::vector<int>>& images,
                           const std::vector<char>& class_selected) {
  const int D = static_cast<int>(f.digits.size());
  ModMatrix m;
  m.q = f.ispec.q;
  m.cols = D;
  std::vector<int> row(D);
  for (size_t i = 0; i < f.site_class.size(); ++i) {
    int cls = f.site_class[i];
    if (cls < 0 || !class_selected[static_cast<size_t>(cls)]) continue;
    for (int comp = 0; comp < 2; ++comp) {
      bool nonzero = false;
      for (int k = 0; k < D; ++k) {
        row[k] = images[k][2 * i + comp];
        nonzero |= row[k] != 0;
      }
      if (nonzero) m.add_row(row);
    }
  }
  return row_reduce(m);
}

inline cpp_int pow_cpp(int q, int e) {
  cpp_int r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace detail

// N(A,B;t) and G(A,B;t) in one pass.
inline CensusResult census(Model model, int q, const Region& A,
                           const Region& B, int t,
                           const CensusOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  if (t < 0) throw std::invalid_argument("census: t must be >= 0");
  detail::CensusFrame f = detail::make_frame(model, q, A, B, t, opts);
  const int D = static_cast<int>(f.digits.size());

  CensusResult res;
  res.model = model;
  res.q = q;
  res.A = A;
  res.B = B;
  res.t = t;
  res.enumerated = detail::pow_cpp(q, D);

  Method method = opts.method;
  if (method == Method::kAuto)
    method = is_prime(q) ? Method::kKernel : Method::kEnumerate;
  if (method == Method::kKernel && !is_prime(q))
    throw std::invalid_argument("census: kernel path requires prime q");

  if (D == 0) {
    res.N = 1;
    res.G = 1;
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
  }
  const TwoSiteCliffordGate& gate = gate_for(CircuitSpec{model, q, t, 0, {}});

  if (method == Method::kEnumerate) {
    if (res.enumerated > cpp_int(opts.budget)) throw BudgetError(res.enumerated);
    const unsigned long long total =
        static_cast<unsigned long long>(res.enumerated);
    unsigned int tc = opts.threads > 0
                          ? static_cast<unsigned int>(opts.threads)
                          : std::max(1u, std::thread::hardware_concurrency());
    tc = static_cast<unsigned int>(
        std::min<unsigned long long>(tc, std::max(1ULL, total / 4096ULL)));
    std::vector<detail::PassCounts> parts(tc);
    std::vector<std::thread> workers;
    const unsigned long long chunk = (total + tc - 1) / tc;
    for (unsigned int w = 0; w < tc; ++w) {
      const unsigned long long lo = w * chunk;
      const unsigned long long n = lo >= total ? 0 : std::min(chunk, total - lo);
      workers.emplace_back([&, w, lo, n] {
        parts[w] = detail::enumerate_range(f, gate, t, cpp_int(lo), n);
      });
    }
    for (auto& th : workers) th.join();
    unsigned long long contained = 0, voids = 0;
    for (const auto& p : parts) {
      contained += p.contained;
      voids += p.voids;
    }
    res.N = contained;
    res.G = cpp_int(voids) + 1;
  } else {
    auto images = detail::digit_images(f, gate, t);
    if (f.a_empty) {
      // Only the identity is contained in the empty region: the digit-to-
      // image map is injective, so no kernel computation is needed.
      res.N = 1;
    } else {
      // Containment: exponents vanish at every window site outside A.
      std::vector<char> outside(static_cast<size_t>(f.num_zones) + 1, 1);
      outside[0] = 0;
      res.N =
          detail::pow_cpp(q, D - detail::constraint_rank(f, images, outside));
    }
    // Voids: vanish on A, with support required in every presence zone;
    // inclusion–exclusion over the zones that are additionally forced empty.
    if (f.a_empty || f.a_covers_all || f.num_zones == 0) {
      res.G = 1;
    } else {
      cpp_int ie = 0;
      for (int s = 0; s < (1 << f.num_zones); ++s) {
        std::vector<char> sel(static_cast<size_t>(f.num_zones) + 1, 0);
        sel[0] = 1;
        int bits = 0;
        for (int z = 0; z < f.num_zones; ++z)
          if (s & (1 << z)) {
            sel[static_cast<size_t>(z) + 1] = 1;
            ++bits;
          }
        cpp_int term =
            detail::pow_cpp(q, D - detail::constraint_rank(f, images, sel));
        ie += (bits % 2 == 0) ? term : -term;
      }
      res.G = ie + 1;
    }
  }
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

inline cpp_int count_contained(Model model, int q, const Region& A,
                               const Region& B, int t,
                               const CensusOptions& opts = {}) {
  return census(model, q, A, B, t, opts).N;
}

inline cpp_int count_voids(Model model, int q, const Region& A,
                           const Region& B, int t,
                           const CensusOptions& opts = {}) {
  return census(model, q, A, B, t, opts).G;
}

// Exact base-q logarithm; throws unless n is a pure power of q.
inline long long log_q_exact(cpp_int n, int q) {
  if (n <= 0) throw std::logic_error("log_q_exact: nonpositive");
  long long e = 0;
  while (n > 1) {
    if (n % q != 0) throw std::logic_error("log_q_exact: not a power of q");
    n /= q;
    ++e;
  }
  return e;
}

// Renyi-2 entropy of region A at layer t, in units of s_eq = log q.
// Computed as |A| - log_q N_A from operator counting. On a finite lattice
// the count runs over the full initial set of the lattice; on the infinite
// lattice causality restricts it to I ∩ J(A) for finite A, while for a
// cofinite A (complement finite) the factorized form
// S2 = 2t - log_q N(A, J(complement); t) is used.
inline long long renyi2(Model model, int q, const Region& A, int t,
                        const CensusOptions& opts = {}) {
  if (A.is_empty()) return 0;
  if (opts.lattice) {
    Region clipped = region_intersection(A, Region(*opts.lattice));
    if (clipped.is_empty()) return 0;
    CensusOptions o = opts;
    o.enforce_cone_in_lattice = false;  // whole-lattice count; reflections exact
    cpp_int n = count_contained(model, q, clipped, Region(*opts.lattice), t, o);
    return *clipped.size() - log_q_exact(n, q);
  }
  if (A.finite()) {
    cpp_int n = count_contained(model, q, A, causal_region(A, t), t, opts);
    return *A.size() - log_q_exact(n, q);
  }
  const auto& comps = A.components();
  if (!comps.front().left_infinite() || !comps.back().right_infinite())
    throw std::invalid_argument(
        "renyi2: infinite A needs a finite complement or a lattice");
  std::vector<Interval> gaps;
  for (size_t i = 0; i + 1 < comps.size(); ++i)
    gaps.push_back(Interval(comps[i].b + 1, comps[i + 1].a - 1));
  if (gaps.empty()) return 0;  // A is the whole line
  Region complement(gaps);
  cpp_int n = count_contained(model, q, A, causal_region(complement, t), t, opts);
  return 2LL * t - log_q_exact(n, q);
}

// q^{|B ∩ X(A)|}: the free-model void count for initial sets confined to a
// pair-aligned B inside J(A), at legal parity.
inline cpp_int free_model_G_closed_form(int q, const Interval& A,
                                        const Region& B, int t) {
  if (A.left_infinite() || A.right_infinite())
    throw std::invalid_argument("closed form: A must be a finite interval");
  if (!parity_legal(Region(A), t))
    throw std::invalid_argument("closed form: (A, t) violates the parity convention");
  Region J = causal_region(Region(A), t);
  for (const auto& iv : B.components())
    if (iv.left_infinite() || iv.right_infinite() || !J.contains(Region(iv)))
      throw std::invalid_argument("closed form: B must lie inside J(A)");
  Region X = center_region(A, t);
  Region overlap = region_intersection(B, X);
  site_t sz = overlap.is_empty() ? 0 : *overlap.size();
  return detail::pow_cpp(q, static_cast<int>(sz));
}

// Counts initial operators in I ∩ J(A) that agree with otilde on X(A) and
// evolve to an operator trivial on A. The claim under test is that this
// count is exactly 1 for every otilde in I ∩ X(A).
inline cpp_int x_statement_check(Model model, int q, const Interval& A, int t,
                                 const PauliString& otilde,
                                 const CensusOptions& opts = {}) {
  if (A.left_infinite() || A.right_infinite())
    throw std::invalid_argument("x_statement: A must be a finite interval");
  if (2 * t <= A.b - A.a + 1)
    throw std::invalid_argument("x_statement: requires t > |A|/2");
  if (otilde.q != q) throw std::invalid_argument("x_statement: q mismatch");
  Region X = center_region(A, t);
  InitialSetSpec xspec{model, q, detail::initial_region_for(model, X)};
  rank(xspec, otilde);  // validates membership in I ∩ X(A)

  detail::CensusFrame f =
      detail::make_frame(model, q, Region(A), causal_region(Region(A), t), t, opts);
  const int D = static_cast<int>(f.digits.size());
  const TwoSiteCliffordGate& gate = gate_for(CircuitSpec{model, q, t, 0, {}});
  auto images = detail::digit_images(f, gate, t);

  ModMatrix m;
  m.q = q;
  m.cols = D + 1;
  std::vector<int> row(D + 1);
  // Evolved exponents vanish on A.
  for (size_t i = 0; i < f.site_class.size(); ++i) {
    if (f.site_class[i] != 0) continue;
    for (int comp = 0; comp < 2; ++comp) {
      bool nonzero = false;
      for (int k = 0; k < D; ++k) {
        row[k] = images[k][2 * i + comp];
        nonzero |= row[k] != 0;
      }
      row[D] = 0;
      if (nonzero) m.add_row(row);
    }
  }
  // Restriction to X(A): the initial exponents at every site of X match
  // otilde's. Expressed through the digit footprints so that it stays
  // correct even when X slices through a free-model pair.
  std::vector<std::array<site_t, 3>> foot;
  for (const auto& xiv : X.components())
    for (site_t s = xiv.a; s <= xiv.b; ++s) {
      std::array<int, 2> want = otilde.at(s);
      for (int comp = 0; comp < 2; ++comp) {
        std::fill(row.begin(), row.end(), 0);
        bool nonzero = false;
        for (int k = 0; k < D; ++k) {
          detail::digit_footprint(f.ispec, f.digits[k], foot);
          for (const auto& fp : foot)
            if (fp[0] == s) {
              row[k] = (row[k] + fp[1 + comp]) % q;
              nonzero |= row[k] != 0;
            }
        }
        row[D] = want[comp];
        if (nonzero || want[comp] != 0) m.add_row(row);
      }
    }
  bool consistent = false;
  int r = row_reduce(m, D, &consistent);
  if (!consistent) return 0;
  return detail::pow_cpp(q, D - r);
}

}  // namespace voidspread
