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

// Dense-matrix Monte Carlo over brickwork circuits of Haar-random two-site
// unitaries: the finite-q oracle against which the closed-form predictions
// are compared. Everything is exact per sample — full q^L x q^L (or
// light-cone-windowed) linear algebra, no truncation — so the only
// statistical element is the circuit ensemble itself.
//
// Conventions, chosen once and used consistently everywhere:
//   * basis index of a lattice state: site 0 is the most significant digit;
//   * the circuit unitary is V = (layer 0)(layer 1)...(layer T-1);
//   * Heisenberg operators evolve as O(t) = V^dag O V, states as V^dag |psi>,
//     i.e. per gate, first layer first: O <- g^dag O g and |psi> <- g^dag psi.
// With these choices the density matrix of the evolved product state
// expands exactly into the spreading coefficients of the Z-generated
// operator family, which the off-diagonal diagnostics rely on.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "voidspread/pauli.hpp"
#include "voidspread/philox.hpp"
#include "voidspread/region.hpp"

namespace voidspread {

inline constexpr long long kDenseDimensionCap = 4096;

struct PlacedGate {
  int layer = 0;
  int left_site = 0;  // acts on (left_site, left_site + 1)
  Eigen::MatrixXcd u;
};

struct SampledCircuit {
  int q = 2;
  int L = 2;
  int layers = 0;
  std::uint64_t seed = 0;
  std::uint32_t sample_index = 0;
  std::vector<PlacedGate> gates;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long samples = 0;
};

namespace detail {

inline long long ipow_ll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline void require_dense_cap(int q, int L) {
  if (q < 2) throw std::invalid_argument("oracle: q must be at least 2");
  if (L < 2) throw std::invalid_argument("oracle: L must be at least 2");
  long long dim = 1;
  for (int i = 0; i < L; ++i) {
    dim *= q;
    if (dim > kDenseDimensionCap) {
      throw std::invalid_argument(
          "oracle: q^L exceeds the dense feasibility cap of 4096");
    }
  }
}

// psi <- (m on sites left_site, left_site+1) psi, identity elsewhere.
inline void apply_two_site_to_state(Eigen::VectorXcd &psi,
                                    const Eigen::MatrixXcd &m, int q, int L,
                                    int left_site) {
  const long long lo = ipow_ll(q, L - left_site - 2);
  const long long hi = ipow_ll(q, left_site);
  const long long d2 = static_cast<long long>(q) * q;
  Eigen::VectorXcd block(d2);
  for (long long h = 0; h < hi; ++h) {
    for (long long l = 0; l < lo; ++l) {
      const long long base = h * d2 * lo + l;
      for (long long ab = 0; ab < d2; ++ab) block(ab) = psi(base + ab * lo);
      block = (m * block).eval();
      for (long long ab = 0; ab < d2; ++ab) psi(base + ab * lo) = block(ab);
    }
  }
}

// X <- (m on the two window sites at `offset`) X, applied to every column.
inline void apply_two_site_to_rows(Eigen::MatrixXcd &x,
                                   const Eigen::MatrixXcd &m, int q,
                                   int window_len, int offset) {
  const long long lo = ipow_ll(q, window_len - offset - 2);
  const long long hi = ipow_ll(q, offset);
  const long long d2 = static_cast<long long>(q) * q;
  Eigen::MatrixXcd block(d2, x.cols());
  for (long long h = 0; h < hi; ++h) {
    for (long long l = 0; l < lo; ++l) {
      const long long base = h * d2 * lo + l;
      for (long long ab = 0; ab < d2; ++ab) block.row(ab) = x.row(base + ab * lo);
      block = (m * block).eval();
      for (long long ab = 0; ab < d2; ++ab) x.row(base + ab * lo) = block.row(ab);
    }
  }
}

}  // namespace detail

// One Haar-distributed unitary of the given dimension, addressed by
// (seed, gate stream, sample): complex-Gaussian matrix, QR, then column
// phases fixed so the triangular factor has a real positive diagonal.
inline Eigen::MatrixXcd haar_unitary(int dim, std::uint64_t seed,
                                     std::uint32_t gate_stream,
                                     std::uint32_t sample_index) {
  Eigen::MatrixXcd g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      g(r, c) = addressed_complex_gaussian(
          seed, static_cast<std::uint32_t>(r * dim + c), gate_stream,
          sample_index);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd u =
      qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
  for (int c = 0; c < dim; ++c) {
    const std::complex<double> d = qr.matrixQR()(c, c);
    const double a = std::abs(d);
    if (a > 0.0) u.col(c) *= d / a;
  }
  const double residual =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).norm();
  if (!(residual < 1e-12)) {
    throw std::logic_error("haar_unitary: unitarity residual too large");
  }
  return u;
}

// Brickwork circuit of independent Haar gates: layer n couples (p, p+1) for
// p = n mod 2, n mod 2 + 2, ... Deterministic in (seed, sample_index); the
// per-gate stream index makes gates independent and individually
// regenerable.
inline SampledCircuit sample_circuit(int q, int L, int layers,
                                     std::uint64_t seed,
                                     std::uint32_t sample_index = 0) {
  detail::require_dense_cap(q, L);
  if (layers < 0) throw std::invalid_argument("oracle: layers must be >= 0");
  SampledCircuit c;
  c.q = q;
  c.L = L;
  c.layers = layers;
  c.seed = seed;
  c.sample_index = sample_index;
  std::uint32_t gate_stream = 0;
  for (int n = 0; n < layers; ++n) {
    for (int p = n % 2; p + 1 <= L - 1; p += 2) {
      c.gates.push_back(PlacedGate{n, p, haar_unitary(q * q, seed,
                                                      gate_stream++,
                                                      sample_index)});
    }
  }
  return c;
}

// The full circuit unitary V = (layer 0)(layer 1)...; dense, so only for
// small lattices and diagnostics.
inline Eigen::MatrixXcd circuit_unitary(const SampledCircuit &c) {
  const long long dim = detail::ipow_ll(c.q, c.L);
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(dim, dim);
  auto kron = [](const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
            a(i, j) * b;
      }
    }
    return out;
  };
  for (int n = 0; n < c.layers; ++n) {
    Eigen::MatrixXcd layer = Eigen::MatrixXcd::Identity(1, 1);
    int site = 0;
    while (site < c.L) {
      const PlacedGate *g = nullptr;
      for (const PlacedGate &pg : c.gates) {
        if (pg.layer == n && pg.left_site == site) {
          g = &pg;
          break;
        }
      }
      if (g != nullptr) {
        layer = kron(layer, g->u);
        site += 2;
      } else {
        layer = kron(layer, Eigen::MatrixXcd::Identity(c.q, c.q));
        site += 1;
      }
    }
    v = (v * layer).eval();
  }
  return v;
}

// |psi(t)> = V^dag |0...0>.
inline Eigen::VectorXcd evolved_product_state(const SampledCircuit &c) {
  const long long dim = detail::ipow_ll(c.q, c.L);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  psi(0) = 1.0;
  for (const PlacedGate &g : c.gates) {
    detail::apply_two_site_to_state(psi, g.u.adjoint(), c.q, c.L,
                                    g.left_site);
  }
  return psi;
}

namespace detail {

// Composite-index tables splitting [0, q^L) into (digits on `sites`, rest).
struct IndexSplit {
  long long a_dim = 1;
  long long b_dim = 1;
  std::vector<long long> a_of;
  std::vector<long long> b_of;
};

inline IndexSplit index_split(int q, int L, const std::vector<int> &sites) {
  IndexSplit s;
  const long long dim = ipow_ll(q, L);
  std::vector<bool> in_a(L, false);
  for (int site : sites) in_a[site] = true;
  s.a_dim = ipow_ll(q, static_cast<int>(sites.size()));
  s.b_dim = dim / s.a_dim;
  s.a_of.resize(dim);
  s.b_of.resize(dim);
  for (long long x = 0; x < dim; ++x) {
    long long rem = x, a = 0, b = 0;
    for (int site = 0; site < L; ++site) {
      const long long digit = rem / ipow_ll(q, L - 1 - site);
      rem -= digit * ipow_ll(q, L - 1 - site);
      if (in_a[site]) {
        a = a * q + digit;
      } else {
        b = b * q + digit;
      }
    }
    s.a_of[x] = a;
    s.b_of[x] = b;
  }
  return s;
}

inline std::vector<int> region_sites_in_lattice(const Region &r, int L,
                                                const char *what) {
  std::vector<int> sites;
  for (const Interval &iv : r.components()) {
    if (iv.left_infinite() || iv.right_infinite() || iv.a < 0 ||
        iv.b > L - 1) {
      throw std::invalid_argument(std::string("oracle: ") + what +
                                  " must lie inside the lattice");
    }
    for (site_t s = iv.a; s <= iv.b; ++s) sites.push_back(static_cast<int>(s));
  }
  return sites;
}

inline double purity_from_split(const Eigen::VectorXcd &psi,
                                const IndexSplit &split) {
  Eigen::MatrixXcd w(split.a_dim, split.b_dim);
  for (long long x = 0; x < psi.size(); ++x) {
    w(split.a_of[x], split.b_of[x]) = psi(x);
  }
  if (split.a_dim <= split.b_dim) {
    return (w * w.adjoint()).squaredNorm();
  }
  return (w.adjoint() * w).squaredNorm();
}

}  // namespace detail

// Exact purity of the reduced state of A; S2(A) = -log purity (natural
// log). Works for any subset of sites, not just intervals.
inline double state_purity(const SampledCircuit &c, const Region &A,
                           const Eigen::VectorXcd &psi) {
  const auto sites = detail::region_sites_in_lattice(A, c.L, "A");
  const auto split = detail::index_split(c.q, c.L, sites);
  return detail::purity_from_split(psi, split);
}

inline double renyi2_exact(const SampledCircuit &c, const Region &A) {
  if (A.is_empty()) return 0.0;
  const Eigen::VectorXcd psi = evolved_product_state(c);
  return -std::log(state_purity(c, A, psi));
}

// N_A(t), the expected number of operators from the Z-generated family
// contained in A: equal to q^{-|complement|} * sum over basis rows k of the
// purity of V^dag|k> on A. This is the diagonal part of the purity's
// operator expansion; e^{-S2(A)} - q^{-|A|} N_A is exactly the off-diagonal
// remainder.
inline double diagonal_n_a(const SampledCircuit &c, const Region &A) {
  const auto sites = detail::region_sites_in_lattice(A, c.L, "A");
  const auto split = detail::index_split(c.q, c.L, sites);
  const Eigen::MatrixXcd v = circuit_unitary(c);
  double total = 0.0, comp = 0.0;
  for (Eigen::Index k = 0; k < v.rows(); ++k) {
    const Eigen::VectorXcd row = v.row(k).conjugate().transpose();
    const double term = detail::purity_from_split(row, split) - comp;
    const double next = total + term;
    comp = (next - total) - term;
    total = next;
  }
  return total / static_cast<double>(split.b_dim);
}

// e^{-S2(A)} minus the diagonal-only approximation q^{-|A|} N_A, per
// sample. Zero in expectation; its magnitude measures the off-diagonal
// spreading-coefficient correlations.
inline double offdiagonal_defect(const SampledCircuit &c, const Region &A) {
  const auto sites = detail::region_sites_in_lattice(A, c.L, "A");
  const auto split = detail::index_split(c.q, c.L, sites);
  const Eigen::MatrixXcd v = circuit_unitary(c);
  double total = 0.0, comp = 0.0;
  double first = 0.0;
  for (Eigen::Index k = 0; k < v.rows(); ++k) {
    const Eigen::VectorXcd row = v.row(k).conjugate().transpose();
    const double purity = detail::purity_from_split(row, split);
    if (k == 0) first = purity;
    const double term = purity - comp;
    const double next = total + term;
    comp = (next - total) - term;
    total = next;
  }
  return first - total / static_cast<double>(v.rows());
}

// A Heisenberg operator that acts as the identity outside [lo, hi]; m is
// its dense matrix on the window sites.
struct WindowedOperator {
  int q = 2;
  site_t lo = 0;
  site_t hi = 0;
  Eigen::MatrixXcd m;
};

namespace detail {

// Dense matrix of a generalized Pauli string restricted to window sites
// [lo, hi]: X^x Z^z |k> = omega^{z k} |k + x> per site.
inline Eigen::MatrixXcd pauli_window_matrix(const PauliString &p, site_t lo,
                                            site_t hi) {
  const int len = static_cast<int>(hi - lo + 1);
  const long long dim = ipow_ll(p.q, len);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const double theta = 2.0 * M_PI / static_cast<double>(p.q);
  for (long long col = 0; col < dim; ++col) {
    long long rem = col, row = 0;
    long long phase_exp = 0;
    for (int i = 0; i < len; ++i) {
      const long long scale = ipow_ll(p.q, len - 1 - i);
      const long long digit = rem / scale;
      rem -= digit * scale;
      const auto [xe, ze] = p.at(lo + i);
      phase_exp += static_cast<long long>(ze) * digit;
      row = row * p.q + (digit + xe) % p.q;
    }
    m(row, col) = std::polar(
        1.0, theta * static_cast<double>(phase_exp % p.q));
  }
  return m;
}

}  // namespace detail

// Evolves alpha through the circuit as O(t) = V^dag O V, but touching only
// the gates that intersect the operator's support: gates strictly outside
// commute with it exactly, so skipping them loses nothing and keeps the
// result an exact identity outside the returned window. alpha must be
// nontrivial.
inline WindowedOperator evolve_heisenberg(const SampledCircuit &c,
                                          const PauliString &alpha) {
  if (alpha.q != c.q) {
    throw std::invalid_argument("evolve_heisenberg: q mismatch");
  }
  if (alpha.is_identity()) {
    throw std::invalid_argument("evolve_heisenberg: alpha must be nontrivial");
  }
  Region supp = support(alpha);
  if (supp.min_site() < 0 || supp.max_site() > c.L - 1) {
    throw std::invalid_argument(
        "evolve_heisenberg: alpha must lie inside the lattice");
  }
  WindowedOperator w;
  w.q = c.q;
  w.lo = supp.min_site();
  w.hi = supp.max_site();
  w.m = detail::pauli_window_matrix(alpha, w.lo, w.hi);
  for (const PlacedGate &g : c.gates) {
    const site_t a = g.left_site, b = g.left_site + 1;
    if (b < w.lo || a > w.hi) continue;  // commutes exactly
    if (a == w.lo - 1) {
      Eigen::MatrixXcd grown =
          Eigen::MatrixXcd::Zero(w.m.rows() * c.q, w.m.cols() * c.q);
      for (int d = 0; d < c.q; ++d) {
        grown.block(d * w.m.rows(), d * w.m.cols(), w.m.rows(), w.m.cols()) =
            w.m;
      }
      w.m = std::move(grown);
      w.lo = a;
    }
    if (b == w.hi + 1) {
      const long long dsub = w.m.rows();
      Eigen::MatrixXcd grown =
          Eigen::MatrixXcd::Zero(dsub * c.q, dsub * c.q);
      for (long long i = 0; i < dsub; ++i) {
        for (long long j = 0; j < dsub; ++j) {
          for (int d = 0; d < c.q; ++d) {
            grown(i * c.q + d, j * c.q + d) = w.m(i, j);
          }
        }
      }
      w.m = std::move(grown);
      w.hi = b;
    }
    const int window_len = static_cast<int>(w.hi - w.lo + 1);
    const int offset = static_cast<int>(a - w.lo);
    const Eigen::MatrixXcd gd = g.u.adjoint();
    // O <- g^dag O g, as two row transforms: g^dag O, then
    // (g^dag (g^dag O)^dag)^dag.
    detail::apply_two_site_to_rows(w.m, gd, c.q, window_len, offset);
    Eigen::MatrixXcd madj = w.m.adjoint();
    detail::apply_two_site_to_rows(madj, gd, c.q, window_len, offset);
    w.m = madj.adjoint();
  }
  return w;
}

// |c_alpha^beta|^2 with c = Tr(O_beta^dag O_alpha(t)) / q^L. Exactly zero —
// as a structural fact, not a rounding accident — whenever beta has support
// outside the light-cone window of alpha.
inline double spreading_weight(const SampledCircuit &c,
                               const PauliString &alpha,
                               const PauliString &beta) {
  if (beta.q != c.q) throw std::invalid_argument("spreading_weight: q mismatch");
  if (!beta.is_identity()) {
    Region bs = support(beta);
    if (bs.min_site() < 0 || bs.max_site() > c.L - 1) {
      throw std::invalid_argument(
          "spreading_weight: beta must lie inside the lattice");
    }
  }
  if (alpha.is_identity()) {
    return beta.is_identity() ? 1.0 : 0.0;
  }
  const WindowedOperator w = evolve_heisenberg(c, alpha);
  for (const auto &[site, exps] : beta.sites) {
    if (site < w.lo || site > w.hi) return 0.0;
  }
  // c = Tr_window(O_beta^dag M) / q^window; O_beta is a generalized
  // permutation, so the trace is a single pass over columns.
  const int len = static_cast<int>(w.hi - w.lo + 1);
  const long long dim = w.m.rows();
  const double theta = 2.0 * M_PI / static_cast<double>(c.q);
  std::complex<double> acc = 0.0;
  for (long long col = 0; col < dim; ++col) {
    long long rem = col, row = 0, phase_exp = 0;
    for (int i = 0; i < len; ++i) {
      const long long scale = detail::ipow_ll(c.q, len - 1 - i);
      const long long digit = rem / scale;
      rem -= digit * scale;
      const auto [xe, ze] = beta.at(w.lo + i);
      phase_exp += static_cast<long long>(ze) * digit;
      row = row * c.q + (digit + xe) % c.q;
    }
    acc += std::conj(std::polar(
               1.0, theta * static_cast<double>(phase_exp % c.q))) *
           w.m(row, col);
  }
  const double cval = std::norm(acc / static_cast<double>(dim));
  return cval;
}

namespace detail {

// Sum over all basis operators supported inside the kept window sites of
// |c_alpha^beta|^2: q^{|kept|} * ||Tr_dropped M||_F^2 / q^{2 |window|}.
inline double contained_weight(const WindowedOperator &w,
                               const std::vector<bool> &keep) {
  const int len = static_cast<int>(w.hi - w.lo + 1);
  std::vector<int> kept_sites;
  for (int i = 0; i < len; ++i) {
    if (keep[i]) kept_sites.push_back(i);
  }
  const IndexSplit split = index_split(w.q, len, kept_sites);
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(split.a_dim, split.a_dim);
  const long long dim = w.m.rows();
  for (long long x = 0; x < dim; ++x) {
    for (long long y = 0; y < dim; ++y) {
      if (split.b_of[x] == split.b_of[y]) {
        k(split.a_of[x], split.a_of[y]) += w.m(x, y);
      }
    }
  }
  const double dim_d = static_cast<double>(dim);
  return k.squaredNorm() * static_cast<double>(split.a_dim) / (dim_d * dim_d);
}

}  // namespace detail

// Per-sample probability that the evolved alpha has a void covering A:
// trivial on every site of A and supported in every component of the
// lattice complement of A. Exact per sample (inclusion-exclusion over the
// complement components of the partial-trace weights).
inline double void_probability_sample(const SampledCircuit &c, const Region &A,
                                      const PauliString &alpha) {
  detail::region_sites_in_lattice(A, c.L, "A");
  if (A.is_empty()) {
    throw std::invalid_argument("void probability: A must be non-empty");
  }
  if (alpha.is_identity()) return 0.0;
  const Region complement =
      region_complement_in(A, Interval{0, c.L - 1});
  const auto &comps = complement.components();
  const int n = static_cast<int>(comps.size());
  if (n > 20) throw std::invalid_argument("void probability: too many gaps");
  const WindowedOperator w = evolve_heisenberg(c, alpha);
  // A component the light-cone window never reaches can never host
  // support, so the void probability is identically zero.
  for (const Interval &comp : comps) {
    if (comp.b < w.lo || comp.a > w.hi) return 0.0;
  }
  const int len = static_cast<int>(w.hi - w.lo + 1);
  double p = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> keep(len, false);
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      for (site_t s = std::max(comps[i].a, w.lo);
           s <= std::min(comps[i].b, w.hi); ++s) {
        keep[static_cast<int>(s - w.lo)] = true;
      }
    }
    const int sign = ((n - __builtin_popcount(mask)) % 2 == 0) ? 1 : -1;
    p += sign * detail::contained_weight(w, keep);
  }
  return p;
}

// Monte Carlo mean and standard error of the void probability over the
// circuit ensemble. Per-sample values are stored and reduced in a fixed
// order with compensated summation, so the result is independent of the
// thread count.
inline McEstimate void_probability_mc(int q, int L, int layers,
                                      const Region &A,
                                      const PauliString &alpha,
                                      long long samples, std::uint64_t seed,
                                      int threads = 0) {
  detail::require_dense_cap(q, L);
  if (samples < 1) {
    throw std::invalid_argument("void_probability_mc: samples must be >= 1");
  }
  std::vector<double> values(samples);
  int pool = threads > 0 ? threads
                         : static_cast<int>(std::max(
                               1u, std::thread::hardware_concurrency()));
  pool = static_cast<int>(
      std::min<long long>(pool, samples));
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(pool);
  for (int widx = 0; widx < pool; ++widx) {
    workers.emplace_back([&, widx]() {
      try {
        for (long long s = widx; s < samples; s += pool) {
          const SampledCircuit c = sample_circuit(
              q, L, layers, seed, static_cast<std::uint32_t>(s));
          values[s] = void_probability_sample(c, A, alpha);
        }
      } catch (...) {
        errors[widx] = std::current_exception();
      }
    });
  }
  for (std::thread &t : workers) t.join();
  for (const std::exception_ptr &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  double total = 0.0, comp = 0.0;
  for (double v : values) {
    const double term = v - comp;
    const double next = total + term;
    comp = (next - total) - term;
    total = next;
  }
  McEstimate est;
  est.samples = samples;
  est.mean = total / static_cast<double>(samples);
  if (samples >= 2) {
    double ss = 0.0, ss_comp = 0.0;
    for (double v : values) {
      const double d = (v - est.mean) * (v - est.mean) - ss_comp;
      const double next = ss + d;
      ss_comp = (next - ss) - d;
      ss = next;
    }
    est.std_error = std::sqrt(
        ss / (static_cast<double>(samples) * (samples - 1.0)));
  }
  return est;
}

}  // namespace voidspread
