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

// Brickwork circuits of two-site Clifford gates acting on generalized Pauli
// strings, for the free-propagation (swap) and perfect-tensor models.
//
// A gate is stored as its exponent table: the bijection of Z_q^4 sending the
// exponents (a1,b1,a2,b2) of X^{a1}Z^{b1} (x) X^{a2}Z^{b2} to those of the
// conjugated operator. Layer n of the brickwork couples the site pairs
// (p, p+1) with p ≡ n (mod 2). Phases are discarded throughout.
//
// The perfect-tensor table is not hand-transcribed: it is derived at first
// use by conjugating all 81 two-site basis operators with the dense 9x9
// unitary built from the state map |i>|j> -> |-i-j>|j-i>, and decomposing
// each image in the operator basis. Any image that is not a single basis
// element with unimodular coefficient is a hard failure.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "voidspread/pauli.hpp"
#include "voidspread/region.hpp"

namespace voidspread {

struct TwoSiteCliffordGate {
  int q = 2;
  std::vector<uint16_t> table;  // q^4 packed entries

  int pack(int a1, int b1, int a2, int b2) const {
    return ((a1 * q + b1) * q + a2) * q + b2;
  }
  std::array<int, 4> unpack(int idx) const {
    std::array<int, 4> e;
    e[3] = idx % q;
    idx /= q;
    e[2] = idx % q;
    idx /= q;
    e[1] = idx % q;
    idx /= q;
    e[0] = idx;
    return e;
  }
  std::array<int, 4> apply(const std::array<int, 4>& e) const {
    return unpack(table[pack(e[0], e[1], e[2], e[3])]);
  }

  bool fixes_identity() const { return table[0] == 0; }

  bool is_bijection() const {
    std::vector<uint8_t> seen(table.size(), 0);
    for (uint16_t v : table) {
      if (v >= table.size() || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  bool is_additive() const {
    const int n = static_cast<int>(table.size());
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        auto eu = unpack(u), ev = unpack(v);
        std::array<int, 4> sum;
        for (int i = 0; i < 4; ++i) sum[i] = (eu[i] + ev[i]) % q;
        auto tu = unpack(table[u]), tv = unpack(table[v]);
        auto ts = apply(sum);
        for (int i = 0; i < 4; ++i)
          if (ts[i] != (tu[i] + tv[i]) % q) return false;
      }
    return true;
  }
};

// (a1,b1,a2,b2) -> (a2,b2,a1,b1).
inline TwoSiteCliffordGate swap_gate(int q) {
  if (q < 2 || q > 16) throw std::invalid_argument("swap_gate: need 2 <= q <= 16");
  TwoSiteCliffordGate g;
  g.q = q;
  g.table.resize(static_cast<size_t>(q) * q * q * q);
  for (int a1 = 0; a1 < q; ++a1)
    for (int b1 = 0; b1 < q; ++b1)
      for (int a2 = 0; a2 < q; ++a2)
        for (int b2 = 0; b2 < q; ++b2)
          g.table[g.pack(a1, b1, a2, b2)] =
              static_cast<uint16_t>(g.pack(a2, b2, a1, b1));
  return g;
}

namespace detail {

using cplx = std::complex<double>;
using Mat9 = std::array<std::array<cplx, 9>, 9>;

inline Mat9 mat9_zero() {
  Mat9 m{};
  return m;
}

inline Mat9 mat9_mul(const Mat9& x, const Mat9& y) {
  Mat9 r = mat9_zero();
  for (int i = 0; i < 9; ++i)
    for (int k = 0; k < 9; ++k) {
      if (x[i][k] == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < 9; ++j) r[i][j] += x[i][k] * y[k][j];
    }
  return r;
}

// X^a Z^b (x) X^c Z^d on two qutrits, index 3*i + j.
inline Mat9 pt_basis_op(int a, int b, int c, int d) {
  const double two_pi_over_3 = 2.0 * M_PI / 3.0;
  auto omega_pow = [&](int k) {
    return std::polar(1.0, two_pi_over_3 * (((k % 3) + 3) % 3));
  };
  Mat9 m = mat9_zero();
  for (int i = 0; i < 9; ++i) {
    int i1 = i / 3, i2 = i % 3;
    int o1 = (i1 + a) % 3, o2 = (i2 + c) % 3;
    m[o1 * 3 + o2][i] = omega_pow(b * i1) * omega_pow(d * i2);
  }
  return m;
}

}  // namespace detail

// The q = 3 two-site gate defined by the state map
// Udag|i>|j> = |-i-j> (x) |j-i|>; the exponent table is obtained by dense
// conjugation O -> Udag O U of all 81 basis operators.
inline const TwoSiteCliffordGate& perfect_tensor_gate() {
  static const TwoSiteCliffordGate cached = [] {
    using detail::Mat9;
    using detail::cplx;
    Mat9 udag = detail::mat9_zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int oi = ((-i - j) % 3 + 3) % 3;
        int oj = ((j - i) % 3 + 3) % 3;
        udag[oi * 3 + oj][i * 3 + j] = cplx(1.0, 0.0);
      }
    Mat9 u = detail::mat9_zero();  // u = udag^dagger
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) u[i][j] = std::conj(udag[j][i]);

    TwoSiteCliffordGate g;
    g.q = 3;
    g.table.resize(81);
    for (int a1 = 0; a1 < 3; ++a1)
      for (int b1 = 0; b1 < 3; ++b1)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2) {
            Mat9 conj = detail::mat9_mul(
                detail::mat9_mul(udag, detail::pt_basis_op(a1, b1, a2, b2)),
                u);
            int hits = 0;
            int image = -1;
            for (int c1 = 0; c1 < 3; ++c1)
              for (int d1 = 0; d1 < 3; ++d1)
                for (int c2 = 0; c2 < 3; ++c2)
                  for (int d2 = 0; d2 < 3; ++d2) {
                    Mat9 cand = detail::pt_basis_op(c1, d1, c2, d2);
                    cplx tr(0.0, 0.0);  // Tr(cand^dagger conj) / 9
                    for (int i = 0; i < 9; ++i)
                      for (int k = 0; k < 9; ++k)
                        tr += std::conj(cand[k][i]) * conj[k][i];
                    tr /= 9.0;
                    double mag = std::abs(tr);
                    if (mag > 1e-9) {
                      if (std::abs(mag - 1.0) > 1e-9)
                        throw std::logic_error(
                            "perfect_tensor_gate: non-unimodular coefficient");
                      ++hits;
                      image = g.pack(c1, d1, c2, d2);
                    }
                  }
            if (hits != 1)
              throw std::logic_error(
                  "perfect_tensor_gate: image is not a single basis element");
            g.table[g.pack(a1, b1, a2, b2)] = static_cast<uint16_t>(image);
          }
    if (!g.is_bijection() || !g.fixes_identity())
      throw std::logic_error("perfect_tensor_gate: table is not a bijection");
    return g;
  }();
  return cached;
}

struct CircuitSpec {
  Model model = Model::kFreePropagation;
  int q = 3;
  int layers = 0;
  // Absolute index of the first applied layer; its parity selects the brick
  // offset, so circuits compose: layers t1 starting at 0 followed by layers
  // t2 starting at t1 equal layers t1+t2 starting at 0.
  int first_layer = 0;
  // Open-boundary lattice. Gates straddling an edge are skipped. When unset
  // the engine auto-sizes the window to the final light cone.
  std::optional<Interval> lattice;
};

inline const TwoSiteCliffordGate& gate_for(const CircuitSpec& c) {
  static const TwoSiteCliffordGate swap_tables[] = {
      swap_gate(2), swap_gate(3), swap_gate(4), swap_gate(5)};
  switch (c.model) {
    case Model::kFreePropagation:
      if (c.q >= 2 && c.q <= 5) return swap_tables[c.q - 2];
      throw std::invalid_argument("free model gate table: need 2 <= q <= 5");
    case Model::kPerfectTensor:
      if (c.q != 3)
        throw std::invalid_argument("perfect-tensor model requires q = 3");
      return perfect_tensor_gate();
    case Model::kRandomZ:
      break;
  }
  throw std::invalid_argument("no gate model for the random-z family");
}

// Low-level in-place evolution of exponent arrays over the window
// [origin, origin + xs.size() - 1]. The window must contain the full light
// cone of the nontrivial sites (or be the open-boundary lattice itself).
inline void evolve_window(const TwoSiteCliffordGate& gate,
                          std::vector<int8_t>& xs, std::vector<int8_t>& zs,
                          site_t origin, int first_layer, int layers) {
  const site_t n = static_cast<site_t>(xs.size());
  for (int layer = first_layer; layer < first_layer + layers; ++layer) {
    site_t parity = ((layer % 2) + 2) % 2;
    site_t p = origin;
    if (((p % 2) + 2) % 2 != parity) ++p;
    for (; p + 1 <= origin + n - 1; p += 2) {
      size_t i = static_cast<size_t>(p - origin);
      int a1 = xs[i], b1 = zs[i], a2 = xs[i + 1], b2 = zs[i + 1];
      if ((a1 | b1 | a2 | b2) == 0) continue;
      auto out = gate.unpack(gate.table[gate.pack(a1, b1, a2, b2)]);
      xs[i] = static_cast<int8_t>(out[0]);
      zs[i] = static_cast<int8_t>(out[1]);
      xs[i + 1] = static_cast<int8_t>(out[2]);
      zs[i + 1] = static_cast<int8_t>(out[3]);
    }
  }
}

// Heisenberg evolution of a Pauli string through `circuit.layers` brickwork
// layers. Identity stays identity.
inline PauliString evolve(const PauliString& p, const CircuitSpec& circuit) {
  if (p.is_identity()) return p;
  if (p.q != circuit.q) throw std::invalid_argument("evolve: q mismatch");
  const TwoSiteCliffordGate& gate = gate_for(circuit);

  site_t lo, hi;
  if (circuit.lattice) {
    lo = circuit.lattice->a;
    hi = circuit.lattice->b;
    for (const auto& [s, e] : p.sites)
      if (s < lo || s > hi)
        throw std::invalid_argument("evolve: support outside the lattice");
  } else {
    lo = p.sites.begin()->first - circuit.layers - 1;
    hi = p.sites.rbegin()->first + circuit.layers + 1;
  }
  std::vector<int8_t> xs(static_cast<size_t>(hi - lo + 1), 0);
  std::vector<int8_t> zs(xs.size(), 0);
  for (const auto& [s, e] : p.sites) {
    xs[static_cast<size_t>(s - lo)] = static_cast<int8_t>(e[0]);
    zs[static_cast<size_t>(s - lo)] = static_cast<int8_t>(e[1]);
  }
  evolve_window(gate, xs, zs, lo, circuit.first_layer, circuit.layers);
  PauliString out;
  out.q = p.q;
  for (size_t i = 0; i < xs.size(); ++i)
    if (xs[i] | zs[i]) out.set(lo + static_cast<site_t>(i), xs[i], zs[i]);
  return out;
}

// (leftmost, rightmost) nontrivial site; nullopt for the identity.
inline std::optional<std::pair<site_t, site_t>> endpoints(
    const PauliString& p) {
  if (p.is_identity()) return std::nullopt;
  return std::make_pair(p.sites.begin()->first, p.sites.rbegin()->first);
}

struct SupportBitmap {
  site_t origin = 0;
  std::vector<std::vector<uint8_t>> rows;  // rows[r][i]: site origin+i after r layers
};

// Row r is the support indicator after r layers, r = 0..layers.
inline SupportBitmap support_bitmap(const PauliString& p0,
                                    const CircuitSpec& circuit, int layers) {
  const TwoSiteCliffordGate& gate = gate_for(circuit);
  site_t lo, hi;
  if (circuit.lattice) {
    lo = circuit.lattice->a;
    hi = circuit.lattice->b;
  } else if (p0.is_identity()) {
    lo = 0;
    hi = 0;
  } else {
    lo = p0.sites.begin()->first - layers - 1;
    hi = p0.sites.rbegin()->first + layers + 1;
  }
  SupportBitmap bm;
  bm.origin = lo;
  std::vector<int8_t> xs(static_cast<size_t>(hi - lo + 1), 0);
  std::vector<int8_t> zs(xs.size(), 0);
  for (const auto& [s, e] : p0.sites) {
    if (s < lo || s > hi)
      throw std::invalid_argument("support_bitmap: support outside lattice");
    xs[static_cast<size_t>(s - lo)] = static_cast<int8_t>(e[0]);
    zs[static_cast<size_t>(s - lo)] = static_cast<int8_t>(e[1]);
  }
  for (int r = 0; r <= layers; ++r) {
    if (r > 0)
      evolve_window(gate, xs, zs, lo, circuit.first_layer + r - 1, 1);
    std::vector<uint8_t> row(xs.size(), 0);
    for (size_t i = 0; i < xs.size(); ++i) row[i] = (xs[i] | zs[i]) ? 1 : 0;
    bm.rows.push_back(std::move(row));
  }
  return bm;
}

// Per-row interior void count: maximal runs of trivial sites strictly between
// the leftmost and rightmost nontrivial sites.
inline int interior_void_count(const std::vector<uint8_t>& row) {
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(row.size()); ++i)
    if (row[i]) {
      if (first < 0) first = i;
      last = i;
    }
  if (first < 0) return 0;
  int voids = 0;
  bool in_gap = false;
  for (int i = first; i <= last; ++i) {
    if (!row[i] && !in_gap) {
      ++voids;
      in_gap = true;
    } else if (row[i]) {
      in_gap = false;
    }
  }
  return voids;
}

}  // namespace voidspread
