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

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "catch2/catch_amalgamated.hpp"
#include "voidspread/gates.hpp"

using namespace voidspread;

namespace {

PauliString random_string(std::mt19937& rng, int q, site_t lo, site_t hi,
                          double fill = 0.5) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> exp_dist(0, q - 1);
  PauliString p;
  p.q = q;
  for (site_t s = lo; s <= hi; ++s)
    if (coin(rng) < fill) p.set(s, exp_dist(rng), exp_dist(rng));
  return p;
}

}  // namespace

TEST_CASE("pack/unpack round trip") {
  for (int q : {2, 3, 5}) {
    TwoSiteCliffordGate g = swap_gate(q);
    for (int idx = 0; idx < q * q * q * q; ++idx) {
      auto e = g.unpack(idx);
      REQUIRE(g.pack(e[0], e[1], e[2], e[3]) == idx);
    }
  }
}

TEST_CASE("swap gate structure") {
  for (int q : {2, 3, 4, 5}) {
    TwoSiteCliffordGate g = swap_gate(q);
    REQUIRE(g.is_bijection());
    REQUIRE(g.fixes_identity());
    REQUIRE(g.is_additive());
    auto out = g.apply({1 % q, 0, 0, q - 1});
    REQUIRE(out == std::array<int, 4>{0, q - 1, 1 % q, 0});
  }
  REQUIRE_THROWS_AS(swap_gate(1), std::invalid_argument);
}

TEST_CASE("perfect tensor gate: structure and generator images") {
  const TwoSiteCliffordGate& g = perfect_tensor_gate();
  REQUIRE(g.q == 3);
  REQUIRE(g.table.size() == 81);
  REQUIRE(g.is_bijection());
  REQUIRE(g.fixes_identity());
  REQUIRE(g.is_additive());

  // Hand-derived images of the four generators under the state map
  // |i>|j> -> |-i-j>|j-i> (conjugation direction matches evolve()).
  REQUIRE(g.apply({1, 0, 0, 0}) == std::array<int, 4>{2, 0, 2, 0});
  REQUIRE(g.apply({0, 1, 0, 0}) == std::array<int, 4>{0, 1, 0, 1});
  REQUIRE(g.apply({0, 0, 1, 0}) == std::array<int, 4>{2, 0, 1, 0});
  REQUIRE(g.apply({0, 0, 0, 1}) == std::array<int, 4>{0, 1, 0, 2});
}

TEST_CASE("perfect tensor gate: additivity from generators rebuilds table") {
  const TwoSiteCliffordGate& g = perfect_tensor_gate();
  const std::array<std::array<int, 4>, 4> gen_in = {
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  std::array<std::array<int, 4>, 4> gen_out;
  for (int k = 0; k < 4; ++k) gen_out[k] = g.apply(gen_in[k]);
  for (int a1 = 0; a1 < 3; ++a1)
    for (int b1 = 0; b1 < 3; ++b1)
      for (int a2 = 0; a2 < 3; ++a2)
        for (int b2 = 0; b2 < 3; ++b2) {
          std::array<int, 4> lin{};
          const int coeff[4] = {a1, b1, a2, b2};
          for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i)
              lin[i] = (lin[i] + coeff[k] * gen_out[k][i]) % 3;
          REQUIRE(g.apply({a1, b1, a2, b2}) == lin);
        }
}

TEST_CASE("perfect tensor gate matches the frozen golden table") {
  const TwoSiteCliffordGate& g = perfect_tensor_gate();
  std::ifstream golden(std::string(VS_SOURCE_DIR) +
                       "/tests/data/perfect_tensor_gate.golden");
  REQUIRE(golden.good());
  int lines = 0;
  std::string line;
  while (std::getline(golden, line)) {
    std::istringstream ss(line);
    int a1, b1, a2, b2, c1, d1, c2, d2;
    std::string arrow;
    ss >> a1 >> b1 >> a2 >> b2 >> arrow >> c1 >> d1 >> c2 >> d2;
    REQUIRE(arrow == "->");
    REQUIRE(g.apply({a1, b1, a2, b2}) == std::array<int, 4>{c1, d1, c2, d2});
    ++lines;
  }
  REQUIRE(lines == 81);
}

TEST_CASE("perfect tensor property: any two slots determine the other two") {
  // View the table as the 81-element graph {(b1, b2, b1', b2')} with each
  // slot a one-site operator label in Z_3 x Z_3. Every projection onto two
  // of the four slots is a bijection onto Z_9 x Z_9.
  const TwoSiteCliffordGate& g = perfect_tensor_gate();
  for (int s1 = 0; s1 < 4; ++s1)
    for (int s2 = s1 + 1; s2 < 4; ++s2) {
      std::set<std::pair<int, int>> seen;
      for (int idx = 0; idx < 81; ++idx) {
        auto in = g.unpack(idx);
        auto out = g.unpack(g.table[idx]);
        int slot[4] = {in[0] * 3 + in[1], in[2] * 3 + in[3],
                       out[0] * 3 + out[1], out[2] * 3 + out[3]};
        seen.emplace(slot[s1], slot[s2]);
      }
      REQUIRE(seen.size() == 81);
    }

  // With the second input trivial, the first output slot still ranges over
  // all nine one-site labels.
  std::set<int> images;
  for (int a1 = 0; a1 < 3; ++a1)
    for (int b1 = 0; b1 < 3; ++b1) {
      auto out = g.apply({a1, b1, 0, 0});
      images.insert(out[0] * 3 + out[1]);
    }
  REQUIRE(images.size() == 9);
}

TEST_CASE("free model: ballistic closed form at every layer count") {
  // Even-start sites move +1 per layer, odd-start sites -1 per layer, with
  // exponents carried unchanged.
  for (int q : {2, 3}) {
    for (site_t s = -3; s <= 4; ++s) {
      for (int x = 0; x < q; ++x)
        for (int z = 0; z < q; ++z) {
          if (x == 0 && z == 0) continue;
          for (int t = 0; t <= 8; ++t) {
            PauliString p;
            p.q = q;
            p.set(s, x, z);
            CircuitSpec circ{Model::kFreePropagation, q, t, 0, std::nullopt};
            PauliString ev = evolve(p, circ);
            REQUIRE(ev.sites.size() == 1);
            site_t expect = (((s % 2) + 2) % 2 == 0) ? s + t : s - t;
            REQUIRE(ev.sites.begin()->first == expect);
            REQUIRE(ev.at(expect) == std::array<int, 2>{x, z});
          }
        }
    }
  }

  // Multi-site strings: every site moves independently.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    PauliString p = random_string(rng, 3, -6, 9);
    if (p.is_identity()) continue;
    int t = trial % 6;
    CircuitSpec circ{Model::kFreePropagation, 3, t, 0, std::nullopt};
    PauliString ev = evolve(p, circ);
    PauliString expect;
    expect.q = 3;
    for (const auto& [s, e] : p.sites) {
      site_t dst = (((s % 2) + 2) % 2 == 0) ? s + t : s - t;
      expect.set(dst, e[0], e[1]);
    }
    REQUIRE(ev.sites == expect.sites);
  }
}

TEST_CASE("perfect tensor: single-site growth endpoints") {
  // X-powers on even sites and Z-powers on odd sites (the initial-set
  // generators) grow ballistically with a one-site asymmetry.
  for (int t = 1; t <= 10; ++t) {
    for (int a : {1, 2}) {
      PauliString p;
      p.q = 3;
      p.set(4, a, 0);  // X^a at even site
      CircuitSpec circ{Model::kPerfectTensor, 3, t, 0, std::nullopt};
      auto ep = endpoints(evolve(p, circ));
      REQUIRE(ep.has_value());
      REQUIRE(ep->first == 4 - (t - 1));
      REQUIRE(ep->second == 4 + t);
    }
    for (int b : {1, 2}) {
      PauliString p;
      p.q = 3;
      p.set(5, 0, b);  // Z^b at odd site
      CircuitSpec circ{Model::kPerfectTensor, 3, t, 0, std::nullopt};
      auto ep = endpoints(evolve(p, circ));
      REQUIRE(ep.has_value());
      REQUIRE(ep->first == 5 - t);
      REQUIRE(ep->second == 5 + (t - 1));
    }
  }
}

TEST_CASE("evolution composes across layer-parity boundaries") {
  std::mt19937 rng(11);
  for (Model model : {Model::kFreePropagation, Model::kPerfectTensor}) {
    int q = 3;
    for (int trial = 0; trial < 30; ++trial) {
      PauliString p = random_string(rng, q, 0, 7);
      for (int t1 = 0; t1 <= 3; ++t1)
        for (int t2 = 0; t2 <= 3; ++t2) {
          CircuitSpec c1{model, q, t1, 0, std::nullopt};
          CircuitSpec c2{model, q, t2, t1, std::nullopt};
          CircuitSpec c12{model, q, t1 + t2, 0, std::nullopt};
          PauliString two_step = evolve(evolve(p, c1), c2);
          PauliString one_step = evolve(p, c12);
          REQUIRE(two_step.sites == one_step.sites);
        }
    }
  }
}

TEST_CASE("identity and zero-layer behavior") {
  PauliString id;
  id.q = 3;
  CircuitSpec circ{Model::kPerfectTensor, 3, 5, 0, std::nullopt};
  REQUIRE(evolve(id, circ).is_identity());

  PauliString p;
  p.q = 3;
  p.set(2, 1, 2);
  CircuitSpec zero{Model::kPerfectTensor, 3, 0, 0, std::nullopt};
  REQUIRE(evolve(p, zero).sites == p.sites);
}

TEST_CASE("open boundaries skip straddling gates") {
  // Free model on [0,3]: an X at site 0 walks right one site per layer,
  // dwells one layer at the wall (the straddling gate is skipped), and
  // reflects back.
  const site_t trajectory[] = {0, 1, 2, 3, 3, 2, 1, 0, 0, 1};
  for (int t = 0; t <= 9; ++t) {
    PauliString p;
    p.q = 3;
    p.set(0, 1, 0);
    CircuitSpec circ{Model::kFreePropagation, 3, t, 0, Interval(0, 3)};
    PauliString ev = evolve(p, circ);
    REQUIRE(ev.sites.size() == 1);
    REQUIRE(ev.sites.begin()->first == trajectory[t]);
  }

  // Support outside the lattice is rejected.
  PauliString p;
  p.q = 3;
  p.set(9, 1, 0);
  CircuitSpec circ{Model::kFreePropagation, 3, 1, 0, Interval(0, 3)};
  REQUIRE_THROWS_AS(evolve(p, circ), std::invalid_argument);
}

TEST_CASE("evolve input validation") {
  PauliString p;
  p.q = 2;
  p.set(0, 1, 0);
  CircuitSpec circ{Model::kPerfectTensor, 3, 1, 0, std::nullopt};
  REQUIRE_THROWS_AS(evolve(p, circ), std::invalid_argument);
  CircuitSpec rz{Model::kRandomZ, 3, 1, 0, std::nullopt};
  PauliString p3;
  p3.q = 3;
  p3.set(0, 1, 0);
  REQUIRE_THROWS_AS(evolve(p3, rz), std::invalid_argument);
}

TEST_CASE("support bitmap rows and interior void counting") {
  PauliString p;
  p.q = 3;
  p.set(10, 1, 0);
  CircuitSpec circ{Model::kPerfectTensor, 3, 0, 0, std::nullopt};
  SupportBitmap bm = support_bitmap(p, circ, 5);
  REQUIRE(bm.rows.size() == 6);
  for (int r = 0; r <= 5; ++r) {
    site_t first = -1, last = -1;
    for (size_t i = 0; i < bm.rows[r].size(); ++i)
      if (bm.rows[r][i]) {
        if (first < 0) first = bm.origin + static_cast<site_t>(i);
        last = bm.origin + static_cast<site_t>(i);
      }
    if (r == 0) {
      REQUIRE(first == 10);
      REQUIRE(last == 10);
    } else {
      REQUIRE(first == 10 - (r - 1));
      REQUIRE(last == 10 + r);
    }
  }

  REQUIRE(interior_void_count({1, 0, 1}) == 1);
  REQUIRE(interior_void_count({1, 1}) == 0);
  REQUIRE(interior_void_count({0, 1, 0, 0, 1, 0, 1, 0}) == 2);
  REQUIRE(interior_void_count({0, 0, 0}) == 0);
  REQUIRE(interior_void_count({}) == 0);
}
