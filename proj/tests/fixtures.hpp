// Copyright 2026 The Authors.
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

#ifndef COVROUGH_TESTS_FIXTURES_HPP_
#define COVROUGH_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "covrough/core.hpp"
#include "covrough/graph.hpp"
#include "covrough/matroid.hpp"

namespace fixtures {

using covrough::CircuitFamily;
using covrough::Covering;
using covrough::Graph;
using covrough::Subset;
using covrough::Universe;

inline Universe abcd() { return Universe({"a", "b", "c", "d"}); }

// 4-vertex diamond: triangle a-b-c plus the path a-d-c. Connected; its edge
// family covers the vertex set.
inline Graph diamond() {
  return Graph(abcd(), {{1, 2}, {2, 3}, {0, 3}, {0, 1}, {0, 2}});
}

// Same edges with an extra untouched vertex e, so the edge family is not a
// covering of the vertex set.
inline Graph diamond_isolated() {
  return Graph(Universe({"a", "b", "c", "d", "e"}),
               {{1, 2}, {2, 3}, {0, 3}, {0, 1}, {0, 2}});
}

inline Covering diamond_covering() {
  return covrough::induce_covering(diamond());
}

inline Graph two_disjoint_edges() {
  return Graph(abcd(), {{0, 1}, {2, 3}});
}

inline Graph triangle() {
  return Graph(Universe({"a", "b", "c"}), {{0, 1}, {1, 2}, {0, 2}});
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return Graph(Universe(labels), pairs);
}

inline Graph edgeless_graph(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  return Graph(Universe(labels), {});
}

// Ground {1..7} with a loop at 6 and nothing containing 7.
inline CircuitFamily mixed_matroid() {
  Universe ground({"1", "2", "3", "4", "5", "6", "7"});
  std::vector<Subset> circuits = {
      Subset::of(7, {0, 1, 2}),
      Subset::of(7, {5}),
      Subset::of(7, {1, 3, 4}),
      Subset::of(7, {0, 2, 3, 4}),
  };
  auto validation = covrough::validate_circuits(ground, circuits);
  if (!validation.ok()) throw std::logic_error("fixture is not a matroid");
  return *validation.family;
}

// ------------------------------------------------------------ randomness --

struct Rng {
  std::mt19937 engine;
  explicit Rng(std::uint32_t seed) : engine(seed) {}

  std::size_t in(std::size_t lo, std::size_t hi) {  // inclusive
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine);
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine) < p;
  }
};

inline std::vector<std::string> numbered_labels(std::size_t n,
                                                const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i)
    labels.push_back(prefix + std::to_string(i));
  return labels;
}

inline Subset random_subset(Rng& rng, std::size_t n, double p = 0.5) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng.chance(p)) s.insert(i);
  return s;
}

inline Graph random_graph(Rng& rng, std::size_t n, double p) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(p)) pairs.emplace_back(i, j);
  return Graph(Universe(numbered_labels(n, "v")), pairs);
}

// Random simple graph where every vertex meets an edge (n >= 2): isolated
// vertices get attached to a random other vertex.
inline Graph random_graph_no_isolated(Rng& rng, std::size_t n, double p) {
  Graph g = random_graph(rng, n, p);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const covrough::Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  for (std::size_t v : g.isolated_vertices()) {
    std::size_t w = rng.in(0, n - 2);
    if (w >= v) ++w;
    auto key = std::minmax(v, w);
    if (std::find(pairs.begin(), pairs.end(),
                  std::pair(key.first, key.second)) == pairs.end())
      pairs.emplace_back(key.first, key.second);
  }
  return Graph(g.vertices(), pairs);
}

// Random connected graph built from a random spanning tree plus extra
// edges, capped at max_edges.
inline Graph random_connected_graph(Rng& rng, std::size_t n,
                                    std::size_t max_edges) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t v = 1; v < n; ++v)
    pairs.emplace_back(rng.in(0, v - 1), v);
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::find(pairs.begin(), pairs.end(), std::pair(i, j)) ==
          pairs.end())
        candidates.emplace_back(i, j);
  std::shuffle(candidates.begin(), candidates.end(), rng.engine);
  std::size_t budget = max_edges > pairs.size() ? max_edges - pairs.size() : 0;
  std::size_t extra = rng.in(0, std::min(budget, candidates.size()));
  pairs.insert(pairs.end(), candidates.begin(), candidates.begin() + extra);
  return Graph(Universe(numbered_labels(n, "v")), pairs);
}

// Cycle with random chords: connected, bridgeless, so its cycle matroid is
// loopless with covering circuits.
inline Graph random_chorded_cycle(Rng& rng, std::size_t max_edges) {
  std::size_t n = rng.in(3, 6);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto cyclic = (j == i + 1) || (i == 0 && j == n - 1);
      if (!cyclic) candidates.emplace_back(i, j);
    }
  std::shuffle(candidates.begin(), candidates.end(), rng.engine);
  std::size_t budget = max_edges > n ? max_edges - n : 0;
  std::size_t extra = rng.in(0, std::min(budget, candidates.size()));
  pairs.insert(pairs.end(), candidates.begin(), candidates.begin() + extra);
  return Graph(Universe(numbered_labels(n, "v")), pairs);
}

// Random covering: random blocks plus, when needed, one patch block with
// whatever the others missed.
inline Covering random_covering(Rng& rng, std::size_t max_n) {
  std::size_t n = rng.in(1, max_n);
  std::vector<Subset> blocks;
  std::size_t block_count = rng.in(1, 6);
  Subset covered(n);
  for (std::size_t b = 0; b < block_count; ++b) {
    Subset block = random_subset(rng, n, 0.4);
    if (block.empty()) block.insert(rng.in(0, n - 1));
    covered |= block;
    blocks.push_back(block);
  }
  if (!covered.is_full()) blocks.push_back(covered.complement());
  auto validation = covrough::validate_covering(
      covrough::SetFamily(Universe(numbered_labels(n, "x")), blocks));
  if (!validation.ok()) throw std::logic_error("fixture is not a covering");
  return *validation.covering;
}

// Uniform matroid with random parameters, or the cycle matroid of a small
// random connected graph.
inline CircuitFamily random_generated_matroid(Rng& rng) {
  if (rng.chance(0.5)) {
    std::size_t n = rng.in(1, 5);
    std::size_t k = rng.in(0, n);
    return covrough::uniform_matroid(k, n);
  }
  std::size_t n = rng.in(2, 5);
  return covrough::cycle_matroid(random_connected_graph(rng, n, 6));
}

// Direct sum: relabels each summand's ground disjointly and concatenates
// the circuits. The result is validated from scratch.
inline CircuitFamily direct_sum(const std::vector<CircuitFamily>& parts) {
  std::vector<std::string> labels;
  std::vector<Subset> circuits;
  std::size_t total = 0;
  for (const CircuitFamily& part : parts) total += part.ground().size();
  std::size_t offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const CircuitFamily& part = parts[p];
    for (const std::string& label : part.ground().labels())
      labels.push_back("s" + std::to_string(p) + "." + label);
    for (const Subset& c : part.circuits()) {
      Subset shifted(total);
      for (std::size_t e : c.members()) shifted.insert(offset + e);
      circuits.push_back(shifted);
    }
    offset += part.ground().size();
  }
  auto validation =
      covrough::validate_circuits(Universe(labels), circuits);
  if (!validation.ok()) throw std::logic_error("direct sum is not a matroid");
  return *validation.family;
}

// ------------------------------------------------------------- comparing --

inline std::vector<std::vector<std::size_t>> sorted_blocks(
    const std::vector<Subset>& blocks) {
  std::vector<std::vector<std::size_t>> out;
  for (const Subset& b : blocks) out.push_back(b.members());
  std::sort(out.begin(), out.end());
  return out;
}

inline bool same_block_set(const std::vector<Subset>& a,
                           const std::vector<Subset>& b) {
  return sorted_blocks(a) == sorted_blocks(b);
}

}  // namespace fixtures

#endif  // COVROUGH_TESTS_FIXTURES_HPP_
