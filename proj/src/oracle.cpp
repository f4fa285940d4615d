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

#include "covrough/oracle.hpp"

#include <cstdint>
#include <string>

namespace covrough::oracle {

namespace {

std::uint32_t mask_of(const Subset& s) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < s.universe_size(); ++i)
    if (s.contains(i)) m |= std::uint32_t{1} << i;
  return m;
}

Subset subset_of_mask(std::size_t n, std::uint32_t m) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (m & (std::uint32_t{1} << i)) s.insert(i);
  return s;
}

void check_size(std::size_t n) {
  if (n > kMaxExhaustiveUniverse)
    throw TooLargeError("exhaustive enumeration allows at most " +
                        std::to_string(kMaxExhaustiveUniverse) + " elements");
}

}  // namespace

std::vector<Subset> outer_definable_exhaustive(const Covering& c) {
  const std::size_t n = c.universe().size();
  check_size(n);
  std::vector<std::uint32_t> blocks;
  for (const Subset& b : c.blocks()) blocks.push_back(mask_of(b));

  std::vector<Subset> fixpoints;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < limit; ++x) {
    const auto xm = static_cast<std::uint32_t>(x);
    std::uint32_t up = 0;
    for (std::uint32_t b : blocks)
      if (b & xm) up |= b;
    if (up == xm) fixpoints.push_back(subset_of_mask(n, xm));
  }
  return fixpoints;
}

bool is_connected_exhaustive(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InapplicableError("graph has fewer than 2 vertices");
  check_size(n);

  std::vector<std::uint32_t> degree_seen(n, 0);
  std::vector<std::uint32_t> blocks;
  for (const Edge& e : g.edges()) {
    blocks.push_back((std::uint32_t{1} << e.u) | (std::uint32_t{1} << e.v));
    degree_seen[e.u] = 1;
    degree_seen[e.v] = 1;
  }
  std::vector<std::string> isolated;
  for (std::size_t v = 0; v < n; ++v)
    if (!degree_seen[v]) isolated.push_back(g.vertices().label(v));
  if (!isolated.empty()) {
    std::string detail = "graph has isolated vertices:";
    for (const auto& label : isolated) detail += " " + label;
    throw InapplicableError(detail);
  }

  const std::uint32_t full =
      n == 32 ? ~std::uint32_t{0}
              : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < limit; ++x) {
    const auto xm = static_cast<std::uint32_t>(x);
    std::uint32_t up = 0;
    for (std::uint32_t b : blocks)
      if (b & xm) up |= b;
    if (up == xm && xm != 0 && xm != full) return false;
  }
  return true;
}

bool path_exists(const Graph& g, std::size_t u, std::size_t v) {
  const std::size_t n = g.vertex_count();
  if (u >= n) throw UnknownVertexError(u, n);
  if (v >= n) throw UnknownVertexError(v, n);
  if (u == v) return true;

  // Own adjacency and traversal, independent of the graph module's BFS.
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> stack{u};
  visited[u] = true;
  while (!stack.empty()) {
    std::size_t w = stack.back();
    stack.pop_back();
    if (w == v) return true;
    for (std::size_t x : adj[w]) {
      if (!visited[x]) {
        visited[x] = true;
        stack.push_back(x);
      }
    }
  }
  return false;
}

}  // namespace covrough::oracle
