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

#include "covrough/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace covrough {

Graph::Graph(Universe vertices,
             const std::vector<std::pair<std::size_t, std::size_t>>& edge_pairs)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  adjacency_.resize(n);
  for (const auto& [a, b] : edge_pairs) {
    if (a >= n) throw BadIndexError(a, n);
    if (b >= n) throw BadIndexError(b, n);
    if (a == b) throw LoopEdgeError(vertices_.label(a));
    Edge e{std::min(a, b), std::max(a, b)};
    if (std::find(edges_.begin(), edges_.end(), e) != edges_.end())
      throw DuplicateEdgeError(vertices_.label(e.u), vertices_.label(e.v));
    edges_.push_back(e);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  const auto& nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<std::size_t>& Graph::neighbors(std::size_t v) const {
  if (v >= vertices_.size()) throw BadIndexError(v, vertices_.size());
  return adjacency_[v];
}

std::vector<std::size_t> Graph::isolated_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (adjacency_[v].empty()) out.push_back(v);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (!(vertices_ == other.vertices_)) return false;
  auto key = [](const Edge& e) { return std::make_pair(e.u, e.v); };
  std::vector<std::pair<std::size_t, std::size_t>> a, b;
  for (const Edge& e : edges_) a.push_back(key(e));
  for (const Edge& e : other.edges_) b.push_back(key(e));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Partition::Partition(Universe universe, const std::vector<Subset>& blocks)
    : universe_(std::move(universe)), blocks_(blocks) {
  Subset seen(universe_.size());
  for (const Subset& b : blocks_) {
    if (b.universe_size() != universe_.size()) throw UniverseMismatchError();
    if (b.empty()) throw Error("partition block is empty");
    if (seen.intersects(b)) throw Error("partition blocks overlap");
    seen |= b;
  }
  if (!seen.is_full()) throw Error("partition does not exhaust the universe");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Subset& a, const Subset& b) {
              return a.members().front() < b.members().front();
            });
}

std::size_t Partition::block_index_of(std::size_t element) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].contains(element)) return i;
  throw BadIndexError(element, universe_.size());
}

SetFamily induce_family(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Subset> blocks;
  for (const Edge& e : g.edges()) blocks.push_back(Subset::of(n, {e.u, e.v}));
  return SetFamily(g.vertices(), blocks);
}

namespace {

std::vector<std::string> isolated_labels(const Graph& g) {
  std::vector<std::string> out;
  for (std::size_t v : g.isolated_vertices())
    out.push_back(g.vertices().label(v));
  return out;
}

}  // namespace

Covering induce_covering(const Graph& g) {
  auto isolated = g.isolated_vertices();
  if (!isolated.empty()) throw IsolatedVerticesError(isolated_labels(g));
  return Covering(g.vertices(), induce_family(g).blocks());
}

IncidenceMatrix incidence_matrix(const Graph& g) {
  IncidenceMatrix m(g.vertex_count(), g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    m.at(g.edges()[j].u, j) = 1;
    m.at(g.edges()[j].v, j) = 1;
  }
  return m;
}

Graph graph_from_incidence(const IncidenceMatrix& m,
                           const std::vector<std::string>& labels) {
  if (labels.size() != m.rows)
    throw Error("label count " + std::to_string(labels.size()) +
                " does not match row count " + std::to_string(m.rows));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < m.cols; ++j) {
    std::vector<std::size_t> endpoints;
    for (std::size_t i = 0; i < m.rows; ++i)
      if (m.at(i, j) != 0) endpoints.push_back(i);
    if (endpoints.size() != 2) throw BadColumnError(j);
    pairs.emplace_back(endpoints[0], endpoints[1]);
  }
  return Graph(Universe(labels), pairs);  // ctor flags duplicate columns
}

Graph vertex_induced_subgraph(const Graph& g, const Subset& k) {
  if (k.universe_size() != g.vertex_count()) throw UniverseMismatchError();
  if (k.empty()) throw EmptyVertexSetError();
  const auto members = k.members();
  std::vector<std::string> labels;
  std::vector<std::size_t> new_index(g.vertex_count(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    labels.push_back(g.vertices().label(members[i]));
    new_index[members[i]] = i;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const Edge& e : g.edges())
    if (k.contains(e.u) && k.contains(e.v))
      pairs.emplace_back(new_index[e.u], new_index[e.v]);
  return Graph(Universe(labels), pairs);
}

std::optional<std::vector<Subset>> connection_witness(const Graph& g,
                                                      std::size_t u,
                                                      std::size_t v) {
  const std::size_t n = g.vertex_count();
  if (u >= n) throw BadIndexError(u, n);
  if (v >= n) throw BadIndexError(v, n);
  if (u == v) throw SameVertexError(g.vertices().label(u));

  const Covering c = induce_covering(g);
  const auto& blocks = c.blocks();
  constexpr int kUnvisited = -2;
  constexpr int kRoot = -1;
  std::vector<int> parent(blocks.size(), kUnvisited);
  std::queue<std::size_t> queue;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].contains(u)) {
      parent[i] = kRoot;
      queue.push(i);
    }
  }
  std::optional<std::size_t> goal;
  while (!queue.empty() && !goal) {
    std::size_t b = queue.front();
    queue.pop();
    if (blocks[b].contains(v)) {
      goal = b;
      break;
    }
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (parent[j] == kUnvisited && blocks[j].intersects(blocks[b])) {
        parent[j] = static_cast<int>(b);
        queue.push(j);
      }
    }
  }
  if (!goal) return std::nullopt;

  std::vector<Subset> chain;
  for (int i = static_cast<int>(*goal); i != kRoot; i = parent[i])
    chain.push_back(blocks[static_cast<std::size_t>(i)]);
  std::reverse(chain.begin(), chain.end());

  // Verify the witness before handing it out.
  bool valid = !chain.empty() && chain.front().contains(u) &&
               chain.back().contains(v);
  for (std::size_t i = 0; valid && i + 1 < chain.size(); ++i)
    valid = chain[i].intersects(chain[i + 1]);
  for (const Subset& k : chain)
    valid = valid &&
            std::find(blocks.begin(), blocks.end(), k) != blocks.end();
  if (!valid) throw std::logic_error("witness chain failed verification");
  return chain;
}

namespace {

void check_applicable(const Graph& g) {
  if (g.vertex_count() < 2)
    throw InapplicableError("graph has fewer than 2 vertices");
  auto isolated = g.isolated_vertices();
  if (!isolated.empty()) {
    std::string detail = "graph has isolated vertices:";
    for (std::size_t v : isolated) detail += " " + g.vertices().label(v);
    throw InapplicableError(detail);
  }
}

}  // namespace

bool is_connected_covering(const Graph& g) {
  check_applicable(g);
  const Covering c = induce_covering(g);
  Subset seed(g.vertex_count());
  seed.insert(0);
  return closure_upper(c, seed).is_full();
}

bool lower_characterization_connected(const Graph& g) {
  check_applicable(g);
  const Covering c = induce_covering(g);
  Subset current = Subset::full(g.vertex_count());
  current.erase(0);
  for (;;) {
    Subset next = lower(c, current);
    if (next == current) break;
    current = std::move(next);
  }
  return current.empty();
}

Partition connected_components_bfs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> visited(n, false);
  std::vector<Subset> blocks;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    Subset block(n);
    std::queue<std::size_t> queue;
    queue.push(start);
    visited[start] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      block.insert(v);
      for (std::size_t w : g.neighbors(v)) {
        if (!visited[w]) {
          visited[w] = true;
          queue.push(w);
        }
      }
    }
    blocks.push_back(block);
  }
  return Partition(g.vertices(), blocks);
}

}  // namespace covrough
