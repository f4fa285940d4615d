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

#ifndef COVROUGH_GRAPH_HPP_
#define COVROUGH_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "covrough/core.hpp"

namespace covrough {

// Unordered pair of distinct vertex indices, normalized to u < v.
struct Edge {
  std::size_t u;
  std::size_t v;

  bool operator==(const Edge& other) const = default;
};

// Undirected simple graph: no loops, no duplicate edges. Edge order is the
// input order and is preserved through serialization.
class Graph {
 public:
  Graph(Universe vertices,
        const std::vector<std::pair<std::size_t, std::size_t>>& edge_pairs);

  const Universe& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(std::size_t u, std::size_t v) const;
  // Neighbor indices in ascending order.
  const std::vector<std::size_t>& neighbors(std::size_t v) const;
  std::vector<std::size_t> isolated_vertices() const;

  // Same labeled vertex sequence and same edge set (order-insensitive).
  bool operator==(const Graph& other) const;

 private:
  Universe vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// 0/1 matrix with one row per vertex and one column per edge.
struct IncidenceMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> data;  // row-major

  IncidenceMatrix() = default;
  IncidenceMatrix(std::size_t rows, std::size_t cols)
      : rows(rows), cols(cols), data(rows * cols, 0) {}

  std::uint8_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint8_t at(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }

  bool operator==(const IncidenceMatrix& other) const = default;
};

// Disjoint nonempty blocks exhausting a universe, ordered by smallest member.
class Partition {
 public:
  Partition(Universe universe, const std::vector<Subset>& blocks);

  const Universe& universe() const { return universe_; }
  const std::vector<Subset>& blocks() const { return blocks_; }
  std::size_t block_index_of(std::size_t element) const;

 private:
  Universe universe_;
  std::vector<Subset> blocks_;
};

// One two-element block per edge.
SetFamily induce_family(const Graph& g);

// induce_family as a Covering; throws IsolatedVerticesError when some vertex
// meets no edge (the family then misses it).
Covering induce_covering(const Graph& g);

IncidenceMatrix incidence_matrix(const Graph& g);

// Inverse of incidence_matrix. Throws BadColumnError when a column does not
// have exactly two 1-entries, DuplicateEdgeError when two columns encode the
// same pair.
Graph graph_from_incidence(const IncidenceMatrix& m,
                           const std::vector<std::string>& labels);

// Subgraph on the vertices of k with the edges of g inside k.
// Throws EmptyVertexSetError when k is empty.
Graph vertex_induced_subgraph(const Graph& g, const Subset& k);

// Shortest chain of covering blocks K1..Kn with u in K1, v in Kn and
// consecutive blocks intersecting, or nullopt when u and v are not
// connected. BFS over the block-intersection graph; ties break by block
// input order. The chain is re-verified before it is returned.
std::optional<std::vector<Subset>> connection_witness(const Graph& g,
                                                      std::size_t u,
                                                      std::size_t v);

// Connectedness via the induced covering: the closure of one singleton must
// reach the whole vertex set. Throws InapplicableError for graphs with
// isolated vertices or fewer than 2 vertices.
bool is_connected_covering(const Graph& g);

// The dual route: iterates the lower operator downward from V minus one
// vertex and checks the limit is empty. Always agrees with
// is_connected_covering.
bool lower_characterization_connected(const Graph& g);

// Connected components by plain breadth-first traversal. Block count is the
// number of components.
Partition connected_components_bfs(const Graph& g);

}  // namespace covrough

#endif  // COVROUGH_GRAPH_HPP_
