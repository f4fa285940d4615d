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

#include "covrough/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace covrough {

namespace {

std::vector<Subset> dedup_circuits(const Universe& ground,
                                   const std::vector<Subset>& circuits) {
  std::vector<Subset> out;
  for (const Subset& c : circuits) {
    if (c.universe_size() != ground.size()) throw UniverseMismatchError();
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<std::string> CircuitViolations::report(
    const Universe& ground, const std::vector<Subset>& circuits) const {
  std::vector<std::string> lines;
  for (std::size_t i : empty_circuits)
    lines.push_back("C1 violated: circuit " + std::to_string(i) +
                    " is empty");
  for (const auto& [i, j] : containments)
    lines.push_back("C2 violated: " + format_subset(ground, circuits[i]) +
                    " ⊂ " + format_subset(ground, circuits[j]));
  for (const auto& gap : elimination_gaps) {
    Subset reduced = circuits[gap.first] | circuits[gap.second];
    reduced.erase(gap.element);
    lines.push_back("C3 violated: " +
                    format_subset(ground, circuits[gap.first]) + " ∪ " +
                    format_subset(ground, circuits[gap.second]) + " - {" +
                    ground.label(gap.element) + "} contains no circuit");
  }
  return lines;
}

CircuitValidation validate_circuits(const Universe& ground,
                                    const std::vector<Subset>& circuits) {
  CircuitValidation result;
  result.checked_circuits = dedup_circuits(ground, circuits);
  const auto& cs = result.checked_circuits;
  CircuitViolations& v = result.violations;

  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i].empty()) v.empty_circuits.push_back(i);

  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (i != j && cs[i].is_subset_of(cs[j])) v.containments.emplace_back(i, j);

  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const Subset common = cs[i] & cs[j];
      if (common.empty()) continue;
      const Subset united = cs[i] | cs[j];
      for (std::size_t x : common.members()) {
        Subset target = united;
        target.erase(x);
        bool found = false;
        for (const Subset& c : cs) {
          if (!c.empty() && c.is_subset_of(target)) {
            found = true;
            break;
          }
        }
        if (!found) v.elimination_gaps.push_back({i, j, x});
      }
    }
  }

  if (!v.any()) result.family = CircuitFamily(ground, cs);
  return result;
}

Subset loops(const CircuitFamily& m) {
  Subset out(m.ground().size());
  for (const Subset& c : m.circuits())
    if (c.count() == 1) out.insert(c.members().front());
  return out;
}

bool circuits_cover(const CircuitFamily& m) {
  Subset covered(m.ground().size());
  for (const Subset& c : m.circuits()) covered |= c;
  return covered.is_full();
}

Graph induce_graph(const CircuitFamily& m) {
  const std::size_t n = m.ground().size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> seen(n * n, false);
  for (const Subset& c : m.circuits()) {
    const auto members = c.members();
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        std::size_t u = members[a], v = members[b];
        if (!seen[u * n + v]) {
          seen[u * n + v] = true;
          pairs.emplace_back(u, v);
        }
      }
    }
  }
  return Graph(m.ground(), pairs);
}

namespace {

// Minimal union-find, kept local to gamma_components on purpose: the gamma
// partition serves as a cross-check for induce_graph-based results.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Partition gamma_components(const CircuitFamily& m) {
  const std::size_t n = m.ground().size();
  UnionFind uf(n);
  for (const Subset& c : m.circuits()) {
    const auto members = c.members();
    for (std::size_t i = 1; i < members.size(); ++i)
      uf.unite(members[0], members[i]);
  }
  std::map<std::size_t, Subset> classes;
  for (std::size_t e = 0; e < n; ++e) {
    auto [it, fresh] = classes.try_emplace(uf.find(e), Subset(n));
    (void)fresh;
    it->second.insert(e);
  }
  std::vector<Subset> blocks;
  for (auto& [root, block] : classes) blocks.push_back(std::move(block));
  return Partition(m.ground(), blocks);
}

bool is_connected_matroid(const CircuitFamily& m, ConnectivityMethod method) {
  const std::size_t n = m.ground().size();
  switch (method) {
    case ConnectivityMethod::kGamma:
      return gamma_components(m).blocks().size() == 1;
    case ConnectivityMethod::kInducedGraph: {
      // The graph-side check needs >= 2 vertices; a one-element ground set
      // is a single gamma class, hence connected.
      if (n == 1) return true;
      Graph g = induce_graph(m);
      if (!g.isolated_vertices().empty()) return false;
      return is_connected_covering(g);
    }
    case ConnectivityMethod::kCircuitCovering: {
      if (n == 1) return true;
      if (!loops(m).empty()) return false;       // step 1
      if (!circuits_cover(m)) return false;      // step 2
      Subset seed(n);                            // step 3
      seed.insert(0);
      return upper_via_circuits(m, seed).is_full();
    }
  }
  throw std::logic_error("unreachable: bad ConnectivityMethod");
}

Subset upper_via_circuits(const CircuitFamily& m, const Subset& x) {
  if (x.universe_size() != m.ground().size()) throw UniverseMismatchError();
  const Subset loop_set = loops(m);
  if (!loop_set.empty())
    throw NotACoveringError("family has loops " +
                            format_subset(m.ground(), loop_set));
  if (!circuits_cover(m))
    throw NotACoveringError("circuits do not cover the ground set");
  Subset out(x.universe_size());
  for (const Subset& c : m.circuits())
    if (c.intersects(x)) out |= c;
  return out;
}

bool check_strong_elimination(const CircuitFamily& m) {
  const auto& cs = m.circuits();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (!cs[i].intersects(cs[j])) continue;
      const Subset united = cs[i] | cs[j];
      for (std::size_t e1 : (cs[i] - cs[j]).members()) {
        for (std::size_t e2 : (cs[j] - cs[i]).members()) {
          bool found = false;
          for (const Subset& c : cs) {
            if (c.contains(e1) && c.contains(e2) && c.is_subset_of(united)) {
              found = true;
              break;
            }
          }
          if (!found) return false;
        }
      }
    }
  }
  return true;
}

namespace {

constexpr std::size_t kMaxCycleEdges = 20;

// Enumerates the edge sets of all simple cycles. Each cycle is produced
// exactly once: the start vertex is its smallest, and the second vertex is
// smaller than the last (kills rotations and reflections).
std::vector<std::vector<std::size_t>> enumerate_cycles(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  for (std::size_t j = 0; j < g.edge_count(); ++j)
    edge_index[{g.edges()[j].u, g.edges()[j].v}] = j;
  auto index_of = [&](std::size_t a, std::size_t b) {
    return edge_index.at({std::min(a, b), std::max(a, b)});
  };

  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  auto dfs = [&](auto&& self, std::size_t start) -> void {
    std::size_t last = path.back();
    for (std::size_t w : g.neighbors(last)) {
      if (w == start) {
        if (path.size() >= 3 && path[1] < path.back()) {
          std::vector<std::size_t> edge_set;
          for (std::size_t i = 0; i + 1 < path.size(); ++i)
            edge_set.push_back(index_of(path[i], path[i + 1]));
          edge_set.push_back(index_of(path.back(), start));
          cycles.push_back(std::move(edge_set));
        }
      } else if (w > start && !on_path[w]) {
        path.push_back(w);
        on_path[w] = true;
        self(self, start);
        on_path[w] = false;
        path.pop_back();
      }
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path.assign(n, false);
    on_path[s] = true;
    dfs(dfs, s);
  }
  return cycles;
}

}  // namespace

CircuitFamily cycle_matroid(const Graph& g) {
  if (g.edge_count() > kMaxCycleEdges)
    throw TooLargeError("cycle enumeration allows at most " +
                        std::to_string(kMaxCycleEdges) + " edges");
  if (g.edge_count() == 0)
    throw BadParamsError("graph has no edges, the ground set would be empty");
  std::vector<std::string> labels;
  for (const Edge& e : g.edges())
    labels.push_back(g.vertices().label(e.u) + "-" + g.vertices().label(e.v));
  Universe ground(labels);

  std::vector<Subset> circuits;
  for (const auto& edge_set : enumerate_cycles(g)) {
    Subset c(ground.size());
    for (std::size_t j : edge_set) c.insert(j);
    circuits.push_back(c);
  }
  return CircuitFamily(std::move(ground), std::move(circuits));
}

CircuitFamily uniform_matroid(std::size_t k, std::size_t n) {
  if (n < 1 || n > 16)
    throw BadParamsError("n must be between 1 and 16, got " +
                         std::to_string(n));
  if (k > n)
    throw BadParamsError("k must not exceed n, got k=" + std::to_string(k) +
                         " n=" + std::to_string(n));
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  Universe ground(labels);

  std::vector<Subset> circuits;
  const std::size_t size = k + 1;
  if (size <= n) {
    // All size-(k+1) subsets in lexicographic order.
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      Subset c(n);
      for (std::size_t i : pick) c.insert(i);
      circuits.push_back(c);
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return CircuitFamily(std::move(ground), std::move(circuits));
}

}  // namespace covrough
