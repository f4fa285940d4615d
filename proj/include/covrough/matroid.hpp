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

#ifndef COVROUGH_MATROID_HPP_
#define COVROUGH_MATROID_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "covrough/core.hpp"
#include "covrough/graph.hpp"

namespace covrough {

struct CircuitValidation;

// A circuit family over a ground set that satisfies the circuit axioms:
//   (C1) no circuit is empty,
//   (C2) circuits form an antichain,
//   (C3) weak elimination.
// Instances come out of validate_circuits or the generators below, so
// holding one means the axioms were checked (or hold by construction).
class CircuitFamily {
 public:
  const Universe& ground() const { return ground_; }
  const std::vector<Subset>& circuits() const { return circuits_; }

 private:
  CircuitFamily(Universe ground, std::vector<Subset> circuits)
      : ground_(std::move(ground)), circuits_(std::move(circuits)) {}

  friend CircuitValidation validate_circuits(const Universe& ground,
                                             const std::vector<Subset>& circuits);
  friend CircuitFamily cycle_matroid(const Graph& g);
  friend CircuitFamily uniform_matroid(std::size_t k, std::size_t n);

  Universe ground_;
  std::vector<Subset> circuits_;
};

struct CircuitViolations {
  // C1: indices of empty circuits.
  std::vector<std::size_t> empty_circuits;
  // C2: pairs (i, j) with circuit i properly contained in circuit j.
  std::vector<std::pair<std::size_t, std::size_t>> containments;
  // C3: (i, j, x) with x shared by circuits i and j but no circuit inside
  // their union minus x.
  struct EliminationGap {
    std::size_t first;
    std::size_t second;
    std::size_t element;
  };
  std::vector<EliminationGap> elimination_gaps;

  bool any() const {
    return !empty_circuits.empty() || !containments.empty() ||
           !elimination_gaps.empty();
  }
  // Machine-parsable lines, e.g. "C2 violated: {1} ⊂ {1, 2}".
  std::vector<std::string> report(const Universe& ground,
                                  const std::vector<Subset>& circuits) const;
};

struct CircuitValidation {
  std::optional<CircuitFamily> family;  // engaged iff no violations
  CircuitViolations violations;
  // Deduplicated circuits the violation indices refer to.
  std::vector<Subset> checked_circuits;

  bool ok() const { return family.has_value(); }
};

// Checks C1 and C2 exhaustively and C3 over all (circuit, circuit, element)
// triples. Duplicate circuits are collapsed first.
CircuitValidation validate_circuits(const Universe& ground,
                                    const std::vector<Subset>& circuits);

// Elements whose singleton is a circuit.
Subset loops(const CircuitFamily& m);

// True iff the circuits union to the ground set.
bool circuits_cover(const CircuitFamily& m);

// Graph on the ground set joining any two distinct elements that share a
// circuit. Loops contribute no edges, so they become isolated vertices.
Graph induce_graph(const CircuitFamily& m);

// Partition of the ground set into classes of the relation "equal or
// sharing a circuit", computed by union-find over the circuits.
Partition gamma_components(const CircuitFamily& m);

enum class ConnectivityMethod {
  kGamma,           // gamma_components has a single class
  kInducedGraph,    // the induced graph is connected
  kCircuitCovering  // the 3-step procedure on the circuit family itself
};

// All three methods agree on every validated family. A one-element ground
// set counts as connected regardless of loops.
bool is_connected_matroid(const CircuitFamily& m, ConnectivityMethod method);

// Upper approximation taking the circuit family itself as the covering.
// Requires a loopless family whose circuits cover the ground set; throws
// NotACoveringError otherwise.
Subset upper_via_circuits(const CircuitFamily& m, const Subset& x);

// Exhaustively verifies strong circuit elimination: for intersecting
// distinct circuits and elements e1, e2 on either side, some circuit inside
// the union contains both. Holds for every valid circuit family; false
// means the input is not a matroid despite spot checks, or a bug.
bool check_strong_elimination(const CircuitFamily& m);

// Circuits are the edge sets of the simple cycles of g; ground elements are
// g's edges labeled "<u>-<v>". Guard: at most 20 edges.
CircuitFamily cycle_matroid(const Graph& g);

// Ground {1..n}; circuits are all (k+1)-element subsets (none when k = n).
// Guard: 1 <= n <= 16, k <= n.
CircuitFamily uniform_matroid(std::size_t k, std::size_t n);

}  // namespace covrough

#endif  // COVROUGH_MATROID_HPP_
