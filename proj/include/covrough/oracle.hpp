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

#ifndef COVROUGH_ORACLE_HPP_
#define COVROUGH_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "covrough/core.hpp"
#include "covrough/graph.hpp"

// Brute-force reference implementations used as ground truth by the test
// suites. They share no set logic or traversal code with the fast paths:
// everything here runs on plain bitmasks and its own loops. Intentionally
// exponential where the statements they check are quantified over all
// subsets; the size guards are hard errors, never silent truncation.
namespace covrough::oracle {

inline constexpr std::size_t kMaxExhaustiveUniverse = 20;

// Every X with upper(X) == X, enumerated over all 2^n subsets, in subset
// index order. Always contains the empty set and the universe.
std::vector<Subset> outer_definable_exhaustive(const Covering& c);

// True iff the only outer definable sets of the induced covering are the
// empty set and the whole vertex set, checked literally over all subsets.
bool is_connected_exhaustive(const Graph& g);

// Plain reachability by traversal; u == v counts as connected.
bool path_exists(const Graph& g, std::size_t u, std::size_t v);

}  // namespace covrough::oracle

#endif  // COVROUGH_ORACLE_HPP_
