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

#ifndef COVROUGH_CORE_HPP_
#define COVROUGH_CORE_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "covrough/errors.hpp"

namespace covrough {

// A finite, ordered universe of distinct labels. Element identity is the
// index; labels only matter at parse/print boundaries. Every subset in this
// library is expressed against one of these.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const Universe& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A subset of a fixed-size universe, stored as a characteristic vector.
class Subset {
 public:
  explicit Subset(std::size_t universe_size) : bits_(universe_size, false) {}

  static Subset full(std::size_t universe_size);
  static Subset of(std::size_t universe_size,
                   std::initializer_list<std::size_t> members);

  std::size_t universe_size() const { return bits_.size(); }
  bool contains(std::size_t i) const;
  void insert(std::size_t i);
  void erase(std::size_t i);

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool is_full() const { return count() == bits_.size(); }
  std::vector<std::size_t> members() const;

  Subset complement() const;
  bool intersects(const Subset& other) const;
  bool is_subset_of(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  friend Subset operator|(Subset lhs, const Subset& rhs) { return lhs |= rhs; }
  friend Subset operator&(Subset lhs, const Subset& rhs) { return lhs &= rhs; }
  // Set difference.
  friend Subset operator-(const Subset& lhs, const Subset& rhs);

  bool operator==(const Subset& other) const = default;

 private:
  static void check_same_universe(const Subset& a, const Subset& b);
  std::vector<bool> bits_;
};

// "{a, c}" with members sorted by universe index; the empty set prints as ∅.
std::string format_subset(const Universe& u, const Subset& s);

std::vector<std::string> labels_of(const Universe& u, const Subset& s);

// Builds a subset from labels; throws UnknownLabelError.
Subset subset_of_labels(const Universe& u,
                        const std::vector<std::string>& labels);

// A family of subsets of one universe. Duplicate blocks are collapsed
// (first occurrence wins); otherwise block order is the input order.
class SetFamily {
 public:
  SetFamily(Universe universe, const std::vector<Subset>& blocks);

  const Universe& universe() const { return universe_; }
  const std::vector<Subset>& blocks() const { return blocks_; }

 private:
  Universe universe_;
  std::vector<Subset> blocks_;
};

// A set family with no empty block whose blocks union to the universe.
// The constructor enforces both; use validate_covering to get violations
// as data instead of an exception.
class Covering {
 public:
  Covering(Universe universe, const std::vector<Subset>& blocks);

  const Universe& universe() const { return universe_; }
  const std::vector<Subset>& blocks() const { return blocks_; }

 private:
  Universe universe_;
  std::vector<Subset> blocks_;
};

struct CoveringViolations {
  std::vector<std::size_t> empty_blocks;  // indices into the family's blocks
  std::vector<std::size_t> uncovered;     // element indices not in the union

  bool any() const { return !empty_blocks.empty() || !uncovered.empty(); }
  // One line per violation, machine-parsable.
  std::vector<std::string> report(const Universe& u) const;
};

struct CoveringValidation {
  std::optional<Covering> covering;  // engaged iff no violations
  CoveringViolations violations;

  bool ok() const { return covering.has_value(); }
};

CoveringValidation validate_covering(const SetFamily& family);

// Union of all covering blocks that meet x.
Subset upper(const Covering& c, const Subset& x);

// Complement of the upper approximation of the complement.
Subset lower(const Covering& c, const Subset& x);

// Least fixpoint of the upper operator above x, by iterating upper until
// stationary. Terminates: the chain strictly increases in a finite lattice.
Subset closure_upper(const Covering& c, const Subset& x);

// True iff upper(c, x) == x.
bool is_outer_definable(const Covering& c, const Subset& x);

}  // namespace covrough

#endif  // COVROUGH_CORE_HPP_
