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

#include "covrough/core.hpp"

#include <algorithm>
#include <utility>

namespace covrough {

Universe::Universe(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw EmptyUniverseError();
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, fresh] = index_.emplace(labels_[i], i);
    (void)it;
    if (!fresh) throw DuplicateLabelError(labels_[i]);
  }
}

const std::string& Universe::label(std::size_t i) const {
  if (i >= labels_.size()) throw BadIndexError(i, labels_.size());
  return labels_[i];
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Subset Subset::full(std::size_t universe_size) {
  Subset s(universe_size);
  s.bits_.assign(universe_size, true);
  return s;
}

Subset Subset::of(std::size_t universe_size,
                  std::initializer_list<std::size_t> members) {
  Subset s(universe_size);
  for (std::size_t i : members) s.insert(i);
  return s;
}

bool Subset::contains(std::size_t i) const {
  if (i >= bits_.size()) throw BadIndexError(i, bits_.size());
  return bits_[i];
}

void Subset::insert(std::size_t i) {
  if (i >= bits_.size()) throw BadIndexError(i, bits_.size());
  bits_[i] = true;
}

void Subset::erase(std::size_t i) {
  if (i >= bits_.size()) throw BadIndexError(i, bits_.size());
  bits_[i] = false;
}

std::size_t Subset::count() const {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::size_t> Subset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

Subset Subset::complement() const {
  Subset s(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = !bits_[i];
  return s;
}

bool Subset::intersects(const Subset& other) const {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && other.bits_[i]) return true;
  return false;
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

Subset& Subset::operator|=(const Subset& other) {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    bits_[i] = bits_[i] || other.bits_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    bits_[i] = bits_[i] && other.bits_[i];
  return *this;
}

Subset operator-(const Subset& lhs, const Subset& rhs) {
  Subset::check_same_universe(lhs, rhs);
  Subset out(lhs.universe_size());
  for (std::size_t i = 0; i < out.bits_.size(); ++i)
    out.bits_[i] = lhs.bits_[i] && !rhs.bits_[i];
  return out;
}

void Subset::check_same_universe(const Subset& a, const Subset& b) {
  if (a.bits_.size() != b.bits_.size()) throw UniverseMismatchError();
}

std::string format_subset(const Universe& u, const Subset& s) {
  if (s.universe_size() != u.size()) throw UniverseMismatchError();
  if (s.empty()) return "∅";
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.members()) {
    if (!first) out += ", ";
    out += u.label(i);
    first = false;
  }
  out += "}";
  return out;
}

std::vector<std::string> labels_of(const Universe& u, const Subset& s) {
  if (s.universe_size() != u.size()) throw UniverseMismatchError();
  std::vector<std::string> out;
  for (std::size_t i : s.members()) out.push_back(u.label(i));
  return out;
}

Subset subset_of_labels(const Universe& u,
                        const std::vector<std::string>& labels) {
  Subset s(u.size());
  for (const auto& label : labels) {
    auto i = u.index_of(label);
    if (!i) throw UnknownLabelError(label);
    s.insert(*i);
  }
  return s;
}

namespace {

// Collapses duplicate blocks, keeping the first occurrence order.
std::vector<Subset> dedup_blocks(const Universe& universe,
                                 const std::vector<Subset>& blocks) {
  std::vector<Subset> out;
  for (const Subset& b : blocks) {
    if (b.universe_size() != universe.size()) throw UniverseMismatchError();
    if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
  }
  return out;
}

CoveringViolations find_violations(const Universe& universe,
                                   const std::vector<Subset>& blocks) {
  CoveringViolations v;
  Subset covered(universe.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) v.empty_blocks.push_back(i);
    covered |= blocks[i];
  }
  for (std::size_t e = 0; e < universe.size(); ++e)
    if (!covered.contains(e)) v.uncovered.push_back(e);
  return v;
}

}  // namespace

SetFamily::SetFamily(Universe universe, const std::vector<Subset>& blocks)
    : universe_(std::move(universe)), blocks_(dedup_blocks(universe_, blocks)) {}

Covering::Covering(Universe universe, const std::vector<Subset>& blocks)
    : universe_(std::move(universe)), blocks_(dedup_blocks(universe_, blocks)) {
  CoveringViolations v = find_violations(universe_, blocks_);
  if (v.any()) {
    std::string detail;
    for (const std::string& line : v.report(universe_)) {
      if (!detail.empty()) detail += "; ";
      detail += line;
    }
    throw NotACoveringError(detail);
  }
}

std::vector<std::string> CoveringViolations::report(const Universe& u) const {
  std::vector<std::string> lines;
  for (std::size_t i : empty_blocks)
    lines.push_back("empty block: index " + std::to_string(i));
  for (std::size_t e : uncovered)
    lines.push_back("uncovered element: " + u.label(e));
  return lines;
}

CoveringValidation validate_covering(const SetFamily& family) {
  CoveringValidation result;
  result.violations = find_violations(family.universe(), family.blocks());
  if (!result.violations.any())
    result.covering.emplace(family.universe(), family.blocks());
  return result;
}

Subset upper(const Covering& c, const Subset& x) {
  if (x.universe_size() != c.universe().size()) throw UniverseMismatchError();
  Subset out(x.universe_size());
  for (const Subset& block : c.blocks())
    if (block.intersects(x)) out |= block;
  return out;
}

Subset lower(const Covering& c, const Subset& x) {
  return upper(c, x.complement()).complement();
}

Subset closure_upper(const Covering& c, const Subset& x) {
  Subset current = x;
  for (;;) {
    Subset next = upper(c, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool is_outer_definable(const Covering& c, const Subset& x) {
  return upper(c, x) == x;
}

}  // namespace covrough
