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

#ifndef COVROUGH_ERRORS_HPP_
#define COVROUGH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace covrough {

// Base of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyUniverseError : public Error {
 public:
  EmptyUniverseError() : Error("universe must contain at least one element") {}
};

class DuplicateLabelError : public Error {
 public:
  explicit DuplicateLabelError(const std::string& label)
      : Error("duplicate label: " + label), label(label) {}
  std::string label;
};

class UnknownLabelError : public Error {
 public:
  explicit UnknownLabelError(const std::string& label)
      : Error("unknown label: " + label), label(label) {}
  std::string label;
};

class BadIndexError : public Error {
 public:
  BadIndexError(std::size_t index, std::size_t universe_size)
      : Error("element index " + std::to_string(index) +
              " out of range for universe of size " +
              std::to_string(universe_size)),
        index(index) {}
  std::size_t index;
};

// Two values were combined that belong to universes of different sizes.
// Identity is index-based, so size is the only thing checked.
class UniverseMismatchError : public Error {
 public:
  UniverseMismatchError() : Error("operands belong to different universes") {}
};

class NotACoveringError : public Error {
 public:
  explicit NotACoveringError(const std::string& detail)
      : Error("not a covering: " + detail) {}
};

class LoopEdgeError : public Error {
 public:
  explicit LoopEdgeError(const std::string& vertex)
      : Error("loop edge at vertex " + vertex) {}
};

class DuplicateEdgeError : public Error {
 public:
  DuplicateEdgeError(const std::string& u, const std::string& v)
      : Error("duplicate edge " + u + " " + v) {}
};

class IsolatedVerticesError : public Error {
 public:
  explicit IsolatedVerticesError(std::vector<std::string> vertices_in)
      : Error(make_message(vertices_in)), vertices(std::move(vertices_in)) {}
  std::vector<std::string> vertices;

 private:
  static std::string make_message(const std::vector<std::string>& vs) {
    std::string m = "isolated vertices:";
    for (const auto& v : vs) m += " " + v;
    return m;
  }
};

// The covering-based check does not apply to this input.
class InapplicableError : public Error {
 public:
  explicit InapplicableError(const std::string& reason)
      : Error("inapplicable: " + reason), reason(reason) {}
  std::string reason;
};

class SameVertexError : public Error {
 public:
  explicit SameVertexError(const std::string& vertex)
      : Error("vertices must be distinct, got " + vertex + " twice") {}
};

class UnknownVertexError : public Error {
 public:
  UnknownVertexError(std::size_t index, std::size_t vertex_count)
      : Error("vertex index " + std::to_string(index) +
              " out of range for graph with " + std::to_string(vertex_count) +
              " vertices") {}
};

class EmptyVertexSetError : public Error {
 public:
  EmptyVertexSetError() : Error("vertex set must be nonempty") {}
};

class BadColumnError : public Error {
 public:
  explicit BadColumnError(std::size_t column)
      : Error("incidence column " + std::to_string(column) +
              " does not have exactly two 1-entries"),
        column(column) {}
  std::size_t column;
};

class TooLargeError : public Error {
 public:
  explicit TooLargeError(const std::string& limit)
      : Error("input exceeds guard: " + limit) {}
};

class BadParamsError : public Error {
 public:
  explicit BadParamsError(const std::string& detail)
      : Error("bad parameters: " + detail) {}
};

}  // namespace covrough

#endif  // COVROUGH_ERRORS_HPP_
