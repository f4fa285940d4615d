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

#ifndef COVROUGH_IO_HPP_
#define COVROUGH_IO_HPP_

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "covrough/core.hpp"
#include "covrough/graph.hpp"

// Text formats. Labels are whitespace-separated tokens; '#' starts a comment
// except in the incidence format, which is strictly positional.
//
//   graph:     vertices: a b c d        covering:  universe: a b c
//              edge a b                            block: a b
//
//   matroid:   ground: 1 2 3            incidence: <n> <m>
//              circuit: 1 2                        <m digits per row, n rows>
//                                                  labels: a b c
namespace covrough::io {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line(line) {}
  std::size_t line;
};

Graph parse_graph(std::istream& in);
SetFamily parse_family(std::istream& in);
// Raw circuits, before the axiom check.
std::pair<Universe, std::vector<Subset>> parse_circuits(std::istream& in);

struct RawIncidence {
  IncidenceMatrix matrix;
  std::vector<std::string> labels;
};
RawIncidence parse_incidence(std::istream& in);

void print_graph(std::ostream& out, const Graph& g);
void print_family(std::ostream& out, const Universe& u,
                  const std::vector<Subset>& blocks);
void print_covering(std::ostream& out, const Covering& c);
void print_circuits(std::ostream& out, const Universe& ground,
                    const std::vector<Subset>& circuits);
void print_incidence(std::ostream& out, const IncidenceMatrix& m,
                     const std::vector<std::string>& labels);

}  // namespace covrough::io

#endif  // COVROUGH_IO_HPP_
