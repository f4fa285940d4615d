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

#include "covrough/io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace covrough::io {

namespace {

std::vector<std::string> significant_tokens(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// All non-blank lines after comment stripping.
std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto tokens = significant_tokens(raw);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

Universe parse_universe_line(const Line& line, const std::string& keyword) {
  if (line.tokens[0] != keyword)
    throw ParseError(line.number, "expected '" + keyword + "' line, got '" +
                                      line.tokens[0] + "'");
  if (line.tokens.size() < 2)
    throw ParseError(line.number, "'" + keyword + "' line lists no elements");
  try {
    return Universe({line.tokens.begin() + 1, line.tokens.end()});
  } catch (const Error& e) {
    throw ParseError(line.number, e.what());
  }
}

Subset parse_subset_line(const Line& line, const Universe& u) {
  Subset s(u.size());
  for (std::size_t t = 1; t < line.tokens.size(); ++t) {
    auto index = u.index_of(line.tokens[t]);
    if (!index)
      throw ParseError(line.number, "unknown label: " + line.tokens[t]);
    s.insert(*index);
  }
  return s;
}

std::size_t parse_count(const Line& line, const std::string& token) {
  try {
    std::size_t pos = 0;
    unsigned long value = std::stoul(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected a nonnegative count, got '" +
                                      token + "'");
  }
}

}  // namespace

Graph parse_graph(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'vertices:' line");
  Universe vertices = parse_universe_line(lines[0], "vertices:");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "edge" || line.tokens.size() != 3)
      throw ParseError(line.number, "expected 'edge <u> <v>'");
    auto u = vertices.index_of(line.tokens[1]);
    auto v = vertices.index_of(line.tokens[2]);
    if (!u) throw ParseError(line.number, "unknown label: " + line.tokens[1]);
    if (!v) throw ParseError(line.number, "unknown label: " + line.tokens[2]);
    if (*u == *v)
      throw ParseError(line.number,
                       "loop edge at vertex " + line.tokens[1] +
                           " (loops are not allowed)");
    auto normalized = std::minmax(*u, *v);
    for (const auto& p : pairs)
      if (p == std::pair(normalized.first, normalized.second))
        throw ParseError(line.number, "duplicate edge " + line.tokens[1] +
                                          " " + line.tokens[2]);
    pairs.emplace_back(normalized.first, normalized.second);
  }
  return Graph(std::move(vertices), pairs);
}

SetFamily parse_family(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'universe:' line");
  Universe universe = parse_universe_line(lines[0], "universe:");

  std::vector<Subset> blocks;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens[0] != "block:")
      throw ParseError(lines[i].number, "expected 'block: <label> ...'");
    blocks.push_back(parse_subset_line(lines[i], universe));
  }
  return SetFamily(std::move(universe), blocks);
}

std::pair<Universe, std::vector<Subset>> parse_circuits(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'ground:' line");
  Universe ground = parse_universe_line(lines[0], "ground:");

  std::vector<Subset> circuits;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens[0] != "circuit:")
      throw ParseError(lines[i].number, "expected 'circuit: <label> ...'");
    circuits.push_back(parse_subset_line(lines[i], ground));
  }
  return {std::move(ground), std::move(circuits)};
}

RawIncidence parse_incidence(std::istream& in) {
  auto lines = significant_lines(in);
  std::size_t at = 0;
  auto next_line = [&]() -> const Line& {
    if (at >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       "unexpected end of input");
    return lines[at++];
  };

  const Line& header = next_line();
  if (header.tokens.size() != 2)
    throw ParseError(header.number, "expected '<n> <m>' header");
  const std::size_t n = parse_count(header, header.tokens[0]);
  const std::size_t m = parse_count(header, header.tokens[1]);

  RawIncidence result;
  result.matrix = IncidenceMatrix(n, m);
  if (m > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      const Line& row = next_line();
      if (row.tokens.size() != m)
        throw ParseError(row.number,
                         "expected " + std::to_string(m) + " entries, got " +
                             std::to_string(row.tokens.size()));
      for (std::size_t j = 0; j < m; ++j) {
        if (row.tokens[j] == "0") continue;
        if (row.tokens[j] == "1")
          result.matrix.at(i, j) = 1;
        else
          throw ParseError(row.number,
                           "matrix entries must be 0 or 1, got '" +
                               row.tokens[j] + "'");
      }
    }
  }

  const Line& labels = next_line();
  if (labels.tokens[0] != "labels:")
    throw ParseError(labels.number, "expected 'labels: <label> ...'");
  result.labels.assign(labels.tokens.begin() + 1, labels.tokens.end());
  if (result.labels.size() != n)
    throw ParseError(labels.number,
                     "expected " + std::to_string(n) + " labels, got " +
                         std::to_string(result.labels.size()));
  return result;
}

namespace {

void print_label_line(std::ostream& out, const std::string& keyword,
                      const std::vector<std::string>& labels) {
  out << keyword;
  for (const auto& label : labels) out << " " << label;
  out << "\n";
}

}  // namespace

void print_graph(std::ostream& out, const Graph& g) {
  print_label_line(out, "vertices:", g.vertices().labels());
  for (const Edge& e : g.edges())
    out << "edge " << g.vertices().label(e.u) << " " << g.vertices().label(e.v)
        << "\n";
}

void print_family(std::ostream& out, const Universe& u,
                  const std::vector<Subset>& blocks) {
  print_label_line(out, "universe:", u.labels());
  for (const Subset& b : blocks) print_label_line(out, "block:", labels_of(u, b));
}

void print_covering(std::ostream& out, const Covering& c) {
  print_family(out, c.universe(), c.blocks());
}

void print_circuits(std::ostream& out, const Universe& ground,
                    const std::vector<Subset>& circuits) {
  print_label_line(out, "ground:", ground.labels());
  for (const Subset& c : circuits)
    print_label_line(out, "circuit:", labels_of(ground, c));
}

void print_incidence(std::ostream& out, const IncidenceMatrix& m,
                     const std::vector<std::string>& labels) {
  out << m.rows << " " << m.cols << "\n";
  if (m.cols > 0) {
    for (std::size_t i = 0; i < m.rows; ++i) {
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (j > 0) out << " ";
        out << static_cast<int>(m.at(i, j));
      }
      out << "\n";
    }
  }
  print_label_line(out, "labels:", labels);
}

}  // namespace covrough::io
