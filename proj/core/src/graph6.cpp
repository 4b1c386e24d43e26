// Copyright 2026 The spexm Authors
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

#include "spexm/graph6.hpp"

#include "spexm/errors.hpp"

namespace spexm {

std::string write_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && (text[begin] == ' ' || text[begin] == '\t' || text[begin] == '\n' ||
                         text[begin] == '\r')) {
    ++begin;
  }
  while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t' ||
                         text[end - 1] == '\n' || text[end - 1] == '\r')) {
    --end;
  }
  if (begin == end) throw Graph6Error("empty graph6 record", begin);
  if (text.substr(begin).starts_with(">>graph6<<")) begin += 10;
  if (begin == end) throw Graph6Error("graph6 header without data", begin);

  auto value = [&](std::size_t pos) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside graph6 range 63..126", pos);
    return static_cast<int>(c) - 63;
  };

  std::size_t pos = begin;
  int n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < end && text[pos + 1] == '~') {
      throw Graph6Error("eight-byte order prefix exceeds the 64-vertex limit", pos);
    }
    if (pos + 4 > end) throw Graph6Error("truncated four-byte order prefix", pos);
    n = (value(pos + 1) << 12) | (value(pos + 2) << 6) | value(pos + 3);
    pos += 4;
  } else {
    n = value(pos);
    pos += 1;
  }
  if (n > Graph::kMaxVertices) {
    throw Graph6Error("order " + std::to_string(n) + " exceeds the 64-vertex limit", begin);
  }
  for (std::size_t i = pos; i < end; ++i) value(i);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (end - pos != expected) {
    throw Graph6Error("length mismatch: expected " + std::to_string(expected) +
                          " data bytes, found " + std::to_string(end - pos),
                      end - pos < expected ? end : pos + expected);
  }
  std::array<VertexMask, Graph::kMaxVertices> rows{};
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + k / 6;
      if ((value(byte) >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (bits % 6) {
    const int pad = value(end - 1) & ((1 << (6 - bits % 6)) - 1);
    if (pad) throw Graph6Error("non-zero padding bits", end - 1);
  }
  return Graph::from_rows(n, std::span<const VertexMask>(rows.data(), n));
}

}  // namespace spexm
