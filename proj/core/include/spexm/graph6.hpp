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

#pragma once

#include <string>
#include <string_view>

#include "spexm/graph.hpp"

namespace spexm {

/// Standard graph6 encoding (no ">>graph6<<" header). Orders up to 62 use the
/// one-byte size prefix, 63 and 64 the four-byte form.
std::string write_graph6(const Graph& g);

/// Decodes one graph6 record; surrounding whitespace is ignored. Throws
/// Graph6Error carrying the offending byte offset.
Graph parse_graph6(std::string_view text);

}  // namespace spexm
