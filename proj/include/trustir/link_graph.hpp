// Copyright 2026 The trustir Authors
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
#include <unordered_map>
#include <vector>

#include "trustir/corpus.hpp"

namespace trustir {

/// Directed link structure of a corpus. `out` preserves each page's outlink
/// order and may name URLs outside the corpus (kept so related-link
/// propagation can seed them); `in` is total over corpus URLs, each inlink
/// list sorted ascending, and only ever names corpus pages as sources.
struct LinkGraph {
  std::unordered_map<std::string, std::vector<std::string>> out;
  std::unordered_map<std::string, std::vector<std::string>> in;
};

/// Throws CorpusError when the corpus is empty.
LinkGraph build_link_graph(const CorpusStore& corpus);

/// Inlink sources of `url`; empty when the graph has no entry.
const std::vector<std::string>& inlinks(const LinkGraph& graph, const std::string& url);

}  // namespace trustir
