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

#include "trustir/link_graph.hpp"

#include <algorithm>

#include "trustir/errors.hpp"

namespace trustir {

LinkGraph build_link_graph(const CorpusStore& corpus) {
  if (corpus.empty()) throw CorpusError("cannot build link graph: corpus is empty");

  LinkGraph graph;
  for (const PageRecord& page : corpus.pages()) {
    graph.out[page.url] = page.outlinks;
    graph.in[page.url];  // totality: every corpus URL gets an entry
  }
  for (const PageRecord& page : corpus.pages()) {
    for (const std::string& target : page.outlinks) {
      if (corpus.contains(target)) graph.in[target].push_back(page.url);
    }
  }
  for (auto& [url, sources] : graph.in) std::sort(sources.begin(), sources.end());
  return graph;
}

const std::vector<std::string>& inlinks(const LinkGraph& graph, const std::string& url) {
  static const std::vector<std::string> empty;
  auto it = graph.in.find(url);
  return it == graph.in.end() ? empty : it->second;
}

}  // namespace trustir
