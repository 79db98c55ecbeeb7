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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "trustir/corpus.hpp"

namespace trustir {

/// Plain term-frequency inverted index. Deliberately trust-blind: no IDF,
/// no stemming, so any ranking difference downstream is attributable to the
/// trust and quality stages. Immutable after build; concurrent reads safe.
struct InvertedIndex {
  std::map<std::string, std::map<std::string, int>> postings;  // term -> url -> tf
  std::map<std::string, std::size_t> doc_lengths;              // url -> token count
};

InvertedIndex build_index(const CorpusStore& corpus);

/// Top-k urls by score(u) = sum over query tokens t of tf(t,u)/len(u),
/// keeping only score > 0, ordered score descending then url ascending.
/// Throws QueryError("empty query") when the query has no tokens.
std::vector<std::string> search(const InvertedIndex& index, const std::string& query,
                                std::size_t k);

}  // namespace trustir
