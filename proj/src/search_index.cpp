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

#include "trustir/search_index.hpp"

#include <algorithm>

#include "trustir/errors.hpp"
#include "trustir/text.hpp"

namespace trustir {

InvertedIndex build_index(const CorpusStore& corpus) {
  if (corpus.empty()) throw CorpusError("cannot build index: corpus is empty");
  InvertedIndex index;
  for (const PageRecord& page : corpus.pages()) {
    std::vector<std::string> tokens = tokenize(page.content);
    index.doc_lengths[page.url] = tokens.size();
    for (const std::string& token : tokens) {
      ++index.postings[token][page.url];
    }
  }
  return index;
}

std::vector<std::string> search(const InvertedIndex& index, const std::string& query,
                                std::size_t k) {
  std::vector<std::string> terms = tokenize(query);
  if (terms.empty()) throw QueryError("empty query");

  std::map<std::string, double> scores;
  for (const std::string& term : terms) {
    auto row = index.postings.find(term);
    if (row == index.postings.end()) continue;
    for (const auto& [url, tf] : row->second) {
      scores[url] += static_cast<double>(tf) / static_cast<double>(index.doc_lengths.at(url));
    }
  }

  std::vector<std::pair<std::string, double>> hits;
  hits.reserve(scores.size());
  for (const auto& [url, score] : scores) {
    if (score > 0.0) hits.emplace_back(url, score);
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (hits.size() > k) hits.resize(k);

  std::vector<std::string> urls;
  urls.reserve(hits.size());
  for (auto& [url, score] : hits) urls.push_back(std::move(url));
  return urls;
}

}  // namespace trustir
