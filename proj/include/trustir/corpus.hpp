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
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "trustir/dates.hpp"

namespace trustir {

struct Rating {
  std::string rater;
  double score = 0.0;  // in [0, 1]
};

/// One web-page snapshot. `is_static == false` marks pages whose content is
/// user-edited and changes often; their trust is recomputed on every query
/// and never persisted.
struct PageRecord {
  std::string url;     // absolute, unique within a corpus
  std::string domain;  // registrable host, consistent with url
  std::string tld;     // suffix token, possibly compound ("gov.in")
  std::optional<Date> last_modified;
  bool is_static = true;
  std::optional<std::string> publisher_id;
  double publisher_reputation = 0.5;  // neutral prior when the record has none
  std::vector<std::string> outlinks;  // absolute URLs, duplicates dropped
  std::vector<Rating> ratings;
  std::string content;
};

/// Immutable collection of pages in file order. Construction validates the
/// record invariants (unique urls, [0,1] reputations and rating scores,
/// domain/tld consistency) and deduplicates outlinks preserving first
/// occurrence. Safe for unlimited concurrent readers once built.
class CorpusStore {
 public:
  CorpusStore() = default;
  explicit CorpusStore(std::vector<PageRecord> pages);

  const std::vector<PageRecord>& pages() const noexcept { return pages_; }
  std::size_t size() const noexcept { return pages_.size(); }
  bool empty() const noexcept { return pages_.empty(); }

  bool contains(const std::string& url) const { return index_.count(url) != 0; }

  /// nullptr when the url is not in the corpus.
  const PageRecord* find(const std::string& url) const;

  /// Throws CorpusError when the url is not in the corpus.
  const PageRecord& at(const std::string& url) const;

 private:
  std::vector<PageRecord> pages_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Loads a line-delimited corpus file: one JSON object per non-blank line
/// with fields url, domain, tld, is_static, outlinks, ratings, content
/// (required) and last_modified, publisher {id, reputation} (optional).
/// Unknown fields are rejected. Errors carry the offending line number.
CorpusStore ingest_corpus(const std::filesystem::path& path);

/// Host part of an absolute URL, lowercased; empty when the URL has no
/// recognizable scheme://host prefix.
std::string url_host(const std::string& url);

}  // namespace trustir
