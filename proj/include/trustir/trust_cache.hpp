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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace trustir {

/// Cached trust record. flag 0 marks a converged value usable while fresh;
/// flag 1 marks a provisional seed planted by related-link propagation,
/// consumed on the next computation rather than trusted as final.
struct TrustCacheEntry {
  std::string url;
  double trust = 0.0;       // finite, > 0
  std::int64_t stored_at = 0;  // epoch seconds
  int flag = 0;             // 0 converged, 1 provisional
};

/// In-memory trust store with file persistence. At most one entry per url.
/// Values for non-static ("web 2.0") pages are never stored: their content
/// changes too often for a cached trust value to mean anything, so put()
/// rejects them for both flags. Single logical writer; readers always see a
/// consistent snapshot; saving replaces the file atomically.
class TrustCache {
 public:
  explicit TrustCache(std::int64_t ttl_seconds = 86400) : ttl_seconds_(ttl_seconds) {}

  std::int64_t ttl_seconds() const noexcept { return ttl_seconds_; }
  void set_ttl_seconds(std::int64_t ttl) noexcept { ttl_seconds_ = ttl; }

  /// (trust, flag) when usable: a flag-0 entry younger than ttl_seconds, or
  /// a flag-1 seed at any age. Stale flag-0 entries and absence yield
  /// nothing; stale entries are left in place until flushed.
  std::optional<std::pair<double, int>> get_fresh(const std::string& url, std::int64_t now,
                                                  std::int64_t ttl_seconds) const;

  /// nullptr when the url has no entry. Ignores freshness.
  const TrustCacheEntry* find(const std::string& url) const;

  /// Stores (url, trust, now, flag). Returns false and leaves the cache
  /// unchanged when is_static is false (either flag) or when a flag-1 write
  /// would overwrite an existing entry. flag-0 writes always overwrite.
  bool put(const std::string& url, double trust, std::int64_t now, int flag, bool is_static);

  /// Drops flag-0 entries whose age reached ttl_seconds. Returns the number
  /// removed. Seeds (flag 1) have no age and are kept.
  std::size_t flush_stale(std::int64_t now, std::int64_t ttl_seconds);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Entries keyed (and therefore iterated) by url.
  const std::map<std::string, TrustCacheEntry>& entries() const noexcept { return entries_; }

  /// Writes "trustcache v1" plus one tab-separated line per entry (url,
  /// trust at 17 significant digits, stored_at, flag), via a temp file and
  /// rename so readers never observe a partial file.
  void save(const std::filesystem::path& path) const;

  /// Inverse of save; load(save(c)) reproduces c exactly. Throws CacheError
  /// naming the offending line on corrupt input.
  static TrustCache load(const std::filesystem::path& path);

 private:
  std::map<std::string, TrustCacheEntry> entries_;
  std::int64_t ttl_seconds_;
};

}  // namespace trustir
