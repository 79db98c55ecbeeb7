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

#include "trustir/trust_cache.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <vector>

#include "trustir/errors.hpp"
#include "trustir/text.hpp"

namespace trustir {

namespace {

constexpr const char* kHeader = "trustcache v1";

[[noreturn]] void malformed(std::size_t line, const std::string& detail = "") {
  std::string message = "cache line " + std::to_string(line) + " malformed";
  if (!detail.empty()) message += ": " + detail;
  throw CacheError(message);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

std::optional<std::pair<double, int>> TrustCache::get_fresh(const std::string& url,
                                                            std::int64_t now,
                                                            std::int64_t ttl_seconds) const {
  auto it = entries_.find(url);
  if (it == entries_.end()) return std::nullopt;
  const TrustCacheEntry& entry = it->second;
  if (entry.flag == 1) return std::make_pair(entry.trust, 1);
  if (now - entry.stored_at < ttl_seconds) return std::make_pair(entry.trust, 0);
  return std::nullopt;
}

const TrustCacheEntry* TrustCache::find(const std::string& url) const {
  auto it = entries_.find(url);
  return it == entries_.end() ? nullptr : &it->second;
}

bool TrustCache::put(const std::string& url, double trust, std::int64_t now, int flag,
                     bool is_static) {
  if (trust <= 0.0 || !std::isfinite(trust)) {
    throw CacheError("trust value for '" + url + "' must be finite and positive");
  }
  if (!is_static) return false;
  auto it = entries_.find(url);
  if (flag == 1 && it != entries_.end()) return false;  // seeds never downgrade
  entries_[url] = TrustCacheEntry{url, trust, now, flag};
  return true;
}

std::size_t TrustCache::flush_stale(std::int64_t now, std::int64_t ttl_seconds) {
  std::size_t removed = 0;
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->second.flag == 0 && now - it->second.stored_at >= ttl_seconds) {
      it = entries_.erase(it);
      ++removed;
    } else {
      ++it;
    }
  }
  return removed;
}

void TrustCache::save(const std::filesystem::path& path) const {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file '" + tmp.string() + "'");
    out << kHeader << '\n';
    for (const auto& [url, entry] : entries_) {
      out << url << '\t' << format_double_17(entry.trust) << '\t' << entry.stored_at << '\t'
          << entry.flag << '\n';
    }
    out.flush();
    if (!out) throw CacheError("write failed for cache file '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

TrustCache TrustCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot open cache file '" + path.string() + "'");

  TrustCache cache;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kHeader) malformed(1, "bad header");
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields = split_tabs(line);
    if (fields.size() != 4 || fields[0].empty()) malformed(line_no);

    errno = 0;
    char* end = nullptr;
    double trust = std::strtod(fields[1].c_str(), &end);
    if (errno != 0 || end != fields[1].c_str() + fields[1].size() || !std::isfinite(trust) ||
        trust <= 0.0) {
      malformed(line_no, "bad trust value");
    }

    std::int64_t stored_at = 0;
    auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(),
                                     stored_at);
    if (ec != std::errc{} || ptr != fields[2].data() + fields[2].size()) {
      malformed(line_no, "bad timestamp");
    }

    if (fields[3] != "0" && fields[3] != "1") malformed(line_no, "bad flag");
    int flag = fields[3][0] - '0';

    auto [it, inserted] =
        cache.entries_.emplace(fields[0], TrustCacheEntry{fields[0], trust, stored_at, flag});
    if (!inserted) malformed(line_no, "duplicate url");
  }
  if (line_no == 0) malformed(1, "missing header");
  return cache;
}

}  // namespace trustir
