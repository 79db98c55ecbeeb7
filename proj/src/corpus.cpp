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

#include "trustir/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "trustir/errors.hpp"
#include "trustir/text.hpp"

namespace trustir {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw CorpusError("line " + std::to_string(line) + ": " + message);
}

// suffix must sit on a '.' label boundary: "state.gov" matches "gov" but
// "notgov" does not.
bool label_suffix(const std::string& whole, const std::string& suffix) {
  if (whole == suffix) return true;
  if (whole.size() <= suffix.size()) return false;
  return whole.compare(whole.size() - suffix.size(), suffix.size(), suffix) == 0 &&
         whole[whole.size() - suffix.size() - 1] == '.';
}

void check_known_fields(const json& object, const std::set<std::string>& known,
                        std::size_t line, const std::string& context) {
  for (const auto& item : object.items()) {
    if (known.count(item.key()) == 0) {
      fail(line, "unknown field " + (context.empty() ? "" : context + ".") + item.key());
    }
  }
}

PageRecord parse_record(const json& j, std::size_t line) {
  static const std::set<std::string> top_fields = {
      "url", "domain", "tld", "last_modified", "is_static",
      "publisher", "outlinks", "ratings", "content"};
  check_known_fields(j, top_fields, line, "");

  auto require = [&](const char* name) -> const json& {
    auto it = j.find(name);
    if (it == j.end()) fail(line, std::string("missing field ") + name);
    return *it;
  };
  auto require_string = [&](const char* name) -> std::string {
    const json& v = require(name);
    if (!v.is_string()) fail(line, std::string("field ") + name + " must be a string");
    return v.get<std::string>();
  };

  PageRecord page;
  page.url = require_string("url");
  if (page.url.empty()) fail(line, "field url must be nonempty");
  if (url_host(page.url).empty()) fail(line, "field url is not an absolute URL: " + page.url);
  page.domain = require_string("domain");
  page.tld = require_string("tld");

  const json& is_static = require("is_static");
  if (!is_static.is_boolean()) fail(line, "field is_static must be a boolean");
  page.is_static = is_static.get<bool>();

  if (auto it = j.find("last_modified"); it != j.end()) {
    if (!it->is_string()) fail(line, "field last_modified must be a string");
    try {
      page.last_modified = Date::parse(it->get<std::string>());
    } catch (const Error& e) {
      fail(line, std::string("field last_modified: ") + e.what());
    }
  }

  if (auto it = j.find("publisher"); it != j.end()) {
    if (!it->is_object()) fail(line, "field publisher must be an object");
    check_known_fields(*it, {"id", "reputation"}, line, "publisher");
    auto id = it->find("id");
    if (id == it->end() || !id->is_string()) fail(line, "missing field publisher.id");
    page.publisher_id = id->get<std::string>();
    if (auto rep = it->find("reputation"); rep != it->end()) {
      if (!rep->is_number()) fail(line, "field publisher.reputation must be a number");
      page.publisher_reputation = rep->get<double>();
      if (page.publisher_reputation < 0.0 || page.publisher_reputation > 1.0) {
        fail(line, "field publisher.reputation out of range [0,1]");
      }
    }
  }

  const json& outlinks = require("outlinks");
  if (!outlinks.is_array()) fail(line, "field outlinks must be an array");
  for (const json& v : outlinks) {
    if (!v.is_string()) fail(line, "field outlinks must contain only strings");
    std::string target = v.get<std::string>();
    if (url_host(target).empty()) fail(line, "field outlinks contains a non-absolute URL: " + target);
    page.outlinks.push_back(std::move(target));
  }

  const json& ratings = require("ratings");
  if (!ratings.is_array()) fail(line, "field ratings must be an array");
  for (std::size_t i = 0; i < ratings.size(); ++i) {
    const json& r = ratings[i];
    std::string ctx = "ratings[" + std::to_string(i) + "]";
    if (!r.is_object()) fail(line, "field " + ctx + " must be an object");
    check_known_fields(r, {"rater", "score"}, line, ctx);
    auto rater = r.find("rater");
    if (rater == r.end() || !rater->is_string()) fail(line, "missing field " + ctx + ".rater");
    auto score = r.find("score");
    if (score == r.end() || !score->is_number()) fail(line, "missing field " + ctx + ".score");
    double value = score->get<double>();
    if (value < 0.0 || value > 1.0) fail(line, "field " + ctx + ".score out of range [0,1]");
    page.ratings.push_back({rater->get<std::string>(), value});
  }

  page.content = require_string("content");

  // host/domain/tld consistency
  std::string host = url_host(page.url);
  if (!label_suffix(host, to_lower(page.domain))) {
    fail(line, "field domain inconsistent with url host '" + host + "'");
  }
  if (!label_suffix(to_lower(page.domain), to_lower(page.tld))) {
    fail(line, "field tld inconsistent with domain '" + page.domain + "'");
  }
  return page;
}

}  // namespace

std::string url_host(const std::string& url) {
  auto scheme = url.find("://");
  if (scheme == std::string::npos || scheme == 0) return "";
  std::string rest = url.substr(scheme + 3);
  auto end = rest.find_first_of("/:?#");
  if (end != std::string::npos) rest.resize(end);
  return to_lower(rest);
}

CorpusStore::CorpusStore(std::vector<PageRecord> pages) : pages_(std::move(pages)) {
  for (std::size_t i = 0; i < pages_.size(); ++i) {
    PageRecord& page = pages_[i];
    if (page.url.empty()) throw CorpusError("page " + std::to_string(i) + " has an empty url");
    if (!index_.emplace(page.url, i).second) {
      throw CorpusError("duplicate url '" + page.url + "'");
    }
    std::string host = url_host(page.url);
    if (host.empty()) throw CorpusError("'" + page.url + "' is not an absolute URL");
    if (!label_suffix(host, to_lower(page.domain)) ||
        !label_suffix(to_lower(page.domain), to_lower(page.tld))) {
      throw CorpusError("domain/tld inconsistent with url '" + page.url + "'");
    }
    if (page.publisher_reputation < 0.0 || page.publisher_reputation > 1.0) {
      throw CorpusError("publisher reputation out of range for '" + page.url + "'");
    }
    for (const Rating& rating : page.ratings) {
      if (rating.score < 0.0 || rating.score > 1.0) {
        throw CorpusError("rating score out of range for '" + page.url + "'");
      }
    }
    std::unordered_set<std::string> seen;
    std::vector<std::string> unique;
    unique.reserve(page.outlinks.size());
    for (std::string& target : page.outlinks) {
      if (seen.insert(target).second) unique.push_back(std::move(target));
    }
    page.outlinks = std::move(unique);
  }
}

const PageRecord* CorpusStore::find(const std::string& url) const {
  auto it = index_.find(url);
  return it == index_.end() ? nullptr : &pages_[it->second];
}

const PageRecord& CorpusStore::at(const std::string& url) const {
  const PageRecord* page = find(url);
  if (page == nullptr) throw CorpusError("unknown url '" + url + "'");
  return *page;
}

CorpusStore ingest_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file '" + path.string() + "'");

  std::vector<PageRecord> pages;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      fail(line_no, std::string("invalid record: ") + e.what());
    }
    if (!j.is_object()) fail(line_no, "record must be a single object");
    PageRecord page = parse_record(j, line_no);
    auto [it, inserted] = first_line.emplace(page.url, line_no);
    if (!inserted) {
      fail(line_no, "duplicate url '" + page.url + "' (first seen on line " +
                        std::to_string(it->second) + ")");
    }
    pages.push_back(std::move(page));
  }
  return CorpusStore(std::move(pages));
}

}  // namespace trustir
