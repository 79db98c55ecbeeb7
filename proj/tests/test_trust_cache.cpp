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

#include <gtest/gtest.h>

#include <random>

#include "testutil.hpp"
#include "trustir/errors.hpp"
#include "trustir/trust_cache.hpp"

namespace {

using testutil::TempDir;
using testutil::write_file;
using namespace trustir;

TEST(GetFresh, FreshConvergedEntryIsReturned) {
  TrustCache cache;
  cache.put("u", 3.2, 1000, 0, true);
  auto hit = cache.get_fresh("u", 1100, 86400);
  ASSERT_TRUE(hit);
  EXPECT_DOUBLE_EQ(hit->first, 3.2);
  EXPECT_EQ(hit->second, 0);
}

TEST(GetFresh, StaleConvergedEntryIsIgnoredButKept) {
  TrustCache cache;
  cache.put("u", 3.2, 1000, 0, true);
  EXPECT_FALSE(cache.get_fresh("u", 1000 + 2 * 86400, 86400));
  EXPECT_NE(cache.find("u"), nullptr);
}

TEST(GetFresh, SeedsHaveNoAgeLimit) {
  TrustCache cache;
  cache.put("u", 0.6, 0, 1, true);
  auto hit = cache.get_fresh("u", 1'000'000'000, 86400);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->second, 1);
}

TEST(Put, NonStaticPagesAreNeverStored) {
  TrustCache cache;
  EXPECT_FALSE(cache.put("u", 3.0, 0, 0, false));
  EXPECT_FALSE(cache.put("u", 3.0, 0, 1, false));
  EXPECT_TRUE(cache.empty());
}

TEST(Put, ConvergedOverwritesSeed) {
  TrustCache cache;
  ASSERT_TRUE(cache.put("u", 0.6, 0, 1, true));
  ASSERT_TRUE(cache.put("u", 3.1, 10, 0, true));
  const TrustCacheEntry* entry = cache.find("u");
  ASSERT_NE(entry, nullptr);
  EXPECT_EQ(entry->flag, 0);
  EXPECT_DOUBLE_EQ(entry->trust, 3.1);
  EXPECT_EQ(cache.size(), 1u);
}

TEST(Put, SeedNeverDowngradesAnExistingEntry) {
  TrustCache cache;
  ASSERT_TRUE(cache.put("u", 3.1, 0, 0, true));
  EXPECT_FALSE(cache.put("u", 0.6, 10, 1, true));
  EXPECT_EQ(cache.find("u")->flag, 0);
  ASSERT_TRUE(cache.put("v", 0.5, 0, 1, true));
  EXPECT_FALSE(cache.put("v", 0.7, 10, 1, true));
  EXPECT_DOUBLE_EQ(cache.find("v")->trust, 0.5);
}

TEST(Put, RejectsNonPositiveTrust) {
  TrustCache cache;
  EXPECT_THROW(cache.put("u", 0.0, 0, 0, true), CacheError);
}

TEST(Flush, RemovesOnlyStaleConvergedEntries) {
  TrustCache cache;
  cache.put("old", 3.0, 0, 0, true);
  cache.put("new", 3.0, 100'000, 0, true);
  cache.put("seed", 0.6, 0, 1, true);
  EXPECT_EQ(cache.flush_stale(100'000, 86400), 1u);
  EXPECT_EQ(cache.find("old"), nullptr);
  EXPECT_NE(cache.find("new"), nullptr);
  EXPECT_NE(cache.find("seed"), nullptr);
}

TEST(Persistence, RoundTripIsExact) {
  TempDir dir;
  TrustCache cache;
  cache.put("https://a.gov/", 1.0 / 3.0, 1263513600, 0, true);
  cache.put("https://b.com/", 2.8217848333459821, 99, 1, true);
  cache.put("https://c.org/x?q=1", 3.2760517518745279, 1263513601, 0, true);

  cache.save(dir.file("cache.tsv"));
  TrustCache loaded = TrustCache::load(dir.file("cache.tsv"));
  ASSERT_EQ(loaded.size(), cache.size());
  for (const auto& [url, entry] : cache.entries()) {
    const TrustCacheEntry* other = loaded.find(url);
    ASSERT_NE(other, nullptr);
    EXPECT_EQ(other->trust, entry.trust);  // bit-exact
    EXPECT_EQ(other->stored_at, entry.stored_at);
    EXPECT_EQ(other->flag, entry.flag);
  }
}

TEST(Persistence, RandomRoundTripsAreExact) {
  TempDir dir;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> trust(1e-6, 10.0);
  TrustCache cache;
  for (int i = 0; i < 200; ++i) {
    cache.put("https://p" + std::to_string(i) + ".net/", trust(rng),
              static_cast<std::int64_t>(rng() % 2'000'000'000), static_cast<int>(rng() % 2),
              true);
  }
  cache.save(dir.file("cache.tsv"));
  TrustCache loaded = TrustCache::load(dir.file("cache.tsv"));
  ASSERT_EQ(loaded.size(), cache.size());
  for (const auto& [url, entry] : cache.entries()) {
    EXPECT_EQ(loaded.find(url)->trust, entry.trust);
  }
}

TEST(Persistence, EmptyCacheIsHeaderOnly) {
  TempDir dir;
  TrustCache().save(dir.file("cache.tsv"));
  EXPECT_EQ(testutil::read_file(dir.file("cache.tsv")), "trustcache v1\n");
  EXPECT_TRUE(TrustCache::load(dir.file("cache.tsv")).empty());
}

TEST(Persistence, TruncatedLineNamesTheLine) {
  TempDir dir;
  write_file(dir.file("cache.tsv"), "trustcache v1\nhttps://a.com/\t3.2\n");
  try {
    TrustCache::load(dir.file("cache.tsv"));
    FAIL() << "expected CacheError";
  } catch (const CacheError& e) {
    EXPECT_TRUE(std::string(e.what()).find("cache line 2 malformed") != std::string::npos)
        << e.what();
  }
}

TEST(Persistence, BadHeaderRejected) {
  TempDir dir;
  write_file(dir.file("cache.tsv"), "something else\n");
  EXPECT_THROW(TrustCache::load(dir.file("cache.tsv")), CacheError);
}

TEST(Persistence, DuplicateUrlRejected) {
  TempDir dir;
  write_file(dir.file("cache.tsv"),
             "trustcache v1\nu\t3.0\t0\t0\nu\t2.0\t0\t1\n");
  EXPECT_THROW(TrustCache::load(dir.file("cache.tsv")), CacheError);
}

TEST(Persistence, SaveReplacesExistingFileAtomically) {
  TempDir dir;
  TrustCache first;
  first.put("u", 3.0, 0, 0, true);
  first.save(dir.file("cache.tsv"));
  TrustCache second;
  second.put("v", 2.0, 5, 0, true);
  second.save(dir.file("cache.tsv"));
  TrustCache loaded = TrustCache::load(dir.file("cache.tsv"));
  EXPECT_EQ(loaded.size(), 1u);
  EXPECT_NE(loaded.find("v"), nullptr);
  EXPECT_FALSE(std::filesystem::exists(dir.file("cache.tsv.tmp")));
}

}  // namespace
