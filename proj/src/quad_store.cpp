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

#include "trustir/quad_store.hpp"

#include <algorithm>

#include "trustir/text.hpp"

namespace trustir {

bool QuadStore::insert(Quad quad) {
  std::array<std::string, 4> key{quad.graph, quad.subject, quad.predicate, quad.object};
  auto [it, inserted] = seen_.emplace(std::move(key), true);
  if (!inserted) return false;
  std::size_t index = quads_.size();
  by_component_[0][quad.graph].push_back(index);
  by_component_[1][quad.subject].push_back(index);
  by_component_[2][quad.predicate].push_back(index);
  by_component_[3][quad.object].push_back(index);
  quads_.push_back(std::move(quad));
  return true;
}

const std::vector<std::size_t>* QuadStore::candidates(int component, const std::string& value) const {
  const auto& table = by_component_.at(static_cast<std::size_t>(component));
  auto it = table.find(value);
  return it == table.end() ? nullptr : &it->second;
}

QuadStore project_named_graphs(const CorpusStore& corpus) {
  QuadStore store;
  for (const PageRecord& page : corpus.pages()) {
    const std::string& u = page.url;
    if (page.last_modified) {
      store.insert({u, u, "meta:last_modified", page.last_modified->to_string()});
    }
    store.insert({u, u, "meta:domain", page.domain});
    store.insert({u, u, "meta:static", page.is_static ? "true" : "false"});
    if (page.publisher_id) store.insert({u, u, "prov:publisher", *page.publisher_id});
    store.insert({u, u, "prov:reputation", format_double(page.publisher_reputation)});
    for (const Rating& rating : page.ratings) {
      store.insert({u, u, "rate:score", format_double(rating.score)});
    }
    for (const std::string& target : page.outlinks) {
      store.insert({u, u, "link:out", target});
    }
  }
  return store;
}

namespace {

const std::string& quad_component(const Quad& quad, int i) {
  switch (i) {
    case 0: return quad.graph;
    case 1: return quad.subject;
    case 2: return quad.predicate;
    default: return quad.object;
  }
}

bool unify(const Quad& quad, const QuadPattern& pattern, Binding& binding) {
  binding.clear();
  for (int i = 0; i < 4; ++i) {
    const std::string& term = pattern[static_cast<std::size_t>(i)];
    const std::string& value = quad_component(quad, i);
    if (is_pattern_variable(term)) {
      auto [it, inserted] = binding.emplace(term, value);
      if (!inserted && it->second != value) return false;
    } else if (term != value) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Binding> match_pattern(const QuadStore& store, const QuadPattern& pattern) {
  // Narrow by the most selective ground component, falling back to a full
  // scan for all-variable patterns.
  const std::vector<std::size_t>* best = nullptr;
  bool any_ground = false;
  for (int i = 0; i < 4; ++i) {
    const std::string& term = pattern[static_cast<std::size_t>(i)];
    if (is_pattern_variable(term)) continue;
    any_ground = true;
    const std::vector<std::size_t>* list = store.candidates(i, term);
    if (list == nullptr) return {};  // a ground term that appears nowhere
    if (best == nullptr || list->size() < best->size()) best = list;
  }

  std::vector<Binding> results;
  Binding binding;
  auto try_quad = [&](const Quad& quad) {
    if (unify(quad, pattern, binding)) results.push_back(binding);
  };
  if (any_ground) {
    for (std::size_t index : *best) try_quad(store.all()[index]);
  } else {
    for (const Quad& quad : store.all()) try_quad(quad);
  }
  return results;
}

}  // namespace trustir
