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

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "trustir/corpus.hpp"

namespace trustir {

/// One named-graph statement. All four components are nonempty.
struct Quad {
  std::string graph;
  std::string subject;
  std::string predicate;
  std::string object;

  friend auto operator<=>(const Quad&, const Quad&) = default;
};

/// Set of quads with insertion order preserved and duplicate statements
/// dropped. Lookups by any single component are indexed so pattern matching
/// can scan the most selective candidate list instead of the whole store.
/// Immutable in practice once projected; concurrent reads are safe.
class QuadStore {
 public:
  /// Ignores exact duplicates; returns true when the quad was new.
  bool insert(Quad quad);

  const std::vector<Quad>& all() const noexcept { return quads_; }
  std::size_t size() const noexcept { return quads_.size(); }

  /// Indices of quads whose `component` (0=graph..3=object) equals `value`,
  /// in insertion order. nullptr when none do.
  const std::vector<std::size_t>* candidates(int component, const std::string& value) const;

 private:
  std::vector<Quad> quads_;
  std::map<std::array<std::string, 4>, bool> seen_;
  std::array<std::unordered_map<std::string, std::vector<std::size_t>>, 4> by_component_;
};

/// Projects page metadata into one named graph per page:
///   (u, u, "meta:last_modified", ISO date)   when the page has a date
///   (u, u, "meta:domain", domain)
///   (u, u, "meta:static", "true"/"false")
///   (u, u, "prov:publisher", id)             when known
///   (u, u, "prov:reputation", decimal)
///   (u, u, "rate:score", decimal)            one per rating
///   (u, u, "link:out", target)               one per outlink
QuadStore project_named_graphs(const CorpusStore& corpus);

/// A pattern term is a variable when it starts with '?', otherwise ground.
using QuadPattern = std::array<std::string, 4>;

/// Variable name -> matched component value.
using Binding = std::map<std::string, std::string>;

/// Every assignment of the pattern's variables such that the instantiated
/// pattern equals a stored quad. Repeated variables must match consistently.
/// A fully ground pattern yields one empty binding when present, else none.
/// Bindings come back in store insertion order.
std::vector<Binding> match_pattern(const QuadStore& store, const QuadPattern& pattern);

inline bool is_pattern_variable(const std::string& term) {
  return !term.empty() && term.front() == '?';
}

}  // namespace trustir
