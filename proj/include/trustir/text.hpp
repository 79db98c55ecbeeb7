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

#include <string>
#include <string_view>
#include <vector>

namespace trustir {

/// Lowercases and splits on every non-alphanumeric byte, dropping empty
/// tokens. "U.S." therefore becomes {"u", "s"}.
std::vector<std::string> tokenize(std::string_view text);

std::string to_lower(std::string_view s);

/// Shortest decimal form that round-trips the double exactly ("0.5", "3").
std::string format_double(double value);

/// Shortest fixed-notation form that round-trips exactly; never scientific
/// ("0.0000067"). Used where a grammar only admits plain decimals.
std::string format_double_fixed(double value);

/// Fixed 17-significant-digit form; also round-trips exactly. Used where the
/// on-disk format pins the digit count.
std::string format_double_17(double value);

}  // namespace trustir
