// Copyright 2026 The partfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string_view>

#include "partfact/automata.hpp"

namespace partfact {

/// Compiles a regular expression into a trimmed acceptor.
///
/// Dialect: single-character symbols of `alphabet`, `|` for union,
/// juxtaposition for concatenation, postfix `*` and `+`, parentheses, and `_`
/// for the empty word. Whitespace is ignored. Throws ParseError carrying the
/// offending position.
Fsa regex_to_fsa(std::string_view expr, const Alphabet& alphabet, const Budget& budget = {});

}  // namespace partfact
