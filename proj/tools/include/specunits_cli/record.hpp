/*
   Copyright 2026 The specunits Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPECUNITS_CLI_RECORD_HPP
#define SPECUNITS_CLI_RECORD_HPP

// JSON encoding of library values. Rationals are always strings ("p/q" or
// "p"); integers that are counts or orders are plain JSON numbers.

#include <string>
#include <string_view>

#include "json.hpp"

#include "specunits/specunits.hpp"

namespace specunits::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const CyclicVector& v);
CyclicVector vector_from_json(const Json& j);

Json to_json(const GroupStructure& g);
GroupStructure structure_from_json(const Json& j);

Json to_json(const UnitOrder& o);
UnitOrder order_from_json(const Json& j);

Json to_json(const Subset& s);

/// Comma-separated rationals, e.g. "7/15,4/15,-2/15".
CyclicVector parse_vector(std::string_view text);

/// Comma-separated residues; each must lie in [0, n). Duplicates are rejected.
Subset parse_set(int n, std::string_view text);

/// Accepts "set:..." / "vec:..." prefixes and "{...}" for sets. Without a
/// marker, a list of exactly n entries is a vector and anything else a set.
CyclicVector parse_vector_or_set(int n, std::string_view text);

/// One CSV row: the entries of v as rationals.
std::string to_csv_row(const CyclicVector& v);

}  // namespace specunits::cli

#endif  // SPECUNITS_CLI_RECORD_HPP
