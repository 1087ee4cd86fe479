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

#include "specunits_cli/record.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace specunits::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw UsageError("expected a rational encoded as a string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const CyclicVector& v) {
  Json arr = Json::array();
  for (const auto& q : v.entries()) arr.push_back(to_json(q));
  return arr;
}

CyclicVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw UsageError("expected a non-empty array of rationals");
  std::vector<Rational> v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return CyclicVector(std::move(v));
}

Json to_json(const GroupStructure& g) {
  Json out;
  out["order"] = g.order();
  out["factors"] = g.factors;
  return out;
}

GroupStructure structure_from_json(const Json& j) {
  GroupStructure g;
  g.factors = j.at("factors").get<std::vector<std::uint64_t>>();
  if (j.contains("order") && j.at("order").get<std::uint64_t>() != g.order()) {
    throw UsageError("group order does not match its factors");
  }
  return g;
}

Json to_json(const UnitOrder& o) {
  if (o.is_finite()) return o.value();
  return "infinite";
}

UnitOrder order_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "infinite") return UnitOrder::infinite();
  if (j.is_number_unsigned()) return UnitOrder::finite(j.get<std::uint64_t>());
  throw UsageError("expected a positive integer or \"infinite\"");
}

Json to_json(const Subset& s) { return Json(s); }

CyclicVector parse_vector(std::string_view text) {
  std::vector<Rational> v;
  for (auto field : split(text)) {
    try {
      v.push_back(parse_rational(field));
    } catch (const DivisionByZero&) {
      throw UsageError("zero denominator in '" + std::string(field) + "'");
    }
  }
  if (v.empty()) throw UsageError("empty vector");
  return CyclicVector(std::move(v));
}

Subset parse_set(int n, std::string_view text) {
  Subset s;
  for (auto field : split(text)) {
    int r = 0;
    std::size_t used = 0;
    try {
      r = std::stoi(std::string(field), &used);
    } catch (const std::exception&) {
      throw UsageError("bad residue '" + std::string(field) + "'");
    }
    if (used != field.size()) throw UsageError("bad residue '" + std::string(field) + "'");
    if (r < 0 || r >= n) {
      throw UsageError("residue " + std::to_string(r) + " outside [0, " + std::to_string(n) + ")");
    }
    s.push_back(r);
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw UsageError("repeated residue in set");
  return s;
}

CyclicVector parse_vector_or_set(int n, std::string_view text) {
  text = trim(text);
  if (starts_with(text, "set:")) return from_set(n, parse_set(n, text.substr(4)));
  if (starts_with(text, "vec:")) text = text.substr(4);
  else if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw UsageError("unterminated set literal");
    return from_set(n, parse_set(n, text.substr(1, text.size() - 2)));
  } else if (static_cast<int>(split(text).size()) != n) {
    return from_set(n, parse_set(n, text));
  }
  CyclicVector v = parse_vector(text);
  if (v.n() != n) {
    throw UsageError("vector has " + std::to_string(v.n()) + " entries, expected " + std::to_string(n));
  }
  return v;
}

std::string to_csv_row(const CyclicVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.entries().size(); ++i) {
    if (i) os << ',';
    os << to_string(v.entries()[i]);
  }
  return os.str();
}

}  // namespace specunits::cli
