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

#include "specunits/zrel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "specunits/errors.hpp"

namespace specunits {

namespace {

void check_search_bounds(int n, int k, const ZrelOptions& opts) {
  if (n < 1) throw UsageError("modulus must be positive");
  if (k < 0 || k > n) throw UsageError("subset size must lie in [0, n]");
  if (n > opts.max_n) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the search bound " + std::to_string(opts.max_n));
  }
}

// Next k-combination of {0..n-1} in lexicographic order.
bool next_combination(Subset& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

}  // namespace

SubsetClass congruence_canonical(int n, const Subset& s) {
  for (int e : s) {
    if (e < 0 || e >= n) throw UsageError("residue " + std::to_string(e) + " outside Z_" + std::to_string(n));
  }
  SubsetClass best{n, {}};
  bool first = true;
  Subset image(s.size());
  for (int sign : {1, -1}) {
    for (int t = 0; t < n; ++t) {
      std::transform(s.begin(), s.end(), image.begin(), [&](int e) { return ((sign * e + t) % n + n) % n; });
      std::sort(image.begin(), image.end());
      if (first || image < best.canonical) {
        best.canonical = image;
        first = false;
      }
    }
  }
  return best;
}

std::vector<HomometryBucket> homometry_classes(int n, int k, ZrelOptions opts) {
  check_search_bounds(n, k, opts);
  std::vector<HomometryBucket> buckets;
  std::map<std::vector<Rational>, std::size_t> index;

  Subset c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  do {
    CyclicVector iv = interval_content(from_set(n, c));
    auto [it, inserted] = index.try_emplace(iv.entries(), buckets.size());
    if (inserted) buckets.push_back({std::move(iv), {}});
    buckets[it->second].members.push_back(c);
  } while (next_combination(c, n));
  return buckets;
}

std::vector<ZPair> find_zrelated(int n, int k, ZrelOptions opts) {
  std::vector<ZPair> pairs;
  for (const auto& bucket : homometry_classes(n, k, opts)) {
    std::set<SubsetClass> classes;
    for (const auto& s : bucket.members) classes.insert(congruence_canonical(n, s));
    for (auto a = classes.begin(); a != classes.end(); ++a) {
      for (auto b = std::next(a); b != classes.end(); ++b) pairs.push_back({*a, *b});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const ZPair& x, const ZPair& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  return pairs;
}

}  // namespace specunits
