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

#ifndef SPECUNITS_ZREL_HPP
#define SPECUNITS_ZREL_HPP

#include <compare>
#include <vector>

#include "specunits/circulant.hpp"

namespace specunits {

/// Congruence class of a subset of Z_n under translations and inversion,
/// named by its lexicographically smallest member.
struct SubsetClass {
  int n = 1;
  Subset canonical;

  friend bool operator==(const SubsetClass&, const SubsetClass&) = default;
  friend auto operator<=>(const SubsetClass&, const SubsetClass&) = default;
};

/// Minimum over the 2n images t + S and t - S. Throws UsageError on residues
/// outside [0, n).
SubsetClass congruence_canonical(int n, const Subset& s);

struct HomometryBucket {
  CyclicVector interval_content;
  std::vector<Subset> members;  // lexicographic order
};

struct ZPair {
  SubsetClass first;
  SubsetClass second;  // first < second

  friend bool operator==(const ZPair&, const ZPair&) = default;
};

struct ZrelOptions {
  /// Searches are exhaustive over C(n, k) subsets; larger n needs an
  /// explicit raise.
  int max_n = 16;
};

/// All k-subsets of Z_n grouped by interval content, buckets ordered by their
/// first member.
std::vector<HomometryBucket> homometry_classes(int n, int k, ZrelOptions opts = {});

/// Unordered pairs of distinct congruence classes sharing an interval
/// content, sorted by (first, second).
std::vector<ZPair> find_zrelated(int n, int k, ZrelOptions opts = {});

}  // namespace specunits

#endif  // SPECUNITS_ZREL_HPP
