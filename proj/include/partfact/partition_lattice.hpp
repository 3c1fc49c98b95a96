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

#include <vector>

#include "partfact/finite_code.hpp"

namespace partfact {

/// True iff every class of `p2` lies inside a class of `p1`, i.e. `p1` is
/// coarser. Throws InvalidInput for partitions of different codes.
bool leq(const Partition& p1, const Partition& p2);

/// Greatest lower bound: components of the overlap graph of the two class
/// families. Both inputs must be coding (PreconditionViolation otherwise).
Partition coding_meet(const Partition& p1, const Partition& p2);

/// Least upper bound: the common refinement of the two partitions. Both
/// inputs must be coding.
Partition coding_join(const Partition& p1, const Partition& p2);

/// Largest characteristic partition size accepted by all_coding_partitions.
inline constexpr std::size_t kMaxLatticeClasses = 8;

/// Every coarsening of P(X), in restricted-growth-string order. Throws
/// ResourceLimit when P(X) has more than kMaxLatticeClasses classes.
std::vector<Partition> all_coding_partitions(const FiniteCode& x);

}  // namespace partfact
