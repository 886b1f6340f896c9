// Copyright 2026 The uavfl Authors.
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

#include <functional>
#include <string_view>

#include "uavfl/auction.hpp"
#include "uavfl/coalition.hpp"

namespace uavfl {

/// A move must raise total profit by more than this to be committed.
inline constexpr double kImprovementTolerance = 1e-9;

enum class MoveKind
{
  Initial,
  Merge,
  Split,
};

std::string_view ToString(MoveKind kind);

struct MoveEvent
{
  MoveKind       kind = MoveKind::Initial;
  Partition      before;
  Partition      after;
  double         gamma_before = 0.0;
  double         gamma_after  = 0.0;
  AuctionOutcome outcome;  // allocation of `after`
};

using MoveSink = std::function<void(const MoveEvent &)>;

struct MergeSplitResult
{
  Partition      partition;
  AuctionOutcome outcome;
  int            moves = 0;
};

/// Alternating merge and split passes from `initial` until neither pass
/// commits a move. Merge candidates are pairs in canonical coalition order,
/// splits follow partition enumeration order, and the first strict
/// improvement is taken.
MergeSplitResult MergeAndSplit(const Partition &initial, const ScenarioConfig &scenario,
                               const MoveSink &sink = nullptr);

/// Starts from all singletons.
MergeSplitResult MergeAndSplit(const ScenarioConfig &scenario, const MoveSink &sink = nullptr);

bool IsMergeSplitStable(const Partition &partition, const ScenarioConfig &scenario);

}  // namespace uavfl
