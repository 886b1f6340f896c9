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

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uavfl/scenario.hpp"

namespace uavfl {

/// Non-empty set of UAV ids kept in ascending order, so equality and
/// ordering are structural.
class Coalition
{
public:
  Coalition() = default;
  explicit Coalition(std::vector<UavId> members);
  Coalition(std::initializer_list<UavId> members);

  const std::vector<UavId> &members() const noexcept
  {
    return members_;
  }
  std::size_t size() const noexcept
  {
    return members_.size();
  }
  bool  empty() const noexcept
  {
    return members_.empty();
  }
  UavId min_id() const
  {
    return members_.front();
  }
  bool contains(UavId id) const;

  /// "{1,3}"
  std::string to_string() const;
  static Coalition Parse(std::string_view text);

  friend Coalition Union(const Coalition &a, const Coalition &b);

  friend bool                 operator==(const Coalition &, const Coalition &) = default;
  friend std::strong_ordering operator<=>(const Coalition &a, const Coalition &b)
  {
    return a.members_ <=> b.members_;
  }

private:
  std::vector<UavId> members_;
};

/// Pairwise-disjoint coalitions, kept in canonical (lexicographic) order.
class Partition
{
public:
  Partition() = default;
  explicit Partition(std::vector<Coalition> coalitions);

  const std::vector<Coalition> &coalitions() const noexcept
  {
    return coalitions_;
  }
  std::size_t size() const noexcept
  {
    return coalitions_.size();
  }
  std::size_t max_coalition_size() const;

  /// All ids covered, ascending.
  std::vector<UavId> members() const;

  /// True when the coalitions cover exactly `ids`.
  bool covers(std::span<const UavId> ids) const;

  Partition merged(std::size_t first, std::size_t second) const;
  Partition replaced(std::size_t index, const std::vector<Coalition> &parts) const;

  /// "{{1,3},{2}}"
  std::string to_string() const;
  static Partition Parse(std::string_view text);

  static Partition Singletons(std::span<const UavId> ids);
  static Partition Grand(std::span<const UavId> ids);

  friend bool operator==(const Partition &, const Partition &) = default;

private:
  std::vector<Coalition> coalitions_;
};

/// Number of set partitions of `u` elements. Throws std::overflow_error once
/// the value no longer fits in 64 bits (u > 25).
std::uint64_t BellNumber(int u);

/// Default cap on the number of players that may be enumerated exhaustively.
inline constexpr std::size_t kDefaultEnumerationCap = 10;

/// Visits every set partition of `ids` exactly once. The order is
/// deterministic: all-singletons first, the grand coalition last.
void ForEachPartition(std::span<const UavId> ids, const std::function<void(const Partition &)> &visit,
                      std::size_t cap = kDefaultEnumerationCap);

std::vector<Partition> EnumeratePartitions(std::span<const UavId> ids, std::size_t cap = kDefaultEnumerationCap);

/// Ways to split one coalition into two or more smaller coalitions, in
/// enumeration order.
std::vector<std::vector<Coalition>> SplitsOf(const Coalition &coalition);

struct IterationAssignment
{
  UavId uav_id     = 0;
  int   iterations = 0;

  friend bool operator==(const IterationAssignment &, const IterationAssignment &) = default;
};

/// Takeover order of a coalition in one cell: the nearest UAV starts, the
/// next nearest continues once it is exhausted.
struct IterationSchedule
{
  CellId                           cell_id = 0;
  std::vector<IterationAssignment> assignments;

  int total() const;
  int iterations_of(UavId id) const;

  friend bool operator==(const IterationSchedule &, const IterationSchedule &) = default;
};

int SelectedWorkerCount(const CellSpec &cell, const ScenarioConfig &scenario);

/// Iteration capacity of one member inside `coalition` for `cell`.
int MemberCapacity(const Coalition &coalition, UavId member, const CellSpec &cell, const ScenarioConfig &scenario);

IterationSchedule ScheduleIterations(const Coalition &coalition, const CellSpec &cell,
                                     const ScenarioConfig &scenario);

}  // namespace uavfl
