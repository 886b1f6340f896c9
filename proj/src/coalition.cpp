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

#include "uavfl/coalition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>
#include <stdexcept>

#include "uavfl/radio_energy.hpp"

namespace uavfl {

Coalition::Coalition(std::vector<UavId> members)
  : members_(std::move(members))
{
  std::sort(members_.begin(), members_.end());
  if (members_.empty())
  {
    throw std::invalid_argument("coalition must be non-empty");
  }
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
  {
    throw std::invalid_argument("coalition has duplicate members");
  }
}

Coalition::Coalition(std::initializer_list<UavId> members)
  : Coalition(std::vector<UavId>(members))
{}

bool Coalition::contains(UavId id) const
{
  return std::binary_search(members_.begin(), members_.end(), id);
}

std::string Coalition::to_string() const
{
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i)
  {
    if (i > 0)
    {
      out += ',';
    }
    out += std::to_string(members_[i]);
  }
  out += '}';
  return out;
}

Coalition Union(const Coalition &a, const Coalition &b)
{
  std::vector<UavId> ids = a.members_;
  ids.insert(ids.end(), b.members_.begin(), b.members_.end());
  return Coalition(std::move(ids));
}

namespace {

// Minimal recursive-descent reader for "{1,2}" and "{{1},{2,3}}".
class BraceParser
{
public:
  explicit BraceParser(std::string_view text)
    : text_(text)
  {}

  void expect(char c)
  {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
    {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool peek(char c)
  {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  int integer()
  {
    skip_space();
    int        value = 0;
    const auto *begin = text_.data() + pos_;
    const auto *end   = text_.data() + text_.size();
    auto [ptr, ec]    = std::from_chars(begin, end, value);
    if (ec != std::errc{})
    {
      fail("expected an integer");
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  Coalition coalition()
  {
    expect('{');
    std::vector<UavId> ids;
    ids.push_back(integer());
    while (peek(','))
    {
      expect(',');
      ids.push_back(integer());
    }
    expect('}');
    return Coalition(std::move(ids));
  }

  void finish()
  {
    skip_space();
    if (pos_ != text_.size())
    {
      fail("trailing characters");
    }
  }

  [[noreturn]] void fail(const std::string &what) const
  {
    throw std::invalid_argument("cannot parse \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) +
                                ": " + what);
  }

private:
  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
    {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t      pos_ = 0;
};

}  // namespace

Coalition Coalition::Parse(std::string_view text)
{
  BraceParser p(text);
  Coalition   c = p.coalition();
  p.finish();
  return c;
}

Partition::Partition(std::vector<Coalition> coalitions)
  : coalitions_(std::move(coalitions))
{
  std::set<UavId> seen;
  for (const auto &c : coalitions_)
  {
    if (c.empty())
    {
      throw std::invalid_argument("partition contains an empty coalition");
    }
    for (UavId id : c.members())
    {
      if (!seen.insert(id).second)
      {
        throw std::invalid_argument("coalitions overlap on UAV " + std::to_string(id));
      }
    }
  }
  std::sort(coalitions_.begin(), coalitions_.end());
}

std::size_t Partition::max_coalition_size() const
{
  std::size_t m = 0;
  for (const auto &c : coalitions_)
  {
    m = std::max(m, c.size());
  }
  return m;
}

std::vector<UavId> Partition::members() const
{
  std::vector<UavId> ids;
  for (const auto &c : coalitions_)
  {
    ids.insert(ids.end(), c.members().begin(), c.members().end());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool Partition::covers(std::span<const UavId> ids) const
{
  std::vector<UavId> expected(ids.begin(), ids.end());
  std::sort(expected.begin(), expected.end());
  return members() == expected;
}

Partition Partition::merged(std::size_t first, std::size_t second) const
{
  if (first == second || first >= coalitions_.size() || second >= coalitions_.size())
  {
    throw std::out_of_range("invalid merge indices");
  }
  std::vector<Coalition> next;
  next.reserve(coalitions_.size() - 1);
  for (std::size_t i = 0; i < coalitions_.size(); ++i)
  {
    if (i != first && i != second)
    {
      next.push_back(coalitions_[i]);
    }
  }
  next.push_back(Union(coalitions_[first], coalitions_[second]));
  return Partition(std::move(next));
}

Partition Partition::replaced(std::size_t index, const std::vector<Coalition> &parts) const
{
  std::vector<Coalition> next;
  next.reserve(coalitions_.size() + parts.size());
  for (std::size_t i = 0; i < coalitions_.size(); ++i)
  {
    if (i != index)
    {
      next.push_back(coalitions_[i]);
    }
  }
  next.insert(next.end(), parts.begin(), parts.end());
  return Partition(std::move(next));
}

std::string Partition::to_string() const
{
  std::string out = "{";
  for (std::size_t i = 0; i < coalitions_.size(); ++i)
  {
    if (i > 0)
    {
      out += ',';
    }
    out += coalitions_[i].to_string();
  }
  out += '}';
  return out;
}

Partition Partition::Parse(std::string_view text)
{
  BraceParser            p(text);
  std::vector<Coalition> cs;
  p.expect('{');
  if (!p.peek('}'))
  {
    cs.push_back(p.coalition());
    while (p.peek(','))
    {
      p.expect(',');
      cs.push_back(p.coalition());
    }
  }
  p.expect('}');
  p.finish();
  return Partition(std::move(cs));
}

Partition Partition::Singletons(std::span<const UavId> ids)
{
  std::vector<Coalition> cs;
  cs.reserve(ids.size());
  for (UavId id : ids)
  {
    cs.push_back(Coalition{id});
  }
  return Partition(std::move(cs));
}

Partition Partition::Grand(std::span<const UavId> ids)
{
  if (ids.empty())
  {
    return Partition();
  }
  return Partition({Coalition(std::vector<UavId>(ids.begin(), ids.end()))});
}

std::uint64_t BellNumber(int u)
{
  if (u < 0)
  {
    throw std::invalid_argument("BellNumber: negative argument");
  }
  // D_n = sum_j C(n-1, j) D_j, accumulated with overflow checks. Binomials
  // stay far below the 64-bit limit for every n whose Bell number fits.
  std::vector<std::uint64_t> bell{1};
  constexpr auto             kMax = std::numeric_limits<std::uint64_t>::max();
  for (int n = 1; n <= u; ++n)
  {
    std::uint64_t sum      = 0;
    std::uint64_t binomial = 1;  // C(n-1, 0)
    for (int j = 0; j < n; ++j)
    {
      if (j > 0)
      {
        binomial = binomial * static_cast<std::uint64_t>(n - j) / static_cast<std::uint64_t>(j);
      }
      if (bell[j] != 0 && binomial > kMax / bell[j])
      {
        throw std::overflow_error("BellNumber(" + std::to_string(u) + ") exceeds 64 bits");
      }
      const std::uint64_t term = binomial * bell[j];
      if (sum > kMax - term)
      {
        throw std::overflow_error("BellNumber(" + std::to_string(u) + ") exceeds 64 bits");
      }
      sum += term;
    }
    bell.push_back(sum);
  }
  return bell[static_cast<std::size_t>(u)];
}

namespace {

// Restricted growth strings, visited with the "open a new block" branch
// first so the all-singletons partition comes out first.
void VisitGrowthStrings(std::span<const UavId> ids, std::vector<int> &blocks, int used,
                        const std::function<void(const Partition &)> &visit)
{
  const std::size_t k = blocks.size();
  if (k == ids.size())
  {
    std::vector<std::vector<UavId>> groups(static_cast<std::size_t>(used));
    for (std::size_t i = 0; i < ids.size(); ++i)
    {
      groups[static_cast<std::size_t>(blocks[i])].push_back(ids[i]);
    }
    std::vector<Coalition> cs;
    cs.reserve(groups.size());
    for (auto &g : groups)
    {
      cs.emplace_back(std::move(g));
    }
    visit(Partition(std::move(cs)));
    return;
  }
  for (int b = used; b >= 0; --b)
  {
    blocks.push_back(b);
    VisitGrowthStrings(ids, blocks, b == used ? used + 1 : used, visit);
    blocks.pop_back();
  }
}

}  // namespace

void ForEachPartition(std::span<const UavId> ids, const std::function<void(const Partition &)> &visit,
                      std::size_t cap)
{
  if (ids.size() > cap)
  {
    throw std::length_error("cannot enumerate partitions of " + std::to_string(ids.size()) +
                            " players (cap " + std::to_string(cap) + ")");
  }
  if (ids.empty())
  {
    visit(Partition());
    return;
  }
  std::vector<int> blocks;
  blocks.reserve(ids.size());
  VisitGrowthStrings(ids, blocks, 0, visit);
}

std::vector<Partition> EnumeratePartitions(std::span<const UavId> ids, std::size_t cap)
{
  std::vector<Partition> out;
  ForEachPartition(ids, [&](const Partition &p) { out.push_back(p); }, cap);
  return out;
}

std::vector<std::vector<Coalition>> SplitsOf(const Coalition &coalition)
{
  std::vector<std::vector<Coalition>> splits;
  ForEachPartition(
    coalition.members(),
    [&](const Partition &p) {
      if (p.size() >= 2)
      {
        splits.push_back(p.coalitions());
      }
    },
    std::numeric_limits<std::size_t>::max());
  return splits;
}

int IterationSchedule::total() const
{
  int sum = 0;
  for (const auto &a : assignments)
  {
    sum += a.iterations;
  }
  return sum;
}

int IterationSchedule::iterations_of(UavId id) const
{
  for (const auto &a : assignments)
  {
    if (a.uav_id == id)
    {
      return a.iterations;
    }
  }
  return 0;
}

int SelectedWorkerCount(const CellSpec &cell, const ScenarioConfig &scenario)
{
  return static_cast<int>(SelectWorkers(cell, scenario.game.importance_threshold).size());
}

int MemberCapacity(const Coalition &coalition, UavId member, const CellSpec &cell, const ScenarioConfig &scenario)
{
  return MaxIterations(scenario.uav(member), cell, scenario.radio, SelectedWorkerCount(cell, scenario),
                       coalition.size() >= 2);
}

IterationSchedule ScheduleIterations(const Coalition &coalition, const CellSpec &cell,
                                     const ScenarioConfig &scenario)
{
  struct Entry
  {
    double travel;
    UavId  id;
  };
  std::vector<Entry> order;
  order.reserve(coalition.size());
  for (UavId id : coalition.members())
  {
    order.push_back({TravelTime(scenario.uav(id), cell), id});
  }
  std::sort(order.begin(), order.end(), [](const Entry &a, const Entry &b) {
    return a.travel != b.travel ? a.travel < b.travel : a.id < b.id;
  });

  const int         workers   = SelectedWorkerCount(cell, scenario);
  const bool        multi     = coalition.size() >= 2;
  int               remaining = scenario.game.required_iterations;
  IterationSchedule schedule;
  schedule.cell_id = cell.id;
  for (const auto &e : order)
  {
    if (remaining <= 0)
    {
      break;
    }
    const int capacity = MaxIterations(scenario.uav(e.id), cell, scenario.radio, workers, multi);
    const int n        = std::min(capacity, remaining);
    if (n > 0)
    {
      schedule.assignments.push_back({e.id, n});
      remaining -= n;
    }
  }
  return schedule;
}

}  // namespace uavfl
