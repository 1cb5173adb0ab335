#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace twolen::testing {

namespace {

struct Slot {
  Time release;
  Time deadline;
  Time length;
};

// Calls `leaf` with every non-overlapping assignment of starts; stops early
// when `leaf` returns true.
bool for_each_schedule(const std::vector<Slot>& slots,
                       const std::function<bool(const std::vector<Time>&)>& leaf) {
  std::vector<Time> starts(slots.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == slots.size()) return leaf(starts);
    for (Time s = slots[i].release; s + slots[i].length <= slots[i].deadline; ++s) {
      bool clash = false;
      for (std::size_t j = 0; j < i; ++j) {
        if (s < starts[j] + slots[j].length && starts[j] < s + slots[i].length) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      starts[i] = s;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

std::vector<Slot> slots_of(const std::vector<Task>& tasks) {
  std::vector<Slot> out;
  for (const Task& t : tasks) out.push_back({t.release, t.deadline, t.length});
  return out;
}

}  // namespace

std::optional<Time> min_makespan(const std::vector<Task>& tasks) {
  std::optional<Time> best;
  const std::vector<Slot> slots = slots_of(tasks);
  for_each_schedule(slots, [&](const std::vector<Time>& starts) {
    Time end = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      end = std::max(end, starts[i] + slots[i].length);
    }
    if (!best || end < *best) best = end;
    return false;
  });
  return best;
}

bool feasible_by_enumeration(const std::vector<Task>& tasks) {
  return for_each_schedule(slots_of(tasks), [](const std::vector<Time>&) { return true; });
}

bool aux_by_enumeration(const AuxInstance& aux) {
  std::vector<Slot> slots = slots_of(aux.ordinary);
  const std::size_t base = slots.size();
  const std::size_t n = aux.long_pending.size();
  for (std::size_t i = 0; i < n; ++i) {
    slots.push_back({0, aux.long_pending[i].late, aux.p});
    slots.push_back({0, aux.short_pending[i].late, aux.q});
  }
  return for_each_schedule(slots, [&](const std::vector<Time>& starts) {
    for (std::size_t i = 0; i < n; ++i) {
      const bool long_early = starts[base + 2 * i] + aux.p <= aux.long_pending[i].early;
      const bool short_early =
          starts[base + 2 * i + 1] + aux.q <= aux.short_pending[i].early;
      if (!long_early && !short_early) return false;
    }
    return true;
  });
}

}  // namespace twolen::testing
