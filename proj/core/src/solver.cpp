#include "twolen/solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twolen/errors.hpp"

namespace twolen {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kFeasible:
      return "feasible";
    case Verdict::kInfeasible:
      return "infeasible";
    case Verdict::kBudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

namespace {

constexpr Time kInfinity = std::numeric_limits<Time>::max() / 4;

void require_valid(const Instance& inst) {
  Violations vs = validate_instance(inst);
  if (!vs.empty()) throw InvalidInput("invalid instance:\n" + to_string(vs), vs);
}

struct Job {
  Time release;
  Time deadline;
  Time length;
  std::size_t source;  // index into Instance::tasks
};

// Preemptive EDF over the jobs in `by_release` (sorted by release) that pass
// `active`, with every release lifted to at least `from`. Returns the deadline
// of the first job that finishes late, or kInfinity if none does. Jobs with a
// deadline above the returned value never preempt the ones below it, so the
// failure also holds for the jobs due by that deadline alone.
template <typename Active>
Time edf_relaxation(const std::vector<Job>& jobs,
                    const std::vector<std::size_t>& by_release, Time from,
                    Active active) {
  // (deadline, remaining work); min-heap on deadline.
  using Entry = std::pair<Time, Time>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  std::size_t next = 0;
  auto skip_inactive = [&] {
    while (next < by_release.size() && !active(by_release[next])) ++next;
  };
  auto release_of = [&](std::size_t k) {
    return std::max(from, jobs[by_release[k]].release);
  };

  Time now = from;
  skip_inactive();
  while (next < by_release.size() || !ready.empty()) {
    if (ready.empty()) now = std::max(now, release_of(next));
    while (next < by_release.size() && release_of(next) <= now) {
      const Job& j = jobs[by_release[next]];
      ready.emplace(j.deadline, j.length);
      ++next;
      skip_inactive();
    }
    auto [deadline, work] = ready.top();
    ready.pop();
    const Time horizon = next < by_release.size() ? release_of(next) : kInfinity;
    const Time run = std::min(work, horizon - now);
    now += run;
    work -= run;
    if (work == 0) {
      if (now > deadline) return deadline;
    } else {
      if (now + work > deadline) return deadline;
      ready.emplace(deadline, work);
    }
  }
  return kInfinity;
}

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& words) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

class ChronologicalSearch {
 public:
  ChronologicalSearch(const Instance& inst, const SolveBudget& budget)
      : inst_(inst), budget_(budget), begin_(std::chrono::steady_clock::now()) {
    jobs_.reserve(inst.tasks.size());
    for (std::size_t i = 0; i < inst.tasks.size(); ++i) {
      const Task& t = inst.tasks[i];
      jobs_.push_back({t.release, t.deadline, t.length, i});
    }
    std::sort(jobs_.begin(), jobs_.end(), [&](const Job& a, const Job& b) {
      if (a.deadline != b.deadline) return a.deadline < b.deadline;
      if (a.length != b.length) return a.length > b.length;
      return inst_.tasks[a.source].id < inst_.tasks[b.source].id;
    });
    by_release_.resize(jobs_.size());
    std::iota(by_release_.begin(), by_release_.end(), std::size_t{0});
    std::stable_sort(by_release_.begin(), by_release_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return jobs_[a].release < jobs_[b].release;
                     });
    done_.assign((jobs_.size() + 63) / 64, 0);
    start_.assign(jobs_.size(), 0);
  }

  SolveResult run() {
    SolveResult result;
    Time origin = kInfinity;
    for (const Job& j : jobs_) origin = std::min(origin, j.release);
    if (jobs_.empty()) origin = 0;

    Time horizon = 0;
    const bool found = dfs(origin, jobs_.size(), horizon);
    result.stats.nodes = nodes_;
    result.stats.millis = elapsed().count();
    if (found) {
      result.verdict = Verdict::kFeasible;
      Schedule sch;
      for (std::size_t k = 0; k < jobs_.size(); ++k) {
        sch.starts[inst_.tasks[jobs_[k].source].id] = start_[k];
      }
      result.witness = std::move(sch);
    } else {
      result.verdict =
          aborted_ ? Verdict::kBudgetExhausted : Verdict::kInfeasible;
    }
    return result;
  }

 private:
  static constexpr std::size_t kMemoLimit = std::size_t{1} << 22;

  bool is_done(std::size_t k) const { return (done_[k >> 6] >> (k & 63)) & 1U; }
  void flip(std::size_t k) { done_[k >> 6] ^= std::uint64_t{1} << (k & 63); }

  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - begin_);
  }

  bool out_of_budget() {
    if (budget_.max_nodes && nodes_ > *budget_.max_nodes) return true;
    if (budget_.max_time && (nodes_ & 1023) == 0 &&
        elapsed() > *budget_.max_time) {
      return true;
    }
    return false;
  }

  // Returns true when the remaining jobs can be completed from `now`. On
  // failure, `horizon` receives a deadline H such that the remaining jobs due
  // by H already cannot be completed from `now`; jobs due later played no part
  // in the refutation. Every pruning rule reports such a bound, and the
  // branching rules never hide a schedule of that restricted set, so the bound
  // of a subtree is the maximum over its children.
  bool dfs(Time now, std::size_t remaining, Time& horizon) {
    if (remaining == 0) return true;
    ++nodes_;
    if (out_of_budget()) {
      aborted_ = true;
      return false;
    }

    // jobs_ is sorted by deadline, so the first late job has the tightest bound.
    Time earliest_completion = kInfinity;
    for (std::size_t k = 0; k < jobs_.size(); ++k) {
      if (is_done(k)) continue;
      const Job& j = jobs_[k];
      const Time end = std::max(now, j.release) + j.length;
      if (end > j.deadline) {
        horizon = j.deadline;
        return false;
      }
      earliest_completion = std::min(earliest_completion, end);
    }

    if (lookup_failure(now, horizon)) return false;

    const Time overload = edf_relaxation(
        jobs_, by_release_, now, [&](std::size_t k) { return !is_done(k); });
    if (overload != kInfinity) {
      horizon = overload;
      record_failure(now, horizon);
      return false;
    }

    horizon = std::numeric_limits<Time>::min();
    for (std::size_t k = 0; k < jobs_.size(); ++k) {
      if (is_done(k)) continue;
      const Job& j = jobs_[k];
      const Time start = std::max(now, j.release);
      if (start >= earliest_completion) continue;
      if (dominated(k, start)) continue;

      flip(k);
      start_[k] = start;
      Time child = 0;
      if (dfs(start + j.length, remaining - 1, child)) return true;
      flip(k);
      if (aborted_) return false;
      horizon = std::max(horizon, child);
    }
    record_failure(now, horizon);
    return false;
  }

  // Number of jobs due by `horizon`; they form a prefix of jobs_.
  std::size_t prefix_for(Time horizon) const {
    return static_cast<std::size_t>(
        std::upper_bound(jobs_.begin(), jobs_.end(), horizon,
                         [](Time h, const Job& j) { return h < j.deadline; }) -
        jobs_.begin());
  }

  // Memo key: which of the first `prefix` jobs are scheduled, plus `prefix`.
  const std::vector<std::uint64_t>& key_for(std::size_t prefix) {
    key_.assign(done_.begin(), done_.begin() + static_cast<std::ptrdiff_t>((prefix + 63) / 64));
    if (prefix % 64 != 0) key_.back() &= (std::uint64_t{1} << (prefix % 64)) - 1;
    key_.push_back(prefix);
    return key_;
  }

  bool lookup_failure(Time now, Time& horizon) {
    for (std::size_t prefix : prefixes_) {
      auto it = memo_.find(key_for(prefix));
      if (it != memo_.end() && it->second <= now) {
        horizon = prefix == 0 ? std::numeric_limits<Time>::min()
                              : jobs_[prefix - 1].deadline;
        return true;
      }
    }
    return false;
  }

  void record_failure(Time now, Time horizon) {
    const std::size_t prefix = prefix_for(horizon);
    auto [it, inserted] = memo_.try_emplace(key_for(prefix), now);
    if (!inserted) {
      it->second = std::min(it->second, now);
    } else {
      prefixes_.insert(prefix);
      if (memo_.size() > kMemoLimit) {
        memo_.clear();
        prefixes_.clear();
      }
    }
  }

  // Some earlier-ordered (so no later deadline) unscheduled job of the same
  // length is already released at `start`; starting it instead is never worse.
  bool dominated(std::size_t k, Time start) const {
    const Job& j = jobs_[k];
    for (std::size_t o = 0; o < k; ++o) {
      if (is_done(o)) continue;
      const Job& other = jobs_[o];
      if (other.length == j.length && other.release <= start) return true;
    }
    return false;
  }

  const Instance& inst_;
  SolveBudget budget_;
  std::chrono::steady_clock::time_point begin_;
  std::vector<Job> jobs_;
  std::vector<std::size_t> by_release_;
  std::vector<std::uint64_t> done_;
  std::vector<Time> start_;
  // Failure memo: (prefix, scheduled bits of the prefix) -> earliest time
  // from which those unscheduled jobs were shown not to fit.
  std::unordered_map<std::vector<std::uint64_t>, Time, BitsetHash> memo_;
  std::set<std::size_t> prefixes_;
  std::vector<std::uint64_t> key_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SolveResult solve_decision(const Instance& inst, const SolveBudget& budget) {
  require_valid(inst);
  return ChronologicalSearch(inst, budget).run();
}

bool preemptive_edf_feasible(const Instance& inst) {
  require_valid(inst);
  std::vector<Job> jobs;
  Time origin = kInfinity;
  for (std::size_t i = 0; i < inst.tasks.size(); ++i) {
    const Task& t = inst.tasks[i];
    jobs.push_back({t.release, t.deadline, t.length, i});
    origin = std::min(origin, t.release);
  }
  if (jobs.empty()) return true;
  std::vector<std::size_t> by_release(jobs.size());
  std::iota(by_release.begin(), by_release.end(), std::size_t{0});
  std::stable_sort(by_release.begin(), by_release.end(),
                   [&](std::size_t a, std::size_t b) {
                     return jobs[a].release < jobs[b].release;
                   });
  return edf_relaxation(jobs, by_release, origin, [](std::size_t) { return true; }) ==
         kInfinity;
}

SolveResult edd_unit_schedule(const Instance& inst) {
  require_valid(inst);
  for (const Task& t : inst.tasks) {
    if (t.length != 1) {
      throw InvalidInput("edd_unit_schedule needs unit lengths; task " + t.id +
                         " has length " + std::to_string(t.length));
    }
  }
  const auto begin = std::chrono::steady_clock::now();
  std::vector<std::size_t> order(inst.tasks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.tasks[a].release < inst.tasks[b].release;
  });

  auto later = [&](std::size_t a, std::size_t b) {
    const Task& x = inst.tasks[a];
    const Task& y = inst.tasks[b];
    if (x.deadline != y.deadline) return x.deadline > y.deadline;
    return x.id > y.id;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)>
      ready(later);

  SolveResult result;
  Schedule sch;
  bool ok = true;
  std::size_t next = 0;
  Time now = order.empty() ? 0 : inst.tasks[order.front()].release;
  while (next < order.size() || !ready.empty()) {
    if (ready.empty()) now = std::max(now, inst.tasks[order[next]].release);
    while (next < order.size() && inst.tasks[order[next]].release <= now) {
      ready.push(order[next++]);
    }
    const Task& t = inst.tasks[ready.top()];
    ready.pop();
    ++result.stats.nodes;
    if (now + 1 > t.deadline) {
      ok = false;
      break;
    }
    sch.starts[t.id] = now;
    ++now;
  }
  result.stats.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - begin)
                            .count();
  if (ok) {
    result.verdict = Verdict::kFeasible;
    result.witness = std::move(sch);
  } else {
    result.verdict = Verdict::kInfeasible;
  }
  return result;
}

namespace {

bool enumerate_starts(const Instance& inst, std::size_t index,
                      std::vector<Time>& starts) {
  if (index == inst.tasks.size()) {
    Schedule sch;
    for (std::size_t i = 0; i < starts.size(); ++i) {
      sch.starts[inst.tasks[i].id] = starts[i];
    }
    return verify_schedule(inst, sch).empty();
  }
  const Task& t = inst.tasks[index];
  for (Time s = t.release; s <= t.latest_start(); ++s) {
    // A partial assignment that already overlaps cannot be completed; cutting
    // it here changes nothing about which full assignments are accepted.
    bool clash = false;
    for (std::size_t i = 0; i < index && !clash; ++i) {
      const Time other = starts[i];
      clash = s < other + inst.tasks[i].length && other < s + t.length;
    }
    if (clash) continue;
    starts.push_back(s);
    if (enumerate_starts(inst, index + 1, starts)) return true;
    starts.pop_back();
  }
  return false;
}

}  // namespace

bool exhaustive_oracle(const Instance& inst, const OracleGuard& guard) {
  require_valid(inst);
  if (inst.tasks.size() > guard.max_tasks) {
    throw Refused("exhaustive_oracle: " + std::to_string(inst.tasks.size()) +
                  " tasks exceed the guard of " + std::to_string(guard.max_tasks));
  }
  for (const Task& t : inst.tasks) {
    if (t.latest_start() - t.release + 1 > guard.max_window) {
      throw Refused("exhaustive_oracle: task " + t.id +
                    " has too many candidate starts");
    }
  }
  std::vector<Time> starts;
  starts.reserve(inst.tasks.size());
  return enumerate_starts(inst, 0, starts);
}

}  // namespace twolen
