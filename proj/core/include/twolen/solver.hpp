#ifndef TWOLEN_SOLVER_HPP_
#define TWOLEN_SOLVER_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "twolen/schedule.hpp"

namespace twolen {

enum class Verdict { kFeasible, kInfeasible, kBudgetExhausted };

std::string to_string(Verdict v);

// Limits for one search. Unset fields mean unlimited.
struct SolveBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::int64_t millis = 0;
};

struct SolveResult {
  Verdict verdict = Verdict::kInfeasible;
  std::optional<Schedule> witness;  // present iff verdict is kFeasible
  SolveStats stats;

  bool feasible() const { return verdict == Verdict::kFeasible; }
};

// Exact feasibility test by chronological branch and bound over integer start
// times. Never reports kInfeasible when the budget runs out. Throws
// InvalidInput if validate_instance fails.
//
// The search keeps the time at which the machine becomes free and branches
// on which unscheduled task runs next, at its earliest start. Only tasks that
// could start before every other task could finish are branched on, which
// keeps the search complete while ruling out needless idle time. Pruning:
//  * a task that can no longer meet its deadline,
//  * the preemptive EDF relaxation of the remaining tasks,
//  * a same-length candidate is skipped when an unscheduled job of that
//    length with an earlier position in the order is already released,
//  * a failure memo. Each refutation is tagged with the latest deadline it
//    depends on, and is stored against the unscheduled jobs due by that
//    deadline only, so it also fires for states that differ in later jobs.
// Candidates are tried by deadline, then longer length, then id, so the
// witness is reproducible.
SolveResult solve_decision(const Instance& inst, const SolveBudget& budget = {});

// Preemptive earliest-deadline-first simulation. false proves the
// non-preemptive instance infeasible; true is inconclusive.
bool preemptive_edf_feasible(const Instance& inst);

// Greedy earliest-due-date for unit-length tasks: at each integer time run the
// released task with the smallest deadline (ties by id). Exact for unit
// lengths. Throws InvalidInput if any length differs from 1.
SolveResult edd_unit_schedule(const Instance& inst);

struct OracleGuard {
  std::size_t max_tasks = 12;
  // Refuse when some task has more than this many candidate start times.
  Time max_window = 64;
};

// Enumerates integer start assignments within the windows and accepts the
// first that passes verify_schedule. Throws Refused beyond the guard.
bool exhaustive_oracle(const Instance& inst, const OracleGuard& guard = {});

}  // namespace twolen

#endif  // TWOLEN_SOLVER_HPP_
