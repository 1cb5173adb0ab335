#ifndef TWOLEN_AUX_PROBLEM_HPP_
#define TWOLEN_AUX_PROBLEM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twolen/schedule.hpp"
#include "twolen/solver.hpp"

namespace twolen {

// Two deadlines of a pending job released at 0: early <= late.
struct PendingDeadlines {
  Time early = 0;
  Time late = 0;

  friend bool operator==(const PendingDeadlines&, const PendingDeadlines&) = default;
};

// Ordinary tasks plus N aligned pairs of pending jobs, one of length p and
// one of length q per index. A schedule is acceptable when, for every index,
// at least one of the two pending jobs meets its early deadline.
struct AuxInstance {
  Time p = 2;
  Time q = 1;
  std::vector<Task> ordinary;
  std::vector<PendingDeadlines> long_pending;
  std::vector<PendingDeadlines> short_pending;

  std::size_t pairs() const { return long_pending.size(); }

  friend bool operator==(const AuxInstance&, const AuxInstance&) = default;
};

// A schedule over ordinary ids and the pending ids from pending_id().
using AuxSchedule = Schedule;

enum class JobLength { kLong, kShort };

// "pending_p_<i>" / "pending_q_<i>", 1-based.
std::string pending_id(JobLength length, std::size_t index);

// Checks p > q >= 1, ordinary lengths in {p, q} with release >= 0, equal
// sequence sizes, the interleaved chains per length, the cross condition
// late_p[i] <= early_q[i], non-negative early deadlines and that each
// pending window admits its job.
Violations validate_aux(const AuxInstance& aux);

// Ordinary tasks followed by pending_p_i = ([0, late_p[i]], p) and
// pending_q_i = ([0, late_q[i]], q).
Instance expand_aux(const AuxInstance& aux);

// verify_schedule on the expansion plus the early-deadline disjunction per
// index.
Violations verify_aux_schedule(const AuxInstance& aux, const AuxSchedule& sch);

struct AuxOracleOptions {
  std::size_t max_pairs = 12;
  SolveBudget budget_per_solve;
};

struct AuxOracleResult {
  Verdict verdict = Verdict::kInfeasible;
  std::optional<AuxSchedule> witness;
  std::uint64_t nodes = 0;
  std::size_t choices_tried = 0;

  bool feasible() const { return verdict == Verdict::kFeasible; }
};

// For each of the 2^N ways to pick which pending job of each pair must meet
// its early deadline, tightens that job's deadline and calls solve_decision.
// Feasible iff some pick is. Throws Refused when N exceeds max_pairs and
// InvalidInput when validate_aux fails.
AuxOracleResult aux_oracle(const AuxInstance& aux,
                           const AuxOracleOptions& options = {});

}  // namespace twolen

#endif  // TWOLEN_AUX_PROBLEM_HPP_
