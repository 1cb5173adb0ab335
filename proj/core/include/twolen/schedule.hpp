#ifndef TWOLEN_SCHEDULE_HPP_
#define TWOLEN_SCHEDULE_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace twolen {

using Time = std::int64_t;

// Largest magnitude accepted for any release, deadline or length. Keeps every
// sum formed by the solver and the reductions far away from int64 overflow.
inline constexpr Time kMaxTimeMagnitude = Time{1} << 60;

// One job: it must run for `length` consecutive units inside
// [release, deadline].
struct Task {
  std::string id;
  Time release = 0;
  Time deadline = 0;
  Time length = 1;

  Time latest_start() const { return deadline - length; }

  friend bool operator==(const Task&, const Task&) = default;
};

struct Instance {
  std::vector<Task> tasks;

  // The set of distinct task lengths.
  std::set<Time> lengths() const;
  // Index of the task with the given id, or -1.
  int find(const std::string& id) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Integer start time per task id.
struct Schedule {
  std::map<std::string, Time> starts;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct Violation {
  std::string subject;  // task id, index or field the rule applies to
  std::string rule;     // short machine-readable rule name
  std::string message;  // human-readable detail

  friend bool operator==(const Violation&, const Violation&) = default;
};

using Violations = std::vector<Violation>;

std::string to_string(const Violation& v);
std::string to_string(const Violations& vs);

// Empty result means the instance is well formed.
Violations validate_instance(const Instance& inst);

// Checks r <= t <= d - p for every task and pairwise disjointness of the
// half-open execution intervals [t, t + p). Every task of `inst` must have a
// start and `sch` must not mention unknown ids.
Violations verify_schedule(const Instance& inst, const Schedule& sch);

}  // namespace twolen

#endif  // TWOLEN_SCHEDULE_HPP_
