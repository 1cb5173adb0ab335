#include "twolen/schedule.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace twolen {

std::set<Time> Instance::lengths() const {
  std::set<Time> out;
  for (const Task& t : tasks) out.insert(t.length);
  return out;
}

int Instance::find(const std::string& id) const {
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (tasks[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

std::string to_string(const Violation& v) {
  return v.subject + ": " + v.rule + " (" + v.message + ")";
}

std::string to_string(const Violations& vs) {
  std::string out;
  for (const Violation& v : vs) {
    if (!out.empty()) out += "\n";
    out += to_string(v);
  }
  return out;
}

namespace {

bool out_of_range(Time v) {
  return v > kMaxTimeMagnitude || v < -kMaxTimeMagnitude;
}

}  // namespace

Violations validate_instance(const Instance& inst) {
  Violations out;
  std::unordered_map<std::string, int> seen;
  for (const Task& t : inst.tasks) {
    if (t.id.empty()) {
      out.push_back({"<empty>", "empty id", "task ids must be non-empty"});
    }
    if (++seen[t.id] == 2) {
      out.push_back({t.id, "duplicate id", "task id used more than once"});
    }
    if (out_of_range(t.release) || out_of_range(t.deadline) ||
        out_of_range(t.length)) {
      out.push_back({t.id, "time out of range",
                     "times must lie within +-2^60"});
      continue;
    }
    if (t.length < 1) {
      out.push_back({t.id, "non-positive length",
                     "length " + std::to_string(t.length) + " < 1"});
      continue;
    }
    if (t.release + t.length > t.deadline) {
      std::ostringstream msg;
      msg << t.release << "+" << t.length << " > " << t.deadline;
      out.push_back({t.id, "window too small", msg.str()});
    }
  }
  return out;
}

Violations verify_schedule(const Instance& inst, const Schedule& sch) {
  Violations out;
  struct Placed {
    Time start;
    Time end;
    const Task* task;
  };
  std::vector<Placed> placed;
  placed.reserve(inst.tasks.size());

  std::unordered_map<std::string, const Task*> by_id;
  for (const Task& t : inst.tasks) by_id.emplace(t.id, &t);

  for (const auto& [id, start] : sch.starts) {
    if (!by_id.contains(id)) {
      out.push_back({id, "unknown task", "schedule names a task not in the instance"});
    }
  }

  for (const Task& t : inst.tasks) {
    auto it = sch.starts.find(t.id);
    if (it == sch.starts.end()) {
      out.push_back({t.id, "missing start", "task has no start time"});
      continue;
    }
    const Time s = it->second;
    if (s < t.release) {
      out.push_back({t.id, "starts before release",
                     std::to_string(s) + " < " + std::to_string(t.release)});
    }
    if (s + t.length > t.deadline) {
      out.push_back({t.id, "completes after deadline",
                     std::to_string(s + t.length) + " > " +
                         std::to_string(t.deadline)});
    }
    placed.push_back({s, s + t.length, &t});
  }

  std::sort(placed.begin(), placed.end(), [](const Placed& a, const Placed& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.task->id < b.task->id;
  });
  // Compare each interval with the one reaching furthest right so far; that
  // catches every overlapping task at least once.
  const Placed* reach = nullptr;
  for (const Placed& cur : placed) {
    if (reach != nullptr && cur.start < reach->end) {
      std::ostringstream msg;
      msg << "[" << reach->start << "," << reach->end << ") and [" << cur.start
          << "," << cur.end << ") intersect";
      out.push_back({reach->task->id + "," + cur.task->id, "overlap", msg.str()});
    }
    if (reach == nullptr || cur.end > reach->end) reach = &cur;
  }
  return out;
}

}  // namespace twolen
