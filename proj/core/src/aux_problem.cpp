#include "twolen/aux_problem.hpp"

#include <unordered_set>

#include "twolen/errors.hpp"

namespace twolen {

std::string pending_id(JobLength length, std::size_t index) {
  return std::string(length == JobLength::kLong ? "pending_p_" : "pending_q_") +
         std::to_string(index);
}

namespace {

std::string at(const char* seq, std::size_t i) {
  return std::string(seq) + "[" + std::to_string(i + 1) + "]";
}

void check_chain(const std::vector<PendingDeadlines>& seq, const char* name,
                 Time length, Violations& out) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const PendingDeadlines& d = seq[i];
    if (d.early > d.late) {
      out.push_back({at(name, i), "early after late",
                     std::to_string(d.early) + " > " + std::to_string(d.late)});
    }
    if (d.early < 0) {
      out.push_back({at(name, i), "negative early deadline",
                     std::to_string(d.early) + " < 0"});
    }
    if (d.late < length) {
      out.push_back({at(name, i), "window too small",
                     "late deadline " + std::to_string(d.late) + " < length " +
                         std::to_string(length)});
    }
    if (i > 0 && seq[i - 1].late > d.early) {
      out.push_back({at(name, i), "chain out of order",
                     "previous late " + std::to_string(seq[i - 1].late) +
                         " > early " + std::to_string(d.early)});
    }
    if (d.late > kMaxTimeMagnitude || d.early < -kMaxTimeMagnitude) {
      out.push_back({at(name, i), "time out of range", "times must lie within +-2^60"});
    }
  }
}

void require_valid(const AuxInstance& aux) {
  Violations vs = validate_aux(aux);
  if (!vs.empty()) throw InvalidInput("invalid AUX instance:\n" + to_string(vs), vs);
}

}  // namespace

Violations validate_aux(const AuxInstance& aux) {
  Violations out;
  if (aux.q < 1) {
    out.push_back({"q", "short length below 1", "q = " + std::to_string(aux.q)});
  }
  if (aux.p <= aux.q) {
    out.push_back({"p", "long not longer than short",
                   std::to_string(aux.p) + " <= " + std::to_string(aux.q)});
  }
  if (aux.p > kMaxTimeMagnitude) {
    out.push_back({"p", "time out of range", "times must lie within +-2^60"});
  }

  Instance ordinary{aux.ordinary};
  for (Violation& v : validate_instance(ordinary)) out.push_back(std::move(v));

  std::unordered_set<std::string> reserved;
  for (std::size_t i = 1; i <= aux.pairs(); ++i) {
    reserved.insert(pending_id(JobLength::kLong, i));
    reserved.insert(pending_id(JobLength::kShort, i));
  }
  for (const Task& t : aux.ordinary) {
    if (t.length != aux.p && t.length != aux.q) {
      out.push_back({t.id, "length not in {p,q}", std::to_string(t.length)});
    }
    if (t.release < 0) {
      out.push_back({t.id, "negative release", std::to_string(t.release)});
    }
    if (reserved.contains(t.id)) {
      out.push_back({t.id, "reserved id", "clashes with a pending job id"});
    }
  }

  if (aux.long_pending.size() != aux.short_pending.size()) {
    out.push_back({"pending", "sequence sizes differ",
                   std::to_string(aux.long_pending.size()) + " long vs " +
                       std::to_string(aux.short_pending.size()) + " short"});
    return out;
  }
  check_chain(aux.long_pending, "long_pending", aux.p, out);
  check_chain(aux.short_pending, "short_pending", aux.q, out);
  for (std::size_t i = 0; i < aux.pairs(); ++i) {
    const Time late_p = aux.long_pending[i].late;
    const Time early_q = aux.short_pending[i].early;
    if (late_p > early_q) {
      out.push_back({"pair[" + std::to_string(i + 1) + "]",
                     "long not more urgent than short",
                     "late_p " + std::to_string(late_p) + " > early_q " +
                         std::to_string(early_q)});
    }
  }
  return out;
}

Instance expand_aux(const AuxInstance& aux) {
  Instance inst{aux.ordinary};
  for (std::size_t i = 0; i < aux.pairs(); ++i) {
    inst.tasks.push_back(
        {pending_id(JobLength::kLong, i + 1), 0, aux.long_pending[i].late, aux.p});
  }
  for (std::size_t i = 0; i < aux.pairs(); ++i) {
    inst.tasks.push_back(
        {pending_id(JobLength::kShort, i + 1), 0, aux.short_pending[i].late, aux.q});
  }
  return inst;
}

Violations verify_aux_schedule(const AuxInstance& aux, const AuxSchedule& sch) {
  Violations out = verify_schedule(expand_aux(aux), sch);
  for (std::size_t i = 0; i < aux.pairs(); ++i) {
    const std::string long_id = pending_id(JobLength::kLong, i + 1);
    const std::string short_id = pending_id(JobLength::kShort, i + 1);
    auto lit = sch.starts.find(long_id);
    auto sit = sch.starts.find(short_id);
    if (lit == sch.starts.end() || sit == sch.starts.end()) continue;  // reported above
    const bool long_early = lit->second + aux.p <= aux.long_pending[i].early;
    const bool short_early = sit->second + aux.q <= aux.short_pending[i].early;
    if (!long_early && !short_early) {
      out.push_back({"pair[" + std::to_string(i + 1) + "]", "no early completion",
                     long_id + " completes " + std::to_string(lit->second + aux.p) +
                         " > " + std::to_string(aux.long_pending[i].early) + " and " +
                         short_id + " completes " +
                         std::to_string(sit->second + aux.q) + " > " +
                         std::to_string(aux.short_pending[i].early)});
    }
  }
  return out;
}

AuxOracleResult aux_oracle(const AuxInstance& aux, const AuxOracleOptions& options) {
  require_valid(aux);
  const std::size_t n = aux.pairs();
  if (n > options.max_pairs) {
    throw Refused("aux_oracle: " + std::to_string(n) +
                  " pending pairs exceed the guard of " +
                  std::to_string(options.max_pairs));
  }

  const Instance base = expand_aux(aux);
  const std::size_t ordinary = aux.ordinary.size();
  AuxOracleResult result;
  bool exhausted = false;

  // Bit i of `mask` set: the short job of pair i meets its early deadline;
  // clear: the long one does.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Instance tightened = base;
    bool hopeless = false;
    for (std::size_t i = 0; i < n && !hopeless; ++i) {
      const bool short_early = (mask >> i) & 1U;
      Task& t = short_early ? tightened.tasks[ordinary + n + i]
                            : tightened.tasks[ordinary + i];
      t.deadline = short_early ? aux.short_pending[i].early : aux.long_pending[i].early;
      hopeless = t.deadline < t.length;
    }
    if (hopeless) continue;

    ++result.choices_tried;
    SolveResult r = solve_decision(tightened, options.budget_per_solve);
    result.nodes += r.stats.nodes;
    if (r.verdict == Verdict::kFeasible) {
      result.verdict = Verdict::kFeasible;
      result.witness = std::move(r.witness);
      return result;
    }
    if (r.verdict == Verdict::kBudgetExhausted) exhausted = true;
  }
  result.verdict = exhausted ? Verdict::kBudgetExhausted : Verdict::kInfeasible;
  return result;
}

}  // namespace twolen
