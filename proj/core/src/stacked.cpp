#include "twolen/stacked.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "twolen/errors.hpp"

namespace twolen {

std::string stack_id(const StackLabel& label) {
  const std::string idx = std::to_string(label.index);
  const char* len = label.length == JobLength::kLong ? "p_" : "q_";
  switch (label.role) {
    case StackRole::kSeparator:
      return "sep_" + idx;
    case StackRole::kInner:
      return "inner_" + (len + idx);
    case StackRole::kOuter:
      return "outer_" + (len + idx);
  }
  return {};
}

std::optional<StackLabel> parse_stack_id(const std::string& id) {
  auto parse_index = [](std::string_view digits) -> std::optional<std::size_t> {
    std::size_t v = 0;
    if (digits.empty() || digits.front() == '0') return std::nullopt;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
    return v;
  };
  std::string_view s = id;
  StackLabel label;
  if (s.starts_with("sep_")) {
    auto idx = parse_index(s.substr(4));
    if (!idx) return std::nullopt;
    label.index = *idx;
    return label;
  }
  if (s.starts_with("inner_")) {
    label.role = StackRole::kInner;
    s.remove_prefix(6);
  } else if (s.starts_with("outer_")) {
    label.role = StackRole::kOuter;
    s.remove_prefix(6);
  } else {
    return std::nullopt;
  }
  if (s.starts_with("p_")) {
    label.length = JobLength::kLong;
  } else if (s.starts_with("q_")) {
    label.length = JobLength::kShort;
  } else {
    return std::nullopt;
  }
  auto idx = parse_index(s.substr(2));
  if (!idx) return std::nullopt;
  label.index = *idx;
  return label;
}

Time StackedLayout::anchor(std::size_t i) const {
  return -(p + 2 * q) * static_cast<Time>(i) + p + q;
}

namespace {

StackedLayout layout_of(const AuxInstance& aux) {
  return {aux.p, aux.q, aux.pairs()};
}

const PendingDeadlines& deadlines(const AuxInstance& aux, JobLength l, std::size_t i) {
  return l == JobLength::kLong ? aux.long_pending[i - 1] : aux.short_pending[i - 1];
}

constexpr JobLength kLengths[] = {JobLength::kLong, JobLength::kShort};

}  // namespace

StackedInstance reduce_aux_to_instance(const AuxInstance& aux) {
  Violations vs = validate_aux(aux);
  if (!vs.empty()) throw InvalidInput("invalid AUX instance:\n" + to_string(vs), vs);
  for (const Task& t : aux.ordinary) {
    if (parse_stack_id(t.id)) {
      throw InvalidInput("ordinary id " + t.id + " clashes with a stack label");
    }
  }

  StackedInstance out;
  out.layout = layout_of(aux);
  const StackedLayout& lay = out.layout;
  out.instance.tasks = aux.ordinary;
  for (std::size_t i = 1; i <= lay.pairs; ++i) {
    const Time t = lay.anchor(i);
    out.instance.tasks.push_back(
        {stack_id({StackRole::kSeparator, JobLength::kShort, i}), t, t + lay.q, lay.q});
    for (JobLength l : kLengths) {
      const Time len = lay.length_of(l);
      const PendingDeadlines& d = deadlines(aux, l, i);
      out.instance.tasks.push_back(
          {stack_id({StackRole::kInner, l, i}), t - len, d.early, len});
      out.instance.tasks.push_back(
          {stack_id({StackRole::kOuter, l, i}), lay.bin_start(i), d.late, len});
    }
  }
  return out;
}

Schedule embed_aux_schedule(const AuxInstance& aux, const AuxSchedule& aux_sch) {
  Violations vs = verify_aux_schedule(aux, aux_sch);
  if (!vs.empty()) {
    throw InvalidInput("embed_aux_schedule needs a valid AUX schedule:\n" + to_string(vs),
                       vs);
  }
  const StackedLayout lay = layout_of(aux);
  Schedule out;
  for (const Task& t : aux.ordinary) out.starts[t.id] = aux_sch.starts.at(t.id);

  for (std::size_t i = 1; i <= lay.pairs; ++i) {
    const Time t = lay.anchor(i);
    out.starts[stack_id({StackRole::kSeparator, JobLength::kShort, i})] = t;

    // Leftovers go to bin i, outer jobs first; long before short on ties.
    std::vector<StackLabel> leftovers;
    for (JobLength l : kLengths) {
      const Time start = aux_sch.starts.at(pending_id(l, i));
      const bool early = start + lay.length_of(l) <= deadlines(aux, l, i).early;
      out.starts[stack_id({early ? StackRole::kInner : StackRole::kOuter, l, i})] = start;
      leftovers.push_back({early ? StackRole::kOuter : StackRole::kInner, l, i});
    }
    std::stable_sort(leftovers.begin(), leftovers.end(),
                     [](const StackLabel& a, const StackLabel& b) {
                       return a.role == StackRole::kOuter && b.role != StackRole::kOuter;
                     });
    Time cursor = lay.bin_start(i);
    for (const StackLabel& label : leftovers) {
      out.starts[stack_id(label)] = cursor;
      cursor += lay.length_of(label.length);
    }
  }
  return out;
}

namespace {

// Mutable view of a stacked schedule, keyed by stack labels.
class BinState {
 public:
  BinState(const StackedInstance& stacked, const Schedule& sch)
      : lay_(stacked.layout), sch_(sch) {}

  Time& start(JobLength l, StackRole role, std::size_t i) {
    return sch_.starts.at(stack_id({role, l, i}));
  }

  // Stack jobs currently inside bin i, by start time.
  std::vector<StackLabel> contents(std::size_t bin) const {
    std::vector<std::pair<Time, StackLabel>> found;
    const Time lo = lay_.bin_start(bin);
    const Time hi = lay_.bin_end(bin);
    for (std::size_t i = bin; i <= lay_.pairs; ++i) {
      for (JobLength l : kLengths) {
        for (StackRole role : {StackRole::kInner, StackRole::kOuter}) {
          const Time s = sch_.starts.at(stack_id({role, l, i}));
          if (s >= lo && s < hi) found.push_back({s, {role, l, i}});
        }
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<StackLabel> out;
    for (auto& f : found) out.push_back(f.second);
    return out;
  }

  Time& at(const StackLabel& label) { return sch_.starts.at(stack_id(label)); }

  const Schedule& schedule() const { return sch_; }

 private:
  const StackedLayout& lay_;
  Schedule sch_;
};

bool has_length(const std::vector<StackLabel>& bin, JobLength l) {
  return std::any_of(bin.begin(), bin.end(),
                     [l](const StackLabel& s) { return s.length == l; });
}

// Puts the outer job (l, i) at the left end of bin i. Its old slot after 0
// receives whatever no longer fits in the bin, left-justified in the old
// order.
void swap_in(BinState& state, const StackedLayout& lay, JobLength l, std::size_t i) {
  const StackLabel newcomer{StackRole::kOuter, l, i};
  const Time vacated = state.at(newcomer);
  if (vacated < 0) {
    throw InternalError("swap-in: " + stack_id(newcomer) +
                        " expected after 0, found at " + std::to_string(vacated));
  }
  const std::vector<StackLabel> before = state.contents(i);
  Time cursor = lay.bin_start(i);
  state.at(newcomer) = cursor;
  cursor += lay.length_of(l);

  Time spill = vacated;
  const Time spill_end = vacated + lay.length_of(l);
  for (const StackLabel& s : before) {
    const Time len = lay.length_of(s.length);
    if (cursor + len <= lay.bin_end(i)) {
      state.at(s) = cursor;
      cursor += len;
    } else {
      if (spill + len > spill_end) {
        throw InternalError("swap-in: displaced jobs do not fit the vacated slot");
      }
      state.at(s) = spill;
      spill += len;
    }
  }
}

}  // namespace

Schedule normalize_bins(const StackedInstance& stacked, const Schedule& sch) {
  Violations vs = verify_schedule(stacked.instance, sch);
  if (!vs.empty()) {
    throw InvalidInput("normalize_bins needs a feasible schedule:\n" + to_string(vs), vs);
  }
  const StackedLayout& lay = stacked.layout;
  BinState state(stacked, sch);

  for (std::size_t i = 1; i <= lay.pairs; ++i) {
    if (!has_length(state.contents(i), JobLength::kLong)) {
      swap_in(state, lay, JobLength::kLong, i);
    }
    if (!has_length(state.contents(i), JobLength::kShort)) {
      swap_in(state, lay, JobLength::kShort, i);
    }

    const std::vector<StackLabel> bin = state.contents(i);
    if (bin.size() != 2 || bin[0].length == bin[1].length) {
      throw InternalError("bin " + std::to_string(i) +
                          " does not hold one long and one short job");
    }
    // Nested windows per length: the outer job of index i fits wherever the
    // left job sits, and the left job fits the outer job's old slot; the same
    // holds for the inner job on the right.
    const StackLabel want_left{StackRole::kOuter, bin[0].length, i};
    if (!(bin[0] == want_left)) std::swap(state.at(bin[0]), state.at(want_left));
    const StackLabel want_right{StackRole::kInner, bin[1].length, i};
    if (!(bin[1] == want_right)) std::swap(state.at(bin[1]), state.at(want_right));
  }

  Violations after = verify_schedule(stacked.instance, state.schedule());
  if (!after.empty()) {
    throw InternalError("normalize_bins produced an infeasible schedule:\n" +
                        to_string(after));
  }
  return state.schedule();
}

AuxSchedule extract_aux_schedule(const AuxInstance& aux, const StackedInstance& stacked,
                                 const Schedule& sch) {
  const StackedLayout& lay = stacked.layout;
  if (lay.pairs != aux.pairs() || lay.p != aux.p || lay.q != aux.q) {
    throw InvalidInput("stacked instance does not belong to this AUX instance");
  }
  auto start_of = [&](const StackLabel& label) -> Time {
    auto it = sch.starts.find(stack_id(label));
    if (it == sch.starts.end()) {
      throw InvalidInput("schedule lacks " + stack_id(label));
    }
    return it->second;
  };

  AuxSchedule out;
  for (const Task& t : aux.ordinary) {
    auto it = sch.starts.find(t.id);
    if (it == sch.starts.end()) throw InvalidInput("schedule lacks " + t.id);
    out.starts[t.id] = it->second;
  }
  for (std::size_t i = 1; i <= lay.pairs; ++i) {
    int outer_in_bin = 0;
    for (JobLength l : kLengths) {
      const Time inner = start_of({StackRole::kInner, l, i});
      const Time outer = start_of({StackRole::kOuter, l, i});
      const bool outer_left = outer == lay.bin_start(i);
      const bool inner_right = inner == lay.bin_end(i) - lay.length_of(l);
      if (outer_left && inner >= 0) {
        ++outer_in_bin;
        out.starts[pending_id(l, i)] = inner;
      } else if (inner_right && outer >= 0) {
        out.starts[pending_id(l, i)] = outer;
      } else {
        throw InvalidInput("bin " + std::to_string(i) + " is not in normal form for " +
                           (l == JobLength::kLong ? "long" : "short") + " jobs");
      }
    }
    if (outer_in_bin != 1) {
      throw InvalidInput("bin " + std::to_string(i) +
                         " must hold exactly one outer and one inner job");
    }
  }

  Violations vs = verify_aux_schedule(aux, out);
  if (!vs.empty()) {
    throw InternalError("extracted AUX schedule fails verification:\n" + to_string(vs));
  }
  return out;
}

}  // namespace twolen
