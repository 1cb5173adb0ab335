#ifndef TWOLEN_STACKED_HPP_
#define TWOLEN_STACKED_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "twolen/aux_problem.hpp"
#include "twolen/schedule.hpp"

namespace twolen {

// Reduction of an AUX instance to a plain instance. Every pending job is
// replaced by an inner job (early deadline) and an outer job (late
// deadline) whose windows reach back before t = 0. Separator jobs of length
// q pinned at [t_i, t_i + q] cut the time before 0 into N bins of length
// p + q, bin 1 ending closest to 0.

enum class StackRole { kSeparator, kInner, kOuter };

struct StackLabel {
  StackRole role = StackRole::kSeparator;
  JobLength length = JobLength::kShort;  // kShort for separators
  std::size_t index = 0;                 // 1-based

  friend bool operator==(const StackLabel&, const StackLabel&) = default;
};

// "sep_<i>", "inner_p_<i>", "outer_q_<i>", ...
std::string stack_id(const StackLabel& label);
std::optional<StackLabel> parse_stack_id(const std::string& id);

struct StackedLayout {
  Time p = 2;
  Time q = 1;
  std::size_t pairs = 0;

  // t_i = -(p + 2q) i + p + q; separator i occupies [t_i, t_i + q].
  Time anchor(std::size_t i) const;
  Time bin_start(std::size_t i) const { return anchor(i) - p - q; }
  Time bin_end(std::size_t i) const { return anchor(i); }
  Time length_of(JobLength l) const { return l == JobLength::kLong ? p : q; }
};

struct StackedInstance {
  Instance instance;
  StackedLayout layout;
};

// Builds J + separators + inner/outer jobs per length and index; exactly
// |J| + 5N tasks. Throws InvalidInput when validate_aux fails or an ordinary
// id looks like a stack label.
StackedInstance reduce_aux_to_instance(const AuxInstance& aux);

// Forward mapping of a valid AUX schedule: ordinary jobs stay put; pending
// job (l, i) becomes inner (l, i) if it met its early deadline, else outer
// (l, i); the two leftovers of index i fill bin i, an outer job first.
// Throws InvalidInput unless verify_aux_schedule(aux, aux_sch) is empty.
Schedule embed_aux_schedule(const AuxInstance& aux, const AuxSchedule& aux_sch);

// Exchange procedure over bins 1..N: makes bin i hold exactly one long and
// one short stack job of index i, the earlier an outer job and the later an
// inner job. Throws InvalidInput unless `sch` is feasible for `stacked`.
Schedule normalize_bins(const StackedInstance& stacked, const Schedule& sch);

// Reads the AUX schedule off a normalized schedule: each pending job takes
// the start of whichever of its inner/outer jobs runs after 0. Throws
// InvalidInput when `sch` is not in normal form.
AuxSchedule extract_aux_schedule(const AuxInstance& aux,
                                 const StackedInstance& stacked,
                                 const Schedule& sch);

}  // namespace twolen

#endif  // TWOLEN_STACKED_HPP_
