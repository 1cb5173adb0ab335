#ifndef TWOLEN_GANTT_HPP_
#define TWOLEN_GANTT_HPP_

#include <string>

#include "twolen/schedule.hpp"

namespace twolen {

enum class GanttFormat { kAscii, kSvg };

// One row per task ordered by start (then id) showing the availability
// window and the execution interval. Jobs of the largest length are drawn
// as long jobs ('#', red), all others as short ('=', blue). Throws
// InvalidInput when the schedule does not verify.
std::string render_gantt(const Instance& inst, const Schedule& sch, GanttFormat format);

}  // namespace twolen

#endif  // TWOLEN_GANTT_HPP_
