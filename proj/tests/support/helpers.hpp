#ifndef TWOLEN_TESTS_HELPERS_HPP_
#define TWOLEN_TESTS_HELPERS_HPP_

#include <algorithm>
#include <string>

#include "twolen/schedule.hpp"

namespace twolen::testing {

inline bool has_rule(const Violations& vs, const std::string& rule) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.rule == rule; });
}

inline bool has_violation(const Violations& vs, const std::string& subject,
                          const std::string& rule) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) {
    return v.subject == subject && v.rule == rule;
  });
}

inline Task task(std::string id, Time release, Time deadline, Time length) {
  return Task{std::move(id), release, deadline, length};
}

}  // namespace twolen::testing

#endif  // TWOLEN_TESTS_HELPERS_HPP_
