#ifndef TWOLEN_JSON_IO_HPP_
#define TWOLEN_JSON_IO_HPP_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "twolen/aux_problem.hpp"
#include "twolen/schedule.hpp"

namespace twolen {

// Text formats:
//   instance  {"tasks": [{"id": str, "release": int, "deadline": int,
//                         "length": int}, ...]}
//   schedule  {"starts": {id: int, ...}}
//   aux       {"p": int, "q": int, "ordinary": [task...],
//              "long_pending": [{"early": int, "late": int}...],
//              "short_pending": [...]}
// Integers are bounded to int64; anything wider, fractional or non-numeric
// is a ParseError naming the field. Parsed values are validated and rejected
// with InvalidInput when an invariant fails.

nlohmann::json to_json_value(const Task& t);
nlohmann::json to_json_value(const Instance& inst);
nlohmann::json to_json_value(const Schedule& sch);
nlohmann::json to_json_value(const AuxInstance& aux);

Instance instance_from_json_value(const nlohmann::json& j);
Schedule schedule_from_json_value(const nlohmann::json& j);
AuxInstance aux_from_json_value(const nlohmann::json& j);

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(std::string_view text);

std::string schedule_to_json(const Schedule& sch);
Schedule schedule_from_json(std::string_view text);

std::string aux_to_json(const AuxInstance& aux);
AuxInstance aux_from_json(std::string_view text);

// Parses `text` as JSON, converting syntax errors into ParseError with the
// 1-based line of the failure.
nlohmann::json parse_json_text(std::string_view text);

// Reads an integer field, rejecting non-integers and int64 overflow.
Time read_time(const nlohmann::json& j, const std::string& field);

}  // namespace twolen

#endif  // TWOLEN_JSON_IO_HPP_
