#include "twolen/json_io.hpp"

#include <limits>

#include "twolen/errors.hpp"

namespace twolen {

using nlohmann::json;

namespace {

int line_of(std::string_view text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object", 0, path);
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(path + ": missing field \"" + key + "\"", 0, path + "." + key);
  }
  return *it;
}

const json& array_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_array()) {
    throw ParseError(path + "." + key + ": expected an array", 0, path + "." + key);
  }
  return v;
}

Task task_from(const json& j, const std::string& path) {
  Task t;
  const json& id = field(j, "id", path);
  if (!id.is_string()) throw ParseError(path + ".id: expected a string", 0, path + ".id");
  t.id = id.get<std::string>();
  t.release = read_time(field(j, "release", path), path + ".release");
  t.deadline = read_time(field(j, "deadline", path), path + ".deadline");
  t.length = read_time(field(j, "length", path), path + ".length");
  return t;
}

std::vector<PendingDeadlines> pending_from(const json& arr, const std::string& path) {
  std::vector<PendingDeadlines> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    out.push_back({read_time(field(arr[i], "early", p), p + ".early"),
                   read_time(field(arr[i], "late", p), p + ".late")});
  }
  return out;
}

json pending_to(const std::vector<PendingDeadlines>& seq) {
  json arr = json::array();
  for (const PendingDeadlines& d : seq) arr.push_back({{"early", d.early}, {"late", d.late}});
  return arr;
}

}  // namespace

Time read_time(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<Time>::max())) {
      throw ParseError(path + ": integer overflows 64 bits", 0, path);
    }
    return static_cast<Time>(v);
  }
  if (j.is_number_integer()) return j.get<Time>();
  if (j.is_number_float()) {
    // nlohmann falls back to double for integers wider than 64 bits.
    throw ParseError(path + ": not a 64-bit integer", 0, path);
  }
  throw ParseError(path + ": expected an integer", 0, path);
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const int line = line_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ": " + e.what(), line);
  }
}

json to_json_value(const Task& t) {
  return {{"id", t.id}, {"release", t.release}, {"deadline", t.deadline},
          {"length", t.length}};
}

json to_json_value(const Instance& inst) {
  json tasks = json::array();
  for (const Task& t : inst.tasks) tasks.push_back(to_json_value(t));
  return {{"tasks", tasks}};
}

json to_json_value(const Schedule& sch) {
  json starts = json::object();
  for (const auto& [id, s] : sch.starts) starts[id] = s;
  return {{"starts", starts}};
}

json to_json_value(const AuxInstance& aux) {
  json ordinary = json::array();
  for (const Task& t : aux.ordinary) ordinary.push_back(to_json_value(t));
  return {{"p", aux.p},
          {"q", aux.q},
          {"ordinary", ordinary},
          {"long_pending", pending_to(aux.long_pending)},
          {"short_pending", pending_to(aux.short_pending)}};
}

Instance instance_from_json_value(const json& j) {
  Instance inst;
  const json& tasks = array_field(j, "tasks", "$");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    inst.tasks.push_back(task_from(tasks[i], "$.tasks[" + std::to_string(i) + "]"));
  }
  Violations vs = validate_instance(inst);
  if (!vs.empty()) throw InvalidInput("invalid instance:\n" + to_string(vs), vs);
  return inst;
}

Schedule schedule_from_json_value(const json& j) {
  const json& starts = field(j, "starts", "$");
  if (!starts.is_object()) {
    throw ParseError("$.starts: expected an object", 0, "$.starts");
  }
  Schedule sch;
  for (const auto& [id, v] : starts.items()) {
    sch.starts[id] = read_time(v, "$.starts." + id);
  }
  return sch;
}

AuxInstance aux_from_json_value(const json& j) {
  AuxInstance aux;
  aux.p = read_time(field(j, "p", "$"), "$.p");
  aux.q = read_time(field(j, "q", "$"), "$.q");
  const json& ordinary = array_field(j, "ordinary", "$");
  for (std::size_t i = 0; i < ordinary.size(); ++i) {
    aux.ordinary.push_back(
        task_from(ordinary[i], "$.ordinary[" + std::to_string(i) + "]"));
  }
  aux.long_pending = pending_from(array_field(j, "long_pending", "$"), "$.long_pending");
  aux.short_pending =
      pending_from(array_field(j, "short_pending", "$"), "$.short_pending");
  Violations vs = validate_aux(aux);
  if (!vs.empty()) throw InvalidInput("invalid AUX instance:\n" + to_string(vs), vs);
  return aux;
}

std::string instance_to_json(const Instance& inst) {
  return to_json_value(inst).dump(2) + "\n";
}

Instance instance_from_json(std::string_view text) {
  return instance_from_json_value(parse_json_text(text));
}

std::string schedule_to_json(const Schedule& sch) {
  return to_json_value(sch).dump(2) + "\n";
}

Schedule schedule_from_json(std::string_view text) {
  return schedule_from_json_value(parse_json_text(text));
}

std::string aux_to_json(const AuxInstance& aux) { return to_json_value(aux).dump(2) + "\n"; }

AuxInstance aux_from_json(std::string_view text) {
  return aux_from_json_value(parse_json_text(text));
}

}  // namespace twolen
