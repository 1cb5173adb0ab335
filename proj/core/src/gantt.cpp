#include "twolen/gantt.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "twolen/errors.hpp"

namespace twolen {

namespace {

constexpr Time kMaxAsciiColumns = 160;

struct Row {
  const Task* task;
  Time start;
  bool is_long;
};

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render_ascii(const std::vector<Row>& rows, Time lo, Time hi) {
  std::ostringstream out;
  std::size_t label = 4;
  for (const Row& r : rows) label = std::max(label, r.task->id.size());
  const Time span = std::max<Time>(hi - lo, 1);
  const Time scale = (span + kMaxAsciiColumns - 1) / kMaxAsciiColumns;
  const Time columns = (span + scale - 1) / scale;

  out << "time" << std::string(label - 4 + 1, ' ') << "[" << lo << ", " << hi << ")";
  if (scale > 1) out << "  one column = " << scale << " units";
  out << "\n";
  for (const Row& r : rows) {
    const Task& t = *r.task;
    std::string line(static_cast<std::size_t>(columns), ' ');
    for (Time c = 0; c < columns; ++c) {
      const Time a = lo + c * scale;
      const Time b = a + scale;
      char ch = ' ';
      if (a < t.deadline && t.release < b) ch = '-';
      if (a < r.start + t.length && r.start < b) ch = r.is_long ? '#' : '=';
      line[static_cast<std::size_t>(c)] = ch;
    }
    out << t.id << std::string(label - t.id.size() + 1, ' ') << "|" << line << "|  ["
        << r.start << "," << r.start + t.length << ") in [" << t.release << ","
        << t.deadline << "]\n";
  }
  return out.str();
}

std::string render_svg(const std::vector<Row>& rows, Time lo, Time hi) {
  constexpr int kUnit = 12;
  constexpr int kRow = 20;
  constexpr int kLabel = 110;
  constexpr int kTop = 30;
  const Time span = std::max<Time>(hi - lo, 1);
  const long width = kLabel + span * kUnit + 20;
  const long height = kTop + static_cast<long>(rows.size()) * kRow + 20;
  auto x_of = [&](Time t) { return kLabel + (t - lo) * kUnit; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
      << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  const Time step = span <= 40 ? 5 : span <= 200 ? 10 : 50;
  Time first = lo - ((lo % step) + step) % step;
  for (Time t = first; t <= hi; t += step) {
    if (t < lo) continue;
    out << "<line x1=\"" << x_of(t) << "\" y1=\"" << kTop - 8 << "\" x2=\"" << x_of(t)
        << "\" y2=\"" << height - 10 << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << x_of(t) << "\" y=\"" << kTop - 12
        << "\" font-size=\"10\" text-anchor=\"middle\">" << t << "</text>\n";
  }

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Task& t = *rows[i].task;
    const long y = kTop + static_cast<long>(i) * kRow;
    const char* colour = rows[i].is_long ? "#d62728" : "#1f77b4";
    out << "<text x=\"4\" y=\"" << y + 14 << "\" font-size=\"11\">" << xml_escape(t.id)
        << "</text>\n"
        << "<line x1=\"" << x_of(t.release) << "\" y1=\"" << y + 10 << "\" x2=\""
        << x_of(t.deadline) << "\" y2=\"" << y + 10
        << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n"
        << "<rect x=\"" << x_of(rows[i].start) << "\" y=\"" << y + 4 << "\" width=\""
        << t.length * kUnit << "\" height=\"12\" fill=\"" << colour << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_gantt(const Instance& inst, const Schedule& sch, GanttFormat format) {
  Violations vs = verify_schedule(inst, sch);
  if (!vs.empty()) throw InvalidInput("cannot draw an infeasible schedule:\n" + to_string(vs), vs);

  const std::set<Time> lengths = inst.lengths();
  const Time longest = lengths.empty() ? 0 : *lengths.rbegin();
  const bool distinguish = lengths.size() > 1;

  std::vector<Row> rows;
  Time lo = 0;
  Time hi = 0;
  for (const Task& t : inst.tasks) {
    rows.push_back({&t, sch.starts.at(t.id), distinguish && t.length == longest});
    lo = rows.size() == 1 ? t.release : std::min(lo, t.release);
    hi = rows.size() == 1 ? t.deadline : std::max(hi, t.deadline);
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.task->id < b.task->id;
  });
  return format == GanttFormat::kAscii ? render_ascii(rows, lo, hi)
                                       : render_svg(rows, lo, hi);
}

}  // namespace twolen
