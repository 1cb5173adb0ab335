#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twolen/aux_problem.hpp"
#include "twolen/cnf.hpp"
#include "twolen/errors.hpp"
#include "twolen/gantt.hpp"
#include "twolen/json_io.hpp"
#include "twolen/pipeline.hpp"
#include "twolen/sat_reduction.hpp"
#include "twolen/schedule.hpp"
#include "twolen/solver.hpp"
#include "twolen/stacked.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;
constexpr int kDisagreement = 4;

// Thrown for bad files and flags that are not caught by the library.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json assignment_json(const twolen::Assignment& v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.size(); ++i) out["x" + std::to_string(i + 1)] = bool(v[i]);
  return out;
}

json violations_json(const twolen::Violations& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    out.push_back({{"subject", v.subject}, {"rule", v.rule}, {"message", v.message}});
  }
  return out;
}

struct BudgetFlags {
  std::optional<std::uint64_t> nodes;
  std::optional<std::int64_t> timeout_ms;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--nodes", nodes, "Give up after this many search nodes")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--timeout-ms", timeout_ms, "Give up after this much wall-clock time")
        ->check(CLI::PositiveNumber);
  }

  twolen::SolveBudget budget() const {
    twolen::SolveBudget b;
    b.max_nodes = nodes;
    if (timeout_ms) b.max_time = std::chrono::milliseconds(*timeout_ms);
    return b;
  }
};

int verdict_code(twolen::Verdict v) {
  switch (v) {
    case twolen::Verdict::kFeasible: return kOk;
    case twolen::Verdict::kInfeasible: return kNegative;
    case twolen::Verdict::kBudgetExhausted: return kBudget;
  }
  return kDisagreement;
}

// ---- reduce ---------------------------------------------------------------

struct ReduceArgs {
  std::string input;
  std::string output;
  std::string layout;
  std::string stage = "aux";
  twolen::Time p = 3;
  twolen::Time q = 2;
};

int run_reduce(const ReduceArgs& a) {
  const twolen::CnfFormula cnf = twolen::parse_dimacs(read_input(a.input));
  const twolen::FilledInstance fi = twolen::build_block_sequence(cnf, a.p, a.q);
  const twolen::AuxInstance aux = twolen::flatten_filled(fi);
  if (!a.layout.empty()) write_output(a.layout, dump(twolen::layout_report(fi)));
  if (a.stage == "aux") {
    write_output(a.output, twolen::aux_to_json(aux) + "\n");
  } else {
    const twolen::StackedInstance s = twolen::reduce_aux_to_instance(aux);
    write_output(a.output, twolen::instance_to_json(s.instance) + "\n");
  }
  return kOk;
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::string witness;
  bool aux = false;
  BudgetFlags budget;
};

int run_solve(const SolveArgs& a) {
  const std::string text = read_input(a.input);
  json report;
  twolen::Verdict verdict;
  std::optional<twolen::Schedule> witness;
  if (a.aux) {
    twolen::AuxOracleOptions opts;
    opts.budget_per_solve = a.budget.budget();
    const auto r = twolen::aux_oracle(twolen::aux_from_json(text), opts);
    verdict = r.verdict;
    witness = r.witness;
    report = {{"nodes", r.nodes}, {"choices_tried", r.choices_tried}};
  } else {
    const auto r = twolen::solve_decision(twolen::instance_from_json(text), a.budget.budget());
    verdict = r.verdict;
    witness = r.witness;
    report = {{"nodes", r.stats.nodes}, {"millis", r.stats.millis}};
  }
  report["verdict"] = twolen::to_string(verdict);
  if (witness) {
    report["witness"] = twolen::to_json_value(*witness);
    if (!a.witness.empty()) write_output(a.witness, twolen::schedule_to_json(*witness) + "\n");
  }
  std::cout << dump(report);
  return verdict_code(verdict);
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string instance;
  std::string schedule;
  bool aux = false;
};

int run_verify(const VerifyArgs& a) {
  const twolen::Schedule sch = twolen::schedule_from_json(read_input(a.schedule));
  const std::string text = read_input(a.instance);
  const twolen::Violations vs =
      a.aux ? twolen::verify_aux_schedule(twolen::aux_from_json(text), sch)
            : twolen::verify_schedule(twolen::instance_from_json(text), sch);
  if (vs.empty()) {
    std::cout << "ok\n";
    return kOk;
  }
  std::cout << twolen::to_string(vs) << "\n";
  return kNegative;
}

// ---- decode ---------------------------------------------------------------

struct DecodeArgs {
  std::string layout;
  std::string schedule;
  bool stacked = false;
};

// The layout written by `reduce --layout` carries the formula and (p, q); the
// block sequence is rebuilt from those and must reproduce the file exactly.
twolen::FilledInstance filled_from_layout(const json& layout) {
  if (!layout.is_object() || !layout.contains("cnf") || !layout.contains("p") ||
      !layout.contains("q")) {
    throw twolen::ParseError("layout: expected fields \"p\", \"q\" and \"cnf\"");
  }
  twolen::CnfFormula cnf;
  try {
    cnf.num_vars = layout.at("cnf").at("num_vars").get<int>();
    cnf.clauses = layout.at("cnf").at("clauses").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw twolen::ParseError(std::string("layout.cnf: ") + e.what());
  }
  twolen::FilledInstance fi =
      twolen::build_block_sequence(cnf, twolen::read_time(layout.at("p"), "p"),
                                   twolen::read_time(layout.at("q"), "q"));
  if (twolen::layout_report(fi) != layout) {
    throw twolen::InvalidInput("layout does not match the construction for its formula");
  }
  return fi;
}

int run_decode(const DecodeArgs& a) {
  const twolen::FilledInstance fi =
      filled_from_layout(twolen::parse_json_text(read_input(a.layout)));
  const twolen::AuxInstance aux = twolen::flatten_filled(fi);
  twolen::Schedule sch = twolen::schedule_from_json(read_input(a.schedule));

  twolen::Violations vs;
  if (a.stacked) {
    const twolen::StackedInstance s = twolen::reduce_aux_to_instance(aux);
    vs = twolen::verify_schedule(s.instance, sch);
    if (vs.empty()) {
      sch = twolen::extract_aux_schedule(aux, s, twolen::normalize_bins(s, sch));
    }
  }
  if (vs.empty()) vs = twolen::verify_aux_schedule(aux, sch);
  if (!vs.empty()) {
    std::cout << dump({{"status", "infeasible"}, {"violations", violations_json(vs)}});
    return kNegative;
  }
  const twolen::Assignment v = twolen::decode_schedule(fi, sch);
  std::cout << dump({{"status", "ok"},
                     {"assignment", assignment_json(v)},
                     {"satisfies", twolen::satisfies(*fi.cnf, v)}});
  return kOk;
}

// ---- roundtrip ------------------------------------------------------------

struct RoundtripArgs {
  std::string input;
  std::string dump_dir;
  bool skip_aux_oracle = false;
  std::size_t aux_max_pairs = 10;
  twolen::Time p = 3;
  twolen::Time q = 2;
  BudgetFlags budget;
};

void dump_artifacts(const fs::path& dir, const json& report) {
  fs::create_directories(dir);
  write_output((dir / "report.json").string(), dump(report));
  const json& art = report.value("artifacts", json::object());
  for (const auto& [name, value] : art.items()) {
    if (value.is_string()) {
      write_output((dir / (name + ".cnf")).string(), value.get<std::string>());
    } else {
      write_output((dir / (name + ".json")).string(), dump(value));
    }
  }
}

int run_roundtrip_cmd(const RoundtripArgs& a) {
  const twolen::CnfFormula cnf = twolen::parse_dimacs(read_input(a.input));
  twolen::RoundtripOptions opts;
  opts.p = a.p;
  opts.q = a.q;
  opts.budget = a.budget.budget();
  opts.skip_aux_oracle = a.skip_aux_oracle;
  opts.aux_max_pairs = a.aux_max_pairs;
  const twolen::PipelineReport r = twolen::run_roundtrip(cnf, opts);
  const json out = twolen::to_json_value(r);
  std::cout << dump(out);
  if (r.outcome == twolen::PipelineOutcome::kDisagreement && !a.dump_dir.empty()) {
    dump_artifacts(a.dump_dir, out);
    std::cerr << "artifacts written to " << a.dump_dir << "\n";
  }
  return twolen::exit_code(r.outcome);
}

// ---- gantt ----------------------------------------------------------------

struct GanttArgs {
  std::string instance;
  std::string schedule;
  std::string output;
  std::string format = "ascii";
  bool aux = false;
};

int run_gantt(const GanttArgs& a) {
  const std::string text = read_input(a.instance);
  const twolen::Instance inst = a.aux ? twolen::expand_aux(twolen::aux_from_json(text))
                                      : twolen::instance_from_json(text);
  const twolen::Schedule sch = twolen::schedule_from_json(read_input(a.schedule));
  const auto fmt = a.format == "svg" ? twolen::GanttFormat::kSvg : twolen::GanttFormat::kAscii;
  write_output(a.output, twolen::render_gantt(inst, sch, fmt));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-length single-machine scheduling: reductions, solver and checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "twolen 0.1.0");

  auto add_lengths = [](CLI::App* cmd, twolen::Time& p, twolen::Time& q) {
    cmd->add_option("--p", p, "Long job length")->capture_default_str();
    cmd->add_option("--q", q, "Short job length")->capture_default_str();
  };

  ReduceArgs reduce;
  auto* c_reduce = app.add_subcommand("reduce", "DIMACS CNF to an AUX or stacked instance");
  c_reduce->add_option("input", reduce.input, "DIMACS file, - for stdin")->required();
  c_reduce->add_option("-o,--output", reduce.output, "Instance file (default stdout)");
  c_reduce->add_option("--layout", reduce.layout, "Also write the block layout report here");
  c_reduce->add_option("--stage", reduce.stage, "Which instance to emit")
      ->check(CLI::IsMember({"aux", "stacked"}))
      ->capture_default_str();
  add_lengths(c_reduce, reduce.p, reduce.q);

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve", "Decide feasibility of an instance");
  c_solve->add_option("input", solve.input, "Instance JSON, - for stdin")->required();
  c_solve->add_option("--witness", solve.witness, "Write the witness schedule here");
  c_solve->add_flag("--aux", solve.aux, "Input is an AUX instance");
  solve.budget.add_to(*c_solve);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Check a schedule against an instance");
  c_verify->add_option("instance", verify.instance, "Instance JSON")->required();
  c_verify->add_option("schedule", verify.schedule, "Schedule JSON")->required();
  c_verify->add_flag("--aux", verify.aux, "Use AUX semantics (early-deadline pairs)");

  DecodeArgs decode;
  auto* c_decode = app.add_subcommand("decode", "Read a truth assignment off a schedule");
  c_decode->add_option("layout", decode.layout, "Layout report from reduce --layout")
      ->required();
  c_decode->add_option("schedule", decode.schedule, "AUX schedule JSON")->required();
  c_decode->add_flag("--stacked", decode.stacked,
                     "Schedule is for the stacked instance; normalize and extract first");

  RoundtripArgs rt;
  auto* c_rt = app.add_subcommand("roundtrip", "Run every stage on a formula and compare");
  c_rt->add_option("input", rt.input, "DIMACS file, - for stdin")->required();
  c_rt->add_flag("--skip-aux-oracle", rt.skip_aux_oracle, "Do not run the AUX oracle");
  c_rt->add_option("--aux-max-pairs", rt.aux_max_pairs,
                   "Skip the AUX oracle above this many pairs")
      ->capture_default_str();
  c_rt->add_option("--dump-dir", rt.dump_dir, "Write artifacts here on disagreement");
  add_lengths(c_rt, rt.p, rt.q);
  rt.budget.add_to(*c_rt);

  GanttArgs gantt;
  auto* c_gantt = app.add_subcommand("gantt", "Draw a schedule");
  c_gantt->add_option("instance", gantt.instance, "Instance JSON")->required();
  c_gantt->add_option("schedule", gantt.schedule, "Schedule JSON")->required();
  c_gantt->add_option("-o,--output", gantt.output, "Output file (default stdout)");
  c_gantt->add_option("--format", gantt.format)
      ->check(CLI::IsMember({"ascii", "svg"}))
      ->capture_default_str();
  c_gantt->add_flag("--aux", gantt.aux, "Instance is an AUX instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (c_reduce->parsed()) return run_reduce(reduce);
    if (c_solve->parsed()) return run_solve(solve);
    if (c_verify->parsed()) return run_verify(verify);
    if (c_decode->parsed()) return run_decode(decode);
    if (c_rt->parsed()) return run_roundtrip_cmd(rt);
    if (c_gantt->parsed()) return run_gantt(gantt);
  } catch (const twolen::ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
    std::cerr << "\n";
    return kInputError;
  } catch (const twolen::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const twolen::Refused& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const twolen::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDisagreement;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
