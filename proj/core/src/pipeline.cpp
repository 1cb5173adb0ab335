#include "twolen/pipeline.hpp"

#include <chrono>
#include <exception>

#include "twolen/aux_problem.hpp"
#include "twolen/errors.hpp"
#include "twolen/json_io.hpp"
#include "twolen/sat_reduction.hpp"
#include "twolen/stacked.hpp"

namespace twolen {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t millis_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

nlohmann::json assignment_json(const Assignment& v) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < v.size(); ++i) out["x" + std::to_string(i + 1)] = bool(v[i]);
  return out;
}

}  // namespace

std::string to_string(PipelineOutcome outcome) {
  switch (outcome) {
    case PipelineOutcome::kSatisfiable:
      return "satisfiable";
    case PipelineOutcome::kUnsatisfiable:
      return "unsatisfiable";
    case PipelineOutcome::kBudgetExhausted:
      return "budget_exhausted";
    case PipelineOutcome::kDisagreement:
      return "disagreement";
  }
  return "unknown";
}

int exit_code(PipelineOutcome outcome) {
  switch (outcome) {
    case PipelineOutcome::kSatisfiable:
      return 0;
    case PipelineOutcome::kUnsatisfiable:
      return 1;
    case PipelineOutcome::kBudgetExhausted:
      return 3;
    case PipelineOutcome::kDisagreement:
      return 4;
  }
  return 4;
}

PipelineReport run_roundtrip(const CnfFormula& cnf, const RoundtripOptions& options) {
  check_formula(cnf);
  PipelineReport report;
  report.p = options.p;
  report.q = options.q;
  report.num_vars = cnf.num_vars;
  report.num_clauses = cnf.clauses.size();

  // Each executed stage votes satisfiable (true) or not.
  std::vector<std::pair<std::string, bool>> votes;

  std::optional<Assignment> model;
  if (cnf.num_vars <= kBruteforceMaxVars) {
    const auto t0 = Clock::now();
    model = sat_bruteforce(cnf);
    report.sat_oracle.millis = millis_since(t0);
    report.sat_oracle.verdict = model ? "sat" : "unsat";
    votes.emplace_back("sat_oracle", model.has_value());
  } else {
    report.sat_oracle.note = "more than 20 variables";
  }

  const FilledInstance fi = build_block_sequence(cnf, options.p, options.q);
  const AuxInstance aux = flatten_filled(fi);
  report.pairs = aux.pairs();
  report.aux_tasks = aux.ordinary.size() + 2 * aux.pairs();

  std::optional<AuxSchedule> aux_witness;
  if (options.skip_aux_oracle) {
    report.aux_oracle.note = "skipped on request";
  } else if (aux.pairs() > options.aux_max_pairs) {
    report.aux_oracle.note = "pairs exceed guard";
  } else {
    const auto t0 = Clock::now();
    AuxOracleResult r = aux_oracle(aux, {options.aux_max_pairs, options.budget});
    report.aux_oracle.millis = millis_since(t0);
    report.aux_oracle.nodes = r.nodes;
    report.aux_oracle.verdict = to_string(r.verdict);
    if (r.verdict != Verdict::kBudgetExhausted) votes.emplace_back("aux_oracle", r.feasible());
    aux_witness = r.witness;
  }

  const StackedInstance stacked = reduce_aux_to_instance(aux);
  report.stacked_tasks = stacked.instance.tasks.size();
  const auto t0 = Clock::now();
  SolveResult solved = solve_decision(stacked.instance, options.budget);
  report.stacked_solver.millis = millis_since(t0);
  report.stacked_solver.nodes = solved.stats.nodes;
  report.stacked_solver.verdict = to_string(solved.verdict);
  if (solved.verdict != Verdict::kBudgetExhausted) {
    votes.emplace_back("stacked_solver", solved.feasible());
  }

  if (solved.feasible()) {
    const auto t1 = Clock::now();
    try {
      const Schedule normal = normalize_bins(stacked, *solved.witness);
      const AuxSchedule extracted = extract_aux_schedule(aux, stacked, normal);
      Violations offsets = check_offset_property(fi, extracted);
      if (!offsets.empty()) {
        throw InternalError("offset property violated:\n" + to_string(offsets));
      }
      report.decoded = decode_schedule(fi, extracted);
      report.witness_mapping.verdict = "ok";
      votes.emplace_back("decoded_model", satisfies(cnf, *report.decoded));
    } catch (const std::exception& e) {
      report.witness_mapping.verdict = "failed";
      report.witness_mapping.note = e.what();
      report.disagreements.push_back(std::string("witness mapping: ") + e.what());
    }
    report.witness_mapping.millis = millis_since(t1);
  }

  if (model) {
    const auto t1 = Clock::now();
    try {
      const AuxSchedule encoded = encode_model(cnf, *model, fi);
      Violations offsets = check_offset_property(fi, encoded);
      if (!offsets.empty()) {
        throw InternalError("offset property violated:\n" + to_string(offsets));
      }
      Violations stacked_vs =
          verify_schedule(stacked.instance, embed_aux_schedule(aux, encoded));
      if (!stacked_vs.empty()) {
        throw InternalError("embedded schedule infeasible:\n" + to_string(stacked_vs));
      }
      report.model_encoding.verdict = "ok";
    } catch (const std::exception& e) {
      report.model_encoding.verdict = "failed";
      report.model_encoding.note = e.what();
      report.disagreements.push_back(std::string("model encoding: ") + e.what());
    }
    report.model_encoding.millis = millis_since(t1);
  }

  for (std::size_t i = 1; i < votes.size(); ++i) {
    if (votes[i].second != votes[0].second) {
      report.disagreements.push_back(votes[0].first + " says " +
                                     (votes[0].second ? "sat" : "unsat") + " but " +
                                     votes[i].first + " says " +
                                     (votes[i].second ? "sat" : "unsat"));
    }
  }

  if (!report.disagreements.empty()) {
    report.outcome = PipelineOutcome::kDisagreement;
    report.artifacts = {{"dimacs", to_dimacs(cnf)},
                        {"layout", layout_report(fi)},
                        {"aux", to_json_value(aux)},
                        {"stacked", to_json_value(stacked.instance)}};
    if (solved.witness) report.artifacts["stacked_witness"] = to_json_value(*solved.witness);
    if (aux_witness) report.artifacts["aux_witness"] = to_json_value(*aux_witness);
    if (model) report.artifacts["model"] = assignment_json(*model);
  } else if (solved.verdict == Verdict::kBudgetExhausted) {
    report.outcome = PipelineOutcome::kBudgetExhausted;
  } else if (votes.empty()) {
    report.outcome = PipelineOutcome::kBudgetExhausted;
  } else {
    report.outcome = votes[0].second ? PipelineOutcome::kSatisfiable
                                     : PipelineOutcome::kUnsatisfiable;
  }
  return report;
}

nlohmann::json to_json_value(const PipelineReport& r) {
  auto stage = [](const StageReport& s) {
    nlohmann::json j = {{"verdict", s.verdict}, {"millis", s.millis}, {"nodes", s.nodes}};
    if (!s.note.empty()) j["note"] = s.note;
    return j;
  };
  nlohmann::json out = {
      {"outcome", to_string(r.outcome)},
      {"p", r.p},
      {"q", r.q},
      {"sizes",
       {{"variables", r.num_vars},
        {"clauses", r.num_clauses},
        {"pairs", r.pairs},
        {"aux_tasks", r.aux_tasks},
        {"stacked_tasks", r.stacked_tasks}}},
      {"stages",
       {{"sat_oracle", stage(r.sat_oracle)},
        {"aux_oracle", stage(r.aux_oracle)},
        {"stacked_solver", stage(r.stacked_solver)},
        {"witness_mapping", stage(r.witness_mapping)},
        {"model_encoding", stage(r.model_encoding)}}},
      {"disagreements", r.disagreements}};
  if (r.decoded) out["decoded"] = assignment_json(*r.decoded);
  if (!r.artifacts.is_null()) out["artifacts"] = r.artifacts;
  return out;
}

}  // namespace twolen
