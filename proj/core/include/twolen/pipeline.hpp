#ifndef TWOLEN_PIPELINE_HPP_
#define TWOLEN_PIPELINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twolen/cnf.hpp"
#include "twolen/solver.hpp"

namespace twolen {

// Outcome of one stage. `verdict` is one of "sat", "unsat", "feasible",
// "infeasible", "budget_exhausted", "skipped", "ok", "failed".
struct StageReport {
  std::string verdict = "skipped";
  std::int64_t millis = 0;
  std::uint64_t nodes = 0;
  std::string note;

  bool ran() const { return verdict != "skipped"; }
};

enum class PipelineOutcome {
  kSatisfiable,
  kUnsatisfiable,
  kBudgetExhausted,
  kDisagreement,
};

struct PipelineReport {
  Time p = 3;
  Time q = 2;
  int num_vars = 0;
  std::size_t num_clauses = 0;
  std::size_t pairs = 0;
  std::size_t aux_tasks = 0;      // ordinary + 2N pending
  std::size_t stacked_tasks = 0;

  StageReport sat_oracle;
  StageReport aux_oracle;
  StageReport stacked_solver;
  StageReport witness_mapping;  // normalize -> extract -> offsets -> decode
  StageReport model_encoding;   // model -> AUX schedule -> stacked schedule

  std::optional<Assignment> decoded;
  std::vector<std::string> disagreements;
  PipelineOutcome outcome = PipelineOutcome::kUnsatisfiable;
  // Filled on disagreement: DIMACS, AUX and stacked instances, witnesses.
  nlohmann::json artifacts;
};

struct RoundtripOptions {
  Time p = 3;
  Time q = 2;
  SolveBudget budget;
  bool skip_aux_oracle = false;
  std::size_t aux_max_pairs = 10;
};

// SAT oracle -> block sequence -> AUX oracle -> stacked reduction -> solver,
// then maps a witness back to a model and re-checks it. Every executed
// stage must agree; otherwise the outcome is kDisagreement with the
// artifacts attached.
PipelineReport run_roundtrip(const CnfFormula& cnf, const RoundtripOptions& options = {});

nlohmann::json to_json_value(const PipelineReport& report);

// 0 satisfiable, 1 unsatisfiable, 3 budget exhausted, 4 disagreement.
int exit_code(PipelineOutcome outcome);
std::string to_string(PipelineOutcome outcome);

}  // namespace twolen

#endif  // TWOLEN_PIPELINE_HPP_
