#ifndef TWOLEN_SAT_REDUCTION_HPP_
#define TWOLEN_SAT_REDUCTION_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twolen/aux_problem.hpp"
#include "twolen/cnf.hpp"
#include "twolen/schedule.hpp"

namespace twolen {

// SAT -> AUX(p, q) through a sequence of local gadgets ("blocks") laid out
// one after another, with separator jobs closing each literal row.

enum class BlockKind {
  kPositiveLiteral,  // V+
  kNegativeLiteral,  // V-
  kClauseActive,
  kClauseInactive,
  kDummyLong,
  kDummyShort,
};

std::string to_string(BlockKind kind);

// A gadget with windows relative to its own offset. `length` is the sum of
// the lengths of every job the block defines; all deadlines lie in
// [1, length + 1].
struct Block {
  BlockKind kind = BlockKind::kDummyLong;
  std::vector<Task> aux_jobs;  // ids "aux1", "aux2", ... local to the block
  std::optional<PendingDeadlines> long_pending;
  std::optional<PendingDeadlines> short_pending;
  Time length = 0;
};

// Throws InvalidInput unless p > q > 1.
Block make_block(BlockKind kind, Time p, Time q);

Violations validate_block(const Block& block, Time p, Time q);

// Which literal row and clause a block belongs to. literal is a DIMACS code
// (0 for dummy blocks); clause is 1-based (0 for literal and dummy blocks).
struct BlockTag {
  int literal = 0;
  int clause = 0;
};

struct FilledInstance {
  Time p = 3;
  Time q = 2;
  std::vector<Block> blocks;
  std::set<std::size_t> separator_after;  // 1-based block indices
  std::vector<Time> offsets;              // per block
  // Block index (0-based) defining the i-th long / short pending job.
  std::vector<std::size_t> long_block;
  std::vector<std::size_t> short_block;

  // Filled by build_block_sequence only.
  std::optional<CnfFormula> cnf;
  std::vector<BlockTag> tags;
  std::vector<std::string> pair_labels;     // "v_<i>" or "c_<j>_<k>", per pair
  std::vector<std::size_t> variable_pair;   // 0-based pair index of v_i

  std::size_t pairs() const { return long_block.size(); }
};

// Computes offsets and pending-job positions for an arbitrary block
// sequence. Throws InvalidInput if a block is invalid, the long and short
// counts differ, or the i-th long job is not defined before the i-th short.
FilledInstance assemble_filled(Time p, Time q, std::vector<Block> blocks,
                               std::set<std::size_t> separator_after);

// Recomputes the offset recurrence and checks every block and the ordering
// of pending jobs.
Violations validate_filled(const FilledInstance& fi);

// m dummy-long blocks; for each literal x_1, -x_1, ..., x_n, -x_n a V+/V-
// block, then one active/inactive block per clause and a separator; then m
// dummy-short blocks. N = n + m (2n + 1) pairs.
FilledInstance build_block_sequence(const CnfFormula& cnf, Time p = 3, Time q = 2);

// Ids used in the flattened instance.
std::string block_aux_id(std::size_t block, std::size_t k);  // "blk<b>_aux<k>"
std::string block_separator_id(std::size_t block);          // "blk<b>_sep"

// Shifts every relative window by its block offset, adds the separators and
// collects the pending deadlines in block order. Throws InternalError if the
// result fails validate_aux.
AuxInstance flatten_filled(const FilledInstance& fi);

// Builds a feasible AUX schedule from a model. Throws InvalidInput when `v`
// does not satisfy `cnf` and InternalError if the result fails
// verification.
AuxSchedule encode_model(const CnfFormula& cnf, const Assignment& v,
                         const FilledInstance& fi);

// x_i is true when the long v_i job misses its early deadline or both v_i
// jobs meet theirs, false when only the long one does. Throws InvalidInput
// for a schedule that does not verify, InternalError if the result does not
// satisfy the formula.
Assignment decode_schedule(const FilledInstance& fi, const AuxSchedule& sch);

// Every job defined in block b starts no earlier than its offset.
Violations check_offset_property(const FilledInstance& fi, const Schedule& sch);

// Blocks, kinds, offsets, separators and the pair label per index.
nlohmann::json layout_report(const FilledInstance& fi);

}  // namespace twolen

#endif  // TWOLEN_SAT_REDUCTION_HPP_
