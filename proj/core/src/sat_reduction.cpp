#include "twolen/sat_reduction.hpp"

#include <algorithm>
#include <cstdlib>

#include "twolen/errors.hpp"

namespace twolen {

std::string to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::kPositiveLiteral:
      return "V+";
    case BlockKind::kNegativeLiteral:
      return "V-";
    case BlockKind::kClauseActive:
      return "C_active";
    case BlockKind::kClauseInactive:
      return "C_inactive";
    case BlockKind::kDummyLong:
      return "dummy_long";
    case BlockKind::kDummyShort:
      return "dummy_short";
  }
  return "unknown";
}

Block make_block(BlockKind kind, Time p, Time q) {
  if (q <= 1 || p <= q) {
    throw InvalidInput("gadgets need p > q > 1, got p=" + std::to_string(p) +
                       " q=" + std::to_string(q));
  }
  Block b;
  b.kind = kind;
  switch (kind) {
    case BlockKind::kPositiveLiteral:
      b.long_pending = PendingDeadlines{p + q + 1, p + 2 * q};
      b.aux_jobs = {{"aux1", 1, 2 * q, q}, {"aux2", 0, p + 2 * q + 1, q}};
      break;
    case BlockKind::kNegativeLiteral:
      b.short_pending = PendingDeadlines{q, p + 2 * q};
      b.aux_jobs = {{"aux1", q + 1, p + q, q}, {"aux2", 0, p + 2 * q + 1, p}};
      break;
    case BlockKind::kClauseActive:
      b.long_pending = PendingDeadlines{p + q, p + q + 1};
      b.short_pending = b.long_pending;
      break;
    case BlockKind::kClauseInactive:
      b.long_pending = PendingDeadlines{p + q - 1, p + q + 1};
      b.short_pending = b.long_pending;
      break;
    case BlockKind::kDummyLong:
      b.long_pending = PendingDeadlines{p - 1, p};
      break;
    case BlockKind::kDummyShort:
      b.short_pending = PendingDeadlines{q - 1, q};
      break;
  }
  for (const Task& t : b.aux_jobs) b.length += t.length;
  if (b.long_pending) b.length += p;
  if (b.short_pending) b.length += q;
  return b;
}

Violations validate_block(const Block& block, Time p, Time q) {
  Violations out;
  const std::string name = to_string(block.kind);
  Time sum = 0;
  auto check_deadline = [&](Time d, const std::string& what) {
    if (d < 1 || d > block.length + 1) {
      out.push_back({name, "deadline outside [1, L+1]",
                     what + " = " + std::to_string(d) + ", L = " +
                         std::to_string(block.length)});
    }
  };
  for (const Task& t : block.aux_jobs) {
    sum += t.length;
    if (t.release < 0) out.push_back({name + "." + t.id, "negative release", ""});
    if (t.release + t.length > t.deadline) {
      out.push_back({name + "." + t.id, "window too small", ""});
    }
    check_deadline(t.deadline, t.id);
  }
  if (block.long_pending) {
    sum += p;
    check_deadline(block.long_pending->early, "long early");
    check_deadline(block.long_pending->late, "long late");
    if (block.long_pending->late < p) out.push_back({name, "long window too small", ""});
  }
  if (block.short_pending) {
    sum += q;
    check_deadline(block.short_pending->early, "short early");
    check_deadline(block.short_pending->late, "short late");
    if (block.short_pending->late < q) {
      out.push_back({name, "short window too small", ""});
    }
  }
  if (sum != block.length) {
    out.push_back({name, "length mismatch",
                   "L = " + std::to_string(block.length) + ", jobs sum to " +
                       std::to_string(sum)});
  }
  return out;
}

namespace {

std::vector<Time> offset_recurrence(const std::vector<Block>& blocks,
                                    const std::set<std::size_t>& separator_after,
                                    Time q) {
  std::vector<Time> ofs(blocks.size(), 0);
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    ofs[i] = ofs[i - 1] + blocks[i - 1].length;
    if (separator_after.contains(i)) ofs[i] += q + 1;  // block i (1-based) = i-1
  }
  return ofs;
}

}  // namespace

FilledInstance assemble_filled(Time p, Time q, std::vector<Block> blocks,
                               std::set<std::size_t> separator_after) {
  FilledInstance fi;
  fi.p = p;
  fi.q = q;
  fi.blocks = std::move(blocks);
  fi.separator_after = std::move(separator_after);
  fi.offsets = offset_recurrence(fi.blocks, fi.separator_after, q);
  for (std::size_t b = 0; b < fi.blocks.size(); ++b) {
    if (fi.blocks[b].long_pending) fi.long_block.push_back(b);
    if (fi.blocks[b].short_pending) fi.short_block.push_back(b);
  }
  Violations vs = validate_filled(fi);
  if (!vs.empty()) throw InvalidInput("invalid block sequence:\n" + to_string(vs), vs);
  return fi;
}

Violations validate_filled(const FilledInstance& fi) {
  Violations out;
  for (std::size_t b = 0; b < fi.blocks.size(); ++b) {
    for (Violation v : validate_block(fi.blocks[b], fi.p, fi.q)) {
      v.subject = "block " + std::to_string(b + 1) + " " + v.subject;
      out.push_back(std::move(v));
    }
  }
  for (std::size_t s : fi.separator_after) {
    if (s < 1 || s > fi.blocks.size()) {
      out.push_back({"separator_after", "no such block", std::to_string(s)});
    }
  }
  if (fi.offsets != offset_recurrence(fi.blocks, fi.separator_after, fi.q)) {
    out.push_back({"offsets", "recurrence mismatch", ""});
  }
  if (fi.long_block.size() != fi.short_block.size()) {
    out.push_back({"pending", "long and short counts differ",
                   std::to_string(fi.long_block.size()) + " vs " +
                       std::to_string(fi.short_block.size())});
    return out;
  }
  for (std::size_t i = 0; i < fi.long_block.size(); ++i) {
    if (fi.long_block[i] >= fi.short_block[i]) {
      out.push_back({"pair[" + std::to_string(i + 1) + "]",
                     "long job not defined before short job",
                     "blocks " + std::to_string(fi.long_block[i] + 1) + " and " +
                         std::to_string(fi.short_block[i] + 1)});
    }
  }
  return out;
}

namespace {

std::string clause_label(int j, int k) {
  return "c_" + std::to_string(j) + "_" + std::to_string(k);
}

}  // namespace

FilledInstance build_block_sequence(const CnfFormula& cnf, Time p, Time q) {
  check_formula(cnf);
  const int n = cnf.num_vars;
  const int m = static_cast<int>(cnf.clauses.size());

  std::vector<Block> blocks;
  std::vector<BlockTag> tags;
  std::set<std::size_t> separator_after;
  // Labels of the pending jobs as the blocks define them.
  std::vector<std::string> long_labels;
  std::vector<std::string> short_labels;

  for (int j = 1; j <= m; ++j) {
    blocks.push_back(make_block(BlockKind::kDummyLong, p, q));
    tags.push_back({});
    long_labels.push_back(clause_label(j, 0));
  }
  for (int var = 1; var <= n; ++var) {
    for (int literal : {var, -var}) {
      const int row = literal_index(literal);
      if (literal > 0) {
        blocks.push_back(make_block(BlockKind::kPositiveLiteral, p, q));
        long_labels.push_back("v_" + std::to_string(var));
      } else {
        blocks.push_back(make_block(BlockKind::kNegativeLiteral, p, q));
        short_labels.push_back("v_" + std::to_string(var));
      }
      tags.push_back({literal, 0});
      for (int j = 1; j <= m; ++j) {
        const auto& clause = cnf.clauses[static_cast<std::size_t>(j - 1)];
        const bool active = std::find(clause.begin(), clause.end(), literal) != clause.end();
        blocks.push_back(make_block(
            active ? BlockKind::kClauseActive : BlockKind::kClauseInactive, p, q));
        tags.push_back({literal, j});
        long_labels.push_back(clause_label(j, row));
        short_labels.push_back(clause_label(j, row - 1));
      }
      separator_after.insert(blocks.size());
    }
  }
  for (int j = 1; j <= m; ++j) {
    blocks.push_back(make_block(BlockKind::kDummyShort, p, q));
    tags.push_back({});
    short_labels.push_back(clause_label(j, 2 * n));
  }

  // Pair order: c_{.,0}, then per variable v_i, c_{.,2i-1}, c_{.,2i}.
  std::vector<std::string> order;
  for (int j = 1; j <= m; ++j) order.push_back(clause_label(j, 0));
  for (int var = 1; var <= n; ++var) {
    order.push_back("v_" + std::to_string(var));
    for (int k : {2 * var - 1, 2 * var}) {
      for (int j = 1; j <= m; ++j) order.push_back(clause_label(j, k));
    }
  }
  if (long_labels != order || short_labels != order) {
    throw InternalError("block sequence does not define pending jobs in pair order");
  }

  FilledInstance fi = assemble_filled(p, q, std::move(blocks), std::move(separator_after));
  fi.cnf = cnf;
  fi.tags = std::move(tags);
  fi.pair_labels = std::move(order);
  fi.variable_pair.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < fi.pair_labels.size(); ++i) {
    const std::string& label = fi.pair_labels[i];
    if (label.starts_with("v_")) {
      fi.variable_pair[static_cast<std::size_t>(std::stoi(label.substr(2)) - 1)] = i;
    }
  }
  return fi;
}

std::string block_aux_id(std::size_t block, std::size_t k) {
  return "blk" + std::to_string(block) + "_aux" + std::to_string(k);
}

std::string block_separator_id(std::size_t block) {
  return "blk" + std::to_string(block) + "_sep";
}

AuxInstance flatten_filled(const FilledInstance& fi) {
  AuxInstance aux;
  aux.p = fi.p;
  aux.q = fi.q;
  for (std::size_t b = 0; b < fi.blocks.size(); ++b) {
    const Block& block = fi.blocks[b];
    const Time ofs = fi.offsets[b];
    for (std::size_t k = 0; k < block.aux_jobs.size(); ++k) {
      const Task& t = block.aux_jobs[k];
      aux.ordinary.push_back(
          {block_aux_id(b + 1, k + 1), t.release + ofs, t.deadline + ofs, t.length});
    }
    if (fi.separator_after.contains(b + 1)) {
      const Time end = ofs + block.length;
      aux.ordinary.push_back({block_separator_id(b + 1), end + 1, end + fi.q + 1, fi.q});
    }
  }
  for (std::size_t b : fi.long_block) {
    const PendingDeadlines& d = *fi.blocks[b].long_pending;
    aux.long_pending.push_back({d.early + fi.offsets[b], d.late + fi.offsets[b]});
  }
  for (std::size_t b : fi.short_block) {
    const PendingDeadlines& d = *fi.blocks[b].short_pending;
    aux.short_pending.push_back({d.early + fi.offsets[b], d.late + fi.offsets[b]});
  }
  Violations vs = validate_aux(aux);
  if (!vs.empty()) {
    throw InternalError("flattened block sequence is not a valid AUX instance:\n" +
                        to_string(vs));
  }
  return aux;
}

namespace {

struct Placement {
  std::string id;
  Time release;
  Time length;
};

// Pair indices (0-based) of the pending jobs defined by block b.
std::optional<std::size_t> pair_of(const std::vector<std::size_t>& blocks, std::size_t b) {
  auto it = std::find(blocks.begin(), blocks.end(), b);
  if (it == blocks.end()) return std::nullopt;
  return static_cast<std::size_t>(it - blocks.begin());
}

}  // namespace

AuxSchedule encode_model(const CnfFormula& cnf, const Assignment& v,
                         const FilledInstance& fi) {
  check_formula(cnf);
  if (v.size() != static_cast<std::size_t>(cnf.num_vars) || !satisfies(cnf, v)) {
    throw InvalidInput("encode_model needs a satisfying assignment");
  }
  if (!fi.cnf || fi.tags.size() != fi.blocks.size()) {
    throw InvalidInput("encode_model needs a block sequence built from a formula");
  }
  if (*fi.cnf != cnf) throw InvalidInput("block sequence was built from another formula");

  auto value = [&](int literal) {
    const bool x = v[static_cast<std::size_t>(std::abs(literal) - 1)];
    return literal > 0 ? x : !x;
  };
  // Smallest literal index satisfying each clause.
  std::vector<int> witness;
  for (const auto& clause : cnf.clauses) {
    int best = 0;
    for (int lit : clause) {
      if (value(lit) && (best == 0 || literal_index(lit) < best)) best = literal_index(lit);
    }
    witness.push_back(best);
  }

  const AuxInstance aux = flatten_filled(fi);
  AuxSchedule sch;
  Time cursor = 0;
  for (std::size_t b = 0; b < fi.blocks.size(); ++b) {
    const Block& block = fi.blocks[b];
    const Time ofs = fi.offsets[b];
    if (cursor != ofs && cursor != ofs + 1) {
      throw InternalError("block " + std::to_string(b + 1) + " starts at " +
                          std::to_string(cursor) + ", offset " + std::to_string(ofs));
    }
    const auto long_pair = pair_of(fi.long_block, b);
    const auto short_pair = pair_of(fi.short_block, b);
    const Placement long_job =
        long_pair ? Placement{pending_id(JobLength::kLong, *long_pair + 1), ofs, fi.p}
                  : Placement{};
    const Placement short_job =
        short_pair ? Placement{pending_id(JobLength::kShort, *short_pair + 1), ofs, fi.q}
                   : Placement{};
    auto aux_job = [&](std::size_t k) {
      const Task& t = block.aux_jobs[k];
      return Placement{block_aux_id(b + 1, k + 1), t.release + ofs, t.length};
    };

    std::vector<Placement> order;
    const BlockTag& tag = fi.tags[b];
    switch (block.kind) {
      case BlockKind::kDummyLong:
        order = {long_job};
        break;
      case BlockKind::kDummyShort:
        order = {short_job};
        break;
      case BlockKind::kPositiveLiteral:
        // True: the long job only meets its late deadline and the block packs
        // into [0, L]. False: it meets the early one and the block overruns by
        // one unit.
        if (value(tag.literal)) {
          order = {aux_job(1), aux_job(0), long_job};
        } else {
          order = {aux_job(0), long_job, aux_job(1)};
        }
        break;
      case BlockKind::kNegativeLiteral:
        if (value(tag.literal)) {
          order = {aux_job(1), aux_job(0), short_job};
        } else {
          order = {short_job, aux_job(0), aux_job(1)};
        }
        break;
      case BlockKind::kClauseActive:
      case BlockKind::kClauseInactive: {
        const int row = literal_index(tag.literal);
        const int chosen = witness[static_cast<std::size_t>(tag.clause - 1)];
        if (row < chosen) {
          order = {short_job, long_job};
        } else {
          order = {long_job, short_job};
        }
        break;
      }
    }
    for (const Placement& job : order) {
      const Time start = std::max(cursor, job.release);
      sch.starts[job.id] = start;
      cursor = start + job.length;
    }
    if (fi.separator_after.contains(b + 1)) {
      const Time sep = ofs + block.length + 1;
      if (cursor > sep) {
        throw InternalError("block " + std::to_string(b + 1) + " runs into its separator");
      }
      sch.starts[block_separator_id(b + 1)] = sep;
      cursor = sep + fi.q;
    }
  }

  Violations vs = verify_aux_schedule(aux, sch);
  if (!vs.empty()) {
    throw InternalError("encoded schedule fails verification:\n" + to_string(vs));
  }
  return sch;
}

Assignment decode_schedule(const FilledInstance& fi, const AuxSchedule& sch) {
  if (!fi.cnf) throw InvalidInput("decode_schedule needs a block sequence built from a formula");
  const AuxInstance aux = flatten_filled(fi);
  Violations vs = verify_aux_schedule(aux, sch);
  if (!vs.empty()) {
    throw InvalidInput("decode_schedule needs a feasible AUX schedule:\n" + to_string(vs),
                       vs);
  }
  Assignment v(static_cast<std::size_t>(fi.cnf->num_vars));
  for (std::size_t var = 0; var < v.size(); ++var) {
    const std::size_t i = fi.variable_pair[var];
    const bool long_early = sch.starts.at(pending_id(JobLength::kLong, i + 1)) + fi.p <=
                            aux.long_pending[i].early;
    const bool short_early = sch.starts.at(pending_id(JobLength::kShort, i + 1)) + fi.q <=
                             aux.short_pending[i].early;
    // Both early: fixed tie-break to true.
    v[var] = !(long_early && !short_early);
  }
  if (!satisfies(*fi.cnf, v)) {
    throw InternalError("decoded assignment does not satisfy the formula");
  }
  return v;
}

Violations check_offset_property(const FilledInstance& fi, const Schedule& sch) {
  Violations out;
  auto check = [&](const std::string& id, std::size_t b) {
    auto it = sch.starts.find(id);
    if (it == sch.starts.end()) {
      out.push_back({id, "missing start", "task has no start time"});
    } else if (it->second < fi.offsets[b]) {
      out.push_back({id, "starts before block offset",
                     std::to_string(it->second) + " < " + std::to_string(fi.offsets[b]) +
                         " (block " + std::to_string(b + 1) + ")"});
    }
  };
  for (std::size_t b = 0; b < fi.blocks.size(); ++b) {
    for (std::size_t k = 0; k < fi.blocks[b].aux_jobs.size(); ++k) {
      check(block_aux_id(b + 1, k + 1), b);
    }
  }
  for (std::size_t i = 0; i < fi.pairs(); ++i) {
    check(pending_id(JobLength::kLong, i + 1), fi.long_block[i]);
    check(pending_id(JobLength::kShort, i + 1), fi.short_block[i]);
  }
  return out;
}

nlohmann::json layout_report(const FilledInstance& fi) {
  using nlohmann::json;
  json blocks = json::array();
  for (std::size_t b = 0; b < fi.blocks.size(); ++b) {
    const Block& block = fi.blocks[b];
    json entry = {{"index", b + 1},
                  {"kind", to_string(block.kind)},
                  {"offset", fi.offsets[b]},
                  {"length", block.length},
                  {"separator_after", fi.separator_after.contains(b + 1)}};
    if (b < fi.tags.size()) {
      entry["literal"] = fi.tags[b].literal;
      entry["clause"] = fi.tags[b].clause;
    }
    if (auto i = pair_of(fi.long_block, b)) entry["long_pair"] = *i + 1;
    if (auto i = pair_of(fi.short_block, b)) entry["short_pair"] = *i + 1;
    blocks.push_back(std::move(entry));
  }
  json pairs = json::array();
  for (std::size_t i = 0; i < fi.pairs(); ++i) {
    json entry = {{"index", i + 1},
                  {"long_block", fi.long_block[i] + 1},
                  {"short_block", fi.short_block[i] + 1}};
    if (i < fi.pair_labels.size()) entry["label"] = fi.pair_labels[i];
    pairs.push_back(std::move(entry));
  }
  json report = {{"p", fi.p},
                 {"q", fi.q},
                 {"pairs", fi.pairs()},
                 {"separator_after", fi.separator_after},
                 {"blocks", blocks},
                 {"pending", pairs}};
  if (fi.cnf) {
    report["cnf"] = {{"num_vars", fi.cnf->num_vars}, {"clauses", fi.cnf->clauses}};
  }
  return report;
}

}  // namespace twolen
