#include "generators.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace twolen::testing {

Instance random_instance(Rng& rng, std::size_t max_tasks, const std::vector<Time>& lengths,
                         Time horizon) {
  Instance inst;
  const auto count = static_cast<std::size_t>(rng.between(0, static_cast<Time>(max_tasks)));
  for (std::size_t i = 0; i < count; ++i) {
    const Time length = rng.pick(lengths);
    const Time release = rng.between(0, horizon - length);
    const Time deadline = rng.between(release + length, horizon);
    inst.tasks.push_back({"t" + std::to_string(i + 1), release, deadline, length});
  }
  return inst;
}

AuxInstance random_aux(Rng& rng, Time p, Time q, std::size_t max_pairs,
                       std::size_t max_ordinary, Time horizon) {
  for (;;) {
    AuxInstance aux;
    aux.p = p;
    aux.q = q;
    const auto pairs = static_cast<std::size_t>(rng.between(0, static_cast<Time>(max_pairs)));
    Time long_floor = 0;
    Time short_floor = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
      PendingDeadlines lp;
      lp.early = long_floor + rng.between(0, p + 1);
      lp.late = std::max(lp.early + rng.between(0, q + 1), p);
      PendingDeadlines sp;
      sp.early = std::max(short_floor, lp.late) + rng.between(0, q);
      sp.late = std::max(sp.early + rng.between(0, q + 1), q);
      aux.long_pending.push_back(lp);
      aux.short_pending.push_back(sp);
      long_floor = lp.late;
      short_floor = sp.late;
    }
    const auto ordinary =
        static_cast<std::size_t>(rng.between(0, static_cast<Time>(max_ordinary)));
    for (std::size_t k = 0; k < ordinary; ++k) {
      const Time length = rng.coin() ? p : q;
      const Time release = rng.between(0, horizon - length);
      const Time deadline = std::min(horizon, release + length + rng.between(0, 3));
      aux.ordinary.push_back({"j" + std::to_string(k + 1), release, deadline, length});
    }
    const bool in_horizon = aux.short_pending.empty() || aux.short_pending.back().late <= horizon;
    if (in_horizon && validate_aux(aux).empty()) return aux;
  }
}

CnfFormula random_cnf(Rng& rng, int max_vars, int max_clauses) {
  CnfFormula cnf;
  cnf.num_vars = static_cast<int>(rng.between(1, max_vars));
  const Time clauses = rng.between(1, max_clauses);
  for (Time c = 0; c < clauses; ++c) {
    std::vector<int> clause;
    const Time width = rng.between(1, std::min<Time>(3, cnf.num_vars));
    for (Time k = 0; k < width; ++k) {
      const int var = static_cast<int>(rng.between(1, cnf.num_vars));
      clause.push_back(rng.coin() ? var : -var);
    }
    cnf.clauses.push_back(clause);
  }
  return cnf;
}

std::vector<CnfFormula> all_small_cnfs(int max_vars, int max_clauses) {
  std::vector<CnfFormula> out;
  for (int n = 0; n <= max_vars; ++n) {
    std::vector<int> literals;
    for (int v = 1; v <= n; ++v) {
      literals.push_back(v);
      literals.push_back(-v);
    }
    std::vector<std::vector<int>> clauses;
    for (unsigned mask = 1; mask < (1U << literals.size()); ++mask) {
      std::vector<int> clause;
      for (std::size_t b = 0; b < literals.size(); ++b) {
        if (mask & (1U << b)) clause.push_back(literals[b]);
      }
      clauses.push_back(clause);
    }
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
      CnfFormula cnf{n, {}};
      for (std::size_t c : chosen) cnf.clauses.push_back(clauses[c]);
      out.push_back(cnf);
      if (left == 0) return;
      for (std::size_t c = from; c < clauses.size(); ++c) {
        chosen.push_back(c);
        rec(c, left - 1);
        chosen.pop_back();
      }
    };
    rec(0, max_clauses);
  }
  return out;
}

std::vector<std::pair<Time, Time>> length_grid(Time max_p) {
  std::vector<std::pair<Time, Time>> out;
  for (Time p = 3; p <= max_p; ++p) {
    for (Time q = 2; q < p; ++q) out.emplace_back(p, q);
  }
  return out;
}

}  // namespace twolen::testing
