#ifndef TWOLEN_CNF_HPP_
#define TWOLEN_CNF_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twolen {

// Literal codes follow DIMACS: +v is x_v, -v is its negation, 1 <= v <= n.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// values[v - 1] is the value of x_v.
using Assignment = std::vector<bool>;

// Throws InvalidInput on empty clauses, zero literals or out-of-range codes.
void check_formula(const CnfFormula& cnf);

bool satisfies(const CnfFormula& cnf, const Assignment& v);

// Position of a literal in x_1, -x_1, x_2, -x_2, ...: 2i-1 or 2i.
int literal_index(int literal);

// Standard DIMACS: comments ('c'), one "p cnf <n> <m>" header, clauses as
// zero-terminated literal lists that may span lines, optional trailing '%'.
// Throws ParseError carrying the 1-based line number.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& cnf);

inline constexpr int kBruteforceMaxVars = 20;

// Tries all 2^n assignments with x_1 as the most significant bit and false
// before true; returns the first model. Throws Refused above 20 variables.
std::optional<Assignment> sat_bruteforce(const CnfFormula& cnf);

}  // namespace twolen

#endif  // TWOLEN_CNF_HPP_
