#include "twolen/cnf.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "twolen/errors.hpp"

namespace twolen {

void check_formula(const CnfFormula& cnf) {
  if (cnf.num_vars < 0) throw InvalidInput("negative variable count");
  for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
    if (cnf.clauses[c].empty()) {
      throw InvalidInput("clause " + std::to_string(c + 1) + " is empty");
    }
    for (int lit : cnf.clauses[c]) {
      if (lit == 0 || std::abs(lit) > cnf.num_vars) {
        throw InvalidInput("clause " + std::to_string(c + 1) + ": literal " +
                           std::to_string(lit) + " out of range");
      }
    }
  }
}

bool satisfies(const CnfFormula& cnf, const Assignment& v) {
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (int lit : clause) {
      const bool value = v.at(static_cast<std::size_t>(std::abs(lit) - 1));
      if ((lit > 0) == value) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

int literal_index(int literal) {
  const int var = std::abs(literal);
  return literal > 0 ? 2 * var - 1 : 2 * var;
}

namespace {

std::optional<long long> to_int(std::string_view tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula cnf;
  long long declared_clauses = -1;
  bool header = false;
  std::vector<int> current;
  int current_line = 0;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::vector<std::string_view> toks = split(line);
    if (toks.empty() || toks[0].starts_with("c")) continue;
    if (toks[0] == "%") break;
    if (toks[0] == "p") {
      if (header) throw ParseError("duplicate header", line_no);
      if (toks.size() != 4 || toks[1] != "cnf") {
        throw ParseError("malformed header, expected \"p cnf <vars> <clauses>\"", line_no);
      }
      auto n = to_int(toks[2]);
      auto m = to_int(toks[3]);
      if (!n || !m || *n < 0 || *m < 0 || *n > 1'000'000) {
        throw ParseError("malformed header counts", line_no);
      }
      cnf.num_vars = static_cast<int>(*n);
      declared_clauses = *m;
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before \"p cnf\" header", line_no);
    for (std::string_view tok : toks) {
      auto v = to_int(tok);
      if (!v) throw ParseError("bad literal \"" + std::string(tok) + "\"", line_no);
      if (*v == 0) {
        if (current.empty()) throw ParseError("empty clause", line_no);
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::llabs(*v) > cnf.num_vars) {
        throw ParseError("literal " + std::to_string(*v) + " out of range", line_no);
      }
      if (current.empty()) current_line = line_no;
      current.push_back(static_cast<int>(*v));
    }
  }
  if (!header) throw ParseError("missing \"p cnf\" header", line_no);
  if (!current.empty()) {
    throw ParseError("clause not terminated by 0", current_line);
  }
  if (static_cast<long long>(cnf.clauses.size()) != declared_clauses) {
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(cnf.clauses.size()),
                     line_no);
  }
  return cnf;
}

std::string to_dimacs(const CnfFormula& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

std::optional<Assignment> sat_bruteforce(const CnfFormula& cnf) {
  check_formula(cnf);
  if (cnf.num_vars > kBruteforceMaxVars) {
    throw Refused("sat_bruteforce: " + std::to_string(cnf.num_vars) +
                  " variables exceed the guard of " + std::to_string(kBruteforceMaxVars));
  }
  const int n = cnf.num_vars;
  Assignment v(static_cast<std::size_t>(n));
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << n); ++code) {
    for (int i = 0; i < n; ++i) v[i] = (code >> (n - 1 - i)) & 1U;
    if (satisfies(cnf, v)) return v;
  }
  return std::nullopt;
}

}  // namespace twolen
