#ifndef TRIPACK_CNF_HPP
#define TRIPACK_CNF_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace tripack {

struct Literal {
  int var = 0;  // 0-based
  bool positive = true;

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.var == b.var && a.positive == b.positive;
  }
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<Literal>> clauses;
};

// occurrence limits of the SAT(3) family: every variable at most twice
// positively and once negatively, and at least once each way
inline void check_sat3_occurrences(const CnfFormula& f, int arity) {
  std::vector<int> pos(f.num_vars, 0), neg(f.num_vars, 0);
  for (const auto& cl : f.clauses) {
    if (static_cast<int>(cl.size()) != arity)
      throw std::invalid_argument("clause arity must be " + std::to_string(arity));
    for (const Literal& l : cl) {
      if (l.var < 0 || l.var >= f.num_vars) throw std::invalid_argument("literal out of range");
      (l.positive ? pos : neg)[l.var]++;
    }
  }
  for (int v = 0; v < f.num_vars; ++v) {
    if (pos[v] > 2)
      throw std::invalid_argument("variable " + std::to_string(v + 1) + " occurs positively more than twice");
    if (neg[v] > 1)
      throw std::invalid_argument("variable " + std::to_string(v + 1) + " occurs negatively more than once");
    if (pos[v] < 1 || neg[v] < 1)
      throw std::invalid_argument("variable " + std::to_string(v + 1) +
                                  " must occur both positively and negatively");
  }
}

inline bool clause_satisfied(const std::vector<Literal>& clause, const std::vector<bool>& assignment) {
  for (const Literal& l : clause)
    if (assignment[l.var] == l.positive) return true;
  return false;
}

inline int count_satisfied(const CnfFormula& f, const std::vector<bool>& assignment) {
  int k = 0;
  for (const auto& cl : f.clauses)
    if (clause_satisfied(cl, assignment)) k++;
  return k;
}

}  // namespace tripack

#endif  // TRIPACK_CNF_HPP
