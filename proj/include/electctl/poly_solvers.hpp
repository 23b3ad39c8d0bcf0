// Polynomial-time control algorithms. Each returns a Decision whose witness
// (on yes) is accepted by verify_witness.

#ifndef ELECTCTL_POLY_SOLVERS_HPP_
#define ELECTCTL_POLY_SOLVERS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "electctl/two_stage.hpp"

namespace electctl {

// Thrown when a solver is handed an instance outside its problem/rule/tie.
class UnsupportedInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Plurality, equipartition of voters, ties eliminate.
Decision solve_plurality_ccepv_te(const ControlInstance& instance);

// Plurality, partition of voters into k parts, ties eliminate.
Decision solve_plurality_ccpkv_te(const ControlInstance& instance);

// weakCondorcet, runoff partition of candidates, ties promote. Answers yes
// exactly when ({p}, C - {p}) works.
Decision solve_weakcondorcet_ccrpc_tp(const ControlInstance& instance);

// System E, equipartition of voters, ties promote. Always no.
Decision solve_system_e_ccepv_tp(const ControlInstance& instance);

struct PolySolver {
  std::string_view name;
  Problem problem;
  VotingRule rule;
  std::optional<TieRule> tie;
  std::function<Decision(const ControlInstance&)> solve;
};

const std::vector<PolySolver>& poly_solvers();
// Solver matching the instance's problem, rule and tie rule, if any.
const PolySolver* find_poly_solver(const ControlInstance& instance);
std::string describe_poly_solvers();

}  // namespace electctl

#endif  // ELECTCTL_POLY_SOLVERS_HPP_
