#include "electctl/poly_solvers.hpp"

#include <sstream>

namespace electctl {

Decision solve_weakcondorcet_ccrpc_tp(const ControlInstance& instance) {
  if (instance.problem != Problem::CCRPC || instance.rule != VotingRule::WeakCondorcet ||
      instance.tie != TieRule::TP) {
    throw UnsupportedInstance("solve_weakcondorcet_ccrpc_tp needs weakCondorcet CCRPC under TP");
  }
  validate(instance);
  // If any c != p survives (C - {p}) and ties-or-beats p, c is a weak
  // Condorcet winner of (C, V) and hence of every subelection holding it.
  CandidatePartition split{instance.profile.candidates().none(), instance.profile.candidates().all()};
  split.first.set(instance.distinguished);
  split.second.reset(instance.distinguished);

  Decision d;
  d.stats.cases_examined = 1;
  if (WitnessChecker(instance).sole_winner_candidate_partition(split.first, split.second)) {
    d.answer = Answer::Yes;
    d.witness = std::move(split);
  }
  return d;
}

Decision solve_system_e_ccepv_tp(const ControlInstance& instance) {
  if (instance.problem != Problem::CCEPV || instance.rule != VotingRule::SystemE ||
      instance.tie != TieRule::TP) {
    throw UnsupportedInstance("solve_system_e_ccepv_tp needs system E CCEPV under TP");
  }
  validate(instance);
  // Special candidates reach the runoff only as |V1| mod 4 and |V2| mod 4.
  // Balanced parts give equal or adjacent residues, never {0,2} or {1,3},
  // and without such a pair system E elects nobody in a runoff of at most
  // four candidates.
  return Decision{};
}

const std::vector<PolySolver>& poly_solvers() {
  static const std::vector<PolySolver> solvers = {
      {"plurality-ccepv-te", Problem::CCEPV, VotingRule::Plurality, TieRule::TE,
       solve_plurality_ccepv_te},
      {"plurality-ccpkv-te", Problem::CCPkV, VotingRule::Plurality, TieRule::TE,
       solve_plurality_ccpkv_te},
      {"weakcondorcet-ccrpc-tp", Problem::CCRPC, VotingRule::WeakCondorcet, TieRule::TP,
       solve_weakcondorcet_ccrpc_tp},
      {"system-e-ccepv-tp", Problem::CCEPV, VotingRule::SystemE, TieRule::TP,
       solve_system_e_ccepv_tp},
  };
  return solvers;
}

const PolySolver* find_poly_solver(const ControlInstance& instance) {
  for (const auto& s : poly_solvers()) {
    if (s.problem == instance.problem && s.rule == instance.rule &&
        (!s.tie || *s.tie == instance.tie)) {
      return &s;
    }
  }
  return nullptr;
}

std::string describe_poly_solvers() {
  std::ostringstream out;
  for (const auto& s : poly_solvers()) {
    out << "  " << s.name << " (" << to_string(s.rule) << ", " << to_string(s.problem);
    if (s.tie) out << ", " << to_string(*s.tie);
    out << ")\n";
  }
  return out.str();
}

}  // namespace electctl
