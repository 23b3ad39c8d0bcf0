#include "electctl/two_stage.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace electctl {

std::string_view to_string(TieRule tie) { return tie == TieRule::TE ? "TE" : "TP"; }

std::string_view to_string(Problem problem) {
  switch (problem) {
    case Problem::CCPV: return "CCPV";
    case Problem::CCEPV: return "CCEPV";
    case Problem::CCRPC: return "CCRPC";
    case Problem::CCREPC: return "CCREPC";
    case Problem::CCPkV: return "CCPkV";
    case Problem::CCPVG: return "CCPVG";
    case Problem::CCDVG: return "CCDVG";
    case Problem::CCAVG: return "CCAVG";
  }
  return "?";
}

std::optional<TieRule> parse_tie_rule(std::string_view name) {
  if (name == "TE") return TieRule::TE;
  if (name == "TP") return TieRule::TP;
  return std::nullopt;
}

std::optional<Problem> parse_problem(std::string_view name) {
  for (auto p : {Problem::CCPV, Problem::CCEPV, Problem::CCRPC, Problem::CCREPC, Problem::CCPkV,
                 Problem::CCPVG, Problem::CCDVG, Problem::CCAVG}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view to_string(Answer answer) {
  switch (answer) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "?";
}

bool is_voter_partition_problem(Problem problem) {
  return problem == Problem::CCPV || problem == Problem::CCEPV || problem == Problem::CCPkV ||
         problem == Problem::CCPVG;
}

bool is_candidate_partition_problem(Problem problem) {
  return problem == Problem::CCRPC || problem == Problem::CCREPC;
}

bool is_group_selection_problem(Problem problem) {
  return problem == Problem::CCDVG || problem == Problem::CCAVG;
}

bool uses_tie_rule(Problem problem) { return !is_group_selection_problem(problem); }

void validate(const ControlInstance& instance) {
  const Profile& profile = instance.profile;
  if (profile.kind() != required_ballot_kind(instance.rule)) {
    throw InvalidInput(std::string(to_string(instance.rule)) + " needs " +
                       (required_ballot_kind(instance.rule) == BallotKind::Approval
                            ? "approval ballots"
                            : "ranked ballots"));
  }
  if (instance.distinguished >= profile.candidates().size()) {
    throw InvalidInput("distinguished candidate is not in the candidate set");
  }
  if (instance.problem == Problem::CCPkV && instance.k < 2) {
    throw InvalidInput("CCPkV needs k >= 2, got " + std::to_string(instance.k));
  }
  for (const auto& label : instance.groups) {
    if (label.empty()) throw InvalidInput("group labels must be nonempty");
  }
  if (instance.problem == Problem::CCAVG) {
    if (!instance.pool) throw InvalidInput("CCAVG needs a pool of additional voters");
    if (instance.pool->candidates() != profile.candidates() ||
        instance.pool->kind() != profile.kind()) {
      throw InvalidInput("pool must use the instance's candidates and ballot kind");
    }
    if (instance.groups.size() != instance.pool->size()) {
      throw InvalidInput("CCAVG needs one group label per pool ballot");
    }
    return;
  }
  const bool grouped = instance.problem == Problem::CCPVG || instance.problem == Problem::CCDVG;
  if (grouped && instance.groups.size() != profile.size()) {
    throw InvalidInput(std::string(to_string(instance.problem)) +
                       " needs one group label per ballot");
  }
  if (!grouped && !instance.groups.empty() && instance.groups.size() != profile.size()) {
    throw InvalidInput("group column length does not match the ballots");
  }
}

const Profile& group_carrier(const ControlInstance& instance) {
  return instance.problem == Problem::CCAVG ? *instance.pool : instance.profile;
}

std::vector<Group> collect_groups(const ControlInstance& instance) {
  std::vector<Group> out;
  std::map<std::string, std::size_t, std::less<>> where;
  for (std::size_t i = 0; i < instance.groups.size(); ++i) {
    const auto& label = instance.groups[i];
    auto [it, inserted] = where.try_emplace(label, out.size());
    if (inserted) out.push_back({label, {}});
    out[it->second].ballots.push_back(i);
  }
  return out;
}

CandidateMask survivors(TieRule tie, const CandidateMask& subelection_winners) {
  if (tie == TieRule::TE && subelection_winners.count() != 1) {
    return CandidateMask(subelection_winners.size());
  }
  return subelection_winners;
}

void check_voter_partition(const Profile& profile,
                           const std::vector<std::vector<std::size_t>>& parts) {
  std::vector<bool> seen(profile.size(), false);
  std::size_t total = 0;
  for (const auto& part : parts) {
    for (auto id : part) {
      if (id >= profile.size()) {
        throw InvalidInput("ballot index " + std::to_string(id) + " out of range");
      }
      if (seen[id]) throw InvalidInput("ballot " + std::to_string(id) + " in two parts");
      seen[id] = true;
      ++total;
    }
  }
  if (total != profile.size()) throw InvalidInput("partition does not cover every ballot");
}

CandidateMask finalists_voter_partition(VotingRule rule, TieRule tie, const Profile& profile,
                                        const std::vector<std::vector<std::size_t>>& parts) {
  check_voter_partition(profile, parts);
  const CandidateMask all = profile.candidates().all();
  CandidateMask finalists = profile.candidates().none();
  for (const auto& part : parts) finalists |= survivors(tie, winners_among(rule, profile, all, part));
  return finalists;
}

CandidateMask final_round(VotingRule rule, const Profile& profile, const CandidateMask& finalists) {
  return winners_among(rule, profile, finalists);
}

CandidateMask run_two_stage_voter_partition(VotingRule rule, TieRule tie, const Profile& profile,
                                            const std::vector<std::vector<std::size_t>>& parts) {
  return final_round(rule, profile, finalists_voter_partition(rule, tie, profile, parts));
}

CandidateMask run_two_stage_candidate_partition(VotingRule rule, TieRule tie,
                                                const Profile& profile, const CandidateMask& first,
                                                const CandidateMask& second) {
  const std::size_t n = profile.candidates().size();
  if (first.size() != n || second.size() != n) throw InvalidInput("candidate mask has the wrong width");
  if (first.intersects(second) || (first | second).count() != n) {
    throw InvalidInput("candidate parts must partition the candidate set");
  }
  CandidateMask finalists = survivors(tie, winners_among(rule, profile, first)) |
                            survivors(tie, winners_among(rule, profile, second));
  return final_round(rule, profile, finalists);
}

// ---------------------------------------------------------------------------
// WitnessChecker

WitnessChecker::WitnessChecker(const ControlInstance& instance) : instance_(instance) {
  validate(instance);
  const bool pairwise =
      instance.rule == VotingRule::Condorcet || instance.rule == VotingRule::WeakCondorcet;
  if (pairwise) majority_.emplace(instance.profile);
  if (instance.problem == Problem::CCAVG) {
    Profile combined = instance.profile;
    for (const Ballot& b : instance.pool->ballots()) combined.add(b);
    combined_ = std::move(combined);
  }
}

CandidateMask WitnessChecker::subelection_winners(const CandidateMask& among) const {
  if (majority_) {
    return instance_.rule == VotingRule::Condorcet ? majority_->condorcet_winners(among)
                                                   : majority_->weak_condorcet_winners(among);
  }
  return winners_among(instance_.rule, instance_.profile, among);
}

CandidateMask WitnessChecker::final_winners(const CandidateMask& finalists) const {
  if (finalists.none()) return finalists;
  return subelection_winners(finalists);
}

bool WitnessChecker::sole_winner_voter_partition(
    const std::vector<std::vector<std::size_t>>& parts) const {
  const Profile& profile = instance_.profile;
  const CandidateMask all = profile.candidates().all();
  CandidateMask finalists = profile.candidates().none();
  for (const auto& part : parts) {
    finalists |= survivors(instance_.tie, winners_among(instance_.rule, profile, all, part));
  }
  if (!finalists.test(instance_.distinguished)) return false;
  CandidateMask w = final_winners(finalists);
  return w.count() == 1 && w.test(instance_.distinguished);
}

bool WitnessChecker::sole_winner_candidate_partition(const CandidateMask& first,
                                                     const CandidateMask& second) const {
  CandidateMask finalists = survivors(instance_.tie, subelection_winners(first)) |
                            survivors(instance_.tie, subelection_winners(second));
  if (!finalists.test(instance_.distinguished)) return false;
  CandidateMask w = final_winners(finalists);
  return w.count() == 1 && w.test(instance_.distinguished);
}

CandidateMask WitnessChecker::one_stage_winners(const std::vector<std::size_t>& chosen) const {
  const Profile& profile = instance_.profile;
  const CandidateMask all = profile.candidates().all();
  std::vector<std::size_t> voters;
  if (instance_.problem == Problem::CCAVG) {
    voters = all_ballot_ids(profile);
    for (auto id : chosen) voters.push_back(profile.size() + id);
    return winners_among(instance_.rule, *combined_, all, voters);
  }
  std::vector<bool> removed(profile.size(), false);
  for (auto id : chosen) removed[id] = true;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (!removed[i]) voters.push_back(i);
  }
  return winners_among(instance_.rule, profile, all, voters);
}

bool WitnessChecker::sole_winner_group_selection(const std::vector<std::size_t>& chosen) const {
  CandidateMask w = one_stage_winners(chosen);
  return w.count() == 1 && w.test(instance_.distinguished);
}

namespace {

WitnessReport reject(std::string reason) {
  WitnessReport r;
  r.reason = std::move(reason);
  return r;
}

std::string size_diff_reason(std::size_t a, std::size_t b) {
  return "parts of size " + std::to_string(a) + " and " + std::to_string(b) +
         " are not an equipartition";
}

bool balanced(std::size_t a, std::size_t b) { return (a > b ? a - b : b - a) <= 1; }

}  // namespace

WitnessReport WitnessChecker::check(const Witness& witness) const {
  const ControlInstance& inst = instance_;
  const Profile& profile = inst.profile;
  const CandidateIndex p = inst.distinguished;

  if (is_voter_partition_problem(inst.problem)) {
    const auto* vp = std::get_if<VoterPartition>(&witness);
    if (!vp) throw InvalidInput(std::string(to_string(inst.problem)) + " needs a voter partition");
    const std::size_t want = inst.problem == Problem::CCPkV ? static_cast<std::size_t>(inst.k) : 2;
    if (vp->parts.size() != want) {
      return reject("expected " + std::to_string(want) + " parts, got " +
                    std::to_string(vp->parts.size()));
    }
    try {
      check_voter_partition(profile, vp->parts);
    } catch (const InvalidInput& e) {
      return reject(e.what());
    }
    if (inst.problem == Problem::CCEPV && !balanced(vp->parts[0].size(), vp->parts[1].size())) {
      return reject(size_diff_reason(vp->parts[0].size(), vp->parts[1].size()));
    }
    if (inst.problem == Problem::CCPVG) {
      std::vector<int> side(profile.size());
      for (int s = 0; s < 2; ++s) {
        for (auto id : vp->parts[s]) side[id] = s;
      }
      for (const Group& g : collect_groups(inst)) {
        for (auto id : g.ballots) {
          if (side[id] != side[g.ballots.front()]) return reject("group '" + g.label + "' is split");
        }
      }
    }
    WitnessReport r;
    CandidateMask finalists = profile.candidates().none();
    for (const auto& part : vp->parts) {
      finalists |= survivors(inst.tie,
                             winners_among(inst.rule, profile, profile.candidates().all(), part));
    }
    r.finalists = finalists;
    r.winners = final_winners(finalists);
    r.accepted = r.winners->count() == 1 && r.winners->test(p);
    if (!r.accepted) r.reason = "distinguished candidate is not the sole final winner";
    return r;
  }

  if (is_candidate_partition_problem(inst.problem)) {
    const auto* cp = std::get_if<CandidatePartition>(&witness);
    if (!cp) throw InvalidInput(std::string(to_string(inst.problem)) + " needs a candidate partition");
    const std::size_t n = profile.candidates().size();
    if (cp->first.size() != n || cp->second.size() != n) return reject("candidate mask has the wrong width");
    if (cp->first.intersects(cp->second) || (cp->first | cp->second).count() != n) {
      return reject("candidate parts do not partition the candidate set");
    }
    if (inst.problem == Problem::CCREPC && !balanced(cp->first.count(), cp->second.count())) {
      return reject(size_diff_reason(cp->first.count(), cp->second.count()));
    }
    WitnessReport r;
    r.finalists = survivors(inst.tie, subelection_winners(cp->first)) |
                  survivors(inst.tie, subelection_winners(cp->second));
    r.winners = final_winners(*r.finalists);
    r.accepted = r.winners->count() == 1 && r.winners->test(p);
    if (!r.accepted) r.reason = "distinguished candidate is not the sole final winner";
    return r;
  }

  const auto* gs = std::get_if<GroupSelection>(&witness);
  if (!gs) throw InvalidInput(std::string(to_string(inst.problem)) + " needs a group selection");
  const auto groups = collect_groups(inst);
  std::set<std::string_view> picked;
  std::vector<std::size_t> chosen;
  for (const auto& label : gs->groups) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return g.label == label; });
    if (it == groups.end()) return reject("unknown group '" + label + "'");
    if (!picked.insert(label).second) return reject("group '" + label + "' selected twice");
    chosen.insert(chosen.end(), it->ballots.begin(), it->ballots.end());
  }
  if (chosen.size() > inst.limit) {
    return reject("selection holds " + std::to_string(chosen.size()) + " voters, limit is " +
                  std::to_string(inst.limit));
  }
  WitnessReport r;
  r.winners = one_stage_winners(chosen);
  r.accepted = r.winners->count() == 1 && r.winners->test(p);
  if (!r.accepted) r.reason = "distinguished candidate is not the sole winner";
  return r;
}

WitnessReport check_witness(const ControlInstance& instance, const Witness& witness) {
  return WitnessChecker(instance).check(witness);
}

bool verify_witness(const ControlInstance& instance, const Witness& witness) {
  return check_witness(instance, witness).accepted;
}

}  // namespace electctl
