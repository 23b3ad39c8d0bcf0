// Two-stage partition elections, control instances and witness checking.

#ifndef ELECTCTL_TWO_STAGE_HPP_
#define ELECTCTL_TWO_STAGE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "electctl/elections.hpp"

namespace electctl {

// TE: only a unique subelection winner moves on. TP: every winner moves on.
enum class TieRule { TE, TP };

enum class Problem { CCPV, CCEPV, CCRPC, CCREPC, CCPkV, CCPVG, CCDVG, CCAVG };

std::string_view to_string(TieRule tie);
std::string_view to_string(Problem problem);
std::optional<TieRule> parse_tie_rule(std::string_view name);
std::optional<Problem> parse_problem(std::string_view name);

bool is_voter_partition_problem(Problem problem);      // CCPV, CCEPV, CCPkV, CCPVG
bool is_candidate_partition_problem(Problem problem);  // CCRPC, CCREPC
bool is_group_selection_problem(Problem problem);      // CCDVG, CCAVG
bool uses_tie_rule(Problem problem);

struct ControlInstance {
  VotingRule rule = VotingRule::Plurality;
  Profile profile;
  CandidateIndex distinguished = 0;
  Problem problem = Problem::CCPV;
  TieRule tie = TieRule::TE;
  // Number of parts, CCPkV only.
  int k = 2;
  // Bound on the number of added/deleted voters, CCDVG/CCAVG only.
  std::size_t limit = 0;
  // Group label per ballot of `profile` (CCPVG, CCDVG) or of `pool` (CCAVG).
  std::vector<std::string> groups;
  // Potential additional voters, CCAVG only.
  std::optional<Profile> pool;

  friend bool operator==(const ControlInstance&, const ControlInstance&) = default;
};

// Throws InvalidInput when the instance breaks a structural invariant.
void validate(const ControlInstance& instance);

// The ballots available to group selection: V for CCDVG, W for CCAVG.
const Profile& group_carrier(const ControlInstance& instance);

// Distinct labels in order of first appearance, with their ballot indices.
struct Group {
  std::string label;
  std::vector<std::size_t> ballots;
};
std::vector<Group> collect_groups(const ControlInstance& instance);

struct VoterPartition {
  std::vector<std::vector<std::size_t>> parts;
  friend bool operator==(const VoterPartition&, const VoterPartition&) = default;
};

struct CandidatePartition {
  CandidateMask first;
  CandidateMask second;
  friend bool operator==(const CandidatePartition&, const CandidatePartition&) = default;
};

struct GroupSelection {
  std::vector<std::string> groups;
  friend bool operator==(const GroupSelection&, const GroupSelection&) = default;
};

using Witness = std::variant<VoterPartition, CandidatePartition, GroupSelection>;

enum class Answer { Yes, No, Unknown };
std::string_view to_string(Answer answer);

struct SolveStats {
  std::uint64_t cases_examined = 0;
  std::uint64_t partitions_enumerated = 0;
};

struct Decision {
  Answer answer = Answer::No;
  std::optional<Witness> witness;  // present iff answer == Yes
  SolveStats stats;
};

// Subelection survivors under the tie rule.
CandidateMask survivors(TieRule tie, const CandidateMask& subelection_winners);

// Throws InvalidInput unless `parts` are disjoint, in range, and cover every
// ballot of the profile. Empty parts are allowed.
void check_voter_partition(const Profile& profile,
                           const std::vector<std::vector<std::size_t>>& parts);

CandidateMask finalists_voter_partition(VotingRule rule, TieRule tie, const Profile& profile,
                                        const std::vector<std::vector<std::size_t>>& parts);

CandidateMask run_two_stage_voter_partition(VotingRule rule, TieRule tie, const Profile& profile,
                                            const std::vector<std::vector<std::size_t>>& parts);

CandidateMask run_two_stage_candidate_partition(VotingRule rule, TieRule tie,
                                                const Profile& profile, const CandidateMask& first,
                                                const CandidateMask& second);

// Second stage: the finalists compete in one election over every ballot.
CandidateMask final_round(VotingRule rule, const Profile& profile, const CandidateMask& finalists);

// Audit trail of a witness check.
struct WitnessReport {
  bool accepted = false;
  std::string reason;  // why it was rejected; empty when accepted
  std::optional<CandidateMask> finalists;
  std::optional<CandidateMask> winners;
};

// Throws InvalidInput when the witness type does not fit the problem family.
WitnessReport check_witness(const ControlInstance& instance, const Witness& witness);
bool verify_witness(const ControlInstance& instance, const Witness& witness);

// Reusable evaluator for one instance: caches the all-voter pairwise
// majority table and the combined V+W profile used by group selection.
class WitnessChecker {
 public:
  explicit WitnessChecker(const ControlInstance& instance);

  WitnessReport check(const Witness& witness) const;

  bool sole_winner_voter_partition(const std::vector<std::vector<std::size_t>>& parts) const;
  bool sole_winner_candidate_partition(const CandidateMask& first,
                                       const CandidateMask& second) const;
  // Group problems: `chosen` lists ballot indices of the carrier profile.
  bool sole_winner_group_selection(const std::vector<std::size_t>& chosen) const;

 private:
  CandidateMask subelection_winners(const CandidateMask& among) const;
  CandidateMask final_winners(const CandidateMask& finalists) const;
  CandidateMask one_stage_winners(const std::vector<std::size_t>& chosen) const;

  const ControlInstance& instance_;
  std::optional<PairwiseMajority> majority_;
  std::optional<Profile> combined_;  // V followed by W, CCAVG only
};

}  // namespace electctl

#endif  // ELECTCTL_TWO_STAGE_HPP_
