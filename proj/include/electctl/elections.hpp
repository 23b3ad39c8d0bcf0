// Candidates, ballots, profiles and single-stage winner determination.
//
// Every candidate is addressed by its index in the profile's CandidateSet.
// Candidate subsets are bitsets over those indices, so winners of a
// subelection are always reported relative to the original election.

#ifndef ELECTCTL_ELECTIONS_HPP_
#define ELECTCTL_ELECTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace electctl {

// Thrown for malformed input: bad candidate sets, ballots, instances.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using CandidateIndex = std::size_t;
using CandidateMask = boost::dynamic_bitset<std::uint64_t>;

// Indices of the set bits, ascending.
std::vector<std::size_t> members(const CandidateMask& mask);

struct Candidate {
  std::string id;
  // Tag 0..3 for the special candidates of system E.
  std::optional<int> special_index;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

class CandidateSet {
 public:
  CandidateSet() = default;
  explicit CandidateSet(std::vector<Candidate> candidates);

  static CandidateSet from_ids(const std::vector<std::string>& ids);

  std::size_t size() const { return candidates_.size(); }
  bool empty() const { return candidates_.empty(); }
  const Candidate& operator[](CandidateIndex i) const { return candidates_.at(i); }
  auto begin() const { return candidates_.begin(); }
  auto end() const { return candidates_.end(); }

  std::optional<CandidateIndex> find(std::string_view id) const;
  // Throws InvalidInput for an unknown id.
  CandidateIndex index_of(std::string_view id) const;
  std::optional<CandidateIndex> find_special(int special_index) const;

  CandidateMask all() const { return CandidateMask(size()).set(); }
  CandidateMask none() const { return CandidateMask(size()); }
  CandidateMask mask_of(const std::vector<std::string>& ids) const;
  std::vector<std::string> ids_of(const CandidateMask& mask) const;

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

 private:
  std::vector<Candidate> candidates_;
};

enum class BallotKind { LinearOrder, Approval };

// Either a strict ranking of all candidates or a 0/1 approval vector.
class Ballot {
 public:
  static Ballot ranking(std::vector<CandidateIndex> order);
  static Ballot approval(CandidateMask approved);
  // Approval ballot from a string of '0'/'1' characters in candidate order.
  static Ballot approval(std::string_view bits);

  BallotKind kind() const { return kind_; }
  std::size_t candidate_count() const;

  std::span<const CandidateIndex> order() const { return order_; }
  std::size_t rank_of(CandidateIndex c) const { return rank_.at(c); }
  bool prefers(CandidateIndex a, CandidateIndex b) const { return rank_.at(a) < rank_.at(b); }
  // Highest-ranked member of `among`; `among` must be nonempty.
  CandidateIndex top_among(const CandidateMask& among) const;

  const CandidateMask& approvals() const { return approved_; }
  bool approves(CandidateIndex c) const { return approved_.test(c); }

  friend bool operator==(const Ballot& a, const Ballot& b) {
    return a.kind_ == b.kind_ && a.order_ == b.order_ && a.approved_ == b.approved_;
  }
  friend bool operator<(const Ballot& a, const Ballot& b);

 private:
  BallotKind kind_ = BallotKind::LinearOrder;
  std::vector<CandidateIndex> order_;
  std::vector<std::size_t> rank_;
  CandidateMask approved_;
};

class Profile {
 public:
  Profile() = default;
  Profile(CandidateSet candidates, BallotKind kind, std::vector<Ballot> ballots = {});

  const CandidateSet& candidates() const { return candidates_; }
  BallotKind kind() const { return kind_; }
  const std::vector<Ballot>& ballots() const { return ballots_; }
  std::size_t size() const { return ballots_.size(); }
  const Ballot& operator[](std::size_t i) const { return ballots_.at(i); }

  // Throws InvalidInput when the ballot does not fit this profile.
  void add(Ballot ballot);
  void check_ballot(const Ballot& ballot) const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  CandidateSet candidates_;
  BallotKind kind_ = BallotKind::LinearOrder;
  std::vector<Ballot> ballots_;
};

// Same candidates and the same ballot multiset.
bool equivalent(const Profile& a, const Profile& b);

enum class VotingRule { Plurality, Approval, Condorcet, WeakCondorcet, SystemE };

BallotKind required_ballot_kind(VotingRule rule);
std::string_view to_string(VotingRule rule);
std::optional<VotingRule> parse_voting_rule(std::string_view name);

// Projects the profile onto `keep`; the result lists the kept candidates in
// their original order.
Profile restrict_profile(const Profile& profile, const CandidateMask& keep);

std::vector<int> score_plurality(const Profile& profile);
std::vector<int> score_approval(const Profile& profile);

// (#ballots ranking a above b) - (#ballots ranking b above a).
int majority_margin(const Profile& profile, CandidateIndex a, CandidateIndex b);

// Pairwise majority relation of a fixed set of ballots. Restricting the
// candidate set never changes a pairwise margin, so one table serves every
// candidate subelection held with these ballots.
class PairwiseMajority {
 public:
  PairwiseMajority(const Profile& profile, std::span<const std::size_t> ballot_ids);
  explicit PairwiseMajority(const Profile& profile);

  int margin(CandidateIndex a, CandidateIndex b) const { return margins_[a * n_ + b]; }
  CandidateMask condorcet_winners(const CandidateMask& among) const;
  CandidateMask weak_condorcet_winners(const CandidateMask& among) const;

 private:
  void build(const Profile& profile, std::span<const std::size_t> ballot_ids);

  std::size_t n_ = 0;
  std::vector<int> margins_;
  // beats_[a]: a itself plus every b with margin(a, b) > 0.
  std::vector<CandidateMask> beats_;
  // ties_or_beats_[a]: a itself plus every b with margin(a, b) >= 0.
  std::vector<CandidateMask> ties_or_beats_;
};

// Winners of the full election.
CandidateMask winners(VotingRule rule, const Profile& profile);

// Winners of the subelection over candidates `among`, counting only the
// ballots listed in `ballot_ids` (repeats not allowed). Reported as a mask
// over the profile's full candidate set.
CandidateMask winners_among(VotingRule rule, const Profile& profile, const CandidateMask& among,
                            std::span<const std::size_t> ballot_ids);
CandidateMask winners_among(VotingRule rule, const Profile& profile, const CandidateMask& among);

std::vector<std::size_t> all_ballot_ids(const Profile& profile);

}  // namespace electctl

#endif  // ELECTCTL_ELECTIONS_HPP_
