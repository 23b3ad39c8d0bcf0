#include "electctl/elections.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace electctl {

std::vector<std::size_t> members(const CandidateMask& mask) {
  std::vector<std::size_t> out;
  out.reserve(mask.count());
  for (auto i = mask.find_first(); i != CandidateMask::npos; i = mask.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CandidateSet

CandidateSet::CandidateSet(std::vector<Candidate> candidates) : candidates_(std::move(candidates)) {
  std::set<std::string_view> seen_ids;
  std::array<bool, 4> seen_special{};
  for (const Candidate& c : candidates_) {
    if (c.id.empty()) throw InvalidInput("candidate id must be nonempty");
    if (!seen_ids.insert(c.id).second) throw InvalidInput("duplicate candidate id '" + c.id + "'");
    if (c.special_index) {
      int s = *c.special_index;
      if (s < 0 || s > 3) {
        throw InvalidInput("special index of '" + c.id + "' must be in 0..3");
      }
      if (seen_special[s]) {
        throw InvalidInput("special index " + std::to_string(s) + " used twice");
      }
      seen_special[s] = true;
    }
  }
}

CandidateSet CandidateSet::from_ids(const std::vector<std::string>& ids) {
  std::vector<Candidate> cs;
  cs.reserve(ids.size());
  for (const auto& id : ids) cs.push_back({id, std::nullopt});
  return CandidateSet(std::move(cs));
}

std::optional<CandidateIndex> CandidateSet::find(std::string_view id) const {
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    if (candidates_[i].id == id) return i;
  }
  return std::nullopt;
}

CandidateIndex CandidateSet::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw InvalidInput("unknown candidate '" + std::string(id) + "'");
}

std::optional<CandidateIndex> CandidateSet::find_special(int special_index) const {
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    if (candidates_[i].special_index == special_index) return i;
  }
  return std::nullopt;
}

CandidateMask CandidateSet::mask_of(const std::vector<std::string>& ids) const {
  CandidateMask mask = none();
  for (const auto& id : ids) {
    auto i = index_of(id);
    if (mask.test(i)) throw InvalidInput("candidate '" + id + "' listed twice");
    mask.set(i);
  }
  return mask;
}

std::vector<std::string> CandidateSet::ids_of(const CandidateMask& mask) const {
  std::vector<std::string> ids;
  for (auto i : members(mask)) ids.push_back(candidates_.at(i).id);
  return ids;
}

// ---------------------------------------------------------------------------
// Ballot

Ballot Ballot::ranking(std::vector<CandidateIndex> order) {
  Ballot b;
  b.kind_ = BallotKind::LinearOrder;
  b.rank_.assign(order.size(), order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    CandidateIndex c = order[pos];
    if (c >= order.size() || b.rank_[c] != order.size()) {
      throw InvalidInput("ranking must list every candidate exactly once");
    }
    b.rank_[c] = pos;
  }
  b.order_ = std::move(order);
  return b;
}

Ballot Ballot::approval(CandidateMask approved) {
  Ballot b;
  b.kind_ = BallotKind::Approval;
  b.approved_ = std::move(approved);
  return b;
}

Ballot Ballot::approval(std::string_view bits) {
  CandidateMask mask(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      mask.set(i);
    } else if (bits[i] != '0') {
      throw InvalidInput("approval vector must consist of '0' and '1'");
    }
  }
  return approval(std::move(mask));
}

std::size_t Ballot::candidate_count() const {
  return kind_ == BallotKind::LinearOrder ? order_.size() : approved_.size();
}

CandidateIndex Ballot::top_among(const CandidateMask& among) const {
  for (CandidateIndex c : order_) {
    if (among.test(c)) return c;
  }
  throw InvalidInput("top_among: empty candidate subset");
}

bool operator<(const Ballot& a, const Ballot& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.order_ != b.order_) return a.order_ < b.order_;
  return a.approved_ < b.approved_;
}

// ---------------------------------------------------------------------------
// Profile

Profile::Profile(CandidateSet candidates, BallotKind kind, std::vector<Ballot> ballots)
    : candidates_(std::move(candidates)), kind_(kind) {
  ballots_.reserve(ballots.size());
  for (auto& b : ballots) add(std::move(b));
}

void Profile::check_ballot(const Ballot& ballot) const {
  if (ballot.kind() != kind_) throw InvalidInput("ballot kind does not match the profile");
  if (ballot.candidate_count() != candidates_.size()) {
    throw InvalidInput("ballot covers " + std::to_string(ballot.candidate_count()) +
                       " candidates, profile has " + std::to_string(candidates_.size()));
  }
}

void Profile::add(Ballot ballot) {
  check_ballot(ballot);
  ballots_.push_back(std::move(ballot));
}

bool equivalent(const Profile& a, const Profile& b) {
  if (a.candidates() != b.candidates() || a.kind() != b.kind() || a.size() != b.size()) {
    return false;
  }
  auto x = a.ballots();
  auto y = b.ballots();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// ---------------------------------------------------------------------------
// Rules

BallotKind required_ballot_kind(VotingRule rule) {
  return (rule == VotingRule::Approval || rule == VotingRule::SystemE) ? BallotKind::Approval
                                                                        : BallotKind::LinearOrder;
}

std::string_view to_string(VotingRule rule) {
  switch (rule) {
    case VotingRule::Plurality: return "plurality";
    case VotingRule::Approval: return "approval";
    case VotingRule::Condorcet: return "condorcet";
    case VotingRule::WeakCondorcet: return "weakcondorcet";
    case VotingRule::SystemE: return "system-e";
  }
  return "?";
}

std::optional<VotingRule> parse_voting_rule(std::string_view name) {
  for (auto r : {VotingRule::Plurality, VotingRule::Approval, VotingRule::Condorcet,
                 VotingRule::WeakCondorcet, VotingRule::SystemE}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

Profile restrict_profile(const Profile& profile, const CandidateMask& keep) {
  const CandidateSet& cs = profile.candidates();
  if (keep.size() != cs.size()) throw InvalidInput("subset mask has the wrong width");
  if (keep.none()) throw InvalidInput("cannot restrict to an empty candidate set");

  std::vector<Candidate> kept;
  std::vector<std::size_t> new_index(cs.size(), cs.size());
  for (auto i : members(keep)) {
    new_index[i] = kept.size();
    kept.push_back(cs[i]);
  }
  Profile out(CandidateSet(std::move(kept)), profile.kind());
  for (const Ballot& b : profile.ballots()) {
    if (b.kind() == BallotKind::LinearOrder) {
      std::vector<CandidateIndex> order;
      order.reserve(keep.count());
      for (CandidateIndex c : b.order()) {
        if (keep.test(c)) order.push_back(new_index[c]);
      }
      out.add(Ballot::ranking(std::move(order)));
    } else {
      CandidateMask approved(keep.count());
      for (auto i : members(keep)) {
        if (b.approves(i)) approved.set(new_index[i]);
      }
      out.add(Ballot::approval(std::move(approved)));
    }
  }
  return out;
}

namespace {

void require_kind(const Profile& profile, BallotKind kind, std::string_view what) {
  if (profile.kind() != kind) {
    throw InvalidInput(std::string(what) + (kind == BallotKind::Approval
                                                ? " needs approval ballots"
                                                : " needs ranked ballots"));
  }
}

CandidateMask argmax(const std::vector<int>& score, const CandidateMask& among) {
  CandidateMask out(among.size());
  int best = -1;
  for (auto c : members(among)) {
    if (score[c] > best) {
      best = score[c];
      out.reset();
    }
    if (score[c] == best) out.set(c);
  }
  return out;
}

std::vector<int> plurality_counts(const Profile& profile, const CandidateMask& among,
                                  std::span<const std::size_t> ballot_ids) {
  std::vector<int> score(profile.candidates().size(), 0);
  if (among.none()) return score;
  for (auto id : ballot_ids) ++score[profile[id].top_among(among)];
  return score;
}

std::vector<int> approval_counts(const Profile& profile, std::span<const std::size_t> ballot_ids) {
  std::vector<int> score(profile.candidates().size(), 0);
  for (auto id : ballot_ids) {
    const auto& a = profile[id].approvals();
    for (auto c = a.find_first(); c != CandidateMask::npos; c = a.find_next(c)) ++score[c];
  }
  return score;
}

CandidateMask system_e_winners(const Profile& profile, const CandidateMask& among,
                               std::span<const std::size_t> ballot_ids) {
  const CandidateSet& cs = profile.candidates();
  CandidateMask out(cs.size());
  CandidateMask ordinary = among;
  std::array<bool, 4> present{};
  for (auto c : members(among)) {
    if (auto s = cs[c].special_index) {
      present[*s] = true;
      ordinary.reset(c);
    }
  }
  auto approval_winners = [&] {
    if (ordinary.none()) return CandidateMask(cs.size());
    return argmax(approval_counts(profile, ballot_ids), ordinary);
  };

  if (among.count() <= 4) {
    const bool even_pair = present[0] && present[2] && !present[1] && !present[3];
    const bool odd_pair = present[1] && present[3] && !present[0] && !present[2];
    if (even_pair || odd_pair) out = approval_winners();
    return out;
  }
  if (!(present[0] && present[1] && present[2] && present[3])) return out;

  const int residue = static_cast<int>(ballot_ids.size() % 4);
  out.set(*cs.find_special(residue));
  CandidateMask aw = approval_winners();
  if (aw.count() == 1) out |= aw;
  return out;
}

}  // namespace

std::vector<std::size_t> all_ballot_ids(const Profile& profile) {
  std::vector<std::size_t> ids(profile.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return ids;
}

std::vector<int> score_plurality(const Profile& profile) {
  require_kind(profile, BallotKind::LinearOrder, "plurality");
  return plurality_counts(profile, profile.candidates().all(), all_ballot_ids(profile));
}

std::vector<int> score_approval(const Profile& profile) {
  require_kind(profile, BallotKind::Approval, "approval");
  return approval_counts(profile, all_ballot_ids(profile));
}

int majority_margin(const Profile& profile, CandidateIndex a, CandidateIndex b) {
  require_kind(profile, BallotKind::LinearOrder, "majority margin");
  if (a == b) throw InvalidInput("majority margin of a candidate against itself");
  if (a >= profile.candidates().size() || b >= profile.candidates().size()) {
    throw InvalidInput("majority margin: candidate index out of range");
  }
  int margin = 0;
  for (const Ballot& ballot : profile.ballots()) margin += ballot.prefers(a, b) ? 1 : -1;
  return margin;
}

PairwiseMajority::PairwiseMajority(const Profile& profile, std::span<const std::size_t> ballot_ids) {
  build(profile, ballot_ids);
}

PairwiseMajority::PairwiseMajority(const Profile& profile) {
  build(profile, all_ballot_ids(profile));
}

void PairwiseMajority::build(const Profile& profile, std::span<const std::size_t> ballot_ids) {
  require_kind(profile, BallotKind::LinearOrder, "pairwise majority");
  n_ = profile.candidates().size();
  margins_.assign(n_ * n_, 0);
  for (auto id : ballot_ids) {
    auto order = profile[id].order();
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        ++margins_[order[i] * n_ + order[j]];
        --margins_[order[j] * n_ + order[i]];
      }
    }
  }
  beats_.assign(n_, CandidateMask(n_));
  ties_or_beats_.assign(n_, CandidateMask(n_));
  for (std::size_t a = 0; a < n_; ++a) {
    beats_[a].set(a);
    ties_or_beats_[a].set(a);
    for (std::size_t b = 0; b < n_; ++b) {
      if (a == b) continue;
      if (margin(a, b) > 0) beats_[a].set(b);
      if (margin(a, b) >= 0) ties_or_beats_[a].set(b);
    }
  }
}

CandidateMask PairwiseMajority::condorcet_winners(const CandidateMask& among) const {
  CandidateMask out(n_);
  for (auto a = among.find_first(); a != CandidateMask::npos; a = among.find_next(a)) {
    if (among.is_subset_of(beats_[a])) out.set(a);
  }
  return out;
}

CandidateMask PairwiseMajority::weak_condorcet_winners(const CandidateMask& among) const {
  CandidateMask out(n_);
  for (auto a = among.find_first(); a != CandidateMask::npos; a = among.find_next(a)) {
    if (among.is_subset_of(ties_or_beats_[a])) out.set(a);
  }
  return out;
}

CandidateMask winners_among(VotingRule rule, const Profile& profile, const CandidateMask& among,
                            std::span<const std::size_t> ballot_ids) {
  require_kind(profile, required_ballot_kind(rule), to_string(rule));
  if (among.size() != profile.candidates().size()) {
    throw InvalidInput("candidate mask has the wrong width");
  }
  for (auto id : ballot_ids) {
    if (id >= profile.size()) throw InvalidInput("ballot index out of range");
  }
  if (among.none()) return among;

  switch (rule) {
    case VotingRule::Plurality:
      return argmax(plurality_counts(profile, among, ballot_ids), among);
    case VotingRule::Approval:
      return argmax(approval_counts(profile, ballot_ids), among);
    case VotingRule::Condorcet:
      return PairwiseMajority(profile, ballot_ids).condorcet_winners(among);
    case VotingRule::WeakCondorcet:
      return PairwiseMajority(profile, ballot_ids).weak_condorcet_winners(among);
    case VotingRule::SystemE:
      return system_e_winners(profile, among, ballot_ids);
  }
  return CandidateMask(among.size());
}

CandidateMask winners_among(VotingRule rule, const Profile& profile, const CandidateMask& among) {
  return winners_among(rule, profile, among, all_ballot_ids(profile));
}

CandidateMask winners(VotingRule rule, const Profile& profile) {
  return winners_among(rule, profile, profile.candidates().all());
}

}  // namespace electctl
