#include "electctl/reductions.hpp"

namespace electctl {

MajoritySpec::MajoritySpec(CandidateSet candidates)
    : candidates_(std::move(candidates)), beats_(candidates_.size() * candidates_.size(), false) {}

void MajoritySpec::set_defeats(CandidateIndex winner, CandidateIndex loser) {
  const std::size_t n = candidates_.size();
  if (winner >= n || loser >= n || winner == loser) {
    throw InvalidInput("majority spec: bad candidate pair");
  }
  beats_[winner * n + loser] = true;
  beats_[loser * n + winner] = false;
}

void MajoritySpec::set_tie(CandidateIndex a, CandidateIndex b) {
  const std::size_t n = candidates_.size();
  if (a >= n || b >= n || a == b) throw InvalidInput("majority spec: bad candidate pair");
  beats_[a * n + b] = false;
  beats_[b * n + a] = false;
}

PairOutcome MajoritySpec::outcome(CandidateIndex a, CandidateIndex b) const {
  const std::size_t n = candidates_.size();
  if (beats_.at(a * n + b)) return PairOutcome::FirstBeatsSecond;
  if (beats_.at(b * n + a)) return PairOutcome::SecondBeatsFirst;
  return PairOutcome::Tie;
}

std::vector<std::pair<CandidateIndex, CandidateIndex>> MajoritySpec::strict_pairs() const {
  std::vector<std::pair<CandidateIndex, CandidateIndex>> out;
  const std::size_t n = candidates_.size();
  for (CandidateIndex a = 0; a < n; ++a) {
    for (CandidateIndex b = a + 1; b < n; ++b) {
      switch (outcome(a, b)) {
        case PairOutcome::FirstBeatsSecond: out.emplace_back(a, b); break;
        case PairOutcome::SecondBeatsFirst: out.emplace_back(b, a); break;
        case PairOutcome::Tie: break;
      }
    }
  }
  return out;
}

Profile mcgarvey_profile(const MajoritySpec& spec) {
  const std::size_t n = spec.candidates().size();
  const auto pairs = spec.strict_pairs();
  if (!pairs.empty() && n < 3) {
    throw InvalidInput("McGarvey construction needs at least 3 candidates for a strict pair");
  }
  Profile profile(spec.candidates(), BallotKind::LinearOrder);
  for (auto [winner, loser] : pairs) {
    std::vector<CandidateIndex> rest;
    for (CandidateIndex c = 0; c < n; ++c) {
      if (c != winner && c != loser) rest.push_back(c);
    }
    std::vector<CandidateIndex> ahead{winner, loser};
    ahead.insert(ahead.end(), rest.begin(), rest.end());
    std::vector<CandidateIndex> behind(rest.rbegin(), rest.rend());
    behind.push_back(winner);
    behind.push_back(loser);
    profile.add(Ballot::ranking(std::move(ahead)));
    profile.add(Ballot::ranking(std::move(behind)));
  }
  return profile;
}

}  // namespace electctl
