// Plurality control by equipartition of voters under ties-eliminate.
//
// p can be made the unique winner iff some equipartition (V1, V2) has p as
// the unique winner of V1 and V2 either (1) has a unique winner c that p
// beats head to head, (2) has p among its winners, or (3) has at least two
// winners other than p. Plurality outcomes only depend on how many
// top-choice votes of each candidate land in V1, so each case fixes the
// counts of the key candidates, packs every other candidate into V1 as far
// as p's lead allows, and then moves votes back to V2 while V2's condition
// still holds until the sizes balance.

#include <algorithm>
#include <numeric>

#include "electctl/poly_solvers.hpp"

namespace electctl {
namespace {

bool unique_max(const std::vector<int>& counts, CandidateIndex c) {
  for (std::size_t h = 0; h < counts.size(); ++h) {
    if (h != c && counts[h] >= counts[c]) return false;
  }
  return true;
}

bool is_max(const std::vector<int>& counts, CandidateIndex c) {
  return std::all_of(counts.begin(), counts.end(), [&](int x) { return x <= counts[c]; });
}

class EquipartitionSearch {
 public:
  explicit EquipartitionSearch(const ControlInstance& instance)
      : profile_(instance.profile),
        p_(instance.distinguished),
        score_(score_plurality(instance.profile)),
        lo_(profile_.size() / 2),
        hi_((profile_.size() + 1) / 2) {}

  std::optional<VoterPartition> run(SolveStats& stats);

 private:
  // V1 counts for the candidates outside `fixed`: as many as V1 allows
  // (cap_first), then moved to V2 one at a time while V2 stays within
  // cap_second, until |V1| <= ceil(n/2). False if V1 cannot be balanced.
  bool fill_and_balance(std::vector<int>& first, const std::vector<bool>& fixed, int cap_first,
                        int cap_second) const;
  std::vector<int> second_of(const std::vector<int>& first) const;
  VoterPartition materialize(const std::vector<int>& first) const;

  std::optional<VoterPartition> beat_unique_winner(SolveStats& stats) const;
  std::optional<VoterPartition> share_with_p(SolveStats& stats) const;
  std::optional<VoterPartition> tie_in_second(SolveStats& stats) const;

  const Profile& profile_;
  CandidateIndex p_;
  std::vector<int> score_;
  std::size_t lo_;
  std::size_t hi_;
};

bool EquipartitionSearch::fill_and_balance(std::vector<int>& first, const std::vector<bool>& fixed,
                                           int cap_first, int cap_second) const {
  for (std::size_t d = 0; d < first.size(); ++d) {
    if (!fixed[d]) first[d] = std::clamp(cap_first, 0, score_[d]);
  }
  auto size = static_cast<std::size_t>(std::accumulate(first.begin(), first.end(), 0));
  if (size < lo_) return false;
  for (std::size_t d = 0; d < first.size() && size > hi_; ++d) {
    if (fixed[d]) continue;
    while (size > hi_ && first[d] > 0 && score_[d] - first[d] + 1 <= cap_second) {
      --first[d];
      --size;
    }
  }
  return size <= hi_;
}

std::vector<int> EquipartitionSearch::second_of(const std::vector<int>& first) const {
  std::vector<int> second(first.size());
  for (std::size_t h = 0; h < first.size(); ++h) second[h] = score_[h] - first[h];
  return second;
}

VoterPartition EquipartitionSearch::materialize(const std::vector<int>& first) const {
  VoterPartition w{{{}, {}}};
  std::vector<int> placed(first.size(), 0);
  for (std::size_t i = 0; i < profile_.size(); ++i) {
    CandidateIndex top = profile_[i].order().front();
    if (placed[top] < first[top]) {
      ++placed[top];
      w.parts[0].push_back(i);
    } else {
      w.parts[1].push_back(i);
    }
  }
  return w;
}

// Case 1: V2 has a unique winner c and p beats c in their two-way final.
std::optional<VoterPartition> EquipartitionSearch::beat_unique_winner(SolveStats& stats) const {
  const std::size_t m = score_.size();
  const PairwiseMajority majority(profile_);
  for (CandidateIndex c = 0; c < m; ++c) {
    if (c == p_ || majority.margin(p_, c) <= 0) continue;
    for (int kp = 0; kp <= score_[p_]; ++kp) {
      for (int kc = 0; kc <= score_[c]; ++kc) {
        ++stats.cases_examined;
        if (score_[c] - kc >= kp || score_[p_] - kp >= kc) continue;
        std::vector<int> first(m, 0);
        std::vector<bool> fixed(m, false);
        first[p_] = kp;
        first[c] = score_[c] - kc;
        fixed[p_] = fixed[c] = true;
        if (!fill_and_balance(first, fixed, kp - 1, kc - 1)) continue;
        if (unique_max(first, p_) && unique_max(second_of(first), c)) return materialize(first);
      }
    }
  }
  return std::nullopt;
}

// Case 2: p is one of the winners of V2.
std::optional<VoterPartition> EquipartitionSearch::share_with_p(SolveStats& stats) const {
  const std::size_t m = score_.size();
  for (int kp = 0; kp <= score_[p_]; ++kp) {
    ++stats.cases_examined;
    std::vector<int> first(m, 0);
    std::vector<bool> fixed(m, false);
    first[p_] = kp;
    fixed[p_] = true;
    if (!fill_and_balance(first, fixed, kp - 1, score_[p_] - kp)) continue;
    if (unique_max(first, p_) && is_max(second_of(first), p_)) return materialize(first);
  }
  return std::nullopt;
}

// Case 3: two candidates c, c' other than p tie for the lead in V2.
std::optional<VoterPartition> EquipartitionSearch::tie_in_second(SolveStats& stats) const {
  const std::size_t m = score_.size();
  for (CandidateIndex c = 0; c < m; ++c) {
    if (c == p_) continue;
    for (CandidateIndex c2 = c + 1; c2 < m; ++c2) {
      if (c2 == p_) continue;
      for (int kp = 0; kp <= score_[p_]; ++kp) {
        for (int kc = 0; kc <= std::min(score_[c], score_[c2]); ++kc) {
          ++stats.cases_examined;
          if (score_[c] - kc >= kp || score_[c2] - kc >= kp || score_[p_] - kp > kc) continue;
          std::vector<int> first(m, 0);
          std::vector<bool> fixed(m, false);
          first[p_] = kp;
          first[c] = score_[c] - kc;
          first[c2] = score_[c2] - kc;
          fixed[p_] = fixed[c] = fixed[c2] = true;
          if (!fill_and_balance(first, fixed, kp - 1, kc)) continue;
          auto second = second_of(first);
          if (unique_max(first, p_) && is_max(second, c) && is_max(second, c2)) {
            return materialize(first);
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<VoterPartition> EquipartitionSearch::run(SolveStats& stats) {
  if (auto w = beat_unique_winner(stats)) return w;
  if (auto w = share_with_p(stats)) return w;
  return tie_in_second(stats);
}

}  // namespace

Decision solve_plurality_ccepv_te(const ControlInstance& instance) {
  if (instance.problem != Problem::CCEPV || instance.rule != VotingRule::Plurality ||
      instance.tie != TieRule::TE) {
    throw UnsupportedInstance("solve_plurality_ccepv_te needs plurality CCEPV under TE");
  }
  validate(instance);
  Decision d;
  if (auto w = EquipartitionSearch(instance).run(d.stats)) {
    d.answer = Answer::Yes;
    d.witness = std::move(*w);
  }
  return d;
}

}  // namespace electctl
