// Plurality control by partition of voters into k parts under
// ties-eliminate.
//
// Every part is summarized by a guess: either one candidate wins it alone
// with t top-choice votes, or two candidates tie for its lead at t votes
// (possibly with others, possibly t = 0 on an empty part). p's part comes
// first; the remaining k - 1 guesses are an unordered multiset. A guess
// pins entries of the candidate-by-part count matrix and caps the rest, so
// realizability splits into one packing check per candidate. The final
// round only depends on the set of unique part winners.

#include <algorithm>
#include <map>

#include "electctl/poly_solvers.hpp"

namespace electctl {
namespace {

struct PartGuess {
  bool tied = false;
  CandidateIndex first = 0;   // unique winner, or the lower tied candidate
  CandidateIndex second = 0;  // upper tied candidate
  int top = 0;                // their top-choice count in the part

  bool pins(CandidateIndex h) const { return h == first || (tied && h == second); }
  // Largest count allowed for a candidate the guess does not pin.
  int cap() const { return tied ? top : top - 1; }
};

class MultipartitionSearch {
 public:
  MultipartitionSearch(const ControlInstance& instance)
      : profile_(instance.profile),
        p_(instance.distinguished),
        parts_(static_cast<std::size_t>(instance.k)),
        score_(score_plurality(instance.profile)) {
    const std::size_t m = score_.size();
    for (CandidateIndex c = 0; c < m; ++c) {
      for (int t = 0; t <= score_[c]; ++t) menu_.push_back({false, c, c, t});
    }
    for (CandidateIndex a = 0; a < m; ++a) {
      for (CandidateIndex b = a + 1; b < m; ++b) {
        for (int t = 0; t <= std::min(score_[a], score_[b]); ++t) menu_.push_back({true, a, b, t});
      }
    }
  }

  std::optional<VoterPartition> run(SolveStats& stats) {
    stats_ = &stats;
    for (int t = 0; t <= score_[p_]; ++t) {
      guesses_.assign(1, PartGuess{false, p_, p_, t});
      if (extend(0)) return materialize();
    }
    return std::nullopt;
  }

 private:
  // Chooses guesses for parts 2..k with nondecreasing menu positions.
  bool extend(std::size_t from) {
    if (guesses_.size() == parts_) {
      ++stats_->cases_examined;
      return p_wins_final() && realizable();
    }
    for (std::size_t g = from; g < menu_.size(); ++g) {
      guesses_.push_back(menu_[g]);
      if (within_scores() && extend(g)) return true;
      guesses_.pop_back();
    }
    return false;
  }

  bool within_scores() const {
    std::vector<int> pinned(score_.size(), 0);
    for (const auto& g : guesses_) {
      pinned[g.first] += g.top;
      if (g.tied) pinned[g.second] += g.top;
    }
    for (std::size_t h = 0; h < score_.size(); ++h) {
      if (pinned[h] > score_[h]) return false;
    }
    return true;
  }

  bool p_wins_final() {
    CandidateMask finalists = profile_.candidates().none();
    for (const auto& g : guesses_) {
      if (!g.tied) finalists.set(g.first);
    }
    auto [it, inserted] = final_cache_.try_emplace(finalists, false);
    if (inserted) {
      CandidateMask w = winners_among(VotingRule::Plurality, profile_, finalists);
      it->second = w.count() == 1 && w.test(p_);
    }
    return it->second;
  }

  bool realizable() const {
    for (CandidateIndex h = 0; h < score_.size(); ++h) {
      int pinned = 0;
      int room = 0;
      for (const auto& g : guesses_) {
        if (g.pins(h)) {
          pinned += g.top;
        } else if (g.cap() < 0) {
          return false;
        } else {
          room += g.cap();
        }
      }
      if (pinned > score_[h] || score_[h] - pinned > room) return false;
    }
    return true;
  }

  VoterPartition materialize() const {
    const std::size_t m = score_.size();
    // quota[h][i]: top-choice votes of h placed into part i.
    std::vector<std::vector<int>> quota(m, std::vector<int>(parts_, 0));
    for (CandidateIndex h = 0; h < m; ++h) {
      int rest = score_[h];
      for (std::size_t i = 0; i < parts_; ++i) {
        if (guesses_[i].pins(h)) {
          quota[h][i] = guesses_[i].top;
          rest -= guesses_[i].top;
        }
      }
      for (std::size_t i = 0; i < parts_ && rest > 0; ++i) {
        if (guesses_[i].pins(h)) continue;
        int take = std::min(rest, guesses_[i].cap());
        quota[h][i] = take;
        rest -= take;
      }
    }
    VoterPartition w;
    w.parts.assign(parts_, {});
    std::vector<std::size_t> cursor(m, 0);
    for (std::size_t id = 0; id < profile_.size(); ++id) {
      CandidateIndex top = profile_[id].order().front();
      while (quota[top][cursor[top]] == 0) ++cursor[top];
      --quota[top][cursor[top]];
      w.parts[cursor[top]].push_back(id);
    }
    return w;
  }

  const Profile& profile_;
  CandidateIndex p_;
  std::size_t parts_;
  std::vector<int> score_;
  std::vector<PartGuess> menu_;
  std::vector<PartGuess> guesses_;
  std::map<CandidateMask, bool> final_cache_;
  SolveStats* stats_ = nullptr;
};

}  // namespace

Decision solve_plurality_ccpkv_te(const ControlInstance& instance) {
  if (instance.problem != Problem::CCPkV || instance.rule != VotingRule::Plurality ||
      instance.tie != TieRule::TE) {
    throw UnsupportedInstance("solve_plurality_ccpkv_te needs plurality CCPkV under TE");
  }
  validate(instance);
  Decision d;
  if (auto w = MultipartitionSearch(instance).run(d.stats)) {
    d.answer = Answer::Yes;
    d.witness = std::move(*w);
  }
  return d;
}

}  // namespace electctl
