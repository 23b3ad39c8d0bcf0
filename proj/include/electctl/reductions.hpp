// Instance constructions for the hardness reductions, McGarvey profile
// synthesis, and brute-force solvers for the source problems.

#ifndef ELECTCTL_REDUCTIONS_HPP_
#define ELECTCTL_REDUCTIONS_HPP_

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "electctl/two_stage.hpp"

namespace electctl {

// ---------------------------------------------------------------------------
// McGarvey

enum class PairOutcome { Tie, FirstBeatsSecond, SecondBeatsFirst };

// Prescribed head-to-head result for every unordered pair of candidates;
// unset pairs are ties.
class MajoritySpec {
 public:
  explicit MajoritySpec(CandidateSet candidates);

  const CandidateSet& candidates() const { return candidates_; }
  void set_defeats(CandidateIndex winner, CandidateIndex loser);
  void set_tie(CandidateIndex a, CandidateIndex b);
  PairOutcome outcome(CandidateIndex a, CandidateIndex b) const;
  bool defeats(CandidateIndex a, CandidateIndex b) const {
    return outcome(a, b) == PairOutcome::FirstBeatsSecond;
  }
  // Strict pairs as (winner, loser), ordered by (min index, max index).
  std::vector<std::pair<CandidateIndex, CandidateIndex>> strict_pairs() const;

 private:
  CandidateSet candidates_;
  // beats_[a * n + b]: a must defeat b.
  std::vector<bool> beats_;
};

// Two ballots per strict pair (a beats b): a > b > rest, and
// reverse(rest) > a > b, with rest in candidate order. Every strict pair
// gets margin +2, every other pair margin 0.
Profile mcgarvey_profile(const MajoritySpec& spec);

// ---------------------------------------------------------------------------
// Cubic vertex cover -> weakCondorcet-CCREPC-TP

struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// 3-regular simple graph with a cover-size target 1 <= k <= n.
struct CubicGraphVC {
  Graph graph;
  std::size_t k = 0;
};

void validate(const CubicGraphVC& g);

Graph complete_graph_k4();
Graph complete_bipartite_k33();

struct VertexCoverReduction {
  ControlInstance instance;
  std::vector<CandidateIndex> vertex_candidates;  // by vertex
  std::vector<CandidateIndex> edge_candidates;    // by edge
  std::vector<CandidateIndex> dummy_candidates;
};

// Candidates p, v0.., e0.., d0.. (|D| = n/2 + 2k - 1). Every edge defeats p,
// p defeats every vertex and dummy, both endpoints defeat their edge, and
// all other pairs tie.
VertexCoverReduction cubic_vc_to_weakcondorcet_ccrepc_tp(const CubicGraphVC& g);

// The witness partition built from a vertex cover of size exactly k.
CandidatePartition vc_forward_witness(const VertexCoverReduction& reduction,
                                      const std::vector<std::size_t>& cover);

// Vertices on the side without p. Throws InvalidInput unless the witness
// verifies.
std::vector<std::size_t> pull_back_vc_witness(const VertexCoverReduction& reduction,
                                              const CandidatePartition& witness);

bool is_vertex_cover(const Graph& g, const std::vector<std::size_t>& cover);

// ---------------------------------------------------------------------------
// X3C -> Plurality-CCPVG-TE

// Base set {1..3m}; every set lists three distinct base elements.
struct X3CInstance {
  std::size_t m = 0;
  std::vector<std::array<std::size_t, 3>> sets;
};

// Requires m > 1 and n > m + 1.
void validate(const X3CInstance& x);

struct X3CReduction {
  ControlInstance instance;
  CandidateIndex c = 0, d = 0, e = 0;
  std::vector<CandidateIndex> base_candidates;  // b_j for j = 1..3m at j - 1
};

// Candidates p, c, d, e, b1..b3m with groups G1..Gn (one per set), GB, Gc
// and Gd. Candidate sets inside a ballot are listed by ascending id.
X3CReduction x3c_to_plurality_ccpvg_te(const X3CInstance& x);

// The witness partition built from an exact cover (indices into x.sets).
VoterPartition x3c_forward_witness(const X3CReduction& reduction, const std::vector<std::size_t>& cover);

// ---------------------------------------------------------------------------
// Approval-CCPV-TE -> E-CCPV-TP

// Adds special candidates "0".."3" that nobody approves, plus two empty
// ballots for even |V| or one for odd |V|.
ControlInstance approval_ccpv_te_to_e_ccpv_tp(const ControlInstance& source);

// ---------------------------------------------------------------------------
// Source-problem solvers

inline constexpr std::size_t kBruteForceLimit = 20;

// Exact cover by subset enumeration; at most kBruteForceLimit sets.
bool solve_x3c_bruteforce(const X3CInstance& x);
// Cover of size <= k by subset enumeration; at most kBruteForceLimit vertices.
bool solve_vc_bruteforce(const Graph& g, std::size_t k);

}  // namespace electctl

#endif  // ELECTCTL_REDUCTIONS_HPP_
