#include <gtest/gtest.h>

#include <map>
#include <random>

#include "electctl/exact_oracle.hpp"
#include "electctl/generators.hpp"
#include "electctl/reductions.hpp"
#include "support/builders.hpp"
#include "support/naive.hpp"

using namespace electctl;
using namespace testing_support;

namespace {

X3CInstance with_cover() { return {2, {{1, 2, 3}, {4, 5, 6}, {1, 4, 5}, {2, 3, 6}}}; }
X3CInstance without_cover() { return {2, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}}}; }

std::map<std::string, int> scores_by_id(const Profile& v) {
  std::map<std::string, int> out;
  const auto s = score_plurality(v);
  for (std::size_t c = 0; c < s.size(); ++c) out[v.candidates()[c].id] = s[c];
  return out;
}

}  // namespace

TEST(McGarvey, SinglePair) {
  const CandidateSet cs = CandidateSet::from_ids({"a", "b", "c"});
  MajoritySpec spec(cs);
  spec.set_defeats(0, 1);
  const Profile v = mcgarvey_profile(spec);
  EXPECT_EQ(v.size(), 2u);
  EXPECT_EQ(majority_margin(v, 0, 1), 2);
  EXPECT_EQ(majority_margin(v, 0, 2), 0);
  EXPECT_EQ(majority_margin(v, 1, 2), 0);
}

TEST(McGarvey, EmptySpec) {
  const Profile v = mcgarvey_profile(MajoritySpec(CandidateSet::from_ids({"a", "b"})));
  EXPECT_EQ(v.size(), 0u);
  EXPECT_EQ(majority_margin(v, 0, 1), 0);
}

TEST(McGarvey, NeedsThreeCandidates) {
  MajoritySpec spec(CandidateSet::from_ids({"a", "b"}));
  spec.set_defeats(1, 0);
  EXPECT_THROW(mcgarvey_profile(spec), InvalidInput);
}

TEST(McGarvey, RandomSpecsExactMargins) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + trial % 5;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("c" + std::to_string(i));
    MajoritySpec spec(CandidateSet::from_ids(ids));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        switch (rng() % 3) {
          case 0: spec.set_defeats(a, b); break;
          case 1: spec.set_defeats(b, a); break;
          default: break;
        }
      }
    }
    const Profile v = mcgarvey_profile(spec);
    EXPECT_EQ(v.size(), 2 * spec.strict_pairs().size());
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        const int want = spec.defeats(a, b) ? 2 : spec.defeats(b, a) ? -2 : 0;
        EXPECT_EQ(majority_margin(v, a, b), want);
      }
    }
  }
}

TEST(CubicVC, RejectsNonCubic) {
  EXPECT_THROW(cubic_vc_to_weakcondorcet_ccrepc_tp({{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}, 2}), InvalidInput);
  EXPECT_THROW(cubic_vc_to_weakcondorcet_ccrepc_tp({complete_graph_k4(), 0}), InvalidInput);
}

TEST(CubicVC, K4Sizes) {
  const auto r = cubic_vc_to_weakcondorcet_ccrepc_tp({complete_graph_k4(), 3});
  EXPECT_EQ(r.instance.profile.candidates().size(), 18u);
  EXPECT_EQ(r.dummy_candidates.size(), 7u);
  EXPECT_EQ(r.instance.problem, Problem::CCREPC);
  EXPECT_EQ(r.instance.rule, VotingRule::WeakCondorcet);
  EXPECT_EQ(r.instance.tie, TieRule::TP);
  // Strict pairs: |E| (edge over p) + |V| + |D| (p over them) + 2|E| (endpoints).
  EXPECT_EQ(r.instance.profile.size(), 2u * (6 + 4 + 7 + 12));
}

TEST(CubicVC, K4MarginsMatchConstruction) {
  const auto r = cubic_vc_to_weakcondorcet_ccrepc_tp({complete_graph_k4(), 3});
  const Profile& v = r.instance.profile;
  const auto g = complete_graph_k4();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto ec = r.edge_candidates[e];
    EXPECT_EQ(majority_margin(v, ec, 0), 2);
    EXPECT_EQ(majority_margin(v, r.vertex_candidates[g.edges[e].first], ec), 2);
    EXPECT_EQ(majority_margin(v, r.vertex_candidates[g.edges[e].second], ec), 2);
  }
  for (auto c : r.vertex_candidates) EXPECT_EQ(majority_margin(v, 0, c), 2);
  for (auto c : r.dummy_candidates) EXPECT_EQ(majority_margin(v, 0, c), 2);
  EXPECT_EQ(majority_margin(v, r.vertex_candidates[0], r.vertex_candidates[1]), 0);
  EXPECT_EQ(majority_margin(v, r.edge_candidates[0], r.dummy_candidates[0]), 0);
}

TEST(CubicVC, K4DecisionsMatchSourceAndPullBack) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto r = cubic_vc_to_weakcondorcet_ccrepc_tp({complete_graph_k4(), k});
    const Decision d = oracle_solve(r.instance);
    const bool source = naive::vertex_cover(complete_graph_k4(), k);
    EXPECT_EQ(d.answer == Answer::Yes, source) << k;
    EXPECT_EQ(solve_vc_bruteforce(complete_graph_k4(), k), source);
    if (d.witness) {
      const auto cover = pull_back_vc_witness(r, std::get<CandidatePartition>(*d.witness));
      EXPECT_TRUE(is_vertex_cover(complete_graph_k4(), cover));
      EXPECT_LE(cover.size(), k);
    }
  }
}

TEST(CubicVC, ForwardWitnessPullsBackToItself) {
  const auto r = cubic_vc_to_weakcondorcet_ccrepc_tp({complete_graph_k4(), 3});
  const auto w = vc_forward_witness(r, {1, 2, 3});
  EXPECT_TRUE(verify_witness(r.instance, w));
  EXPECT_EQ(pull_back_vc_witness(r, w), (std::vector<std::size_t>{1, 2, 3}));
}

TEST(CubicVC, NonWitnessPullBackThrows) {
  const auto r = cubic_vc_to_weakcondorcet_ccrepc_tp({complete_graph_k4(), 3});
  const CandidateSet& cs = r.instance.profile.candidates();
  EXPECT_THROW(pull_back_vc_witness(r, {cs.all(), cs.none()}), InvalidInput);
}

TEST(VertexCoverBruteForce, K4AndK33) {
  EXPECT_FALSE(solve_vc_bruteforce(complete_graph_k4(), 2));
  EXPECT_TRUE(solve_vc_bruteforce(complete_graph_k4(), 3));
  EXPECT_FALSE(solve_vc_bruteforce(complete_bipartite_k33(), 2));
  EXPECT_TRUE(solve_vc_bruteforce(complete_bipartite_k33(), 3));
  EXPECT_THROW(solve_vc_bruteforce({21, {}}, 1), InvalidInput);
}

TEST(X3C, Validation) {
  EXPECT_THROW(validate(X3CInstance{1, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}}), InvalidInput);
  EXPECT_THROW(validate(X3CInstance{2, {{1, 2, 3}, {4, 5, 6}, {1, 2, 4}}}), InvalidInput);
  EXPECT_THROW(validate(X3CInstance{2, {{1, 2, 7}, {4, 5, 6}, {1, 2, 4}, {1, 2, 5}}}), InvalidInput);
  EXPECT_THROW(validate(X3CInstance{2, {{1, 1, 2}, {4, 5, 6}, {1, 2, 4}, {1, 2, 5}}}), InvalidInput);
}

TEST(X3C, BruteForceSolvers) {
  EXPECT_TRUE(solve_x3c_bruteforce(with_cover()));
  EXPECT_FALSE(solve_x3c_bruteforce(without_cover()));
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_x3c(2 + trial % 2, 4 + trial % 4, trial % 3 == 0, rng);
    EXPECT_EQ(solve_x3c_bruteforce(x), naive::x3c(x)) << trial;
  }
}

TEST(X3C, ScoreTable) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + trial % 3, n = m + 2 + trial % 4;
    const auto r = x3c_to_plurality_ccpvg_te(random_x3c(m, n, trial % 2 == 0, rng));
    const auto s = scores_by_id(r.instance.profile);
    const int N = static_cast<int>(n), M = static_cast<int>(m);
    EXPECT_EQ(s.at("p"), 2 * (N + M));
    EXPECT_EQ(s.at("c"), 2 * (N + M) + 2);
    EXPECT_EQ(s.at("d"), 2 * (N + M) + 1);
    EXPECT_EQ(s.at("e"), 2 * N + M - 1);
    for (std::size_t j = 1; j <= 3 * m; ++j) EXPECT_EQ(s.at("b" + std::to_string(j)), 2 * N);
    EXPECT_EQ(collect_groups(r.instance).size(), n + 3);
  }
}

TEST(X3C, GroupShapes) {
  const auto r = x3c_to_plurality_ccpvg_te(with_cover());
  const auto groups = collect_groups(r.instance);
  ASSERT_EQ(groups.size(), 7u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(groups[i].ballots.size(), 6u);
  EXPECT_EQ(groups[5].label, "Gc");
  EXPECT_EQ(groups[5].ballots.size(), 2u * (4 + 2) + 1);
}

TEST(X3C, ForwardWitnessFromExactCover) {
  const auto r = x3c_to_plurality_ccpvg_te(with_cover());
  EXPECT_TRUE(verify_witness(r.instance, x3c_forward_witness(r, {0, 1})));
  EXPECT_EQ(oracle_solve(r.instance).answer, Answer::Yes);
}

// Gc and Gd alone tie c and d, so TE eliminates both, while the other side
// leaves p ahead of everybody. This works whether or not a cover exists.
TEST(X3C, IsolatingGcAndGdMakesPSoleWinner) {
  for (const auto& x : {with_cover(), without_cover()}) {
    const auto r = x3c_to_plurality_ccpvg_te(x);
    VoterPartition w{{{}, {}}};
    for (std::size_t i = 0; i < r.instance.groups.size(); ++i) {
      const auto& g = r.instance.groups[i];
      w.parts[g == "Gc" || g == "Gd" ? 1 : 0].push_back(i);
    }
    EXPECT_TRUE(verify_witness(r.instance, w));
  }
  EXPECT_FALSE(naive::x3c(without_cover()));
  EXPECT_EQ(oracle_solve(x3c_to_plurality_ccpvg_te(without_cover()).instance).answer, Answer::Yes);
}

TEST(ApprovalToE, ParityPadding) {
  for (int n : {4, 5}) {
    auto src = instance(VotingRule::Approval,
                        approvals(CandidateSet::from_ids({"p", "a", "b"}), std::vector<std::string>(n, "110")), "p",
                        Problem::CCPV);
    const auto target = approval_ccpv_te_to_e_ccpv_tp(src);
    EXPECT_EQ(target.profile.size(), 6u);
    EXPECT_EQ(target.profile.candidates().size(), 7u);
    EXPECT_EQ(target.problem, Problem::CCPV);
    EXPECT_EQ(target.tie, TieRule::TP);
    EXPECT_EQ(target.rule, VotingRule::SystemE);
  }
}

TEST(ApprovalToE, RejectsSpecialsAndWrongSource) {
  std::vector<Candidate> with_special{{"p", std::nullopt}, {"z", 1}};
  auto src = instance(VotingRule::Approval, approvals(CandidateSet(with_special), {"10"}), "p", Problem::CCPV);
  EXPECT_THROW(approval_ccpv_te_to_e_ccpv_tp(src), InvalidInput);
  auto tp = instance(VotingRule::Approval, approvals(CandidateSet::from_ids({"p"}), {"1"}), "p", Problem::CCPV,
                     TieRule::TP);
  EXPECT_THROW(approval_ccpv_te_to_e_ccpv_tp(tp), InvalidInput);
}

TEST(ApprovalToE, NobodyApprovesPBothNo) {
  auto src = instance(VotingRule::Approval,
                      approvals(CandidateSet::from_ids({"p", "a", "b"}), {"010", "001", "011", "000"}), "p",
                      Problem::CCPV);
  EXPECT_EQ(oracle_solve(src).answer, Answer::No);
  EXPECT_EQ(oracle_solve(approval_ccpv_te_to_e_ccpv_tp(src)).answer, Answer::No);
}

TEST(ApprovalToE, RandomDecisionsPreserved) {
  std::mt19937_64 rng(14);
  FamilySpec f;
  f.problem = Problem::CCPV;
  f.rule = VotingRule::Approval;
  f.tie = TieRule::TE;
  f.candidates = 3;
  int yes = 0;
  for (int trial = 0; trial < 60; ++trial) {
    f.voters = static_cast<std::size_t>(1 + trial % 6);
    const auto src = random_instance(f, rng);
    const bool want = naive::decide(src);
    yes += want;
    EXPECT_EQ(oracle_solve(approval_ccpv_te_to_e_ccpv_tp(src)).answer == Answer::Yes, want) << trial;
  }
  EXPECT_GT(yes, 0);
}
