#include <gtest/gtest.h>

#include <random>

#include "electctl/exact_oracle.hpp"
#include "electctl/generators.hpp"
#include "electctl/poly_solvers.hpp"
#include "support/builders.hpp"
#include "support/naive.hpp"

using namespace electctl;
using namespace testing_support;

namespace {

std::size_t part_size(const Decision& d, std::size_t i) {
  return std::get<VoterPartition>(*d.witness).parts.at(i).size();
}

void expect_sound(const ControlInstance& inst, const Decision& d) {
  if (d.answer == Answer::Yes) {
    ASSERT_TRUE(d.witness.has_value());
    EXPECT_TRUE(verify_witness(inst, *d.witness));
  } else {
    EXPECT_FALSE(d.witness.has_value());
  }
}

}  // namespace

TEST(PluralityCCEPV, WorkedExample) {
  const auto inst = instance(VotingRule::Plurality, worked_example_profile(), "p", Problem::CCEPV);
  const Decision d = solve_plurality_ccepv_te(inst);
  ASSERT_EQ(d.answer, Answer::Yes);
  expect_sound(inst, d);
  EXPECT_EQ(part_size(d, 0), 7u);
  EXPECT_EQ(part_size(d, 1), 7u);
  // Every part with p as unique winner holds at least 4 p-ballots.
  const auto& parts = std::get<VoterPartition>(*d.witness).parts;
  std::size_t best = 0;
  for (const auto& part : parts) {
    best = std::max<std::size_t>(best, static_cast<std::size_t>(std::count_if(
                                           part.begin(), part.end(), [](std::size_t i) { return i < 5; })));
  }
  EXPECT_GE(best, 4u);
}

TEST(PluralityCCEPV, SingleCandidateEvenVoters) {
  for (int n : {0, 2, 4, 6}) {
    const auto inst = instance(VotingRule::Plurality, ranked({"p"}, {{n, "p"}}), "p", Problem::CCEPV);
    const Decision d = solve_plurality_ccepv_te(inst);
    EXPECT_EQ(d.answer, Answer::Yes) << n;
    expect_sound(inst, d);
  }
}

TEST(PluralityCCEPV, TwoCandidatesMatchesEnumeration) {
  const auto inst = instance(VotingRule::Plurality, ranked({"p", "a"}, {{1, "p>a"}, {3, "a>p"}}), "p", Problem::CCEPV);
  const bool expected = naive::decide(inst);
  EXPECT_EQ(solve_plurality_ccepv_te(inst).answer == Answer::Yes, expected);
}

TEST(PluralityCCEPV, RejectsOtherCombinations) {
  auto inst = instance(VotingRule::Plurality, worked_example_profile(), "p", Problem::CCEPV, TieRule::TP);
  EXPECT_THROW(solve_plurality_ccepv_te(inst), UnsupportedInstance);
  inst.tie = TieRule::TE;
  inst.problem = Problem::CCPV;
  EXPECT_THROW(solve_plurality_ccepv_te(inst), UnsupportedInstance);
}

TEST(PluralityCCEPV, RandomAgreesWithNaive) {
  std::mt19937_64 rng(21);
  FamilySpec f;
  for (int trial = 0; trial < 400; ++trial) {
    f.candidates = 2 + trial % 4;
    f.voters = static_cast<std::size_t>(trial % 11);
    const auto inst = random_instance(f, rng);
    const Decision d = solve_plurality_ccepv_te(inst);
    EXPECT_EQ(d.answer == Answer::Yes, naive::decide(inst)) << trial;
    expect_sound(inst, d);
    if (d.witness) {
      const long a = static_cast<long>(part_size(d, 0)), b = static_cast<long>(part_size(d, 1));
      EXPECT_LE(std::abs(a - b), 1);
    }
    // Case count stays within |C|^2 (|V|+1)^2 times a small constant.
    const double bound = 4.0 * f.candidates * f.candidates * (f.voters + 1.0) * (f.voters + 1.0);
    EXPECT_LE(static_cast<double>(d.stats.cases_examined), bound);
  }
}

TEST(PluralityCCPkV, WorkedExampleWithTwoParts) {
  auto inst = instance(VotingRule::Plurality, worked_example_profile(), "p", Problem::CCPkV);
  inst.k = 2;
  const Decision d = solve_plurality_ccpkv_te(inst);
  EXPECT_EQ(d.answer == Answer::Yes, naive::decide(inst));
  EXPECT_EQ(d.answer, Answer::Yes);
  expect_sound(inst, d);
}

TEST(PluralityCCPkV, SingleCandidateThreeParts) {
  auto inst = instance(VotingRule::Plurality, ranked({"p"}, {{3, "p"}}), "p", Problem::CCPkV);
  inst.k = 3;
  const Decision d = solve_plurality_ccpkv_te(inst);
  EXPECT_EQ(d.answer, Answer::Yes);
  expect_sound(inst, d);
}

TEST(PluralityCCPkV, TwoCandidatesThreePartsMatchesLabeledEnumeration) {
  auto inst = instance(VotingRule::Plurality, ranked({"p", "a"}, {{1, "p>a"}, {5, "a>p"}}), "p", Problem::CCPkV);
  inst.k = 3;
  EXPECT_EQ(solve_plurality_ccpkv_te(inst).answer == Answer::Yes, naive::decide(inst));
}

TEST(PluralityCCPkV, RejectsSmallK) {
  auto inst = instance(VotingRule::Plurality, worked_example_profile(), "p", Problem::CCPkV);
  inst.k = 1;
  EXPECT_THROW(solve_plurality_ccpkv_te(inst), InvalidInput);
}

TEST(PluralityCCPkV, RandomAgreesWithNaive) {
  std::mt19937_64 rng(33);
  FamilySpec f;
  f.problem = Problem::CCPkV;
  for (int trial = 0; trial < 300; ++trial) {
    f.k = 2 + trial % 3;
    f.candidates = 2 + trial % 3;
    f.voters = static_cast<std::size_t>(trial % (f.k == 4 ? 7 : 8));
    const auto inst = random_instance(f, rng);
    const Decision d = solve_plurality_ccpkv_te(inst);
    EXPECT_EQ(d.answer == Answer::Yes, naive::decide(inst)) << trial;
    expect_sound(inst, d);
  }
}

TEST(PluralityCCPkV, TwoPartsEqualsClassicPartition) {
  std::mt19937_64 rng(34);
  FamilySpec f;
  f.problem = Problem::CCPkV;
  f.k = 2;
  for (int trial = 0; trial < 200; ++trial) {
    f.candidates = 2 + trial % 4;
    f.voters = static_cast<std::size_t>(trial % 10);
    auto inst = random_instance(f, rng);
    const Answer kv = solve_plurality_ccpkv_te(inst).answer;
    inst.problem = Problem::CCPV;
    EXPECT_EQ(kv, oracle_solve(inst).answer) << trial;
  }
}

TEST(WeakCondorcetCCRPC, CondorcetWinnerP) {
  const auto inst = instance(VotingRule::WeakCondorcet, ranked({"p", "a", "b"}, {{2, "p>a>b"}, {1, "b>p>a"}}), "p",
                             Problem::CCRPC, TieRule::TP);
  const Decision d = solve_weakcondorcet_ccrpc_tp(inst);
  EXPECT_EQ(d.answer, Answer::Yes);
  expect_sound(inst, d);
}

TEST(WeakCondorcetCCRPC, RivalThatTiesPAlwaysSurvives) {
  // a ties p and beats b; a is a weakCondorcet winner.
  const auto inst = instance(VotingRule::WeakCondorcet, ranked({"p", "a", "b"}, {{1, "p>a>b"}, {1, "a>b>p"}}), "p",
                             Problem::CCRPC, TieRule::TP);
  EXPECT_EQ(solve_weakcondorcet_ccrpc_tp(inst).answer, Answer::No);
  EXPECT_FALSE(naive::decide(inst));
}

TEST(WeakCondorcetCCRPC, RandomFourCandidatesAgreeWithNaive) {
  std::mt19937_64 rng(44);
  FamilySpec f;
  f.problem = Problem::CCRPC;
  f.rule = VotingRule::WeakCondorcet;
  f.tie = TieRule::TP;
  f.candidates = 4;
  for (int trial = 0; trial < 300; ++trial) {
    f.voters = static_cast<std::size_t>(trial % 8);
    const auto inst = random_instance(f, rng);
    const Decision d = solve_weakcondorcet_ccrpc_tp(inst);
    EXPECT_EQ(d.answer == Answer::Yes, naive::decide(inst)) << trial;
    expect_sound(inst, d);
  }
}

TEST(SystemECCEPV, AlwaysNo) {
  std::vector<Candidate> small{{"0", 0}, {"2", 2}, {"x", std::nullopt}};
  auto a = instance(VotingRule::SystemE, approvals(CandidateSet(small), {"001", "001"}), "x", Problem::CCEPV,
                    TieRule::TP);
  EXPECT_EQ(solve_system_e_ccepv_tp(a).answer, Answer::No);
  EXPECT_FALSE(naive::decide(a));

  std::vector<Candidate> full{{"0", 0}, {"1", 1}, {"2", 2}, {"3", 3}, {"x", std::nullopt}};
  auto b = instance(VotingRule::SystemE,
                    approvals(CandidateSet(full), std::vector<std::string>(8, "00001")), "x", Problem::CCEPV,
                    TieRule::TP);
  EXPECT_EQ(solve_system_e_ccepv_tp(b).answer, Answer::No);
  EXPECT_EQ(oracle_solve(b).answer, Answer::No);

  auto c = instance(VotingRule::SystemE, approvals(CandidateSet(full), {}), "x", Problem::CCEPV, TieRule::TP);
  EXPECT_EQ(solve_system_e_ccepv_tp(c).answer, Answer::No);
  EXPECT_EQ(oracle_solve(c).answer, Answer::No);
}

TEST(SystemECCEPV, RejectsOtherCombinations) {
  auto inst = instance(VotingRule::Approval, approvals(CandidateSet::from_ids({"x"}), {}), "x", Problem::CCEPV,
                       TieRule::TP);
  EXPECT_THROW(solve_system_e_ccepv_tp(inst), UnsupportedInstance);
}

TEST(Registry, FindsSolverByCombination) {
  auto inst = instance(VotingRule::Plurality, worked_example_profile(), "p", Problem::CCEPV);
  ASSERT_NE(find_poly_solver(inst), nullptr);
  EXPECT_EQ(find_poly_solver(inst)->name, "plurality-ccepv-te");
  inst.tie = TieRule::TP;
  EXPECT_EQ(find_poly_solver(inst), nullptr);
  EXPECT_EQ(poly_solvers().size(), 4u);
  EXPECT_NE(describe_poly_solvers().find("weakcondorcet-ccrpc-tp"), std::string::npos);
}
