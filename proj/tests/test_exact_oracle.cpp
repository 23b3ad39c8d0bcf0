#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "electctl/exact_oracle.hpp"
#include "electctl/generators.hpp"
#include "support/builders.hpp"
#include "support/naive.hpp"

using namespace electctl;
using namespace testing_support;

TEST(Equipartitions, SmallCounts) {
  const auto two = enumerate_equipartitions(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].first, (std::vector<std::size_t>{0}));
  EXPECT_EQ(two[0].second, (std::vector<std::size_t>{1}));
  EXPECT_EQ(enumerate_equipartitions(4).size(), 3u);
  const auto five = enumerate_equipartitions(5);
  EXPECT_EQ(five.size(), 10u);
  for (const auto& b : five) {
    EXPECT_EQ(b.first.size(), 3u);
    EXPECT_EQ(b.second.size(), 2u);
  }
  EXPECT_EQ(enumerate_equipartitions(0).size(), 1u);
  EXPECT_EQ(enumerate_equipartitions(1).size(), 1u);
}

TEST(Equipartitions, DistinctUnorderedAndComplete) {
  for (std::size_t n = 0; n <= 12; ++n) {
    std::set<std::set<std::set<std::size_t>>> seen;
    std::size_t total = 0;
    EquipartitionStream s(n);
    while (auto b = s.next()) {
      ++total;
      std::vector<bool> hit(n, false);
      for (auto i : b->first) hit.at(i) = true;
      for (auto i : b->second) {
        EXPECT_FALSE(hit.at(i));
        hit.at(i) = true;
      }
      EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool x) { return x; }));
      const long d = static_cast<long>(b->first.size()) - static_cast<long>(b->second.size());
      EXPECT_LE(std::abs(d), 1);
      using Half = std::set<std::size_t>;
      seen.insert(std::set<Half>{Half(b->first.begin(), b->first.end()), Half(b->second.begin(), b->second.end())});
    }
    EXPECT_EQ(seen.size(), total) << n;
    EXPECT_EQ(static_cast<double>(total), EquipartitionStream::count(n)) << n;
    // Brute-force count of balanced subsets, halved for even n.
    std::size_t balanced = 0;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const auto k = static_cast<std::size_t>(__builtin_popcount(m));
      if (k == (n + 1) / 2) ++balanced;
    }
    EXPECT_EQ(total, n % 2 == 0 && n > 0 ? balanced / 2 : balanced) << n;
  }
}

TEST(Oracle, WorkedExampleCCEPV) {
  const auto inst = instance(VotingRule::Plurality, worked_example_profile(), "p", Problem::CCEPV);
  const Decision d = oracle_solve(inst);
  ASSERT_EQ(d.answer, Answer::Yes);
  EXPECT_TRUE(verify_witness(inst, *d.witness));
}

TEST(Oracle, WorkedExampleCCPVTPRegression) {
  const auto inst = instance(VotingRule::Plurality, worked_example_profile(), "p", Problem::CCPV, TieRule::TP);
  const Decision d = oracle_solve(inst);
  EXPECT_EQ(d.answer == Answer::Yes, naive::decide(inst));
  EXPECT_EQ(d.answer, Answer::No);
}

TEST(Oracle, DeletionWithZeroLimit) {
  auto yes = instance(VotingRule::Plurality, ranked({"p", "a"}, {{2, "p>a"}, {1, "a>p"}}), "p", Problem::CCDVG);
  yes.groups = {"g1", "g2", "g3"};
  EXPECT_EQ(oracle_solve(yes).answer, Answer::Yes);
  auto no = instance(VotingRule::Plurality, ranked({"p", "a"}, {{1, "p>a"}, {1, "a>p"}}), "p", Problem::CCDVG);
  no.groups = {"g1", "g2"};
  EXPECT_EQ(oracle_solve(no).answer, Answer::No);
}

TEST(Oracle, BudgetExceededIsUnknown) {
  FamilySpec f;
  f.problem = Problem::CCPV;
  f.voters = 30;
  std::mt19937_64 rng(1);
  const auto inst = random_instance(f, rng);
  const Decision d = oracle_solve(inst, 1000);
  EXPECT_EQ(d.answer, Answer::Unknown);
  EXPECT_FALSE(d.witness.has_value());
  EXPECT_EQ(d.stats.partitions_enumerated, 0u);
}

// Every problem, rule and tie rule against the labeled naive enumeration.
TEST(Oracle, AgreesWithNaiveEverywhere) {
  const Problem problems[] = {Problem::CCPV,  Problem::CCEPV, Problem::CCRPC, Problem::CCREPC,
                              Problem::CCPkV, Problem::CCPVG, Problem::CCDVG, Problem::CCAVG};
  std::mt19937_64 rng(77);
  int trial = 0;
  for (auto problem : problems) {
    for (int r = 0; r < 5; ++r) {
      for (auto tie : {TieRule::TE, TieRule::TP}) {
        for (int rep = 0; rep < 12; ++rep, ++trial) {
          FamilySpec f;
          f.problem = problem;
          f.rule = static_cast<VotingRule>(r);
          f.tie = tie;
          f.k = 3;
          f.candidates = f.rule == VotingRule::SystemE ? 3 + rep % 4 : 2 + rep % 3;
          f.voters = static_cast<std::size_t>(rep % (problem == Problem::CCPkV ? 6 : 8));
          f.groups = 1 + rep % 4;
          f.limit = static_cast<std::size_t>(rep % 3);
          f.pool = static_cast<std::size_t>(rep % 4);
          const auto inst = random_instance(f, rng);
          const Decision d = oracle_solve(inst);
          ASSERT_NE(d.answer, Answer::Unknown);
          EXPECT_EQ(d.answer == Answer::Yes, naive::decide(inst))
              << trial << " " << to_string(problem) << " " << to_string(f.rule) << " " << to_string(tie);
          if (d.witness) EXPECT_TRUE(verify_witness(inst, *d.witness));
        }
      }
    }
  }
}

TEST(Oracle, TwoPartsEqualsClassicPartition) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 300; ++trial) {
    FamilySpec f;
    f.problem = Problem::CCPkV;
    f.k = 2;
    f.rule = static_cast<VotingRule>(trial % 5);
    f.tie = trial % 2 ? TieRule::TE : TieRule::TP;
    f.candidates = 2 + trial % 4;
    f.voters = static_cast<std::size_t>(trial % 9);
    auto inst = random_instance(f, rng);
    const Answer kv = oracle_solve(inst).answer;
    inst.problem = Problem::CCPV;
    EXPECT_EQ(kv, oracle_solve(inst).answer) << trial;
  }
}

TEST(Oracle, InvariantUnderRelabelingAndReordering) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    FamilySpec f;
    f.problem = trial % 2 ? Problem::CCEPV : Problem::CCRPC;
    f.rule = static_cast<VotingRule>(trial % 4);
    f.tie = trial % 3 ? TieRule::TE : TieRule::TP;
    f.candidates = 3 + trial % 2;
    f.voters = static_cast<std::size_t>(3 + trial % 5);
    const auto inst = random_instance(f, rng);

    // Reverse the candidate order and the ballot order.
    const CandidateSet& cs = inst.profile.candidates();
    const std::size_t m = cs.size();
    std::vector<Candidate> flipped(cs.begin(), cs.end());
    std::reverse(flipped.begin(), flipped.end());
    ControlInstance other = inst;
    other.profile = Profile(CandidateSet(flipped), inst.profile.kind());
    for (std::size_t i = inst.profile.size(); i-- > 0;) {
      const Ballot& b = inst.profile[i];
      if (b.kind() == BallotKind::LinearOrder) {
        std::vector<CandidateIndex> order;
        for (auto c : b.order()) order.push_back(m - 1 - c);
        other.profile.add(Ballot::ranking(order));
      } else {
        CandidateMask a(m);
        for (std::size_t c = 0; c < m; ++c) a[m - 1 - c] = b.approves(c);
        other.profile.add(Ballot::approval(a));
      }
    }
    other.distinguished = m - 1 - inst.distinguished;
    EXPECT_EQ(oracle_solve(inst).answer, oracle_solve(other).answer) << trial;
  }
}

TEST(Oracle, WitnessCountsMatchDefinitions) {
  auto inst = instance(VotingRule::Plurality, worked_example_profile(), "p", Problem::CCPV);
  EXPECT_EQ(oracle_witness_count(inst), 8192.0);
  inst.problem = Problem::CCEPV;
  EXPECT_EQ(oracle_witness_count(inst), 1716.0);
  inst.problem = Problem::CCRPC;
  EXPECT_EQ(oracle_witness_count(inst), 4.0);
}
