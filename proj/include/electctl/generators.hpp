// Seeded random and exhaustive instance families.

#ifndef ELECTCTL_GENERATORS_HPP_
#define ELECTCTL_GENERATORS_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "electctl/reductions.hpp"
#include "electctl/two_stage.hpp"

namespace electctl {

struct FamilySpec {
  Problem problem = Problem::CCEPV;
  VotingRule rule = VotingRule::Plurality;
  TieRule tie = TieRule::TE;
  std::size_t candidates = 3;
  std::size_t voters = 6;
  int k = 2;
  // Group labels drawn per ballot (CCPVG, CCDVG) or per pool ballot (CCAVG).
  std::size_t groups = 3;
  std::size_t limit = 1;
  std::size_t pool = 3;
};

// Short name like "CCEPV-plurality-TE-3x6".
std::string describe(const FamilySpec& family);

// Candidates are "a", "b", ...; for system E some of them are replaced by
// the special candidates "0".."3". The distinguished candidate is drawn
// uniformly from the non-special candidates.
ControlInstance random_instance(const FamilySpec& family, std::mt19937_64& rng);

// Every multiset of `voters` ballots over `candidates` plain candidates,
// each paired with every choice of distinguished candidate. Ballot types are
// all linear orders, or all approval vectors for approval-based rules.
std::vector<ControlInstance> exhaustive_instances(const FamilySpec& family);

// The 14-voter plurality CCEPV-TE example: 5 x p>a>b, 6 x a>b>p, 3 x b>a>p.
ControlInstance worked_example_instance();

// n random triples over {1..3m}. With `plant_cover`, the first m sets form
// an exact cover before shuffling.
X3CInstance random_x3c(std::size_t m, std::size_t n, bool plant_cover, std::mt19937_64& rng);

}  // namespace electctl

#endif  // ELECTCTL_GENERATORS_HPP_
