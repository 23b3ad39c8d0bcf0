// Exhaustive ground-truth solver for every control family.

#ifndef ELECTCTL_EXACT_ORACLE_HPP_
#define ELECTCTL_EXACT_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "electctl/two_stage.hpp"

namespace electctl {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// Enumerates witnesses in a fixed order and returns the first that verifies.
// Answers Unknown, without enumerating, when the witness space exceeds
// `budget`.
//   CCPV, CCEPV    unordered (equi)bipartitions of the ballots
//   CCRPC, CCREPC  unordered (equi)bipartitions of the candidates
//   CCPkV          partitions of the ballots into at most k blocks
//   CCPVG          two-sided assignments of whole groups
//   CCDVG, CCAVG   sets of groups holding at most `limit` voters
Decision oracle_solve(const ControlInstance& instance, std::uint64_t budget = kDefaultOracleBudget);

// Size of the witness space oracle_solve would walk (an upper bound for
// CCDVG/CCAVG). A double, since it overflows 64 bits quickly.
double oracle_witness_count(const ControlInstance& instance);

struct Bipartition {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Every unordered split of {0..n-1} into halves whose sizes differ by at
// most one, each exactly once. For even n, element 0 is always in `first`;
// for odd n, `first` is the larger half. Lexicographic order of `first`.
class EquipartitionStream {
 public:
  explicit EquipartitionStream(std::size_t n);

  std::optional<Bipartition> next();

  static double count(std::size_t n);

 private:
  std::size_t n_;
  std::vector<std::size_t> chosen_;  // `first`, ascending
  bool started_ = false;
  bool done_ = false;
};

std::vector<Bipartition> enumerate_equipartitions(std::size_t n);

}  // namespace electctl

#endif  // ELECTCTL_EXACT_ORACLE_HPP_
