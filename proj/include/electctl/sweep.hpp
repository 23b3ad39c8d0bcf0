// Agreement sweeps: poly solver against the exhaustive oracle over an
// instance family.

#ifndef ELECTCTL_SWEEP_HPP_
#define ELECTCTL_SWEEP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "electctl/exact_oracle.hpp"
#include "electctl/generators.hpp"

namespace electctl {

struct SweepConfig {
  FamilySpec family;
  bool exhaustive = false;
  std::uint64_t seed = 1;
  std::size_t count = 100;  // random families only
  std::uint64_t budget = kDefaultOracleBudget;
};

struct SweepRow {
  std::string digest;
  ControlInstance instance;
  Answer poly = Answer::No;
  Answer oracle = Answer::No;
  double ms_poly = 0;
  double ms_oracle = 0;

  // Unknown when the oracle ran out of budget.
  Answer agree() const;
};

struct SweepReport {
  std::string solver;
  std::vector<SweepRow> rows;  // sorted by digest
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t unknown = 0;
};

// Throws UnsupportedInstance when no poly solver covers the family.
SweepReport run_sweep(const SweepConfig& config);

// ms_poly/ms_oracle stay empty unless `timing`, so the default output is
// byte-identical across runs.
std::string sweep_csv(const SweepReport& report, bool timing);
std::string sweep_summary_json(const SweepConfig& config, const SweepReport& report);

}  // namespace electctl

#endif  // ELECTCTL_SWEEP_HPP_
