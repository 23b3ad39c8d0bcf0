#include "electctl/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "electctl/instance_file.hpp"
#include "electctl/poly_solvers.hpp"
#include "json.hpp"

namespace electctl {

namespace {

template <typename F>
auto timed(double& ms, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

Answer SweepRow::agree() const {
  if (poly == Answer::Unknown || oracle == Answer::Unknown) return Answer::Unknown;
  return poly == oracle ? Answer::Yes : Answer::No;
}

SweepReport run_sweep(const SweepConfig& config) {
  std::vector<ControlInstance> instances;
  if (config.exhaustive) {
    instances = exhaustive_instances(config.family);
  } else {
    std::mt19937_64 rng(config.seed);
    for (std::size_t i = 0; i < config.count; ++i) instances.push_back(random_instance(config.family, rng));
  }

  SweepReport report;
  if (instances.empty()) return report;
  const PolySolver* solver = find_poly_solver(instances.front());
  if (!solver) {
    throw UnsupportedInstance("no polynomial solver for " + describe(config.family) +
                              "; available: " + describe_poly_solvers());
  }
  report.solver = solver->name;

  for (auto& inst : instances) {
    SweepRow row;
    row.digest = instance_digest(inst);
    row.poly = timed(row.ms_poly, [&] { return solver->solve(inst).answer; });
    row.oracle = timed(row.ms_oracle, [&] { return oracle_solve(inst, config.budget).answer; });
    row.instance = std::move(inst);
    switch (row.agree()) {
      case Answer::Yes: ++report.agreements; break;
      case Answer::No: ++report.disagreements; break;
      case Answer::Unknown: ++report.unknown; break;
    }
    report.rows.push_back(std::move(row));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const SweepRow& a, const SweepRow& b) { return a.digest < b.digest; });
  return report;
}

std::string sweep_csv(const SweepReport& report, bool timing) {
  std::ostringstream out;
  out << "instance_digest,problem,rule,tie,answer_poly,answer_oracle,agree,ms_poly,ms_oracle\n";
  for (const auto& row : report.rows) {
    const auto& inst = row.instance;
    out << row.digest << ',' << to_string(inst.problem) << ',' << to_string(inst.rule) << ','
        << (uses_tie_rule(inst.problem) ? to_string(inst.tie) : "") << ',' << to_string(row.poly)
        << ',' << to_string(row.oracle) << ',' << to_string(row.agree()) << ',';
    if (timing) out << row.ms_poly << ',' << row.ms_oracle;
    else out << ',';
    out << '\n';
  }
  return out.str();
}

std::string sweep_summary_json(const SweepConfig& config, const SweepReport& report) {
  const std::size_t decided = report.agreements + report.disagreements;
  nlohmann::json doc = {
      {"format", "electctl-sweep/1"},
      {"family", describe(config.family)},
      {"mode", config.exhaustive ? "exhaustive" : "random"},
      {"seed", config.seed},
      {"solver", report.solver},
      {"instances", report.rows.size()},
      {"agreements", report.agreements},
      {"disagreements", report.disagreements},
      {"unknown", report.unknown},
      {"agreement_rate", decided == 0 ? 1.0 : static_cast<double>(report.agreements) / decided},
  };
  if (config.exhaustive) doc.erase("seed");
  return doc.dump(2) + "\n";
}

}  // namespace electctl
