// electctl: solve, verify, reduce, sweep and generate control instances.
//
// Exit status: 0 yes / accepted / full agreement, 1 no / rejected /
// disagreement, 2 unknown (oracle budget), 3 bad input or usage, 4 no
// solver for the combination.

#include <chrono>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "electctl/exact_oracle.hpp"
#include "electctl/generators.hpp"
#include "electctl/instance_file.hpp"
#include "electctl/poly_solvers.hpp"
#include "electctl/reductions.hpp"
#include "electctl/sweep.hpp"

namespace {

using namespace electctl;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitUnsupported = 4;

int exit_for(Answer a) {
  switch (a) {
    case Answer::Yes: return kExitYes;
    case Answer::No: return kExitNo;
    case Answer::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") std::cout << text;
  else write_text_file(out, text);
}

std::string mask_text(const CandidateSet& cs, const CandidateMask& mask) {
  std::string s = "{";
  for (const auto& id : cs.ids_of(mask)) s += (s.size() > 1 ? "," : "") + id;
  return s + "}";
}

struct SolveOptions {
  std::string file;
  std::string solver = "poly";
  std::uint64_t budget = kDefaultOracleBudget;
  std::string out;
  std::string format = "json";
};

int cmd_solve(const SolveOptions& o) {
  const InstanceFile file = parse_instance(read_text_file(o.file));
  const ControlInstance& inst = file.instance;
  ResultRecord rec;
  rec.instance_digest = instance_digest(inst);
  Decision d;
  const auto start = std::chrono::steady_clock::now();
  if (o.solver == "oracle") {
    rec.solver = "oracle";
    d = oracle_solve(inst, o.budget);
  } else {
    const PolySolver* s = find_poly_solver(inst);
    if (!s) {
      throw UnsupportedInstance("no polynomial solver for " + std::string(to_string(inst.problem)) +
                                "/" + std::string(to_string(inst.rule)) +
                                (uses_tie_rule(inst.problem) ? "/" + std::string(to_string(inst.tie)) : "") +
                                "; available: " + describe_poly_solvers());
    }
    rec.solver = "poly:" + std::string(s->name);
    d = s->solve(inst);
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rec.answer = d.answer;
  rec.witness = d.witness;
  rec.stats = d.stats;
  emit(o.out, o.format == "csv" ? serialize_result_csv(inst, rec) : serialize_result_json(inst, rec));
  return exit_for(d.answer);
}

int cmd_verify(const std::string& instance_path, const std::string& witness_path) {
  const InstanceFile file = parse_instance(read_text_file(instance_path));
  const ControlInstance& inst = file.instance;
  const Witness w = parse_witness(inst, read_text_file(witness_path));
  const WitnessReport r = check_witness(inst, w);
  const CandidateSet& cs = inst.profile.candidates();
  std::cout << "finalists: " << (r.finalists ? mask_text(cs, *r.finalists) : "-") << "\n";
  std::cout << "winners:   " << (r.winners ? mask_text(cs, *r.winners) : "-") << "\n";
  std::cout << (r.accepted ? "accepted" : "rejected: " + r.reason) << "\n";
  return r.accepted ? kExitYes : kExitNo;
}

int cmd_reduce(const std::string& kind, const std::string& source, const std::string& out) {
  InstanceFile file;
  file.provenance["reduction"] = kind;
  file.provenance["source"] = source;
  const std::string text = read_text_file(source);
  if (kind == "x3c") {
    file.instance = x3c_to_plurality_ccpvg_te(parse_x3c(text)).instance;
  } else if (kind == "cvc") {
    file.instance = cubic_vc_to_weakcondorcet_ccrepc_tp(parse_graph(text)).instance;
  } else if (kind == "approval-e") {
    file.instance = approval_ccpv_te_to_e_ccpv_tp(parse_instance(text).instance);
  } else {
    throw InvalidInput("unknown reduction '" + kind + "' (x3c, cvc, approval-e)");
  }
  emit(out, serialize_instance(file));
  return kExitYes;
}

struct FamilyOptions {
  std::string problem = "CCEPV";
  std::string rule = "plurality";
  std::string tie = "TE";
  FamilySpec spec;

  FamilySpec resolve() const {
    FamilySpec f = spec;
    const auto p = parse_problem(problem);
    const auto r = parse_voting_rule(rule);
    const auto t = parse_tie_rule(tie);
    if (!p) throw InvalidInput("unknown problem '" + problem + "'");
    if (!r) throw InvalidInput("unknown rule '" + rule + "'");
    if (!t) throw InvalidInput("unknown tie rule '" + tie + "'");
    f.problem = *p;
    f.rule = *r;
    f.tie = *t;
    return f;
  }
};

void add_family_options(CLI::App* cmd, FamilyOptions& f) {
  cmd->add_option("--problem", f.problem, "CCPV, CCEPV, CCRPC, CCREPC, CCPkV, CCPVG, CCDVG, CCAVG");
  cmd->add_option("--rule", f.rule, "plurality, approval, condorcet, weakcondorcet, system-e");
  cmd->add_option("--tie", f.tie, "TE or TP");
  cmd->add_option("--candidates", f.spec.candidates);
  cmd->add_option("--voters", f.spec.voters);
  cmd->add_option("--k", f.spec.k, "parts for CCPkV");
  cmd->add_option("--groups", f.spec.groups, "group labels to draw from");
  cmd->add_option("--limit", f.spec.limit, "voters added/deleted for CCAVG/CCDVG");
  cmd->add_option("--pool", f.spec.pool, "pool size for CCAVG");
}

struct SweepOptions {
  FamilyOptions family;
  bool exhaustive = false;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::uint64_t budget = kDefaultOracleBudget;
  std::string out;
  std::string summary;
  std::string counterexamples;
  bool timing = false;
};

int cmd_sweep(const SweepOptions& o) {
  SweepConfig config{o.family.resolve(), o.exhaustive, o.seed, o.count, o.budget};
  const SweepReport report = run_sweep(config);
  emit(o.out, sweep_csv(report, o.timing));
  const std::string summary = sweep_summary_json(config, report);
  if (o.summary.empty()) std::cerr << summary;
  else write_text_file(o.summary, summary);
  if (!o.counterexamples.empty()) {
    for (const auto& row : report.rows) {
      if (row.agree() != Answer::No) continue;
      InstanceFile f{row.instance, {{"sweep", describe(config.family)},
                                    {"poly", std::string(to_string(row.poly))},
                                    {"oracle", std::string(to_string(row.oracle))}}};
      write_text_file(std::filesystem::path(o.counterexamples) / (row.digest + ".json"), serialize_instance(f));
    }
  }
  if (report.disagreements > 0) return kExitNo;
  return report.unknown > 0 ? kExitUnknown : kExitYes;
}

struct GenOptions {
  std::string kind = "random";
  FamilyOptions family;
  std::uint64_t seed = 1;
  std::size_t m = 2;
  std::size_t sets = 4;
  bool plant = false;
  std::size_t k = 3;
  std::string out;
};

int cmd_gen(const GenOptions& o) {
  std::mt19937_64 rng(o.seed);
  if (o.kind == "random") {
    InstanceFile f{random_instance(o.family.resolve(), rng),
                   {{"generator", "random"}, {"seed", std::to_string(o.seed)}}};
    emit(o.out, serialize_instance(f));
  } else if (o.kind == "example") {
    emit(o.out, serialize_instance({worked_example_instance(), {{"generator", "example"}}}));
  } else if (o.kind == "x3c") {
    emit(o.out, serialize_x3c(random_x3c(o.m, o.sets, o.plant, rng)));
  } else if (o.kind == "k4" || o.kind == "k33") {
    CubicGraphVC g{o.kind == "k4" ? complete_graph_k4() : complete_bipartite_k33(), o.k};
    validate(g);
    emit(o.out, serialize_graph(g));
  } else {
    throw InvalidInput("unknown generator '" + o.kind + "' (random, example, x3c, k4, k33)");
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Election control by partition: solvers, oracle, reductions"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Decide a control instance");
  s->add_option("file", solve.file, "instance file")->required();
  s->add_option("--solver", solve.solver)->check(CLI::IsMember({"poly", "oracle"}));
  s->add_option("--budget", solve.budget, "oracle enumeration budget");
  s->add_option("--out", solve.out, "result file (default stdout)");
  s->add_option("--format", solve.format)->check(CLI::IsMember({"json", "csv"}));

  std::string instance_path, witness_path;
  auto* v = app.add_subcommand("verify", "Replay a witness and print finalists and winners");
  v->add_option("instance", instance_path)->required();
  v->add_option("witness", witness_path, "witness or result document")->required();

  std::string reduce_kind, reduce_source, reduce_out;
  auto* r = app.add_subcommand("reduce", "Build a control instance from a source problem");
  r->add_option("kind", reduce_kind, "x3c, cvc or approval-e")->required();
  r->add_option("source", reduce_source)->required();
  r->add_option("--out", reduce_out);

  SweepOptions sweep;
  auto* w = app.add_subcommand("sweep", "Compare the poly solver with the oracle over a family");
  add_family_options(w, sweep.family);
  w->add_flag("--exhaustive", sweep.exhaustive, "every multiset profile instead of random draws");
  w->add_option("--seed", sweep.seed);
  w->add_option("--count", sweep.count);
  w->add_option("--budget", sweep.budget);
  w->add_option("--out", sweep.out, "CSV report (default stdout)");
  w->add_option("--summary", sweep.summary, "summary JSON (default stderr)");
  w->add_option("--counterexamples", sweep.counterexamples, "directory for disagreeing instances");
  w->add_flag("--timing", sweep.timing, "fill ms_poly/ms_oracle");

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate an instance, X3C instance or cubic graph");
  g->add_option("kind", gen.kind, "random, example, x3c, k4 or k33");
  add_family_options(g, gen.family);
  g->add_option("--seed", gen.seed);
  g->add_option("--m", gen.m, "X3C: base set size / 3");
  g->add_option("--sets", gen.sets, "X3C: number of sets");
  g->add_flag("--plant", gen.plant, "X3C: include an exact cover");
  g->add_option("--cover-k", gen.k, "graph: cover size target");
  g->add_option("--out", gen.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (s->parsed()) return cmd_solve(solve);
    if (v->parsed()) return cmd_verify(instance_path, witness_path);
    if (r->parsed()) return cmd_reduce(reduce_kind, reduce_source, reduce_out);
    if (w->parsed()) return cmd_sweep(sweep);
    if (g->parsed()) return cmd_gen(gen);
  } catch (const UnsupportedInstance& e) {
    std::cerr << "electctl: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "electctl: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
