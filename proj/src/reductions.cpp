#include "electctl/reductions.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace electctl {

// ---------------------------------------------------------------------------
// Cubic vertex cover

void validate(const CubicGraphVC& g) {
  const std::size_t n = g.graph.vertices;
  std::vector<int> degree(n, 0);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : g.graph.edges) {
    if (u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw InvalidInput("repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    ++degree[u];
    ++degree[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] != 3) {
      throw InvalidInput("graph is not cubic: vertex " + std::to_string(v) + " has degree " +
                         std::to_string(degree[v]));
    }
  }
  if (n == 0) throw InvalidInput("graph has no vertices");
  if (g.k < 1 || g.k > n) throw InvalidInput("cover size k must lie in 1..n");
}

Graph complete_graph_k4() { return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}; }

Graph complete_bipartite_k33() {
  Graph g{6, {}};
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 3; b < 6; ++b) g.edges.emplace_back(a, b);
  }
  return g;
}

VertexCoverReduction cubic_vc_to_weakcondorcet_ccrepc_tp(const CubicGraphVC& g) {
  validate(g);
  const std::size_t n = g.graph.vertices;
  const std::size_t dummies = n / 2 + 2 * g.k - 1;

  VertexCoverReduction r;
  std::vector<std::string> ids{"p"};
  for (std::size_t v = 0; v < n; ++v) {
    r.vertex_candidates.push_back(ids.size());
    ids.push_back("v" + std::to_string(v));
  }
  for (std::size_t e = 0; e < g.graph.edges.size(); ++e) {
    r.edge_candidates.push_back(ids.size());
    ids.push_back("e" + std::to_string(e));
  }
  for (std::size_t d = 0; d < dummies; ++d) {
    r.dummy_candidates.push_back(ids.size());
    ids.push_back("d" + std::to_string(d));
  }

  MajoritySpec spec(CandidateSet::from_ids(ids));
  const CandidateIndex p = 0;
  for (std::size_t e = 0; e < g.graph.edges.size(); ++e) {
    const CandidateIndex edge = r.edge_candidates[e];
    spec.set_defeats(edge, p);
    spec.set_defeats(r.vertex_candidates[g.graph.edges[e].first], edge);
    spec.set_defeats(r.vertex_candidates[g.graph.edges[e].second], edge);
  }
  for (auto v : r.vertex_candidates) spec.set_defeats(p, v);
  for (auto d : r.dummy_candidates) spec.set_defeats(p, d);

  r.instance.rule = VotingRule::WeakCondorcet;
  r.instance.profile = mcgarvey_profile(spec);
  r.instance.distinguished = p;
  r.instance.problem = Problem::CCREPC;
  r.instance.tie = TieRule::TP;
  return r;
}

CandidatePartition vc_forward_witness(const VertexCoverReduction& reduction,
                                      const std::vector<std::size_t>& cover) {
  const CandidateSet& cs = reduction.instance.profile.candidates();
  CandidatePartition w{cs.none(), cs.none()};
  w.first.set(reduction.instance.distinguished);
  for (auto d : reduction.dummy_candidates) w.first.set(d);
  for (auto e : reduction.edge_candidates) w.second.set(e);
  for (auto v : reduction.vertex_candidates) w.first.set(v);
  for (auto v : cover) {
    w.first.reset(reduction.vertex_candidates.at(v));
    w.second.set(reduction.vertex_candidates.at(v));
  }
  return w;
}

std::vector<std::size_t> pull_back_vc_witness(const VertexCoverReduction& reduction,
                                              const CandidatePartition& witness) {
  if (!verify_witness(reduction.instance, witness)) {
    throw InvalidInput("candidate partition is not a witness for this reduction");
  }
  const CandidateMask& other =
      witness.first.test(reduction.instance.distinguished) ? witness.second : witness.first;
  std::vector<std::size_t> cover;
  for (std::size_t v = 0; v < reduction.vertex_candidates.size(); ++v) {
    if (other.test(reduction.vertex_candidates[v])) cover.push_back(v);
  }
  return cover;
}

bool is_vertex_cover(const Graph& g, const std::vector<std::size_t>& cover) {
  std::vector<bool> in(g.vertices, false);
  for (auto v : cover) in.at(v) = true;
  return std::all_of(g.edges.begin(), g.edges.end(),
                     [&](const auto& e) { return in[e.first] || in[e.second]; });
}

// ---------------------------------------------------------------------------
// X3C

void validate(const X3CInstance& x) {
  if (x.m <= 1) throw InvalidInput("X3C needs m > 1");
  if (x.sets.size() <= x.m + 1) throw InvalidInput("X3C needs n > m + 1 sets");
  for (const auto& s : x.sets) {
    for (auto b : s) {
      if (b < 1 || b > 3 * x.m) throw InvalidInput("X3C set element outside 1..3m");
    }
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
      throw InvalidInput("X3C sets must hold three distinct elements");
    }
  }
}

namespace {

// top > (C - {top, p}) > p, or p > (C - {p}) when top is p; inner sets by
// ascending id.
Ballot lexicographic_ballot(const CandidateSet& cs, CandidateIndex top, CandidateIndex p) {
  std::vector<CandidateIndex> middle;
  for (CandidateIndex c = 0; c < cs.size(); ++c) {
    if (c != top && c != p) middle.push_back(c);
  }
  std::sort(middle.begin(), middle.end(),
            [&](CandidateIndex a, CandidateIndex b) { return cs[a].id < cs[b].id; });
  std::vector<CandidateIndex> order{top};
  order.insert(order.end(), middle.begin(), middle.end());
  if (top != p) order.push_back(p);
  return Ballot::ranking(std::move(order));
}

}  // namespace

X3CReduction x3c_to_plurality_ccpvg_te(const X3CInstance& x) {
  validate(x);
  const std::size_t n = x.sets.size();
  const std::size_t m = x.m;

  std::vector<std::string> ids{"p", "c", "d", "e"};
  X3CReduction r;
  r.c = 1;
  r.d = 2;
  r.e = 3;
  for (std::size_t j = 1; j <= 3 * m; ++j) {
    r.base_candidates.push_back(ids.size());
    ids.push_back("b" + std::to_string(j));
  }
  const CandidateSet cs = CandidateSet::from_ids(ids);
  const CandidateIndex p = 0;
  Profile profile(cs, BallotKind::LinearOrder);
  std::vector<std::string> groups;
  auto add = [&](CandidateIndex top, std::size_t copies, const std::string& group) {
    for (std::size_t i = 0; i < copies; ++i) {
      profile.add(lexicographic_ballot(cs, top, p));
      groups.push_back(group);
    }
  };
  auto base = [&](std::size_t element) { return r.base_candidates[element - 1]; };

  for (std::size_t i = 0; i < n; ++i) {
    const std::string label = "G" + std::to_string(i + 1);
    add(p, 2, label);
    for (auto b : x.sets[i]) add(base(b), 1, label);
    add(r.e, 1, label);
  }
  for (std::size_t j = 1; j <= 3 * m; ++j) {
    const auto occurrences = static_cast<std::size_t>(std::count_if(
        x.sets.begin(), x.sets.end(),
        [&](const auto& s) { return std::find(s.begin(), s.end(), j) != s.end(); }));
    add(base(j), 2 * n - occurrences, "GB");
  }
  add(p, 2 * m, "GB");
  add(r.e, n + m - 1, "GB");
  add(r.c, 1, "GB");
  add(r.c, 2 * (n + m) + 1, "Gc");
  add(r.d, 2 * (n + m) + 1, "Gd");

  r.instance.rule = VotingRule::Plurality;
  r.instance.profile = std::move(profile);
  r.instance.distinguished = p;
  r.instance.problem = Problem::CCPVG;
  r.instance.tie = TieRule::TE;
  r.instance.groups = std::move(groups);
  return r;
}

VoterPartition x3c_forward_witness(const X3CReduction& reduction, const std::vector<std::size_t>& cover) {
  std::set<std::string> second_labels{"Gc", "Gd"};
  for (auto i : cover) second_labels.insert("G" + std::to_string(i + 1));
  VoterPartition w{{{}, {}}};
  const auto& labels = reduction.instance.groups;
  for (std::size_t id = 0; id < labels.size(); ++id) {
    w.parts[second_labels.count(labels[id]) ? 1 : 0].push_back(id);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Approval -> system E

ControlInstance approval_ccpv_te_to_e_ccpv_tp(const ControlInstance& source) {
  validate(source);
  if (source.rule != VotingRule::Approval || source.problem != Problem::CCPV ||
      source.tie != TieRule::TE) {
    throw InvalidInput("source must be an approval CCPV instance under TE");
  }
  const CandidateSet& cs = source.profile.candidates();
  std::vector<Candidate> extended(cs.begin(), cs.end());
  for (int s = 0; s < 4; ++s) {
    const std::string id = std::to_string(s);
    if (cs.find_special(s) || cs.find(id)) {
      throw InvalidInput("source already contains special candidate " + id);
    }
    extended.push_back({id, s});
  }
  const std::size_t width = extended.size();
  ControlInstance target;
  target.rule = VotingRule::SystemE;
  target.profile = Profile(CandidateSet(std::move(extended)), BallotKind::Approval);
  for (const Ballot& b : source.profile.ballots()) {
    CandidateMask approved = b.approvals();
    approved.resize(width);
    target.profile.add(Ballot::approval(std::move(approved)));
  }
  const std::size_t padding = source.profile.size() % 2 == 0 ? 2 : 1;
  for (std::size_t i = 0; i < padding; ++i) target.profile.add(Ballot::approval(CandidateMask(width)));
  target.distinguished = source.distinguished;
  target.problem = Problem::CCPV;
  target.tie = TieRule::TP;
  return target;
}

// ---------------------------------------------------------------------------
// Source-problem solvers

bool solve_x3c_bruteforce(const X3CInstance& x) {
  validate(x);
  if (x.sets.size() > kBruteForceLimit) throw InvalidInput("X3C brute force limited to 20 sets");
  const std::uint32_t limit = std::uint32_t{1} << x.sets.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != x.m) continue;
    std::vector<int> hits(3 * x.m + 1, 0);
    bool ok = true;
    for (std::size_t i = 0; i < x.sets.size() && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (auto b : x.sets[i]) ok = ok && ++hits[b] == 1;
    }
    if (ok) return true;
  }
  return false;
}

bool solve_vc_bruteforce(const Graph& g, std::size_t k) {
  if (g.vertices > kBruteForceLimit) throw InvalidInput("vertex cover brute force limited to 20 vertices");
  const std::uint32_t limit = std::uint32_t{1} << g.vertices;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > k) continue;
    const bool covers = std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
      return ((mask >> e.first) & 1) || ((mask >> e.second) & 1);
    });
    if (covers) return true;
  }
  return false;
}

}  // namespace electctl
