#include "electctl/generators.hpp"

#include <algorithm>
#include <numeric>

namespace electctl {

namespace {

std::string plain_id(std::size_t i) {
  std::string id;
  do {
    id.insert(id.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  } while (i-- > 0);
  return id;
}

std::vector<Candidate> plain_candidates(std::size_t n) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({plain_id(i), std::nullopt});
  return out;
}

std::size_t uniform(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

Ballot random_ballot(BallotKind kind, std::size_t m, std::mt19937_64& rng) {
  if (kind == BallotKind::LinearOrder) {
    std::vector<CandidateIndex> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return Ballot::ranking(std::move(order));
  }
  CandidateMask approved(m);
  for (std::size_t c = 0; c < m; ++c) approved[c] = (rng() >> 63) != 0;
  return Ballot::approval(std::move(approved));
}

std::vector<Ballot> ballot_types(BallotKind kind, std::size_t m) {
  std::vector<Ballot> out;
  if (kind == BallotKind::LinearOrder) {
    std::vector<CandidateIndex> order(m);
    std::iota(order.begin(), order.end(), 0);
    do {
      out.push_back(Ballot::ranking(order));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    out.push_back(Ballot::approval(CandidateMask(m, bits)));
  }
  return out;
}

void fill_structure(ControlInstance& inst, const FamilySpec& family, std::mt19937_64& rng) {
  inst.problem = family.problem;
  if (uses_tie_rule(family.problem)) inst.tie = family.tie;
  if (family.problem == Problem::CCPkV) inst.k = family.k;
  const std::size_t labels = std::max<std::size_t>(family.groups, 1);
  auto label = [&] { return "G" + std::to_string(uniform(rng, labels) + 1); };
  if (family.problem == Problem::CCPVG || family.problem == Problem::CCDVG) {
    for (std::size_t i = 0; i < inst.profile.size(); ++i) inst.groups.push_back(label());
  }
  if (is_group_selection_problem(family.problem)) inst.limit = family.limit;
  if (family.problem == Problem::CCAVG) {
    Profile pool(inst.profile.candidates(), inst.profile.kind());
    for (std::size_t i = 0; i < family.pool; ++i) {
      pool.add(random_ballot(pool.kind(), pool.candidates().size(), rng));
      inst.groups.push_back(label());
    }
    inst.pool = std::move(pool);
  }
}

}  // namespace

std::string describe(const FamilySpec& family) {
  std::string out = std::string(to_string(family.problem)) + "-" + std::string(to_string(family.rule));
  if (uses_tie_rule(family.problem)) out += "-" + std::string(to_string(family.tie));
  if (family.problem == Problem::CCPkV) out += "-k" + std::to_string(family.k);
  return out + "-" + std::to_string(family.candidates) + "x" + std::to_string(family.voters);
}

ControlInstance random_instance(const FamilySpec& family, std::mt19937_64& rng) {
  if (family.candidates == 0) throw InvalidInput("a family needs at least one candidate");
  std::vector<Candidate> cands = plain_candidates(family.candidates);
  std::vector<std::size_t> ordinary(cands.size());
  std::iota(ordinary.begin(), ordinary.end(), 0);

  if (family.rule == VotingRule::SystemE) {
    // Mostly the full special set when there is room, otherwise a random
    // subset that leaves at least one ordinary candidate.
    std::vector<int> specials{0, 1, 2, 3};
    std::shuffle(specials.begin(), specials.end(), rng);
    const std::size_t room = std::min<std::size_t>(4, cands.size() - 1);
    std::size_t take = uniform(rng, room + 1);
    if (cands.size() > 4 && uniform(rng, 4) != 0) take = 4;
    std::vector<std::size_t> slots(cands.size());
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    for (std::size_t i = 0; i < take; ++i) {
      cands[slots[i]] = {std::to_string(specials[i]), specials[i]};
    }
    ordinary.assign(slots.begin() + static_cast<std::ptrdiff_t>(take), slots.end());
    std::sort(ordinary.begin(), ordinary.end());
  }

  ControlInstance inst;
  inst.rule = family.rule;
  const CandidateSet cs(std::move(cands));
  inst.profile = Profile(cs, required_ballot_kind(family.rule));
  for (std::size_t i = 0; i < family.voters; ++i) {
    inst.profile.add(random_ballot(inst.profile.kind(), cs.size(), rng));
  }
  inst.distinguished = ordinary[uniform(rng, ordinary.size())];
  fill_structure(inst, family, rng);
  validate(inst);
  return inst;
}

std::vector<ControlInstance> exhaustive_instances(const FamilySpec& family) {
  if (family.rule == VotingRule::SystemE) {
    throw InvalidInput("exhaustive families use plain candidates only");
  }
  if (family.problem == Problem::CCPVG || is_group_selection_problem(family.problem)) {
    throw InvalidInput("exhaustive families cover ungrouped problems only");
  }
  const CandidateSet cs(plain_candidates(family.candidates));
  const auto types = ballot_types(required_ballot_kind(family.rule), cs.size());

  std::vector<ControlInstance> out;
  std::vector<std::size_t> pick(family.voters, 0);  // nondecreasing type indices
  for (;;) {
    Profile profile(cs, required_ballot_kind(family.rule));
    for (auto t : pick) profile.add(types[t]);
    for (CandidateIndex p = 0; p < cs.size(); ++p) {
      ControlInstance inst;
      inst.rule = family.rule;
      inst.profile = profile;
      inst.distinguished = p;
      inst.problem = family.problem;
      if (uses_tie_rule(family.problem)) inst.tie = family.tie;
      if (family.problem == Problem::CCPkV) inst.k = family.k;
      out.push_back(std::move(inst));
    }
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] + 1 == types.size()) --i;
    if (i == 0) break;
    const std::size_t next = pick[i - 1] + 1;
    std::fill(pick.begin() + static_cast<std::ptrdiff_t>(i - 1), pick.end(), next);
  }
  return out;
}

ControlInstance worked_example_instance() {
  const CandidateSet cs = CandidateSet::from_ids({"p", "a", "b"});
  ControlInstance inst;
  inst.rule = VotingRule::Plurality;
  inst.profile = Profile(cs, BallotKind::LinearOrder);
  auto add = [&](std::size_t copies, std::vector<CandidateIndex> order) {
    for (std::size_t i = 0; i < copies; ++i) inst.profile.add(Ballot::ranking(order));
  };
  add(5, {0, 1, 2});
  add(6, {1, 2, 0});
  add(3, {2, 1, 0});
  inst.distinguished = 0;
  inst.problem = Problem::CCEPV;
  inst.tie = TieRule::TE;
  return inst;
}

X3CInstance random_x3c(std::size_t m, std::size_t n, bool plant_cover, std::mt19937_64& rng) {
  if (plant_cover && n < m) throw InvalidInput("cannot plant a cover with fewer than m sets");
  std::vector<std::size_t> base(3 * m);
  std::iota(base.begin(), base.end(), 1);
  X3CInstance x{m, {}};
  if (plant_cover) {
    std::shuffle(base.begin(), base.end(), rng);
    for (std::size_t i = 0; i < m; ++i) x.sets.push_back({base[3 * i], base[3 * i + 1], base[3 * i + 2]});
  }
  while (x.sets.size() < n) {
    std::shuffle(base.begin(), base.end(), rng);
    x.sets.push_back({base[0], base[1], base[2]});
  }
  for (auto& s : x.sets) std::sort(s.begin(), s.end());
  std::shuffle(x.sets.begin(), x.sets.end(), rng);
  return x;
}

}  // namespace electctl
