#include "electctl/exact_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace electctl {

// ---------------------------------------------------------------------------
// Equipartitions

namespace {

double binomial(std::size_t n, std::size_t r) {
  double out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * static_cast<double>(n - r + i) / static_cast<double>(i);
  return std::round(out);
}

}  // namespace

EquipartitionStream::EquipartitionStream(std::size_t n) : n_(n) {}

double EquipartitionStream::count(std::size_t n) {
  if (n == 0) return 1;
  double c = binomial(n, n / 2);
  return n % 2 == 0 ? c / 2 : c;
}

std::optional<Bipartition> EquipartitionStream::next() {
  if (done_) return std::nullopt;
  const std::size_t r = (n_ + 1) / 2;
  if (!started_) {
    started_ = true;
    chosen_.resize(r);
    for (std::size_t i = 0; i < r; ++i) chosen_[i] = i;
  } else {
    // Even n keeps element 0 pinned in `first`.
    const std::size_t lowest = n_ % 2 == 0 ? 1 : 0;
    std::size_t i = r;
    while (i > lowest && chosen_[i - 1] == n_ - r + (i - 1)) --i;
    if (i == lowest) {
      done_ = true;
      return std::nullopt;
    }
    ++chosen_[i - 1];
    for (std::size_t j = i; j < r; ++j) chosen_[j] = chosen_[j - 1] + 1;
  }
  if (n_ == 0) done_ = true;

  Bipartition out;
  out.first = chosen_;
  std::size_t next_chosen = 0;
  for (std::size_t e = 0; e < n_; ++e) {
    if (next_chosen < chosen_.size() && chosen_[next_chosen] == e) {
      ++next_chosen;
    } else {
      out.second.push_back(e);
    }
  }
  return out;
}

std::vector<Bipartition> enumerate_equipartitions(std::size_t n) {
  std::vector<Bipartition> out;
  EquipartitionStream stream(n);
  while (auto b = stream.next()) out.push_back(std::move(*b));
  return out;
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

// Partitions of n labelled items into at most k unlabelled blocks.
double partitions_into_at_most(std::size_t n, std::size_t k) {
  if (n == 0) return 1;
  // stirling[j]: S(i, j) for the current i.
  std::vector<double> stirling(k + 1, 0.0);
  stirling[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) {
      stirling[j] = static_cast<double>(j) * stirling[j] + stirling[j - 1];
    }
    stirling[0] = 0;
  }
  double total = 0;
  for (std::size_t j = 1; j <= k; ++j) total += stirling[j];
  return total;
}

double unordered_bipartitions(std::size_t n) { return n == 0 ? 1 : std::ldexp(1.0, static_cast<int>(n) - 1); }

// Unordered bipartitions of {0..n-1} with 0 in `first`, by ascending mask
// over elements 1..n-1. Requires n <= 64.
template <typename Visit>
bool for_each_bipartition(std::size_t n, Visit&& visit) {
  if (n == 0) return visit(std::vector<std::size_t>{}, std::vector<std::size_t>{});
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  std::vector<std::size_t> first, second;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    first.assign(1, 0);
    second.clear();
    for (std::size_t e = 1; e < n; ++e) {
      ((mask >> (e - 1)) & 1 ? first : second).push_back(e);
    }
    if (visit(first, second)) return true;
  }
  return false;
}

template <typename Visit>
bool for_each_equipartition(std::size_t n, Visit&& visit) {
  EquipartitionStream stream(n);
  while (auto b = stream.next()) {
    if (visit(b->first, b->second)) return true;
  }
  return false;
}

// Ballot i joins an existing block or opens the next one (restricted
// growth order), so block permutations are never repeated.
template <typename Visit>
bool for_each_set_partition(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::vector<std::size_t>> parts(k);
  std::size_t open = 0;
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == n) return static_cast<bool>(visit(parts));
    for (std::size_t b = 0; b < std::min(open + 1, k); ++b) {
      const bool opens = b == open;
      parts[b].push_back(i);
      if (opens) ++open;
      const bool stop = place(i + 1);
      if (opens) --open;
      parts[b].pop_back();
      if (stop) return true;
    }
    return false;
  };
  return place(0);
}

CandidateMask mask_from(std::size_t width, const std::vector<std::size_t>& items) {
  CandidateMask m(width);
  for (auto i : items) m.set(i);
  return m;
}

}  // namespace

double oracle_witness_count(const ControlInstance& instance) {
  const std::size_t n = instance.profile.size();
  const std::size_t m = instance.profile.candidates().size();
  switch (instance.problem) {
    case Problem::CCPV: return unordered_bipartitions(n);
    case Problem::CCEPV: return EquipartitionStream::count(n);
    case Problem::CCRPC: return unordered_bipartitions(m);
    case Problem::CCREPC: return EquipartitionStream::count(m);
    case Problem::CCPkV:
      return partitions_into_at_most(n, static_cast<std::size_t>(std::max(instance.k, 1)));
    case Problem::CCPVG: return unordered_bipartitions(collect_groups(instance).size());
    case Problem::CCDVG:
    case Problem::CCAVG: return std::ldexp(1.0, static_cast<int>(collect_groups(instance).size()));
  }
  return 0;
}

Decision oracle_solve(const ControlInstance& instance, std::uint64_t budget) {
  validate(instance);
  Decision d;
  if (oracle_witness_count(instance) > static_cast<double>(budget)) {
    d.answer = Answer::Unknown;
    return d;
  }
  const WitnessChecker checker(instance);
  const Profile& profile = instance.profile;
  std::uint64_t& seen = d.stats.partitions_enumerated;
  auto accept = [&](Witness w) {
    d.answer = Answer::Yes;
    d.witness = std::move(w);
    return true;
  };

  switch (instance.problem) {
    case Problem::CCPV:
    case Problem::CCEPV: {
      auto visit = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        ++seen;
        std::vector<std::vector<std::size_t>> parts{a, b};
        return checker.sole_winner_voter_partition(parts) && accept(VoterPartition{std::move(parts)});
      };
      if (instance.problem == Problem::CCPV) {
        for_each_bipartition(profile.size(), visit);
      } else {
        for_each_equipartition(profile.size(), visit);
      }
      break;
    }
    case Problem::CCRPC:
    case Problem::CCREPC: {
      const std::size_t m = profile.candidates().size();
      auto visit = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        ++seen;
        CandidatePartition split{mask_from(m, a), mask_from(m, b)};
        return checker.sole_winner_candidate_partition(split.first, split.second) &&
               accept(std::move(split));
      };
      if (instance.problem == Problem::CCRPC) {
        for_each_bipartition(m, visit);
      } else {
        for_each_equipartition(m, visit);
      }
      break;
    }
    case Problem::CCPkV: {
      for_each_set_partition(profile.size(), static_cast<std::size_t>(instance.k),
                             [&](const std::vector<std::vector<std::size_t>>& parts) {
                               ++seen;
                               return checker.sole_winner_voter_partition(parts) &&
                                      accept(VoterPartition{parts});
                             });
      break;
    }
    case Problem::CCPVG: {
      const auto groups = collect_groups(instance);
      for_each_bipartition(groups.size(), [&](const std::vector<std::size_t>& a,
                                              const std::vector<std::size_t>& b) {
        ++seen;
        std::vector<std::vector<std::size_t>> parts(2);
        for (auto g : a) parts[0].insert(parts[0].end(), groups[g].ballots.begin(), groups[g].ballots.end());
        for (auto g : b) parts[1].insert(parts[1].end(), groups[g].ballots.begin(), groups[g].ballots.end());
        std::sort(parts[0].begin(), parts[0].end());
        std::sort(parts[1].begin(), parts[1].end());
        return checker.sole_winner_voter_partition(parts) && accept(VoterPartition{std::move(parts)});
      });
      break;
    }
    case Problem::CCDVG:
    case Problem::CCAVG: {
      const auto groups = collect_groups(instance);
      const std::uint64_t limit = std::uint64_t{1} << groups.size();
      for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::vector<std::size_t> chosen;
        GroupSelection selection;
        for (std::size_t g = 0; g < groups.size(); ++g) {
          if ((mask >> g) & 1) {
            chosen.insert(chosen.end(), groups[g].ballots.begin(), groups[g].ballots.end());
            selection.groups.push_back(groups[g].label);
          }
        }
        if (chosen.size() > instance.limit) continue;
        ++seen;
        if (checker.sole_winner_group_selection(chosen)) {
          accept(std::move(selection));
          break;
        }
      }
      break;
    }
  }
  return d;
}

}  // namespace electctl
