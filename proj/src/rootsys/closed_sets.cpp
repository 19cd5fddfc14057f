#include "ghc/rootsys/closed_sets.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "ghc/error.hpp"

namespace ghc::rootsys {

bool is_closed(const RootSystem &rs, const RootSet &s) {
  const auto members = s.indices();
  for (auto i : members) {
    for (auto j : members) {
      if (auto k = rs.sum(i, j); k && !s.contains(*k)) return false;
    }
  }
  return true;
}

bool is_symmetric(const RootSystem &rs, const RootSet &s) {
  for (auto i : s.indices()) {
    if (!s.contains(rs.negative(i))) return false;
  }
  return true;
}

RootSet negate(const RootSystem &rs, const RootSet &s) {
  RootSet out(rs.size());
  for (auto i : s.indices()) out.insert(rs.negative(i));
  return out;
}

RootSet closure(const RootSystem &rs, const RootSet &s) {
  RootSet out = s;
  std::vector<std::size_t> members = s.indices();
  // Worklist: each new member is paired against everything seen so far.
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      if (auto k = rs.sum(members[a], members[b]); k && !out.contains(*k)) {
        out.insert(*k);
        members.push_back(*k);
      }
    }
  }
  return out;
}

bool is_parabolic(const RootSystem &rs, const RootSet &s) {
  return is_closed(rs, s) && (s | negate(rs, s)) == RootSet::full(rs.size());
}

std::vector<RootSet> enumerate_closed_subsets(const RootSystem &rs) {
  std::unordered_set<RootSet, RootSetHash> seen;
  std::deque<RootSet> frontier;
  RootSet empty(rs.size());
  seen.insert(empty);
  frontier.push_back(empty);
  while (!frontier.empty()) {
    RootSet s = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t r = 0; r < rs.size(); ++r) {
      if (s.contains(r)) continue;
      RootSet t = s;
      t.insert(r);
      t = closure(rs, t);
      if (seen.insert(t).second) frontier.push_back(std::move(t));
    }
  }
  std::vector<RootSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> weyl_group_permutations(const RootSystem &rs) {
  constexpr std::size_t kMaxOrder = 1'000'000;
  const std::size_t n = rs.size();
  std::vector<std::vector<std::size_t>> gens;
  for (const auto &a : rs.simple_roots()) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto img = rs.index_of(rs.root(i) - a * rs.pairing(rs.root(i), a));
      if (!img) throw InternalError("simple reflection does not permute the roots");
      p[i] = *img;
    }
    gens.push_back(std::move(p));
  }
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<std::size_t>> group{id};
  std::deque<std::vector<std::size_t>> queue{id};
  while (!queue.empty()) {
    auto w = std::move(queue.front());
    queue.pop_front();
    for (const auto &g : gens) {
      std::vector<std::size_t> gw(n);
      for (std::size_t i = 0; i < n; ++i) gw[i] = g[w[i]];
      if (group.insert(gw).second) {
        if (group.size() > kMaxOrder) throw InputError("Weyl group of " + rs.name() + " is too large to enumerate");
        queue.push_back(std::move(gw));
      }
    }
  }
  return {group.begin(), group.end()};
}

RootSet apply_permutation(const std::vector<std::size_t> &perm, const RootSet &s) {
  RootSet out(s.universe());
  for (auto i : s.indices()) out.insert(perm[i]);
  return out;
}

RootSet orbit_representative(const std::vector<std::vector<std::size_t>> &group, const RootSet &s) {
  RootSet best = s;
  for (const auto &w : group) {
    RootSet img = apply_permutation(w, s);
    if (img < best) best = std::move(img);
  }
  return best;
}

} // namespace ghc::rootsys
