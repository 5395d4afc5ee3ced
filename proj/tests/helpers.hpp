#pragma once

// Shared test utilities: a seeded digraph sampler and deliberately naive
// reference oracles, written independently of the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cycles.hpp"
#include "digraph.hpp"

namespace test {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 rng_for(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

inline dgc::Digraph random_digraph(int p, double arc_prob,
                                   std::mt19937_64& rng) {
  std::bernoulli_distribution coin(arc_prob);
  std::vector<dgc::VSet> rows(p, 0);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j && coin(rng)) rows[i] |= dgc::bit(j);
  return dgc::Digraph::from_rows(p, std::move(rows));
}

// Naive k-cycle oracle: enumerate every permutation of every k-subset and
// test the arcs directly. Exponential; intended for p <= 7.
inline bool naive_has_cycle(const dgc::Digraph& d, int k) {
  int p = d.order();
  // iterate k-subsets via combinations of the selector mask
  std::vector<int> subset;
  std::vector<bool> mask(p, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    subset.clear();
    for (int i = 0; i < p; ++i)
      if (mask[i]) subset.push_back(i);
    std::vector<int> perm = subset;
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        if (!d.arc(perm[i], perm[(i + 1) % k])) ok = false;
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return false;
}

// Naive hypothesis oracle: recompute every degree from scratch.
inline bool naive_meets_hypotheses(const dgc::Digraph& d) {
  int p = d.order();
  if (p < 5) return false;
  int semi = (p - 1) / 2;  // ceil((p-2)/2)
  for (int x = 0; x < p; ++x) {
    int od = 0, id = 0;
    for (int y = 0; y < p; ++y) {
      if (y == x) continue;
      if (d.arc(x, y)) ++od;
      if (d.arc(y, x)) ++id;
    }
    if (od + id < p - 1 || od < semi || id < semi) return false;
  }
  return true;
}

// Exhaustive longest path between fixed endpoints; returns the maximum
// vertex count of a path from s to t, or 0 if none exists.
inline int longest_st_path(const dgc::Digraph& d, int s, int t) {
  int best = 0;
  std::vector<int> stack{s};
  dgc::VSet visited = dgc::bit(s);
  auto rec = [&](auto&& self, int cur) -> void {
    if (cur == t) {
      best = std::max<int>(best, static_cast<int>(stack.size()));
      return;
    }
    for (int nxt : dgc::bits_of(d.out_row(cur) & ~visited)) {
      visited |= dgc::bit(nxt);
      stack.push_back(nxt);
      self(self, nxt);
      stack.pop_back();
      visited &= ~dgc::bit(nxt);
    }
  };
  if (s == t) return 1;
  rec(rec, s);
  return best;
}

// Greedy path extraction: walk a random permutation while consecutive arcs
// exist. Returns at least one vertex.
inline dgc::Path random_path(const dgc::Digraph& d, std::mt19937_64& rng) {
  std::vector<int> order(d.order());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  dgc::Path p;
  p.verts.push_back(order[0]);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (d.arc(p.verts.back(), order[i]))
      p.verts.push_back(order[i]);
  }
  return p;
}

}  // namespace test
