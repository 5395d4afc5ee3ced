#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "digraph.hpp"

// Exact cycle/path search and the constructive path operations: fixed-length
// cycle detection, vertex insertion, iterated path extension, and the
// prefix/suffix neighborhood split.

namespace dgc {

// Vertex sequence with consecutive arcs present; no repeats.
struct Path {
  std::vector<int> verts;
  bool valid_in(const Digraph& d) const;
};

// Closed vertex sequence; consecutive arcs plus last->first.
struct Cycle {
  std::vector<int> verts;
  int length() const { return static_cast<int>(verts.size()); }
  bool valid_in(const Digraph& d) const;
};

// Deterministic exact search for a k-cycle, 2 <= k <= p. DFS anchored at the
// lowest vertex of the cycle, extending by lowest out-neighbor first.
std::optional<Cycle> has_cycle_length(const Digraph& d, int k);

struct CycleSpectrum {
  std::set<int> lengths;  // {k : D contains a k-cycle}, k >= 2
  bool hamiltonian = false;      // p in lengths
  bool pre_hamiltonian = false;  // p-1 in lengths
  bool pancyclic = false;        // [3,p] subset of lengths
};
CycleSpectrum cycle_spectrum(const Digraph& d);

// Smallest i in [1,m-1] with x_i -> x and x -> x_{i+1}, plus the extended
// path, or nullopt. Throws if x lies on P or P is invalid.
struct Insertion {
  int position;  // 1-based i
  Path extended;
};
std::optional<Insertion> insert_vertex(const Digraph& d, const Path& p, int x);

// Repeatedly inserts pool vertices (lowest index first, rescanning after
// each success) until none fits. Throws if pool meets P.
struct Extension {
  Path final;
  std::vector<int> absorbed;
};
Extension extend_path_maximally(const Digraph& d, const Path& p, VSet pool);

// Requires d(x, V(C)) >= m+1. Returns a k-cycle through x for every
// k in [2, m+1], searching inside V(C) u {x}. A missing length violates the
// insertion lemma this implements and raises std::logic_error; a violated
// premise raises std::invalid_argument.
std::map<int, Cycle> lemma31_cycles(const Digraph& d, const Cycle& c, int x);

// l in [1,m] with O(x,V(P)) = {x_1..x_l} and I(x,V(P)) = {x_l..x_m}, if the
// neighborhoods split that way.
struct SplitResult {
  int l;
  VSet out_prefix;
  VSet in_suffix;
};
std::optional<SplitResult> lemma33_split(const Digraph& d, const Path& p,
                                         int x);

namespace raw {
// Existence-only k-cycle check on raw rows; same search order as
// has_cycle_length. restrict limits the search to a vertex subset.
bool has_cycle(const VSet* rows, int p, int k);
bool has_cycle_in(const VSet* rows, int p, int k, VSet restrict_set);
}  // namespace raw

}  // namespace dgc
