#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Loop-free digraphs up to 64 vertices, stored as one out-neighborhood
// bitmask per vertex. Opposite arc pairs (2-cycles) are allowed; loops and
// parallel arcs are not.

namespace dgc {

using VSet = std::uint64_t;

constexpr int kMaxOrder = 64;
constexpr int kMaxSweepOrder = 32;

inline int popcount(VSet s) { return __builtin_popcountll(s); }
inline int lowest_bit(VSet s) { return __builtin_ctzll(s); }
inline VSet bit(int i) { return VSet{1} << i; }

// Iterate set bits in increasing order: for (int v : bits_of(s)) ...
struct BitRange {
  VSet s;
  struct iterator {
    VSet s;
    int operator*() const { return lowest_bit(s); }
    iterator& operator++() { s &= s - 1; return *this; }
    bool operator!=(const iterator& o) const { return s != o.s; }
  };
  iterator begin() const { return {s}; }
  iterator end() const { return {0}; }
};
inline BitRange bits_of(VSet s) { return {s}; }

struct DegreeProfile {
  int od = 0;
  int id = 0;
  int d() const { return od + id; }
};

struct HypothesisReport {
  bool holds = false;
  int min_degree = 0;
  int min_out = 0;
  int min_in = 0;
  int degree_bound = 0;  // p - 1
  int semi_bound = 0;    // ceil((p-2)/2)
};

class Digraph {
 public:
  Digraph() = default;

  // Builds from an arc list; duplicate pairs collapse. Throws
  // std::invalid_argument on out-of-range endpoints or loops.
  static Digraph build(int p, const std::vector<std::pair<int, int>>& arcs);

  // Takes validated out-rows directly. Throws if a row has the diagonal bit
  // or any bit >= p set.
  static Digraph from_rows(int p, std::vector<VSet> rows);

  int order() const { return p_; }
  VSet vertex_mask() const { return p_ == 64 ? ~VSet{0} : bit(p_) - 1; }
  VSet out_row(int x) const { return rows_[x]; }
  const std::vector<VSet>& rows() const { return rows_; }

  bool arc(int x, int y) const { return (rows_[x] >> y) & 1; }
  VSet out_set(int x) const { return rows_[x]; }
  VSet in_set(int x) const;

  DegreeProfile degrees(int x) const;
  DegreeProfile degrees_in(int x, VSet f) const;  // od(x,F), id(x,F)

  int arc_count() const;

  bool operator==(const Digraph& o) const = default;

 private:
  Digraph(int p, std::vector<VSet> rows) : p_(p), rows_(std::move(rows)) {}
  int p_ = 0;
  std::vector<VSet> rows_;
};

// a+(x,y), a+(y,x) and a(x,y). Throws if x == y.
struct Adjacency {
  int fwd = 0;
  int bwd = 0;
  int a() const { return fwd + bwd; }
};
Adjacency adjacency(const Digraph& d, int x, int y);

// |A(F->B)| and whether F -> B (every vertex of F dominates every vertex of
// B; vacuously true for empty F or B). Throws if F and B overlap.
struct ArcSetResult {
  int count = 0;
  bool full_domination = false;
};
ArcSetResult arc_set(const Digraph& d, VSet f, VSet b);

// Subdigraph induced by F, vertices relabeled by increasing original index.
// Second element maps new index -> original vertex. Throws on empty F.
std::pair<Digraph, std::vector<int>> induced(const Digraph& d, VSet f);

Digraph converse(const Digraph& d);

// Applies a permutation: vertex v of d becomes perm[v] in the result.
Digraph relabel(const Digraph& d, const std::vector<int>& perm);

// Strong components in an order such that all arcs between distinct
// components go from earlier to later.
std::vector<VSet> strong_components(const Digraph& d);
bool is_strong(const Digraph& d);

// Vertex bijection phi with arc(i,j) in a <=> arc(phi(i),phi(j)) in b, or
// nullopt. Deterministic backtracking over degree-refined classes; intended
// for orders <= 16.
std::optional<std::vector<int>> isomorphic(const Digraph& a, const Digraph& b);

HypothesisReport meets_hypotheses(const Digraph& d);

namespace raw {
// Allocation-free variants used by the enumeration sweep; rows is an array
// of p out-masks with the same invariants as Digraph.
bool meets_hypotheses(const VSet* rows, int p);
bool is_strong(const VSet* rows, int p);
}  // namespace raw

}  // namespace dgc
