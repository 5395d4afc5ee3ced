#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"

// Generators and recognizers for the exceptional digraph families: the two
// glued-clique families H(n,n) and H(n,n-1,1), the H_2n / H'_2n pair, the
// near-complete bipartite family B(n,n), the symmetric classics (Q_k*, K_n*,
// K*_{p,q}, [(K_n u K_n)+K_1]*) and the three fixed 6-vertex digraphs H'_6,
// H''_6, H'''_6.

namespace dgc {

enum class FamilyKind {
  HNN,                    // two K_n* with forward-only cross arcs
  HN11,                   // independent F, K*_{n,n-1} to B, special vertex a
  H2N,                    // Fig. 1a digraph
  H2NPrime,               // H_2n plus the arc y->x
  BNN,                    // K*_{n,n} minus <= n independent arcs
  SymCycle,               // Q_k*
  CompleteSym,            // K_n*
  CompleteBipartiteSym,   // K*_{p,q}
  JoinTwoCliquesPlusOne,  // [(K_n u K_n)+K_1]*
  H6Prime,
  H6DoublePrime,
  H6TriplePrime,
};

const char* kind_name(FamilyKind k);

enum class Hn11Orientation { In, Out };  // In: I(a)=B and a->F; Out: O(a)=B and F->a

struct FamilySpec {
  FamilyKind kind;
  int n = 0;  // main size parameter; SymCycle length; first side of K*_{p,q}
  int q = 0;  // second side of K*_{p,q}
  // HNN: cross arcs as (i,j) with i in [0,n) indexing F and j in [0,n)
  // indexing B.
  std::vector<std::pair<int, int>> cross;
  // BNN: deleted arcs of K*_{n,n} in canonical numbering (F = 0..n-1,
  // H = n..2n-1), pairwise vertex-disjoint, at most n of them.
  std::vector<std::pair<int, int>> deleted;
  // HN11: arcs of the inner digraph on B u {a} in canonical numbering
  // (B = n..2n-2, a = 2n-1).
  std::vector<std::pair<int, int>> inner;
  Hn11Orientation orientation = Hn11Orientation::In;
};

// Canonical instance of the spec. Throws std::invalid_argument naming the
// violated invariant.
//
// Canonical numbering: HNN/BNN: F = 0..n-1, B = n..2n-1. HN11: F = 0..n-1,
// B = n..2n-2, a = 2n-1. H2N: F = 0..n-2, B = n-1..2n-3, x = 2n-2,
// y = 2n-1. JoinTwoCliquesPlusOne: cliques 0..n-1 and n..2n-1, centre 2n.
// H6 variants: the defining letter order maps to 0..5.
Digraph generate(const FamilySpec& spec);

struct FamilyWitness {
  FamilySpec spec;
  std::vector<int> mapping;  // vertex of D -> canonical vertex
};

// One witness per family D belongs to; empty if none. Relabeling D by a
// witness mapping reproduces generate(witness.spec) arc-for-arc.
std::vector<FamilyWitness> recognize(const Digraph& d);

bool has_kind(const std::vector<FamilyWitness>& ws, FamilyKind k);

// Seeded sampler for the families with free parameters (HNN cross set, BNN
// deletions, HN11 inner digraph). Other kinds ignore the seed.
FamilySpec sample_spec(FamilyKind kind, int n, int q, std::uint64_t seed);

// Family-spec strings as used by the CLI, e.g. "hnn:n=3,cross=full",
// "bnn:n=4,k=2", "q:k=5", "h6pp". Sampled free parameters draw from seed.
FamilySpec parse_spec(const std::string& text, std::uint64_t seed);
std::string describe(const FamilySpec& spec);

}  // namespace dgc
