#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycles.hpp"
#include "digraph.hpp"
#include "families.hpp"

// Per-digraph verdicts for the two characterization theorems (cycles of
// length 3 and 4, pre-Hamiltonian cycle) and the strong/domination lemma,
// plus whole-order sweeps hunting for violations.

namespace dgc {

enum class TheoremId { T43I, T43II, T51, L34I, L34II };
constexpr int kTheoremCount = 5;
const char* theorem_name(TheoremId t);
std::optional<TheoremId> theorem_from_name(const std::string& s);

struct Verdict {
  TheoremId theorem;
  bool applicable = false;       // degree hypotheses hold
  bool predicate_holds = false;  // e.g. the cycle exists
  bool exception_member = false;
  bool consistent = true;  // !applicable || (predicate XOR exception)
  std::optional<Cycle> cycle;
  std::vector<FamilyWitness> members;
};

// The "either ... or" of each theorem read exclusively: an applicable
// digraph must have the predicate or be in the exception list, never both.
// L34II is checked by exhaustion over all valid (B,x) pairs; supported for
// p <= 16 only (throws beyond).
Verdict check_theorem(const Digraph& d, TheoremId t);

// Single (B,x) instance of the domination lemma: for |B| >= (p+1)/2 both
// A(x->B) and A(B->x) are nonempty; for |B| = floor(p/2) an empty side
// forces x to dominate (resp. be dominated by) all of V \ (B u {x}).
// Throws if the hypotheses or the size precondition fail.
Verdict check_lemma34_ii_detail(const Digraph& d, VSet b, int x);

struct SweepOptions {
  int p = 5;
  bool exhaustive = true;
  std::uint64_t seed = 0;        // random mode
  std::uint64_t trials = 0;      // random mode
  double arc_prob = 0.75;        // random mode
  int workers = 0;               // 0 = available parallelism
  unsigned theorem_mask = 0x1f;  // bit t set: include theorem t
};

struct SweepReport {
  SweepOptions options;
  std::uint64_t examined = 0;
  std::uint64_t applicable = 0;
  struct PerTheorem {
    std::uint64_t consistent = 0;
    std::uint64_t violations = 0;
  };
  std::array<PerTheorem, kTheoremCount> per_theorem{};
  // One entry per offending (digraph, theorem): theorem name + text block.
  struct Violation {
    TheoremId theorem;
    std::string digraph_text;
  };
  std::vector<Violation> violations;
  std::uint64_t total_violations() const;
};

// Exhaustive mode scans all 2^{p(p-1)} labeled loop-free digraphs of order
// p in {5,6} with degree-bound pruning; random mode draws `trials` seeded
// samples for p in [5,8]. Deterministic for fixed options, independent of
// worker count. Throws on unsupported (p, mode).
SweepReport sweep(const SweepOptions& options);

// Line-oriented key/value rendering plus violation blocks.
std::string render_report(const SweepReport& r);

}  // namespace dgc
