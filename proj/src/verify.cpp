#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "textio.hpp"

namespace dgc {

const char* theorem_name(TheoremId t) {
  switch (t) {
    case TheoremId::T43I: return "43i";
    case TheoremId::T43II: return "43ii";
    case TheoremId::T51: return "51";
    case TheoremId::L34I: return "l34i";
    case TheoremId::L34II: return "l34ii";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& s) {
  for (int i = 0; i < kTheoremCount; ++i) {
    TheoremId t = static_cast<TheoremId>(i);
    if (s == theorem_name(t)) return t;
  }
  return std::nullopt;
}

namespace {

constexpr TheoremId kAllTheorems[] = {TheoremId::T43I, TheoremId::T43II,
                                      TheoremId::T51, TheoremId::L34I,
                                      TheoremId::L34II};

// Every exception family instance of order p has at most this many arcs
// (the bound is reached by H(n,n) with a full cross set for even p, and by
// [(K_n u K_n)+K_1]* / K*_{n,n+1} for odd p). Denser digraphs cannot be
// exceptional, so recognition can be skipped for them.
int max_exception_arcs(int p) {
  int n = p / 2;
  return p % 2 == 0 ? 3 * n * n - 2 * n : 2 * n * n + 2 * n;
}

bool witness_matches(const FamilyWitness& w, TheoremId t, int p) {
  int n = p / 2;
  FamilyKind k = w.spec.kind;
  switch (t) {
    case TheoremId::T43I:
      return k == FamilyKind::BNN ||
             (k == FamilyKind::SymCycle && w.spec.n == 5) ||
             (k == FamilyKind::CompleteBipartiteSym &&
              ((w.spec.n == n && w.spec.q == n + 1) ||
               (w.spec.n == n + 1 && w.spec.q == n)));
    case TheoremId::T43II:
      return (k == FamilyKind::HNN && w.spec.n == 3) ||
             (k == FamilyKind::SymCycle && w.spec.n == 5) ||
             k == FamilyKind::H6Prime || k == FamilyKind::H6DoublePrime ||
             k == FamilyKind::H6TriplePrime ||
             (k == FamilyKind::JoinTwoCliquesPlusOne && w.spec.n == 2);
    case TheoremId::T51:
      return k == FamilyKind::HNN || k == FamilyKind::BNN ||
             k == FamilyKind::JoinTwoCliquesPlusOne || k == FamilyKind::H2N ||
             k == FamilyKind::H2NPrime ||
             (k == FamilyKind::SymCycle && w.spec.n == 5);
    case TheoremId::L34I:
      return k == FamilyKind::HNN;
    case TheoremId::L34II:
      return false;
  }
  return false;
}

// Clause check for one (B,x) pair; sizes below floor(p/2) are skipped by
// the callers.
bool l34ii_pair_holds(const VSet* out_rows, const VSet* in_rows, int p, VSet b,
                      int x, VSet mask) {
  int s = popcount(b);
  VSet rest = mask & ~b & ~bit(x);
  if (2 * s >= p + 1)
    return (out_rows[x] & b) && (in_rows[x] & b);
  if (!(out_rows[x] & b) && (out_rows[x] & rest) != rest) return false;
  if (!(in_rows[x] & b) && (in_rows[x] & rest) != rest) return false;
  return true;
}

// Exhaustion over all x and all B subseteq V \ {x} with |B| >= floor(p/2).
bool l34ii_holds(const VSet* rows, int p) {
  VSet mask = bit(p) - 1;
  VSet in_rows[kMaxOrder] = {};
  for (int i = 0; i < p; ++i)
    for (int j : bits_of(rows[i])) in_rows[j] |= bit(i);
  int half = p / 2;
  for (int x = 0; x < p; ++x) {
    VSet others = mask & ~bit(x);
    VSet b = others;
    for (;;) {
      if (popcount(b) >= half &&
          !l34ii_pair_holds(rows, in_rows, p, b, x, mask))
        return false;
      if (b == 0) break;
      b = (b - 1) & others;
    }
  }
  return true;
}

int predicate_cycle_length(TheoremId t, int p) {
  switch (t) {
    case TheoremId::T43I: return 3;
    case TheoremId::T43II: return 4;
    case TheoremId::T51: return p - 1;
    default: return 0;
  }
}

}  // namespace

Verdict check_theorem(const Digraph& d, TheoremId t) {
  Verdict v;
  v.theorem = t;
  v.applicable = meets_hypotheses(d).holds;
  if (!v.applicable) return v;
  int p = d.order();
  if (int k = predicate_cycle_length(t, p)) {
    v.cycle = has_cycle_length(d, k);
    v.predicate_holds = v.cycle.has_value();
  } else if (t == TheoremId::L34I) {
    v.predicate_holds = is_strong(d);
  } else {
    if (p > 16)
      throw std::invalid_argument(
          "l34ii subset exhaustion supported for p <= 16");
    v.predicate_holds = l34ii_holds(d.rows().data(), p);
  }
  if (t != TheoremId::L34II && d.arc_count() <= max_exception_arcs(p)) {
    for (auto& w : recognize(d))
      if (witness_matches(w, t, p)) v.members.push_back(std::move(w));
  }
  v.exception_member = !v.members.empty();
  v.consistent = v.predicate_holds != v.exception_member;
  return v;
}

Verdict check_lemma34_ii_detail(const Digraph& d, VSet b, int x) {
  int p = d.order();
  if (!meets_hypotheses(d).holds)
    throw std::invalid_argument("degree hypotheses do not hold");
  if (x < 0 || x >= p || (b & bit(x)))
    throw std::invalid_argument("x must be a vertex outside B");
  if (b & ~d.vertex_mask())
    throw std::invalid_argument("B contains non-vertices");
  int s = popcount(b);
  if (!(2 * s >= p + 1 || s == p / 2))
    throw std::invalid_argument("need |B| >= (p+1)/2 or |B| = floor(p/2)");
  VSet in_rows[kMaxOrder];
  for (int i = 0; i < p; ++i) in_rows[i] = d.in_set(i);
  Verdict v;
  v.theorem = TheoremId::L34II;
  v.applicable = true;
  v.predicate_holds = l34ii_pair_holds(d.rows().data(), in_rows, p, b, x,
                                       d.vertex_mask());
  v.consistent = v.predicate_holds;
  return v;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

namespace {

struct Tally {
  std::uint64_t examined = 0;
  std::uint64_t applicable = 0;
  SweepReport::PerTheorem per_theorem[kTheoremCount] = {};
  std::vector<SweepReport::Violation> violations;

  void merge(const Tally& o) {
    examined += o.examined;
    applicable += o.applicable;
    for (int i = 0; i < kTheoremCount; ++i) {
      per_theorem[i].consistent += o.per_theorem[i].consistent;
      per_theorem[i].violations += o.per_theorem[i].violations;
    }
    violations.insert(violations.end(), o.violations.begin(),
                      o.violations.end());
  }
};

// All five verdicts for one applicable digraph, on raw rows.
void judge(const VSet* rows, int p, unsigned theorem_mask, Tally& tally) {
  ++tally.applicable;
  bool exceptional[kTheoremCount] = {};
  int arcs = 0;
  for (int i = 0; i < p; ++i) arcs += popcount(rows[i]);
  Digraph d;  // built lazily, only for the rare sparse candidates
  if (arcs <= max_exception_arcs(p)) {
    d = Digraph::from_rows(p, std::vector<VSet>(rows, rows + p));
    for (auto& w : recognize(d))
      for (TheoremId t : kAllTheorems)
        if (witness_matches(w, t, p))
          exceptional[static_cast<int>(t)] = true;
  }
  for (TheoremId t : kAllTheorems) {
    int ti = static_cast<int>(t);
    if (!(theorem_mask & (1u << ti))) continue;
    bool pred;
    if (int k = predicate_cycle_length(t, p))
      pred = raw::has_cycle(rows, p, k);
    else if (t == TheoremId::L34I)
      pred = raw::is_strong(rows, p);
    else
      pred = l34ii_holds(rows, p);
    if (pred != exceptional[ti]) {
      ++tally.per_theorem[ti].consistent;
    } else {
      ++tally.per_theorem[ti].violations;
      if (d.order() == 0)
        d = Digraph::from_rows(p, std::vector<VSet>(rows, rows + p));
      tally.violations.push_back({t, encode(d)});
    }
  }
}

// Maps a compact (p-1)-bit value to a row mask with the diagonal bit of row
// i cleared.
VSet expand_row(std::uint64_t compact, int i) {
  VSet low = compact & (bit(i) - 1);
  VSet high = (compact >> i) << (i + 1);
  return low | high;
}

std::uint64_t pow_rows(int p, int free_rows) {
  return std::uint64_t{1} << ((p - 1) * free_rows);
}

// Depth-first assignment of out-rows with degree-bound pruning: a partial
// assignment dies as soon as a row's out-degree is below the semi-degree
// bound or some column can no longer collect enough in-arcs.
struct Enumerator {
  int p;
  int semi;
  unsigned theorem_mask;
  VSet rows[kMaxSweepOrder];
  int inc[kMaxSweepOrder];  // in-arcs seen so far per column
  Tally tally;

  bool columns_feasible(int assigned_up_to) {
    int remaining = p - 1 - assigned_up_to;
    for (int j = 0; j < p; ++j) {
      int avail = remaining - (j > assigned_up_to ? 1 : 0);
      int need = semi;
      if (j <= assigned_up_to)
        need = std::max(need, p - 1 - popcount(rows[j]));
      if (inc[j] + avail < need) return false;
    }
    return true;
  }

  void assign(int i) {
    if (i == p) {
      ++tally.examined;
      // Columns are feasible by construction; the leaf check is exact.
      for (int j = 0; j < p; ++j) {
        int od = popcount(rows[j]);
        if (od < semi || inc[j] < semi || od + inc[j] < p - 1) return;
      }
      judge(rows, p, theorem_mask, tally);
      return;
    }
    std::uint64_t skipped = pow_rows(p, p - 1 - i);
    for (std::uint64_t compact = 0; compact < (std::uint64_t{1} << (p - 1));
         ++compact) {
      VSet row = expand_row(compact, i);
      if (popcount(row) < semi) {
        tally.examined += skipped;
        continue;
      }
      rows[i] = row;
      for (int j : bits_of(row)) ++inc[j];
      if (columns_feasible(i))
        assign(i + 1);
      else
        tally.examined += skipped;
      for (int j : bits_of(row)) --inc[j];
      rows[i] = 0;
    }
  }
};

Tally run_exhaustive_shard(const SweepOptions& opt, std::uint64_t shard) {
  Enumerator e{};
  e.p = opt.p;
  e.semi = (opt.p - 1) / 2;
  e.theorem_mask = opt.theorem_mask;
  VSet row0 = expand_row(shard, 0);
  e.rows[0] = row0;
  std::uint64_t skipped = pow_rows(opt.p, opt.p - 1);
  if (popcount(row0) < e.semi) {
    e.tally.examined = skipped;
    return e.tally;
  }
  for (int j : bits_of(row0)) ++e.inc[j];
  if (e.columns_feasible(0))
    e.assign(1);
  else
    e.tally.examined = skipped;
  return e.tally;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Tally run_random_block(const SweepOptions& opt, std::uint64_t first,
                       std::uint64_t count) {
  Tally tally;
  int p = opt.p;
  for (std::uint64_t t = first; t < first + count; ++t) {
    std::mt19937_64 rng(splitmix64(opt.seed ^ splitmix64(t)));
    VSet rows[kMaxSweepOrder] = {};
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        if (i == j) continue;
        double u = (rng() >> 11) * 0x1.0p-53;
        if (u < opt.arc_prob) rows[i] |= bit(j);
      }
    ++tally.examined;
    if (raw::meets_hypotheses(rows, p)) judge(rows, p, opt.theorem_mask, tally);
  }
  return tally;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs `jobs` independent work items on a pool, merging results in job
// order so the report is identical for any worker count.
Tally run_jobs(std::uint64_t jobs, int workers,
               const std::function<Tally(std::uint64_t)>& job) {
  std::vector<Tally> results(jobs);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::uint64_t j = next.fetch_add(1);
      if (j >= jobs) return;
      results[j] = job(j);
    }
  };
  std::vector<std::thread> pool;
  int nthreads = std::min<std::uint64_t>(workers, jobs);
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  Tally total;
  for (auto& r : results) total.merge(r);
  return total;
}

}  // namespace

SweepReport sweep(const SweepOptions& options) {
  if (options.exhaustive) {
    if (options.p != 5 && options.p != 6)
      throw std::invalid_argument("exhaustive sweep supports p in {5,6}");
  } else {
    if (options.p < 5 || options.p > 8)
      throw std::invalid_argument("random sweep supports p in [5,8]");
    if (options.trials == 0)
      throw std::invalid_argument("random sweep needs trials > 0");
    if (options.arc_prob <= 0.0 || options.arc_prob >= 1.0)
      throw std::invalid_argument("arc probability must be in (0,1)");
  }
  int workers = resolve_workers(options.workers);
  Tally total;
  if (options.exhaustive) {
    std::uint64_t shards = std::uint64_t{1} << (options.p - 1);
    total = run_jobs(shards, workers, [&](std::uint64_t s) {
      return run_exhaustive_shard(options, s);
    });
  } else {
    constexpr std::uint64_t kBlock = 4096;
    std::uint64_t blocks = (options.trials + kBlock - 1) / kBlock;
    total = run_jobs(blocks, workers, [&](std::uint64_t b) {
      std::uint64_t first = b * kBlock;
      std::uint64_t count = std::min(kBlock, options.trials - first);
      return run_random_block(options, first, count);
    });
  }
  SweepReport r;
  r.options = options;
  r.options.workers = workers;
  r.examined = total.examined;
  r.applicable = total.applicable;
  for (int i = 0; i < kTheoremCount; ++i) r.per_theorem[i] = total.per_theorem[i];
  r.violations = std::move(total.violations);
  return r;
}

std::uint64_t SweepReport::total_violations() const {
  std::uint64_t n = 0;
  for (auto& pt : per_theorem) n += pt.violations;
  return n;
}

std::string render_report(const SweepReport& r) {
  std::ostringstream os;
  os << "p " << r.options.p << "\n";
  os << "mode " << (r.options.exhaustive ? "exhaustive" : "random") << "\n";
  if (!r.options.exhaustive) {
    os << "seed " << r.options.seed << "\n";
    os << "trials " << r.options.trials << "\n";
    os << "arc_prob " << r.options.arc_prob << "\n";
  }
  os << "examined " << r.examined << "\n";
  os << "applicable " << r.applicable << "\n";
  for (int i = 0; i < kTheoremCount; ++i) {
    if (!(r.options.theorem_mask & (1u << i))) continue;
    os << "theorem " << theorem_name(static_cast<TheoremId>(i)) << " consistent "
       << r.per_theorem[i].consistent << " violations "
       << r.per_theorem[i].violations << "\n";
  }
  os << "total_violations " << r.total_violations() << "\n";
  for (auto& v : r.violations) {
    os << "violation " << theorem_name(v.theorem) << "\n";
    os << v.digraph_text;
  }
  return os.str();
}

}  // namespace dgc
