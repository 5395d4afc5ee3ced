#include "cycles.hpp"

#include <algorithm>

namespace dgc {

namespace {

bool seq_arcs_ok(const Digraph& d, const std::vector<int>& v, bool closed) {
  int n = static_cast<int>(v.size());
  if (n < 2) return false;
  VSet seen = 0;
  for (int x : v) {
    if (x < 0 || x >= d.order() || (seen & bit(x))) return false;
    seen |= bit(x);
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!d.arc(v[i], v[i + 1])) return false;
  return !closed || d.arc(v[n - 1], v[0]);
}

// True iff some walk of exactly r steps inside `allowed` leads from cur to
// start. Walks may repeat vertices, so this is a necessary condition for a
// simple path of length r; it captures reachability and parity obstructions.
bool walk_reaches(const VSet* rows, VSet allowed, int cur, int start, int r) {
  VSet s = bit(cur);
  for (int i = 0; i < r; ++i) {
    VSet nxt = 0;
    for (int v : bits_of(s)) nxt |= rows[v];
    s = nxt & allowed;
    if (!s) return false;
  }
  return (s >> start) & 1;
}

// DFS for a k-cycle whose anchor is `start`, using only vertices from
// `allowed` (start excluded from allowed). Lowest out-neighbor first; fills
// `out` with the witness when found. The walk prune only discards branches
// with no completion, so the witness found is independent of it.
bool dfs_cycle(const VSet* rows, int k, int start, VSet allowed, VSet visited,
               int cur, int depth, std::vector<int>* out) {
  if (depth == k) return (rows[cur] >> start) & 1;
  // k - depth vertices remain to be placed, plus the closing arc: the
  // remaining walk back to the anchor has exactly k - depth + 1 steps.
  if (k >= 9 && k - depth >= 3 &&
      !walk_reaches(rows, (allowed & ~visited) | bit(start), cur, start,
                    k - depth + 1))
    return false;
  for (int next : bits_of(rows[cur] & allowed & ~visited)) {
    if (out) out->push_back(next);
    if (dfs_cycle(rows, k, start, allowed, visited | bit(next), next, depth + 1,
                  out))
      return true;
    if (out) out->pop_back();
  }
  return false;
}

bool find_cycle(const VSet* rows, int p, int k, VSet restrict_set,
                std::vector<int>* out) {
  // Anchor the search at the lowest vertex of the cycle: for ascending s,
  // only vertices above s may complete it.
  for (int s = 0; s < p; ++s) {
    if (!(restrict_set & bit(s))) continue;
    VSet above = restrict_set & ~(bit(s) | (bit(s) - 1));
    if (popcount(above) < k - 1) break;
    if (out) {
      out->clear();
      out->push_back(s);
    }
    if (dfs_cycle(rows, k, s, above, 0, s, 1, out)) return true;
  }
  return false;
}

}  // namespace

bool Path::valid_in(const Digraph& d) const { return seq_arcs_ok(d, verts, false); }
bool Cycle::valid_in(const Digraph& d) const { return seq_arcs_ok(d, verts, true); }

std::optional<Cycle> has_cycle_length(const Digraph& d, int k) {
  if (k < 2 || k > d.order())
    throw std::invalid_argument("cycle length out of range: " +
                                std::to_string(k));
  std::vector<int> w;
  if (find_cycle(d.rows().data(), d.order(), k, d.vertex_mask(), &w))
    return Cycle{std::move(w)};
  return std::nullopt;
}

CycleSpectrum cycle_spectrum(const Digraph& d) {
  CycleSpectrum s;
  int p = d.order();
  for (int k = 2; k <= p; ++k)
    if (raw::has_cycle(d.rows().data(), p, k)) s.lengths.insert(k);
  s.hamiltonian = s.lengths.count(p) > 0;
  s.pre_hamiltonian = p >= 3 && s.lengths.count(p - 1) > 0;
  s.pancyclic = true;
  for (int k = 3; k <= p; ++k)
    if (!s.lengths.count(k)) s.pancyclic = false;
  if (p < 3) s.pancyclic = false;
  return s;
}

std::optional<Insertion> insert_vertex(const Digraph& d, const Path& p, int x) {
  if (!p.valid_in(d)) throw std::invalid_argument("invalid path");
  if (x < 0 || x >= d.order()) throw std::invalid_argument("vertex out of range");
  for (int v : p.verts)
    if (v == x) throw std::invalid_argument("vertex already on path");
  int m = static_cast<int>(p.verts.size());
  for (int i = 0; i + 1 < m; ++i) {
    if (d.arc(p.verts[i], x) && d.arc(x, p.verts[i + 1])) {
      Path ext;
      ext.verts.assign(p.verts.begin(), p.verts.begin() + i + 1);
      ext.verts.push_back(x);
      ext.verts.insert(ext.verts.end(), p.verts.begin() + i + 1, p.verts.end());
      return Insertion{i + 1, std::move(ext)};
    }
  }
  return std::nullopt;
}

Extension extend_path_maximally(const Digraph& d, const Path& p, VSet pool) {
  for (int v : p.verts)
    if (pool & bit(v)) throw std::invalid_argument("pool meets path");
  Extension e{p, {}};
  bool progress = true;
  while (progress) {
    progress = false;
    for (int z : bits_of(pool)) {
      if (auto ins = insert_vertex(d, e.final, z)) {
        e.final = std::move(ins->extended);
        e.absorbed.push_back(z);
        pool &= ~bit(z);
        progress = true;
        break;
      }
    }
  }
  return e;
}

std::map<int, Cycle> lemma31_cycles(const Digraph& d, const Cycle& c, int x) {
  if (!c.valid_in(d)) throw std::invalid_argument("invalid cycle");
  VSet cv = 0;
  for (int v : c.verts) cv |= bit(v);
  if (cv & bit(x)) throw std::invalid_argument("vertex lies on the cycle");
  int m = c.length();
  DegreeProfile dp = d.degrees_in(x, cv);
  if (dp.d() < m + 1)
    throw std::invalid_argument("premise d(x,V(C)) >= m+1 not met");
  std::map<int, Cycle> found;
  VSet restrict_set = cv | bit(x);
  for (int k = 2; k <= m + 1; ++k) {
    // Anchor at x so every witness passes through it.
    std::vector<int> w{x};
    if (!dfs_cycle(d.rows().data(), k, x, restrict_set & ~bit(x), 0, x, 1, &w))
      throw std::logic_error("insertion lemma violated: no " +
                             std::to_string(k) + "-cycle through vertex " +
                             std::to_string(x));
    found.emplace(k, Cycle{std::move(w)});
  }
  return found;
}

std::optional<SplitResult> lemma33_split(const Digraph& d, const Path& p,
                                         int x) {
  if (!p.valid_in(d)) throw std::invalid_argument("invalid path");
  for (int v : p.verts)
    if (v == x) throw std::invalid_argument("vertex lies on the path");
  int m = static_cast<int>(p.verts.size());
  // Positions (1-based) of out- and in-neighbors of x along P.
  std::vector<int> out_pos, in_pos;
  for (int i = 0; i < m; ++i) {
    if (d.arc(x, p.verts[i])) out_pos.push_back(i + 1);
    if (d.arc(p.verts[i], x)) in_pos.push_back(i + 1);
  }
  if (out_pos.empty() || in_pos.empty()) return std::nullopt;
  int l = static_cast<int>(out_pos.size());
  if (out_pos.back() != l) return std::nullopt;          // not a prefix
  if (in_pos.front() != l) return std::nullopt;          // must start at x_l
  if (static_cast<int>(in_pos.size()) != m - l + 1) return std::nullopt;
  SplitResult r{l, 0, 0};
  for (int i = 0; i < l; ++i) r.out_prefix |= bit(p.verts[i]);
  for (int i = l - 1; i < m; ++i) r.in_suffix |= bit(p.verts[i]);
  return r;
}

namespace raw {

bool has_cycle(const VSet* rows, int p, int k) {
  VSet mask = p == 64 ? ~VSet{0} : (VSet{1} << p) - 1;
  return find_cycle(rows, p, k, mask, nullptr);
}

bool has_cycle_in(const VSet* rows, int p, int k, VSet restrict_set) {
  return find_cycle(rows, p, k, restrict_set, nullptr);
}

}  // namespace raw

}  // namespace dgc
