#include "digraph.hpp"

#include <algorithm>

namespace dgc {

Digraph Digraph::build(int p, const std::vector<std::pair<int, int>>& arcs) {
  if (p < 1 || p > kMaxOrder)
    throw std::invalid_argument("order must be in [1," +
                                std::to_string(kMaxOrder) + "], got " +
                                std::to_string(p));
  std::vector<VSet> rows(p, 0);
  for (auto [x, y] : arcs) {
    if (x < 0 || x >= p || y < 0 || y >= p)
      throw std::invalid_argument("arc endpoint out of range: (" +
                                  std::to_string(x) + "," + std::to_string(y) +
                                  ")");
    if (x == y)
      throw std::invalid_argument("loop rejected: (" + std::to_string(x) + "," +
                                  std::to_string(y) + ")");
    rows[x] |= bit(y);
  }
  return Digraph(p, std::move(rows));
}

Digraph Digraph::from_rows(int p, std::vector<VSet> rows) {
  if (p < 1 || p > kMaxOrder || static_cast<int>(rows.size()) != p)
    throw std::invalid_argument("bad row count for order " + std::to_string(p));
  VSet mask = p == 64 ? ~VSet{0} : bit(p) - 1;
  for (int i = 0; i < p; ++i) {
    if (rows[i] & bit(i))
      throw std::invalid_argument("loop bit set at row " + std::to_string(i));
    if (rows[i] & ~mask)
      throw std::invalid_argument("row " + std::to_string(i) +
                                  " uses bits beyond order");
  }
  return Digraph(p, std::move(rows));
}

VSet Digraph::in_set(int x) const {
  VSet in = 0;
  for (int i = 0; i < p_; ++i)
    if ((rows_[i] >> x) & 1) in |= bit(i);
  return in;
}

DegreeProfile Digraph::degrees(int x) const {
  return {popcount(rows_[x]), popcount(in_set(x))};
}

DegreeProfile Digraph::degrees_in(int x, VSet f) const {
  f &= ~bit(x);
  return {popcount(rows_[x] & f), popcount(in_set(x) & f)};
}

int Digraph::arc_count() const {
  int n = 0;
  for (int i = 0; i < p_; ++i) n += popcount(rows_[i]);
  return n;
}

Adjacency adjacency(const Digraph& d, int x, int y) {
  if (x == y) throw std::invalid_argument("adjacency needs distinct vertices");
  return {d.arc(x, y) ? 1 : 0, d.arc(y, x) ? 1 : 0};
}

ArcSetResult arc_set(const Digraph& d, VSet f, VSet b) {
  if (f & b) throw std::invalid_argument("arc_set needs disjoint sets");
  ArcSetResult r;
  r.full_domination = true;
  for (int x : bits_of(f)) {
    VSet hit = d.out_row(x) & b;
    r.count += popcount(hit);
    if (hit != b) r.full_domination = false;
  }
  return r;
}

std::pair<Digraph, std::vector<int>> induced(const Digraph& d, VSet f) {
  if (f == 0) throw std::invalid_argument("induced subdigraph of empty set");
  f &= d.vertex_mask();
  std::vector<int> map;  // new -> old
  for (int v : bits_of(f)) map.push_back(v);
  int q = static_cast<int>(map.size());
  std::vector<VSet> rows(q, 0);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (i != j && d.arc(map[i], map[j])) rows[i] |= bit(j);
  return {Digraph::from_rows(q, std::move(rows)), std::move(map)};
}

Digraph converse(const Digraph& d) {
  int p = d.order();
  std::vector<VSet> rows(p, 0);
  for (int i = 0; i < p; ++i)
    for (int j : bits_of(d.out_row(i))) rows[j] |= bit(i);
  return Digraph::from_rows(p, std::move(rows));
}

Digraph relabel(const Digraph& d, const std::vector<int>& perm) {
  int p = d.order();
  if (static_cast<int>(perm.size()) != p)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<VSet> rows(p, 0);
  for (int i = 0; i < p; ++i)
    for (int j : bits_of(d.out_row(i))) rows[perm[i]] |= bit(perm[j]);
  return Digraph::from_rows(p, std::move(rows));
}

namespace {

// Reachability closure: reach[i] = vertices reachable from i (incl. i).
void closure(const VSet* rows, int p, VSet* reach) {
  for (int i = 0; i < p; ++i) reach[i] = rows[i] | bit(i);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < p; ++i) {
      VSet acc = reach[i];
      for (int j : bits_of(reach[i])) acc |= reach[j];
      if (acc != reach[i]) {
        reach[i] = acc;
        changed = true;
      }
    }
  }
}

}  // namespace

std::vector<VSet> strong_components(const Digraph& d) {
  int p = d.order();
  VSet reach[kMaxOrder];
  closure(d.rows().data(), p, reach);
  // Vertices i, j are in one component iff mutually reachable. Emit
  // components in decreasing reachable-set size: arcs only go to components
  // whose reachable set is a strict subset.
  std::vector<VSet> comps;
  VSet seen = 0;
  std::vector<int> order(p);
  for (int i = 0; i < p; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return popcount(reach[a]) > popcount(reach[b]);
  });
  for (int i : order) {
    if (seen & bit(i)) continue;
    VSet comp = 0;
    for (int j : bits_of(reach[i]))
      if (reach[j] & bit(i)) comp |= bit(j);
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

bool is_strong(const Digraph& d) {
  return raw::is_strong(d.rows().data(), d.order());
}

namespace raw {

bool is_strong(const VSet* rows, int p) {
  if (p == 1) return true;
  VSet mask = p == 64 ? ~VSet{0} : bit(p) - 1;
  // Forward and backward reachability from vertex 0.
  VSet fwd = bit(0);
  for (;;) {
    VSet next = fwd;
    for (int j : bits_of(fwd)) next |= rows[j];
    if (next == fwd) break;
    fwd = next;
  }
  if (fwd != mask) return false;
  VSet bwd = bit(0);
  for (;;) {
    VSet next = bwd;
    for (int i = 0; i < p; ++i)
      if (rows[i] & bwd) next |= bit(i);
    if (next == bwd) break;
    bwd = next;
  }
  return bwd == mask;
}

bool meets_hypotheses(const VSet* rows, int p) {
  if (p < 5) return false;
  int semi = (p - 1) / 2;  // ceil((p-2)/2)
  int id[kMaxOrder] = {};
  for (int i = 0; i < p; ++i)
    for (int j : bits_of(rows[i])) ++id[j];
  for (int i = 0; i < p; ++i) {
    int od = popcount(rows[i]);
    if (od < semi || id[i] < semi || od + id[i] < p - 1) return false;
  }
  return true;
}

}  // namespace raw

HypothesisReport meets_hypotheses(const Digraph& d) {
  int p = d.order();
  HypothesisReport r;
  r.degree_bound = p - 1;
  r.semi_bound = (p - 1) / 2;  // ceil((p-2)/2)
  r.min_degree = r.min_out = r.min_in = 2 * (p - 1);
  for (int x = 0; x < p; ++x) {
    DegreeProfile dp = d.degrees(x);
    r.min_out = std::min(r.min_out, dp.od);
    r.min_in = std::min(r.min_in, dp.id);
    r.min_degree = std::min(r.min_degree, dp.d());
  }
  r.holds = p >= 5 && r.min_degree >= r.degree_bound &&
            r.min_out >= r.semi_bound && r.min_in >= r.semi_bound;
  return r;
}

namespace {

// Backtracking isomorphism with degree-pair refinement. Candidate classes:
// vertices may map only to vertices with the same (od, id).
bool iso_extend(const Digraph& a, const Digraph& b, std::vector<int>& phi,
                VSet used, int next) {
  int p = a.order();
  if (next == p) return true;
  DegreeProfile da = a.degrees(next);
  for (int cand = 0; cand < p; ++cand) {
    if (used & bit(cand)) continue;
    DegreeProfile db = b.degrees(cand);
    if (da.od != db.od || da.id != db.id) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (a.arc(next, prev) != b.arc(cand, phi[prev])) ok = false;
      if (a.arc(prev, next) != b.arc(phi[prev], cand)) ok = false;
    }
    if (!ok) continue;
    phi[next] = cand;
    if (iso_extend(a, b, phi, used | bit(cand), next + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.arc_count() != b.arc_count()) return std::nullopt;
  std::vector<int> phi(a.order(), -1);
  if (iso_extend(a, b, phi, 0, 0)) return phi;
  return std::nullopt;
}

}  // namespace dgc
