#pragma once
// Exact, exhaustive energy-landscape analysis at small side lengths: the
// full flip graph of hard-core configurations below an energy cap,
// bottleneck (minimax) communication energies, the communication level set,
// initial-cycle membership, the deep-well maximum, gate tests, and an
// essentiality oracle for the saddles of the e-o transition.
//
// Essentiality reduction (proved here, used by essential_saddles):
//   Work in the contracted graph whose vertices are the connected
//   components of the sub-level graph {H < Phi} plus the level-Phi saddles;
//   a saddle is adjacent to a component when some flip connects them. Every
//   optimal e-o path induces a walk in this graph and conversely, and its
//   saddle set S(w) is the set of saddle vertices visited. A saddle s is
//   essential iff it belongs to an inclusion-minimal realizable saddle set
//   (realizable = S(w) for some path w):
//     - if s sits in a minimal realizable M = S(w), a path w' with
//       S(w') <= S(w) \ {s} would realize a strict subset of M;
//     - conversely, if s is essential through a path w, any minimal
//       realizable subset M of S(w) must contain s, for otherwise
//       M <= S(w) \ {s} would be realizable.
//   A set M is minimal realizable iff it is the saddle set of some path and
//   no single deletion M \ {x} is realizable (a realizable proper subset T
//   would make M \ {x} realizable for x outside T). This makes greedy
//   single-deletion minimization a sound certificate generator.
//   A saddle adjacent to exactly one component is unessential: every visit
//   enters and leaves through that component, so excising the excursions
//   yields a path whose saddle set drops s and adds nothing.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "hcl/lattice.hpp"

namespace hcl {

struct LandscapeGraph {
  Lattice lat;
  int cap = 0;            // vertices satisfy H <= cap
  int min_particles = 0;  // equivalent particle-count bound
  std::vector<std::uint64_t> masks;  // ascending; vertex id = position
  std::size_t e_index = 0, o_index = 0;

  std::size_t size() const { return masks.size(); }
  int energy_of(std::size_t v) const {
    return -std::popcount(masks[v]);
  }
  // Difference between occupied odd and even sites.
  int manifold_of(std::size_t v) const {
    int m = 0;
    std::uint64_t b = masks[v];
    while (b) {
      int i = std::countr_zero(b);
      b &= b - 1;
      m += lat.is_even(i) ? -1 : 1;
    }
    return m;
  }
  std::size_t index_of(std::uint64_t mask) const {
    auto it = std::lower_bound(masks.begin(), masks.end(), mask);
    if (it == masks.end() || *it != mask)
      throw Error(ErrorCode::TargetNotInSet, "configuration not in landscape");
    return static_cast<std::size_t>(it - masks.begin());
  }
  bool contains(std::uint64_t mask) const {
    auto it = std::lower_bound(masks.begin(), masks.end(), mask);
    return it != masks.end() && *it == mask;
  }
  Configuration configuration_of(std::size_t v) const {
    Configuration cfg(lat);
    std::uint64_t b = masks[v];
    while (b) {
      int i = std::countr_zero(b);
      b &= b - 1;
      cfg.set(i, true);
    }
    return cfg;
  }
  std::uint64_t mask_of(const Configuration& cfg) const {
    std::uint64_t m = 0;
    for (int i = 0; i < lat.N(); ++i)
      if (cfg.occupied(i)) m |= std::uint64_t{1} << i;
    return m;
  }

  // Visits every flip neighbor of v that lies below the cap.
  template <typename F>
  void for_each_neighbor(std::size_t v, F&& fn) const {
    const std::uint64_t mask = masks[v];
    const int N = lat.N();
    const int particles = std::popcount(mask);
    for (int i = 0; i < N; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (mask & bit) {
        if (particles - 1 >= min_particles) fn(index_of(mask ^ bit));
      } else if ((mask & neighbor_masks[i]) == 0) {
        fn(index_of(mask | bit));
      }
    }
  }

  std::vector<std::uint64_t> neighbor_masks;  // per-site adjacency bitmask
};

// Enumerates every hard-core configuration with H <= cap (equivalently at
// least -cap particles) on the given lattice.
inline LandscapeGraph explore(const Lattice& lat, int cap) {
  const int N = lat.N();
  if (N > 64)
    throw Error(ErrorCode::MemoryBudgetExceeded,
                "landscape exploration is limited to N <= 64");
  LandscapeGraph g{lat};
  g.cap = cap;
  g.min_particles = std::max(0, -cap);
  const int he = -(N / 2);
  if (cap < he)
    throw Error(ErrorCode::TargetNotInSet,
                "cap excludes the ground state e");
  g.neighbor_masks.assign(N, 0);
  for (int i = 0; i < N; ++i)
    for (int n : lat.neighbors(i))
      g.neighbor_masks[i] |= std::uint64_t{1} << n;

  // Depth-first enumeration over sites in index order.
  struct Frame {
    int site;
    std::uint64_t mask;
    int count;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.count + (N - f.site) < g.min_particles) continue;  // cannot reach
    if (f.site == N) {
      if (f.count >= g.min_particles) g.masks.push_back(f.mask);
      continue;
    }
    const std::uint64_t bit = std::uint64_t{1} << f.site;
    stack.push_back({f.site + 1, f.mask, f.count});  // leave empty
    if ((f.mask & g.neighbor_masks[f.site]) == 0)
      stack.push_back({f.site + 1, f.mask | bit, f.count + 1});
  }
  std::sort(g.masks.begin(), g.masks.end());
  std::uint64_t e_mask = 0, o_mask = 0;
  for (int i = 0; i < N; ++i) {
    if (lat.is_even(i))
      e_mask |= std::uint64_t{1} << i;
    else
      o_mask |= std::uint64_t{1} << i;
  }
  g.e_index = g.index_of(e_mask);
  g.o_index = g.index_of(o_mask);
  return g;
}

inline int default_cap(const Lattice& lat) {
  return -(lat.N() / 2) + lat.L() + 1;
}

inline LandscapeGraph explore(const Lattice& lat) {
  return explore(lat, default_cap(lat));
}

namespace detail {

struct UnionFind {
  std::vector<int> parent, rank_;
  explicit UnionFind(std::size_t n) : parent(n, -1), rank_(n, 0) {}
  bool active(std::size_t v) const { return parent[v] >= 0; }
  void activate(std::size_t v) { parent[v] = static_cast<int>(v); }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    if (rank_[a] == rank_[b]) ++rank_[a];
    parent[b] = a;
    return a;
  }
};

// Vertex ids grouped by energy level, ascending.
inline std::vector<std::vector<std::size_t>> levels(const LandscapeGraph& g) {
  std::vector<std::vector<std::size_t>> by_level(g.cap - (-(g.lat.N() / 2)) + 1);
  const int base = -(g.lat.N() / 2);
  for (std::size_t v = 0; v < g.size(); ++v)
    by_level[g.energy_of(v) - base].push_back(v);
  return by_level;
}

}  // namespace detail

// Minimax communication energies Phi(v, target-set) for every vertex, via a
// single union-find sweep over increasing energy levels. A vertex first
// joins a component containing a target at level t; then Phi = t.
inline std::vector<int> communication_energies(
    const LandscapeGraph& g, const std::vector<std::size_t>& targets) {
  const int base = -(g.lat.N() / 2);
  std::vector<int> phi(g.size(), g.cap + 1);  // cap+1 = not connected below cap
  detail::UnionFind uf(g.size());
  std::vector<char> flagged(g.size(), 0);  // root-level: component holds target
  std::vector<std::vector<std::size_t>> pending(g.size());
  std::vector<char> is_target(g.size(), 0);
  for (std::size_t t : targets) is_target[t] = 1;
  auto by_level = detail::levels(g);
  for (std::size_t li = 0; li < by_level.size(); ++li) {
    const int level = base + static_cast<int>(li);
    for (std::size_t v : by_level[li]) {
      uf.activate(v);
      flagged[v] = is_target[v];
      if (!is_target[v]) pending[v].push_back(v);
    }
    for (std::size_t v : by_level[li]) {
      g.for_each_neighbor(v, [&](std::size_t w) {
        if (!uf.active(w)) return;
        int a = uf.find(static_cast<int>(v));
        int b = uf.find(static_cast<int>(w));
        if (a == b) return;
        bool fa = flagged[a], fb = flagged[b];
        int r = uf.unite(a, b);
        int other = r == a ? b : a;
        if (pending[other].size() > pending[r].size())
          std::swap(pending[other], pending[r]);
        pending[r].insert(pending[r].end(), pending[other].begin(),
                          pending[other].end());
        pending[other].clear();
        pending[other].shrink_to_fit();
        flagged[r] = fa || fb;
        if (flagged[r]) {
          for (std::size_t x : pending[r]) phi[x] = level;
          pending[r].clear();
        }
      });
    }
    // Targets entering at this level may already sit in a flagged component.
  }
  for (std::size_t t : targets) phi[t] = g.energy_of(t);
  return phi;
}

inline int communication_energy(const LandscapeGraph& g, std::size_t a,
                                std::size_t b) {
  if (a == b) return g.energy_of(a);
  std::vector<int> phi = communication_energies(g, {a});
  if (phi[b] > g.cap)
    throw Error(ErrorCode::Unreachable,
                "vertices not connected below the cap");
  return phi[b];
}

// Reachable set from `start` using only vertices with H <= bound.
inline std::vector<char> reachable_below(const LandscapeGraph& g,
                                         std::size_t start, int bound,
                                         const std::vector<char>* forbidden =
                                             nullptr) {
  std::vector<char> seen(g.size(), 0);
  if (g.energy_of(start) > bound) return seen;
  if (forbidden && (*forbidden)[start]) return seen;
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    g.for_each_neighbor(v, [&](std::size_t w) {
      if (seen[w] || g.energy_of(w) > bound) return;
      if (forbidden && (*forbidden)[w]) return;
      seen[w] = 1;
      stack.push_back(w);
    });
  }
  return seen;
}

// All configurations at level Phi(e,o) lying on some optimal e-o path.
inline std::vector<std::size_t> communication_level_set(const LandscapeGraph& g,
                                                        int* phi_out = nullptr) {
  int phi = communication_energy(g, g.e_index, g.o_index);
  if (phi_out) *phi_out = phi;
  std::vector<char> from_e = reachable_below(g, g.e_index, phi);
  std::vector<char> from_o = reachable_below(g, g.o_index, phi);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.energy_of(v) == phi && from_e[v] && from_o[v]) out.push_back(v);
  return out;
}

// Membership in the maximal cycle containing the chessboard of the given
// parity: Phi(v, ground) < Phi(e, o).
inline bool initial_cycle_member(const LandscapeGraph& g, std::size_t v,
                                 Parity ground) {
  std::size_t target = ground == Parity::Even ? g.e_index : g.o_index;
  if (v == target) return true;
  int phi_eo = communication_energy(g, g.e_index, g.o_index);
  std::vector<int> phi = communication_energies(g, {target});
  return phi[v] < phi_eo;
}

// max over vertices with H(v) <= energy_bound of Phi(v, {e,o}) - H(v).
//
// The graph must be explored with headroom above energy_bound: a vertex at
// the bound may sit in a small pocket whose every exit climbs a couple of
// levels before descending towards a ground state, so its communication
// height is only visible when the cap exceeds the bound.  If some vertex at
// or below the bound still cannot reach {e,o} within the cap, the cap was
// too small and we refuse to report a number.
inline int no_deep_wells_max(const LandscapeGraph& g, int energy_bound,
                             std::vector<int>* per_vertex = nullptr) {
  std::vector<int> phi = communication_energies(g, {g.e_index, g.o_index});
  int best = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.energy_of(v) > energy_bound) continue;
    if (phi[v] > g.cap)
      throw Error(ErrorCode::Unreachable,
                  "vertex not connected to the ground states below the cap");
    best = std::max(best, phi[v] - g.energy_of(v));
  }
  if (per_vertex) *per_vertex = std::move(phi);
  return best;
}

inline int no_deep_wells_max(const LandscapeGraph& g,
                             std::vector<int>* per_vertex = nullptr) {
  return no_deep_wells_max(g, g.cap, per_vertex);
}

// Does deleting W disconnect e from o in the H <= Phi(e,o) graph?
inline bool is_gate(const LandscapeGraph& g, const std::vector<std::size_t>& W) {
  int phi = communication_energy(g, g.e_index, g.o_index);
  std::vector<char> forbidden(g.size(), 0);
  for (std::size_t v : W) forbidden[v] = 1;
  std::vector<char> seen = reachable_below(g, g.e_index, phi, &forbidden);
  return !seen[g.o_index];
}

struct ContractedGraph {
  int phi = 0;
  std::vector<std::size_t> saddles;            // level-set vertex ids
  std::vector<int> component_of;               // per graph vertex; -1 if none
  int component_count = 0;
  int e_component = -1, o_component = -1;
  std::vector<std::vector<int>> saddle_adj;    // saddle -> component ids
  std::vector<std::vector<int>> comp_adj;      // component -> saddle ids
};

// Components of the optimal-path-relevant sub-level graph {H < Phi} plus
// the saddle/component incidence.
inline ContractedGraph contract(const LandscapeGraph& g) {
  ContractedGraph c;
  c.saddles = communication_level_set(g, &c.phi);
  c.component_of.assign(g.size(), -1);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.energy_of(v) >= c.phi || c.component_of[v] >= 0) continue;
    int id = c.component_count++;
    std::vector<std::size_t> stack{v};
    c.component_of[v] = id;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      g.for_each_neighbor(x, [&](std::size_t w) {
        if (g.energy_of(w) >= c.phi || c.component_of[w] >= 0) return;
        c.component_of[w] = id;
        stack.push_back(w);
      });
    }
  }
  c.e_component = c.component_of[g.e_index];
  c.o_component = c.component_of[g.o_index];
  c.saddle_adj.resize(c.saddles.size());
  c.comp_adj.resize(c.component_count);
  for (std::size_t si = 0; si < c.saddles.size(); ++si) {
    g.for_each_neighbor(c.saddles[si], [&](std::size_t w) {
      int comp = c.component_of[w];
      if (comp >= 0) c.saddle_adj[si].push_back(comp);
    });
    auto& adj = c.saddle_adj[si];
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    for (int comp : adj) c.comp_adj[comp].push_back(static_cast<int>(si));
  }
  return c;
}

struct GateReport {
  int phi = 0;
  std::vector<std::size_t> saddles;  // the full saddle set S(e,o)
  bool is_gate_full = false;         // S(e,o) is a gate (sanity check)
  std::vector<std::size_t> essential, unessential, unknown;
  bool budget_exhausted = false;
};

namespace detail {

// Reachability e-component -> o-component through allowed saddles; when a
// path exists and `witness` is non-null, fills it with the saddle ids used.
inline bool contracted_reachable(const ContractedGraph& c,
                                 const std::vector<char>& allowed,
                                 std::vector<int>* witness = nullptr,
                                 int via_saddle = -1) {
  // Optionally force the path through a given saddle by searching
  // e-comp -> saddle and saddle -> o-comp.
  std::vector<int> parent_saddle(c.component_count, -2);  // -2 unvisited
  auto bfs = [&](int from_comp, int to_comp, int must_use) {
    std::fill(parent_saddle.begin(), parent_saddle.end(), -2);
    std::vector<int> queue{from_comp};
    parent_saddle[from_comp] = -1;
    std::vector<int> parent_comp(c.component_count, -1);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int comp = queue[qi];
      if (comp == to_comp) break;
      for (int s : c.comp_adj[comp]) {
        if (!allowed[s] && s != must_use) continue;
        for (int next : c.saddle_adj[s]) {
          if (parent_saddle[next] != -2) continue;
          parent_saddle[next] = s;
          parent_comp[next] = comp;
          queue.push_back(next);
        }
      }
    }
    if (parent_saddle[to_comp] == -2) return false;
    if (witness) {
      int cur = to_comp;
      while (cur != from_comp) {
        witness->push_back(parent_saddle[cur]);
        cur = parent_comp[cur];
      }
    }
    return true;
  };
  if (witness) witness->clear();
  if (via_saddle < 0) return bfs(c.e_component, c.o_component, -1);
  // Forced: pick an entry component and an exit component of the saddle.
  for (int entry : c.saddle_adj[via_saddle]) {
    std::vector<int> first_leg;
    std::vector<int>* save = witness ? &first_leg : nullptr;
    std::vector<int>* old = witness;
    witness = save;
    bool ok_in = bfs(c.e_component, entry, -1);
    witness = old;
    if (!ok_in) continue;
    for (int exit : c.saddle_adj[via_saddle]) {
      std::vector<int> second_leg;
      std::vector<int>* save2 = witness ? &second_leg : nullptr;
      std::vector<int>* old2 = witness;
      witness = save2;
      bool ok_out = bfs(exit, c.o_component, -1);
      witness = old2;
      if (!ok_out) continue;
      if (witness) {
        *witness = first_leg;
        witness->push_back(via_saddle);
        witness->insert(witness->end(), second_leg.begin(), second_leg.end());
      }
      return true;
    }
  }
  return false;
}

// Component BFS from `from` using only saddles marked in `use`; returns the
// set of reached components.
inline std::vector<char> component_closure(const ContractedGraph& c, int from,
                                           const std::vector<char>& use) {
  std::vector<char> seen(c.component_count, 0);
  std::vector<int> queue{from};
  seen[from] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int s : c.comp_adj[queue[qi]]) {
      if (!use[s]) continue;
      for (int next : c.saddle_adj[s])
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
    }
  return seen;
}

// Shortest component path from -> to avoiding the saddle `banned` and the
// component `skip_comp` (-1 for none). On success optionally records the
// saddles used.
inline bool component_path(const ContractedGraph& c, int from, int to,
                           int banned, int skip_comp,
                           std::vector<int>* used = nullptr) {
  if (from == skip_comp || to == skip_comp) return false;
  std::vector<int> parent_saddle(c.component_count, -2), parent_comp(c.component_count, -1);
  std::vector<int> queue{from};
  parent_saddle[from] = -1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int comp = queue[qi];
    if (comp == to) break;
    for (int s : c.comp_adj[comp]) {
      if (s == banned) continue;
      for (int next : c.saddle_adj[s]) {
        if (next == skip_comp || parent_saddle[next] != -2) continue;
        parent_saddle[next] = s;
        parent_comp[next] = comp;
        queue.push_back(next);
      }
    }
  }
  if (parent_saddle[to] == -2) return false;
  if (used) {
    used->clear();
    for (int cur = to; cur != from; cur = parent_comp[cur])
      used->push_back(parent_saddle[cur]);
  }
  return true;
}

}  // namespace detail

// Tri-partitions the saddle set into essential / unessential / unknown.
// Certificates, in order of application (each is proved sound in the file
// header and the comments below):
//   - unessential: the saddle touches exactly one sub-level component, or,
//     more generally, every first passage through it can be excised: for
//     every ordered pair (A,B) of distinct adjacent components, e cannot
//     reach A while avoiding both the saddle and B;
//   - essential: two-territory separation: an e-side territory reaching an
//     adjacent component X and an o-side territory reaching an adjacent
//     component Y use disjoint saddle sets and do not touch, so within
//     their union the saddle is the only connection and every realizable
//     subset of the union must use it;
//   - essential (fallback): greedy single-deletion minimization of a
//     realizable saddle set that keeps the saddle produces an
//     inclusion-minimal realizable set containing it.
// `budget` bounds the number of contracted-graph reachability searches.
inline GateReport essential_saddles(const LandscapeGraph& g,
                                    std::uint64_t budget = 100000000) {
  ContractedGraph c = contract(g);
  GateReport rep;
  rep.phi = c.phi;
  rep.saddles = c.saddles;
  rep.is_gate_full = is_gate(g, c.saddles);
  std::uint64_t searches = 0;
  const std::size_t S = c.saddles.size();
  for (std::size_t si = 0; si < S; ++si) {
    if (c.saddle_adj[si].size() <= 1) {
      rep.unessential.push_back(c.saddles[si]);
      continue;
    }
    if (rep.budget_exhausted) {
      rep.unknown.push_back(c.saddles[si]);
      continue;
    }
    const int sid = static_cast<int>(si);
    const std::vector<int>& adj = c.saddle_adj[si];
    // Excision certificate (unessential): if for every ordered pair (A,B)
    // of distinct adjacent components every e->A route avoiding the saddle
    // passes through B, then any optimal path's first passage through the
    // saddle closes a loop at B (the A=B passage trivially does) and can be
    // cut out; iterating removes the saddle from any path without adding
    // saddles, so no minimal realizable set contains it.
    {
      bool excisable = true;
      for (std::size_t ai = 0; ai < adj.size() && excisable; ++ai)
        for (std::size_t bi = 0; bi < adj.size() && excisable; ++bi) {
          if (ai == bi) continue;
          ++searches;
          if (detail::component_path(c, c.e_component, adj[ai], sid, adj[bi]))
            excisable = false;
        }
      if (excisable) {
        rep.unessential.push_back(c.saddles[si]);
        continue;
      }
      if (searches > budget) {
        rep.budget_exhausted = true;
        rep.unknown.push_back(c.saddles[si]);
        continue;
      }
    }
    // Two-territory certificate (essential): pick adjacent components X, Y;
    // grow an e-territory from a saddle-avoiding path e->X and reach Y from
    // o using only saddles disjoint from the territory's and not touching
    // it. The saddle then carries the only X-Y link of the combined set, so
    // every realizable subset uses it and some minimal one contains it.
    {
      bool separated = false;
      std::vector<int> leg1;
      for (int a_comp : {c.e_component, c.o_component}) {
        if (separated) break;
        int b_comp = a_comp == c.e_component ? c.o_component : c.e_component;
        for (std::size_t xi = 0; xi < adj.size() && !separated; ++xi) {
          ++searches;
          if (!detail::component_path(c, a_comp, adj[xi], sid, -1, &leg1))
            continue;
          std::vector<char> use(S, 0);
          for (int s : leg1) use[s] = 1;
          std::vector<char> side1 = detail::component_closure(c, a_comp, use);
          if (side1[b_comp]) continue;
          // Saddles allowed on the far side: unused by the territory, not
          // the saddle under test, and nowhere adjacent to the territory.
          std::vector<char> far_ok(S, 1);
          far_ok[si] = 0;
          for (std::size_t s = 0; s < S; ++s) {
            if (use[s]) { far_ok[s] = 0; continue; }
            for (int comp : c.saddle_adj[s])
              if (side1[comp]) { far_ok[s] = 0; break; }
          }
          std::vector<char> far_side = detail::component_closure(c, b_comp, far_ok);
          for (std::size_t yi = 0; yi < adj.size() && !separated; ++yi) {
            if (adj[yi] == adj[xi] || side1[adj[yi]]) continue;
            if (far_side[adj[yi]]) separated = true;
          }
          ++searches;
        }
      }
      if (separated) {
        rep.essential.push_back(c.saddles[si]);
        continue;
      }
      if (searches > budget) {
        rep.budget_exhausted = true;
        rep.unknown.push_back(c.saddles[si]);
        continue;
      }
    }
    // Greedy minimization with bounded branching. Starting from the saddle
    // set of a path forced through si, delete members (except si) while a
    // forced path survives; when no single deletion works, a set M remains
    // with a forced path through si and no removable member. If M \ {si}
    // admits no e-o path, M is an inclusion-minimal realizable set
    // containing si (any path inside M \ {x} would either pass si, making x
    // removable, or avoid si, contradicting the bypass check), so si is
    // essential. Otherwise a bypass exists; ban one of its saddles and
    // retry, exploring a bounded number of such branches.
    std::uint64_t tries = 0;
    const std::uint64_t branch_budget = 2000;
    bool decided_essential = false;
    bool exhausted = false;
    std::function<void(std::vector<char>, std::vector<int>)> attempt =
        [&](std::vector<char> in_set, std::vector<int> members) {
          if (decided_essential || exhausted) return;
          bool changed = true;
          while (changed) {
            changed = false;
            for (std::size_t mi = 0; mi < members.size(); ++mi) {
              int s = members[mi];
              if (s == static_cast<int>(si)) continue;
              in_set[s] = 0;
              std::vector<int> new_path;
              ++searches;
              ++tries;
              if (searches > budget || tries > branch_budget) {
                exhausted = true;
                return;
              }
              if (detail::contracted_reachable(c, in_set, &new_path,
                                               static_cast<int>(si))) {
                std::fill(in_set.begin(), in_set.end(), 0);
                members.clear();
                for (int x : new_path)
                  if (!in_set[x]) {
                    in_set[x] = 1;
                    members.push_back(x);
                  }
                if (!in_set[si]) {
                  in_set[si] = 1;
                  members.push_back(static_cast<int>(si));
                }
                changed = true;
                break;
              }
              in_set[s] = 1;  // not removable
            }
          }
          in_set[si] = 0;
          std::vector<int> bypass;
          ++searches;
          ++tries;
          bool bypassed = detail::contracted_reachable(c, in_set, &bypass);
          in_set[si] = 1;
          if (!bypassed) {
            decided_essential = true;
            return;
          }
          // Branch: remove one bypass saddle and re-derive a forced witness
          // within the shrunken candidate set.
          for (int b : bypass) {
            if (decided_essential || exhausted) return;
            if (b == static_cast<int>(si) || !in_set[b]) continue;
            std::vector<char> next = in_set;
            next[b] = 0;
            std::vector<int> forced;
            ++searches;
            ++tries;
            if (searches > budget || tries > branch_budget) {
              exhausted = true;
              return;
            }
            if (!detail::contracted_reachable(c, next, &forced,
                                              static_cast<int>(si)))
              continue;
            std::vector<char> sub(S, 0);
            std::vector<int> sub_members;
            for (int x : forced)
              if (!sub[x]) {
                sub[x] = 1;
                sub_members.push_back(x);
              }
            if (!sub[si]) {
              sub[si] = 1;
              sub_members.push_back(static_cast<int>(si));
            }
            attempt(std::move(sub), std::move(sub_members));
          }
        };
    {
      std::vector<char> allowed(S, 1);
      std::vector<int> path;
      ++searches;
      if (!detail::contracted_reachable(c, allowed, &path,
                                        static_cast<int>(si))) {
        // No optimal path can be routed through this saddle at all; it
        // cannot carry an essentiality witness.
        rep.unessential.push_back(c.saddles[si]);
        continue;
      }
      std::vector<char> in_set(S, 0);
      std::vector<int> members;
      for (int s : path)
        if (!in_set[s]) {
          in_set[s] = 1;
          members.push_back(s);
        }
      attempt(std::move(in_set), std::move(members));
    }
    if (decided_essential) {
      rep.essential.push_back(c.saddles[si]);
    } else {
      if (searches > budget) rep.budget_exhausted = true;
      rep.unknown.push_back(c.saddles[si]);
    }
  }
  return rep;
}

}  // namespace hcl
