#pragma once
// Constructors for the canonical transition paths between the six saddle
// families and the two ground states. Every path moves only by removing
// even particles and adding odd particles, so the particle-count imbalance
// increases by one at each step and each manifold is visited exactly once.
//
// The two ground-state starts (E_TO_IR, E_TO_SB) follow explicit growth
// schedules: nested rhombi for the rhombus family, end-to-end extension for
// the single-line family. The family-to-family legs are found by peeling
// the target backwards: repeatedly detach an odd particle whose removal
// leaves a one-vacancy configuration inside the allowed families, until the
// remainder (plus the detached particle's blocking vacancies) matches the
// requested start family. The descents to the odd ground state grow the
// cluster forward one odd site at a time under the same family guard until
// every odd site is occupied.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hcl/classifier.hpp"
#include "hcl/path.hpp"
#include "hcl/rng.hpp"

namespace hcl {

enum class ReferencePathKind {
  E_TO_IR,
  E_TO_SB,
  SB_TO_IB,
  IR_TO_GR,
  IB_TO_GR,
  SB_TO_MB,
  IB_TO_MB,
  GR_TO_CR,
  MB_TO_CR,
  CR_TO_O,
  MB_TO_O,
};

inline const char* to_string(ReferencePathKind k) {
  switch (k) {
    case ReferencePathKind::E_TO_IR: return "e-to-ir";
    case ReferencePathKind::E_TO_SB: return "e-to-sb";
    case ReferencePathKind::SB_TO_IB: return "sb-to-ib";
    case ReferencePathKind::IR_TO_GR: return "ir-to-gr";
    case ReferencePathKind::IB_TO_GR: return "ib-to-gr";
    case ReferencePathKind::SB_TO_MB: return "sb-to-mb";
    case ReferencePathKind::IB_TO_MB: return "ib-to-mb";
    case ReferencePathKind::GR_TO_CR: return "gr-to-cr";
    case ReferencePathKind::MB_TO_CR: return "mb-to-cr";
    case ReferencePathKind::CR_TO_O: return "cr-to-o";
    case ReferencePathKind::MB_TO_O: return "mb-to-o";
  }
  return "?";
}

// Family of the path's labeled endpoint (the target for ground-state starts
// and family legs; the start for the descents to o).
inline SaddleClass reference_target_class(ReferencePathKind k) {
  switch (k) {
    case ReferencePathKind::E_TO_IR: return SaddleClass::ir;
    case ReferencePathKind::E_TO_SB: return SaddleClass::sb;
    case ReferencePathKind::SB_TO_IB: return SaddleClass::ib;
    case ReferencePathKind::IR_TO_GR:
    case ReferencePathKind::IB_TO_GR: return SaddleClass::gr;
    case ReferencePathKind::SB_TO_MB:
    case ReferencePathKind::IB_TO_MB: return SaddleClass::mb;
    case ReferencePathKind::GR_TO_CR:
    case ReferencePathKind::MB_TO_CR: return SaddleClass::cr;
    case ReferencePathKind::CR_TO_O: return SaddleClass::cr;
    case ReferencePathKind::MB_TO_O: return SaddleClass::mb;
  }
  return SaddleClass::none;
}

// Family of the start configuration; none for the two ground-state starts
// and the descents (whose start is the labeled target itself).
inline SaddleClass reference_start_class(ReferencePathKind k) {
  switch (k) {
    case ReferencePathKind::SB_TO_IB:
    case ReferencePathKind::SB_TO_MB: return SaddleClass::sb;
    case ReferencePathKind::IR_TO_GR: return SaddleClass::ir;
    case ReferencePathKind::IB_TO_GR:
    case ReferencePathKind::IB_TO_MB: return SaddleClass::ib;
    case ReferencePathKind::GR_TO_CR: return SaddleClass::gr;
    case ReferencePathKind::MB_TO_CR: return SaddleClass::mb;
    default: return SaddleClass::none;
  }
}

// Families allowed at the top energy level along the path. For the
// ground-state starts the top level is reached only at the final target, so
// the list is empty.
inline std::vector<SaddleClass> reference_allowed_classes(ReferencePathKind k) {
  switch (k) {
    case ReferencePathKind::E_TO_IR:
    case ReferencePathKind::E_TO_SB: return {};
    case ReferencePathKind::SB_TO_IB: return {SaddleClass::sb, SaddleClass::ib};
    case ReferencePathKind::IR_TO_GR: return {SaddleClass::ir, SaddleClass::gr};
    case ReferencePathKind::IB_TO_GR: return {SaddleClass::ib, SaddleClass::gr};
    case ReferencePathKind::SB_TO_MB: return {SaddleClass::sb, SaddleClass::mb};
    case ReferencePathKind::IB_TO_MB: return {SaddleClass::ib, SaddleClass::mb};
    case ReferencePathKind::GR_TO_CR: return {SaddleClass::gr, SaddleClass::cr};
    case ReferencePathKind::MB_TO_CR: return {SaddleClass::mb, SaddleClass::cr};
    case ReferencePathKind::CR_TO_O: return {SaddleClass::cr};
    case ReferencePathKind::MB_TO_O: return {SaddleClass::mb};
  }
  return {};
}

namespace detail {

// Configuration whose occupied odd sites are exactly `odds` and whose even
// sites are occupied except for the closure of `odds`.
inline Configuration config_from_odds(const Lattice& lat,
                                      const std::vector<int>& odds) {
  Configuration cfg = chessboard(lat, Parity::Even);
  for (int u : odds)
    for (int n : lat.neighbors(u))
      if (cfg.occupied(n)) cfg = cfg.flip(n, false);
  for (int u : odds) cfg = cfg.flip(u, true);
  return cfg;
}

// Appends "remove every blocking even particle of `site`, then occupy
// `site`". `last_in_line`, when nonnegative, is removed last (the growth
// schedules remove lateral blockers before the one ahead in the line).
inline void add_with_unblock(Path& path, Configuration& cfg, int site,
                             int last = -1) {
  std::vector<int> blockers = blocking_evens(cfg, site);
  std::stable_sort(blockers.begin(), blockers.end(),
                   [&](int a, int b) { return (a == last) < (b == last); });
  for (int b : blockers) {
    cfg = cfg.flip(b, false);
    path.configs.push_back(cfg);
  }
  cfg = cfg.flip(site, true);
  path.configs.push_back(cfg);
}

// The family evaluation backing the target's label.
inline const ClassEvaluation& labeled_evaluation(const SaddleLabel& lab) {
  for (const ClassEvaluation& ev : lab.evaluations)
    if (ev.cls == lab.label) return ev;
  throw Error(ErrorCode::Unreachable, "label without evaluation");
}

inline SaddleLabel require_class(const Configuration& target, SaddleClass cls) {
  SaddleLabel lab = classify(target);
  if (lab.label != cls)
    throw Error(ErrorCode::TargetNotInSet,
                std::string("target is not in the ") + to_string(cls) +
                    " family (got " + to_string(lab.label) + ")");
  return lab;
}

// Growth schedule for a full rhombus R_{n,n}: nested rhombi sharing the
// reference corner, adding one diagonal line at a time.
inline std::vector<int> rhombus_growth_order(const Lattice& lat, Site ref,
                                             int n) {
  std::vector<int> order;
  order.push_back(lat.index(ref.v1, ref.v2));
  for (int l = 1; l < n; ++l) {
    for (int k = 0; k < l; ++k)  // new line j = l of R_{l, l+1}
      order.push_back(lat.index(ref.v1 + k + l, ref.v2 + k - l));
    for (int j = 0; j <= l; ++j)  // new line k = l of R_{l+1, l+1}
      order.push_back(lat.index(ref.v1 + l + j, ref.v2 + l - j));
  }
  return order;
}

// Odd sites at the ends of a contiguous cyclic run within one lattice line.
// Returns the run ordered from one end to the other.
inline std::vector<int> line_run_order(const Lattice& lat, bool vertical,
                                       int line, const std::vector<char>& in) {
  const int L = lat.L();
  std::vector<int> slots;  // odd sites of the line, in t order
  for (int t = 0; t < L; ++t) {
    int i = vertical ? lat.index(line, t) : lat.index(t, line);
    if (!lat.is_even(i)) slots.push_back(i);
  }
  const int S = static_cast<int>(slots.size());
  int first = -1;
  for (int s = 0; s < S; ++s)
    if (in[slots[s]] && !in[slots[(s - 1 + S) % S]]) first = s;
  std::vector<int> order;
  if (first < 0) {  // full line; start anywhere
    first = 0;
  }
  for (int s = 0; s < S; ++s) {
    int i = slots[(first + s) % S];
    if (in[i]) order.push_back(i);
  }
  return order;
}

// For E_TO_SB growth the blocker ahead in the line must be removed last.
inline int same_line_blocker(const Lattice& lat, const Configuration& cfg,
                             int site, bool vertical) {
  Site z = lat.site(site);
  for (int b : blocking_evens(cfg, site)) {
    Site w = lat.site(b);
    if ((vertical && w.v1 == z.v1) || (!vertical && w.v2 == z.v2)) return b;
  }
  return -1;
}

inline Path path_e_to_ir(const Configuration& target) {
  const Lattice& lat = target.lattice();
  SaddleLabel lab = require_class(target, SaddleClass::ir);
  const ClassEvaluation& ev = labeled_evaluation(lab);
  Path path{{chessboard(lat, Parity::Even)}};
  Configuration cfg = path.configs.front();
  for (int u : rhombus_growth_order(lat, ev.body.reference, ev.body.l1))
    add_with_unblock(path, cfg, u);
  for (int v : ev.degenerate_sites) {
    cfg = cfg.flip(v, false);
    path.configs.push_back(cfg);
  }
  if (!(cfg == target))
    throw Error(ErrorCode::ConstructionFailed, "rhombus growth missed the target");
  return path;
}

inline Path path_e_to_sb(const Configuration& target) {
  const Lattice& lat = target.lattice();
  SaddleLabel lab = require_class(target, SaddleClass::sb);
  const ClassEvaluation& ev = labeled_evaluation(lab);
  std::vector<char> in(lat.N(), 0);
  int line = -1;
  for (int i = 0; i < lat.N(); ++i)
    if (!lat.is_even(i) && target.occupied(i)) {
      in[i] = 1;
      line = ev.vertical ? lat.site(i).v1 : lat.site(i).v2;
    }
  Path path{{chessboard(lat, Parity::Even)}};
  Configuration cfg = path.configs.front();
  for (int u : line_run_order(lat, ev.vertical, line, in))
    add_with_unblock(path, cfg, u, same_line_blocker(lat, cfg, u, ev.vertical));
  for (int v : ev.degenerate_sites) {
    cfg = cfg.flip(v, false);
    path.configs.push_back(cfg);
  }
  if (!(cfg == target))
    throw Error(ErrorCode::ConstructionFailed, "line growth missed the target");
  return path;
}

inline bool class_allowed(SaddleClass c, const std::vector<SaddleClass>& allowed) {
  for (SaddleClass a : allowed)
    if (a == c) return true;
  return false;
}

// Blocking even sites of `u` when the cluster consists of `odds` (every even
// site outside the closure of `odds` is occupied).
inline std::vector<int> blockers_against(const Lattice& lat,
                                         const std::vector<char>& odd_in, int u) {
  std::vector<int> out;
  for (int n : lat.neighbors(u)) {
    bool vacant = false;
    for (int w : lat.neighbors(n))
      if (w != u && odd_in[w]) vacant = true;
    if (!vacant) out.push_back(n);
  }
  return out;
}

inline std::string config_key(const Lattice& lat, const Configuration& cfg) {
  std::string key(lat.N(), '0');
  for (int i = 0; i < lat.N(); ++i)
    if (cfg.occupied(i)) key[i] = '1';
  return key;
}

// Family check at the top level; none when the configuration is not a
// single-cluster family member.
inline SaddleClass top_label(const Configuration& cfg) {
  try {
    return classify(cfg).label;
  } catch (const Error&) {
    return SaddleClass::none;
  }
}

// Backward search for the family-to-family legs. Every forward move removes
// an even particle or adds an odd particle, so walking backward from the
// target undoes such moves: re-occupy a vacant even site with no occupied
// neighbor, or vacate an occupied odd site. The removed evens always stay
// inside the closure of the target's odd set plus its vacancy, which keeps
// the state space small. Whenever the energy touches the ceiling the
// configuration must belong to an allowed family; the search stops at the
// first such configuration in the start family.
struct LegSearch {
  const Lattice* lat;
  int top;
  SaddleClass start_cls;
  std::vector<SaddleClass> allowed;
  std::vector<char> universe_even;  // evens the forward path may remove
  std::set<std::string> dead;
  std::vector<std::pair<int, bool>> forward_moves;  // earliest move first
  std::optional<Configuration> start;
  long nodes = 0;
  long node_budget = 2'000'000;

  bool run(Configuration cfg, int dh, bool at_target) {
    if (++nodes > node_budget)
      throw Error(ErrorCode::BudgetExhausted, "leg search budget exhausted");
    if (dh == top && !at_target) {
      SaddleClass c = top_label(cfg);
      if (c == start_cls) {
        start = cfg;
        return true;
      }
      if (!class_allowed(c, allowed)) return false;
    }
    std::string key = config_key(*lat, cfg);
    if (dead.count(key)) return false;
    // Undo an odd addition (energy rises by one).
    if (dh + 1 <= top) {
      for (int u = 0; u < lat->N(); ++u) {
        if (lat->is_even(u) || !cfg.occupied(u)) continue;
        Configuration prev = cfg.flip(u, false);
        if (run(prev, dh + 1, false)) {
          forward_moves.push_back({u, true});
          return true;
        }
      }
    }
    // Undo an even removal (energy drops by one).
    for (int e = 0; e < lat->N(); ++e) {
      if (!universe_even[e] || cfg.occupied(e)) continue;
      bool free_site = true;
      for (int n : lat->neighbors(e))
        if (cfg.occupied(n)) free_site = false;
      if (!free_site) continue;
      Configuration prev = cfg.flip(e, true);
      if (run(prev, dh - 1, false)) {
        forward_moves.push_back({e, false});
        return true;
      }
    }
    dead.insert(key);
    return false;
  }
};

inline Path path_family_leg(ReferencePathKind kind, const Configuration& target) {
  const Lattice& lat = target.lattice();
  require_class(target, reference_target_class(kind));
  LegSearch search;
  search.lat = &lat;
  search.top = energy_stats(target).dH;
  search.start_cls = reference_start_class(kind);
  search.allowed = reference_allowed_classes(kind);
  search.universe_even.assign(lat.N(), 0);
  for (int i = 0; i < lat.N(); ++i)
    if (lat.is_even(i) && !target.occupied(i)) search.universe_even[i] = 1;
  if (!search.run(target, search.top, true))
    throw Error(ErrorCode::ConstructionFailed,
                "no admissible leg reaches the start family");
  Path path{{*search.start}};
  Configuration cfg = *search.start;
  for (const auto& [site, add] : search.forward_moves) {
    cfg = cfg.flip(site, add);
    path.configs.push_back(cfg);
  }
  if (!(cfg == target))
    throw Error(ErrorCode::ConstructionFailed, "leg replay missed the target");
  return path;
}

// Forward search from a labeled saddle down to the odd ground state, one
// single-site move at a time. Configurations that touch the top level must
// stay inside the allowed family; additions are preferred so the energy
// drops whenever possible.
struct DescentSearch {
  const Lattice* lat;
  int top;
  std::vector<SaddleClass> allowed;
  std::set<std::string> dead;
  Path* path;
  long nodes = 0;
  long node_budget = 2'000'000;

  bool run(Configuration cfg, int dh) {
    if (++nodes > node_budget)
      throw Error(ErrorCode::BudgetExhausted, "descent budget exhausted");
    bool done = true;
    for (int i = 0; i < lat->N() && done; ++i)
      if (lat->is_even(i) == cfg.occupied(i)) done = false;
    if (done) return true;
    std::string key = config_key(*lat, cfg);
    if (dead.count(key)) return false;
    // Add an unblocked odd particle (energy drops).
    for (int u = 0; u < lat->N(); ++u) {
      if (lat->is_even(u) || cfg.occupied(u) || !cfg.can_flip(u, true)) continue;
      Configuration next = cfg.flip(u, true);
      path->configs.push_back(next);
      if (run(next, dh - 1)) return true;
      path->configs.pop_back();
    }
    // Remove an even particle (energy rises; guard the ceiling).
    if (dh + 1 <= top) {
      for (int e = 0; e < lat->N(); ++e) {
        if (!lat->is_even(e) || !cfg.occupied(e)) continue;
        Configuration next = cfg.flip(e, false);
        if (dh + 1 == top && !class_allowed(top_label(next), allowed)) continue;
        path->configs.push_back(next);
        if (run(next, dh + 1)) return true;
        path->configs.pop_back();
      }
    }
    dead.insert(key);
    return false;
  }
};

inline Path path_descent_to_o(ReferencePathKind kind, const Configuration& target) {
  const Lattice& lat = target.lattice();
  require_class(target, reference_target_class(kind));
  Path path{{target}};
  DescentSearch search;
  search.lat = &lat;
  search.top = energy_stats(target).dH;
  search.allowed = reference_allowed_classes(kind);
  search.path = &path;
  if (!search.run(target, search.top))
    throw Error(ErrorCode::ConstructionFailed, "no admissible descent to o");
  if (!(path.configs.back() == chessboard(lat, Parity::Odd)))
    throw Error(ErrorCode::ConstructionFailed, "descent did not reach o");
  return path;
}

}  // namespace detail

// Random member of a saddle family, built by randomized construction with a
// classification filter. Deterministic given the generator state.
inline Configuration sample_family_target(const Lattice& lat, SaddleClass cls,
                                          CounterRng& rng) {
  const int L = lat.L();
  const int n = L / 2 - 1;
  auto random_odd = [&]() {
    for (;;) {
      int i = static_cast<int>(rng.uniform_below(lat.N()));
      if (!lat.is_even(i)) return i;
    }
  };
  auto finish_with_vacancy =
      [&](const std::vector<int>& odds) -> std::optional<Configuration> {
    std::vector<char> odd_in(lat.N(), 0);
    for (int u : odds) odd_in[u] = 1;
    std::vector<int> closure = odds;
    for (int u : odds)
      for (int s : lat.neighbors(u)) closure.push_back(s);
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    OddCluster c = make_cluster(lat, closure);
    std::vector<int> knobs = antiknobs(c);
    if (knobs.empty()) return std::nullopt;
    int u = knobs[rng.uniform_below(knobs.size())];
    std::vector<int> b = detail::blockers_against(lat, odd_in, u);
    if (b.size() != 1) return std::nullopt;
    return detail::config_from_odds(lat, odds).flip(b[0], false);
  };
  const int top = energy(chessboard(lat, Parity::Even)) + L + 1;
  auto accept = [&](const Configuration& cand) {
    if (energy(cand) != top) return false;
    try {
      return classify(cand).label == cls;
    } catch (const Error&) {
      return false;
    }
  };
  for (int attempt = 0; attempt < 4000; ++attempt) {
    Site ref = lat.site(random_odd());
    std::vector<int> odds;
    switch (cls) {
      case SaddleClass::ir: {
        odds = rhombus_odd_sites(lat, Rhombus{ref, n, n});
        std::vector<char> odd_in(lat.N(), 0);
        for (int u : odds) odd_in[u] = 1;
        // Growth slot in one of the four one-line extensions.
        int side = static_cast<int>(rng.uniform_below(4));
        int t = static_cast<int>(rng.uniform_below(n));
        int k = side < 2 ? t : (side == 2 ? -1 : n);
        int j = side >= 2 ? t : (side == 0 ? -1 : n);
        int u = lat.index(ref.v1 + k + j, ref.v2 + k - j);
        std::vector<int> d = detail::blockers_against(lat, odd_in, u);
        if (d.size() != 2) continue;
        Configuration cfg = detail::config_from_odds(lat, odds);
        for (int s : d) cfg = cfg.flip(s, false);
        if (accept(cfg)) return cfg;
        continue;
      }
      case SaddleClass::gr:
      case SaddleClass::cr: {
        int b1 = n, b2 = cls == SaddleClass::gr ? n : n + 1;
        if (cls == SaddleClass::cr && rng.uniform_below(2)) std::swap(b1, b2);
        int kmax = cls == SaddleClass::gr ? n : n - 1;
        int bar = 1 + static_cast<int>(rng.uniform_below(kmax));
        odds = rhombus_odd_sites(lat, Rhombus{ref, b1, b2});
        int side = static_cast<int>(rng.uniform_below(4));
        int line_len = side < 2 ? b2 : b1;
        if (bar > line_len) continue;
        int start = static_cast<int>(rng.uniform_below(line_len - bar + 1));
        for (int t = start; t < start + bar; ++t) {
          int k = side < 2 ? (side == 0 ? -1 : b1) : t;
          int j = side < 2 ? t : (side == 2 ? -1 : b2);
          odds.push_back(lat.index(ref.v1 + k + j, ref.v2 + k - j));
        }
        break;
      }
      case SaddleClass::sb: {
        bool vertical = rng.uniform_below(2) != 0;
        int line = vertical ? ref.v1 : ref.v2;
        int gap = -1;
        std::vector<int> slots;
        for (int t = 0; t < L; ++t) {
          int i = vertical ? lat.index(line, t) : lat.index(t, line);
          if (!lat.is_even(i)) slots.push_back(i);
        }
        gap = slots[rng.uniform_below(slots.size())];
        for (int s : slots)
          if (s != gap) odds.push_back(s);
        Configuration base = detail::config_from_odds(lat, odds);
        std::vector<int> near;
        for (int s : lat.neighbors(gap))
          if (base.occupied(s)) near.push_back(s);
        if (near.empty()) continue;
        int d1 = near[rng.uniform_below(near.size())];
        std::vector<int> partners = near;
        Site z = lat.site(d1);
        for (int dv1 : {-1, 1})
          for (int dv2 : {-1, 1}) {
            int s = lat.index(z.v1 + dv1, z.v2 + dv2);
            if (base.occupied(s)) partners.push_back(s);
          }
        int d2 = partners[rng.uniform_below(partners.size())];
        if (d2 == d1) continue;
        Configuration cfg = base.flip(d1, false).flip(d2, false);
        if (accept(cfg)) return cfg;
        continue;
      }
      case SaddleClass::mb: {
        bool vertical = rng.uniform_below(2) != 0;
        int m = 1 + static_cast<int>(rng.uniform_below(L - 3));
        int c0 = static_cast<int>(rng.uniform_below(L));
        auto line_slots = [&](int line) {
          std::vector<int> s;
          for (int t = 0; t < L; ++t) {
            int i = vertical ? lat.index(line, t) : lat.index(t, line);
            if (!lat.is_even(i)) s.push_back(i);
          }
          return s;
        };
        for (int d = 0; d < m; ++d)
          for (int s : line_slots((c0 + d) % L)) odds.push_back(s);
        int budget = m == L - 3
                         ? 0
                         : static_cast<int>(rng.uniform_below(L / 2));
        for (int side = 0; side < 2 && budget > 0; ++side) {
          int prev = L / 2;
          for (int d = 1; budget > 0 && prev > 0; ++d) {
            int line = side == 0 ? ((c0 - d) % L + L) % L
                                 : (c0 + m - 1 + d) % L;
            int len = static_cast<int>(rng.uniform_below(
                std::min(prev, budget) + 1));
            if (len == 0) break;
            std::vector<int> s = line_slots(line);
            int start = static_cast<int>(rng.uniform_below(s.size()));
            for (int t = 0; t < len; ++t)
              odds.push_back(s[(start + t) % s.size()]);
            budget -= len;
            prev = len;
          }
        }
        break;
      }
      case SaddleClass::ib: {
        bool vertical = rng.uniform_below(2) != 0;
        int b = 1 + static_cast<int>(rng.uniform_below(2));
        int c0 = static_cast<int>(rng.uniform_below(L));
        auto line_slots = [&](int line) {
          std::vector<int> s;
          for (int t = 0; t < L; ++t) {
            int i = vertical ? lat.index(line, t) : lat.index(t, line);
            if (!lat.is_even(i)) s.push_back(i);
          }
          return s;
        };
        for (int d = 0; d < b; ++d) {
          std::vector<int> s = line_slots((c0 + d) % L);
          int gap = static_cast<int>(rng.uniform_below(s.size()));
          for (int t = 0; t < static_cast<int>(s.size()); ++t)
            if (t != gap) odds.push_back(s[t]);
        }
        for (int side = 0; side < 2; ++side) {
          int prev = L / 2 - 1;
          for (int d = 1;; ++d) {
            int cap = std::min(prev, L / 2 - 1 - d);
            if (cap <= 0) break;
            int len = static_cast<int>(rng.uniform_below(cap + 1));
            if (len == 0) break;
            int line = side == 0 ? ((c0 - d) % L + L) % L
                                 : (c0 + b - 1 + d) % L;
            std::vector<int> s = line_slots(line);
            int start = static_cast<int>(rng.uniform_below(s.size()));
            for (int t = 0; t < len; ++t)
              odds.push_back(s[(start + t) % s.size()]);
            prev = len;
          }
        }
        break;
      }
      default:
        throw Error(ErrorCode::PreconditionViolated,
                    "no sampler for this family");
    }
    std::sort(odds.begin(), odds.end());
    odds.erase(std::unique(odds.begin(), odds.end()), odds.end());
    std::optional<Configuration> cand = finish_with_vacancy(odds);
    if (!cand) continue;
    if (accept(*cand)) return *cand;
  }
  throw Error(ErrorCode::ConstructionFailed,
              "family sampler exhausted its attempts");
}

// Canonical path ending (or, for the descents, starting) at `target`, with
// the energy ceiling and top-level family memberships of its kind.
inline Path build_reference_path(ReferencePathKind kind,
                                 const Configuration& target) {
  switch (kind) {
    case ReferencePathKind::E_TO_IR: return detail::path_e_to_ir(target);
    case ReferencePathKind::E_TO_SB: return detail::path_e_to_sb(target);
    case ReferencePathKind::CR_TO_O:
    case ReferencePathKind::MB_TO_O:
      return detail::path_descent_to_o(kind, target);
    default: return detail::path_family_leg(kind, target);
  }
}

}  // namespace hcl
