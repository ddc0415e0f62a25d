#pragma once
// Paths in configuration space (sequences of single-site moves), the two
// filling algorithms that expand an odd cluster to its surrounding rhombus,
// and the reduction of low-energy configurations into the basin of e or o.
//
// The filling algorithms fill, one odd site at a time, first all broken
// diagonals and then all shorter diagonals of the unique odd cluster. Each
// fill optionally removes the single blocking even particle first (energy
// +1) and then occupies the odd site (energy -1), so the energy excursion
// along the path never exceeds one above the starting energy.

#include <algorithm>
#include <vector>

#include "hcl/lattice.hpp"
#include "hcl/odd_geometry.hpp"
#include "hcl/rhombus.hpp"

namespace hcl {

struct Path {
  std::vector<Configuration> configs;

  int height() const {
    int h = energy(configs.at(0));
    for (const Configuration& c : configs) h = std::max(h, energy(c));
    return h;
  }
};

inline int path_height(const Path& p) { return p.height(); }

// A valid path moves by single-site flips through hard-core configurations.
inline bool is_valid_path(const Path& p) {
  if (p.configs.empty()) return false;
  for (std::size_t t = 0; t < p.configs.size(); ++t) {
    if (!p.configs[t].is_hardcore()) return false;
    if (t == 0) continue;
    const Lattice& lat = p.configs[t].lattice();
    int diff = 0;
    for (int i = 0; i < lat.N(); ++i)
      diff += p.configs[t - 1].occupied(i) != p.configs[t].occupied(i) ? 1 : 0;
    if (diff != 1) return false;
  }
  return true;
}

inline Path concatenate(const Path& a, const Path& b) {
  if (!(a.configs.back() == b.configs.front()))
    throw Error(ErrorCode::PreconditionViolated, "paths do not share an endpoint");
  Path out = a;
  out.configs.insert(out.configs.end(), b.configs.begin() + 1, b.configs.end());
  return out;
}

namespace detail {

// The unique non-degenerate odd cluster of the configuration; throws when
// the configuration has no cluster or more than one.
inline OddCluster unique_cluster(const Configuration& cfg) {
  OddRegion region = odd_region(cfg);
  const OddCluster* found = nullptr;
  for (const OddCluster& c : region.clusters) {
    if (c.degenerate) continue;
    if (found)
      throw Error(ErrorCode::MultipleClusters, "configuration has several odd clusters");
    found = &c;
  }
  if (!found)
    throw Error(ErrorCode::MultipleClusters, "configuration has no odd cluster");
  return *found;
}

// Occupied even neighbors of an odd site.
inline std::vector<int> blocking_evens(const Configuration& cfg, int site) {
  std::vector<int> out;
  for (int n : cfg.lattice().neighbors(site))
    if (cfg.occupied(n)) out.push_back(n);
  return out;
}

// Appends the one- or two-move fill of an odd site to the path, mutating
// the working configuration.
inline void fill_site(Path& path, Configuration& cfg, int site) {
  std::vector<int> blockers = blocking_evens(cfg, site);
  if (blockers.size() > 1)
    throw Error(ErrorCode::ConstructionFailed, "fill target has two blocking particles");
  if (blockers.size() == 1) {
    cfg = cfg.flip(blockers[0], false);
    path.configs.push_back(cfg);
  }
  cfg = cfg.flip(site, true);
  path.configs.push_back(cfg);
}

}  // namespace detail

// Fills every broken diagonal of the unique odd cluster. Diagonals are
// processed in (v2,v1) order of their first site; within a diagonal, the
// currently fillable sites (antiknobs, which have at most one blocking even
// particle) are taken in (v2,v1) order.
inline Path fill_broken(const Configuration& start) {
  OddCluster c = detail::unique_cluster(start);
  if (broken_diagonals(c).empty())
    throw Error(ErrorCode::NoBrokenDiagonal, "cluster has no broken diagonal");
  Path path{{start}};
  Configuration cfg = start;
  for (;;) {
    OddCluster cur = detail::unique_cluster(cfg);
    std::vector<Diagonal> broken = broken_diagonals(cur);
    if (broken.empty()) break;
    const Lattice& lat = cfg.lattice();
    bool filled = false;
    for (const Diagonal& d : broken) {
      for (int s : d.sites) {
        int inside = 0;
        for (int n : lat.neighbors(s)) inside += cur.contains(n) ? 1 : 0;
        if (inside < 3) continue;  // not yet an antiknob
        detail::fill_site(path, cfg, s);
        filled = true;
        break;
      }
      if (filled) break;
    }
    if (!filled)
      throw Error(ErrorCode::ConstructionFailed, "no fillable broken-diagonal site");
  }
  return path;
}

// Fills every shorter diagonal of the unique odd cluster until the cluster
// equals its surrounding rhombus. Diagonal groups are processed in (v2,v1)
// order; within the remaining missing sites the first one with at most one
// blocking even particle is filled.
inline Path fill_shorter(const Configuration& start) {
  OddCluster c = detail::unique_cluster(start);
  if (!broken_diagonals(c).empty())
    throw Error(ErrorCode::HasBrokenDiagonal, "cluster still has a broken diagonal");
  Rhombus target = surrounding_rhombus(c);
  Path path{{start}};
  Configuration cfg = start;
  const Lattice& lat = start.lattice();
  for (;;) {
    OddCluster cur = detail::unique_cluster(cfg);
    std::vector<Diagonal> shorter = shorter_diagonals(cur, target);
    if (shorter.empty()) break;
    bool filled = false;
    for (const Diagonal& d : shorter) {
      for (int s : d.sites) {
        if (detail::blocking_evens(cfg, s).size() > 1) continue;
        detail::fill_site(path, cfg, s);
        filled = true;
        break;
      }
      if (filled) break;
    }
    if (!filled)
      throw Error(ErrorCode::ConstructionFailed, "no fillable shorter-diagonal site");
  }
  return path;
}

// Expansion of the unique odd cluster to its surrounding rhombus R: fills
// broken diagonals, then shorter diagonals. The terminal configuration
// agrees with o on R and with the start outside R; the energy excursion
// above the start is at most one, and the perimeter strictly decreases
// exactly when a broken diagonal existed.
inline Path expand_to_rhombus(const Configuration& start) {
  OddRegion region = odd_region(start);
  int nondegenerate = 0;
  for (const OddCluster& cl : region.clusters) {
    if (cl.degenerate)
      throw Error(ErrorCode::PreconditionViolated,
                  "expansion requires a single non-degenerate cluster");
    ++nondegenerate;
  }
  if (nondegenerate != 1)
    throw Error(ErrorCode::PreconditionViolated,
                "expansion requires exactly one odd cluster");
  OddCluster c = detail::unique_cluster(start);
  Path path{{start}};
  Configuration cfg = start;
  if (!broken_diagonals(c).empty()) {
    path = fill_broken(cfg);
    cfg = path.configs.back();
  }
  OddCluster after = detail::unique_cluster(cfg);
  if (!shorter_diagonals(after).empty()) {
    Path second = fill_shorter(cfg);
    path = concatenate(path, second);
    cfg = path.configs.back();
  }
  return path;
}

// Reduces a configuration to e or o along a path whose energy never exceeds
// H(start)+1: peels extremal particles pairwise (remove a particle, occupy
// the site it frees) until one parity class is empty, then fills downhill.
// Intended for configurations with dH < L, which belong to the basin of one
// of the two ground states.
inline Path reduce_cross(const Configuration& start) {
  const Lattice& lat = start.lattice();
  const int N = lat.N();
  auto peel_toward = [&](Parity goal, Path& path, Configuration& cfg) -> bool {
    // Removes particles of the opposite parity class pairwise with a fill.
    for (;;) {
      bool any_opposite = false;
      for (int i = 0; i < N && !any_opposite; ++i)
        any_opposite = cfg.occupied(i) &&
                       ((goal == Parity::Even) ? !lat.is_even(i) : lat.is_even(i));
      if (!any_opposite) break;
      // Find a peelable pair (z occupied opposite-parity, w empty goal-parity
      // neighbor of z whose other neighbors are empty), deterministically.
      int bz = -1, bw = -1;
      for (int z = 0; z < N; ++z) {
        bool z_opp = (goal == Parity::Even) ? !lat.is_even(z) : lat.is_even(z);
        if (!z_opp || !cfg.occupied(z)) continue;
        for (int w : lat.neighbors(z)) {
          if (cfg.occupied(w)) continue;
          bool free_after = true;
          for (int u : lat.neighbors(w))
            if (u != z && cfg.occupied(u)) free_after = false;
          if (!free_after) continue;
          bz = z;
          bw = w;
          break;
        }
        if (bz >= 0) break;
      }
      if (bz < 0) return false;  // stalled
      cfg = cfg.flip(bz, false);
      path.configs.push_back(cfg);
      cfg = cfg.flip(bw, true);
      path.configs.push_back(cfg);
    }
    // Downhill: fill the remaining goal-parity vacancies.
    for (;;) {
      int pick = -1;
      for (int i = 0; i < N; ++i) {
        bool right = (goal == Parity::Even) ? lat.is_even(i) : !lat.is_even(i);
        if (right && !cfg.occupied(i) && cfg.can_flip(i, true)) {
          pick = i;
          break;
        }
      }
      if (pick < 0) break;
      cfg = cfg.flip(pick, true);
      path.configs.push_back(cfg);
    }
    return cfg == chessboard(lat, goal == Parity::Even ? Parity::Even : Parity::Odd);
  };
  for (Parity goal : {Parity::Even, Parity::Odd}) {
    Path path{{start}};
    Configuration cfg = start;
    if (peel_toward(goal, path, cfg)) return path;
  }
  throw Error(ErrorCode::NoCross, "configuration did not reduce to e or o");
}

}  // namespace hcl
