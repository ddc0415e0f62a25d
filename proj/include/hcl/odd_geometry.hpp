#pragma once
// Odd regions and odd clusters of a hard-core configuration, their contours
// and perimeters, antiknobs, broken and shorter diagonals, surrounding
// rhombi, monotonicity, bridges and bars.
//
// The odd region O(sigma) is the set of occupied odd sites together with the
// empty even sites; O is injective. A cluster is a connected component: the
// even part is connected under distance-2 adjacency, and every odd site of a
// cluster carries its four even neighbors with it.

#include <algorithm>
#include <utility>
#include <vector>

#include "hcl/lattice.hpp"
#include "hcl/rhombus.hpp"

namespace hcl {

// A contour is a set of dual edges; each dual edge is identified by the
// primal boundary edge it crosses, stored as a normalized (min,max) pair of
// site indices.
using DualEdge = std::pair<int, int>;

struct OddCluster {
  const Lattice* lat = nullptr;
  std::vector<int> sites;       // ascending site indices
  std::vector<char> mask;       // size-N membership
  int odd_count = 0;
  int even_count = 0;
  std::vector<DualEdge> contour;
  int perimeter = 0;
  bool degenerate = false;      // no odd sites

  bool contains(int i) const { return mask[i] != 0; }
};

struct OddRegion {
  std::vector<int> sites;
  std::vector<OddCluster> clusters;  // ordered by smallest site index
};

// Dual-edge trace of the boundary of a site set.
inline std::vector<DualEdge> trace_contour(const Lattice& lat,
                                           const std::vector<char>& mask) {
  std::vector<DualEdge> edges;
  for (int i = 0; i < lat.N(); ++i) {
    if (!mask[i]) continue;
    for (int n : lat.neighbors(i))
      if (!mask[n]) edges.emplace_back(std::min(i, n), std::max(i, n));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

namespace detail {
inline OddCluster finish_cluster(const Lattice& lat, std::vector<char> mask) {
  OddCluster c;
  c.lat = &lat;
  c.mask = std::move(mask);
  for (int i = 0; i < lat.N(); ++i) {
    if (!c.mask[i]) continue;
    c.sites.push_back(i);
    if (lat.is_even(i))
      ++c.even_count;
    else
      ++c.odd_count;
  }
  c.degenerate = (c.odd_count == 0);
  c.contour = trace_contour(lat, c.mask);
  c.perimeter = static_cast<int>(c.contour.size());
  return c;
}
}  // namespace detail

// Builds a cluster value from an explicit site set (no connectivity check).
inline OddCluster make_cluster(const Lattice& lat, const std::vector<int>& sites) {
  std::vector<char> mask(lat.N(), 0);
  for (int s : sites) mask[s] = 1;
  return detail::finish_cluster(lat, std::move(mask));
}

// The odd region of a configuration, partitioned into odd clusters. The even
// part of the region is split into components under distance-2 adjacency;
// each occupied odd site joins the (unique) component of its even neighbors.
inline OddRegion odd_region(const Configuration& cfg) {
  const Lattice& lat = cfg.lattice();
  const int N = lat.N();
  std::vector<char> in_region(N, 0);
  OddRegion region;
  for (int i = 0; i < N; ++i) {
    bool member = lat.is_even(i) ? !cfg.occupied(i) : cfg.occupied(i);
    if (member) {
      in_region[i] = 1;
      region.sites.push_back(i);
    }
  }
  std::vector<int> comp(N, -1);
  int ncomp = 0;
  for (int i = 0; i < N; ++i) {
    if (!in_region[i] || !lat.is_even(i) || comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int t = 0; t < lat.neighbors2_count(v); ++t) {
        int w = lat.neighbors2(v)[t];
        if (in_region[w] && comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<char>> masks(ncomp, std::vector<char>(N, 0));
  for (int i = 0; i < N; ++i) {
    if (!in_region[i]) continue;
    if (lat.is_even(i)) {
      masks[comp[i]][i] = 1;
    } else {
      // All four even neighbors are empty (hard-core), pairwise at distance
      // two, hence in one component.
      int c = comp[lat.neighbors(i)[0]];
      masks[c][i] = 1;
    }
  }
  for (int c = 0; c < ncomp; ++c)
    region.clusters.push_back(detail::finish_cluster(lat, std::move(masks[c])));
  return region;
}

// Reconstructs the unique configuration whose odd region is the given site
// set: odd sites of the region occupied, even sites outside it occupied.
inline Configuration configuration_from_odd_region(const Lattice& lat,
                                                   const std::vector<int>& region) {
  std::vector<char> in(lat.N(), 0);
  for (int s : region) in[s] = 1;
  Configuration cfg(lat);
  for (int i = 0; i < lat.N(); ++i) {
    if (lat.is_even(i) ? !in[i] : in[i]) cfg.set(i, true);
  }
  if (!cfg.is_hardcore())
    throw Error(ErrorCode::NotHardcore, "site set is not a valid odd region");
  return cfg;
}

inline std::pair<std::vector<DualEdge>, int> contour_and_perimeter(const OddCluster& c) {
  return {c.contour, c.perimeter};
}

inline int perimeter_of_config(const Configuration& cfg) {
  OddRegion r = odd_region(cfg);
  int p = 0;
  for (const auto& c : r.clusters) p += c.perimeter;
  return p;
}

// Empty odd sites outside the cluster with at least three neighbors in it.
inline std::vector<int> antiknobs(const OddCluster& c) {
  const Lattice& lat = *c.lat;
  std::vector<int> out;
  for (int i = 0; i < lat.N(); ++i) {
    if (lat.is_even(i) || c.contains(i)) continue;
    int inside = 0;
    for (int n : lat.neighbors(i)) inside += c.contains(n) ? 1 : 0;
    if (inside >= 3) out.push_back(i);
  }
  return out;
}

struct Diagonal {
  bool increasing = true;   // step (+1,+1); decreasing uses (+1,-1)
  bool broken = true;       // false: shorter diagonal relative to R(C)
  std::vector<int> sites;   // the missing odd sites, ascending (v2,v1)
  int k = 0;                // number of missing sites
  int present = 0;          // cluster sites on the same complete diagonal
                            // (shorter diagonals only)
};

// Maximal runs of odd sites outside C along a diagonal, bounded at both ends
// by odd sites of C. Every site of the run must touch the cluster (at least
// two even neighbors in C); this excludes runs that merely wrap around the
// torus outside the cluster before meeting it again.
inline std::vector<Diagonal> broken_diagonals(const OddCluster& c) {
  const Lattice& lat = *c.lat;
  const int L = lat.L();
  std::vector<Diagonal> out;
  for (int dir = 0; dir < 2; ++dir) {
    int dv2 = dir == 0 ? 1 : -1;  // increasing vs decreasing
    for (int i = 0; i < lat.N(); ++i) {
      if (lat.is_even(i) || c.contains(i)) continue;
      Site z = lat.site(i);
      int pred = lat.index(z.v1 - 1, z.v2 - dv2);
      if (!c.contains(pred)) continue;
      Diagonal d;
      d.increasing = (dir == 0);
      Site cur = z;
      bool closed = false;
      for (int steps = 0; steps < L; ++steps) {
        int ci = lat.index(cur);
        if (c.contains(ci)) {
          closed = true;
          break;
        }
        d.sites.push_back(ci);
        cur = Site{cur.v1 + 1, cur.v2 + dv2};
      }
      if (!closed || d.sites.empty()) continue;
      bool touches = true;
      for (int s : d.sites) {
        int inside = 0;
        for (int n : lat.neighbors(s)) inside += c.contains(n) ? 1 : 0;
        if (inside < 2) touches = false;
      }
      if (!touches) continue;
      d.k = static_cast<int>(d.sites.size());
      std::sort(d.sites.begin(), d.sites.end());
      out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end(), [](const Diagonal& a, const Diagonal& b) {
    if (a.sites.front() != b.sites.front()) return a.sites.front() < b.sites.front();
    return a.increasing && !b.increasing;
  });
  return out;
}

// Smallest rhombus (by inclusion) containing the cluster. For winding
// clusters, where several minimal rhombi may exist, the canonical choice is
// the one with the fewest sites, breaking ties by reference site in (v2,v1)
// order and then by (l1,l2).
inline Rhombus surrounding_rhombus(const OddCluster& c) {
  if (c.degenerate)
    throw Error(ErrorCode::DegenerateCluster,
                "surrounding rhombus requires a non-degenerate cluster");
  const Lattice& lat = *c.lat;
  const int L = lat.L();
  bool found = false;
  Rhombus best;
  std::size_t best_count = 0;
  std::vector<char> mask(lat.N());
  for (int ref = 0; ref < lat.N(); ++ref) {
    if (lat.is_even(ref)) continue;
    Site eta = lat.site(ref);
    for (int l1 = 1; l1 <= L; ++l1) {
      for (int l2 = 1; l2 <= L; ++l2) {
        if (l1 * l2 < c.odd_count) continue;
        std::fill(mask.begin(), mask.end(), 0);
        for (int k = 0; k < l1; ++k)
          for (int j = 0; j < l2; ++j) {
            int s = lat.index(eta.v1 + k + j, eta.v2 + k - j);
            mask[s] = 1;
            for (int n : lat.neighbors(s)) mask[n] = 1;
          }
        std::size_t count = 0;
        for (int i = 0; i < lat.N(); ++i) count += mask[i];
        if (found && count > best_count) continue;
        bool ok = true;
        for (int s : c.sites)
          if (!mask[s]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        Rhombus cand{eta, l1, l2};
        if (!found || count < best_count) {
          best = cand;
          best_count = count;
          found = true;
        } else if (count == best_count) {
          Site b = best.reference;
          if (eta < b || (eta == b && (l1 < best.l1 || (l1 == best.l1 && l2 < best.l2)))) {
            best = cand;
          }
        }
      }
    }
  }
  if (!found)
    throw Error(ErrorCode::ConstructionFailed, "no containing rhombus found");
  return best;
}

// Complete diagonals of the surrounding rhombus on which the cluster misses
// sites. Increasing diagonals are primary; decreasing groupings are reported
// only for missing sites lying on entirely absent increasing diagonals.
inline std::vector<Diagonal> shorter_diagonals(const OddCluster& c,
                                               const Rhombus& surrounding) {
  if (c.degenerate)
    throw Error(ErrorCode::DegenerateCluster,
                "shorter diagonals require a non-degenerate cluster");
  const Lattice& lat = *c.lat;
  std::vector<Diagonal> out;
  std::vector<char> covered(lat.N(), 0);
  Site eta = surrounding.reference;
  for (int pass = 0; pass < 2; ++pass) {
    bool increasing = (pass == 0);
    int outer = increasing ? surrounding.l2 : surrounding.l1;
    int inner = increasing ? surrounding.l1 : surrounding.l2;
    for (int a = 0; a < outer; ++a) {
      Diagonal d;
      d.increasing = increasing;
      d.broken = false;
      bool all_covered = true;
      for (int b = 0; b < inner; ++b) {
        int k = increasing ? b : a;
        int j = increasing ? a : b;
        int s = lat.index(eta.v1 + k + j, eta.v2 + k - j);
        if (c.contains(s)) {
          ++d.present;
        } else {
          d.sites.push_back(s);
          if (!covered[s]) all_covered = false;
        }
      }
      if (d.sites.empty()) continue;
      if (increasing) {
        if (d.present == 0) continue;  // not a shorter diagonal; handled below
      } else {
        if (all_covered) continue;  // already expressible via increasing ones
      }
      for (int s : d.sites) covered[s] = 1;
      d.k = static_cast<int>(d.sites.size());
      std::sort(d.sites.begin(), d.sites.end());
      out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end(), [](const Diagonal& a, const Diagonal& b) {
    if (a.sites.front() != b.sites.front()) return a.sites.front() < b.sites.front();
    return a.increasing && !b.increasing;
  });
  return out;
}

inline std::vector<Diagonal> shorter_diagonals(const OddCluster& c) {
  return shorter_diagonals(c, surrounding_rhombus(c));
}

// A hole is an empty odd site whose four even neighbors all belong to C.
inline bool has_hole(const OddCluster& c) {
  const Lattice& lat = *c.lat;
  for (int i = 0; i < lat.N(); ++i) {
    if (lat.is_even(i) || c.contains(i)) continue;
    int inside = 0;
    for (int n : lat.neighbors(i)) inside += c.contains(n) ? 1 : 0;
    if (inside == 4) return true;
  }
  return false;
}

// Monotone: perimeter equals that of the surrounding rhombus, or 4L when the
// surrounding rhombus winds around the torus.
inline bool is_monotone(const OddCluster& c) {
  if (c.degenerate) return true;
  Rhombus r = surrounding_rhombus(c);
  if (winding(r.l1, r.l2, c.lat->L()) == Winding::None) {
    OddCluster rc = make_cluster(*c.lat, rhombus_sites(*c.lat, r));
    return c.perimeter == rc.perimeter;
  }
  return c.perimeter == 4 * c.lat->L();
}

struct BridgeReport {
  std::vector<int> vertical_odd, horizontal_odd;    // column / row indices
  std::vector<int> vertical_even, horizontal_even;
  int max_muple_vertical_odd = 0, max_muple_horizontal_odd = 0;
  int max_muple_vertical_even = 0, max_muple_horizontal_even = 0;
  bool has_odd_cross = false, has_even_cross = false;
};

namespace detail {
// Longest circular run within 0..L-1 of flagged indices.
inline int longest_circular_run(const std::vector<char>& flag) {
  int L = static_cast<int>(flag.size());
  int total = 0;
  for (char f : flag) total += f;
  if (total == L) return L;
  int best = 0, cur = 0;
  for (int i = 0; i < 2 * L; ++i) {
    if (flag[i % L]) {
      ++cur;
      best = std::max(best, cur);
    } else {
      cur = 0;
    }
  }
  return std::min(best, L);
}
}  // namespace detail

// Columns and rows on which the configuration perfectly agrees with o or e.
inline BridgeReport bridge_report(const Configuration& cfg) {
  const Lattice& lat = cfg.lattice();
  const int L = lat.L();
  BridgeReport rep;
  std::vector<char> vo(L, 0), ve(L, 0), ho(L, 0), he(L, 0);
  for (int c = 0; c < L; ++c) {
    bool agree_o = true, agree_e = true;
    for (int v2 = 0; v2 < L; ++v2) {
      int i = lat.index(c, v2);
      bool occ = cfg.occupied(i);
      if (occ != !lat.is_even(i)) agree_o = false;
      if (occ != lat.is_even(i)) agree_e = false;
    }
    vo[c] = agree_o;
    ve[c] = agree_e;
    if (agree_o) rep.vertical_odd.push_back(c);
    if (agree_e) rep.vertical_even.push_back(c);
  }
  for (int r = 0; r < L; ++r) {
    bool agree_o = true, agree_e = true;
    for (int v1 = 0; v1 < L; ++v1) {
      int i = lat.index(v1, r);
      bool occ = cfg.occupied(i);
      if (occ != !lat.is_even(i)) agree_o = false;
      if (occ != lat.is_even(i)) agree_e = false;
    }
    ho[r] = agree_o;
    he[r] = agree_e;
    if (agree_o) rep.horizontal_odd.push_back(r);
    if (agree_e) rep.horizontal_even.push_back(r);
  }
  rep.max_muple_vertical_odd = detail::longest_circular_run(vo);
  rep.max_muple_horizontal_odd = detail::longest_circular_run(ho);
  rep.max_muple_vertical_even = detail::longest_circular_run(ve);
  rep.max_muple_horizontal_even = detail::longest_circular_run(he);
  rep.has_odd_cross = !rep.vertical_odd.empty() && !rep.horizontal_odd.empty();
  rep.has_even_cross = !rep.vertical_even.empty() && !rep.horizontal_even.empty();
  return rep;
}

enum class BarOrientation { Vertical, Horizontal, Diagonal };

struct Bar {
  BarOrientation orientation;
  std::vector<int> sites;  // odd sites, ascending
  int length = 0;
};

namespace detail {
// Minimal torus distance between a site and a site set.
inline int distance_to_set(const Lattice& lat, int from, const std::vector<int>& set) {
  int best = 2 * lat.L();
  for (int s : set) best = std::min(best, lat.distance(from, s));
  return best;
}
}  // namespace detail

// Largest rhombus whose odd sites are all contained in the cluster,
// maximizing the odd count and breaking ties by reference site in (v2,v1)
// order and then by (l1,l2).
inline Rhombus maximal_contained_rhombus(const OddCluster& c) {
  if (c.degenerate)
    throw Error(ErrorCode::DegenerateCluster,
                "contained rhombus requires a non-degenerate cluster");
  const Lattice& lat = *c.lat;
  const int L = lat.L();
  bool found = false;
  Rhombus best;
  for (int ref = 0; ref < lat.N(); ++ref) {
    if (lat.is_even(ref) || !c.contains(ref)) continue;
    Site eta = lat.site(ref);
    for (int l1 = 1; l1 <= L; ++l1) {
      bool row_ok = true;
      for (int k = 0; k < l1 && row_ok; ++k)
        row_ok = c.contains(lat.index(eta.v1 + k, eta.v2 + k));
      if (!row_ok) break;  // larger l1 cannot fit either
      for (int l2 = 1; l2 <= L; ++l2) {
        bool ok = true;
        for (int k = 0; k < l1 && ok; ++k)
          ok = c.contains(lat.index(eta.v1 + k + l2 - 1, eta.v2 + k - l2 + 1));
        if (!ok) break;  // nested in larger l2
        Rhombus cand{eta, l1, l2};
        int cn = l1 * l2, bn = best.l1 * best.l2;
        if (!found || cn > bn ||
            (cn == bn && (eta < best.reference ||
                          (eta == best.reference &&
                           (l1 < best.l1 || (l1 == best.l1 && l2 < best.l2)))))) {
          best = cand;
          found = true;
        }
      }
    }
  }
  if (!found)
    throw Error(ErrorCode::ConstructionFailed, "no contained rhombus found");
  return best;
}

// Bars of the cluster relative to its maximal contained rhombus: the odd
// sites outside that rhombus, grouped into maximal distance-2 runs along a
// column, row or diagonal. A bar is attached when every one of its sites is
// at distance exactly two from the rhombus' odd sites.
inline std::vector<Bar> bars(const OddCluster& c) {
  const Lattice& lat = *c.lat;
  const int L = lat.L();
  std::vector<Bar> out;
  if (c.degenerate) return out;
  Rhombus body = maximal_contained_rhombus(c);
  std::vector<char> in_body(lat.N(), 0);
  std::vector<int> body_odds = rhombus_odd_sites(lat, body);
  for (int s : body_odds) in_body[s] = 1;
  std::vector<int> leftovers;
  for (int s : c.sites)
    if (!lat.is_even(s) && !in_body[s]) leftovers.push_back(s);
  if (leftovers.empty()) return out;
  std::vector<char> left(lat.N(), 0);
  for (int s : leftovers) left[s] = 1;
  struct Dir {
    int dv1, dv2;
    BarOrientation orient;
  };
  const Dir dirs[4] = {{0, 2, BarOrientation::Vertical},
                       {2, 0, BarOrientation::Horizontal},
                       {1, 1, BarOrientation::Diagonal},
                       {1, -1, BarOrientation::Diagonal}};
  std::vector<Bar> runs;
  for (const Dir& dir : dirs) {
    for (int start : leftovers) {
      Site s = lat.site(start);
      if (left[lat.index(s.v1 - dir.dv1, s.v2 - dir.dv2)]) continue;  // not maximal
      Bar bar;
      bar.orientation = dir.orient;
      Site cur = s;
      for (int steps = 0; steps < L; ++steps) {
        int i = lat.index(cur);
        if (!left[i]) break;
        bar.sites.push_back(i);
        cur = Site{cur.v1 + dir.dv1, cur.v2 + dir.dv2};
      }
      bar.length = static_cast<int>(bar.sites.size());
      std::sort(bar.sites.begin(), bar.sites.end());
      runs.push_back(std::move(bar));
    }
  }
  // Keep runs that are not strict subsets of another run, deduplicated; a
  // single leftover site forms the same run in all four directions.
  for (const Bar& r : runs) {
    bool subsumed = false;
    for (const Bar& other : runs) {
      if (other.sites.size() <= r.sites.size()) continue;
      subsumed |= std::includes(other.sites.begin(), other.sites.end(),
                                r.sites.begin(), r.sites.end());
    }
    bool dup = false;
    for (const Bar& prev : out) dup |= (prev.sites == r.sites);
    if (subsumed || dup) continue;
    bool attached = true;
    for (int b : r.sites)
      if (detail::distance_to_set(lat, b, body_odds) != 2) attached = false;
    if (!attached) continue;
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const Bar& a, const Bar& b) {
    if (a.sites.front() != b.sites.front()) return a.sites.front() < b.sites.front();
    return a.orientation < b.orientation;
  });
  return out;
}

// Real area: occupied odd sites plus empty even sites.
inline int real_area(const Configuration& cfg) {
  EnergyStats st = energy_stats(cfg);
  return st.odd_occ + (cfg.lattice().N() / 2 - st.even_occ);
}

}  // namespace hcl
