#pragma once
// Classification of configurations into the six geometric families of
// transition-level states (labels ir, gr, cr, sb, mb, ib). Each family is a
// conjunction of named clauses; the returned witness records every clause
// with its outcome, so a mismatch against the exhaustive landscape can be
// triaged mechanically. The six families are treated as mutually exclusive:
// an overlap raises an error instead of silently picking one.
//
// Every family decomposes the odd region into a "core" cluster (the
// occupied odd sites together with their even closure) plus a small set of
// detached even vacancies. The core and the vacancies may touch at
// distance two, so the component decomposition of the region cannot
// separate them; the closure-based decomposition below can.
//
// Family sketches (the background always equals the even chessboard):
//   ir  full rhombus R_{L/2-1,L/2-1} plus a two-site degenerate rhombus at
//       distance two from the core;
//   gr  R_{L/2-1,L/2-1} with a single bar of length 1..L/2-1, plus one
//       even vacancy next to an antiknob;
//   cr  R_{L/2-1,L/2} with a single bar of length 1..L/2-2, plus one even
//       vacancy next to an antiknob;
//   sb  a single column or row of L/2-1 odd particles plus two even
//       vacancies next to the unique completing odd site;
//   mb  one or more adjacent full odd lines (a multiple bridge) with
//       monotone side bars, plus one vacancy next to an antiknob;
//   ib  an incomplete bridge: one or two adjacent lines of L/2-1 odd
//       particles with shorter lines alongside, plus one vacancy next to an
//       antiknob.

#include <algorithm>
#include <string>
#include <vector>

#include "hcl/lattice.hpp"
#include "hcl/odd_geometry.hpp"
#include "hcl/rhombus.hpp"

namespace hcl {

enum class SaddleClass { ir, gr, cr, sb, mb, ib, none };

inline const char* to_string(SaddleClass c) {
  switch (c) {
    case SaddleClass::ir: return "ir";
    case SaddleClass::gr: return "gr";
    case SaddleClass::cr: return "cr";
    case SaddleClass::sb: return "sb";
    case SaddleClass::mb: return "mb";
    case SaddleClass::ib: return "ib";
    default: return "none";
  }
}

struct ClauseCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ClassEvaluation {
  SaddleClass cls = SaddleClass::none;
  bool member = false;
  std::vector<ClauseCheck> clauses;
  // Structured parameters, populated when meaningful.
  Rhombus body{};                     // ir/gr/cr rhombus body
  int bar_length = 0;                 // gr/cr single bar
  int bridge_m = 0;                   // mb: number of full lines
  int extra_particles = 0;            // mb/ib particles outside the bridge
  bool vertical = false;              // sb/mb/ib orientation
  std::vector<int> degenerate_sites;  // even vacancies outside the core
  int antiknob = -1;                  // odd site witnessing the placement
};

struct SaddleLabel {
  SaddleClass label = SaddleClass::none;
  std::vector<ClassEvaluation> evaluations;  // one per class, in enum order
};

namespace detail {

struct CoreDecomp {
  const Lattice* lat = nullptr;
  OddCluster core;               // occupied odds plus their even closure
  bool core_ok = false;          // non-empty and a single connected cluster
  std::vector<int> extra_evens;  // region evens outside the core, ascending
};

inline CoreDecomp decompose_core(const Configuration& cfg) {
  const Lattice& lat = cfg.lattice();
  CoreDecomp d;
  d.lat = &lat;
  std::vector<char> in_core(lat.N(), 0);
  for (int i = 0; i < lat.N(); ++i) {
    if (lat.is_even(i) || !cfg.occupied(i)) continue;
    in_core[i] = 1;
    for (int n : lat.neighbors(i)) in_core[n] = 1;
  }
  std::vector<int> core_sites;
  for (int i = 0; i < lat.N(); ++i)
    if (in_core[i]) core_sites.push_back(i);
  d.core = make_cluster(lat, core_sites);
  // The core is a cluster when its even part is connected at distance two.
  bool connected = true;
  if (d.core.even_count > 0) {
    int start = -1;
    for (int s : core_sites)
      if (lat.is_even(s)) {
        start = s;
        break;
      }
    std::vector<char> seen(lat.N(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int t = 0; t < lat.neighbors2_count(v); ++t) {
        int w = lat.neighbors2(v)[t];
        if (in_core[w] && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    connected = reached == d.core.even_count;
  }
  d.core_ok = d.core.odd_count > 0 && connected;
  for (int i = 0; i < lat.N(); ++i)
    if (lat.is_even(i) && !cfg.occupied(i) && !in_core[i])
      d.extra_evens.push_back(i);
  return d;
}

inline int set_distance(const Lattice& lat, const std::vector<int>& a,
                        const std::vector<int>& b) {
  int best = 2 * lat.L();
  for (int x : a)
    for (int y : b) best = std::min(best, lat.distance(x, y));
  return best;
}

// Two sites adjacent along a diagonal (a two-site degenerate rhombus).
inline bool is_diagonal_pair(const Lattice& lat, const std::vector<int>& sites) {
  if (sites.size() != 2) return false;
  Site a = lat.site(sites[0]);
  Site b = lat.site(sites[1]);
  int dv1 = ((b.v1 - a.v1) % lat.L() + lat.L()) % lat.L();
  int dv2 = ((b.v2 - a.v2) % lat.L() + lat.L()) % lat.L();
  if (dv1 == lat.L() - 1) dv1 -= lat.L();
  if (dv2 == lat.L() - 1) dv2 -= lat.L();
  return std::abs(dv1) == 1 && std::abs(dv2) == 1;
}

inline std::vector<int> cluster_odds(const OddCluster& c) {
  std::vector<int> out;
  for (int s : c.sites)
    if (!c.lat->is_even(s)) out.push_back(s);
  return out;
}

// Decomposition of the cluster's odd sites as "rhombus body R_{b1,b2} plus
// one bar along a side": the odds fill some rhombus grid that extends the
// body by one diagonal line (any reference, either orientation), except for
// empty slots confined to one extreme diagonal line, whose occupied
// remainder is the bar; the bar length must lie in [1, kmax]. A completely
// full extended grid counts as a bar spanning the whole added line.
struct RhombusBarFit {
  bool ok = false;
  Rhombus enclosing{};
  Rhombus body{};
  int bar_length = 0;
};

inline RhombusBarFit fit_rhombus_with_bar(const OddCluster& c, int b1, int b2,
                                          int kmax) {
  const Lattice& lat = *c.lat;
  RhombusBarFit out;
  std::vector<int> odds = cluster_odds(c);
  const int n = static_cast<int>(odds.size());
  for (auto [l1, l2] : {std::pair{b1, b2 + 1}, std::pair{b2 + 1, b1}}) {
    if (n > l1 * l2) continue;
    for (int ref = 0; ref < lat.N(); ++ref) {
      if (lat.is_even(ref)) continue;
      Site eta = lat.site(ref);
      std::vector<char> occupied(static_cast<std::size_t>(l1) * l2, 0);
      int covered = 0;
      for (int k = 0; k < l1; ++k)
        for (int j = 0; j < l2; ++j) {
          int s = lat.index(eta.v1 + k + j, eta.v2 + k - j);
          if (c.contains(s)) {
            occupied[k * l2 + j] = 1;
            ++covered;
          }
        }
      if (covered != n) continue;  // some odd site falls outside the grid
      // Find an extreme diagonal line whose removal leaves the body and
      // which holds the bar; all empty slots must lie in that line.
      struct Line { bool k_line; int idx; };
      for (Line line : {Line{true, 0}, Line{true, l1 - 1},
                        Line{false, 0}, Line{false, l2 - 1}}) {
        int rem1 = line.k_line ? l1 - 1 : l1;
        int rem2 = line.k_line ? l2 : l2 - 1;
        if (!((rem1 == b1 && rem2 == b2) || (rem1 == b2 && rem2 == b1)))
          continue;
        bool confined = true;
        int in_line = 0;
        for (int k = 0; k < l1 && confined; ++k)
          for (int j = 0; j < l2 && confined; ++j) {
            bool on = line.k_line ? (k == line.idx) : (j == line.idx);
            if (on) in_line += occupied[k * l2 + j];
            else if (!occupied[k * l2 + j]) confined = false;
          }
        if (!confined || in_line < 1 || in_line > kmax) continue;
        out.ok = true;
        out.enclosing = Rhombus{eta, l1, l2};
        out.body = Rhombus{eta, rem1, rem2};
        out.bar_length = in_line;
        return out;
      }
    }
    if (b1 == b2 + 1) break;
  }
  return out;
}

// Does the cluster's odd-site set contain a translate of R_{a,b} (either
// orientation)?
inline bool contains_rhombus(const OddCluster& c, int a, int b) {
  const Lattice& lat = *c.lat;
  for (auto [l1, l2] : {std::pair{a, b}, std::pair{b, a}}) {
    for (int ref = 0; ref < lat.N(); ++ref) {
      if (lat.is_even(ref) || !c.contains(ref)) continue;
      Site eta = lat.site(ref);
      bool all = true;
      for (int k = 0; k < l1 && all; ++k)
        for (int j = 0; j < l2 && all; ++j)
          all = c.contains(lat.index(eta.v1 + k + j, eta.v2 + k - j));
      if (all) return true;
    }
    if (a == b) break;
  }
  return false;
}

// Number of occupied odd sites per column (vertical) or row (horizontal).
inline std::vector<int> line_counts(const OddCluster& c, bool vertical) {
  const Lattice& lat = *c.lat;
  std::vector<int> counts(lat.L(), 0);
  for (int s : cluster_odds(c)) {
    Site z = lat.site(s);
    ++counts[vertical ? z.v1 : z.v2];
  }
  return counts;
}

// Are the odd sites of the cluster in the given line a single contiguous run
// (cyclically, with the natural spacing of two)?
inline bool line_run_contiguous(const OddCluster& c, bool vertical, int line) {
  const Lattice& lat = *c.lat;
  const int L = lat.L();
  std::vector<char> present(L / 2, 0);
  int total = 0;
  for (int t = 0; t < L; ++t) {
    int i = vertical ? lat.index(line, t) : lat.index(t, line);
    if (lat.is_even(i) || !c.contains(i)) continue;
    present[t / 2] = 1;
    ++total;
  }
  if (total == 0 || total == L / 2) return true;
  int best = 0, cur = 0;
  for (int t = 0; t < L; ++t) {
    if (present[t % (L / 2)]) {
      ++cur;
      best = std::max(best, cur);
    } else {
      cur = 0;
    }
  }
  return std::min(best, L / 2) == total;
}

inline int cyclic_distance(int a, int b, int L) {
  int d = ((a - b) % L + L) % L;
  return std::min(d, L - d);
}

inline void add_clause(ClassEvaluation& ev, const std::string& name, bool ok,
                       const std::string& detail = "") {
  ev.clauses.push_back({name, ok, detail});
  if (!ok) ev.member = false;
}

// The detached part is a single even vacancy adjacent to an antiknob of the
// core. Fills in degenerate_sites/antiknob on success.
inline bool single_vacancy_at_antiknob(const CoreDecomp& d, ClassEvaluation& ev) {
  if (!d.core_ok || d.extra_evens.size() != 1) return false;
  const Lattice& lat = *d.lat;
  for (int u : antiknobs(d.core)) {
    if (lat.distance(d.extra_evens[0], u) == 1) {
      ev.degenerate_sites = d.extra_evens;
      ev.antiknob = u;
      return true;
    }
  }
  return false;
}

// Does some rhombus with dimensions {r1,r2} (any reference, either
// orientation) have odd slots covering all odds of the cluster and even
// closure covering every site of `evens`? Used for the placement clauses
// that pin the degenerate piece to a growth slot of the cluster.
inline bool region_fits_rhombus(const OddCluster& c, const std::vector<int>& evens,
                                int r1, int r2) {
  const Lattice& lat = *c.lat;
  std::vector<int> odds = cluster_odds(c);
  for (auto [l1, l2] : {std::pair{r1, r2}, std::pair{r2, r1}}) {
    for (int ref = 0; ref < lat.N(); ++ref) {
      if (lat.is_even(ref)) continue;
      Site eta = lat.site(ref);
      std::vector<char> slot(lat.N(), 0), closure(lat.N(), 0);
      for (int k = 0; k < l1; ++k)
        for (int j = 0; j < l2; ++j) {
          int s = lat.index(eta.v1 + k + j, eta.v2 + k - j);
          slot[s] = 1;
          for (int n : lat.neighbors(s)) closure[n] = 1;
        }
      bool ok = true;
      for (int s : odds)
        if (!slot[s]) { ok = false; break; }
      for (std::size_t t = 0; ok && t < evens.size(); ++t)
        if (!closure[evens[t]]) ok = false;
      if (ok) return true;
    }
    if (r1 == r2) break;
  }
  return false;
}

inline ClassEvaluation evaluate_ir(const CoreDecomp& d) {
  ClassEvaluation ev;
  ev.cls = SaddleClass::ir;
  ev.member = true;
  const Lattice& lat = *d.lat;
  const int L = lat.L();
  bool deg_ok = d.core_ok && is_diagonal_pair(lat, d.extra_evens) &&
                set_distance(lat, d.extra_evens, d.core.sites) == 2;
  if (deg_ok) ev.degenerate_sites = d.extra_evens;
  add_clause(ev, "one cluster plus a detached two-site degenerate rhombus",
             deg_ok);
  if (!d.core_ok) {
    add_clause(ev, "cluster is monotone", false);
    add_clause(ev, "cluster is the full rhombus R_{L/2-1,L/2-1}", false);
    add_clause(ev, "region fits a growth slot of R_{L/2-1,L/2}", false);
    return ev;
  }
  add_clause(ev, "cluster is monotone", is_monotone(d.core));
  Rhombus r = surrounding_rhombus(d.core);
  bool full = d.core.sites == rhombus_sites(lat, r);
  bool dims = r.l1 == L / 2 - 1 && r.l2 == L / 2 - 1;
  add_clause(ev, "cluster is the full rhombus R_{L/2-1,L/2-1}", full && dims);
  // The pair must flank an empty slot of a one-step extension of the
  // rhombus: the whole region fits inside some R_{L/2-1,L/2}.
  add_clause(ev, "region fits a growth slot of R_{L/2-1,L/2}",
             region_fits_rhombus(d.core, d.extra_evens, L / 2 - 1, L / 2));
  if (ev.member) ev.body = r;
  return ev;
}

// Shared between gr and cr: rhombus body of the requested dimensions with a
// single attached bar whose length lies in [1, max_bar].
inline ClassEvaluation evaluate_rhombus_with_bar(const CoreDecomp& d,
                                                 SaddleClass cls, int dim1,
                                                 int dim2, int max_bar) {
  ClassEvaluation ev;
  ev.cls = cls;
  ev.member = true;
  add_clause(ev, "one cluster plus a single vacancy next to an antiknob",
             single_vacancy_at_antiknob(d, ev));
  if (!d.core_ok) {
    add_clause(ev, "cluster is monotone", false);
    add_clause(ev, "cluster is the rhombus body with a single bar", false);
    return ev;
  }
  add_clause(ev, "cluster is monotone", is_monotone(d.core));
  // The cluster must be the body rhombus with a single bar laid along one of
  // its diagonal sides: equivalently, the odds fill a one-step extension of
  // the body except for slots confined to one extreme diagonal, and the
  // occupied remainder of that diagonal (the bar) has admissible length.
  // dim1 x dim2 are the body dimensions; the enclosing grid extends the
  // second dimension by one.
  bool shape_ok = false;
  std::string detail;
  RhombusBarFit fit = fit_rhombus_with_bar(d.core, std::max(dim1, dim2),
                                           std::min(dim1, dim2), max_bar);
  if (!fit.ok) {
    detail = "cluster is not the rhombus body plus one admissible side bar";
  } else {
    shape_ok = true;
    ev.body = fit.body;
    ev.bar_length = fit.bar_length;
  }
  add_clause(ev, "cluster is the rhombus body with a single bar", shape_ok, detail);
  return ev;
}

inline ClassEvaluation evaluate_sb(const CoreDecomp& d) {
  ClassEvaluation ev;
  ev.cls = SaddleClass::sb;
  ev.member = true;
  const Lattice& lat = *d.lat;
  const int L = lat.L();
  // Establish the column/row shape first so the completing odd site is
  // available for the vacancy-placement clause.
  bool shape_ok = false;
  int gap = -1;
  if (d.core_ok) {
    for (bool vertical : {true, false}) {
      std::vector<int> counts = line_counts(d.core, vertical);
      int used = -1;
      bool single = true;
      for (int t = 0; t < L; ++t) {
        if (counts[t] == 0) continue;
        if (used >= 0) single = false;
        used = t;
      }
      if (!single || used < 0 || counts[used] != L / 2 - 1) continue;
      for (int t = 0; t < L; ++t) {
        int i = vertical ? lat.index(used, t) : lat.index(t, used);
        if (!lat.is_even(i) && !d.core.contains(i)) gap = i;
      }
      shape_ok = true;
      ev.vertical = vertical;
      break;
    }
  }
  add_clause(ev, "cluster is a single column or row of L/2-1 particles", shape_ok,
             shape_ok ? "" : "no single line of exactly L/2-1 odd particles");
  bool deg_ok = false;
  if (gap >= 0 && d.extra_evens.size() == 2) {
    int near = 0;
    for (int s : d.extra_evens)
      if (lat.distance(s, gap) == 1) ++near;
    // Either both vacancies flank the completing site, or they form a
    // two-site degenerate rhombus reaching it.
    deg_ok = near == 2 || (near == 1 && is_diagonal_pair(lat, d.extra_evens));
    if (deg_ok) {
      ev.degenerate_sites = d.extra_evens;
      ev.antiknob = gap;
    }
  }
  add_clause(ev, "two even vacancies next to the completing odd site", deg_ok);
  add_clause(ev, "cluster is monotone", d.core_ok && is_monotone(d.core));
  return ev;
}

// Bridge-side bar profile: counts away from the full block must be
// contiguous runs of non-increasing length hugging the block.
inline bool side_profile_ok(const std::vector<int>& counts,
                            const OddCluster& c, bool vertical, int block_lo,
                            int block_len, int L, int& total_extra) {
  total_extra = 0;
  std::vector<char> in_block(L, 0);
  for (int j = 0; j < block_len; ++j) in_block[(block_lo + j) % L] = 1;
  std::vector<char> seen = in_block;
  for (int side = 0; side < 2; ++side) {
    int prev = L / 2;  // bridge height bounds the first bar
    for (int j = 1; j <= L - block_len; ++j) {
      int line = side == 0 ? ((block_lo - j) % L + L) % L
                           : (block_lo + block_len - 1 + j) % L;
      if (in_block[line]) break;  // wrapped all the way around
      int n = counts[line];
      if (n == 0) break;  // bars must hug the block contiguously
      if (seen[line] || n > prev) return false;
      if (!line_run_contiguous(c, vertical, line)) return false;
      seen[line] = 1;
      prev = n;
    }
  }
  for (int t = 0; t < L; ++t) {
    if (!seen[t] && counts[t] != 0) return false;  // detached particles
    if (!in_block[t]) total_extra += counts[t];
  }
  return true;
}

inline ClassEvaluation evaluate_mb(const CoreDecomp& d) {
  ClassEvaluation ev;
  ev.cls = SaddleClass::mb;
  ev.member = true;
  add_clause(ev, "one cluster plus a single vacancy next to an antiknob",
             single_vacancy_at_antiknob(d, ev));
  if (!d.core_ok) {
    add_clause(ev, "cluster is monotone", false);
    add_clause(ev, "cluster is a multiple bridge with admissible bars", false);
    return ev;
  }
  const OddCluster& c = d.core;
  const Lattice& lat = *d.lat;
  const int L = lat.L();
  add_clause(ev, "cluster is monotone", is_monotone(c));
  bool shape_ok = false;
  std::string detail = "no full odd line";
  for (bool vertical : {true, false}) {
    std::vector<int> counts = line_counts(c, vertical);
    std::vector<int> full;
    for (int t = 0; t < L; ++t)
      if (counts[t] == L / 2) full.push_back(t);
    if (full.empty()) continue;
    int m = static_cast<int>(full.size());
    int lo = full[0];
    for (int t : full) {
      int prev = ((t - 1) % L + L) % L;
      if (counts[prev] != L / 2) lo = t;
    }
    bool contiguous = true;
    for (int j = 0; j < m; ++j)
      if (counts[(lo + j) % L] != L / 2) contiguous = false;
    if (!contiguous) {
      detail = "full lines are not contiguous";
      continue;
    }
    int extra = 0;
    if (!side_profile_ok(counts, c, vertical, lo, m, L, extra)) {
      detail = "side bars are not contiguous non-increasing runs";
      continue;
    }
    // Bars may stack in several lines (the monotone clause forces each
    // stacked line to nest between the particles of the previous one), but
    // their total length across all lines is bounded by L/2-1.
    if (m == L - 3 && extra == 0) {
      shape_ok = true;
    } else if (m >= 2 && m < L - 3 && extra <= L / 2 - 1) {
      shape_ok = true;
    } else if (m == 1 && extra <= L / 2 - 1 &&
               !contains_rhombus(c, L / 2 - 1, L / 2)) {
      shape_ok = true;
    } else {
      detail = "bridge multiplicity or bar total out of range";
      continue;
    }
    ev.vertical = vertical;
    ev.bridge_m = m;
    ev.extra_particles = extra;
    break;
  }
  add_clause(ev, "cluster is a multiple bridge with admissible bars", shape_ok,
             shape_ok ? "" : detail);
  return ev;
}

inline ClassEvaluation evaluate_ib(const CoreDecomp& d) {
  ClassEvaluation ev;
  ev.cls = SaddleClass::ib;
  ev.member = true;
  add_clause(ev, "one cluster plus a single vacancy next to an antiknob",
             single_vacancy_at_antiknob(d, ev));
  if (!d.core_ok) {
    add_clause(ev, "cluster is monotone without R_{L/2-1,L/2-1}", false);
    add_clause(ev, "cluster is an incomplete bridge with admissible lines", false);
    add_clause(ev, "surrounding rhombus exceeds R_{L/2-1,L/2-1}", false);
    return ev;
  }
  const OddCluster& c = d.core;
  const Lattice& lat = *d.lat;
  const int L = lat.L();
  add_clause(ev, "cluster is monotone without R_{L/2-1,L/2-1}",
             is_monotone(c) && !contains_rhombus(c, L / 2 - 1, L / 2 - 1));
  bool shape_ok = false;
  std::string detail = "no line of exactly L/2-1 particles";
  for (bool vertical : {true, false}) {
    std::vector<int> counts = line_counts(c, vertical);
    int maxc = *std::max_element(counts.begin(), counts.end());
    if (maxc != L / 2 - 1) {
      if (maxc == L / 2) detail = "cluster contains a full bridge";
      continue;
    }
    std::vector<int> base;
    for (int t = 0; t < L; ++t)
      if (counts[t] == L / 2 - 1) base.push_back(t);
    int b = static_cast<int>(base.size());
    if (b > 2) {
      detail = "more than two lines of L/2-1 particles";
      continue;
    }
    if (b == 2 && cyclic_distance(base[0], base[1], L) != 1) {
      detail = "the two tallest lines are not adjacent";
      continue;
    }
    bool heights_ok = true;
    for (int t = 0; t < L && heights_ok; ++t) {
      int j = cyclic_distance(t, base[0], L);
      if (b == 2) j = std::min(j, cyclic_distance(t, base[1], L));
      if (j == 0) continue;
      if (counts[t] > std::max(0, L / 2 - 1 - j)) heights_ok = false;
      if (counts[t] > 0 && !line_run_contiguous(c, vertical, t)) heights_ok = false;
    }
    if (!heights_ok) {
      detail = "side lines exceed the distance-limited height";
      continue;
    }
    shape_ok = true;
    ev.vertical = vertical;
    int total = 0;
    for (int t = 0; t < L; ++t) total += counts[t];
    ev.extra_particles = total - b * (L / 2 - 1);
    break;
  }
  add_clause(ev, "cluster is an incomplete bridge with admissible lines",
             shape_ok, shape_ok ? "" : detail);
  Rhombus r = surrounding_rhombus(c);
  bool exceeds = !(winding(r.l1, r.l2, L) == Winding::None &&
                   r.l1 <= L / 2 - 1 && r.l2 <= L / 2 - 1);
  add_clause(ev, "surrounding rhombus exceeds R_{L/2-1,L/2-1}", exceeds);
  return ev;
}

}  // namespace detail

inline SaddleLabel classify(const Configuration& cfg) {
  if (!cfg.is_hardcore())
    throw Error(ErrorCode::NotHardcore, "classification needs a hard-core state");
  SaddleLabel out;
  detail::CoreDecomp d = detail::decompose_core(cfg);
  const int L = cfg.lattice().L();
  out.evaluations.push_back(detail::evaluate_ir(d));
  out.evaluations.push_back(detail::evaluate_rhombus_with_bar(
      d, SaddleClass::gr, L / 2 - 1, L / 2 - 1, L / 2 - 1));
  out.evaluations.push_back(detail::evaluate_rhombus_with_bar(
      d, SaddleClass::cr, L / 2 - 1, L / 2, L / 2 - 2));
  out.evaluations.push_back(detail::evaluate_sb(d));
  out.evaluations.push_back(detail::evaluate_mb(d));
  out.evaluations.push_back(detail::evaluate_ib(d));
  for (const ClassEvaluation& ev : out.evaluations) {
    if (!ev.member) continue;
    if (out.label != SaddleClass::none)
      throw Error(ErrorCode::AmbiguousLabel,
                  std::string("configuration matches both ") +
                      to_string(out.label) + " and " + to_string(ev.cls));
    out.label = ev.cls;
  }
  return out;
}

}  // namespace hcl
