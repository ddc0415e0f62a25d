#pragma once
// Rhombus algebra on the torus: construction of (possibly degenerate) odd
// rhombi, the closed-form perimeter formula, winding classification, the
// complement classification, and the isoperimetric helpers (area
// decomposition, minimal-perimeter shapes and bounds).
//
// A non-degenerate rhombus R_{l1,l2}(eta) with odd reference site eta is the
// odd-site set
//   S = { (eta1 + k + j, eta2 + k - j) : 0 <= k < l1, 0 <= j < l2 }  (mod L)
// together with all even sites adjacent to S. The increasing diagonal
// direction is (+1,+1) (the k axis), the decreasing one is (+1,-1) (the j
// axis). Degenerate rhombi (l1*l2 = 0) take an even reference site and
// consist of even sites only: a decreasing run of l2+1 sites when l1 = 0, an
// increasing run of l1+1 sites when l2 = 0, and the single site eta when
// both vanish.

#include <cmath>
#include <string>
#include <vector>

#include "hcl/lattice.hpp"

namespace hcl {

struct Rhombus {
  Site reference;
  int l1 = 0;
  int l2 = 0;

  bool degenerate() const { return l1 == 0 || l2 == 0; }
};

namespace detail {
inline void check_rhombus_args(const Lattice& lat, const Rhombus& r) {
  if (r.l1 < 0 || r.l1 > lat.L() || r.l2 < 0 || r.l2 > lat.L())
    throw Error(ErrorCode::LengthOutOfRange, "rhombus lengths must lie in [0, L]");
  bool even_ref = lat.is_even(r.reference);
  if (r.degenerate() ? !even_ref : even_ref)
    throw Error(ErrorCode::BadReferenceParity,
                r.degenerate() ? "degenerate rhombus needs an even reference site"
                               : "rhombus needs an odd reference site");
}
}  // namespace detail

// The odd sites S of a rhombus (empty for degenerate rhombi), deduplicated
// and sorted by site index.
inline std::vector<int> rhombus_odd_sites(const Lattice& lat, const Rhombus& r) {
  detail::check_rhombus_args(lat, r);
  std::vector<char> in(lat.N(), 0);
  if (!r.degenerate()) {
    for (int k = 0; k < r.l1; ++k)
      for (int j = 0; j < r.l2; ++j)
        in[lat.index(r.reference.v1 + k + j, r.reference.v2 + k - j)] = 1;
  }
  std::vector<int> out;
  for (int i = 0; i < lat.N(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

// The full site set of a rhombus: S together with its even boundary for
// non-degenerate rhombi, or the defining even run for degenerate ones.
inline std::vector<int> rhombus_sites(const Lattice& lat, const Rhombus& r) {
  detail::check_rhombus_args(lat, r);
  std::vector<char> in(lat.N(), 0);
  if (r.degenerate()) {
    if (r.l1 == 0 && r.l2 == 0) {
      in[lat.index(r.reference)] = 1;
    } else if (r.l1 == 0) {
      for (int j = 0; j <= r.l2; ++j)
        in[lat.index(r.reference.v1 + j, r.reference.v2 - j)] = 1;
    } else {
      for (int k = 0; k <= r.l1; ++k)
        in[lat.index(r.reference.v1 + k, r.reference.v2 + k)] = 1;
    }
  } else {
    for (int s : rhombus_odd_sites(lat, r)) {
      in[s] = 1;
      for (int n : lat.neighbors(s)) in[n] = 1;
    }
  }
  std::vector<int> out;
  for (int i = 0; i < lat.N(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

// Site set S union boundary(S) generated from an arbitrary reference site,
// without parity checks. Used to verify the complement classification, whose
// complementary rhombus has a reference site of the opposite parity.
inline std::vector<int> rhombus_site_set_unchecked(const Lattice& lat, Site ref,
                                                   int l1, int l2) {
  std::vector<char> core(lat.N(), 0), in(lat.N(), 0);
  for (int k = 0; k < l1; ++k)
    for (int j = 0; j < l2; ++j)
      core[lat.index(ref.v1 + k + j, ref.v2 + k - j)] = 1;
  for (int i = 0; i < lat.N(); ++i) {
    if (!core[i]) continue;
    in[i] = 1;
    for (int n : lat.neighbors(i)) in[n] = 1;
  }
  std::vector<int> out;
  for (int i = 0; i < lat.N(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

// The hard-core configuration whose odd region is exactly the given rhombus:
// odd sites of S occupied, even sites of the rhombus empty, chessboard-e
// elsewhere.
inline Configuration rhombus_configuration(const Lattice& lat, const Rhombus& r) {
  Configuration cfg = chessboard(lat, Parity::Even);
  for (int s : rhombus_sites(lat, r)) {
    if (lat.is_even(s))
      cfg.set(s, false);
    else
      cfg.set(s, true);
  }
  for (int s : rhombus_odd_sites(lat, r)) cfg.set(s, true);
  if (!cfg.is_hardcore())
    throw Error(ErrorCode::ConstructionFailed, "rhombus pattern is not hard-core");
  return cfg;
}

// Closed-form perimeter of R_{l1,l2} on the L-torus.
inline int perimeter_formula(int l1, int l2, int L) {
  if (l1 < 0 || l1 > L || l2 < 0 || l2 > L)
    throw Error(ErrorCode::LengthOutOfRange, "rhombus lengths must lie in [0, L]");
  int lmin = std::min(l1, l2), lmax = std::max(l1, l2);
  if (lmax < L) {
    if (lmin < L / 2) return 4 * (l1 + l2 + 1);
    return 4 * (2 * L - (l1 + l2 + 1));
  }
  return lmin < L / 2 ? 4 * L : 0;
}

enum class Winding { None, Horizontal, Vertical, Both };

// Whether (and how) R_{l1,l2} wraps around the torus. A rhombus with both
// lengths at least L/2 contains L/2 odd sites in a single column and in a
// single row, so it winds both ways; a rhombus with one length equal to L is
// a band wrapping along one diagonal direction (labelled by which length is
// full); otherwise it does not wind.
inline Winding winding(int l1, int l2, int L) {
  if (l1 < 0 || l1 > L || l2 < 0 || l2 > L)
    throw Error(ErrorCode::LengthOutOfRange, "rhombus lengths must lie in [0, L]");
  int lmin = std::min(l1, l2), lmax = std::max(l1, l2);
  if (lmin >= L / 2) return Winding::Both;
  if (lmax == L) return l1 == L ? Winding::Horizontal : Winding::Vertical;
  return Winding::None;
}

enum class ComplementCase {
  Rhombus,       // complement is a rhombus R_{L-l1-1,L-l2-1}(eta_hat)
  IsolatedOdd,   // complement is L - min(l1,l2) disjoint odd sites
  Band,          // rhombus holds L*min odd and L*(min+1) even sites
  WholeTorus,    // rhombus is all of V
};

struct ComplementShape {
  ComplementCase kind;
  int l1 = 0, l2 = 0;          // complement rhombus lengths (Rhombus case)
  Site reference;              // complement rhombus reference (Rhombus case)
  int isolated_count = 0;      // IsolatedOdd case
  int odd_count = 0, even_count = 0;  // Band case
};

// Classification of the complement of R_{l1,l2}(eta) within the lemma's
// parameter ranges. The complement reference site in the first case is
// eta + (l1 + l2 + 1 + L/2, l1 - l2 + L/2), which is even. (Each pair of
// diagonal indices is realized by two antipodal sites; the representative
// offset by (L/2, L/2) is the one that actually generates the complement,
// verified constructively by the tests.)
inline ComplementShape complement_classification(const Lattice& lat, const Rhombus& r) {
  detail::check_rhombus_args(lat, r);
  const int L = lat.L();
  int lmin = std::min(r.l1, r.l2), lmax = std::max(r.l1, r.l2);
  ComplementShape out{};
  if (lmax <= L - 2 && lmin >= L / 2) {
    out.kind = ComplementCase::Rhombus;
    out.l1 = L - r.l1 - 1;
    out.l2 = L - r.l2 - 1;
    out.reference = lat.site(lat.index(r.reference.v1 + r.l1 + r.l2 + 1 + L / 2,
                                       r.reference.v2 + r.l1 - r.l2 + L / 2));
    return out;
  }
  if (lmax == L - 1 && lmin >= L / 2) {
    out.kind = ComplementCase::IsolatedOdd;
    out.isolated_count = L - lmin;
    return out;
  }
  if (lmax == L && lmin < L / 2) {
    out.kind = ComplementCase::Band;
    out.odd_count = L * lmin;
    out.even_count = L * (lmin + 1);
    return out;
  }
  if (lmax == L && lmin >= L / 2) {
    out.kind = ComplementCase::WholeTorus;
    return out;
  }
  throw Error(ErrorCode::OutsideLemmaCases,
              "complement classification is defined only for winding rhombi");
}

// --- Isoperimetric helpers ---------------------------------------------------

struct AreaDecomposition {
  int n = 0;
  int s = 0;
  int k = 0;        // 0 <= k < s
  bool square = false;  // true: n = s^2 + k; false: n = s(s-1) + k
};

// Every n >= 1 is uniquely either s(s-1)+k or s^2+k with 0 <= k < s.
inline AreaDecomposition decompose_area(int n) {
  if (n < 1) throw Error(ErrorCode::LengthOutOfRange, "area must be positive");
  AreaDecomposition d;
  d.n = n;
  for (int s = 1;; ++s) {
    if (n >= s * (s - 1) && n < s * s) {
      d.s = s;
      d.k = n - s * (s - 1);
      d.square = false;
      return d;
    }
    if (n >= s * s && n < s * s + s) {
      d.s = s;
      d.k = n - s * s;
      d.square = true;
      return d;
    }
  }
}

struct ShapeSpec {
  int rhombus_l1 = 0;
  int rhombus_l2 = 0;
  int bar_length = 0;   // attached to a longest side when the rhombus is not square
  int perimeter = 0;
  std::string describe() const {
    std::string s = "R_{" + std::to_string(rhombus_l1) + "," + std::to_string(rhombus_l2) + "}";
    if (bar_length > 0) s += "+bar(" + std::to_string(bar_length) + ")";
    return s;
  }
};

// A minimal-perimeter odd cluster of area n: a rhombus R_{s,s-1} (or its
// transpose) with a bar of length k on a longest side, or R_{s,s} with a bar
// of length k on any side.
inline ShapeSpec minimal_perimeter_shape(int n, int L) {
  if (n > L * (L - 2))
    throw Error(ErrorCode::AreaTooLarge, "shape family requires n <= L(L-2)");
  AreaDecomposition d = decompose_area(n);
  ShapeSpec spec;
  spec.rhombus_l1 = d.s;
  spec.rhombus_l2 = d.square ? d.s : d.s - 1;
  spec.bar_length = d.k;
  // Perimeter via P/4 = evenCount - oddCount: a rhombus contributes l1+l2+1
  // and an attached non-empty bar contributes one more.
  spec.perimeter = 4 * (spec.rhombus_l1 + spec.rhombus_l2 + 1 + (d.k > 0 ? 1 : 0));
  return spec;
}

// Smallest perimeter attainable by an odd cluster of area n (n <= L(L-2)).
// This is the universal lower bound P >= 4(2*sqrt(n)+1) rounded up to the
// value realized by the minimal shape family.
inline int min_perimeter_lower_bound(int n, int L) {
  return minimal_perimeter_shape(n, L).perimeter;
}

// The unique minimal-perimeter odd cluster with real area 2l^2+2l+1 is the
// square rhombus R_{l,l}.
inline Rhombus real_area_minimizer(const Lattice& lat, int real_area) {
  for (int l = 1; l < lat.L() / 2; ++l) {
    if (2 * l * l + 2 * l + 1 == real_area) {
      Rhombus r;
      r.reference = Site{1, 0};  // odd; any translate is equivalent
      r.l1 = r.l2 = l;
      return r;
    }
  }
  throw Error(ErrorCode::NotOfRequiredForm,
              "real area must have the form 2l^2+2l+1 with 1 <= l < L/2");
}

}  // namespace hcl
