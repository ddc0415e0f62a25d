#pragma once
// Torus geometry, parity structure, hard-core configurations, energy statistics
// and single-site flips. Everything else in the library builds on this header.
//
// Conventions (fixed once, used everywhere):
//   * sites are indexed row-major: i = v2*L + v1 with 0 <= v1, v2 < L;
//   * a site is even iff (v1 + v2) is even; the torus side L is even, so the
//     parity classes form a proper 2-coloring with |V_e| = |V_o| = L^2/2;
//   * "lexicographic order" over sites means ascending (v2, v1), i.e. ascending
//     site index.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcl {

enum class ErrorCode {
  OddSideLength,
  SideTooSmall,
  NotHardcore,
  HardcoreViolation,
  DegenerateCluster,
  BadReferenceParity,
  LengthOutOfRange,
  OutsideLemmaCases,
  AreaTooLarge,
  NotOfRequiredForm,
  NoBrokenDiagonal,
  HasBrokenDiagonal,
  MultipleClusters,
  PreconditionViolated,
  NoCross,
  TargetNotInSet,
  ConstructionFailed,
  MemoryBudgetExceeded,
  Unreachable,
  BudgetExhausted,
  BadFormat,
  AmbiguousLabel,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Site {
  int v1 = 0;  // column, increases rightward
  int v2 = 0;  // row, row 0 is printed first

  friend bool operator==(const Site& a, const Site& b) {
    return a.v1 == b.v1 && a.v2 == b.v2;
  }
  friend bool operator!=(const Site& a, const Site& b) { return !(a == b); }
  friend bool operator<(const Site& a, const Site& b) {  // (v2, v1) ascending
    return a.v2 != b.v2 ? a.v2 < b.v2 : a.v1 < b.v1;
  }
};

// Immutable torus geometry: neighbor tables and parity masks, built once.
class Lattice {
 public:
  explicit Lattice(int L, bool relaxed = false) : L_(L), N_(L * L), relaxed_(relaxed) {
    if (L % 2 != 0) throw Error(ErrorCode::OddSideLength, "side length must be even");
    int minL = relaxed ? 4 : 6;
    if (L < minL)
      throw Error(ErrorCode::SideTooSmall,
                  "side length must be >= " + std::to_string(minL));
    nbr_.resize(static_cast<std::size_t>(N_));
    nbr2_.resize(static_cast<std::size_t>(N_));
    nbr2n_.resize(static_cast<std::size_t>(N_));
    for (int v2 = 0; v2 < L_; ++v2) {
      for (int v1 = 0; v1 < L_; ++v1) {
        int i = index(v1, v2);
        nbr_[i] = {index(v1 + 1, v2), index(v1 - 1, v2), index(v1, v2 + 1),
                   index(v1, v2 - 1)};
        // Sites at graph distance exactly two (same parity class).
        static constexpr int off[8][2] = {{1, 1},  {1, -1}, {-1, 1}, {-1, -1},
                                          {2, 0},  {-2, 0}, {0, 2},  {0, -2}};
        int k = 0;
        for (auto& o : off) {
          int j = index(v1 + o[0], v2 + o[1]);
          bool dup = (j == i);
          for (int t = 0; t < k && !dup; ++t) dup = (nbr2_[i][t] == j);
          if (!dup) nbr2_[i][k++] = j;
        }
        nbr2n_[i] = k;
      }
    }
  }

  int L() const { return L_; }
  int N() const { return N_; }
  bool relaxed() const { return relaxed_; }

  int index(int v1, int v2) const {
    v1 %= L_; if (v1 < 0) v1 += L_;
    v2 %= L_; if (v2 < 0) v2 += L_;
    return v2 * L_ + v1;
  }
  int index(const Site& s) const { return index(s.v1, s.v2); }
  Site site(int i) const { return Site{i % L_, i / L_}; }

  bool is_even(int i) const { return ((i % L_) + (i / L_)) % 2 == 0; }
  bool is_even(const Site& s) const { return ((s.v1 + s.v2) % 2 + 2) % 2 == 0; }

  const std::array<int, 4>& neighbors(int i) const { return nbr_[i]; }
  // Distance-two neighbors (same parity); count may be < 8 only on tiny tori.
  const int* neighbors2(int i) const { return nbr2_[i].data(); }
  int neighbors2_count(int i) const { return nbr2n_[i]; }

  // Torus graph (L1) distance between sites.
  int distance(int a, int b) const {
    Site sa = site(a), sb = site(b);
    int d1 = std::abs(sa.v1 - sb.v1); d1 = std::min(d1, L_ - d1);
    int d2 = std::abs(sa.v2 - sb.v2); d2 = std::min(d2, L_ - d2);
    return d1 + d2;
  }

 private:
  int L_;
  int N_;
  bool relaxed_;
  std::vector<std::array<int, 4>> nbr_;
  std::vector<std::array<int, 8>> nbr2_;
  std::vector<int> nbr2n_;
};

// Hard-core occupancy over the lattice. Value semantics: flips return new
// values; equality and hashing are bitwise over the occupancy words.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(const Lattice& lat)
      : lat_(&lat), words_((lat.N() + 63) / 64, 0) {}

  const Lattice& lattice() const { return *lat_; }

  bool occupied(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool occupied(const Site& s) const { return occupied(lat_->index(s)); }

  int particle_count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  // Returns the configuration with `site` set to `occupy`; identity when the
  // site already has that value. Occupying a blocked site is an error.
  Configuration flip(int site, bool occupy) const {
    Configuration out = *this;
    if (occupy) {
      for (int n : lat_->neighbors(site))
        if (occupied(n))
          throw Error(ErrorCode::HardcoreViolation,
                      "cannot occupy a site with an occupied neighbor");
    }
    out.set(site, occupy);
    return out;
  }

  // True when the occupation can be toggled without leaving the state space.
  bool can_flip(int site, bool occupy) const {
    if (!occupy) return true;
    for (int n : lat_->neighbors(site))
      if (occupied(n)) return false;
    return true;
  }

  bool is_hardcore() const {
    for (int i = 0; i < lat_->N(); ++i)
      if (occupied(i))
        for (int n : lat_->neighbors(i))
          if (occupied(n)) return false;
    return true;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  // Unchecked mutation; used by builders that establish hard-coreness
  // separately (e.g. deserialization, exhaustive enumeration).
  void set(int i, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.words_ == b.words_;
  }
  friend bool operator!=(const Configuration& a, const Configuration& b) {
    return !(a == b);
  }
  friend bool operator<(const Configuration& a, const Configuration& b) {
    // Bit-pattern order; used wherever deterministic iteration is required.
    for (std::size_t k = a.words_.size(); k-- > 0;)
      if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
    return false;
  }

 private:
  const Lattice* lat_ = nullptr;
  std::vector<std::uint64_t> words_;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : c.words()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

enum class Parity { Even, Odd };

// The two maximum-occupancy chessboard configurations.
inline Configuration chessboard(const Lattice& lat, Parity parity) {
  Configuration cfg(lat);
  bool want_even = (parity == Parity::Even);
  for (int i = 0; i < lat.N(); ++i)
    if (lat.is_even(i) == want_even) cfg.set(i, true);
  return cfg;
}

struct EnergyStats {
  int H = 0;        // energy: minus the particle count
  int dH = 0;       // H - H(e) >= 0
  int even_occ = 0; // e(sigma)
  int odd_occ = 0;  // o(sigma)
  int m = 0;        // o(sigma) - e(sigma), the manifold index
};

inline int energy(const Configuration& cfg) { return -cfg.particle_count(); }

inline EnergyStats energy_stats(const Configuration& cfg) {
  if (!cfg.is_hardcore())
    throw Error(ErrorCode::NotHardcore, "configuration violates hard-core constraint");
  const Lattice& lat = cfg.lattice();
  EnergyStats st;
  for (int i = 0; i < lat.N(); ++i) {
    if (!cfg.occupied(i)) continue;
    if (lat.is_even(i))
      ++st.even_occ;
    else
      ++st.odd_occ;
  }
  st.H = -(st.even_occ + st.odd_occ);
  st.dH = st.H + lat.N() / 2;
  st.m = st.odd_occ - st.even_occ;
  return st;
}

}  // namespace hcl

template <>
struct std::hash<hcl::Configuration> {
  std::size_t operator()(const hcl::Configuration& c) const {
    return hcl::ConfigurationHash{}(c);
  }
};
