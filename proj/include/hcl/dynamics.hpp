#pragma once
// Single-site Metropolis dynamics for the hard-core model. The proposal
// picks a site uniformly (probability 1/N each) and toggles its occupancy;
// occupations that would violate the hard-core constraint are rejected and
// contribute to the diagonal. A particle removal raises the energy by one
// and is accepted with probability exp(-beta); a feasible addition lowers
// the energy and is always accepted.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "hcl/lattice.hpp"
#include "hcl/rng.hpp"

namespace hcl {

struct DynamicsParams {
  double beta = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t step_cap = 0;       // 0 = unlimited where a cap is optional
  bool beta_infinite = false;       // zero-temperature limit: reject all uphill
};

struct Move {
  int site = 0;
  bool occupy = false;   // proposal direction
  bool accepted = false;
};

struct Trajectory {
  Configuration initial;
  std::vector<Move> moves;
  std::uint64_t steps = 0;

  explicit Trajectory(Configuration start) : initial(std::move(start)) {}

  Configuration replay() const {
    Configuration cfg = initial;
    for (const Move& m : moves)
      if (m.accepted) cfg = cfg.flip(m.site, m.occupy);
    return cfg;
  }
};

// Off-diagonal single-site transition probability, the diagonal mass when
// the two configurations coincide, and zero otherwise.
inline double transition_probability(const Configuration& a, const Configuration& b,
                                     double beta) {
  const Lattice& lat = a.lattice();
  const int N = lat.N();
  if (!a.is_hardcore() || !b.is_hardcore())
    throw Error(ErrorCode::NotHardcore, "transition probability needs hard-core states");
  int diff = -1;
  for (int i = 0; i < N && diff != -2; ++i) {
    if (a.occupied(i) == b.occupied(i)) continue;
    diff = (diff == -1) ? i : -2;
  }
  if (diff == -2) return 0.0;
  if (diff >= 0) {
    bool occupy = b.occupied(diff);
    if (occupy && !a.can_flip(diff, true)) return 0.0;
    double dh = occupy ? -1.0 : 1.0;
    return (1.0 / N) * std::exp(-beta * (dh > 0 ? dh : 0.0));
  }
  // Diagonal: one minus the total escape probability.
  double escape = 0.0;
  for (int i = 0; i < N; ++i) {
    bool occupy = !a.occupied(i);
    if (occupy && !a.can_flip(i, true)) continue;
    double dh = occupy ? -1.0 : 1.0;
    escape += (1.0 / N) * std::exp(-beta * (dh > 0 ? dh : 0.0));
  }
  return 1.0 - escape;
}

inline double detailed_balance_residual(const Configuration& a, const Configuration& b,
                                        double beta) {
  // Weights are normalized by exp(-beta*H(e)) to keep the magnitudes tame;
  // the residual is zero in exact arithmetic either way.
  const Lattice& lat = a.lattice();
  double h0 = -double(lat.N() / 2);
  double wa = std::exp(-beta * (energy(a) - h0));
  double wb = std::exp(-beta * (energy(b) - h0));
  return std::abs(wa * transition_probability(a, b, beta) -
                  wb * transition_probability(b, a, beta));
}

// One kernel draw, mutating the configuration in place. Returns the move.
inline Move step(Configuration& cfg, const DynamicsParams& params, CounterRng& rng) {
  const Lattice& lat = cfg.lattice();
  const int N = lat.N();
  Move m;
  m.site = int(rng.uniform_below(std::uint64_t(N)));
  m.occupy = !cfg.occupied(m.site);
  if (m.occupy) {
    // Downhill when feasible: accept; blocked occupations are rejected.
    m.accepted = cfg.can_flip(m.site, true);
  } else {
    // Removal is uphill by exactly one.
    if (params.beta_infinite)
      m.accepted = false;
    else
      m.accepted = rng.uniform01() < std::exp(-params.beta);
  }
  if (m.accepted) cfg = cfg.flip(m.site, m.occupy);
  return m;
}

// Simulates `steps` kernel draws; optionally logs every move.
inline Trajectory simulate(const Configuration& start, const DynamicsParams& params,
                           std::uint64_t steps, bool log_moves = false) {
  Trajectory traj(start);
  Configuration cfg = start;
  CounterRng rng(params.seed);
  for (std::uint64_t t = 0; t < steps; ++t) {
    Move m = step(cfg, params, rng);
    if (log_moves) traj.moves.push_back(m);
    ++traj.steps;
  }
  if (!log_moves) traj.moves.clear();
  return traj;
}

struct HittingResult {
  bool hit = false;
  std::uint64_t steps = 0;
  Configuration last;
};

// Kernel steps until the target predicate first holds; step_cap of 0 means
// no cap. The generator is passed in so trials can use split streams.
inline HittingResult hitting_time(const Configuration& start,
                                  const std::function<bool(const Configuration&)>& target,
                                  const DynamicsParams& params, CounterRng& rng) {
  HittingResult res{false, 0, start};
  Configuration cfg = start;
  if (target(cfg)) {
    res.hit = true;
    return res;
  }
  while (params.step_cap == 0 || res.steps < params.step_cap) {
    step(cfg, params, rng);
    ++res.steps;
    if (target(cfg)) {
      res.hit = true;
      break;
    }
  }
  res.last = cfg;
  return res;
}

inline HittingResult hitting_time(const Configuration& start,
                                  const std::function<bool(const Configuration&)>& target,
                                  const DynamicsParams& params) {
  CounterRng rng(params.seed);
  return hitting_time(start, target, params, rng);
}

}  // namespace hcl
