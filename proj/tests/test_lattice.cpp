#include <catch2/catch_amalgamated.hpp>

#include "hcl/io.hpp"
#include "hcl/lattice.hpp"
#include "test_util.hpp"

using namespace hcl;

TEST_CASE("lattice construction and parity") {
  Lattice lat(6);
  CHECK(lat.N() == 36);
  int even = 0;
  for (int i = 0; i < lat.N(); ++i) even += lat.is_even(i) ? 1 : 0;
  CHECK(even == 18);

  CHECK_THROWS_AS(Lattice(5), Error);
  CHECK_THROWS_AS(Lattice(4), Error);
  try {
    Lattice(5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddSideLength);
  }
  try {
    Lattice(4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SideTooSmall);
  }

  Lattice small(4, /*relaxed=*/true);
  CHECK(small.N() == 16);
  CHECK(small.relaxed());
}

TEST_CASE("neighbor tables are symmetric with 4 distinct entries") {
  for (int L : {4, 6, 8}) {
    Lattice lat(L, true);
    for (int i = 0; i < lat.N(); ++i) {
      const auto& nb = lat.neighbors(i);
      for (int a = 0; a < 4; ++a) {
        CHECK(nb[a] != i);
        for (int b = a + 1; b < 4; ++b) CHECK(nb[a] != nb[b]);
        bool back = false;
        for (int j : lat.neighbors(nb[a])) back |= (j == i);
        CHECK(back);
        CHECK(!(lat.is_even(i) && lat.is_even(nb[a])));
        CHECK(!(!lat.is_even(i) && !lat.is_even(nb[a])));
      }
    }
  }
}

TEST_CASE("chessboard states") {
  Lattice lat(6);
  Configuration e = chessboard(lat, Parity::Even);
  Configuration o = chessboard(lat, Parity::Odd);
  CHECK(e.is_hardcore());
  CHECK(o.is_hardcore());
  CHECK(e.particle_count() == 18);
  CHECK(energy(e) == -18);
  CHECK(energy_stats(o).m == 18);
  for (int i = 0; i < lat.N(); ++i)
    CHECK((e.occupied(i) ? 1 : 0) + (o.occupied(i) ? 1 : 0) == 1);
}

TEST_CASE("is_hardcore") {
  Lattice lat(6);
  Configuration e = chessboard(lat, Parity::Even);
  CHECK(e.is_hardcore());

  Configuration all(lat);
  for (int i = 0; i < lat.N(); ++i) all.set(i, true);
  CHECK(!all.is_hardcore());

  Configuration bad = e;
  bad.set(lat.index(1, 0), true);  // odd site amid occupied evens
  CHECK(!bad.is_hardcore());
}

TEST_CASE("energy statistics") {
  Lattice lat(6);
  Configuration e = chessboard(lat, Parity::Even);
  EnergyStats st = energy_stats(e);
  CHECK(st.H == -18);
  CHECK(st.dH == 0);
  CHECK(st.m == -18);

  Configuration less = e.flip(lat.index(0, 0), false);
  EnergyStats st2 = energy_stats(less);
  CHECK(st2.dH == 1);
  CHECK(st2.m == -17);

  Configuration bad = e;
  bad.set(lat.index(1, 0), true);
  CHECK_THROWS_AS(energy_stats(bad), Error);
}

TEST_CASE("flip semantics") {
  Lattice lat(6);
  Configuration e = chessboard(lat, Parity::Even);
  int odd_site = lat.index(1, 0);
  CHECK_THROWS_AS(e.flip(odd_site, true), Error);

  int even_site = lat.index(2, 0);
  Configuration less = e.flip(even_site, false);
  CHECK(energy_stats(less).dH == 1);
  CHECK(less.flip(even_site, true) == e);  // involution
}

TEST_CASE("single flips move between adjacent manifolds") {
  std::mt19937_64 rng(7);
  Lattice lat(6);
  for (int t = 0; t < 200; ++t) {
    Configuration cfg = hcl::test::random_hardcore(lat, rng);
    EnergyStats st = energy_stats(cfg);
    std::uniform_int_distribution<int> pick(0, lat.N() - 1);
    int i = pick(rng);
    bool occupy = !cfg.occupied(i);
    if (!cfg.can_flip(i, occupy)) continue;
    EnergyStats st2 = energy_stats(cfg.flip(i, occupy));
    CHECK(std::abs(st2.m - st.m) <= 1);
    CHECK(std::abs(st2.H - st.H) == 1);
  }
}

TEST_CASE("manifold index and energy difference have equal parity") {
  // Exhaustive on the relaxed 4x4 torus.
  Lattice small(4, true);
  for (const Configuration& cfg : hcl::test::all_hardcore(small)) {
    EnergyStats st = energy_stats(cfg);
    CHECK(((st.m % 2) + 2) % 2 == st.dH % 2);
  }
  // Randomized at L = 6 and 8.
  std::mt19937_64 rng(11);
  for (int L : {6, 8}) {
    Lattice lat(L);
    for (int t = 0; t < 500; ++t) {
      EnergyStats st = energy_stats(hcl::test::random_hardcore(lat, rng));
      CHECK(((st.m % 2) + 2) % 2 == st.dH % 2);
    }
  }
}

TEST_CASE("serialization round trips") {
  std::mt19937_64 rng(3);
  Lattice lat(6);
  for (int t = 0; t < 50; ++t) {
    Configuration cfg = hcl::test::random_hardcore(lat, rng);
    CHECK(from_text(lat, to_text(cfg)) == cfg);
    CHECK(from_json(lat, to_json(cfg)) == cfg);
  }
  Configuration e = chessboard(lat, Parity::Even);
  std::string txt = to_text(e);
  CHECK(txt.substr(0, 4) == "L=6\n");
  CHECK(txt.find("#.#.#.") != std::string::npos);
  CHECK_THROWS_AS(from_text(lat, "nonsense"), Error);
}
