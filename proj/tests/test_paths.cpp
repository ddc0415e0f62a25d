#include <catch2/catch_amalgamated.hpp>

#include "hcl/io.hpp"
#include "hcl/path.hpp"
#include "test_util.hpp"

using namespace hcl;

TEST_CASE("path heights") {
  Lattice lat(6);
  Configuration e = chessboard(lat, Parity::Even);
  Path trivial{{e}};
  CHECK(path_height(trivial) == -18);
  CHECK(is_valid_path(trivial));

  Configuration less = e.flip(lat.index(0, 0), false);
  Path updown{{e, less, e}};
  CHECK(is_valid_path(updown));
  CHECK(path_height(updown) == -17);

  Path broken_pair{{e, e.flip(lat.index(0, 0), false).flip(lat.index(2, 0), false)}};
  CHECK(!is_valid_path(broken_pair));
}

TEST_CASE("fill_broken closes a hole") {
  Lattice lat(8);
  // R_{3,3} minus its central odd site: the gap is a hole on two broken
  // diagonals.
  Rhombus r{Site{1, 0}, 3, 3};
  Configuration full = rhombus_configuration(lat, r);
  int center = lat.index(3, 0);
  REQUIRE(full.occupied(center));
  Configuration start = full.flip(center, false);

  Path p = fill_broken(start);
  CHECK(is_valid_path(p));
  CHECK(p.configs.back() == full);
  CHECK(p.configs.size() == 2);  // direct occupation, no blocking even
  CHECK(path_height(p) <= energy(start) + 1);
  CHECK(perimeter_of_config(p.configs.back()) < perimeter_of_config(start));

  CHECK_THROWS_AS(fill_broken(full), Error);  // no broken diagonal
}

TEST_CASE("fill_shorter completes a missing corner") {
  Lattice lat(8);
  Configuration start = chessboard(lat, Parity::Even);
  // Odd sites of R_{2,2} at (1,0) minus the corner (3,0), with closure.
  for (int s : {lat.index(1, 0), lat.index(2, 1), lat.index(2, 7)}) {
    for (int n : lat.neighbors(s)) start.set(n, false);
    start.set(s, true);
  }
  REQUIRE(start.is_hardcore());

  Path p = fill_shorter(start);
  CHECK(is_valid_path(p));
  CHECK(p.configs.size() == 3);  // remove one blocking even, then occupy
  OddCluster end = odd_region(p.configs.back()).clusters.at(0);
  Rhombus r = surrounding_rhombus(end);
  CHECK((r.l1 == 2 && r.l2 == 2));
  CHECK(end.sites == rhombus_sites(lat, r));
  CHECK(perimeter_of_config(p.configs.back()) == perimeter_of_config(start));
  CHECK(path_height(p) <= energy(start) + 1);
}

TEST_CASE("expand_to_rhombus is the identity on rhombi") {
  Lattice lat(8);
  Configuration cfg = rhombus_configuration(lat, Rhombus{Site{3, 2}, 2, 3});
  Path p = expand_to_rhombus(cfg);
  CHECK(p.configs.size() == 1);
  CHECK(p.configs.front() == cfg);
}

TEST_CASE("expansion properties on random clusters") {
  std::mt19937_64 rng(41);
  for (int L : {6, 8}) {
    Lattice lat(L);
    int max_odds = (L / 2 - 1) * (L / 2);
    for (int t = 0; t < 200; ++t) {
      Configuration start = hcl::test::random_cluster_config(lat, rng, max_odds);
      OddCluster c = odd_region(start).clusters.at(0);
      bool had_broken = !broken_diagonals(c).empty();
      Rhombus r = surrounding_rhombus(c);

      Path p = expand_to_rhombus(start);
      INFO("L=" << L << " t=" << t);
      REQUIRE(is_valid_path(p));
      CHECK(path_height(p) <= energy(start) + 1);

      OddRegion end = odd_region(p.configs.back());
      REQUIRE(end.clusters.size() == 1);
      CHECK(end.clusters[0].sites == rhombus_sites(lat, r));

      int p0 = perimeter_of_config(start);
      int p1 = perimeter_of_config(p.configs.back());
      if (had_broken)
        CHECK(p1 < p0);
      else
        CHECK(p1 == p0);
    }
  }
}

TEST_CASE("reduce_cross sends low configurations to a ground state") {
  Lattice lat(6);
  Configuration e = chessboard(lat, Parity::Even);
  Configuration o = chessboard(lat, Parity::Odd);

  SECTION("one vacancy") {
    Path back_to_o = reduce_cross(o.flip(lat.index(1, 0), false));
    CHECK(is_valid_path(back_to_o));
    CHECK(back_to_o.configs.back() == o);
    Path back_to_e = reduce_cross(e.flip(lat.index(0, 0), false));
    CHECK(is_valid_path(back_to_e));
    CHECK(back_to_e.configs.back() == e);
  }

  SECTION("random low-energy configurations") {
    std::mt19937_64 rng(53);
    int tested = 0;
    while (tested < 150) {
      Configuration cfg = hcl::test::random_hardcore(lat, rng);
      if (energy_stats(cfg).dH >= 6) continue;
      ++tested;
      Path p = reduce_cross(cfg);
      INFO(to_text(cfg));
      REQUIRE(is_valid_path(p));
      CHECK((p.configs.back() == e || p.configs.back() == o));
      CHECK(path_height(p) <= energy(cfg) + 1);
    }
  }
}
