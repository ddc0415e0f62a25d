#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hcl/odd_geometry.hpp"
#include "test_util.hpp"

using namespace hcl;

namespace {

// Builds the configuration whose occupied odd sites are exactly `odds` and
// whose empty even sites are exactly the even closure of `odds`.
Configuration config_from_odds(const Lattice& lat, const std::vector<int>& odds) {
  std::vector<int> region = odds;
  for (int s : odds)
    for (int n : lat.neighbors(s)) region.push_back(n);
  std::sort(region.begin(), region.end());
  region.erase(std::unique(region.begin(), region.end()), region.end());
  return configuration_from_odd_region(lat, region);
}

}  // namespace

TEST_CASE("odd region of the reference configurations") {
  Lattice lat(6);
  OddRegion re = odd_region(chessboard(lat, Parity::Even));
  CHECK(re.sites.empty());
  CHECK(re.clusters.empty());

  OddRegion ro = odd_region(chessboard(lat, Parity::Odd));
  CHECK(ro.sites.size() == 36);  // the whole torus
  REQUIRE(ro.clusters.size() == 1);
  CHECK(ro.clusters[0].perimeter == 0);
  CHECK(!ro.clusters[0].degenerate);

  Configuration hole = chessboard(lat, Parity::Even).flip(lat.index(0, 0), false);
  OddRegion rh = odd_region(hole);
  REQUIRE(rh.clusters.size() == 1);
  CHECK(rh.clusters[0].degenerate);
  CHECK(rh.clusters[0].sites == std::vector<int>{lat.index(0, 0)});
  CHECK(rh.clusters[0].perimeter == 4);
  CHECK_THROWS_AS(surrounding_rhombus(rh.clusters[0]), Error);
}

TEST_CASE("total perimeter equals four times the energy difference") {
  Lattice small(4, true);
  for (const Configuration& cfg : hcl::test::all_hardcore(small))
    CHECK(perimeter_of_config(cfg) == 4 * energy_stats(cfg).dH);
  std::mt19937_64 rng(21);
  Lattice lat(8);
  for (int t = 0; t < 300; ++t) {
    Configuration cfg = hcl::test::random_hardcore(lat, rng);
    CHECK(perimeter_of_config(cfg) == 4 * energy_stats(cfg).dH);
  }
}

TEST_CASE("odd region determines the configuration") {
  std::mt19937_64 rng(5);
  Lattice lat(6);
  std::set<std::vector<int>> seen_regions;
  for (int t = 0; t < 200; ++t) {
    Configuration cfg = hcl::test::random_hardcore(lat, rng);
    OddRegion r = odd_region(cfg);
    CHECK(configuration_from_odd_region(lat, r.sites) == cfg);
    // Cluster partition covers the region exactly once.
    std::vector<int> collected;
    for (const auto& c : r.clusters)
      collected.insert(collected.end(), c.sites.begin(), c.sites.end());
    std::sort(collected.begin(), collected.end());
    CHECK(collected == r.sites);
  }
}

TEST_CASE("broken diagonal with a unit gap is a hole and an antiknob") {
  Lattice lat(8);
  Configuration cfg = config_from_odds(lat, {lat.index(1, 0), lat.index(3, 2)});
  OddRegion r = odd_region(cfg);
  REQUIRE(r.clusters.size() == 1);
  const OddCluster& c = r.clusters[0];

  int gap = lat.index(2, 1);
  CHECK(has_hole(c));
  auto ak = antiknobs(c);
  CHECK(ak == std::vector<int>{gap});

  auto broken = broken_diagonals(c);
  REQUIRE(broken.size() == 1);
  CHECK(broken[0].increasing);
  CHECK(broken[0].k == 1);
  CHECK(broken[0].sites == std::vector<int>{gap});

  CHECK(!is_monotone(c));  // perimeter exceeds that of the surrounding rhombus
}

TEST_CASE("a full rhombus has no broken diagonals, holes or antiknobs") {
  Lattice lat(8);
  for (auto [l1, l2] : {std::pair{2, 2}, {3, 2}, {1, 3}}) {
    Configuration cfg = rhombus_configuration(lat, Rhombus{Site{1, 0}, l1, l2});
    OddRegion r = odd_region(cfg);
    REQUIRE(r.clusters.size() == 1);
    const OddCluster& c = r.clusters[0];
    CHECK(broken_diagonals(c).empty());
    CHECK(shorter_diagonals(c).empty());
    CHECK(antiknobs(c).empty());
    CHECK(!has_hole(c));
    CHECK(is_monotone(c));
    Rhombus s = surrounding_rhombus(c);
    CHECK(s.l1 == l1);
    CHECK(s.l2 == l2);
    CHECK(rhombus_sites(lat, s) == c.sites);
  }
}

TEST_CASE("shorter diagonal of a rhombus missing a corner") {
  Lattice lat(8);
  // Odd sites of R_{2,2} at (1,0) minus the corner (3,0).
  Configuration cfg = config_from_odds(
      lat, {lat.index(1, 0), lat.index(2, 1), lat.index(2, 7)});
  OddRegion r = odd_region(cfg);
  REQUIRE(r.clusters.size() == 1);
  const OddCluster& c = r.clusters[0];

  Rhombus s = surrounding_rhombus(c);
  CHECK(s.l1 == 2);
  CHECK(s.l2 == 2);
  auto shorter = shorter_diagonals(c, s);
  REQUIRE(shorter.size() == 1);
  CHECK(shorter[0].increasing);
  CHECK(shorter[0].k == 1);
  CHECK(shorter[0].present == 1);
  CHECK(shorter[0].sites == std::vector<int>{lat.index(3, 0)});
  CHECK(broken_diagonals(c).empty());
  CHECK(is_monotone(c));  // still has the perimeter of R_{2,2}
}

TEST_CASE("protuberance grows the surrounding rhombus by one diagonal") {
  Lattice lat(8);
  // R_{2,2} at (1,0) plus the protruding odd site (3,2).
  Configuration cfg = config_from_odds(
      lat, {lat.index(1, 0), lat.index(2, 1), lat.index(2, 7), lat.index(3, 0),
            lat.index(3, 2)});
  OddRegion r = odd_region(cfg);
  REQUIRE(r.clusters.size() == 1);
  const OddCluster& c = r.clusters[0];

  Rhombus s = surrounding_rhombus(c);
  CHECK(s.l1 == 3);
  CHECK(s.l2 == 2);
  CHECK(is_monotone(c));

  // The protuberance is reported as the single bar, of length one.
  Rhombus body = maximal_contained_rhombus(c);
  CHECK(body.l1 == 2);
  CHECK(body.l2 == 2);
  auto bar_list = bars(c);
  REQUIRE(bar_list.size() == 1);
  CHECK(bar_list[0].length == 1);
  CHECK(bar_list[0].sites == std::vector<int>{lat.index(3, 2)});
}

TEST_CASE("a full rhombus has no bars") {
  Lattice lat(8);
  Configuration cfg = rhombus_configuration(lat, Rhombus{Site{1, 0}, 2, 2});
  OddRegion r = odd_region(cfg);
  REQUIRE(r.clusters.size() == 1);
  CHECK(bars(r.clusters[0]).empty());
  Rhombus body = maximal_contained_rhombus(r.clusters[0]);
  CHECK((body.l1 == 2 && body.l2 == 2));
}

TEST_CASE("bar of length two alongside a rhombus side") {
  Lattice lat(8);
  // R_{3,2} at (1,0) plus the partial parallel diagonal {(0,1),(1,2)}, each
  // site at distance two from the rhombus' odd particles.
  Configuration cfg = config_from_odds(
      lat, {lat.index(1, 0), lat.index(2, 1), lat.index(3, 2), lat.index(2, 7),
            lat.index(3, 0), lat.index(4, 1), lat.index(0, 1), lat.index(1, 2)});
  OddRegion r = odd_region(cfg);
  REQUIRE(r.clusters.size() == 1);
  auto bar_list = bars(r.clusters[0]);
  REQUIRE(bar_list.size() == 1);
  CHECK(bar_list[0].length == 2);
  CHECK(bar_list[0].orientation == BarOrientation::Diagonal);
}

TEST_CASE("bridge report") {
  Lattice lat(6);
  BridgeReport all_o = bridge_report(chessboard(lat, Parity::Odd));
  CHECK(all_o.vertical_odd.size() == 6);
  CHECK(all_o.horizontal_odd.size() == 6);
  CHECK(all_o.max_muple_vertical_odd == 6);
  CHECK(all_o.has_odd_cross);
  CHECK(!all_o.has_even_cross);

  BridgeReport all_e = bridge_report(chessboard(lat, Parity::Even));
  CHECK(all_e.vertical_even.size() == 6);
  CHECK(all_e.has_even_cross);
  CHECK(!all_e.has_odd_cross);

  // A single vertical odd bridge in column 2 of the otherwise-e torus.
  Configuration cfg = chessboard(lat, Parity::Even);
  for (int v2 = 0; v2 < 6; ++v2) {
    int i = lat.index(2, v2);
    if (lat.is_even(i)) {
      cfg.set(i, false);
    } else {
      cfg.set(lat.index(1, v2), false);
      cfg.set(lat.index(3, v2), false);
      cfg.set(i, true);
    }
  }
  REQUIRE(cfg.is_hardcore());
  BridgeReport one = bridge_report(cfg);
  CHECK(one.vertical_odd == std::vector<int>{2});
  CHECK(one.horizontal_odd.empty());
  CHECK(one.vertical_even == std::vector<int>({0, 4, 5}));
  CHECK(one.horizontal_even.empty());
  CHECK(one.max_muple_vertical_odd == 1);
  CHECK(one.max_muple_vertical_even == 3);  // columns 4,5,0 wrap around
  CHECK(!one.has_odd_cross);
  CHECK(!one.has_even_cross);
}

TEST_CASE("large irregular cluster fixture on the 14-torus") {
  Lattice lat(14);
  // Occupied odd sites of a 24-particle cluster with five interior vacancies.
  const std::pair<int, int> odds_xy[] = {
      {-2, 0}, {-1, -1}, {1, 3},  {2, 4},  {-1, 3}, {0, 4},  {2, 2},  {2, 6},
      {1, 7},  {0, 6},   {3, 5},  {4, 4},  {1, -1}, {2, 0},  {3, 1},  {4, 2},
      {3, 3},  {5, 3},   {-2, 2}, {-3, 3}, {0, -2}, {4, 6},  {3, 7},  {4, 8}};
  std::vector<int> odds;
  for (auto [x, y] : odds_xy) odds.push_back(lat.index(x + 1, y));
  Configuration cfg = config_from_odds(lat, odds);
  OddRegion r = odd_region(cfg);
  REQUIRE(r.clusters.size() == 1);
  const OddCluster& c = r.clusters[0];
  CHECK(c.odd_count == 24);

  // Antiknobs: the five interior vacancies plus six boundary notches.
  const std::pair<int, int> ak_xy[] = {{5, 7}, {5, 5}, {1, 5},  {-1, 5},
                                       {-2, 4}, {0, 2}, {1, 1},  {-1, 1},
                                       {-3, 1}, {0, 0}, {2, 8}};
  std::vector<int> expected_ak;
  for (auto [x, y] : ak_xy) expected_ak.push_back(lat.index(x + 1, y));
  std::sort(expected_ak.begin(), expected_ak.end());
  CHECK(antiknobs(c) == expected_ak);

  Rhombus s = surrounding_rhombus(c);
  CHECK(s.l1 == 8);
  CHECK(s.l2 == 5);

  // Broken diagonals: the five interior vacancies group into three runs per
  // diagonal direction (lengths 2, 2, 1), and the boundary notch
  // {(-2,4),(-1,5)} is a fourth increasing run bounded by (-3,3) and (0,6).
  auto broken = broken_diagonals(c);
  REQUIRE(broken.size() == 7);
  auto site_set = [&](std::vector<std::pair<int, int>> xy) {
    std::vector<int> v;
    for (auto [x, y] : xy) v.push_back(lat.index(x + 1, y));
    std::sort(v.begin(), v.end());
    return v;
  };
  std::multiset<std::vector<int>> inc, dec;
  for (const Diagonal& d : broken) (d.increasing ? inc : dec).insert(d.sites);
  std::multiset<std::vector<int>> expected_inc{
      site_set({{0, 0}, {1, 1}}), site_set({{-1, 1}, {0, 2}}), site_set({{1, 5}}),
      site_set({{-2, 4}, {-1, 5}})};
  std::multiset<std::vector<int>> expected_dec{
      site_set({{0, 0}, {-1, 1}}), site_set({{1, 1}, {0, 2}}), site_set({{1, 5}})};
  CHECK(inc == expected_inc);
  CHECK(dec == expected_dec);

  CHECK(has_hole(c));
  CHECK(!is_monotone(c));
}
