#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <string>

#include "hcl/io.hpp"
#include "hcl/render.hpp"
#include "hcl/rhombus.hpp"
#include "test_util.hpp"

using namespace hcl;

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string(HCL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("text and json serialization round trip") {
  std::mt19937_64 rng(2026);
  for (int L : {6, 8}) {
    Lattice lat(L);
    for (int rep = 0; rep < 20; ++rep) {
      Configuration cfg = test::random_hardcore(lat, rng);
      CHECK(from_text(lat, to_text(cfg)) == cfg);
      CHECK(from_json(lat, to_json(cfg)) == cfg);
    }
  }
}

TEST_CASE("malformed inputs are rejected") {
  Lattice lat(6);
  CHECK_THROWS_AS(from_text(lat, "nonsense"), Error);
  CHECK_THROWS_AS(from_text(lat, "L=8\n"), Error);
  // Adjacent occupied sites violate the hard-core constraint.
  std::string bad = "L=6\n##....\n......\n......\n......\n......\n......\n";
  CHECK_THROWS_AS(from_text(lat, bad), Error);
}

TEST_CASE("ascii render marks sites and contours") {
  Lattice lat(6);
  // The even ground state draws nothing.
  std::string blank = render_ascii(chessboard(lat, Parity::Even));
  CHECK(blank.find('#') == std::string::npos);
  CHECK(blank.find('o') == std::string::npos);
  CHECK(blank.find('+') == std::string::npos);
  // The odd ground state has occupied odds and empty evens but no contour.
  std::string odd = render_ascii(chessboard(lat, Parity::Odd));
  CHECK(odd.find('#') != std::string::npos);
  CHECK(odd.find('o') != std::string::npos);
  CHECK(odd.find('+') == std::string::npos);
  // A single R_{1,1} cluster is outlined by twelve unit segments.
  Configuration r11 = rhombus_configuration(lat, Rhombus{Site{1, 0}, 1, 1});
  std::string drawn = render_ascii(r11);
  CHECK(std::count(drawn.begin(), drawn.end(), '+') == 12);
}

TEST_CASE("ascii render round trips to a fixed point") {
  std::mt19937_64 rng(77);
  for (int L : {6, 8}) {
    Lattice lat(L);
    for (int rep = 0; rep < 10; ++rep) {
      Configuration cfg = test::random_hardcore(lat, rng);
      std::string once = render_ascii(cfg);
      Configuration parsed = parse_ascii_render(lat, once);
      CHECK(parsed == cfg);
      CHECK(render_ascii(parsed) == once);
    }
  }
}

TEST_CASE("svg render contains the cluster outline") {
  Lattice lat(6);
  Configuration r11 = rhombus_configuration(lat, Rhombus{Site{1, 0}, 1, 1});
  std::string svg = render_svg(r11);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
  // No contour for the ground states.
  CHECK(render_svg(chessboard(lat, Parity::Odd)).find("<line") ==
        std::string::npos);
}

TEST_CASE("cli exit codes") {
  // Usage errors exit 2: unknown subcommand, missing mandatory seed.
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("simulate --L 6 --beta 1.0 --steps 10") == 2);
  CHECK(run_cli("paths --kind e-to-ir --L 6 --auto-target") == 2);
  // Domain errors exit 1: a reference-path construction that does not exist.
  CHECK(run_cli("paths --kind mb-to-cr --L 6 --auto-target --seed 5") == 1);
  // Success exits 0.
  CHECK(run_cli("iso --L 8 --n 4") == 0);
  CHECK(run_cli("simulate --L 6 --beta 1.0 --seed 3 --steps 10") == 0);
  CHECK(run_cli("--help") == 0);
}

TEST_CASE("cli reports are byte-stable across runs") {
  std::string cmd = std::string(HCL_CLI_PATH) +
                    " simulate --L 6 --beta 1.5 --seed 11 --steps 500 > ";
  REQUIRE(std::system((cmd + "/tmp/hcl_rep_a.json").c_str()) == 0);
  REQUIRE(std::system((cmd + "/tmp/hcl_rep_b.json").c_str()) == 0);
  std::ifstream a("/tmp/hcl_rep_a.json"), b("/tmp/hcl_rep_b.json");
  std::string sa((std::istreambuf_iterator<char>(a)),
                 std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)),
                 std::istreambuf_iterator<char>());
  REQUIRE_FALSE(sa.empty());
  CHECK(sa == sb);
}
