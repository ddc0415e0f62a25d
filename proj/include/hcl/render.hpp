#pragma once
// Visualization of hard-core configurations following the odd-region
// convention: empty even sites are drawn as white circles, occupied odd
// sites as black circles, and each odd cluster is outlined by its contour
// on the dual lattice.
//
// ASCII format: header "L=<int>", then a 2L x 2L character grid on the
// torus. Site (v1,v2) sits at row 2*v2, column 2*v1: '#' occupied odd,
// 'o' empty even, '.' otherwise. Each unit contour segment appears as '+'
// at the midpoint of the primal edge it crosses. The drawing is parseable
// and re-rendering the parsed configuration reproduces it byte for byte.

#include <sstream>
#include <string>
#include <vector>

#include "hcl/odd_geometry.hpp"

namespace hcl {

namespace detail {

// Unit step (in {-1,0,1}^2) from site a to adjacent site b on the torus.
inline std::pair<int, int> neighbor_step(const Lattice& lat, int a, int b) {
  Site sa = lat.site(a), sb = lat.site(b);
  const int L = lat.L();
  int d1 = ((sb.v1 - sa.v1) % L + L) % L;
  int d2 = ((sb.v2 - sa.v2) % L + L) % L;
  return {d1 == 0 ? 0 : (d1 == 1 ? 1 : -1), d2 == 0 ? 0 : (d2 == 1 ? 1 : -1)};
}

}  // namespace detail

inline std::string render_ascii(const Configuration& cfg) {
  const Lattice& lat = cfg.lattice();
  const int L = lat.L(), G = 2 * L;
  std::vector<std::string> grid(G, std::string(G, '.'));
  for (int i = 0; i < lat.N(); ++i) {
    Site s = lat.site(i);
    char& cell = grid[2 * s.v2][2 * s.v1];
    if (lat.is_even(i)) {
      if (!cfg.occupied(i)) cell = 'o';
    } else if (cfg.occupied(i)) {
      cell = '#';
    }
  }
  for (const OddCluster& c : odd_region(cfg).clusters)
    for (const DualEdge& e : c.contour) {
      auto [d1, d2] = detail::neighbor_step(lat, e.first, e.second);
      Site s = lat.site(e.first);
      grid[((2 * s.v2 + d2) + G) % G][((2 * s.v1 + d1) + G) % G] = '+';
    }
  std::ostringstream os;
  os << "L=" << L << "\n";
  for (const std::string& row : grid) os << row << "\n";
  return os.str();
}

// Recovers the configuration from its ASCII rendering: even sites are
// occupied unless marked 'o', odd sites are occupied iff marked '#'.
inline Configuration parse_ascii_render(const Lattice& lat,
                                        const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("L=", 0) != 0)
    throw Error(ErrorCode::BadFormat, "expected header line L=<int>");
  int L = 0;
  try {
    L = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadFormat, "bad side length in header");
  }
  if (L != lat.L())
    throw Error(ErrorCode::BadFormat, "side length mismatch with lattice");
  std::vector<std::string> grid;
  while (std::getline(is, line)) grid.push_back(line);
  if (static_cast<int>(grid.size()) < 2 * L)
    throw Error(ErrorCode::BadFormat, "short render grid");
  Configuration cfg(lat);
  for (int i = 0; i < lat.N(); ++i) {
    Site s = lat.site(i);
    const std::string& row = grid[2 * s.v2];
    if (static_cast<int>(row.size()) < 2 * L)
      throw Error(ErrorCode::BadFormat, "short render row");
    char cell = row[2 * s.v1];
    if (lat.is_even(i))
      cfg.set(i, cell != 'o');
    else if (cell == '#')
      cfg.set(i, true);
  }
  if (!cfg.is_hardcore())
    throw Error(ErrorCode::NotHardcore, "parsed configuration is not hard-core");
  return cfg;
}

inline std::string render_svg(const Configuration& cfg) {
  const Lattice& lat = cfg.lattice();
  const int L = lat.L(), scale = 24, margin = scale;
  const int size = 2 * margin + (L - 1) * scale;
  auto px = [&](double v) { return margin + v * scale; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
     << "\">\n";
  os << "<rect width=\"" << size << "\" height=\"" << size
     << "\" fill=\"white\"/>\n";
  for (int i = 0; i < lat.N(); ++i) {
    Site s = lat.site(i);
    if (lat.is_even(i) && !cfg.occupied(i))
      os << "<circle cx=\"" << px(s.v1) << "\" cy=\"" << px(s.v2)
         << "\" r=\"" << scale / 4 << "\" fill=\"white\" stroke=\"black\"/>\n";
    else if (!lat.is_even(i) && cfg.occupied(i))
      os << "<circle cx=\"" << px(s.v1) << "\" cy=\"" << px(s.v2)
         << "\" r=\"" << scale / 4 << "\" fill=\"black\"/>\n";
  }
  // Each dual edge is a unit segment through the midpoint of the primal
  // edge it crosses, perpendicular to it. Wrapping edges are drawn once at
  // each border.
  auto segment = [&](int site, int d1, int d2) {
    Site s = lat.site(site);
    double mx = s.v1 + d1 * 0.5, my = s.v2 + d2 * 0.5;
    double p1 = d2 * 0.5, p2 = d1 * 0.5;  // perpendicular direction
    os << "<line x1=\"" << px(mx - p1) << "\" y1=\"" << px(my - p2)
       << "\" x2=\"" << px(mx + p1) << "\" y2=\"" << px(my + p2)
       << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  };
  for (const OddCluster& c : odd_region(cfg).clusters)
    for (const DualEdge& e : c.contour) {
      auto [d1, d2] = detail::neighbor_step(lat, e.first, e.second);
      segment(e.first, d1, d2);
      Site a = lat.site(e.first), b = lat.site(e.second);
      if (std::abs(a.v1 - b.v1) == L - 1 || std::abs(a.v2 - b.v2) == L - 1)
        segment(e.second, -d1, -d2);
    }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hcl
