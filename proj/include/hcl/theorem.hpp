#pragma once

// Cross-checks between the exhaustive landscape oracle and the geometric
// classifier: which labeled families touch each other below the saddle
// level, and whether the labeled configurations coincide with the
// oracle-essential saddles.

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "hcl/classifier.hpp"
#include "hcl/landscape.hpp"

namespace hcl {

inline constexpr std::size_t kSaddleClassCount = 7;  // six labels + none

inline std::size_t class_index(SaddleClass c) {
  return static_cast<std::size_t>(c);
}

// Labels for a list of landscape vertices, in order.
inline std::vector<SaddleClass> classify_vertices(
    const LandscapeGraph& g, const std::vector<std::size_t>& vertices) {
  std::vector<SaddleClass> labels(vertices.size(), SaddleClass::none);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    labels[i] = classify(g.configuration_of(vertices[i])).label;
  return labels;
}

struct ClassPair {
  SaddleClass a = SaddleClass::none;
  SaddleClass b = SaddleClass::none;
};

struct StructureReport {
  int phi = 0;
  // connected[a][b]: some component of the {H < phi} subgraph is adjacent to
  // a saddle labeled a and to a saddle labeled b, i.e. the two families can
  // be joined by a path that dips strictly below the saddle level between
  // its endpoints.  Symmetric; diagonal entries describe within-family
  // connections.
  std::array<std::array<bool, kSaddleClassCount>, kSaddleClassCount>
      connected{};
  // Direct downhill exit from a cr saddle into the component of o.
  bool cr_exits_to_o = false;
  // Expected hand-offs that were not observed, and forbidden family pairs
  // through which e can nevertheless reach o on their own.
  std::vector<ClassPair> missing_expected;
  std::vector<ClassPair> forbidden_present;

  bool consistent() const {
    return missing_expected.empty() && forbidden_present.empty() &&
           cr_exits_to_o;
  }
};

inline StructureReport verify_communication_structure(
    const ContractedGraph& c, const std::vector<SaddleClass>& labels) {
  StructureReport rep;
  rep.phi = c.phi;
  // Classes incident to each sub-level component.
  std::vector<std::array<bool, kSaddleClassCount>> comp_classes(
      c.component_count);
  for (std::size_t si = 0; si < c.saddles.size(); ++si) {
    std::size_t li = class_index(labels[si]);
    for (int comp : c.saddle_adj[si]) {
      comp_classes[comp][li] = true;
      if (labels[si] == SaddleClass::cr && comp == c.o_component)
        rep.cr_exits_to_o = true;
    }
  }
  for (int comp = 0; comp < c.component_count; ++comp)
    for (std::size_t a = 0; a < kSaddleClassCount; ++a) {
      if (!comp_classes[comp][a]) continue;
      for (std::size_t b = a; b < kSaddleClassCount; ++b)
        if (comp_classes[comp][b])
          rep.connected[a][b] = rep.connected[b][a] = true;
    }
  const ClassPair expected[] = {
      {SaddleClass::ir, SaddleClass::gr}, {SaddleClass::gr, SaddleClass::cr},
      {SaddleClass::sb, SaddleClass::ib}, {SaddleClass::ib, SaddleClass::gr},
      {SaddleClass::ib, SaddleClass::mb}, {SaddleClass::sb, SaddleClass::mb},
      {SaddleClass::mb, SaddleClass::cr}};
  const ClassPair forbidden[] = {
      {SaddleClass::ir, SaddleClass::ib}, {SaddleClass::ib, SaddleClass::cr},
      {SaddleClass::ir, SaddleClass::mb}, {SaddleClass::gr, SaddleClass::mb}};
  for (const ClassPair& p : expected)
    if (!rep.connected[class_index(p.a)][class_index(p.b)])
      rep.missing_expected.push_back(p);
  // A forbidden pair is violated when e reaches o through saddles drawn
  // from those two families alone; sharing a sub-level pocket somewhere off
  // the crossing route is harmless.
  for (const ClassPair& p : forbidden) {
    std::vector<char> allowed(c.saddles.size(), 0);
    for (std::size_t si = 0; si < c.saddles.size(); ++si)
      if (labels[si] == p.a || labels[si] == p.b) allowed[si] = 1;
    if (detail::contracted_reachable(c, allowed)) rep.forbidden_present.push_back(p);
  }
  return rep;
}

inline StructureReport verify_communication_structure(
    const LandscapeGraph& g) {
  ContractedGraph c = contract(g);
  return verify_communication_structure(c, classify_vertices(g, c.saddles));
}

struct TheoremReport {
  int phi = 0;
  // Joint tallies over the full saddle set, split by oracle verdict
  // (essential / unessential / undecided) and by classifier outcome
  // (labeled / unlabeled).
  std::size_t essential_labeled = 0;
  std::size_t essential_unlabeled = 0;
  std::size_t unessential_labeled = 0;
  std::size_t unessential_unlabeled = 0;
  std::size_t unknown_labeled = 0;
  std::size_t unknown_unlabeled = 0;
  std::map<SaddleClass, std::size_t> class_counts;
  // Witnesses (landscape vertex ids) for each mismatch direction.
  std::vector<std::size_t> labeled_not_essential;
  std::vector<std::size_t> essential_not_labeled;

  std::size_t labeled_total() const {
    return essential_labeled + unessential_labeled + unknown_labeled;
  }
  // Every labeled saddle is oracle-essential (no false positives among
  // decided saddles).
  bool labels_all_essential() const {
    return unessential_labeled == 0 && unknown_labeled == 0;
  }
  // Full set equality between the labeled set and the essential set.
  bool exact_equality() const {
    return labeled_not_essential.empty() && essential_not_labeled.empty();
  }
};

inline TheoremReport verify_theorem(
    const LandscapeGraph& g, const GateReport& oracle,
    const std::vector<SaddleClass>* labels_in = nullptr) {
  TheoremReport rep;
  rep.phi = oracle.phi;
  std::vector<SaddleClass> labels =
      labels_in ? *labels_in : classify_vertices(g, oracle.saddles);
  enum Verdict : char { kUnknown = 0, kEssential, kUnessential };
  std::map<std::size_t, Verdict> verdict;
  for (std::size_t v : oracle.essential) verdict[v] = kEssential;
  for (std::size_t v : oracle.unessential) verdict[v] = kUnessential;
  for (std::size_t v : oracle.unknown) verdict[v] = kUnknown;
  for (std::size_t si = 0; si < oracle.saddles.size(); ++si) {
    std::size_t v = oracle.saddles[si];
    bool labeled = labels[si] != SaddleClass::none;
    rep.class_counts[labels[si]]++;
    switch (verdict[v]) {
      case kEssential:
        (labeled ? rep.essential_labeled : rep.essential_unlabeled)++;
        if (!labeled) rep.essential_not_labeled.push_back(v);
        break;
      case kUnessential:
        (labeled ? rep.unessential_labeled : rep.unessential_unlabeled)++;
        if (labeled) rep.labeled_not_essential.push_back(v);
        break;
      case kUnknown:
        (labeled ? rep.unknown_labeled : rep.unknown_unlabeled)++;
        break;
    }
  }
  return rep;
}

}  // namespace hcl
