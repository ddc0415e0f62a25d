// Unified command-line entry point: simulation, landscape reports,
// classification, reference paths, isoperimetry, rendering, and format
// export. All machine-readable output is deterministic given the flags.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcl/dynamics.hpp"
#include "hcl/io.hpp"
#include "hcl/landscape.hpp"
#include "hcl/reference_paths.hpp"
#include "hcl/render.hpp"
#include "hcl/theorem.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in)
    throw hcl::Error(hcl::ErrorCode::BadFormat, "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out)
    throw hcl::Error(hcl::ErrorCode::BadFormat,
                     "cannot write file: " + out_path);
  out << text;
}

// Auto-detecting parse: JSON object or plain-text grid.
hcl::Configuration parse_config(const hcl::Lattice& lat,
                                const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? hcl::from_json(lat, text) : hcl::from_text(lat, text);
  }
  throw hcl::Error(hcl::ErrorCode::BadFormat, "empty configuration input");
}

int side_length_of(const std::string& text) {
  if (text.find('{') != std::string::npos &&
      text.find("L=") == std::string::npos)
    return json::parse(text).at("L").get<int>();
  auto pos = text.find("L=");
  if (pos == std::string::npos)
    throw hcl::Error(hcl::ErrorCode::BadFormat, "missing side length header");
  return std::stoi(text.substr(pos + 2));
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

int thread_cap() {
  const char* env = std::getenv("HCL_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v > 0 ? v : 1;
}

json provenance(const std::string& subcommand,
                const std::vector<std::pair<std::string, json>>& flags) {
  json p;
  p["subcommand"] = subcommand;
  for (const auto& [k, v] : flags) p[k] = v;
  p["threads"] = thread_cap();
  return p;
}

json witness_json(const hcl::SaddleLabel& lab) {
  json w;
  w["label"] = hcl::to_string(lab.label);
  for (const hcl::ClassEvaluation& ev : lab.evaluations) {
    if (!ev.member) continue;
    json e;
    e["class"] = hcl::to_string(ev.cls);
    json clauses = json::array();
    for (const hcl::ClauseCheck& c : ev.clauses) {
      json cl;
      cl["name"] = c.name;
      cl["ok"] = c.ok;
      if (!c.detail.empty()) cl["detail"] = c.detail;
      clauses.push_back(cl);
    }
    e["clauses"] = clauses;
    e["body"] = {{"ref", {ev.body.reference.v1, ev.body.reference.v2}},
                 {"l1", ev.body.l1},
                 {"l2", ev.body.l2}};
    e["barLength"] = ev.bar_length;
    e["bridgeM"] = ev.bridge_m;
    e["extraParticles"] = ev.extra_particles;
    e["vertical"] = ev.vertical;
    e["degenerateSites"] = ev.degenerate_sites;
    e["antiknob"] = ev.antiknob;
    w["evaluation"] = e;
    break;
  }
  return w;
}

std::map<std::string, hcl::ReferencePathKind> kind_names() {
  std::map<std::string, hcl::ReferencePathKind> m;
  for (auto k : {hcl::ReferencePathKind::E_TO_IR, hcl::ReferencePathKind::E_TO_SB,
                 hcl::ReferencePathKind::SB_TO_IB, hcl::ReferencePathKind::IR_TO_GR,
                 hcl::ReferencePathKind::IB_TO_GR, hcl::ReferencePathKind::SB_TO_MB,
                 hcl::ReferencePathKind::IB_TO_MB, hcl::ReferencePathKind::GR_TO_CR,
                 hcl::ReferencePathKind::MB_TO_CR, hcl::ReferencePathKind::CR_TO_O,
                 hcl::ReferencePathKind::MB_TO_O})
    m[hcl::to_string(k)] = k;
  return m;
}

// ---- subcommand implementations ----

int run_simulate(int L, double beta, std::uint64_t seed, std::uint64_t steps,
                 const std::string& start_name, int trials, bool hit_odd,
                 std::uint64_t step_cap) {
  hcl::Lattice lat(L);
  hcl::Configuration start = chessboard(
      lat, start_name == "o" ? hcl::Parity::Odd : hcl::Parity::Even);
  json out;
  out["provenance"] = provenance(
      "simulate", {{"L", L},
                   {"beta", beta},
                   {"seed", seed},
                   {"steps", steps},
                   {"start", start_name},
                   {"trials", trials},
                   {"hitOdd", hit_odd}});
  hcl::DynamicsParams params{beta, seed, step_cap, false};
  if (hit_odd) {
    hcl::Configuration target = chessboard(lat, hcl::Parity::Odd);
    json list = json::array();
    double sum = 0;
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
      hcl::CounterRng rng(seed, static_cast<std::uint64_t>(t));
      hcl::HittingResult res = hcl::hitting_time(
          start, [&](const hcl::Configuration& c) { return c == target; },
          params, rng);
      list.push_back({{"trial", t},
                      {"hit", res.hit},
                      {"steps", res.steps}});
      if (res.hit) {
        sum += static_cast<double>(res.steps);
        ++hits;
      }
    }
    out["trials"] = list;
    out["hits"] = hits;
    if (hits > 0) out["meanHittingSteps"] = sum / hits;
  } else {
    hcl::Trajectory traj = hcl::simulate(start, params, steps, true);
    hcl::Configuration last = traj.replay();
    out["steps"] = traj.steps;
    out["finalEnergy"] = hcl::energy(last);
    out["finalEnergyAboveGround"] = hcl::energy_stats(last).dH;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_landscape(int L, std::optional<int> cap_flag, const std::string& report,
                  std::size_t budget) {
  hcl::Lattice lat(L);
  const int he = -(lat.N() / 2);
  const int cap = cap_flag.value_or(hcl::default_cap(lat));
  hcl::LandscapeGraph g = hcl::explore(lat, cap);
  json out;
  out["provenance"] = provenance(
      "landscape",
      {{"L", L}, {"cap", cap}, {"report", report}, {"budget", budget}});
  out["vertices"] = g.size();
  int phi = hcl::communication_energy(g, g.e_index, g.o_index);
  out["phi"] = phi;
  out["phiMinusHe"] = phi - he;
  if (report == "phi") {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  hcl::ContractedGraph c = hcl::contract(g);
  out["levelSetCount"] = c.saddles.size();
  std::vector<hcl::SaddleClass> labels = hcl::classify_vertices(g, c.saddles);
  json tallies;
  {
    std::map<std::string, std::size_t> t;
    for (hcl::SaddleClass cl : labels) t[hcl::to_string(cl)]++;
    for (const auto& [k, v] : t) tallies[k] = v;
  }
  out["classTallies"] = tallies;
  if (report == "levelset") {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (report == "gates") {
    std::vector<std::size_t> labeled;
    for (std::size_t i = 0; i < c.saddles.size(); ++i)
      if (labels[i] != hcl::SaddleClass::none) labeled.push_back(c.saddles[i]);
    out["gateFullLevelSet"] = hcl::is_gate(g, c.saddles);
    out["gateLabeledFamilies"] = hcl::is_gate(g, labeled);
    out["labeledCount"] = labeled.size();
    hcl::StructureReport sr = hcl::verify_communication_structure(c, labels);
    out["structureConsistent"] = sr.consistent();
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (report == "essential") {
    hcl::GateReport oracle = hcl::essential_saddles(g, budget);
    out["essential"] = oracle.essential.size();
    out["unessential"] = oracle.unessential.size();
    out["unknown"] = oracle.unknown.size();
    out["budgetExhausted"] = oracle.budget_exhausted;
    hcl::TheoremReport tr = hcl::verify_theorem(g, oracle, &labels);
    out["labeledTotal"] = tr.labeled_total();
    out["essentialLabeled"] = tr.essential_labeled;
    out["essentialUnlabeled"] = tr.essential_unlabeled;
    out["unessentialLabeled"] = tr.unessential_labeled;
    out["decidedMismatches"] =
        tr.labeled_not_essential.size() + tr.essential_not_labeled.size();
    out["labelsAllEssential"] = tr.labels_all_essential();
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  throw CLI::ValidationError("--report must be phi|levelset|gates|essential");
}

int run_classify(const std::vector<std::string>& files) {
  for (const std::string& path : files) {
    std::string text = read_file(path);
    hcl::Lattice lat(side_length_of(text));
    hcl::Configuration cfg = parse_config(lat, text);
    hcl::SaddleLabel lab = hcl::classify(cfg);
    json line;
    line["configHash"] = fnv1a_hex(hcl::to_text(cfg));
    line["label"] = hcl::to_string(lab.label);
    line["witness"] = witness_json(lab);
    std::cout << line.dump() << "\n";
  }
  return 0;
}

int run_paths(const std::string& kind_name, int L,
              const std::string& target_file, bool auto_target,
              std::optional<std::uint64_t> seed, const std::string& emit) {
  auto kinds = kind_names();
  auto it = kinds.find(kind_name);
  if (it == kinds.end())
    throw CLI::ValidationError("unknown --kind " + kind_name);
  hcl::ReferencePathKind kind = it->second;
  hcl::Lattice lat(L);
  hcl::Configuration target(lat);
  if (auto_target) {
    hcl::CounterRng rng(*seed, static_cast<std::uint64_t>(kind));
    target = hcl::sample_family_target(
        lat, hcl::reference_target_class(kind), rng);
  } else {
    target = parse_config(lat, read_file(target_file));
  }
  hcl::Path path = hcl::build_reference_path(kind, target);
  if (emit == "moves") {
    for (std::size_t t = 1; t < path.configs.size(); ++t) {
      for (int i = 0; i < lat.N(); ++i)
        if (path.configs[t - 1].occupied(i) != path.configs[t].occupied(i))
          std::cout << (path.configs[t].occupied(i) ? "add " : "remove ") << i
                    << "\n";
    }
    return 0;
  }
  for (std::size_t t = 0; t < path.configs.size(); ++t) {
    const hcl::Configuration& cfg = path.configs[t];
    hcl::EnergyStats st = hcl::energy_stats(cfg);
    json line;
    line["step"] = t;
    line["energy"] = hcl::energy(cfg);
    line["manifold"] = st.m;
    json occ = json::array();
    for (int i = 0; i < lat.N(); ++i)
      if (cfg.occupied(i)) occ.push_back(i);
    line["occupied"] = occ;
    std::cout << line.dump() << "\n";
  }
  return 0;
}

int run_iso(int L, std::optional<int> area, std::optional<int> real_area_n) {
  hcl::Lattice lat(L);
  json out;
  out["provenance"] = provenance(
      "iso", {{"L", L},
              {"n", area ? json(*area) : json()},
              {"realArea", real_area_n ? json(*real_area_n) : json()}});
  if (area) {
    hcl::ShapeSpec spec = hcl::minimal_perimeter_shape(*area, L);
    out["shape"] = spec.describe();
    out["perimeter"] = spec.perimeter;
  }
  if (real_area_n) {
    hcl::Rhombus r = hcl::real_area_minimizer(lat, *real_area_n);
    out["minimizer"] = {{"l1", r.l1}, {"l2", r.l2}};
    out["perimeter"] = 4 * (r.l1 + r.l2 + 1);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_render(const std::string& in, const std::string& format,
               const std::string& out_path) {
  std::string text = read_file(in);
  hcl::Lattice lat(side_length_of(text));
  hcl::Configuration cfg = parse_config(lat, text);
  write_output(out_path,
               format == "svg" ? hcl::render_svg(cfg) : hcl::render_ascii(cfg));
  return 0;
}

int run_export(const std::string& in, const std::string& to,
               const std::string& out_path) {
  std::string text = read_file(in);
  hcl::Lattice lat(side_length_of(text));
  hcl::Configuration cfg = parse_config(lat, text);
  write_output(out_path,
               to == "json" ? hcl::to_json(cfg) + "\n" : hcl::to_text(cfg));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hard-core lattice gas: dynamics, landscape, and geometry"};
  app.require_subcommand(1);
  app.set_config("--config");

  // simulate
  auto* sim = app.add_subcommand("simulate", "run Metropolis dynamics");
  int sim_L = 6;
  double sim_beta = 1.0;
  std::uint64_t sim_seed = 0, sim_steps = 1000, sim_cap = 0;
  std::string sim_start = "e";
  int sim_trials = 1;
  bool sim_hit = false;
  sim->add_option("--L", sim_L, "even side length")->required();
  sim->add_option("--beta", sim_beta, "inverse temperature")->required();
  sim->add_option("--seed", sim_seed, "RNG seed")->required();
  sim->add_option("--steps", sim_steps, "kernel steps per trajectory");
  sim->add_option("--start", sim_start)->check(CLI::IsMember({"e", "o"}));
  sim->add_option("--trials", sim_trials, "independent trials");
  sim->add_flag("--hit-odd", sim_hit, "measure hitting times of o");
  sim->add_option("--step-cap", sim_cap, "abort threshold for hitting runs");

  // landscape
  auto* lsc = app.add_subcommand("landscape", "exhaustive landscape reports");
  int lsc_L = 6;
  std::optional<int> lsc_cap;
  std::string lsc_report = "phi";
  std::size_t lsc_budget = 2'000'000;
  lsc->add_option("--L", lsc_L)->required();
  lsc->add_option("--cap", lsc_cap, "energy cap (default H(e)+L+1)");
  lsc->add_option("--report", lsc_report)
      ->check(CLI::IsMember({"phi", "levelset", "gates", "essential"}));
  lsc->add_option("--budget", lsc_budget, "essentiality enumeration budget");

  // classify
  auto* cls = app.add_subcommand("classify", "label configurations (JSONL)");
  std::vector<std::string> cls_files;
  cls->add_option("files", cls_files, "configuration files ('-' = stdin)")
      ->required();

  // paths
  auto* pth = app.add_subcommand("paths", "construct reference paths");
  std::string pth_kind, pth_target, pth_emit = "jsonl";
  int pth_L = 6;
  bool pth_auto = false;
  std::optional<std::uint64_t> pth_seed;
  pth->add_option("--kind", pth_kind)->required();
  pth->add_option("--L", pth_L)->required();
  pth->add_option("--target-file", pth_target);
  pth->add_flag("--auto-target", pth_auto, "sample a random family member");
  pth->add_option("--seed", pth_seed, "RNG seed (required with --auto-target)");
  pth->add_option("--emit", pth_emit)->check(CLI::IsMember({"jsonl", "moves"}));

  // iso
  auto* iso = app.add_subcommand("iso", "isoperimetric shapes");
  int iso_L = 8;
  std::optional<int> iso_n, iso_real;
  iso->add_option("--L", iso_L)->required();
  iso->add_option("--n", iso_n, "cluster area");
  iso->add_option("--real-area", iso_real, "real area of the minimizer");

  // render
  auto* ren = app.add_subcommand("render", "draw a configuration");
  std::string ren_in, ren_format = "ascii", ren_out;
  ren->add_option("--in", ren_in)->required();
  ren->add_option("--format", ren_format)
      ->check(CLI::IsMember({"ascii", "svg"}));
  ren->add_option("--out", ren_out);

  // export
  auto* exp = app.add_subcommand("export", "convert configuration formats");
  std::string exp_in, exp_to = "json", exp_out;
  exp->add_option("--in", exp_in)->required();
  exp->add_option("--to", exp_to)->check(CLI::IsMember({"text", "json"}));
  exp->add_option("--out", exp_out);

  try {
    app.parse(argc, argv);
    if (pth->parsed()) {
      if (pth_auto && !pth_seed) {
        std::cerr << "paths --auto-target requires --seed\n";
        return 2;
      }
      if (!pth_auto && pth_target.empty()) {
        std::cerr << "paths requires --target-file or --auto-target\n";
        return 2;
      }
    }
    if (sim->parsed())
      return run_simulate(sim_L, sim_beta, sim_seed, sim_steps, sim_start,
                          sim_trials, sim_hit, sim_cap);
    if (lsc->parsed()) return run_landscape(lsc_L, lsc_cap, lsc_report, lsc_budget);
    if (cls->parsed()) return run_classify(cls_files);
    if (pth->parsed())
      return run_paths(pth_kind, pth_L, pth_target, pth_auto, pth_seed, pth_emit);
    if (iso->parsed()) return run_iso(iso_L, iso_n, iso_real);
    if (ren->parsed()) return run_render(ren_in, ren_format, ren_out);
    if (exp->parsed()) return run_export(exp_in, exp_to, exp_out);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hcl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
