#include "wwlab/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wwlab/barrier.hpp"
#include "wwlab/config.hpp"
#include "wwlab/dynamics.hpp"
#include "wwlab/operators.hpp"

namespace wwlab {

namespace {

using nlohmann::json;

ModelId parse_model(const std::string& name) {
  if (name == "toric2d") return ModelId::Toric2d;
  if (name == "toric3d") return ModelId::Toric3d;
  if (name == "3d3f") return ModelId::ThreeFermion;
  if (name == "parabulk") return ModelId::ParamagnetBulk;
  throw std::invalid_argument("unknown model: " + name);
}

std::array<int, 3> parse_dims(const std::string& s, const std::string& model) {
  std::array<int, 3> dims{0, 0, 0};
  std::stringstream ss(s);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',') && i < 3) dims[i++] = std::stoi(tok);
  if (model == "toric2d") {
    if (i < 2) throw std::invalid_argument("toric2d needs --dims a,b");
    if (i == 2) dims[2] = 1;
  } else if (i != 3) {
    throw std::invalid_argument("3d models need --dims a,b,c");
  }
  return dims;
}

SymmetrySpec make_spec(const StabilizerCode& code, const ExperimentConfig& cfg) {
  SymmetrySpec::Family fam;
  if (cfg.family == "vertex") fam = SymmetrySpec::Family::VertexOneForm;
  else if (cfg.family == "paramagnet-all") fam = SymmetrySpec::Family::ParamagnetAll;
  else if (cfg.family == "all-stabilizers") fam = SymmetrySpec::Family::AllStabilizers;
  else if (cfg.family == "auto")
    fam = code.model == ModelId::ParamagnetBulk ? SymmetrySpec::Family::ParamagnetAll
                                                : SymmetrySpec::Family::VertexOneForm;
  else throw std::invalid_argument("unknown symmetry family: " + cfg.family);
  return SymmetrySpec(code, fam, cfg.width);
}

std::string hash_hex(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json base_artifact(const ExperimentConfig& cfg, const StabilizerCode& code) {
  json j;
  j["config"] = cfg.to_json();
  j["seed"] = cfg.seed;
  j["fixture_hash"] = hash_hex(code.fixture_hash());
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const ExperimentConfig& cfg, const std::string& name, const json& j) {
  std::string path = cfg.resolved_out_dir() + "/" + name;
  write_text(path, j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
}

Curve make_curve(const CellComplex& cx, const ExperimentConfig& cfg) {
  int axis = (cfg.path == "vert") ? 2 : 0;
  int len = cfg.length > 0 ? cfg.length : cx.dims()[axis];
  std::array<int, 3> base{0, cfg.layer, 0};
  if (axis == 2) base[0] = cfg.offset;
  else base[2] = cfg.offset;
  return Curve::straight(cx, axis, base, len);
}

int cmd_build(const ExperimentConfig& cfg) {
  auto code = build_model(parse_model(cfg.model), cfg.dims);
  json j = base_artifact(cfg, code);
  j["complex"] = json::parse(code.cx.describe_json(code.n_qubits));
  j["n_generators"] = code.gens.size();
  j["n_symmetry_generators"] = code.sym_gens.size();
  if (cfg.dump) {
    json gens = json::array();
    for (const auto& g : code.gens) gens.push_back(g.op.serialize());
    j["generators"] = std::move(gens);
  }
  emit(cfg, "build.json", j);
  return 0;
}

int cmd_verify(const ExperimentConfig& cfg) {
  auto code = build_model(parse_model(cfg.model), cfg.dims);
  auto rep = verify_code(code);
  json j = base_artifact(cfg, code);
  j["model"] = rep.model;
  j["dims"] = rep.dims;
  j["n_qubits"] = rep.n_qubits;
  j["n_generators"] = rep.n_generators;
  j["n_symmetry_generators"] = rep.n_symmetry_generators;
  j["rank"] = rep.rank;
  j["k"] = rep.k;
  if (rep.k_per_boundary >= 0) j["k_per_boundary"] = rep.k_per_boundary;
  j["all_commute"] = rep.all_commute;
  j["logicals_commute"] = rep.logicals_commute_with_stabilizers;
  emit(cfg, "verify.json", j);
  return rep.all_commute ? 0 : 1;
}

int cmd_ops(const ExperimentConfig& cfg) {
  auto code = build_model(parse_model(cfg.model), cfg.dims);
  Curve c = make_curve(code.cx, cfg);
  PauliOperator op(code.n_qubits);
  if (cfg.kind == "Se") op = decorated_string(code, c, StringSpecies::E);
  else if (cfg.kind == "Sm") op = decorated_string(code, c, StringSpecies::M);
  else if (cfg.kind == "Seps") op = decorated_string(code, c, StringSpecies::Eps);
  else if (cfg.kind == "bare-e") op = bare_string(code, c, StringSpecies::E);
  else if (cfg.kind == "bare-m") op = bare_string(code, c, StringSpecies::M);
  else if (cfg.kind == "boundary-e") op = boundary_string(code, c, StringSpecies::E);
  else if (cfg.kind == "boundary-m") op = boundary_string(code, c, StringSpecies::M);
  else if (cfg.kind == "membrane-sigma" || cfg.kind == "membrane-tau") {
    int axis = (cfg.path == "vert") ? 0 : 2;
    op = membrane(code, DualMembrane::sheet(code.cx, axis, cfg.offset),
                  cfg.kind == "membrane-sigma" ? Species::Sigma : Species::Tau);
  } else {
    throw std::invalid_argument("unknown operator kind: " + cfg.kind);
  }

  auto rep = syndrome(code, op);
  json j = base_artifact(cfg, code);
  j["operator"] = op.serialize();
  j["weight"] = op.weight();
  j["energy"] = rep.energy;
  j["violated"] = rep.violated;
  j["point_excitations"] = rep.point_excitations.size();
  json flux = json::array();
  for (const auto& l : rep.flux) {
    flux.push_back({{"species", l.species == Species::Sigma ? "sigma" : "tau"},
                    {"faces", l.faces.size()}});
  }
  j["flux_components"] = std::move(flux);
  j["para_excitations"] = rep.para_excitations.size();
  emit(cfg, "ops.json", j);
  return 0;
}

std::string path_csv(const DecompositionPath& p) {
  std::ostringstream os;
  os << "step,energy,symmetric\n";
  for (std::size_t i = 0; i < p.energies.size(); ++i)
    os << i << "," << p.energies[i] << "," << (p.symmetric[i] ? 1 : 0) << "\n";
  return os.str();
}

int cmd_barrier(const ExperimentConfig& cfg) {
  auto code = build_model(parse_model(cfg.model), cfg.dims);
  auto spec = make_spec(code, cfg);

  DecompositionPath path;
  static const std::map<std::string, BoundaryLogical> kBoundary = {
      {"Se-vert", BoundaryLogical::SeVert},
      {"Se-horiz", BoundaryLogical::SeHoriz},
      {"Sm-vert", BoundaryLogical::SmVert},
      {"Sm-horiz", BoundaryLogical::SmHoriz}};
  static const std::map<std::string, PairedLogical> kPaired = {
      {"X1X3", PairedLogical::X1X3},
      {"Z1Z3", PairedLogical::Z1Z3},
      {"X2X4", PairedLogical::X2X4},
      {"Z2Z4", PairedLogical::Z2Z4}};

  if (kBoundary.count(cfg.logical)) {
    auto which = kBoundary.at(cfg.logical);
    if (cfg.variant == "best") {
      auto a = canonical_decomposition(code, spec, which, PathVariant::OpenInBulk, cfg.radius);
      auto b = canonical_decomposition(code, spec, which, PathVariant::GrowVertical, cfg.radius);
      path = (a.peak_energy() <= b.peak_energy()) ? std::move(a) : std::move(b);
    } else {
      auto v = (cfg.variant == "vertical") ? PathVariant::GrowVertical : PathVariant::OpenInBulk;
      path = canonical_decomposition(code, spec, which, v, cfg.radius);
    }
  } else if (kPaired.count(cfg.logical)) {
    path = paired_decomposition(code, spec, kPaired.at(cfg.logical));
  } else {
    throw std::invalid_argument("unknown logical label: " + cfg.logical);
  }

  json j = base_artifact(cfg, code);
  j["steps"] = path.steps.size();
  j["peak_energy"] = path.peak_energy();
  j["per_step_energies"] = path.energies;
  j["symmetric"] = path.all_symmetric();
  emit(cfg, "barrier.json", j);
  write_text(cfg.resolved_out_dir() + "/barrier_profile.csv",
             "# " + cfg.to_json().dump() + "\n" + path_csv(path));
  return 0;
}

int cmd_sweep(const ExperimentConfig& cfg) {
  auto code = build_model(parse_model(cfg.model), cfg.dims);
  auto which = cfg.logical == "Se-horiz"  ? BoundaryLogical::SeHoriz
               : cfg.logical == "Sm-vert" ? BoundaryLogical::SmVert
               : cfg.logical == "Sm-horiz" ? BoundaryLogical::SmHoriz
                                           : BoundaryLogical::SeVert;
  // rows are independent; compute them concurrently, merge in grid order
  std::vector<std::future<ScalingRow>> futures;
  for (int w : cfg.widths)
    futures.push_back(std::async(std::launch::async, [&code, which, w, &cfg] {
      return verify_scaling(code, {w}, which, cfg.radius).front();
    }));
  std::vector<ScalingRow> rows;
  for (auto& f : futures) rows.push_back(f.get());

  json j = base_artifact(cfg, code);
  json table = json::array();
  std::vector<int> xs;
  std::vector<std::size_t> ys_open;
  std::ostringstream csv;
  csv << "# " << cfg.to_json().dump() << "\n";
  csv << "W,open_in_bulk,grow_vertical,best\n";
  for (const auto& r : rows) {
    table.push_back({{"W", r.width},
                     {"open_in_bulk", r.open_in_bulk},
                     {"grow_vertical", r.grow_vertical},
                     {"best", r.best}});
    xs.push_back(r.width);
    ys_open.push_back(r.open_in_bulk);
    csv << r.width << "," << r.open_in_bulk << "," << r.grow_vertical << "," << r.best << "\n";
  }
  j["rows"] = std::move(table);
  // the W-governed regime is the open-in-bulk variant; the vertical variant
  // caps the min at ~L once W passes the crossover
  auto fit = fit_affine(xs, ys_open);
  j["affine_fit_open"] = {{"exact", fit.exact}, {"intercept", fit.intercept}, {"slope", fit.slope}};
  emit(cfg, "sweep.json", j);
  write_text(cfg.resolved_out_dir() + "/sweep.csv", csv.str());
  return 0;
}

int cmd_simulate(const ExperimentConfig& cfg) {
  auto code = build_model(parse_model(cfg.model), cfg.dims);
  auto spec = make_spec(code, cfg);

  MemoryRunConfig mc;
  mc.temperature = cfg.temperature;
  mc.max_steps = cfg.sweeps * code.n_qubits;
  mc.checkpoint_interval = cfg.checkpoint_sweeps * code.n_qubits;
  mc.trials = cfg.trials;
  mc.seed_base = cfg.seed;
  mc.radius = cfg.radius;
  if (cfg.track == "right") {
    bool two_sided = code.model == ModelId::ThreeFermion || code.model == ModelId::ParamagnetBulk;
    if (two_sided)
      mc.tracked = {0, 1, 2, 3};  // Z1,X1,Z2,X2 live on the right boundary
  } else if (cfg.track != "all") {
    throw std::invalid_argument("--track must be 'right' or 'all'");
  }
  auto stats = measure_memory_time(code, spec, mc);

  std::ostringstream csv;
  csv << "# " << cfg.to_json().dump() << "\n";
  csv << "seed,failure_step,failure_sweep,zero_checkpoints,checkpoints,max_energy,symmetry_clean\n";
  bool clean = true;
  for (const auto& t : stats.trials) {
    csv << t.seed << ",";
    if (t.failed)
      csv << t.failure_step << "," << (t.failure_step / code.n_qubits);
    else
      csv << "censored,censored";
    csv << "," << t.zero_checkpoints << "," << t.checkpoints << "," << t.max_energy << ","
        << (t.symmetry_clean ? 1 : 0) << "\n";
    clean = clean && t.symmetry_clean;
  }
  write_text(cfg.resolved_out_dir() + "/simulate_trials.csv", csv.str());

  json j = base_artifact(cfg, code);
  j["trials"] = stats.trials.size();
  j["censored"] = stats.censored;
  j["median_failure_steps"] = stats.median_failure_steps;
  j["median_failure_sweeps"] = stats.median_failure_steps / double(code.n_qubits);
  j["mean_failure_steps"] = stats.mean_failure_steps;
  j["symmetry_clean"] = clean;
  emit(cfg, "simulate.json", j);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"wwlab: stabilizer-code laboratory for 1-form symmetry protected memories"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string dims_str = "4,4,4";
  std::string width_str = "0";
  std::string widths_str = "0,2,4";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "toric2d | toric3d | 3d3f | parabulk")
        ->capture_default_str();
    sub->add_option("--dims", dims_str, "lattice cells per axis, e.g. 8,8,8 (L_x,L_y,L_z; y open)")
        ->capture_default_str();
    sub->add_option("--out", cfg.out_dir, "output directory (default $WWLAB_OUT or .)");
    sub->add_option("--seed", cfg.seed, "base RNG seed, echoed into artifacts")
        ->capture_default_str();
  };

  auto* build = app.add_subcommand("build", "construct a model and describe it");
  add_common(build);
  build->add_flag("--dump", cfg.dump, "include serialized generators");

  auto* verify = app.add_subcommand("verify", "commutation, rank and logical-count report");
  add_common(verify);

  auto* ops = app.add_subcommand("ops", "build a named operator and report its syndrome");
  add_common(ops);
  ops->add_option("--kind", cfg.kind,
                  "Se | Sm | Seps | bare-e | bare-m | boundary-e | boundary-m | "
                  "membrane-sigma | membrane-tau")
      ->capture_default_str();
  ops->add_option("--path", cfg.path, "vert (wraps z) | horiz (wraps x)")->capture_default_str();
  ops->add_option("--y", cfg.layer, "y layer of the curve")->capture_default_str();
  ops->add_option("--at", cfg.offset, "transverse coordinate / membrane level")
      ->capture_default_str();
  ops->add_option("--len", cfg.length, "edges in the curve; 0 wraps")->capture_default_str();

  auto* barrier = app.add_subcommand("barrier", "energy profile of a symmetric decomposition");
  add_common(barrier);
  barrier->add_option("--W", width_str, "enforcement width in layers, or 'full'")
      ->capture_default_str();
  barrier->add_option("--family", cfg.family, "vertex | paramagnet-all | all-stabilizers | auto")
      ->capture_default_str();
  barrier->add_option("--logical", cfg.logical,
                      "Se-vert | Se-horiz | Sm-vert | Sm-horiz | X1X3 | Z1Z3 | X2X4 | Z2Z4")
      ->capture_default_str();
  barrier->add_option("--variant", cfg.variant, "open | vertical | best")->capture_default_str();
  barrier->add_option("--radius", cfg.radius, "step locality radius")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "barrier scaling over an enforcement-width grid");
  add_common(sweep);
  sweep->add_option("--W", widths_str, "comma list of widths")->capture_default_str();
  sweep->add_option("--logical", cfg.logical, "boundary string label")->capture_default_str();
  sweep->add_option("--radius", cfg.radius, "step locality radius")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "thermal memory-time trials");
  add_common(simulate);
  simulate->add_option("--W", width_str, "enforcement width in layers, or 'full'")
      ->capture_default_str();
  simulate->add_option("--family", cfg.family, "vertex | paramagnet-all | all-stabilizers | auto")
      ->capture_default_str();
  simulate->add_option("--T", cfg.temperature, "bath temperature (energy units)")
      ->capture_default_str();
  simulate->add_option("--steps", cfg.sweeps, "budget in sweeps (n_qubits proposals each)")
      ->capture_default_str();
  simulate->add_option("--checkpoint", cfg.checkpoint_sweeps, "checkpoint cadence in sweeps")
      ->capture_default_str();
  simulate->add_option("--trials", cfg.trials, "independent trials")->capture_default_str();
  simulate->add_option("--radius", cfg.radius, "move basis radius")->capture_default_str();
  simulate->add_option("--track", cfg.track, "right: the protected boundary's logicals; all")
      ->capture_default_str();

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  storage.insert(storage.begin(), "wwlab");
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.dims = parse_dims(dims_str, cfg.model);
    if (width_str == "full") cfg.width = -1;
    else cfg.width = std::stoi(width_str);
    if (app.got_subcommand(sweep)) {
      cfg.widths.clear();
      std::stringstream ss(widths_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.widths.push_back(std::stoi(tok));
    }

    if (app.got_subcommand(build)) { cfg.subcommand = "build"; return cmd_build(cfg); }
    if (app.got_subcommand(verify)) { cfg.subcommand = "verify"; return cmd_verify(cfg); }
    if (app.got_subcommand(ops)) { cfg.subcommand = "ops"; return cmd_ops(cfg); }
    if (app.got_subcommand(barrier)) { cfg.subcommand = "barrier"; return cmd_barrier(cfg); }
    if (app.got_subcommand(sweep)) { cfg.subcommand = "sweep"; return cmd_sweep(cfg); }
    if (app.got_subcommand(simulate)) { cfg.subcommand = "simulate"; return cmd_simulate(cfg); }
    return 2;
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    return msg.find("unenforced layer") != std::string::npos ? 4 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wwlab
