#include "wwlab/config.hpp"

#include <cstdlib>

namespace wwlab {

nlohmann::json width_to_json(int width) {
  if (width < 0) return "full";
  return width;
}

int width_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "full") return -1;
    return std::stoi(j.get<std::string>());
  }
  return j.get<int>();
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["subcommand"] = subcommand;
  j["model"] = model;
  j["dims"] = dims;
  j["W"] = width_to_json(width);
  j["family"] = family;
  j["T"] = temperature;
  j["sweeps"] = sweeps;
  j["checkpoint_sweeps"] = checkpoint_sweeps;
  j["trials"] = trials;
  j["seed"] = seed;
  j["radius"] = radius;
  j["logical"] = logical;
  j["variant"] = variant;
  j["widths"] = widths;
  j["kind"] = kind;
  j["path"] = path;
  j["layer"] = layer;
  j["offset"] = offset;
  j["length"] = length;
  j["track"] = track;
  j["out_dir"] = out_dir;
  j["dump"] = dump;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.subcommand = j.value("subcommand", "");
  c.model = j.value("model", "3d3f");
  if (j.contains("dims")) c.dims = j["dims"].get<std::array<int, 3>>();
  if (j.contains("W")) c.width = width_from_json(j["W"]);
  c.family = j.value("family", "auto");
  c.temperature = j.value("T", 0.5);
  c.sweeps = j.value("sweeps", std::uint64_t(1000));
  c.checkpoint_sweeps = j.value("checkpoint_sweeps", std::uint64_t(1));
  c.trials = j.value("trials", std::uint32_t(10));
  c.seed = j.value("seed", std::uint64_t(1));
  c.radius = j.value("radius", 2);
  c.logical = j.value("logical", "Se-vert");
  c.variant = j.value("variant", "open");
  if (j.contains("widths")) c.widths = j["widths"].get<std::vector<int>>();
  c.kind = j.value("kind", "Se");
  c.path = j.value("path", "vert");
  c.layer = j.value("layer", 0);
  c.offset = j.value("offset", 0);
  c.length = j.value("length", 0);
  c.track = j.value("track", "right");
  c.out_dir = j.value("out_dir", "");
  c.dump = j.value("dump", false);
  return c;
}

std::string ExperimentConfig::resolved_out_dir() const {
  if (!out_dir.empty()) return out_dir;
  if (const char* env = std::getenv("WWLAB_OUT")) return env;
  return ".";
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  return a.to_json() == b.to_json();
}

}  // namespace wwlab
