#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace wwlab {

/// Parameter record shared by the CLI subcommands; every field that took
/// part in a run is echoed into the output artifacts. Round-trips through
/// JSON losslessly.
struct ExperimentConfig {
  std::string subcommand;
  std::string model = "3d3f";
  std::array<int, 3> dims{4, 4, 4};

  int width = 0;           // enforcement width; -1 encodes "full"
  std::string family = "auto";  // vertex | paramagnet-all | all-stabilizers | auto
  double temperature = 0.5;
  std::uint64_t sweeps = 1000;          // simulate: budget in sweeps
  std::uint64_t checkpoint_sweeps = 1;  // simulate: checkpoint cadence
  std::uint32_t trials = 10;
  std::uint64_t seed = 1;
  int radius = 2;

  std::string logical = "Se-vert";  // barrier/sweep target label
  std::string variant = "open";     // open | vertical | best
  std::vector<int> widths;          // sweep grid

  std::string kind = "Se";        // ops: operator kind
  std::string path = "vert";      // ops: vert | horiz
  int layer = 0;                  // ops: y layer of the curve
  int offset = 0;                 // ops: transverse coordinate
  int length = 0;                 // ops: 0 = full wrap

  std::string track = "right";  // simulate: right | all

  std::string out_dir;  // empty: WWLAB_OUT env var, else "."
  bool dump = false;

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);

  std::string resolved_out_dir() const;
};

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

/// "full" or the integer width, as the config file spells it.
nlohmann::json width_to_json(int width);
int width_from_json(const nlohmann::json& j);

}  // namespace wwlab
