#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wwlab/symmetry.hpp"

namespace wwlab {

/// Accumulated error frame relative to the reference ground state, with the
/// violated-generator set tracked incrementally.
struct SimulationState {
  PauliOperator frame;
  std::vector<std::uint8_t> violated;  // one flag per Hamiltonian generator
  std::size_t energy = 0;
  std::uint64_t step = 0;
  std::mt19937_64 rng;

  SimulationState(const StabilizerCode& code, std::uint64_t seed);

  /// Recompute the violated set from scratch and check the cache.
  bool energy_consistent(const StabilizerCode& code) const;
};

/// One Metropolis proposal: a move uniform over the precomputed symmetric
/// basis, accepted with probability min(1, exp(-dE/T)).
void metropolis_step(SimulationState& state, const MoveSet& moves, double temperature);

struct TrialRecord {
  std::uint64_t seed = 0;
  bool failed = false;
  std::uint64_t failure_step = 0;      // steps, not sweeps
  std::uint32_t failure_class = 0;     // bit per logical, at the failing checkpoint
  std::uint64_t zero_checkpoints = 0;  // checkpoints with zero syndrome
  std::uint64_t checkpoints = 0;
  std::size_t max_energy = 0;
  bool symmetry_clean = true;  // enforced syndromes identically zero at checkpoints
};

struct MemoryRunConfig {
  double temperature = 0.5;
  std::uint64_t max_steps = 100000;
  std::uint64_t checkpoint_interval = 0;  // 0: one sweep (n_qubits steps)
  std::uint32_t trials = 1;
  std::uint64_t seed_base = 1;
  int radius = 2;
  /// Indices into code.logicals to watch; empty watches all of them. A width
  /// measured from the right boundary protects only that boundary's pair, so
  /// trend comparisons track the right-boundary labels.
  std::vector<std::size_t> tracked;
};

struct MemoryStats {
  std::vector<TrialRecord> trials;
  std::uint64_t censored = 0;
  double median_failure_steps = -1;  // censored trials count as max_steps
  double mean_failure_steps = -1;    // over failed trials only
};

/// Evolve trials from the clean frame; at every zero-syndrome checkpoint
/// classify the frame against the code logicals; the first nontrivial class
/// is the failure time. Runs past max_steps are censored.
MemoryStats measure_memory_time(const StabilizerCode& code, const SymmetrySpec& spec,
                                const MemoryRunConfig& cfg);

/// Class bits of a zero-syndrome frame against the code's labeled logicals.
std::uint32_t logical_class(const StabilizerCode& code, const PauliOperator& frame);

}  // namespace wwlab
