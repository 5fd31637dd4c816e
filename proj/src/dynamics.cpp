#include "wwlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

#include "wwlab/operators.hpp"

namespace wwlab {

SimulationState::SimulationState(const StabilizerCode& code, std::uint64_t seed)
    : frame(code.n_qubits), violated(code.gens.size(), 0), rng(seed) {}

bool SimulationState::energy_consistent(const StabilizerCode& code) const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < code.gens.size(); ++i) {
    bool v = !commutes(code.gens[i].op, frame);
    if (v != bool(violated[i])) return false;
    e += v;
  }
  return e == energy;
}

namespace {

inline double unit_double(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  // rejection sampling keeps the draw unbiased and platform-stable
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do { r = rng(); } while (r >= limit);
  return r % n;
}

}  // namespace

void metropolis_step(SimulationState& state, const MoveSet& moves, double temperature) {
  if (temperature <= 0) throw std::invalid_argument("temperature must be positive");
  if (moves.moves.empty()) throw std::invalid_argument("empty move set");
  const auto& mv = moves.moves[bounded(state.rng, moves.moves.size())];

  long de = 0;
  for (auto gi : mv.touched) de += state.violated[gi] ? -1 : 1;

  bool accept = de <= 0;
  if (!accept) accept = unit_double(state.rng) < std::exp(-double(de) / temperature);
  if (accept) {
    for (auto q : mv.x_qubits) state.frame.x.flip(q);
    for (auto q : mv.z_qubits) state.frame.z.flip(q);
    for (auto gi : mv.touched) state.violated[gi] ^= 1;
    state.energy = std::size_t(long(state.energy) + de);
  }
  state.step++;
}

std::uint32_t logical_class(const StabilizerCode& code, const PauliOperator& frame) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < code.logicals.size(); ++i)
    if (!commutes(code.logicals[i].op, frame)) bits |= (1u << i);
  return bits;
}

std::uint32_t masked_class(const StabilizerCode& code, const PauliOperator& frame,
                           const std::vector<std::size_t>& tracked) {
  if (tracked.empty()) return logical_class(code, frame);
  std::uint32_t bits = 0;
  for (std::size_t j = 0; j < tracked.size(); ++j)
    if (!commutes(code.logicals[tracked[j]].op, frame)) bits |= (1u << j);
  return bits;
}

MemoryStats measure_memory_time(const StabilizerCode& code, const SymmetrySpec& spec,
                                const MemoryRunConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("at least one trial");
  if (code.logicals.empty()) throw std::invalid_argument("code has no logicals to track");
  for (auto t : cfg.tracked)
    if (t >= code.logicals.size()) throw std::invalid_argument("tracked logical out of range");
  MoveSet moves = MoveSet::build(spec, cfg.radius);
  std::uint64_t interval =
      cfg.checkpoint_interval ? cfg.checkpoint_interval : std::uint64_t(code.n_qubits);

  // enforced generators that are Hamiltonian terms, for the conservation check
  std::vector<std::size_t> enforced_idx;
  for (std::size_t i = 0; i < code.gens.size(); ++i)
    for (const auto* g : spec.enforced())
      if (g == &code.gens[i].op) { enforced_idx.push_back(i); break; }

  auto run_trial = [&](std::uint64_t seed) {
    TrialRecord rec;
    rec.seed = seed;
    SimulationState st(code, rec.seed);
    while (st.step < cfg.max_steps) {
      for (std::uint64_t i = 0; i < interval && st.step < cfg.max_steps; ++i)
        metropolis_step(st, moves, cfg.temperature);
      rec.checkpoints++;
      rec.max_energy = std::max(rec.max_energy, st.energy);
      for (auto gi : enforced_idx)
        if (st.violated[gi]) rec.symmetry_clean = false;
      if (st.energy == 0) {
        rec.zero_checkpoints++;
        std::uint32_t cls = masked_class(code, st.frame, cfg.tracked);
        if (cls) {
          rec.failed = true;
          rec.failure_step = st.step;
          rec.failure_class = cls;
          break;
        }
      }
    }
    return rec;
  };

  // trials are independent; run them concurrently keyed by seed and merge in
  // seed order so scheduling cannot change the report
  std::vector<std::future<TrialRecord>> futures;
  for (std::uint32_t t = 0; t < cfg.trials; ++t)
    futures.push_back(std::async(std::launch::async, run_trial, cfg.seed_base + t));
  MemoryStats stats;
  for (auto& f : futures) {
    TrialRecord rec = f.get();
    stats.trials.push_back(rec);
    if (!rec.failed) stats.censored++;
  }

  std::vector<double> times;
  double mean = 0;
  std::size_t failed = 0;
  for (const auto& r : stats.trials) {
    times.push_back(r.failed ? double(r.failure_step) : double(cfg.max_steps));
    if (r.failed) { mean += double(r.failure_step); failed++; }
  }
  std::sort(times.begin(), times.end());
  std::size_t n = times.size();
  stats.median_failure_steps = (n % 2) ? times[n / 2] : 0.5 * (times[n / 2 - 1] + times[n / 2]);
  stats.mean_failure_steps = failed ? mean / double(failed) : -1;
  return stats;
}

}  // namespace wwlab
