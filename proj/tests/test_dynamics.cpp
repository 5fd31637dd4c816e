#include <cmath>
#include <map>
#include <stdexcept>

#include "doctest.h"
#include "wwlab/barrier.hpp"
#include "wwlab/dynamics.hpp"

using namespace wwlab;

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("zero-temperature limit rejects every uphill proposal") {
  auto code = build_3d3f(CellComplex::t2xi(3, 2, 3));
  SymmetrySpec spec(code, SymmetrySpec::Family::VertexOneForm, SymmetrySpec::kFullWidth);
  auto moves = MoveSet::build(spec, 1);
  SimulationState st(code, 99);
  for (int i = 0; i < 20000; ++i) metropolis_step(st, moves, 1e-9);
  CHECK(st.energy == 0);  // only flat moves were accepted
  CHECK(st.energy_consistent(code));
}

TEST_CASE("flat proposals are always accepted") {
  // every symmetric move in the fully enforced 2d toric code is a stabilizer
  // product, so all proposals cost zero and the frame must drift
  auto code = build_toric(2, CellComplex::torus2d(3, 3));
  SymmetrySpec all(code, SymmetrySpec::Family::AllStabilizers, SymmetrySpec::kFullWidth);
  auto moves = MoveSet::build(all, 2);
  SimulationState st(code, 5);
  bool moved = false;
  for (int i = 0; i < 500; ++i) {
    metropolis_step(st, moves, 1e-9);
    moved = moved || !st.frame.is_identity();
    CHECK(st.energy == 0);
  }
  CHECK(moved);
}

TEST_CASE("enforced vertex syndromes stay identically zero along trajectories") {
  auto code = build_3d3f(CellComplex::t2xi(4, 4, 4));
  SymmetrySpec spec(code, SymmetrySpec::Family::VertexOneForm, SymmetrySpec::kFullWidth);
  auto moves = MoveSet::build(spec, 2);
  SimulationState st(code, 7);
  for (int i = 0; i < 100000; ++i) {
    metropolis_step(st, moves, 0.8);
    if (i % 20000 == 0) CHECK(st.energy_consistent(code));
  }
  for (auto gi : code.vertex_gen_index) CHECK(!st.violated[gi]);
  CHECK(spec.respects(st.frame));
}

TEST_CASE("high-temperature class distribution matches the uniform prediction") {
  auto code = build_toric(2, CellComplex::torus2d(2, 2));
  SymmetrySpec none(code, SymmetrySpec::Family::VertexOneForm, 0);
  auto moves = MoveSet::build(none, 1);
  StabilizerBasis basis(code);

  SimulationState st(code, 12345);
  std::map<std::string, std::size_t> counts;
  const int samples = 40000;
  const int stride = 5 * int(code.n_qubits);
  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < stride; ++i) metropolis_step(st, moves, 50.0);
    counts[basis.reduce(st.frame).serialize()]++;
  }
  // 2^(2n - rank) = 1024 canonical classes, expected uniform
  CHECK(counts.size() == 1024);
  double expected = double(samples) / 1024.0;
  double chi2 = 0;
  for (const auto& [k, c] : counts) chi2 += (double(c) - expected) * (double(c) - expected) / expected;
  // df = 1023, sd ~ 45; generous two-sided window for a fixed seed
  CHECK(chi2 > 820.0);
  CHECK(chi2 < 1250.0);
}

TEST_CASE("far above the barrier nearly every proposal is accepted") {
  auto code = build_3d3f(CellComplex::t2xi(4, 4, 4));
  SymmetrySpec spec(code, SymmetrySpec::Family::VertexOneForm, SymmetrySpec::kFullWidth);
  auto moves = MoveSet::build(spec, 1);
  SimulationState st(code, 31);
  const int n = 20000;
  std::uint64_t accepted = 0;
  std::size_t last_energy = 0;
  for (int i = 0; i < n; ++i) {
    PauliOperator before = st.frame;
    metropolis_step(st, moves, 100.0);
    accepted += (st.frame != before);
    last_energy = st.energy;
  }
  CHECK(double(accepted) / n > 0.9);  // the bath disorders the state immediately
  CHECK(last_energy > 100);
}

TEST_CASE("plain 2d toric memory fails at modest temperature") {
  auto code = build_toric(2, CellComplex::torus2d(4, 4));
  SymmetrySpec none(code, SymmetrySpec::Family::VertexOneForm, 0);
  MemoryRunConfig cfg;
  cfg.temperature = 0.6;
  cfg.max_steps = 40000 * code.n_qubits;
  cfg.trials = 3;
  cfg.seed_base = 100;
  cfg.radius = 1;
  auto stats = measure_memory_time(code, none, cfg);
  CHECK(stats.censored == 0);
  for (const auto& t : stats.trials) {
    CHECK(t.failed);
    CHECK(t.failure_class != 0);
  }
}

TEST_CASE("identical seeds reproduce trajectories bit for bit") {
  auto code = build_3d3f(CellComplex::t2xi(3, 2, 3));
  SymmetrySpec spec(code, SymmetrySpec::Family::VertexOneForm, 1);
  MemoryRunConfig cfg;
  cfg.temperature = 0.6;
  cfg.max_steps = 50 * code.n_qubits;
  cfg.trials = 2;
  cfg.seed_base = 42;
  auto a = measure_memory_time(code, spec, cfg);
  auto b = measure_memory_time(code, spec, cfg);
  REQUIRE(a.trials.size() == b.trials.size());
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    CHECK(a.trials[i].failed == b.trials[i].failed);
    CHECK(a.trials[i].failure_step == b.trials[i].failure_step);
    CHECK(a.trials[i].max_energy == b.trials[i].max_energy);
    CHECK(a.trials[i].zero_checkpoints == b.trials[i].zero_checkpoints);
  }
  // a different seed gives a different trajectory
  cfg.seed_base = 43;
  auto c = measure_memory_time(code, spec, cfg);
  bool same = true;
  for (std::size_t i = 0; i < a.trials.size(); ++i)
    same = same && a.trials[i].max_energy == c.trials[i].max_energy &&
           a.trials[i].zero_checkpoints == c.trials[i].zero_checkpoints;
  CHECK(!same);
}

TEST_CASE("tracked-logical masking narrows failure detection") {
  auto code = build_3d3f(CellComplex::t2xi(3, 2, 3));
  // a left-boundary-only failure is invisible when tracking the right pair
  PauliOperator left = code.logicals[5].op;  // X3 representative
  std::uint32_t all_bits = logical_class(code, left);
  CHECK(all_bits != 0);
  MemoryRunConfig cfg;
  cfg.tracked = {0, 1, 2, 3};
  // the masked class of X3 against the right-boundary labels is trivial
  std::uint32_t masked = 0;
  for (std::size_t j = 0; j < cfg.tracked.size(); ++j)
    if (!commutes(code.logicals[cfg.tracked[j]].op, left)) masked |= (1u << j);
  CHECK(masked == 0);
}

TEST_CASE("configuration errors") {
  auto code = build_3d3f(CellComplex::t2xi(3, 2, 3));
  SymmetrySpec spec(code, SymmetrySpec::Family::VertexOneForm, 1);
  auto moves = MoveSet::build(spec, 1);
  SimulationState st(code, 1);
  CHECK_THROWS_AS(metropolis_step(st, moves, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(metropolis_step(st, moves, -1.0), std::invalid_argument);
  MemoryRunConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(measure_memory_time(code, spec, cfg), std::invalid_argument);
  cfg.trials = 1;
  cfg.tracked = {99};
  CHECK_THROWS_AS(measure_memory_time(code, spec, cfg), std::invalid_argument);
}

TEST_SUITE_END();
