#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wwlab/gf2.hpp"
#include "wwlab/lattice.hpp"
#include "wwlab/pauli.hpp"

namespace wwlab {

enum class ModelId { Toric2d, Toric3d, Toric3dDoubled, ThreeFermion, ParamagnetBulk };

std::string model_name(ModelId m);

enum class Species : std::uint8_t { Single = 0, Sigma = 0, Tau = 1 };

enum class GenKind : std::uint8_t {
  VertexSigma, VertexTau, FaceSigma, FaceTau,
  ParaEdge, ParaFace, BoundaryToricA, BoundaryToricB,
  SymAv, SymAc, SymAvPrime, SymAqPrime,
};

struct Generator {
  PauliOperator op;
  GenKind kind;
  int cell;  // id in the cell space matching the kind (vertex/edge/face/cube)
};

struct LabeledLogical {
  std::string label;
  PauliOperator op;
};

/// A stabilizer model over a cell complex: qubit layout, Hamiltonian
/// generator list, symmetry-only generators (paramagnet bulk), and
/// constructed logical representatives.
class StabilizerCode {
 public:
  StabilizerCode(ModelId m, CellComplex complex) : model(m), cx(std::move(complex)) {}

  ModelId model;
  CellComplex cx;
  std::size_t n_qubits = 0;

  std::vector<Generator> gens;      // Hamiltonian terms; energy counts these
  std::vector<Generator> sym_gens;  // extra 1-form generators (paramagnet bulk)
  std::vector<std::size_t> vertex_gen_index;  // indices of vertex-kind gens
  std::vector<LabeledLogical> logicals;       // Z1,X1,Z2,X2[,Z3,X3,Z4,X4]

  std::vector<int> face_qubit;  // paramagnet: face id -> qubit id or -1

  bool doubled() const { return model == ModelId::ThreeFermion || model == ModelId::Toric3dDoubled; }
  int qubit_of_edge(int edge, Species s = Species::Single) const;
  int qubit_of_face(int face) const;

  struct QubitInfo { bool on_face; int cell; Species species; };
  QubitInfo qubit_info(int q) const;

  PauliOperator identity() const { return PauliOperator(n_qubits); }
  std::uint64_t fixture_hash() const;
};

StabilizerCode build_toric(int dimension, const CellComplex& cx);
StabilizerCode build_toric3d_doubled(const CellComplex& cx);
/// decorations=false strips the over/under legs, reducing to the doubled code.
StabilizerCode build_3d3f(const CellComplex& cx, bool decorations = true);
StabilizerCode build_paramagnet_bulk(const CellComplex& cx);

StabilizerCode build_model(ModelId m, const std::array<int, 3>& dims);

/// Pairwise commutation of all Hamiltonian generators (and, for the
/// paramagnet model, of every symmetry generator against every Hamiltonian
/// generator). Support-overlap aware, so large lattices stay fast.
bool check_all_commute(const StabilizerCode& code);

std::vector<BitVec> symplectic_rows(const std::vector<Generator>& gens);
BitVec symplectic_row(const PauliOperator& p);
PauliOperator from_symplectic(const BitVec& row);

std::size_t stabilizer_rank(const StabilizerCode& code);
int count_logical_qubits(const StabilizerCode& code);  // throws if gens don't commute

struct LogicalPair { PauliOperator x, z; };
std::vector<LogicalPair> extract_logicals(const StabilizerCode& code);

/// RREF of the generator group for membership tests and canonical coset
/// representatives.
class StabilizerBasis {
 public:
  explicit StabilizerBasis(const StabilizerCode& code);
  bool contains(const PauliOperator& p) const;
  PauliOperator reduce(const PauliOperator& p) const;
  std::size_t rank() const { return rref_.rank(); }

 private:
  Rref rref_;
  std::size_t n_;
};

struct VerifyReport {
  std::string model;
  std::array<int, 3> dims;
  std::size_t n_qubits, n_generators, n_symmetry_generators, rank;
  int k;
  int k_per_boundary;  // -1 when not applicable
  bool all_commute;
  bool logicals_commute_with_stabilizers;
  std::uint64_t fixture_hash;
};

VerifyReport verify_code(const StabilizerCode& code);

}  // namespace wwlab
