#include <stdexcept>

#include "doctest.h"
#include "wwlab/codes.hpp"

using namespace wwlab;

TEST_SUITE_BEGIN("codes");

TEST_CASE("all generators commute, small sizes") {
  for (int l = 2; l <= 4; ++l) {
    CHECK(check_all_commute(build_toric(2, CellComplex::torus2d(l, l))));
    CHECK(check_all_commute(build_toric(3, CellComplex::torus3d(l, l, l))));
    CHECK(check_all_commute(build_3d3f(CellComplex::t2xi(l, l, l))));
    CHECK(check_all_commute(build_paramagnet_bulk(CellComplex::t2xi(l, l, l))));
  }
}

TEST_CASE("toric 2d logical count, brute-force centralizer oracle at L=2") {
  auto code = build_toric(2, CellComplex::torus2d(2, 2));
  REQUIRE(code.n_qubits == 8);

  // enumerate all 4^8 phase-free Paulis; |centralizer| = 2^(n+k)
  std::size_t count = 0;
  for (std::uint32_t xm = 0; xm < 256; ++xm) {
    for (std::uint32_t zm = 0; zm < 256; ++zm) {
      PauliOperator p(8);
      for (int i = 0; i < 8; ++i) {
        if ((xm >> i) & 1) p.x.set(std::size_t(i));
        if ((zm >> i) & 1) p.z.set(std::size_t(i));
      }
      bool central = true;
      for (const auto& g : code.gens)
        if (!commutes(g.op, p)) { central = false; break; }
      count += central;
    }
  }
  CHECK(count == std::size_t(1) << (8 + 2));  // k = 2 by independent enumeration
  CHECK(count_logical_qubits(code) == 2);
}

TEST_CASE("logical counts across models") {
  CHECK(count_logical_qubits(build_toric(2, CellComplex::torus2d(3, 3))) == 2);
  CHECK(count_logical_qubits(build_toric(3, CellComplex::torus3d(2, 2, 2))) == 3);
  CHECK(count_logical_qubits(build_toric(3, CellComplex::torus3d(3, 3, 3))) == 3);
  CHECK(count_logical_qubits(build_3d3f(CellComplex::t2xi(3, 2, 3))) == 4);
  CHECK(count_logical_qubits(build_3d3f(CellComplex::t2xi(4, 4, 4))) == 4);
  auto para = build_paramagnet_bulk(CellComplex::t2xi(3, 2, 3));
  auto rep = verify_code(para);
  CHECK(rep.k == 4);
  CHECK(rep.k_per_boundary == 2);
}

TEST_CASE("stripping the decorations reproduces the doubled toric code") {
  auto cx = CellComplex::t2xi(3, 3, 3);
  auto bare = build_3d3f(cx, false);
  auto doubled = build_toric3d_doubled(cx);
  REQUIRE(bare.gens.size() == doubled.gens.size());
  for (std::size_t i = 0; i < bare.gens.size(); ++i) {
    CHECK(bare.gens[i].op.serialize() == doubled.gens[i].op.serialize());
    CHECK(bare.gens[i].cell == doubled.gens[i].cell);
  }
}

TEST_CASE("construction is idempotent, fixture hash included") {
  auto a = build_3d3f(CellComplex::t2xi(3, 2, 3));
  auto b = build_3d3f(CellComplex::t2xi(3, 2, 3));
  REQUIRE(a.gens.size() == b.gens.size());
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    CHECK(a.gens[i].op.serialize() == b.gens[i].op.serialize());
  CHECK(a.fixture_hash() == b.fixture_hash());
  CHECK(a.fixture_hash() != build_3d3f(CellComplex::t2xi(3, 2, 4)).fixture_hash());
}

TEST_CASE("topology errors") {
  CHECK_THROWS_AS(build_3d3f(CellComplex::torus3d(3, 3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(build_paramagnet_bulk(CellComplex::torus3d(3, 3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(build_paramagnet_bulk(CellComplex::t2xi(3, 1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(build_toric(2, CellComplex::torus3d(2, 2, 2)), std::invalid_argument);
}

TEST_CASE("constructed logicals commute with every stabilizer") {
  for (auto* code : {new StabilizerCode(build_toric(2, CellComplex::torus2d(3, 3))),
                     new StabilizerCode(build_toric(3, CellComplex::torus3d(2, 2, 2))),
                     new StabilizerCode(build_3d3f(CellComplex::t2xi(3, 2, 3))),
                     new StabilizerCode(build_paramagnet_bulk(CellComplex::t2xi(3, 2, 3)))}) {
    for (const auto& l : code->logicals)
      for (const auto& g : code->gens) CHECK(commutes(l.op, g.op));
    delete code;
  }
}

TEST_CASE("3d3f logical pairing algebra") {
  auto code = build_3d3f(CellComplex::t2xi(3, 2, 3));
  REQUIRE(code.logicals.size() == 8);
  // labels Z1,X1,Z2,X2,Z3,X3,Z4,X4: anticommute exactly within a pair
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) {
      bool same_pair = (i / 2 == j / 2);
      CHECK(commutes(code.logicals[i].op, code.logicals[j].op) == !same_pair);
    }
}

TEST_CASE("toric 2d L=2 logicals have weight two") {
  auto code = build_toric(2, CellComplex::torus2d(2, 2));
  for (const auto& l : code.logicals) CHECK(l.op.weight() == 2);
}

TEST_CASE("extracted logicals pair symplectically and match the constructions") {
  for (auto* code : {new StabilizerCode(build_toric(2, CellComplex::torus2d(3, 3))),
                     new StabilizerCode(build_3d3f(CellComplex::t2xi(3, 2, 3)))}) {
    int k = count_logical_qubits(*code);
    auto pairs = extract_logicals(*code);
    REQUIRE(int(pairs.size()) == k);
    StabilizerBasis basis(*code);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      CHECK(!commutes(pairs[i].x, pairs[i].z));
      CHECK(!basis.contains(pairs[i].x));
      CHECK(!basis.contains(pairs[i].z));
      for (const auto& g : code->gens) {
        CHECK(commutes(pairs[i].x, g.op));
        CHECK(commutes(pairs[i].z, g.op));
      }
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (i == j) continue;
        CHECK(commutes(pairs[i].x, pairs[j].x));
        CHECK(commutes(pairs[i].x, pairs[j].z));
      }
    }
    // the two constructions agree modulo stabilizers: adding the constructed
    // logicals to span(stabilizers + extracted) must not raise the rank
    auto rows = symplectic_rows(code->gens);
    for (const auto& p : pairs) {
      rows.push_back(symplectic_row(p.x));
      rows.push_back(symplectic_row(p.z));
    }
    auto r_ext = gf2_rank(rows);
    for (const auto& l : code->logicals) rows.push_back(symplectic_row(l.op));
    CHECK(gf2_rank(rows) == r_ext);
    delete code;
  }
}

TEST_CASE("non-commuting generator set is rejected") {
  auto code = build_toric(2, CellComplex::torus2d(2, 2));
  PauliOperator bad(code.n_qubits);
  bad.x.set(0);
  bad.z.set(1);
  PauliOperator bad2(code.n_qubits);
  bad2.z.set(0);
  bad2.x.set(1);
  code.gens.push_back({bad, GenKind::FaceSigma, 0});
  code.gens.push_back({bad2, GenKind::FaceSigma, 1});
  CHECK_THROWS_AS(count_logical_qubits(code), std::invalid_argument);
}

TEST_CASE("verify report fields") {
  auto rep = verify_code(build_3d3f(CellComplex::t2xi(3, 2, 3)));
  CHECK(rep.model == "3d3f");
  CHECK(rep.k == 4);
  CHECK(rep.k_per_boundary == 2);
  CHECK(rep.all_commute);
  CHECK(rep.logicals_commute_with_stabilizers);
  CHECK(rep.n_qubits == rep.rank + 4);
}

TEST_SUITE_END();
