#include <algorithm>
#include <stdexcept>
#include <map>
#include <set>

#include "doctest.h"
#include "wwlab/lattice.hpp"

using namespace wwlab;

namespace {

void check_boundary_of_boundary(const CellComplex& cx) {
  // every face's edge-endpoint vertices appear an even number of times
  for (int f = 0; f < cx.n_faces(); ++f) {
    std::map<int, int> vcount;
    for (int e : cx.face_edges(f)) {
      REQUIRE(e >= 0);
      for (int v : cx.edge_vertices(e)) vcount[v]++;
    }
    for (auto& [v, c] : vcount) CHECK(c % 2 == 0);
  }
  // and every cube's face-boundary edges too
  for (int q = 0; q < cx.n_cubes(); ++q) {
    std::map<int, int> ecount;
    for (int f : cx.cube_faces(q)) {
      REQUIRE(f >= 0);
      for (int e : cx.face_edges(f)) ecount[e]++;
    }
    for (auto& [e, c] : ecount) CHECK(c % 2 == 0);
  }
}

void check_incidence_duality(const CellComplex& cx) {
  for (int e = 0; e < cx.n_edges(); ++e)
    for (int v : cx.edge_vertices(e)) {
      auto up = cx.vertex_edges(v);
      CHECK(std::count(up.begin(), up.end(), e) == 1);
    }
  for (int f = 0; f < cx.n_faces(); ++f)
    for (int e : cx.face_edges(f)) {
      auto up = cx.edge_faces(e);
      CHECK(std::count(up.begin(), up.end(), f) == 1);
    }
  for (int q = 0; q < cx.n_cubes(); ++q)
    for (int f : cx.cube_faces(q)) {
      auto up = cx.face_cubes(f);
      CHECK(std::count(up.begin(), up.end(), q) == 1);
    }
  // converse direction
  for (int v = 0; v < cx.n_vertices(); ++v)
    for (int e : cx.vertex_edges(v)) {
      auto down = cx.edge_vertices(e);
      CHECK(std::count(down.begin(), down.end(), v) == 1);
    }
  for (int e = 0; e < cx.n_edges(); ++e)
    for (int f : cx.edge_faces(e)) {
      auto down = cx.face_edges(f);
      CHECK(std::count(down.begin(), down.end(), e) == 1);
    }
}

}  // namespace

TEST_SUITE_BEGIN("lattice");

TEST_CASE("t2xi vertex count matches the open-y formula") {
  auto cx = CellComplex::t2xi(2, 2, 2);
  CHECK(cx.n_vertices() == 2 * 3 * 2);  // L_x * (L_y+1) * L_z
  int count = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y <= 2; ++y)
      for (int z = 0; z < 2; ++z)
        if (cx.vertex_id(x, y, z) >= 0) ++count;
  CHECK(count == cx.n_vertices());
}

TEST_CASE("boundary edge sets are nonempty at both open ends") {
  auto cx = CellComplex::t2xi(3, 2, 3);
  int right = 0, left = 0;
  for (int e = 0; e < cx.n_edges(); ++e) {
    right += cx.is_right_boundary_edge(e);
    left += cx.is_left_boundary_edge(e);
  }
  CHECK(right == 2 * 3 * 3);  // x and z edges of the boundary torus
  CHECK(left == 2 * 3 * 3);
}

TEST_CASE("boundary of boundary vanishes") {
  for (int l = 2; l <= 4; ++l) {
    check_boundary_of_boundary(CellComplex::t2xi(l, l, l));
    check_boundary_of_boundary(CellComplex::torus3d(l, l, l));
    check_boundary_of_boundary(CellComplex::torus2d(l, l));
  }
}

TEST_CASE("incidence duality both directions") {
  check_incidence_duality(CellComplex::t2xi(3, 2, 3));
  check_incidence_duality(CellComplex::torus3d(2, 2, 2));
  check_incidence_duality(CellComplex::torus2d(3, 3));
}

TEST_CASE("periodic coordinates wrap, open ones do not") {
  auto cx = CellComplex::t2xi(3, 3, 3);
  CHECK(cx.edge_id(0, 3, 1, 0) == cx.edge_id(0, 0, 1, 0));
  CHECK(cx.edge_id(2, 1, 1, -1) == cx.edge_id(2, 1, 1, 2));
  CHECK(cx.edge_id(0, 0, -1, 0) == -1);
  CHECK(cx.edge_id(0, 0, 4, 0) == -1);
  CHECK(cx.edge_id(1, 0, 3, 0) == -1);  // y-edges stop one layer short
  CHECK(cx.edge_id(1, 0, 2, 0) >= 0);
}

TEST_CASE("edge-face counts: four in the bulk, three or fewer on the boundary") {
  auto cx = CellComplex::t2xi(3, 3, 3);
  for (int e = 0; e < cx.n_edges(); ++e) {
    auto fs = cx.edge_faces(e);
    if (cx.is_right_boundary_edge(e) || cx.is_left_boundary_edge(e))
      CHECK(fs.size() == 3);
    else
      CHECK(fs.size() == 4);
  }
}

TEST_CASE("degenerate dims are rejected") {
  CHECK_THROWS_AS(CellComplex::t2xi(1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(CellComplex::torus2d(2, 1), std::invalid_argument);
}

TEST_CASE("over/under legs: one each in the bulk, truncated on the open ends") {
  auto cx = CellComplex::t2xi(3, 3, 3);
  for (int f = 0; f < cx.n_faces(); ++f) {
    auto legs = cx.ou_legs(f);
    auto ref = cx.face_ref(f);
    if (ref.plane == CellComplex::ZX && ref.y == 0) {
      CHECK(legs.over == -1);  // the boundary face operator has no O edge
      CHECK(legs.under >= 0);
    } else if (ref.plane == CellComplex::ZX && ref.y == 3) {
      CHECK(legs.over >= 0);
      CHECK(legs.under == -1);
    } else {
      CHECK(legs.over >= 0);
      CHECK(legs.under >= 0);
      CHECK(legs.over != legs.under);
    }
  }
  // determinism
  auto a = cx.ou_legs(7), b = cx.ou_legs(7);
  CHECK(a.over == b.over);
  CHECK(a.under == b.under);
}

TEST_CASE("straight bulk segment decoration fixture") {
  auto cx = CellComplex::t2xi(4, 4, 4);
  Curve c = Curve::straight(cx, 2, {1, 2, 0}, 3);
  auto deco = cx.offset_decorations(c.edges);

  std::set<int> under_expect, over_expect;
  for (int z = 0; z < 3; ++z) {
    under_expect.insert(cx.edge_id(0, 0, 2, z + 1));  // -x legs beside the offset copy
    over_expect.insert(cx.edge_id(1, 1, 1, z));       // -y legs
  }
  CHECK(std::set<int>(deco.under.begin(), deco.under.end()) == under_expect);
  CHECK(std::set<int>(deco.over.begin(), deco.over.end()) == over_expect);

  auto again = cx.offset_decorations(c.edges);
  CHECK(again.over == deco.over);
  CHECK(again.under == deco.under);
}

TEST_CASE("boundary curves lose their over decorations") {
  auto cx = CellComplex::t2xi(4, 3, 4);
  Curve c = Curve::straight(cx, 2, {1, 0, 0}, 3);
  auto deco = cx.offset_decorations(c.edges);
  CHECK(deco.over.empty());
  CHECK(deco.under.size() == 3);
  Curve h = Curve::straight(cx, 0, {0, 0, 2}, 3);
  auto hdeco = cx.offset_decorations(h.edges);
  CHECK(hdeco.over.empty());
  CHECK(hdeco.under.size() == 3);
}

TEST_CASE("closed loop decorations scale with loop length") {
  for (int l = 4; l <= 6; ++l) {
    auto cx = CellComplex::t2xi(l, 4, l);
    Curve loop = Curve::straight(cx, 2, {1, 2, 0}, l);
    CHECK(loop.is_closed(cx));
    auto deco = cx.offset_decorations(loop.edges);
    CHECK(int(deco.over.size()) == l);
    CHECK(int(deco.under.size()) == l);
  }
}

TEST_CASE("curves know their endpoints") {
  auto cx = CellComplex::t2xi(4, 4, 4);
  Curve c = Curve::straight(cx, 2, {1, 2, 0}, 3);
  auto eps = c.endpoints(cx);
  REQUIRE(eps.size() == 2);
  CHECK(eps[0] == cx.vertex_id(1, 2, 0));
  CHECK(eps[1] == cx.vertex_id(1, 2, 3));
  CHECK(!c.is_closed(cx));

  // toggling a face boundary keeps closedness
  Curve loop = Curve::straight(cx, 2, {1, 2, 0}, 4);
  loop.toggle_face(cx, cx.face_id(CellComplex::YZ, 1, 2, 1));
  CHECK(loop.is_closed(cx));
}

TEST_CASE("json description carries dims and convention tag") {
  auto cx = CellComplex::t2xi(2, 3, 4);
  auto s = cx.describe_json(5);
  CHECK(s.find("\"dims\":[2,3,4]") != std::string::npos);
  CHECK(s.find("ou-offset(+x,-y,-z)/v1") != std::string::npos);
  CHECK(s.find("\"n_qubits\":5") != std::string::npos);
}

TEST_SUITE_END();
