#include <set>

#include "doctest.h"
#include "domcx/curves.hpp"
#include "domcx/surface.hpp"
#include "slope_oracle.hpp"

using namespace domcx;

TEST_CASE("standard triangulation cell counts") {
  auto t11 = Triangulation::standard({1, 1});
  CHECK(t11.triangles() == 2);
  CHECK(t11.edges() == 3);
  CHECK(t11.marked_points() == 1);

  auto t04 = Triangulation::standard({0, 4});
  CHECK(t04.triangles() == 4);
  CHECK(t04.edges() == 6);
  CHECK(t04.marked_points() == 4);

  auto t05 = Triangulation::standard({0, 5});
  CHECK(t05.triangles() == 6);
  CHECK(t05.edges() == 9);
  CHECK(t05.marked_points() == 5);

  auto t12 = Triangulation::standard({1, 2});
  CHECK(t12.triangles() == 4);
  CHECK(t12.edges() == 6);
  CHECK(t12.marked_points() == 2);

  auto t10 = Triangulation::standard({1, 0});
  CHECK(t10.triangles() == 2);
  CHECK(t10.edges() == 3);
  CHECK(t10.marked_points() == 1);

  CHECK_THROWS_AS(Triangulation::standard({0, 3}), UnsupportedSurface);
  // point-pushing would split classes on higher-genus closed surfaces
  CHECK_THROWS_AS(Triangulation::standard({2, 0}), UnsupportedSurface);
  CHECK_THROWS_AS(Triangulation::standard({0, 0}), UnsupportedSurface);
  CHECK_THROWS_AS(Triangulation::standard({0, 2}), UnsupportedSurface);
}

TEST_CASE("triangulation symmetries form a nonempty consistent family") {
  for (SurfaceSig sig : {SurfaceSig{1, 1}, SurfaceSig{0, 4}, SurfaceSig{0, 5}, SurfaceSig{1, 2}}) {
    auto tr = Triangulation::standard(sig);
    auto syms = tr.symmetries();
    REQUIRE(!syms.empty());
    bool has_identity = false;
    for (const auto& s : syms) {
      // permutations really permute
      std::set<int> eimg(s.edge_perm.begin(), s.edge_perm.end());
      CHECK(static_cast<int>(eimg.size()) == tr.edges());
      std::set<int> vimg(s.vertex_perm.begin(), s.vertex_perm.end());
      CHECK(static_cast<int>(vimg.size()) == tr.marked_points());
      bool ident = !s.reflected;
      for (int t = 0; t < tr.triangles() && ident; ++t)
        if (s.tri_image[t] != t || s.rot[t] != 0) ident = false;
      has_identity |= ident;
    }
    CHECK(has_identity);
  }
}

TEST_CASE("admissibility and corner counts on the one-holed torus") {
  auto s = Surface({1, 1});
  CHECK(admissible(s.tri(), {1, 1, 0}));
  CHECK(admissible(s.tri(), {1, 0, 1}));
  CHECK(admissible(s.tri(), {0, 1, 1}));
  CHECK_FALSE(admissible(s.tri(), {1, 1, 1}));  // odd triangle sum
  CHECK_FALSE(admissible(s.tri(), {4, 1, 1}));  // violates triangle inequality
  CHECK(admissible(s.tri(), {0, 0, 0}));
}

TEST_CASE("trace basics") {
  auto s = Surface({1, 1});

  SUBCASE("zero weights trace to the empty multicurve") {
    auto t = trace(s.tri(), {0, 0, 0});
    CHECK(t.components.empty());
    CHECK(t.copies == 0);
  }

  SUBCASE("the three basic slope curves are connected and essential") {
    for (Weights w : {Weights{1, 1, 0}, Weights{1, 0, 1}, Weights{0, 1, 1}}) {
      auto t = trace(s.tri(), w);
      REQUIRE(t.copies == 1);
      CHECK(t.components[0].coords == w);
      CHECK_FALSE(t.components[0].vertex_linking());
    }
  }

  SUBCASE("doubling a curve doubles multiplicity") {
    auto t = trace(s.tri(), {2, 2, 0});
    REQUIRE(t.components.size() == 1);
    CHECK(t.components[0].coords == Weights{1, 1, 0});
    CHECK(t.components[0].multiplicity == 2);
  }

  SUBCASE("vertex-linking component is detected") {
    // weight 2 on every edge around the single marked point of S_{1,1}
    auto t = trace(s.tri(), {2, 2, 2});
    REQUIRE(t.components.size() == 1);
    CHECK(t.components[0].vertex_linking());
    CHECK(t.components[0].linking_vertex == 0);
  }
}

TEST_CASE("vertex-linking loops exist around each puncture of the 4-holed sphere") {
  auto s = Surface({0, 4});
  std::set<int> linked;
  for_each_admissible(s.tri(), 2, [&](const Weights& w) {
    auto t = trace(s.tri(), w);
    if (t.copies == 1 && t.components[0].vertex_linking())
      linked.insert(t.components[0].linking_vertex);
  });
  CHECK(linked == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("enumerate_curves on slope surfaces") {
  auto s11 = Surface({1, 1});
  auto curves1 = enumerate_curves(s11, 1);
  CHECK(curves1.size() == 3);

  auto s04 = Surface({0, 4});
  auto c04 = enumerate_curves(s04, 2);
  CHECK(!c04.empty());
  for (const auto& c : c04) CHECK(c.essential());

  CHECK(enumerate_curves(s11, 0).empty());
}

TEST_CASE("disjointness matches the algebraic slope oracle on the torus") {
  auto s = Surface({1, 1});
  auto curves = enumerate_curves(s, 4);
  REQUIRE(curves.size() >= 3);

  // the arc basis must be faithful: the two short transverse slopes pair to 1
  CHECK(oracle::torus_intersection(s, {1, 1, 0}, {1, 0, 1}) == 1);
  CHECK(oracle::torus_intersection(s, {1, 1, 0}, {0, 1, 1}) == 1);

  int checked = 0;
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = i; j < curves.size(); ++j) {
      bool dis = curves_disjoint(s, curves[i].coords, curves[j].coords);
      long long det = oracle::torus_intersection(s, curves[i].coords, curves[j].coords);
      CHECK(dis == (det == 0));
      // distinct classes on the once-holed torus always intersect
      if (i != j) CHECK(det != 0);
      ++checked;
    }
  CHECK(checked > 10);
}

TEST_CASE("disjointness matches the pillowcase oracle on the 4-holed sphere") {
  auto s = Surface({0, 4});
  oracle::PillowOracle po(s);
  CHECK(po.cover().marked_points() == 4);
  CHECK(po.cover().edges() == 12);
  CHECK(po.cover().triangles() == 8);

  auto curves = enumerate_curves(s, 3);
  REQUIRE(curves.size() >= 3);

  // faithfulness: two curves the oracle must separate
  bool found_distinct = false;
  for (size_t i = 0; i < curves.size() && !found_distinct; ++i)
    for (size_t j = i + 1; j < curves.size() && !found_distinct; ++j)
      if (!po.same_slope(curves[i].coords, curves[j].coords)) found_distinct = true;
  CHECK(found_distinct);

  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = i; j < curves.size(); ++j) {
      bool dis = curves_disjoint(s, curves[i].coords, curves[j].coords);
      bool same = po.same_slope(curves[i].coords, curves[j].coords);
      CHECK(dis == same);
      if (i != j) CHECK_FALSE(same);  // distinct enumerated classes have distinct slopes
    }
}

TEST_CASE("find_distinguishing_curve") {
  auto s = Surface({1, 1});
  std::vector<Weights> family{{1, 1, 0}};
  auto g = find_distinguishing_curve(s, family, 0, 2);
  REQUIRE(g.has_value());
  CHECK_FALSE(curves_disjoint(s, g->coords, family[0]));

  CHECK_FALSE(find_distinguishing_curve(s, family, 0, 0).has_value());
  CHECK_THROWS_AS(find_distinguishing_curve(s, family, 2, 2), Error);
}

TEST_CASE("distinguishing curve crosses exactly one member of a disjoint pair") {
  auto s = Surface({0, 5});
  auto curves = enumerate_curves(s, 2);
  bool found_family = false;
  for (size_t i = 0; i < curves.size() && !found_family; ++i)
    for (size_t j = i + 1; j < curves.size() && !found_family; ++j) {
      if (!curves_disjoint(s, curves[i].coords, curves[j].coords)) continue;
      found_family = true;
      std::vector<Weights> family{curves[i].coords, curves[j].coords};
      for (int alpha = 0; alpha < 2; ++alpha) {
        auto g = find_distinguishing_curve(s, family, alpha, 3);
        REQUIRE(g.has_value());
        CHECK_FALSE(curves_disjoint(s, g->coords, family[alpha]));
        CHECK(curves_disjoint(s, g->coords, family[1 - alpha]));
      }
    }
  CHECK(found_family);
}

TEST_CASE("non-linking components carry nonzero algebraic behavior") {
  // the stated modeling assumption: normal components are vertex-linking or
  // essential, never null-homotopic; null-homotopic curves would have zero
  // pairing with every arc
  auto s11 = Surface({1, 1});
  for (const CurveClass& c : enumerate_curves(s11, 4)) {
    auto v = oracle::signed_vector(s11.tri(), c.coords);
    bool nonzero = false;
    for (int x : v)
      if (x != 0) nonzero = true;
    CHECK(nonzero);
  }
  auto s04 = Surface({0, 4});
  oracle::PillowOracle po(s04);
  for (const CurveClass& c : enumerate_curves(s04, 3)) {
    auto v = po.slope_invariant(c.coords);
    bool nonzero = false;
    for (int x : v)
      if (x != 0) nonzero = true;
    CHECK(nonzero);
  }
}

TEST_CASE("coordinate additivity for disjoint pairs") {
  // on a surface with disjoint essential pairs: S_{0,5}
  auto s = Surface({0, 5});
  auto curves = enumerate_curves(s, 2);
  REQUIRE(!curves.empty());
  int disjoint_pairs = 0;
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = i + 1; j < curves.size(); ++j)
      if (curves_disjoint(s, curves[i].coords, curves[j].coords)) {
        ++disjoint_pairs;
        auto t = trace(s.tri(), add_weights(curves[i].coords, curves[j].coords));
        REQUIRE(t.components.size() == 2);
        CHECK(t.components[0].coords == std::min(curves[i].coords, curves[j].coords));
        CHECK(t.components[1].coords == std::max(curves[i].coords, curves[j].coords));
      }
  CHECK(disjoint_pairs > 0);
}
