#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "slicefloer/alexander.hpp"
#include "slicefloer/diagram_build.hpp"
#include "slicefloer/errors.hpp"
#include "slicefloer/grid.hpp"
#include "slicefloer/grid_homology.hpp"
#include "slicefloer/laurent.hpp"
#include "slicefloer/pd.hpp"

using namespace slicefloer;

namespace {

// Random valid grids for property checks.
std::vector<GridDiagram> random_grids(int count, int min_n, int max_n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<GridDiagram> out;
  while (static_cast<int>(out.size()) < count) {
    int n = min_n + static_cast<int>(rng() % (max_n - min_n + 1));
    std::vector<int> xs(n), os(n);
    for (int i = 0; i < n; ++i) xs[i] = os[i] = i;
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(os.begin(), os.end(), rng);
    try {
      out.emplace_back(xs, os);
    } catch (const UserError&) {
      // disconnected or overlapping; draw again
    }
  }
  return out;
}

}  // namespace

TEST_CASE("laurent arithmetic and serialization") {
  LaurentPoly t = LaurentPoly::monomial(1, 1);
  LaurentPoly p = t + LaurentPoly::constant(-1) + LaurentPoly::monomial(1, -1);
  CHECK(p.serialize() == "-1:1,-1,1");
  CHECK(LaurentPoly::parse("-1:1,-1,1") == p);
  CHECK(p.is_palindromic());
  CHECK(p.evaluate(1) == 1);
  CHECK(p.evaluate(-1) == -3);
  CHECK(p.span() == 2);

  LaurentPoly q = p * p;
  CHECK(q.coeff(0) == 3);
  CHECK(q.coeff(2) == 1);
  CHECK(q.divide_exact(p) == p);
  CHECK_THROWS_AS((q + LaurentPoly::constant(1)).divide_exact(p), InternalError);

  CHECK(LaurentPoly::zero().is_zero());
  CHECK((p - p).is_zero());
  CHECK(p.reciprocal() == p);
  CHECK(LaurentPoly::monomial(2, 3).reciprocal() == LaurentPoly::monomial(2, -3));

  CHECK_THROWS_AS(LaurentPoly::parse("junk"), UserError);
  CHECK_THROWS_AS(LaurentPoly::parse("0:1,x"), UserError);
}

TEST_CASE("normalize_alexander centers, symmetrizes, and fixes the sign") {
  // t^3 - t^4 + t^5 is (t - 1 + t^-1) * -t^4 up to sign.
  LaurentPoly raw(3, {1, -1, 1});
  CHECK(normalize_alexander(raw).serialize() == "-1:1,-1,1");
  CHECK(normalize_alexander(-raw).serialize() == "-1:1,-1,1");
  CHECK_THROWS_AS(normalize_alexander(LaurentPoly(0, {1, 1})), InternalError);
}

TEST_CASE("grid parsing accepts the two legal 2x2 diagrams") {
  GridDiagram a = GridDiagram::parse("1,0;0,1");
  CHECK(a.size() == 2);
  CHECK(a.serialize() == "1,0;0,1");
  GridDiagram b = GridDiagram::parse("0,1;1,0");
  CHECK(b.size() == 2);
}

TEST_CASE("grid validation rejects malformed input") {
  CHECK_THROWS_AS(GridDiagram::parse("1,0"), UserError);            // no ';'
  CHECK_THROWS_AS(GridDiagram::parse("1,1;0,0"), UserError);        // not a permutation
  CHECK_THROWS_AS(GridDiagram::parse("1,0;1,0"), UserError);        // shared cells
  CHECK_THROWS_AS(GridDiagram::parse("a,b;0,1"), UserError);        // junk
  CHECK_THROWS_AS(GridDiagram::parse("1,0,2;0,1"), UserError);      // ragged
  // Two split unknots: traces as two components.
  CHECK_THROWS_AS(GridDiagram::parse("1,0,3,2;0,1,2,3"), UserError);
}

TEST_CASE("serialization round-trip and mirror involution on random grids") {
  for (const auto& g : random_grids(40, 3, 6, 20240817)) {
    CHECK(GridDiagram::parse(g.serialize()) == g);
    CHECK(g.mirror().mirror() == g);
    CHECK(g.rotated_rows(1).rotated_rows(g.size() - 1) == g);
    CHECK(g.rotated_columns(2).rotated_columns(g.size() - 2) == g);
  }
}

TEST_CASE("mirror of the 2x2 unknot is a 2x2 unknot") {
  GridDiagram u = GridDiagram::parse("1,0;0,1");
  GridDiagram m = u.mirror();
  CHECK(m.size() == 2);
  CHECK(hat_dims(m).total() == 1);
}

TEST_CASE("the 5x5 example grid presents the trefoil") {
  GridDiagram g = GridDiagram::parse("1,2,3,4,0;4,0,1,2,3");
  CHECK(alexander_from_grid(g).serialize() == "-1:1,-1,1");
  CHECK(alexander_from_pd(pd_from_grid(g)).serialize() == "-1:1,-1,1");
}

TEST_CASE("mirror duality of hat dims on the trefoil") {
  GridDiagram g = GridDiagram::parse("1,2,3,4,0;4,0,1,2,3");
  CHECK(hat_dims(g.mirror()) == hat_dims(g).mirror_dual());
}

TEST_CASE("connected sum: unit law, size, and single component") {
  GridDiagram u = GridDiagram::parse("1,0;0,1");
  GridDiagram t = GridDiagram::parse("1,2,3,4,0;4,0,1,2,3");
  GridDiagram sum = connected_sum(u, t);
  CHECK(sum.size() == 7);
  CHECK(hat_dims(sum) == hat_dims(t));
  GridDiagram sum2 = connected_sum(t, u);
  CHECK(hat_dims(sum2) == hat_dims(t));
  for (const auto& g : random_grids(10, 3, 5, 555)) {
    GridDiagram s = connected_sum(g, u);
    CHECK(s.size() == g.size() + 2);  // construction validates the trace
  }
}

TEST_CASE("connected sum multiplies Alexander polynomials") {
  GridDiagram t = GridDiagram::parse("1,2,3,4,0;4,0,1,2,3");
  LaurentPoly delta = alexander_from_grid(t);
  GridDiagram sum = connected_sum(t.mirror(), t);
  CHECK(alexander_from_grid(sum) == delta * delta);
}

TEST_CASE("pd parsing, round-trip, and validation") {
  PDCode tre = PDCode::parse("[(1,4,2,5),(3,6,4,1),(5,2,6,3)]");
  CHECK(tre.crossing_count() == 3);
  CHECK(PDCode::parse(tre.serialize()) == tre);
  CHECK(PDCode::parse("[]").crossing_count() == 0);

  CHECK_THROWS_AS(PDCode::parse("[(1,4,2,5)"), UserError);
  CHECK_THROWS_AS(PDCode::parse("[(1,2,3)]"), UserError);
  // label 7 out of range / wrong multiplicity
  CHECK_THROWS_AS(PDCode::parse("[(1,4,2,7),(3,6,4,1),(5,2,6,3)]"), UserError);
  // under-out edge not the successor of under-in
  CHECK_THROWS_AS(PDCode::parse("[(2,4,1,5),(3,6,4,1),(5,2,6,3)]"), UserError);
}

TEST_CASE("pd mirror is an involution that flips crossing signs") {
  PDCode tre = PDCode::parse("[(1,4,2,5),(3,6,4,1),(5,2,6,3)]");
  CHECK(tre.mirrored().mirrored() == tre);
  for (int i = 0; i < 3; ++i)
    CHECK(tre.mirrored().crossing_sign(i) == -tre.crossing_sign(i));
}

TEST_CASE("face tracing: counts, Euler formula, checkerboard classes") {
  PDCode tre = PDCode::parse("[(1,4,2,5),(3,6,4,1),(5,2,6,3)]");
  PDFaces faces = trace_faces(tre);
  CHECK(faces.face_count == 5);
  // Corner multiset per face: the two trefoil triangle faces take one color,
  // the three bigons the other.
  std::map<int, int> corners_per_face;
  for (const auto& cf : faces.corner_face)
    for (int f : cf) corners_per_face[f]++;
  std::multiset<int> sizes;
  for (auto& [f, c] : corners_per_face) sizes.insert(c);
  CHECK(sizes == std::multiset<int>({2, 2, 2, 3, 3}));
  int color_of_triangle = -1;
  for (auto& [f, c] : corners_per_face) {
    if (c == 3) {
      if (color_of_triangle < 0) color_of_triangle = faces.color[f];
      CHECK(faces.color[f] == color_of_triangle);
    } else {
      CHECK(faces.color[f] != color_of_triangle);
    }
  }
}

TEST_CASE("pd_from_grid emits a traversal-ordered code of the same knot") {
  for (const auto& g : random_grids(15, 4, 6, 99)) {
    PDCode pd = pd_from_grid(g);
    if (pd.crossing_count() == 0) continue;
    CHECK(PDCode::parse(pd.serialize()) == pd);  // reparse revalidates
    CHECK(alexander_from_pd(pd) == alexander_from_grid(g));
  }
}

TEST_CASE("pd_from_braid rejects non-knot closures and bad words") {
  CHECK_THROWS_AS(pd_from_braid(2, {1, 1}), UserError);       // Hopf link: 2 components
  CHECK_THROWS_AS(pd_from_braid(3, {1, 1, 1}), UserError);    // strand 3 unused
  CHECK_THROWS_AS(pd_from_braid(2, {5}), UserError);          // no such generator
  CHECK_THROWS_AS(pd_from_braid(1, {1}), UserError);
  PDCode tre = pd_from_braid(2, {1, 1, 1});
  CHECK(tre.crossing_count() == 3);
  CHECK(alexander_from_pd(tre).serialize() == "-1:1,-1,1");
}
