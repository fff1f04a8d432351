#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "slicefloer/alexander.hpp"
#include "slicefloer/catalog.hpp"
#include "slicefloer/criterion.hpp"
#include "slicefloer/errors.hpp"
#include "slicefloer/signature.hpp"

using namespace slicefloer;

namespace {

// ---------------------------------------------------------------------------
// Independent oracle: the labeled Alexander matrix assembled from scratch and
// evaluated by brute-force cofactor expansion, no shared code with the
// library's Bareiss route beyond the LaurentPoly value type.

LaurentPoly cofactor_det(const std::vector<std::vector<LaurentPoly>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly::constant(1);
  if (n == 1) return m[0][0];
  LaurentPoly acc;
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> sub(n - 1, std::vector<LaurentPoly>(n - 1));
    for (int i = 1; i < n; ++i) {
      int col = 0;
      for (int k = 0; k < n; ++k)
        if (k != j) sub[i - 1][col++] = m[i][k];
    }
    LaurentPoly term = m[0][j] * cofactor_det(sub);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

LaurentPoly oracle_alexander(const PDCode& pd) {
  const int n = pd.crossing_count();
  if (n == 0) return LaurentPoly::constant(1);
  // Arc of an edge: walk backwards over strands that pass over.
  std::vector<int> arc(2 * n + 1);
  for (int e = 1; e <= 2 * n; ++e) arc[e] = e;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& x : pd.crossings()) {
      int lo = std::min(arc[x[1]], arc[x[3]]);
      if (arc[x[1]] != lo || arc[x[3]] != lo) {
        arc[x[1]] = arc[x[3]] = lo;
        changed = true;
      }
    }
  }
  std::map<int, int> col;
  for (int e = 1; e <= 2 * n; ++e)
    if (!col.count(arc[e])) {
      int c = static_cast<int>(col.size());
      col[arc[e]] = c;
    }
  REQUIRE(static_cast<int>(col.size()) == n);
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly one = LaurentPoly::constant(1);
  std::vector<std::vector<LaurentPoly>> mat(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) {
    const auto& x = pd.crossings()[i];
    int a = col[arc[x[0]]], c = col[arc[x[2]]], o = col[arc[x[1]]];
    if (pd.crossing_sign(i) > 0) {
      mat[i][a] = mat[i][a] + t;
      mat[i][c] = mat[i][c] - one;
      mat[i][o] = mat[i][o] + one - t;
    } else {
      mat[i][a] = mat[i][a] + one;
      mat[i][c] = mat[i][c] - t;
      mat[i][o] = mat[i][o] + t - one;
    }
  }
  std::vector<std::vector<LaurentPoly>> minor(n - 1, std::vector<LaurentPoly>(n - 1));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) minor[i][j] = mat[i + 1][j + 1];
  return normalize_alexander(cofactor_det(minor));
}

// Independent oracle for the signature of small knots: eigenvalue signs of
// V + V^T for the standard genus-1 Seifert matrices.
int seifert_signature_2x2(long long a, long long b, long long c, long long d) {
  // symmetric [[2a, b+c], [b+c, 2d]]
  long long tr = 2 * a + 2 * d;
  long long det = 4 * a * d - (b + c) * (b + c);
  if (det > 0) return tr > 0 ? 2 : -2;
  if (det < 0) return 0;
  return tr > 0 ? 1 : (tr < 0 ? -1 : 0);
}

const char* kTrefoilPD = "[(1,4,2,5),(3,6,4,1),(5,2,6,3)]";
const char* kFig8PD = "[(4,2,5,1),(8,6,1,5),(6,3,7,4),(2,7,3,8)]";

const std::vector<KnotRecord>& catalog() {
  static std::vector<KnotRecord> records = load_catalog_strict(SLICEFLOER_TEST_CATALOG);
  return records;
}

}  // namespace

TEST_CASE("alexander_from_pd matches the cofactor oracle on the classics") {
  PDCode tre = PDCode::parse(kTrefoilPD);
  CHECK(alexander_from_pd(tre) == oracle_alexander(tre));
  CHECK(alexander_from_pd(tre).serialize() == "-1:1,-1,1");

  PDCode fig8 = PDCode::parse(kFig8PD);
  CHECK(alexander_from_pd(fig8) == oracle_alexander(fig8));
  CHECK(alexander_from_pd(fig8).serialize() == "-1:-1,3,-1");

  CHECK(alexander_from_pd(PDCode::parse("[]")).serialize() == "0:1");
}

TEST_CASE("alexander_from_pd matches the cofactor oracle across the catalog") {
  for (const auto& rec : catalog()) {
    if (!rec.pd || rec.pd->crossing_count() == 0) continue;
    CAPTURE(rec.name);
    CHECK(alexander_from_pd(*rec.pd) == oracle_alexander(*rec.pd));
  }
}

TEST_CASE("alexander polynomials are symmetric with Delta(1) = 1") {
  for (const auto& rec : catalog()) {
    if (!rec.pd) continue;
    LaurentPoly d = alexander_from_pd(*rec.pd);
    CAPTURE(rec.name);
    CHECK(d.is_palindromic());
    CHECK(d.evaluate(1) == 1);
  }
}

TEST_CASE("signature via Goeritz matches the Seifert-matrix oracle") {
  // Right-handed trefoil: V = [[-1,1],[0,-1]]; figure-eight: V = [[1,-1],[0,-1]].
  CHECK(seifert_signature_2x2(-1, 1, 0, -1) == -2);
  CHECK(seifert_signature_2x2(1, -1, 0, -1) == 0);

  const auto& t31 = find_knot(catalog(), "3_1");
  CHECK(signature_goeritz(*t31.pd) == -2);
  const auto& f41 = find_knot(catalog(), "4_1");
  CHECK(signature_goeritz(*f41.pd) == 0);
  CHECK(signature_goeritz(PDCode::parse("[]")) == 0);
  CHECK(signature_goeritz(PDCode::parse("[(1,2,2,1)]")) == 0);
}

TEST_CASE("signature magnitudes match the published table") {
  std::map<std::string, int> expected = {
      {"0_1", 0}, {"3_1", 2}, {"4_1", 0}, {"5_1", 4}, {"5_2", 2},
      {"6_1", 0}, {"6_2", 2}, {"6_3", 0}, {"7_1", 6}, {"7_2", 2},
      {"7_3", 4}, {"7_4", 2}, {"7_5", 4}, {"7_6", 2}, {"7_7", 0}};
  for (const auto& rec : catalog()) {
    CAPTURE(rec.name);
    CHECK(std::abs(rec.signature) == expected.at(rec.name));
    if (rec.pd) CHECK(signature_goeritz(*rec.pd) == rec.signature);
  }
}

TEST_CASE("signature negates under mirroring and stays even") {
  for (const auto& rec : catalog()) {
    if (!rec.pd) continue;
    CAPTURE(rec.name);
    int sig = signature_goeritz(*rec.pd);
    CHECK(sig % 2 == 0);
    CHECK(signature_goeritz(rec.pd->mirrored()) == -sig);
  }
}

TEST_CASE("symmetric_matrix_signature on exact integer matrices") {
  CHECK(symmetric_matrix_signature({}) == 0);
  CHECK(symmetric_matrix_signature({{5}}) == 1);
  CHECK(symmetric_matrix_signature({{-2, 1}, {1, -2}}) == -2);
  CHECK(symmetric_matrix_signature({{2, -1}, {-1, -2}}) == 0);
  CHECK(symmetric_matrix_signature({{0, 1}, {1, 0}}) == 0);
  CHECK(symmetric_matrix_signature({{1, 0, 0}, {0, 0, 0}, {0, 0, -3}}) == 0);
  CHECK(symmetric_matrix_signature({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}) == 3);
}

TEST_CASE("rolling criterion: the three pinned examples") {
  LaurentPoly trefoil = LaurentPoly::parse("-1:1,-1,1");
  for (int sigma : {2, -2}) {
    CriterionVerdict v = rolling_criterion(trefoil, sigma);
    CHECK_FALSE(v.passes);
    REQUIRE(v.matched_m.has_value());
    CHECK(*v.matched_m == 1);
  }

  CriterionVerdict fig8 = rolling_criterion(LaurentPoly::parse("-1:-1,3,-1"), 0);
  CHECK(fig8.passes);
  CHECK_FALSE(fig8.matched_m.has_value());

  CriterionVerdict unknot = rolling_criterion(LaurentPoly::constant(1), 0);
  CHECK_FALSE(unknot.passes);
  CHECK(*unknot.matched_m == 0);
}

TEST_CASE("rolling criterion rejects bad input and is mirror invariant") {
  CHECK_THROWS_AS(rolling_criterion(LaurentPoly::constant(1), 1), UserError);
  CHECK_THROWS_AS(rolling_criterion(LaurentPoly::parse("0:1,1"), 0), UserError);
  for (const auto& rec : catalog()) {
    LaurentPoly d = knot_alexander(rec);
    CAPTURE(rec.name);
    CHECK(rolling_criterion(d, rec.signature).passes ==
          rolling_criterion(d, -rec.signature).passes);
  }
}

TEST_CASE("torus knots fail the criterion, twist knots pass") {
  auto verdict = [&](const char* name) {
    const auto& rec = find_knot(catalog(), name);
    return rolling_criterion(knot_alexander(rec), rec.signature);
  };
  CHECK_FALSE(verdict("3_1").passes);
  CHECK_FALSE(verdict("5_1").passes);
  CHECK_FALSE(verdict("7_1").passes);
  CHECK(*verdict("5_1").matched_m == 2);
  CHECK(*verdict("7_1").matched_m == 3);
  for (const char* name : {"4_1", "5_2", "6_1", "6_2", "6_3", "7_2", "7_3", "7_4",
                           "7_5", "7_6", "7_7"})
    CHECK(verdict(name).passes);
}
