#include "slicefloer/alexander.hpp"

#include <map>
#include <numeric>

#include "slicefloer/errors.hpp"
#include "slicefloer/grid_homology.hpp"

namespace slicefloer {

namespace {

struct UF {
  std::vector<int> parent;
  explicit UF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

// Exact divisions are guaranteed by the Bareiss recurrence over any integral
// domain; row swaps only flip the sign.
LaurentPoly laurent_matrix_determinant(std::vector<std::vector<LaurentPoly>> m) {
  const int k = static_cast<int>(m.size());
  if (k == 0) return LaurentPoly::constant(1);
  LaurentPoly prev = LaurentPoly::constant(1);
  for (int p = 0; p < k - 1; ++p) {
    if (m[p][p].is_zero()) {
      int swap_row = -1;
      for (int i = p + 1; i < k; ++i)
        if (!m[i][p].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return LaurentPoly::zero();
      std::swap(m[p], m[swap_row]);
    }
    for (int i = p + 1; i < k; ++i)
      for (int j = p + 1; j < k; ++j)
        m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]).divide_exact(prev);
    prev = m[p][p];
  }
  return m[k - 1][k - 1];
}

LaurentPoly alexander_from_pd(const PDCode& pd) {
  const int n = pd.crossing_count();
  if (n == 0) return LaurentPoly::constant(1);

  // Arcs: edges merged across over-passes.
  UF arcs(2 * n + 1);
  for (const auto& x : pd.crossings()) arcs.unite(x[1], x[3]);
  std::map<int, int> arc_col;
  for (int e = 1; e <= 2 * n; ++e) {
    int root = arcs.find(e);
    if (!arc_col.count(root)) {
      int col = static_cast<int>(arc_col.size());
      arc_col[root] = col;
    }
  }
  if (static_cast<int>(arc_col.size()) != n)
    throw UserError("pd: expected " + std::to_string(n) + " arcs, found " +
                    std::to_string(arc_col.size()));

  // Fox-calculus rows of the labeled Alexander matrix. For the crossing
  // relation x_out = x_over^e x_in x_over^-e the abelianized derivatives are
  // (t, -1, 1-t) on (in, out, over) for one sign and (1, -t, t-1) for the
  // other; a global t <-> 1/t ambiguity is removed by normalization.
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly one = LaurentPoly::constant(1);
  std::vector<std::vector<LaurentPoly>> mat(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) {
    const auto& x = pd.crossings()[i];
    int in_col = arc_col[arcs.find(x[0])];
    int out_col = arc_col[arcs.find(x[2])];
    int over_col = arc_col[arcs.find(x[1])];
    if (pd.crossing_sign(i) > 0) {
      mat[i][in_col] = mat[i][in_col] + t;
      mat[i][out_col] = mat[i][out_col] - one;
      mat[i][over_col] = mat[i][over_col] + (one - t);
    } else {
      mat[i][in_col] = mat[i][in_col] + one;
      mat[i][out_col] = mat[i][out_col] - t;
      mat[i][over_col] = mat[i][over_col] + (t - one);
    }
  }

  // Any size-(n-1) minor equals Delta up to a unit.
  std::vector<std::vector<LaurentPoly>> minor(n - 1, std::vector<LaurentPoly>(n - 1));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = mat[i][j];
  LaurentPoly det = laurent_matrix_determinant(std::move(minor));
  if (det.is_zero())
    throw UserError("pd: Alexander determinant vanished; not a knot diagram");
  return normalize_alexander(det);
}

LaurentPoly alexander_from_grid(const GridDiagram& g, int max_size) {
  const int n = g.size();
  std::map<int, std::int64_t> euler;  // A -> signed count
  for_each_state(g, max_size, [&](const std::vector<int>&, int m, int a) {
    euler[a] += ((m % 2) + 2) % 2 == 0 ? 1 : -1;
  });
  LaurentPoly chi;
  for (const auto& [a, c] : euler) chi = chi + LaurentPoly::monomial(c, a);
  if (chi.is_zero()) throw InternalError("grid euler characteristic vanished");

  const LaurentPoly w = LaurentPoly::constant(1) - LaurentPoly::monomial(1, -1);
  for (int k = 0; k < n - 1; ++k) chi = chi.divide_exact(w);
  return normalize_alexander(chi);
}

}  // namespace slicefloer
