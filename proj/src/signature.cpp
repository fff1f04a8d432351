#include "slicefloer/signature.hpp"

#include "slicefloer/errors.hpp"

namespace slicefloer {

namespace {

using Wide = __int128;

std::vector<Wide> characteristic_polynomial(const std::vector<std::vector<std::int64_t>>& a) {
  const int k = static_cast<int>(a.size());
  // p(x) = x^k + c[1] x^(k-1) + ... + c[k]; Faddeev-LeVerrier keeps every
  // intermediate integral.
  std::vector<std::vector<Wide>> m(k, std::vector<Wide>(k, 0));
  for (int i = 0; i < k; ++i) m[i][i] = 1;
  std::vector<Wide> c(k + 1, 0);
  c[0] = 1;
  for (int j = 1; j <= k; ++j) {
    // m <- a * m
    std::vector<std::vector<Wide>> prod(k, std::vector<Wide>(k, 0));
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < k; ++l) {
        Wide acc = 0;
        for (int h = 0; h < k; ++h) acc += static_cast<Wide>(a[i][h]) * m[h][l];
        prod[i][l] = acc;
      }
    m = std::move(prod);
    Wide tr = 0;
    for (int i = 0; i < k; ++i) tr += m[i][i];
    if (tr % j != 0) throw InternalError("charpoly: non-integral trace step");
    c[j] = -tr / j;
    for (int i = 0; i < k; ++i) m[i][i] += c[j];
  }
  return c;
}

int sign_variations(const std::vector<Wide>& coeffs) {
  int var = 0, last = 0;
  for (Wide c : coeffs) {
    if (c == 0) continue;
    int s = c > 0 ? 1 : -1;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

}  // namespace

int symmetric_matrix_signature(const std::vector<std::vector<std::int64_t>>& m) {
  const int k = static_cast<int>(m.size());
  if (k == 0) return 0;
  std::vector<Wide> p = characteristic_polynomial(m);
  // Descartes' rule is exact here: all roots of a symmetric matrix are real.
  int positive = sign_variations(p);
  std::vector<Wide> q = p;
  for (int i = 0; i <= k; ++i)
    if ((k - i) % 2 == 1) q[i] = -q[i];
  int negative = sign_variations(q);
  return positive - negative;
}

namespace {

struct ColoringSide {
  int sig_goeritz;
  int mu;
};

// Corners 1 and 3 (the quadrants swept when the over-strand rotates
// counterclockwise onto the under-strand) form one diagonal pair, corners 0
// and 2 the other. eta(c) = +1 when the white quadrants are corners {0,2},
// -1 when they are corners {1,3}; a crossing contributes to the correction
// term exactly when its sign agrees with eta, i.e. when the oriented
// smoothing merges the two surface quadrants.
ColoringSide evaluate_side(const PDCode& pd, const PDFaces& faces, int white_color) {
  const int n = pd.crossing_count();
  std::vector<int> white_index(faces.face_count, -1);
  int white_count = 0;
  for (int f = 0; f < faces.face_count; ++f)
    if (faces.color[f] == white_color) white_index[f] = white_count++;

  std::vector<std::vector<std::int64_t>> g(white_count,
                                           std::vector<std::int64_t>(white_count, 0));
  int mu = 0;
  for (int i = 0; i < n; ++i) {
    const auto& cf = faces.corner_face[i];
    int eta;
    int u, v;
    if (faces.color[cf[0]] == white_color) {
      eta = 1;
      u = white_index[cf[0]];
      v = white_index[cf[2]];
    } else {
      eta = -1;
      u = white_index[cf[1]];
      v = white_index[cf[3]];
    }
    if (pd.crossing_sign(i) == eta) mu += eta;
    if (u != v) {
      g[u][v] -= eta;
      g[v][u] -= eta;
      g[u][u] += eta;
      g[v][v] += eta;
    }
  }
  // Delete one region's row and column.
  std::vector<std::vector<std::int64_t>> minor(white_count - 1,
                                               std::vector<std::int64_t>(white_count - 1));
  for (int i = 1; i < white_count; ++i)
    for (int j = 1; j < white_count; ++j) minor[i - 1][j - 1] = g[i][j];
  return {symmetric_matrix_signature(minor), mu};
}

}  // namespace

int signature_goeritz(const PDCode& pd) {
  if (pd.crossing_count() <= 1) return 0;
  PDFaces faces = trace_faces(pd);
  ColoringSide s0 = evaluate_side(pd, faces, 0);
  ColoringSide s1 = evaluate_side(pd, faces, 1);
  int sigma0 = s0.sig_goeritz - s0.mu;
  int sigma1 = s1.sig_goeritz - s1.mu;
  if (sigma0 != sigma1)
    throw InternalError("signature: the two checkerboard surfaces disagree (" +
                        std::to_string(sigma0) + " vs " + std::to_string(sigma1) + ")");
  if (sigma0 % 2 != 0)
    throw InternalError("signature: odd value " + std::to_string(sigma0));
  return sigma0;
}

}  // namespace slicefloer
