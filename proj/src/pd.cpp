#include "slicefloer/pd.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "slicefloer/errors.hpp"

namespace slicefloer {

namespace {

int successor(int edge, int total) { return edge % total + 1; }

// Union-find with parity relative to the root.
struct ParityUF {
  std::vector<int> parent;
  std::vector<int> parity;  // color offset to parent
  explicit ParityUF(int n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    parity[x] ^= p;
    return {r, parity[x]};
  }
  // Returns false on contradiction.
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

}  // namespace

PDCode::PDCode(std::vector<std::array<int, 4>> crossings)
    : crossings_(std::move(crossings)) {
  const int n = crossing_count();
  if (n == 0) return;
  const int total = 2 * n;
  std::vector<int> seen(total + 1, 0);
  for (const auto& x : crossings_) {
    for (int e : x) {
      if (e < 1 || e > total)
        throw UserError("pd: edge label " + std::to_string(e) + " out of range 1.." +
                        std::to_string(total));
      ++seen[e];
    }
  }
  for (int e = 1; e <= total; ++e)
    if (seen[e] != 2)
      throw UserError("pd: edge label " + std::to_string(e) + " occurs " +
                      std::to_string(seen[e]) + " times; expected 2");
  for (int i = 0; i < n; ++i) {
    const auto& x = crossings_[i];
    if (successor(x[0], total) != x[2])
      throw UserError("pd: crossing " + std::to_string(i) +
                      ": outgoing under-edge is not the successor of the incoming one "
                      "(labels must be in traversal order)");
    bool bd = successor(x[1], total) == x[3];
    bool db = successor(x[3], total) == x[1];
    if (!bd && !db)
      throw UserError("pd: crossing " + std::to_string(i) +
                      ": over-edges are not consecutive in the traversal");
  }
}

PDCode PDCode::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw UserError("pd: expected \"[(a,b,c,d),...]\", got \"" + text + "\"");
  std::string body = s.substr(1, s.size() - 2);
  std::vector<std::array<int, 4>> crossings;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] == ',') ++pos;
    if (pos >= body.size()) break;
    if (body[pos] != '(')
      throw UserError("pd: expected '(' in \"" + text + "\"");
    std::size_t close = body.find(')', pos);
    if (close == std::string::npos)
      throw UserError("pd: unmatched '(' in \"" + text + "\"");
    std::string tup = body.substr(pos + 1, close - pos - 1);
    std::array<int, 4> x{};
    std::size_t tpos = 0;
    for (int k = 0; k < 4; ++k) {
      std::size_t comma = tup.find(',', tpos);
      if (comma == std::string::npos) comma = tup.size();
      const char* b = tup.data() + tpos;
      const char* e = tup.data() + comma;
      auto [p, ec] = std::from_chars(b, e, x[k]);
      if (ec != std::errc() || p != e || b == e)
        throw UserError("pd: bad crossing tuple \"(" + tup + ")\"");
      tpos = comma + 1;
    }
    if (tpos <= tup.size())
      if (tup.find(',', tpos) != std::string::npos)
        throw UserError("pd: crossing tuple \"(" + tup + ")\" has more than 4 entries");
    crossings.push_back(x);
    pos = close + 1;
  }
  return PDCode(std::move(crossings));
}

std::string PDCode::serialize() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < crossing_count(); ++i) {
    if (i) os << ",";
    const auto& x = crossings_[i];
    os << "(" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << ")";
  }
  os << "]";
  return os.str();
}

PDCode PDCode::mirrored() const {
  std::vector<std::array<int, 4>> out;
  out.reserve(crossings_.size());
  for (const auto& x : crossings_) out.push_back({x[0], x[3], x[2], x[1]});
  return PDCode(std::move(out));
}

int PDCode::crossing_sign(int i) const {
  const auto& x = crossings_[i];
  const int total = 2 * crossing_count();
  if (successor(x[3], total) == x[1]) return 1;
  return -1;
}

PDFaces trace_faces(const PDCode& pd) {
  const int n = pd.crossing_count();
  PDFaces out;
  out.corner_face.assign(n, {-1, -1, -1, -1});
  if (n == 0) return out;

  // Endpoints of each edge as (crossing, slot) pairs.
  std::vector<std::vector<std::pair<int, int>>> ends(2 * n + 1);
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < 4; ++s) ends[pd.crossings()[i][s]].push_back({i, s});

  // A face is an orbit of directed edge-ends: entering a crossing along the
  // half-edge at slot s, the face on the left exits along slot (s+3)%4 and
  // owns the corner between those two slots.
  std::vector<std::array<int, 4>> visited(n, {0, 0, 0, 0});
  for (int i0 = 0; i0 < n; ++i0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      if (visited[i0][s0]) continue;
      int face = out.face_count++;
      int i = i0, s = s0;
      while (!visited[i][s]) {
        visited[i][s] = 1;
        int exit_slot = (s + 3) % 4;
        out.corner_face[i][exit_slot] = face;
        int e = pd.crossings()[i][exit_slot];
        const auto& ee = ends[e];
        auto [i2, s2] = ee[0].first == i && ee[0].second == exit_slot ? ee[1] : ee[0];
        i = i2;
        s = s2;
      }
    }
  }
  if (out.face_count != n + 2)
    throw UserError("pd: region count " + std::to_string(out.face_count) +
                    " violates Euler's formula (expected " + std::to_string(n + 2) +
                    "); not a planar knot diagram");

  // Checkerboard coloring: opposite corners at a crossing share a color,
  // adjacent corners differ.
  ParityUF uf(out.face_count);
  bool ok = true;
  for (int i = 0; i < n; ++i) {
    const auto& cf = out.corner_face[i];
    ok = ok && uf.unite(cf[0], cf[2], 0);
    ok = ok && uf.unite(cf[1], cf[3], 0);
    ok = ok && uf.unite(cf[0], cf[1], 1);
  }
  if (!ok) throw UserError("pd: regions admit no checkerboard coloring");
  auto [root0, p0] = uf.find(0);
  out.color.assign(out.face_count, 0);
  for (int f = 0; f < out.face_count; ++f) {
    auto [r, p] = uf.find(f);
    if (r != root0)
      throw UserError("pd: diagram is not connected");
    out.color[f] = p ^ p0;
  }
  return out;
}

}  // namespace slicefloer
