#include "slicefloer/diagram_build.hpp"

#include <map>
#include <optional>

#include "slicefloer/errors.hpp"

namespace slicefloer {

namespace {

// Compass sides in counterclockwise order.
enum Side { E = 0, N = 1, W = 2, S = 3 };

std::array<int, 4> tuple_from_sides(int under_in_side, const std::array<int, 4>& edge_at_side) {
  std::array<int, 4> tuple{};
  for (int k = 0; k < 4; ++k) tuple[k] = edge_at_side[(under_in_side + k) % 4];
  return tuple;
}

std::vector<int> inverse(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

PDCode pd_from_grid(const GridDiagram& g) {
  const int n = g.size();
  const auto& xs = g.xs();
  const auto& os = g.os();
  std::vector<int> xs_inv = inverse(xs);
  std::vector<int> os_inv = inverse(os);

  std::map<std::pair<int, int>, int> crossing_id;  // (column, row) -> id
  for (int c = 0; c < n; ++c) {
    int vlo = std::min(xs[c], os[c]), vhi = std::max(xs[c], os[c]);
    for (int r = vlo + 1; r < vhi; ++r) {
      int hlo = std::min(os_inv[r], xs_inv[r]), hhi = std::max(os_inv[r], xs_inv[r]);
      if (hlo < c && c < hhi) {
        int id = static_cast<int>(crossing_id.size());
        crossing_id[{c, r}] = id;
      }
    }
  }
  const int ncross = static_cast<int>(crossing_id.size());
  if (ncross == 0) return PDCode();

  // Walk the knot, recording crossing passages in order. Vertical segments
  // pass over, horizontal segments under.
  struct Passage {
    int id;
    bool over;
    int dir;  // +1 up / right, -1 down / left
  };
  std::vector<Passage> passages;
  int c = 0;
  do {
    int dv = os[c] > xs[c] ? 1 : -1;
    for (int r = xs[c] + dv; r != os[c]; r += dv) {
      auto it = crossing_id.find({c, r});
      if (it != crossing_id.end()) passages.push_back({it->second, true, dv});
    }
    int r = os[c];
    int c_to = xs_inv[r];
    int dh = c_to > c ? 1 : -1;
    for (int cc = c + dh; cc != c_to; cc += dh) {
      auto it = crossing_id.find({cc, r});
      if (it != crossing_id.end()) passages.push_back({it->second, false, dh});
    }
    c = c_to;
  } while (c != 0);
  if (static_cast<int>(passages.size()) != 2 * ncross)
    throw InternalError("pd_from_grid: expected " + std::to_string(2 * ncross) +
                        " passages, walked " + std::to_string(passages.size()));

  // Edge arriving at passage j carries label j+1.
  const int total = 2 * ncross;
  std::vector<std::array<int, 4>> edge_at_side(ncross, {0, 0, 0, 0});
  std::vector<int> under_in_side(ncross, -1);
  for (int j = 0; j < total; ++j) {
    const Passage& p = passages[j];
    int in_label = j + 1;
    int out_label = (j + 1) % total + 1;
    if (p.over) {
      int in_side = p.dir > 0 ? S : N;
      edge_at_side[p.id][in_side] = in_label;
      edge_at_side[p.id][(in_side + 2) % 4] = out_label;
    } else {
      int in_side = p.dir > 0 ? W : E;
      edge_at_side[p.id][in_side] = in_label;
      edge_at_side[p.id][(in_side + 2) % 4] = out_label;
      under_in_side[p.id] = in_side;
    }
  }

  std::vector<std::array<int, 4>> tuples(ncross);
  for (int i = 0; i < ncross; ++i)
    tuples[i] = tuple_from_sides(under_in_side[i], edge_at_side[i]);
  return PDCode(std::move(tuples));
}

PDCode pd_from_braid(int strands, const std::vector<int>& word) {
  if (strands < 2) throw UserError("braid: need at least 2 strands");
  const int n = static_cast<int>(word.size());
  if (n == 0) throw UserError("braid: empty word");

  enum Port { NW = 0, NE = 1, SW = 2, SE = 3 };
  using Plug = std::pair<int, int>;  // (crossing, port)
  std::map<Plug, Plug> mate;
  std::vector<std::optional<Plug>> open(strands + 1), first(strands + 1);

  auto connect = [&](Plug a, Plug b) {
    mate[a] = b;
    mate[b] = a;
  };

  for (int t = 0; t < n; ++t) {
    int i = std::abs(word[t]);
    if (i < 1 || i >= strands)
      throw UserError("braid: generator index " + std::to_string(word[t]) + " out of range");
    for (int pos : {i, i + 1}) {
      Plug up = {t, pos == i ? NW : NE};
      if (open[pos])
        connect(*open[pos], up);
      else
        first[pos] = up;
      open[pos] = Plug{t, pos == i ? SW : SE};
    }
  }
  for (int pos = 1; pos <= strands; ++pos) {
    if (!open[pos]) throw UserError("braid: strand " + std::to_string(pos) + " is unused");
    connect(*open[pos], *first[pos]);
  }

  // Strands swap positions at every crossing; the sign only picks which one
  // passes over. Positive letter: the strand entering at NW is the over one.
  auto through = [](int, int in_port) { return in_port == NW ? SE : SW; };
  auto is_under_in = [&](int t, int in_port) {
    return (word[t] > 0) == (in_port == NE);
  };

  // Walk the closure downward through the braid, labeling edges in traversal
  // order: the edge arriving at passage j is j+1.
  const int total = 2 * n;
  std::vector<std::array<int, 4>> edge_at_port(n, {0, 0, 0, 0});
  Plug cur = {0, NW};
  int visited = 0;
  for (int j = 0; j < total; ++j) {
    auto [t, in_port] = cur;
    if (edge_at_port[t][in_port] != 0)
      throw UserError("braid: closure is not a knot (multiple components)");
    edge_at_port[t][in_port] = j + 1;
    int out_port = through(t, in_port);
    edge_at_port[t][out_port] = (j + 1) % total + 1;
    cur = mate.at({t, out_port});
    ++visited;
  }
  if (cur != Plug{0, NW} || visited != total)
    throw UserError("braid: closure is not a knot (multiple components)");

  // Port bearings: NE=45, NW=135, SW=225, SE=315 degrees; counterclockwise
  // from a port: NE -> NW -> SW -> SE.
  static const int ccw_from[4][4] = {
      /* NW */ {NW, SW, SE, NE},
      /* NE */ {NE, NW, SW, SE},
      /* SW */ {SW, SE, NE, NW},
      /* SE */ {SE, NE, NW, SW},
  };
  std::vector<std::array<int, 4>> tuples(n);
  for (int t = 0; t < n; ++t) {
    int uin = is_under_in(t, NW) ? NW : NE;
    for (int k = 0; k < 4; ++k) tuples[t][k] = edge_at_port[t][ccw_from[uin][k]];
  }
  return PDCode(std::move(tuples));
}

}  // namespace slicefloer
