#include "slicefloer/grid_homology.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <mutex>
#include <thread>

#include "slicefloer/errors.hpp"

namespace slicefloer {

// ---------------------------------------------------------------------------
// BigradedDims

void BigradedDims::add(int maslov, int alexander, long long dim) {
  if (dim == 0) return;
  auto key = Key{maslov, alexander};
  auto it = entries_.find(key);
  long long v = (it == entries_.end() ? 0 : it->second) + dim;
  if (v < 0) throw InternalError("bigraded dims: negative dimension");
  if (v == 0)
    entries_.erase(key);
  else
    entries_[key] = v;
}

long long BigradedDims::at(int maslov, int alexander) const {
  auto it = entries_.find({maslov, alexander});
  return it == entries_.end() ? 0 : it->second;
}

long long BigradedDims::total() const {
  long long t = 0;
  for (const auto& [k, v] : entries_) t += v;
  return t;
}

std::map<int, long long> BigradedDims::per_alexander() const {
  std::map<int, long long> out;
  for (const auto& [k, v] : entries_) out[k.second] += v;
  return out;
}

int BigradedDims::max_alexander() const {
  if (entries_.empty()) throw InternalError("bigraded dims: empty");
  int best = entries_.begin()->first.second;
  for (const auto& [k, v] : entries_) best = std::max(best, k.second);
  return best;
}

bool BigradedDims::is_symmetric() const {
  for (const auto& [k, v] : entries_)
    if (at(k.first - 2 * k.second, -k.second) != v) return false;
  return true;
}

BigradedDims BigradedDims::mirror_dual() const {
  BigradedDims out;
  for (const auto& [k, v] : entries_) out.add(-k.first, -k.second, v);
  return out;
}

BigradedDims BigradedDims::convolve(const BigradedDims& o) const {
  BigradedDims out;
  for (const auto& [k1, v1] : entries_)
    for (const auto& [k2, v2] : o.entries_)
      out.add(k1.first + k2.first, k1.second + k2.second, v1 * v2);
  return out;
}

LaurentPoly BigradedDims::euler_characteristic() const {
  LaurentPoly chi;
  for (const auto& [k, v] : entries_) {
    bool odd = ((k.first % 2) + 2) % 2 == 1;
    chi = chi + LaurentPoly::monomial(odd ? -v : v, k.second);
  }
  return chi;
}

// ---------------------------------------------------------------------------
// Gradings

namespace {

// I(A, B): pairs (a, b) with a strictly dominated by b in both coordinates.
// States x are the points (i, x_i); a marking list m gives points
// (i + 1/2, m_i + 1/2).

int strict_pairs_state_state(const std::vector<int>& x) {
  int c = 0;
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x[i] < x[j]) ++c;
  return c;
}

int strict_pairs_marks_marks(const std::vector<int>& m) {
  return strict_pairs_state_state(m);  // common +1/2 offsets cancel
}

}  // namespace

GridGrading::GridGrading(const GridDiagram& g)
    : n_(g.size()), xs_(g.xs()), os_(g.os()) {
  j_oo_ = strict_pairs_marks_marks(os_);
  j_xx_ = strict_pairs_marks_marks(xs_);
}

int GridGrading::point_marking_sum(const std::vector<int>& perm,
                                   const std::vector<int>& marks) const {
  // I(x, P) + I(P, x) with P at half-integer offsets:
  //   (i, x_i) < (j+.5, p_j+.5)  iff  i <= j and x_i <= p_j
  //   (j+.5, p_j+.5) < (i, x_i)  iff  j <  i and p_j <  x_i
  int c = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i <= j && perm[i] <= marks[j]) ++c;
      if (j < i && marks[j] < perm[i]) ++c;
    }
  }
  return c;
}

int GridGrading::maslov(const std::vector<int>& perm) const {
  return strict_pairs_state_state(perm) - point_marking_sum(perm, os_) + j_oo_ + 1;
}

int GridGrading::alexander(const std::vector<int>& perm) const {
  return gradings(perm).second;
}

std::pair<int, int> GridGrading::gradings(const std::vector<int>& perm) const {
  int j_pp = strict_pairs_state_state(perm);
  int m_o = j_pp - point_marking_sum(perm, os_) + j_oo_ + 1;
  int m_x = j_pp - point_marking_sum(perm, xs_) + j_xx_ + 1;
  int num = m_o - m_x - (n_ - 1);
  if (((num % 2) + 2) % 2 != 0)
    throw InternalError("grid grading: Alexander grading is not an integer");
  return {m_o, num / 2};
}

// ---------------------------------------------------------------------------
// Enumeration

void for_each_state(const GridDiagram& g, int max_size,
                    const std::function<void(const std::vector<int>&, int, int)>& fn) {
  const int n = g.size();
  if (n > 16) throw UserError("grids larger than 16x16 are not supported");
  if (n > max_size)
    throw UserError("grid size " + std::to_string(n) + " exceeds the cap " +
                    std::to_string(max_size) + " (" + std::to_string(n) +
                    "! states); raise the cap explicitly to proceed");
  GridGrading grading(g);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    auto [m, a] = grading.gradings(perm);
    fn(perm, m, a);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<GridState> enumerate_states(const GridDiagram& g, int max_size) {
  std::vector<GridState> out;
  for_each_state(g, max_size, [&](const std::vector<int>& perm, int m, int a) {
    out.push_back({perm, m, a});
  });
  return out;
}

std::uint64_t pack_perm(const std::vector<int>& perm) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    w |= static_cast<std::uint64_t>(perm[i]) << (4 * i);
  return w;
}

std::vector<int> unpack_perm(std::uint64_t packed, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = static_cast<int>((packed >> (4 * i)) & 0xF);
  return perm;
}

// ---------------------------------------------------------------------------
// Rectangles and the differential

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Lexicographic rank of a permutation.
std::uint64_t lex_rank(const std::vector<int>& perm, const std::vector<std::uint64_t>& fact) {
  const int n = static_cast<int>(perm.size());
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    r += smaller * fact[n - 1 - i];
  }
  return r;
}

// Marker-emptiness of the four torus rectangles spanned by sorted corners
// (xll,yll)-(xur,yur):
//   0: columns [xll,xur) x rows [yll,yur)
//   1: columns outside   x rows outside
//   2: columns [xll,xur) x rows outside
//   3: columns outside   x rows inside
struct RectTable {
  int n;
  std::vector<std::uint8_t> bits;  // [xll][yll][xur][yur] -> 4-bit mask
  std::uint8_t& at(int xll, int yll, int xur, int yur) {
    return bits[((static_cast<std::size_t>(xll) * n + yll) * n + xur) * n + yur];
  }
  std::uint8_t get(int xll, int yll, int xur, int yur) const {
    return bits[((static_cast<std::size_t>(xll) * n + yll) * n + xur) * n + yur];
  }
};

RectTable build_rect_table(const GridDiagram& g) {
  const int n = g.size();
  RectTable t{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n * n * n, 0)};
  auto marker_in_cols_rows = [&](int c0, int c1, bool cols_inside, int r0, int r1,
                                 bool rows_inside) {
    for (int c = 0; c < n; ++c) {
      bool cin = c >= c0 && c < c1;
      if (cin != cols_inside) continue;
      for (int row : {g.xs()[c], g.os()[c]}) {
        bool rin = row >= r0 && row < r1;
        if (rin == rows_inside) return true;
      }
    }
    return false;
  };
  for (int xll = 0; xll < n; ++xll)
    for (int xur = xll + 1; xur < n; ++xur)
      for (int yll = 0; yll < n; ++yll)
        for (int yur = yll + 1; yur < n; ++yur) {
          std::uint8_t m = 0;
          if (!marker_in_cols_rows(xll, xur, true, yll, yur, true)) m |= 1;
          if (!marker_in_cols_rows(xll, xur, false, yll, yur, false)) m |= 2;
          if (!marker_in_cols_rows(xll, xur, true, yll, yur, false)) m |= 4;
          if (!marker_in_cols_rows(xll, xur, false, yll, yur, true)) m |= 8;
          t.at(xll, yll, xur, yur) = m;
        }
  return t;
}

// Appends to `out` the lexicographic ranks of all states reachable from
// `perm` by one empty rectangle (counted mod 2). The differential preserves
// the Alexander grading and drops Maslov by one.
void boundary_targets(const std::vector<int>& perm, const RectTable& table,
                      const std::vector<std::uint64_t>& fact,
                      std::vector<std::uint64_t>& out) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> swapped(perm);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool first, second;
      if (perm[i] < perm[j]) {
        std::uint8_t m = table.get(i, perm[i], j, perm[j]);
        first = m & 1;
        for (int k = i + 1; k < j && first; ++k)
          if (perm[i] < perm[k] && perm[k] < perm[j]) first = false;
        second = m & 2;
        for (int k = 0; k < i && second; ++k)
          if (perm[k] < perm[i] || perm[k] > perm[j]) second = false;
        for (int k = j + 1; k < n && second; ++k)
          if (perm[k] < perm[i] || perm[k] > perm[j]) second = false;
      } else {
        std::uint8_t m = table.get(i, perm[j], j, perm[i]);
        first = m & 4;
        for (int k = i + 1; k < j && first; ++k)
          if (perm[k] < perm[j] || perm[k] > perm[i]) first = false;
        second = m & 8;
        for (int k = 0; k < i && second; ++k)
          if (perm[k] > perm[j] && perm[k] < perm[i]) second = false;
        for (int k = j + 1; k < n && second; ++k)
          if (perm[k] > perm[j] && perm[k] < perm[i]) second = false;
      }
      if (first != second) {
        std::swap(swapped[i], swapped[j]);
        out.push_back(lex_rank(swapped, fact));
        std::swap(swapped[i], swapped[j]);
      }
    }
  }
}

struct BucketedStates {
  std::vector<std::pair<int, int>> keys;       // (alexander, maslov), sorted
  std::vector<std::uint32_t> counts;           // per bucket
  std::vector<std::uint64_t> offsets;          // per bucket, into `grouped`
  std::vector<std::uint64_t> grouped;          // packed perms, bucket-major, lex within
  std::vector<std::uint32_t> local_index;      // per lex rank
  std::vector<std::uint32_t> bucket_of;        // per lex rank
  int bucket(int alexander, int maslov) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), std::make_pair(alexander, maslov));
    if (it == keys.end() || *it != std::make_pair(alexander, maslov)) return -1;
    return static_cast<int>(it - keys.begin());
  }
};

BucketedStates bucketize(const GridDiagram& g, int max_size, bool verbose) {
  const int n = g.size();
  BucketedStates b;
  std::map<std::pair<int, int>, std::uint32_t> counts;
  for_each_state(g, max_size, [&](const std::vector<int>&, int m, int a) {
    ++counts[{a, m}];
  });
  std::uint64_t total = factorial(n);
  if (verbose) {
    double bytes = static_cast<double>(total) * (8 + 4 + 4) + 1024;
    std::cerr << "grid-engine: " << total << " states in " << counts.size()
              << " (A,M) buckets; ~" << static_cast<long long>(bytes / (1 << 20))
              << " MiB for state tables\n";
  }
  b.keys.reserve(counts.size());
  b.counts.reserve(counts.size());
  for (const auto& [k, c] : counts) {
    b.keys.push_back(k);
    b.counts.push_back(c);
  }
  b.offsets.resize(b.keys.size() + 1, 0);
  for (std::size_t i = 0; i < b.keys.size(); ++i)
    b.offsets[i + 1] = b.offsets[i] + b.counts[i];
  b.grouped.resize(total);
  b.local_index.resize(total);
  b.bucket_of.resize(total);
  std::vector<std::uint32_t> fill(b.keys.size(), 0);
  std::uint64_t rank = 0;
  for_each_state(g, max_size, [&](const std::vector<int>& perm, int m, int a) {
    int bk = b.bucket(a, m);
    b.grouped[b.offsets[bk] + fill[bk]] = pack_perm(perm);
    b.local_index[rank] = fill[bk]++;
    b.bucket_of[rank] = static_cast<std::uint32_t>(bk);
    ++rank;
  });
  return b;
}

// GF(2) rank of a sparse column list by left-to-right reduction.
std::uint64_t gf2_rank(std::vector<std::vector<std::uint32_t>>& columns,
                       std::uint32_t target_count) {
  std::vector<std::int64_t> pivot_owner(target_count, -1);
  std::uint64_t rank = 0;
  std::vector<std::uint32_t> merged;
  for (auto& col : columns) {
    while (!col.empty()) {
      std::uint32_t low = col.back();
      std::int64_t owner = pivot_owner[low];
      if (owner < 0) break;
      const auto& other = columns[owner];
      merged.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(merged));
      col.swap(merged);
    }
    if (!col.empty()) {
      pivot_owner[col.back()] = static_cast<std::int64_t>(&col - columns.data());
      ++rank;
    }
  }
  return rank;
}

}  // namespace

SparseBoundary boundary(const GridDiagram& g, int max_size) {
  const int n = g.size();
  BucketedStates b = bucketize(g, max_size, false);
  RectTable table = build_rect_table(g);
  std::vector<std::uint64_t> fact(n + 1);
  for (int i = 0; i <= n; ++i) fact[i] = factorial(i);

  SparseBoundary out;
  out.blocks.resize(b.keys.size());
  for (std::size_t bk = 0; bk < b.keys.size(); ++bk) {
    auto [a, m] = b.keys[bk];
    SparseBoundary::Block& block = out.blocks[bk];
    block.alexander = a;
    block.maslov_from = m;
    block.sources.assign(b.grouped.begin() + b.offsets[bk],
                         b.grouped.begin() + b.offsets[bk + 1]);
    int tb = b.bucket(a, m - 1);
    if (tb >= 0)
      block.targets.assign(b.grouped.begin() + b.offsets[tb],
                           b.grouped.begin() + b.offsets[tb + 1]);
    block.columns.resize(block.sources.size());
    std::vector<std::uint64_t> targets;
    for (std::size_t s = 0; s < block.sources.size(); ++s) {
      targets.clear();
      boundary_targets(unpack_perm(block.sources[s], n), table, fact, targets);
      for (std::uint64_t t : targets) {
        if (tb < 0 || static_cast<int>(b.bucket_of[t]) != tb)
          throw InternalError("boundary: an entry does not preserve A and drop M by 1");
        block.columns[s].push_back(b.local_index[t]);
      }
      std::sort(block.columns[s].begin(), block.columns[s].end());
    }
  }
  return out;
}

long long SparseBoundary::edge_count() const {
  long long e = 0;
  for (const auto& block : blocks)
    for (const auto& col : block.columns) e += static_cast<long long>(col.size());
  return e;
}

void check_boundary_squared(const GridDiagram& g, int max_size) {
  SparseBoundary d = boundary(g, max_size);
  std::map<std::pair<int, int>, const SparseBoundary::Block*> by_key;
  for (const auto& block : d.blocks) by_key[{block.alexander, block.maslov_from}] = &block;
  for (const auto& block : d.blocks) {
    auto it = by_key.find({block.alexander, block.maslov_from - 1});
    if (it == by_key.end()) {
      for (const auto& col : block.columns)
        if (!col.empty())
          throw InternalError("d^2 check: edges into an empty bucket");
      continue;
    }
    const SparseBoundary::Block& next = *it->second;
    for (const auto& col : block.columns) {
      std::vector<std::uint32_t> acc, merged;
      for (std::uint32_t t : col) {
        merged.clear();
        std::set_symmetric_difference(acc.begin(), acc.end(), next.columns[t].begin(),
                                      next.columns[t].end(), std::back_inserter(merged));
        acc.swap(merged);
      }
      if (!acc.empty()) throw InternalError("d^2 != 0 on the grid complex");
    }
  }
}

BigradedDims homology_dims(const GridDiagram& g, const HomologyOptions& opts) {
  const int n = g.size();
#ifndef NDEBUG
  if (n <= 7) check_boundary_squared(g, 7);  // sampled in release via the test suite
#endif
  BucketedStates b = bucketize(g, opts.max_size, opts.verbose);
  RectTable table = build_rect_table(g);
  std::vector<std::uint64_t> fact(n + 1);
  for (int i = 0; i <= n; ++i) fact[i] = factorial(i);

  const std::size_t nbuckets = b.keys.size();
  std::vector<std::uint64_t> rank_of_block(nbuckets, 0);
  int workers = opts.workers > 0 ? opts.workers
                                 : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    std::vector<std::uint64_t> targets;
    try {
      for (;;) {
        std::size_t bk = next.fetch_add(1);
        if (bk >= nbuckets) return;
        auto [a, m] = b.keys[bk];
        int tb = b.bucket(a, m - 1);
        std::uint32_t tcount = tb < 0 ? 0 : b.counts[tb];
        std::vector<std::vector<std::uint32_t>> columns(b.counts[bk]);
        for (std::uint32_t s = 0; s < b.counts[bk]; ++s) {
          targets.clear();
          boundary_targets(unpack_perm(b.grouped[b.offsets[bk] + s], n), table, fact, targets);
          for (std::uint64_t t : targets) {
            if (tb < 0 || static_cast<int>(b.bucket_of[t]) != tb)
              throw InternalError("boundary: an entry does not preserve A and drop M by 1");
            columns[s].push_back(b.local_index[t]);
          }
          std::sort(columns[s].begin(), columns[s].end());
        }
        rank_of_block[bk] = gf2_rank(columns, tcount);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  BigradedDims dims;
  for (std::size_t bk = 0; bk < nbuckets; ++bk) {
    auto [a, m] = b.keys[bk];
    long long h = static_cast<long long>(b.counts[bk]) -
                  static_cast<long long>(rank_of_block[bk]);
    int above = b.bucket(a, m + 1);
    if (above >= 0) h -= static_cast<long long>(rank_of_block[above]);
    if (h < 0) throw InternalError("homology: negative bucket dimension");
    if (h > 0) dims.add(m, a, h);
  }
  return dims;
}

BigradedDims deconvolve(const BigradedDims& tilde, int grid_size) {
  const int n = grid_size;
  std::vector<long long> binom(n, 0);
  binom[0] = 1;
  for (int k = 1; k < n; ++k) binom[k] = binom[k - 1] * (n - k) / k;

  std::map<BigradedDims::Key, long long> work(tilde.entries().begin(), tilde.entries().end());
  BigradedDims hat;
  // Any order that visits (M, A) before (M-k, A-k) works; decreasing M does.
  // Map inserts during the loop only create strictly smaller keys, which the
  // reverse iteration reaches later; existing iterators stay valid.
  for (auto it = work.rbegin(); it != work.rend(); ++it) {
    auto [m, a] = it->first;
    long long r = it->second;
    if (r == 0) continue;
    if (r < 0)
      throw InternalError("deconvolve: negative residual at M=" + std::to_string(m) +
                          " A=" + std::to_string(a));
    hat.add(m, a, r);
    for (int k = 0; k < n; ++k) work[{m - k, a - k}] -= r * binom[k];
  }
  for (const auto& [k, v] : work)
    if (v != 0)
      throw InternalError("deconvolve: nonzero residual at M=" + std::to_string(k.first) +
                          " A=" + std::to_string(k.second));
  return hat;
}

BigradedDims hat_dims(const GridDiagram& g, const HomologyOptions& opts) {
  return deconvolve(homology_dims(g, opts), g.size());
}

}  // namespace slicefloer
