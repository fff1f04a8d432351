#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "slicefloer/grid.hpp"
#include "slicefloer/laurent.hpp"

namespace slicefloer {

// Dimensions of a bigraded GF(2) vector space, keyed by (Maslov, Alexander).
// Only strictly positive dimensions are stored.
class BigradedDims {
 public:
  using Key = std::pair<int, int>;  // (maslov, alexander)

  void add(int maslov, int alexander, long long dim);
  long long at(int maslov, int alexander) const;
  const std::map<Key, long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  long long total() const;
  std::map<int, long long> per_alexander() const;
  int max_alexander() const;

  // dim(M, A) == dim(M - 2A, -A) for all (M, A).
  bool is_symmetric() const;
  // (M, A) -> (-M, -A).
  BigradedDims mirror_dual() const;
  // Bigraded tensor-product dimensions.
  BigradedDims convolve(const BigradedDims& o) const;
  //  sum over entries of (-1)^M dim t^A.
  LaurentPoly euler_characteristic() const;

  bool operator==(const BigradedDims& o) const = default;

 private:
  std::map<Key, long long> entries_;
};

// One generator of the fully blocked grid complex.
struct GridState {
  std::vector<int> perm;
  int maslov = 0;
  int alexander = 0;
};

// Grading formulas, fixed conventions: markings at half-integer coordinates,
// states on the integer lattice, M(x) = J(x,x) - 2J(x,O) + J(O,O) + 1 with J
// the symmetrized strict-domination count, A(x) = (M_O(x) - M_X(x) - (n-1))/2.
class GridGrading {
 public:
  explicit GridGrading(const GridDiagram& g);
  int maslov(const std::vector<int>& perm) const;
  int alexander(const std::vector<int>& perm) const;
  std::pair<int, int> gradings(const std::vector<int>& perm) const;  // (M, A)

 private:
  int point_marking_sum(const std::vector<int>& perm, const std::vector<int>& marks) const;
  int n_;
  std::vector<int> xs_, os_;
  int j_oo_, j_xx_;
};

// All n! states in lexicographic order of the permutation.
std::vector<GridState> enumerate_states(const GridDiagram& g, int max_size = 10);

// Streaming version; fn(perm, maslov, alexander) in lexicographic order.
void for_each_state(const GridDiagram& g, int max_size,
                    const std::function<void(const std::vector<int>&, int, int)>& fn);

// The differential of the fully blocked complex, bucketed by Alexander
// grading and source Maslov grading. Within a block, sources and targets are
// listed in lexicographic order and columns hold sorted target indices.
struct SparseBoundary {
  struct Block {
    int alexander = 0;
    int maslov_from = 0;  // the block maps Maslov M -> M-1
    std::vector<std::uint64_t> sources;
    std::vector<std::uint64_t> targets;
    std::vector<std::vector<std::uint32_t>> columns;
  };
  std::vector<Block> blocks;
  long long edge_count() const;
};

SparseBoundary boundary(const GridDiagram& g, int max_size = 8);

// Verifies d*d == 0 on the materialized complex; throws InternalError.
void check_boundary_squared(const GridDiagram& g, int max_size = 8);

std::uint64_t pack_perm(const std::vector<int>& perm);
std::vector<int> unpack_perm(std::uint64_t packed, int n);

struct HomologyOptions {
  int max_size = 10;
  int workers = 0;  // 0 = hardware concurrency
  bool verbose = false;
};

// Homology of the fully blocked complex (the tilde flavor): per (M, A)
// bucket, dim ker - dim im by sparse elimination over GF(2).
BigradedDims homology_dims(const GridDiagram& g, const HomologyOptions& opts = {});

// Removes the (n-1)-fold two-dimensional factor W (generators at (0,0) and
// (-1,-1)): solves tilde(M,A) = sum_k C(n-1,k) hat(M+k, A+k), peeling from
// the maximal gradings downward. Non-exact solutions throw InternalError.
BigradedDims deconvolve(const BigradedDims& tilde, int grid_size);

// hat = deconvolve(homology_dims(g), n); this is HFK-hat of the knot.
BigradedDims hat_dims(const GridDiagram& g, const HomologyOptions& opts = {});

}  // namespace slicefloer
