#pragma once

#include <string>
#include <vector>

namespace slicefloer {

// An n x n grid diagram of a knot: one X and one O marking per row and per
// column. xs[i] / os[i] give the row of the X / O marking in column i, rows
// indexed from the bottom. The two markings of column 0 play the role of the
// distinguished basepoint pair.
//
// Geometric conventions, fixed once for the whole project:
//   - markings live at cell centers (i + 1/2, row + 1/2); grid states live on
//     the integer lattice;
//   - the knot runs vertically from X to O within a column and horizontally
//     from O to X within a row;
//   - vertical segments cross over horizontal ones.
class GridDiagram {
 public:
  GridDiagram(std::vector<int> xs, std::vector<int> os);

  // Parses "x0,x1,...;o0,o1,..." and validates.
  static GridDiagram parse(const std::string& text);
  std::string serialize() const;

  int size() const { return static_cast<int>(xs_.size()); }
  const std::vector<int>& xs() const { return xs_; }
  const std::vector<int>& os() const { return os_; }

  bool operator==(const GridDiagram& o) const = default;

  // Reflection: reverse the column order of both permutations. Presents the
  // mirror knot.
  GridDiagram mirror() const;

  // Cyclic translations on the torus; both preserve the knot type.
  GridDiagram rotated_columns(int by) const;
  GridDiagram rotated_rows(int by) const;

 private:
  std::vector<int> xs_;
  std::vector<int> os_;
};

// Grid of size n1+n2 presenting the connected sum: g2 is block-placed after
// g1 and the two strands are spliced at the shared corner.
GridDiagram connected_sum(const GridDiagram& g1, const GridDiagram& g2);

}  // namespace slicefloer
