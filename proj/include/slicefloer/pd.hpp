#pragma once

#include <array>
#include <string>
#include <vector>

namespace slicefloer {

// Planar diagram code of a knot. Each crossing is a 4-tuple of edge labels
// listed counterclockwise starting from the incoming under-strand. Edge
// labels must be 1..2n in traversal order: at every crossing the outgoing
// under-edge is the successor of the incoming one, and the two over-edges
// are successors of each other in exactly one direction (which fixes the
// crossing sign). The empty code "[]" is the 0-crossing unknot.
class PDCode {
 public:
  PDCode() = default;
  explicit PDCode(std::vector<std::array<int, 4>> crossings);

  static PDCode parse(const std::string& text);
  std::string serialize() const;

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  const std::vector<std::array<int, 4>>& crossings() const { return crossings_; }

  bool operator==(const PDCode& o) const = default;

  // Mirror image: reflect the plane, which reverses the cyclic order at
  // every crossing: (a,b,c,d) -> (a,d,c,b).
  PDCode mirrored() const;

  // +1 if the over-strand direction is the under-strand direction rotated
  // clockwise by 90 degrees; -1 otherwise. For the 1-crossing kink both
  // successor relations hold and the sign is reported as +1.
  int crossing_sign(int i) const;

 private:
  std::vector<std::array<int, 4>> crossings_;
};

// Complementary regions of the diagram with their checkerboard coloring.
// corner k of a crossing is the quadrant between the half-edges at slots k
// and (k+1) % 4.
struct PDFaces {
  int face_count = 0;
  std::vector<std::array<int, 4>> corner_face;  // [crossing][corner] -> face id
  std::vector<int> color;                       // [face] -> 0 or 1
};

PDFaces trace_faces(const PDCode& pd);

}  // namespace slicefloer
