#include "slicefloer/grid.hpp"

#include <charconv>
#include <sstream>

#include "slicefloer/errors.hpp"

namespace slicefloer {

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    int v = 0;
    const char* b = text.data() + pos;
    const char* e = text.data() + comma;
    while (b < e && *b == ' ') ++b;
    const char* e2 = e;
    while (e2 > b && *(e2 - 1) == ' ') --e2;
    auto [p, ec] = std::from_chars(b, e2, v);
    if (ec != std::errc() || p != e2 || b == e2)
      throw UserError("grid: malformed " + what + " list in \"" + text + "\"");
    out.push_back(v);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return out;
}

bool is_permutation(const std::vector<int>& v) {
  std::vector<bool> seen(v.size(), false);
  for (int x : v) {
    if (x < 0 || x >= static_cast<int>(v.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<int> inverse(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

// The knot meets each column's vertical segment once; following
// X -> O (vertical), O -> X (horizontal) induces the column successor
// c -> xs_inv[os[c]]. A knot is traced iff that permutation is one n-cycle.
bool traces_single_component(const std::vector<int>& xs, const std::vector<int>& os) {
  const int n = static_cast<int>(xs.size());
  std::vector<int> xs_inv = inverse(xs);
  int c = 0;
  for (int step = 0; step < n; ++step) {
    c = xs_inv[os[c]];
    if (c == 0) return step == n - 1;
  }
  return false;
}

}  // namespace

GridDiagram::GridDiagram(std::vector<int> xs, std::vector<int> os)
    : xs_(std::move(xs)), os_(std::move(os)) {
  if (xs_.size() != os_.size() || xs_.empty())
    throw UserError("grid: X and O lists must be nonempty and the same length");
  if (!is_permutation(xs_)) throw UserError("grid: X positions are not a permutation");
  if (!is_permutation(os_)) throw UserError("grid: O positions are not a permutation");
  for (std::size_t i = 0; i < xs_.size(); ++i)
    if (xs_[i] == os_[i])
      throw UserError("grid: X and O share a cell in column " + std::to_string(i));
  if (!traces_single_component(xs_, os_))
    throw UserError("grid: diagram does not trace to a single knot component");
}

GridDiagram GridDiagram::parse(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw UserError("grid: expected \"x0,x1,...;o0,o1,...\", got \"" + text + "\"");
  return GridDiagram(parse_int_list(text.substr(0, semi), "X"),
                     parse_int_list(text.substr(semi + 1), "O"));
}

std::string GridDiagram::serialize() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ",";
    os << xs_[i];
  }
  os << ";";
  for (int i = 0; i < size(); ++i) {
    if (i) os << ",";
    os << os_[i];
  }
  return os.str();
}

GridDiagram GridDiagram::mirror() const {
  std::vector<int> xs(xs_.rbegin(), xs_.rend());
  std::vector<int> os(os_.rbegin(), os_.rend());
  return GridDiagram(std::move(xs), std::move(os));
}

GridDiagram GridDiagram::rotated_columns(int by) const {
  const int n = size();
  by = ((by % n) + n) % n;
  std::vector<int> xs(n), os(n);
  for (int i = 0; i < n; ++i) {
    xs[(i + by) % n] = xs_[i];
    os[(i + by) % n] = os_[i];
  }
  return GridDiagram(std::move(xs), std::move(os));
}

GridDiagram GridDiagram::rotated_rows(int by) const {
  const int n = size();
  by = ((by % n) + n) % n;
  std::vector<int> xs(n), os(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = (xs_[i] + by) % n;
    os[i] = (os_[i] + by) % n;
  }
  return GridDiagram(std::move(xs), std::move(os));
}

GridDiagram connected_sum(const GridDiagram& g1, const GridDiagram& g2) {
  const int n1 = g1.size();
  const int n2 = g2.size();
  // Normalize on the torus: g1's O of column n1-1 into the top-right corner
  // of its block, g2's O of column 0 into the bottom-left of its block.
  GridDiagram a = g1.rotated_rows(n1 - 1 - g1.os()[n1 - 1]);
  GridDiagram b = g2.rotated_rows((n2 - g2.os()[0]) % n2);
  std::vector<int> xs(n1 + n2), os(n1 + n2);
  for (int i = 0; i < n1; ++i) {
    xs[i] = a.xs()[i];
    os[i] = a.os()[i];
  }
  for (int i = 0; i < n2; ++i) {
    xs[n1 + i] = b.xs()[i] + n1;
    os[n1 + i] = b.os()[i] + n1;
  }
  // Splice: exchange the rows of the two corner O markings.
  os[n1 - 1] = n1;
  os[n1] = n1 - 1;
  try {
    return GridDiagram(std::move(xs), std::move(os));
  } catch (const UserError& e) {
    throw InternalError(std::string("connected_sum: splice produced an invalid grid: ") +
                        e.what());
  }
}

}  // namespace slicefloer
