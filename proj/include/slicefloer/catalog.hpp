#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicefloer/grid.hpp"
#include "slicefloer/laurent.hpp"
#include "slicefloer/pd.hpp"

namespace slicefloer {

struct KnotRecord {
  std::string name;
  int crossing_number = 0;
  bool alternating = false;
  int signature = 0;
  std::optional<PDCode> pd;
  std::optional<GridDiagram> grid;
  std::optional<LaurentPoly> alexander;
  std::optional<int> genus;

  // Catalog rows carry prime table knots (named c_k with c >= 3); the unknot
  // 0_1 is not prime.
  bool is_prime_table_knot() const;
};

struct CatalogLoadResult {
  std::vector<KnotRecord> records;
  std::vector<std::string> row_errors;  // "row N: message" for rejected rows
};

// CSV with header name,crossings,alternating,signature,pd,grid,alexander,genus.
// Quoted fields allowed. Rows failing validation (stored signature odd or
// disagreeing with the Goeritz value, stored Alexander polynomial disagreeing
// with the PD determinant) are reported with their row numbers and skipped.
CatalogLoadResult load_catalog(const std::string& path);

// Loader for CLI use: any row error is a hard UserError.
std::vector<KnotRecord> load_catalog_strict(const std::string& path);

const KnotRecord& find_knot(const std::vector<KnotRecord>& records, const std::string& name);

// The stored polynomial, or the one computed from the PD code.
LaurentPoly knot_alexander(const KnotRecord& record);

// One-line canonical serialization of a record, used for content-addressed
// cache keys.
std::string serialize_record(const KnotRecord& record);

std::vector<std::string> split_csv_row(const std::string& line);

}  // namespace slicefloer
