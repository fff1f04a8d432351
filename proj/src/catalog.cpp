#include "slicefloer/catalog.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "slicefloer/alexander.hpp"
#include "slicefloer/errors.hpp"
#include "slicefloer/signature.hpp"

namespace slicefloer {

namespace {

constexpr const char* kHeader = "name,crossings,alternating,signature,pd,grid,alexander,genus";

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw UserError("bad " + what + " \"" + s + "\"");
  return v;
}

KnotRecord parse_row(const std::vector<std::string>& fields) {
  if (fields.size() != 8)
    throw UserError("expected 8 fields, got " + std::to_string(fields.size()));
  KnotRecord r;
  r.name = fields[0];
  if (r.name.empty()) throw UserError("empty knot name");
  r.crossing_number = parse_int(fields[1], "crossing number");
  int alt = parse_int(fields[2], "alternating flag");
  if (alt != 0 && alt != 1) throw UserError("alternating flag must be 0 or 1");
  r.alternating = alt == 1;
  r.signature = parse_int(fields[3], "signature");
  if (r.signature % 2 != 0)
    throw UserError("signature " + std::to_string(r.signature) + " is odd");
  if (!fields[4].empty()) r.pd = PDCode::parse(fields[4]);
  if (!fields[5].empty()) r.grid = GridDiagram::parse(fields[5]);
  if (!fields[6].empty()) r.alexander = LaurentPoly::parse(fields[6]);
  if (!fields[7].empty()) {
    int g = parse_int(fields[7], "genus");
    if (g < 0) throw UserError("negative genus");
    r.genus = g;
  }

  // Cross-validation against the diagrammatic invariants.
  if (r.pd) {
    if (r.alexander) {
      LaurentPoly computed = alexander_from_pd(*r.pd);
      if (computed != normalize_alexander(*r.alexander))
        throw UserError("stored Alexander polynomial " + r.alexander->serialize() +
                        " does not match the PD determinant " + computed.serialize());
    }
    int sigma = signature_goeritz(*r.pd);
    if (sigma != r.signature)
      throw UserError("stored signature " + std::to_string(r.signature) +
                      " does not match the Goeritz value " + std::to_string(sigma));
  }
  return r;
}

}  // namespace

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw UserError("unterminated quote in CSV row");
  fields.push_back(cur);
  return fields;
}

bool KnotRecord::is_prime_table_knot() const {
  auto underscore = name.find('_');
  if (underscore == std::string::npos || underscore == 0 ||
      underscore + 1 >= name.size())
    return false;
  for (std::size_t i = 0; i < name.size(); ++i)
    if (i != underscore && !std::isdigit(static_cast<unsigned char>(name[i])))
      return false;
  return parse_int(name.substr(0, underscore), "crossing prefix") >= 3;
}

CatalogLoadResult load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UserError("catalog: cannot read " + path);
  CatalogLoadResult out;
  std::string line;
  if (!std::getline(in, line)) throw UserError("catalog: empty file, expected header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader)
    throw UserError("catalog: bad header \"" + line + "\"; expected \"" + kHeader + "\"");
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.records.push_back(parse_row(split_csv_row(line)));
    } catch (const std::exception& e) {
      out.row_errors.push_back("row " + std::to_string(row) + ": " + e.what());
    }
  }
  return out;
}

std::vector<KnotRecord> load_catalog_strict(const std::string& path) {
  CatalogLoadResult result = load_catalog(path);
  if (!result.row_errors.empty()) {
    std::ostringstream os;
    os << "catalog " << path << ": " << result.row_errors.size() << " bad row(s):";
    for (const auto& e : result.row_errors) os << "\n  " << e;
    throw UserError(os.str());
  }
  return std::move(result.records);
}

const KnotRecord& find_knot(const std::vector<KnotRecord>& records, const std::string& name) {
  for (const auto& r : records)
    if (r.name == name) return r;
  throw UserError("unknown knot \"" + name + "\" (not in the catalog)");
}

LaurentPoly knot_alexander(const KnotRecord& record) {
  if (record.alexander) return normalize_alexander(*record.alexander);
  if (record.pd) return alexander_from_pd(*record.pd);
  throw UserError("knot " + record.name + " has neither a stored Alexander polynomial "
                  "nor a PD code");
}

std::string serialize_record(const KnotRecord& record) {
  std::ostringstream os;
  os << record.name << "|" << record.crossing_number << "|" << record.alternating << "|"
     << record.signature << "|" << (record.pd ? record.pd->serialize() : "") << "|"
     << (record.grid ? record.grid->serialize() : "") << "|"
     << (record.alexander ? record.alexander->serialize() : "") << "|"
     << (record.genus ? std::to_string(*record.genus) : "");
  return os.str();
}

}  // namespace slicefloer
