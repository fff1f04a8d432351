#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "slicefloer/catalog.hpp"
#include "slicefloer/grid_homology.hpp"

namespace slicefloer {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "slicefloer 0.1.0";

struct JobSpec {
  std::string command;  // compute alexander signature thinmodel rollspin rank
                        // section-check kunneth-check verify batch
  std::map<std::string, std::string> args;
  std::string cache_policy = "use";  // use | refresh | off
  int workers = 0;
  int max_grid = 10;
};

struct JobResult {
  bool is_json = true;
  nlohmann::ordered_json envelope;  // JSON commands
  std::string text;                 // batch CSV / verify report
  bool ok = true;                   // verify: all properties passed
};

// Dispatches a job to the library, consulting the content-addressed cache
// per policy. Throws UserError / InternalError; the CLI maps those to exit
// codes 2 and 3.
JobResult run_job(const JobSpec& spec);

// JSON helpers shared by the CLI and tests.
nlohmann::ordered_json dims_to_json(const BigradedDims& dims);
nlohmann::ordered_json laurent_to_json(const LaurentPoly& p);

}  // namespace slicefloer
