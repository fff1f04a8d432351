#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "slicefloer/errors.hpp"
#include "slicefloer/jobs.hpp"

namespace {

constexpr int kExitUserError = 2;
constexpr int kExitInternalError = 3;

struct Common {
  slicefloer::JobSpec spec;
  bool pretty = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--cache", c.spec.cache_policy, "Cache policy: use, refresh, or off")
      ->default_val("use");
  cmd->add_option("--workers", c.spec.workers,
                  "Worker threads (0 = hardware concurrency); results are identical "
                  "for any value");
  cmd->add_option("--max-grid", c.spec.max_grid, "Grid size cap (n! states are visited)")
      ->default_val(10);
  cmd->add_flag("--pretty", c.pretty, "Indent JSON output");
}

void add_arg_option(CLI::App* cmd, Common& c, const std::string& flag,
                    const std::string& help, bool required = false) {
  auto* opt = cmd->add_option_function<std::string>(
      "--" + flag, [&c, flag](const std::string& v) { c.spec.args[flag] = v; }, help);
  if (required) opt->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slicefloer: knot Floer homology from grid diagrams and the slice-disk "
               "invariants it bounds"};
  app.require_subcommand(1);

  Common c;

  auto* compute = app.add_subcommand("compute", "Bigraded HFK-hat dims of a grid diagram");
  add_arg_option(compute, c, "grid", "Grid code \"x0,x1,...;o0,o1,...\"", true);
  add_common(compute, c);

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial from a PD code");
  add_arg_option(alexander, c, "pd", "PD code \"[(a,b,c,d),...]\"", true);
  add_common(alexander, c);

  auto* signature = app.add_subcommand("signature", "Knot signature from a PD code");
  add_arg_option(signature, c, "pd", "PD code \"[(a,b,c,d),...]\"", true);
  add_common(signature, c);

  auto* thinmodel = app.add_subcommand("thinmodel",
                                       "Staircase+box model of an alternating knot");
  add_arg_option(thinmodel, c, "knot", "Catalog knot name, e.g. 4_1", true);
  add_arg_option(thinmodel, c, "catalog", "Catalog CSV path");
  add_common(thinmodel, c);

  auto* rollspin = app.add_subcommand("rollspin",
                                      "Classify the roll-spun slice disks of a knot");
  add_arg_option(rollspin, c, "knot", "Catalog knot name", true);
  add_arg_option(rollspin, c, "l", "Also report the element for this twist parameter");
  add_arg_option(rollspin, c, "catalog", "Catalog CSV path");
  add_common(rollspin, c);

  auto* rank = app.add_subcommand("rank", "Rank profile of a slice-disk element");
  add_arg_option(rank, c, "construction", "spin, bsum, or invconc", true);
  add_arg_option(rank, c, "knot", "Catalog knot name", true);
  add_arg_option(rank, c, "knot2", "Second knot for concordance constructions");
  add_arg_option(rank, c, "catalog", "Catalog CSV path");
  add_common(rank, c);

  auto* section = app.add_subcommand("section-check",
                                     "Hyperplane-section bound for a spun disk");
  add_arg_option(section, c, "knot", "Catalog knot name", true);
  add_arg_option(section, c, "section", "Grid code of the candidate section", true);
  add_arg_option(section, c, "catalog", "Catalog CSV path");
  add_common(section, c);

  auto* kunneth = app.add_subcommand("kunneth-check",
                                     "Connected-sum identification check");
  add_arg_option(kunneth, c, "knot", "Catalog knot name", true);
  add_arg_option(kunneth, c, "knot2", "Catalog knot name", true);
  add_arg_option(kunneth, c, "catalog", "Catalog CSV path");
  add_common(kunneth, c);

  auto* verify = app.add_subcommand("verify", "Run the catalog property suite");
  add_arg_option(verify, c, "catalog", "Catalog CSV path");
  add_common(verify, c);

  auto* batch = app.add_subcommand("batch", "Apply a command to every catalog row");
  add_arg_option(batch, c, "catalog", "Catalog CSV path");
  add_arg_option(batch, c, "command", "Command to run per row", true);
  add_common(batch, c);

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* sub : {compute, alexander, signature, thinmodel, rollspin, rank, section,
                        kunneth, verify, batch})
    if (sub->parsed()) c.spec.command = sub->get_name();

  try {
    slicefloer::JobResult result = slicefloer::run_job(c.spec);
    if (result.is_json)
      std::cout << (c.pretty ? result.envelope.dump(2) : result.envelope.dump()) << "\n";
    else
      std::cout << result.text;
    // A failed property in `verify` is an invariant violation.
    return result.ok ? 0 : kExitInternalError;
  } catch (const slicefloer::UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const slicefloer::InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}
