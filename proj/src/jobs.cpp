#include "slicefloer/jobs.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include "slicefloer/alexander.hpp"
#include "slicefloer/cache.hpp"
#include "slicefloer/criterion.hpp"
#include "slicefloer/errors.hpp"
#include "slicefloer/sha256.hpp"
#include "slicefloer/signature.hpp"
#include "slicefloer/slice_disk.hpp"
#include "slicefloer/thin_model.hpp"
#include "slicefloer/verify.hpp"

namespace slicefloer {

using json = nlohmann::ordered_json;

json dims_to_json(const BigradedDims& dims) {
  json out = json::object();
  for (const auto& [key, dim] : dims.entries())
    out[std::to_string(key.first) + "," + std::to_string(key.second)] = dim;
  return out;
}

json laurent_to_json(const LaurentPoly& p) {
  json out;
  out["min_degree"] = p.min_degree();
  out["coefficients"] = p.coeffs();
  return out;
}

namespace {

json criterion_to_json(const CriterionVerdict& v) {
  json out;
  out["passes"] = v.passes;
  if (v.matched_m)
    out["matched_m"] = *v.matched_m;
  else
    out["matched_m"] = nullptr;
  out["normalized"] = laurent_to_json(v.normalized);
  return out;
}

json profile_to_json(const RankProfile& p) {
  json out;
  out["total"] = p.total;
  json by_a = json::object();
  for (const auto& [a, r] : p.by_alexander) by_a[std::to_string(a)] = r;
  out["by_alexander"] = by_a;
  json by_b = json::object();
  for (const auto& [key, r] : p.by_bidegree)
    by_b[std::to_string(key.first) + "," + std::to_string(key.second)] = r;
  out["by_bidegree"] = by_b;
  out["sphere_independent"] = p.sphere_independent;
  return out;
}

const std::string& required_arg(const JobSpec& spec, const std::string& name) {
  auto it = spec.args.find(name);
  if (it == spec.args.end() || it->second.empty())
    throw UserError(spec.command + ": missing required --" + name);
  return it->second;
}

std::string optional_arg(const JobSpec& spec, const std::string& name,
                         const std::string& fallback = "") {
  auto it = spec.args.find(name);
  return it == spec.args.end() ? fallback : it->second;
}

std::string catalog_path(const JobSpec& spec) {
  std::string path = optional_arg(spec, "catalog");
  if (!path.empty()) return path;
  if (const char* env = std::getenv("SLICEFLOER_CATALOG")) return env;
  return "data/catalog_alternating_7.csv";
}

HomologyOptions homology_options(const JobSpec& spec) {
  return {.max_size = spec.max_grid, .workers = spec.workers, .verbose = false};
}

struct Dispatch {
  std::string canonical_input;  // cache key material; empty = uncacheable
  std::function<json()> compute;
};

Dispatch dispatch_compute(const JobSpec& spec) {
  GridDiagram g = GridDiagram::parse(required_arg(spec, "grid"));
  HomologyOptions opts = homology_options(spec);
  opts.verbose = g.size() >= 9;  // memory estimate to stderr before work starts
  return {"grid=" + g.serialize(), [g, opts]() {
            json payload;
            payload["n"] = g.size();
            BigradedDims tilde = homology_dims(g, opts);
            BigradedDims hat = deconvolve(tilde, g.size());
            payload["tilde"] = dims_to_json(tilde);
            payload["hat"] = dims_to_json(hat);
            payload["euler"] = laurent_to_json(hat.euler_characteristic());
            return payload;
          }};
}

Dispatch dispatch_alexander(const JobSpec& spec) {
  PDCode pd = PDCode::parse(required_arg(spec, "pd"));
  return {"pd=" + pd.serialize(),
          [pd]() { return laurent_to_json(alexander_from_pd(pd)); }};
}

Dispatch dispatch_signature(const JobSpec& spec) {
  PDCode pd = PDCode::parse(required_arg(spec, "pd"));
  return {"pd=" + pd.serialize(), [pd]() {
            json payload;
            payload["signature"] = signature_goeritz(pd);
            return payload;
          }};
}

Dispatch dispatch_thinmodel(const JobSpec&, const KnotRecord& rec) {
  return {"knot=" + serialize_record(rec), [rec]() {
            LaurentPoly delta = knot_alexander(rec);
            CriterionVerdict criterion = rolling_criterion(delta, rec.signature);
            ThinModel model = build_thin_model(delta, rec.signature);
            PhiPsiData data = phi_psi(model, criterion);
            json payload;
            payload["knot"] = rec.name;
            payload["tau"] = model.tau;
            payload["boxes"] = model.boxes;
            payload["phipsi_rank"] = data.rank;
            payload["delta_shift"] = model.delta_shift;
            if (data.graded_rank) {
              json graded = json::object();
              for (const auto& [key, r] : *data.graded_rank)
                graded[std::to_string(key.first) + "," + std::to_string(key.second)] = r;
              payload["phipsi_graded_rank"] = graded;
            }
            return payload;
          }};
}

json element_to_json(const SliceDiskElement& e) {
  json out;
  out["kind"] = to_string(e.descriptor.kind);
  out["form"] = to_string(e.form);
  out["l"] = e.l;
  out["nilpotent_rank"] = e.nilpotent_rank;
  out["dim_v"] = e.source_dims.total();
  out["ambient_dims"] = dims_to_json(e.source_dims);
  return out;
}

Dispatch dispatch_rollspin(const JobSpec& spec, const KnotRecord& rec) {
  std::string l_arg = optional_arg(spec, "l");
  return {"knot=" + serialize_record(rec) + ";l=" + l_arg, [rec, l_arg]() {
            ClassificationReport report = classify_rollspins(rec);
            json payload;
            payload["knot"] = report.knot;
            payload["criterion"] = criterion_to_json(report.criterion);
            payload["verdict"] = to_string(report.verdict);
            payload["parity_verdict"] =
                report.parity_unconditional ? json(to_string(RollspinVerdict::parity_only_over_F2))
                                            : json(nullptr);
            payload["torsion_caveat"] = report.torsion_caveat;
            payload["note"] =
                report.verdict == RollspinVerdict::all_l_distinct_over_Z_conditional
                    ? "integral verdict assumes the basepoint-moving formula holds over Z; "
                      "the parity verdict over F2 is unconditional"
                    : "";
            if (!l_arg.empty())
              payload["element"] = element_to_json(rollspin_element(rec, std::stoi(l_arg)));
            return payload;
          }};
}

Dispatch dispatch_rank(const JobSpec& spec, const std::vector<KnotRecord>& catalog) {
  std::string construction = required_arg(spec, "construction");
  const KnotRecord& rec = find_knot(catalog, required_arg(spec, "knot"));
  std::string knot2_name = optional_arg(spec, "knot2");
  std::optional<KnotRecord> rec2;
  if (!knot2_name.empty()) rec2 = find_knot(catalog, knot2_name);

  SliceDiskDescriptor desc;
  desc.knot = rec;
  desc.knot2 = rec2;
  if (construction == "spin")
    desc.kind = DiskKind::spin;
  else if (construction == "bsum")
    desc.kind = DiskKind::boundary_sum;
  else if (construction == "invconc")
    desc.kind = DiskKind::invertible_concordance;
  else
    throw UserError("rank: unknown construction \"" + construction +
                    "\" (expected spin, bsum, or invconc)");

  std::string key = "construction=" + construction + ";knot=" + serialize_record(rec) +
                    ";knot2=" + (rec2 ? serialize_record(*rec2) : "");
  return {key, [desc, opts = homology_options(spec)]() {
            SliceDiskElement element = element_for(desc, opts);
            RankProfile profile = rank_profile(element);
            json payload;
            payload["knot"] = desc.knot.name;
            payload["knot2"] = desc.knot2 ? json(desc.knot2->name) : json(nullptr);
            payload["construction"] = to_string(desc.kind);
            payload["element"] = element_to_json(element);
            payload["profile"] = profile_to_json(profile);
            return payload;
          }};
}

Dispatch dispatch_section_check(const JobSpec& spec, const std::vector<KnotRecord>& catalog) {
  const KnotRecord& rec = find_knot(catalog, required_arg(spec, "knot"));
  GridDiagram section = GridDiagram::parse(required_arg(spec, "section"));
  std::string key = "knot=" + serialize_record(rec) + ";section=" + section.serialize();
  return {key, [rec, section, opts = homology_options(spec)]() {
            SliceDiskDescriptor desc;
            desc.kind = DiskKind::spin;
            desc.knot = rec;
            RankProfile profile = rank_profile(element_for(desc, opts));
            BigradedDims section_hfk = hat_dims(section, opts);
            SectionBoundReport report = section_bound_check(profile, section_hfk);
            json payload;
            payload["knot"] = rec.name;
            payload["section_grid"] = section.serialize();
            payload["profile"] = profile_to_json(profile);
            payload["section_hat"] = dims_to_json(section_hfk);
            json clauses;
            clauses["dimension"] = report.dimension_ok ? "satisfied" : "violated";
            clauses["bidegree"] = report.bidegree_ok ? "satisfied" : "violated";
            clauses["genus"] = report.genus_ok ? "satisfied" : "violated";
            payload["clauses"] = clauses;
            payload["verdict"] = report.satisfied ? "satisfied" : "violated";
            payload["profile_total"] = report.profile_total;
            payload["section_total"] = report.section_total;
            payload["profile_max_alexander"] = report.profile_max_alexander;
            payload["section_genus"] = report.section_genus;
            return payload;
          }};
}

Dispatch dispatch_kunneth(const JobSpec& spec, const std::vector<KnotRecord>& catalog) {
  const KnotRecord& rec = find_knot(catalog, required_arg(spec, "knot"));
  const KnotRecord& rec2 = find_knot(catalog, required_arg(spec, "knot2"));
  std::string key = "knot=" + serialize_record(rec) + ";knot2=" + serialize_record(rec2);
  return {key, [rec, rec2, opts = homology_options(spec)]() {
            KunnethReport report = kunneth_identification_check(rec, rec2, opts);
            json payload;
            payload["knot"] = rec.name;
            payload["knot2"] = rec2.name;
            payload["engine"] = dims_to_json(report.engine_dims);
            payload["convolution"] = dims_to_json(report.convolved_dims);
            payload["total"] = report.engine_dims.total();
            payload["ok"] = report.ok;
            if (!report.ok)
              throw InternalError("kunneth identification failed for " + rec.name + " # " +
                                  rec2.name);
            return payload;
          }};
}

JobResult run_job_with_catalog(const JobSpec& spec, const std::vector<KnotRecord>* preloaded);

JobResult run_batch(const JobSpec& spec) {
  std::string command = required_arg(spec, "command");
  if (command == "batch" || command == "verify")
    throw UserError("batch: cannot nest command \"" + command + "\"");
  CatalogLoadResult loaded = load_catalog(catalog_path(spec));

  struct Row {
    std::string name;
    std::string status;
    std::string detail;
    long long runtime_ms = 0;
  };
  std::vector<Row> rows(loaded.records.size());

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= loaded.records.size()) return;
      const KnotRecord& rec = loaded.records[i];
      Row& row = rows[i];
      row.name = rec.name;
      auto start = std::chrono::steady_clock::now();
      try {
        JobSpec sub = spec;
        sub.command = command;
        sub.args["knot"] = rec.name;
        sub.cache_policy = spec.cache_policy;
        JobResult r = run_job_with_catalog(sub, &loaded.records);
        row.status = "ok";
        row.detail = r.envelope["payload"].dump();
      } catch (const std::exception& e) {
        row.status = "error";
        row.detail = e.what();
      }
      row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    }
  };
  int workers = spec.workers > 0 ? spec.workers
                                 : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::ostringstream out;
  out << "name,status,detail,runtime_ms\n";
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      if (c == '\n') {
        q += "; ";
        continue;
      }
      q += c;
    }
    return q + "\"";
  };
  for (const auto& row : rows)
    out << row.name << "," << row.status << "," << quote(row.detail) << ","
        << row.runtime_ms << "\n";
  for (const auto& err : loaded.row_errors)
    out << "-,load_error," << quote(err) << ",0\n";

  JobResult result;
  result.is_json = false;
  result.text = out.str();
  return result;
}

JobResult run_verify(const JobSpec& spec) {
  CatalogLoadResult loaded = load_catalog(catalog_path(spec));
  VerifyOptions opts;
  opts.max_grid = spec.max_grid;
  opts.workers = spec.workers;
  std::vector<PropertyResult> results = run_property_suite(loaded.records, opts);
  std::ostringstream out;
  bool all = loaded.row_errors.empty();
  for (const auto& err : loaded.row_errors) out << "FAIL catalog: " << err << "\n";
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << "\n";
    all = all && r.pass;
  }
  out << (all ? "verify: all properties hold\n" : "verify: FAILURES above\n");
  JobResult result;
  result.is_json = false;
  result.text = out.str();
  result.ok = all;
  return result;
}

JobResult run_job_with_catalog(const JobSpec& spec, const std::vector<KnotRecord>* preloaded) {
  if (spec.command == "batch") return run_batch(spec);
  if (spec.command == "verify") return run_verify(spec);

  Dispatch dispatch;
  std::vector<KnotRecord> loaded;
  if (spec.command == "compute") {
    dispatch = dispatch_compute(spec);
  } else if (spec.command == "alexander") {
    dispatch = dispatch_alexander(spec);
  } else if (spec.command == "signature") {
    dispatch = dispatch_signature(spec);
  } else {
    // Name-based commands resolve records through the catalog; the cache key
    // hashes record contents, not names, so catalog edits cannot serve stale
    // results.
    if (!preloaded) {
      loaded = load_catalog_strict(catalog_path(spec));
      preloaded = &loaded;
    }
    const std::vector<KnotRecord>& catalog = *preloaded;
    if (spec.command == "thinmodel") {
      dispatch = dispatch_thinmodel(spec, find_knot(catalog, required_arg(spec, "knot")));
    } else if (spec.command == "rollspin") {
      dispatch = dispatch_rollspin(spec, find_knot(catalog, required_arg(spec, "knot")));
    } else if (spec.command == "rank") {
      dispatch = dispatch_rank(spec, catalog);
    } else if (spec.command == "section-check") {
      dispatch = dispatch_section_check(spec, catalog);
    } else if (spec.command == "kunneth-check") {
      dispatch = dispatch_kunneth(spec, catalog);
    } else {
      throw UserError("unknown command \"" + spec.command + "\"");
    }
  }

  std::string key_material = std::to_string(kSchemaVersion) + "\n" + spec.command + "\n" +
                             dispatch.canonical_input;
  std::string input_hash = sha256_hex(key_material);

  ResultCache cache = ResultCache::from_environment();
  json payload;
  bool have_payload = false;
  if (spec.cache_policy == "use" && cache.enabled()) {
    if (auto hit = cache.lookup(input_hash)) {
      payload = *hit;
      have_payload = true;
    }
  } else if (spec.cache_policy != "refresh" && spec.cache_policy != "off" &&
             spec.cache_policy != "use") {
    throw UserError("unknown cache policy \"" + spec.cache_policy + "\"");
  }
  if (!have_payload) {
    payload = dispatch.compute();
    if (spec.cache_policy != "off" && cache.enabled()) cache.store(input_hash, payload);
  }

  JobResult result;
  result.envelope["schema_version"] = kSchemaVersion;
  result.envelope["input_hash"] = input_hash;
  result.envelope["payload"] = payload;
  result.envelope["provenance"] = {{"tool_version", kToolVersion}};
  return result;
}

}  // namespace

JobResult run_job(const JobSpec& spec) { return run_job_with_catalog(spec, nullptr); }

}  // namespace slicefloer
