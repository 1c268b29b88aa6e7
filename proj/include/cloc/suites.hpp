#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cloc/io.hpp"
#include "cloc/localization.hpp"
#include "cloc/parallel.hpp"

namespace cloc {

/// Which rigid objects a configuration covers.
enum class TMode { Listed, All, Random };

struct InstanceConfig {
  std::string type = "A";
  int n = 4;
  TMode t_mode = TMode::Listed;
  std::vector<std::string> t;  // labels or arcs when listed
  int random_count = 5;        // number of random rigid objects when t_mode is Random
  std::uint64_t seed = 0;
  std::vector<std::string> suites{"all"};
  int samples = 1000;  // random maps per instance for the map-level suites
};

/// Parses schema "cluster-loc/config/v1". Throws std::invalid_argument on
/// malformed input, unknown suite names, or n outside 1..12.
InstanceConfig parse_config(const json& j);
json config_json(const InstanceConfig& cfg);

/// The rigid objects the configuration names, validated.
std::vector<RigidObject> config_instances(const Category& c, const InstanceConfig& cfg);

/// Names in run order (without "all").
const std::vector<std::string>& suite_names();
/// One-line statement of the property a suite checks.
std::string suite_property(const std::string& name);
/// Expands "all" and checks the names.
std::vector<std::string> resolve_suites(const std::vector<std::string>& requested);

struct Failure {
  std::string instance;    // "n=4 T=M44+M14+M11"
  std::string reproducer;  // objects or maps in literal syntax
  std::string message;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  bool exhaustive = true;
  long instances = 0;
  long skipped_instances = 0;  // suite does not apply (e.g. kz on a non-cluster-tilting T)
  std::vector<Failure> failures;
  double seconds = 0;
};

struct SuiteReport {
  InstanceConfig config;
  std::vector<SuiteResult> suites;
  long instances = 0;

  [[nodiscard]] long failure_count() const;
  [[nodiscard]] bool ok() const { return failure_count() == 0; }
};

/// One suite on one rigid object. The seed drives all sampling.
SuiteResult run_suite(const Category& c, const RigidObject& t, const std::string& name, std::uint64_t seed,
                      int samples);

SuiteReport run_suites(const InstanceConfig& cfg, Exec exec = Exec::Parallel);
SuiteReport run_suites(const Category& c, const InstanceConfig& cfg, Exec exec = Exec::Parallel);

/// Schema "cluster-loc/report/v1". The payload is deterministic; wall times
/// go into a separate "timing" object that is omitted when with_timing is false.
json report_json(const SuiteReport& r, bool with_timing);

/// Row of the image table: H of an indecomposable and its decomposition.
struct ImageRow {
  int index = 0;
  std::string label;
  std::string arc;
  std::vector<int> dims;
  std::string decomposition;  // "S1+S3", "0", or "?" when not a sum of listed modules
  bool in_sigma_tperp = false;
  bool in_CT = false;
};
struct ImageTable {
  std::vector<IndecModule> indecs;
  std::vector<ImageRow> rows;
  int skipped_dimension_vectors = 0;
};
ImageTable image_table(const Algebra& a);
json image_table_json(const Category& c, const ImageTable& t);

/// The fixed worked instance: type A_4, T = M44 + M14 + M11.
struct NamedCheck {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
};
std::vector<NamedCheck> a4_example_checks(const Category& c4);
RigidObject a4_example_rigid(const Category& c4);

/// "ar-quiver" or "image-quiver" as Graphviz text.
std::string export_dot(const Category& c, const RigidObject* t, const std::string& what);

}  // namespace cloc
