// JSON / CSV serialization for configurations, certificates and run reports.
// Rationals cross the boundary as strings "p/q" in lowest terms, q > 0,
// never as floats.
#pragma once

#include "tvt/config.hpp"
#include "tvt/probabilistic.hpp"
#include "tvt/splits.hpp"
#include "tvt/tolerance.hpp"

#include <json.hpp>

#include <string>

namespace tvt {

using Json = nlohmann::json;

Json point_to_json(const Point& p);
Point point_from_json(const Json& j, int expected_dim);

// Schema: { "d": int, "r": int, "classes": [ [ ["num/den", ...], ... ], ... ] }
Json config_to_json(const Configuration& config);
Configuration config_from_json(const Json& j);

Json halfspace_to_json(const HalfSpace& h);
HalfSpace halfspace_from_json(const Json& j);

Json certificate_to_json(const SplitCertificate& cert);
SplitCertificate certificate_from_json(const Json& j);

Json partition_to_json(const ColorfulPartition& partition);
ColorfulPartition partition_from_json(const Json& j);

Json tolerance_report_to_json(const ToleranceReport& report);
Json attack_report_to_json(const AttackReport& report);
Json search_report_to_json(const SearchReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Experiment driver inputs. Seeds are mandatory for randomized commands so
// identical specs reproduce identical results.
struct ExperimentSpec {
  std::string command;
  std::string generator_kind = "random";  // perfect_split, clustered,
                                          // nested_pairs, random, from_file
  int N = 0, r = 0, d = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string input_file;
  long long trials = 100;
  long long budget_subsets = 1 << 22;
  long long budget_families = 10'000'000;
  int target_tolerance = 0;
  int r_max = 6, d_max = 3;  // constants table
  std::string out_dir = ".";
  std::string format = "json";  // json, csv, both

  void validate() const;
};

ExperimentSpec spec_from_json(const Json& j);
Json spec_to_json(const ExperimentSpec& spec);

// Loads a configuration according to the spec's generator settings.
Configuration realize_configuration(const ExperimentSpec& spec);

const char* library_version();

}  // namespace tvt
