#include "tvt/io.hpp"

#include <fstream>
#include <sstream>

namespace tvt {

const char* library_version() { return "0.1.0"; }

Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(rational_to_string(c));
  return out;
}

Point point_from_json(const Json& j, int expected_dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != expected_dim)
    throw std::invalid_argument("point entry has wrong arity");
  Point p;
  for (const auto& c : j) p.push_back(parse_rational(c.get<std::string>()));
  return p;
}

Json config_to_json(const Configuration& config) {
  config.validate();
  Json classes = Json::array();
  for (const auto& cls : config.classes) {
    Json jc = Json::array();
    for (const auto& p : cls) jc.push_back(point_to_json(p));
    classes.push_back(std::move(jc));
  }
  return Json{{"d", config.d}, {"r", config.r}, {"classes", classes}};
}

Configuration config_from_json(const Json& j) {
  Configuration config;
  try {
    config.d = j.at("d").get<int>();
    config.r = j.at("r").get<int>();
    for (const auto& jc : j.at("classes")) {
      std::vector<Point> cls;
      for (const auto& jp : jc) cls.push_back(point_from_json(jp, config.d));
      config.classes.push_back(std::move(cls));
    }
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("configuration parse error: ") + e.what());
  }
  config.validate();
  return config;
}

Json halfspace_to_json(const HalfSpace& h) {
  return Json{{"normal", point_to_json(h.normal)},
              {"offset", rational_to_string(h.offset)},
              {"open", h.open}};
}

HalfSpace halfspace_from_json(const Json& j) {
  HalfSpace h;
  for (const auto& c : j.at("normal"))
    h.normal.push_back(parse_rational(c.get<std::string>()));
  h.offset = parse_rational(j.at("offset").get<std::string>());
  h.open = j.at("open").get<bool>();
  return h;
}

Json certificate_to_json(const SplitCertificate& cert) {
  Json family = Json::array();
  for (const auto& h : cert.family.halfspaces) family.push_back(halfspace_to_json(h));
  return Json{{"family", family},
              {"split_classes", cert.split_class_indices},
              {"matchings", cert.matchings}};
}

SplitCertificate certificate_from_json(const Json& j) {
  SplitCertificate cert;
  for (const auto& jh : j.at("family"))
    cert.family.halfspaces.push_back(halfspace_from_json(jh));
  cert.split_class_indices = j.at("split_classes").get<std::vector<int>>();
  cert.matchings = j.at("matchings").get<std::vector<std::vector<int>>>();
  return cert;
}

Json partition_to_json(const ColorfulPartition& partition) {
  return Json{{"assignment", partition.assignment}};
}

ColorfulPartition partition_from_json(const Json& j) {
  ColorfulPartition p;
  p.assignment = j.at("assignment").get<std::vector<std::vector<int>>>();
  return p;
}

Json tolerance_report_to_json(const ToleranceReport& report) {
  Json out{{"tolerance", report.tolerance},
           {"break_set", report.break_set},
           {"status", report.status == ToleranceReport::Status::Ok
                          ? "ok"
                          : "budget_exhausted"}};
  if (!report.disjointness_certificate.empty()) {
    Json cert = Json::array();
    for (const auto& v : report.disjointness_certificate)
      cert.push_back(rational_to_string(v));
    out["disjointness_certificate"] = cert;
  }
  return out;
}

Json attack_report_to_json(const AttackReport& report) {
  return Json{{"labeling", report.labeling},
              {"removed_classes", report.removed_classes},
              {"removed_unsplittable", report.removed_unsplittable},
              {"broken_verified", report.broken_verified},
              {"expected_removals", rational_to_string(report.expected_removals)}};
}

Json search_report_to_json(const SearchReport& report) {
  return Json{{"trials_attempted", report.trials_attempted},
              {"per_trial_tolerance", report.per_trial_tolerance},
              {"found", report.found},
              {"best_partition", partition_to_json(report.best_partition)},
              {"best", tolerance_report_to_json(report.best_report)},
              {"seed", report.seed}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

void ExperimentSpec::validate() const {
  if (command.empty()) throw std::invalid_argument("spec needs a command");
  if (generator_kind != "from_file") {
    if (N < 1) throw std::invalid_argument("spec needs N >= 1");
    if (r < 2) throw std::invalid_argument("spec needs r >= 2");
    if (d < 1) throw std::invalid_argument("spec needs d >= 1");
  }
  if (format != "json" && format != "csv" && format != "both")
    throw std::invalid_argument("format must be json, csv or both");
}

ExperimentSpec spec_from_json(const Json& j) {
  ExperimentSpec spec;
  try {
    spec.command = j.value("command", "");
    if (j.contains("generator")) {
      const auto& g = j.at("generator");
      spec.generator_kind = g.value("kind", spec.generator_kind);
      spec.N = g.value("N", spec.N);
      spec.r = g.value("r", spec.r);
      spec.d = g.value("d", spec.d);
      if (g.contains("seed")) {
        spec.seed = g.at("seed").get<std::uint64_t>();
        spec.seed_set = true;
      }
      spec.input_file = g.value("file", spec.input_file);
    }
    if (j.contains("budgets")) {
      const auto& b = j.at("budgets");
      spec.trials = b.value("trials", spec.trials);
      spec.budget_subsets = b.value("subsets", spec.budget_subsets);
      spec.budget_families = b.value("families", spec.budget_families);
    }
    if (j.contains("seed")) {
      spec.seed = j.at("seed").get<std::uint64_t>();
      spec.seed_set = true;
    }
    spec.target_tolerance = j.value("target_tolerance", spec.target_tolerance);
    spec.r_max = j.value("r_max", spec.r_max);
    spec.d_max = j.value("d_max", spec.d_max);
    spec.out_dir = j.value("out", std::string());  // empty = resolve later
    spec.format = j.value("format", spec.format);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("spec parse error: ") + e.what());
  }
  return spec;
}

Json spec_to_json(const ExperimentSpec& spec) {
  return Json{{"command", spec.command},
              {"generator",
               Json{{"kind", spec.generator_kind},
                    {"N", spec.N},
                    {"r", spec.r},
                    {"d", spec.d},
                    {"seed", spec.seed},
                    {"file", spec.input_file}}},
              {"budgets",
               Json{{"trials", spec.trials},
                    {"subsets", spec.budget_subsets},
                    {"families", spec.budget_families}}},
              {"seed", spec.seed},
              {"target_tolerance", spec.target_tolerance},
              {"r_max", spec.r_max},
              {"d_max", spec.d_max},
              {"format", spec.format}};
}

Configuration realize_configuration(const ExperimentSpec& spec) {
  if (spec.generator_kind == "from_file") {
    return config_from_json(Json::parse(read_text_file(spec.input_file)));
  }
  spec.validate();
  if (spec.generator_kind == "perfect_split")
    return generate_perfect_split(spec.N, spec.r, spec.d, spec.seed).first;
  if (spec.generator_kind == "clustered")
    return generate_clustered_config(spec.N, spec.r, spec.d, spec.seed);
  if (spec.generator_kind == "nested_pairs") {
    if (spec.r != 2)
      throw std::invalid_argument("nested_pairs generates classes of two points");
    Configuration config;
    config.d = spec.d;
    config.r = 2;
    for (int i = 1; i <= spec.N; ++i) {
      Point a(spec.d, Rational(0)), b(spec.d, Rational(0));
      a[0] = -i;
      b[0] = i;
      config.classes.push_back({a, b});
    }
    return config;
  }
  if (spec.generator_kind == "random") {
    SplitRng rng(spec.seed);
    Configuration config;
    config.d = spec.d;
    config.r = spec.r;
    for (int c = 0; c < spec.N; ++c) {
      SplitRng stream = rng.child(static_cast<std::uint64_t>(c));
      std::vector<Point> cls;
      for (int j = 0; j < spec.r; ++j) {
        Point p(spec.d);
        for (int k = 0; k < spec.d; ++k)
          p[k] = make_rational(stream.range(-1000, 1000), stream.range(1, 20));
        cls.push_back(std::move(p));
      }
      config.classes.push_back(std::move(cls));
    }
    return config;
  }
  throw std::invalid_argument("unknown generator kind: " + spec.generator_kind);
}

}  // namespace tvt
