// Batch experiment front end: configuration generation, property-check
// suites, tolerance / search / attack / capacity runs, and the constants
// table, with JSON and CSV reports.
//
// Exit codes: 0 all checks pass, 2 property violation, 3 budget exhaustion,
// 4 input error.

#include "tvt/formulas.hpp"
#include "tvt/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>

namespace {

using namespace tvt;

struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PropertyViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json run_generate(const ExperimentSpec& spec) {
  const auto config = realize_configuration(spec);
  const std::string path =
      (std::filesystem::path(spec.out_dir) / "config.json").string();
  write_text_file(path, config_to_json(config).dump(2) + "\n");
  Json results{{"config_file", "config.json"},
               {"kind", spec.generator_kind},
               {"N", config.count()},
               {"r", config.r},
               {"d", config.d}};
  if (spec.generator_kind == "perfect_split") {
    const auto [cfg, family] = generate_perfect_split(spec.N, spec.r, spec.d, spec.seed);
    results["perfect_split_verified"] = is_perfect_split(family, cfg);
  }
  return results;
}

Json run_check(const ExperimentSpec& spec) {
  const auto config = realize_configuration(spec);
  const int N = config.count();
  const int r = config.r;
  const int d = config.d;
  const std::size_t n = static_cast<std::size_t>(r - 1) * (d + 1);
  long long failures = 0;
  Json results;

  {  // Hull-intersection / origin-capture equivalence over partitions.
    long long checked = 0;
    Integer space = 1;
    for (int c = 1; c < N; ++c) space *= static_cast<long long>(factorial(r));
    if (space <= 2000) {
      std::vector<std::vector<int>> perms;
      std::vector<int> p(r);
      for (int i = 0; i < r; ++i) p[i] = i;
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      ColorfulPartition part;
      part.assignment.assign(N, perms.front());
      std::function<void(int)> visit = [&](int c) {
        if (c == N) {
          ++checked;
          try {
            capture_equivalence_check(config, part);
          } catch (const InternalError&) {
            ++failures;
          }
          return;
        }
        for (const auto& perm : perms) {
          part.assignment[c] = perm;
          visit(c + 1);
        }
      };
      visit(1);
    } else {
      SplitRng rng(spec.seed);
      for (long long t = 0; t < spec.trials; ++t) {
        const auto choice = random_colorful_choice(config, rng.child(t));
        ++checked;
        try {
          capture_equivalence_check(config, choice_to_partition(choice, config));
        } catch (const InternalError&) {
          ++failures;
        }
      }
    }
    results["capture_equivalence_checked"] = checked;
  }

  {  // Pushdown families: empty open intersection, covering closed union.
    SplitRng rng(SplitRng(spec.seed).child(1));
    long long checked = 0;
    for (long long t = 0; t < spec.trials; ++t) {
      SplitRng stream = rng.child(t);
      HalfSpace h;
      h.offset = 0;
      h.open = true;
      h.normal.assign(n, Rational(0));
      for (auto& v : h.normal) v = make_rational(stream.range(-50, 50), 7);
      HalfSpaceFamily family;
      try {
        family = pushdown_halfspace(h, r, d);
      } catch (const std::invalid_argument&) {
        continue;  // degenerate draw
      }
      ++checked;
      if (!open_intersection_empty(family)) ++failures;
      if (!closed_union_covers_space(family)) ++failures;
    }
    results["pushdown_checked"] = checked;
  }

  {  // Structural conditions of the class membership matrix.
    SplitRng rng(SplitRng(spec.seed).child(2));
    const auto sv = make_simplex_vectors(r);
    long long checked = 0;
    for (long long t = 0; t < spec.trials; ++t) {
      SplitRng stream = rng.child(t);
      HalfSpace h;
      h.offset = 0;
      h.open = false;  // closed, contains the origin
      h.normal.assign(n, Rational(0));
      for (auto& v : h.normal) v = make_rational(stream.range(-50, 50), 7);
      if (is_zero(h.normal)) continue;
      const auto& cls = config.classes[static_cast<std::size_t>(
          stream.below(static_cast<std::uint64_t>(N)))];
      // Rows are simplex-vector indices, columns are class points: each
      // column's lifts sum to zero, so a closed half-space through the
      // origin covers every column.
      HitMatrix matrix;
      matrix.r = r;
      matrix.entries.assign(r, std::vector<int>(r, 0));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          matrix.entries[i][j] = h.contains(lift(cls[j], i, sv)) ? 1 : 0;
      ++checked;
      if (!matrix.every_column_covered()) ++failures;
      if (!matrix.find_cover_rows(d)) ++failures;
    }
    results["membership_matrix_checked"] = checked;
  }

  results["failures"] = failures;
  if (failures > 0) throw PropertyViolation("property suite reported failures");
  return results;
}

Json run_tolerance(const ExperimentSpec& spec) {
  const auto config = realize_configuration(spec);
  ToleranceOptions opts;
  opts.subset_budget = spec.budget_subsets;
  opts.want_certificate = true;
  const auto [partition, report] = best_partition_tolerance(config, opts);
  if (report.status == ToleranceReport::Status::BudgetExhausted)
    throw BudgetExhausted("tolerance subset budget exhausted");
  return Json{{"best_partition", partition_to_json(partition)},
              {"report", tolerance_report_to_json(report)}};
}

Json run_search(const ExperimentSpec& spec) {
  const auto config = realize_configuration(spec);
  ToleranceOptions opts;
  opts.subset_budget = spec.budget_subsets;
  const auto report = search_tolerant_partition(config, spec.target_tolerance,
                                                spec.trials, spec.seed, opts);
  return Json{{"search", search_report_to_json(report)}};
}

Json run_capacity(const ExperimentSpec& spec, bool monte_carlo) {
  const auto config = realize_configuration(spec);
  CapacityMode mode;
  if (monte_carlo) {
    mode.kind = CapacityMode::MonteCarlo;
    mode.trials = spec.trials;
    mode.seed = spec.seed;
  }
  mode.family_budget = spec.budget_families;
  const auto result = split_capacity(config, mode);
  if (result.status == CapacityResult::Status::BudgetExceeded)
    throw BudgetExhausted("capacity candidate space " +
                          result.candidate_space.str() + " exceeds budget");
  return Json{{"f", result.f},
              {"mode", monte_carlo ? "monte_carlo" : "exact"},
              {"certificate", certificate_to_json(result.certificate)}};
}

Json run_attack(const ExperimentSpec& spec) {
  const auto config = realize_configuration(spec);
  CapacityMode mode;
  const auto points = config.all_points();
  if (config.r != 2 || points.size() > 16) {
    mode.kind = CapacityMode::MonteCarlo;
    mode.trials = std::max<long long>(spec.trials, 50);
    mode.seed = spec.seed;
  }
  mode.family_budget = spec.budget_families;
  const auto capacity = split_capacity(config, mode);
  if (capacity.status == CapacityResult::Status::BudgetExceeded)
    throw BudgetExhausted("capacity candidate space exceeds budget");

  const auto choice =
      random_colorful_choice(config, SplitRng(spec.seed).child(0x7061727469ull));
  const auto partition = choice_to_partition(choice, config);
  const auto report = adversary_attack(config, partition, capacity.certificate);
  if (!report.broken_verified)
    throw PropertyViolation("attack failed to break the partition");
  return Json{{"f", capacity.f},
              {"partition", partition_to_json(partition)},
              {"attack", attack_report_to_json(report)}};
}

Json run_constants(const ExperimentSpec& spec) {
  Json rows = Json::array();
  for (int r = 2; r <= spec.r_max; ++r) {
    for (int d = 1; d <= spec.d_max; ++d) {
      Json row{{"r", r},
               {"d", d},
               {"p_r", rational_to_string(fixed_point_probability(r))},
               {"p_r_decimal", rational_to_decimal(fixed_point_probability(r), 12)}};
      if (r > d + 1) {
        const Rational q = min_column_hit_probability(r, d);
        row["q"] = rational_to_string(q);
        row["q_decimal"] = rational_to_decimal(q, 12);
        row["avoidance"] = rational_to_string(extremal_avoidance_probability(r, d));
        Json counts = Json::array();
        for (int c : extremal_matrix(r, d).row_counts())
          if (c > 0) counts.push_back(c);
        row["extremal_row_counts"] = counts;
      }
      rows.push_back(std::move(row));
    }
  }
  return Json{{"table", rows}};
}

std::string constants_csv(const Json& results) {
  std::string out = "r,d,p_r,p_r_decimal,q,q_decimal,avoidance,extremal_row_counts\n";
  for (const auto& row : results.at("table")) {
    out += std::to_string(row.at("r").get<int>()) + "," +
           std::to_string(row.at("d").get<int>()) + "," +
           row.at("p_r").get<std::string>() + "," +
           row.at("p_r_decimal").get<std::string>() + ",";
    if (row.contains("q")) {
      out += row.at("q").get<std::string>() + "," +
             row.at("q_decimal").get<std::string>() + "," +
             row.at("avoidance").get<std::string>() + ",";
      std::string counts;
      for (const auto& c : row.at("extremal_row_counts"))
        counts += (counts.empty() ? "" : "|") + std::to_string(c.get<int>());
      out += counts;
    } else {
      out += ",,,";
    }
    out += "\n";
  }
  return out;
}

std::string flat_csv(const Json& results) {
  std::string header, values;
  std::function<void(const std::string&, const Json&)> walk =
      [&](const std::string& prefix, const Json& node) {
        if (node.is_object()) {
          for (const auto& [key, value] : node.items())
            walk(prefix.empty() ? key : prefix + "." + key, value);
        } else if (node.is_array()) {
          std::string joined;
          for (const auto& v : node)
            joined += (joined.empty() ? "" : "|") +
                      (v.is_string() ? v.get<std::string>() : v.dump());
          header += (header.empty() ? "" : ",") + prefix;
          values += (values.empty() ? "" : ",") + joined;
        } else {
          header += (header.empty() ? "" : ",") + prefix;
          values += (values.empty() ? "" : ",") +
                    (node.is_string() ? node.get<std::string>() : node.dump());
        }
      };
  walk("", results);
  return header + "\n" + values + "\n";
}

void emit(const ExperimentSpec& spec, const Json& results, long long wall_ms) {
  Json report{{"spec", spec_to_json(spec)},
              {"results", results},
              {"seed", spec.seed},
              {"version", library_version()},
              {"wall_ms", wall_ms}};
  std::filesystem::create_directories(spec.out_dir);
  const auto out = std::filesystem::path(spec.out_dir);
  if (spec.format == "json" || spec.format == "both")
    write_text_file((out / "report.json").string(), report.dump(2) + "\n");
  if (spec.format == "csv" || spec.format == "both") {
    const std::string csv = spec.command == "constants" ? constants_csv(results)
                                                        : flat_csv(results);
    write_text_file((out / "report.csv").string(), csv);
  }
  std::cout << results.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments with colorful point partitions under "
               "class removal: splits, tolerance oracles, randomized search, "
               "adversary attacks, and permutation constants."};
  app.require_subcommand(1);

  ExperimentSpec spec;
  spec.out_dir.clear();  // resolved after merging flag / spec file / env
  std::string spec_file;
  bool monte_carlo = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_file, "experiment spec JSON file");
    cmd->add_option("--seed", spec.seed, "master seed")
        ->each([&](const std::string&) { spec.seed_set = true; });
    cmd->add_option("-N,--classes", spec.N, "number of color classes");
    cmd->add_option("-r,--parts", spec.r, "points per class / parts");
    cmd->add_option("-d,--dim", spec.d, "ambient dimension");
    cmd->add_option("--kind", spec.generator_kind,
                    "perfect_split|clustered|nested_pairs|random|from_file");
    cmd->add_option("--input", spec.input_file, "configuration JSON (from_file)");
    cmd->add_option("--trials", spec.trials, "trial count");
    cmd->add_option("--budget-subsets", spec.budget_subsets, "subset search cap");
    cmd->add_option("--budget-families", spec.budget_families, "family search cap");
    cmd->add_option("--target", spec.target_tolerance, "target tolerance");
    cmd->add_option("--r-max", spec.r_max, "constants table r limit");
    cmd->add_option("--d-max", spec.d_max, "constants table d limit");
    cmd->add_option("--out", spec.out_dir, "output directory");
    cmd->add_option("--format", spec.format, "json|csv|both");
  };

  for (const char* name : {"generate", "check", "tolerance", "search", "attack",
                           "capacity", "constants"})
    add_common(app.add_subcommand(name));
  app.get_subcommand("capacity")
      ->add_flag("--mc", monte_carlo, "Monte Carlo lower bound mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if (!spec_file.empty()) {
      auto parsed = spec_from_json(Json::parse(read_text_file(spec_file)));
      // Flags given on the command line override spec-file fields.
      const auto given = [&](const char* name) { return sub->count(name) > 0; };
      if (given("--seed")) {
        parsed.seed = spec.seed;
        parsed.seed_set = true;
      }
      if (given("--classes")) parsed.N = spec.N;
      if (given("--parts")) parsed.r = spec.r;
      if (given("--dim")) parsed.d = spec.d;
      if (given("--kind")) parsed.generator_kind = spec.generator_kind;
      if (given("--input")) parsed.input_file = spec.input_file;
      if (given("--trials")) parsed.trials = spec.trials;
      if (given("--budget-subsets")) parsed.budget_subsets = spec.budget_subsets;
      if (given("--budget-families")) parsed.budget_families = spec.budget_families;
      if (given("--target")) parsed.target_tolerance = spec.target_tolerance;
      if (given("--r-max")) parsed.r_max = spec.r_max;
      if (given("--d-max")) parsed.d_max = spec.d_max;
      if (given("--out")) parsed.out_dir = spec.out_dir;
      if (given("--format")) parsed.format = spec.format;
      spec = std::move(parsed);
    }
    spec.command = command;
    if (spec.out_dir.empty()) {
      const char* env = std::getenv("TVT_OUT_DIR");
      spec.out_dir = env != nullptr && *env != '\0' ? env : ".";
    }
    const bool randomized =
        command == "search" || command == "attack" || command == "check" ||
        (command == "capacity" && monte_carlo) ||
        (command == "generate" && spec.generator_kind != "from_file");
    if (randomized && !spec.seed_set)
      throw std::invalid_argument("randomized commands require an explicit --seed");

    std::filesystem::create_directories(spec.out_dir);
    const auto start = std::chrono::steady_clock::now();
    Json results;
    if (command == "generate") results = run_generate(spec);
    else if (command == "check") results = run_check(spec);
    else if (command == "tolerance") results = run_tolerance(spec);
    else if (command == "search") results = run_search(spec);
    else if (command == "attack") results = run_attack(spec);
    else if (command == "capacity") results = run_capacity(spec, monte_carlo);
    else results = run_constants(spec);
    const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    emit(spec, results, wall_ms);
    return 0;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const PropertyViolation& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 4;
  }
}
