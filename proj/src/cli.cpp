#include "moflow/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "moflow/aof.hpp"
#include "moflow/bi_enum.hpp"
#include "moflow/generators.hpp"
#include "moflow/instance_io.hpp"
#include "moflow/mo_enum.hpp"
#include "moflow/network.hpp"
#include "moflow/oracle.hpp"
#include "moflow/scalar_mcf.hpp"

namespace moflow::cli {

namespace {

struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& message)
      : std::runtime_error(message) {}
};

using Field = std::pair<std::string, std::string>;

struct RecordWriter {
  std::ostream& out;
  bool csv = false;
  bool csv_header_written = false;

  // List values inside a field use ',' in record format, ';' in CSV.
  char list_separator() const { return csv ? ';' : ','; }

  void record(const std::vector<Field>& fields) {
    if (csv) {
      if (!csv_header_written) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
          out << (i ? "," : "") << fields[i].first;
        }
        out << "\n";
        csv_header_written = true;
      }
      for (std::size_t i = 0; i < fields.size(); ++i) {
        out << (i ? "," : "") << fields[i].second;
      }
      out << "\n";
    } else {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        out << (i ? " " : "") << fields[i].first << "=" << fields[i].second;
      }
      out << "\n";
    }
  }

  // Summary lines are record-format metadata; CSV output keeps data rows
  // only.
  void summary(const std::vector<Field>& fields) {
    if (csv) return;
    record(fields);
  }
};

std::string format_outcome(const OutcomeVector& y, char separator) {
  return rationals_to_string(y, separator);
}

std::string format_flow(const Flow& flow, char separator) {
  std::string text;
  for (std::size_t a = 0; a < flow.values.size(); ++a) {
    if (a > 0) text.push_back(separator);
    text += std::to_string(a + 1) + "=" + std::to_string(flow.values[a]);
  }
  return text;
}

std::string format_weights(const WeightVector& weights, char separator) {
  return rationals_to_string(weights.components, separator);
}

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == separator) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

Network load_instance(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  return parse_instance_file(path);
}

Network load_validated(const std::string& path) {
  Network network = load_instance(path);
  const ValidationReport report = validate(network);
  if (!report.ok()) {
    std::string message = "invalid instance:";
    for (const auto& violation : report.violations) {
      message += "\n  " + violation;
    }
    throw std::domain_error(message);
  }
  return network;
}

WeightVector parse_lambda(const std::string& text, int d) {
  const auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != d) {
    throw CLI::ValidationError("--lambda needs " + std::to_string(d) +
                               " comma-separated rationals");
  }
  WeightVector weights;
  for (const auto& part : parts) {
    try {
      weights.components.push_back(rational_from_string(part));
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError(std::string("--lambda: ") + e.what());
    }
  }
  if (!weights.valid()) {
    throw CLI::ValidationError(
        "--lambda must be componentwise >= 0 and not all zero");
  }
  return weights;
}

std::vector<int> parse_order(const std::string& text, int d) {
  const auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != d) {
    throw CLI::ValidationError("--lex needs a permutation of 1.." +
                               std::to_string(d));
  }
  std::vector<int> order;
  std::vector<char> used(d, 0);
  for (const auto& part : parts) {
    int value = 0;
    try {
      value = std::stoi(part);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--lex: bad objective index '" + part + "'");
    }
    if (value < 1 || value > d || used[value - 1]) {
      throw CLI::ValidationError("--lex is not a permutation of 1.." +
                                 std::to_string(d));
    }
    used[value - 1] = 1;
    order.push_back(value - 1);
  }
  return order;
}

struct SupportedOptions {
  std::uint64_t limit = 0;  // 0 = unlimited
  bool check = false;
  int jobs = 1;
};

// Shared driver for the supported-flow commands: dispatches on d, collects
// or streams records, applies --limit and optional --check verification.
struct SupportedRun {
  std::size_t emitted = 0;
  bool truncated = false;
  std::size_t extremes = 0;
  std::size_t facets = 0;
};

SupportedRun run_supported(const Network& network,
                           const SupportedOptions& options,
                           const std::function<void(const SupportedFlow&)>&
                               emit_record) {
  SupportedRun info;
  auto verify_record = [&network, &options](const SupportedFlow& record) {
    if (!options.check) return;
    if (!record.witness.strictly_positive()) {
      throw InternalError("witness weights not strictly positive");
    }
    if (!verify_optimal(network, record.witness, record.flow).optimal) {
      throw InternalError("emitted flow fails optimality verification");
    }
  };
  SupportedSink sink = [&](const SupportedFlow& record) {
    if (options.limit > 0 && info.emitted >= options.limit) {
      info.truncated = true;
      return false;
    }
    verify_record(record);
    emit_record(record);
    ++info.emitted;
    return true;
  };

  if (network.d() == 1) {
    // One objective: the supported flows are exactly the optima.
    const WeightVector lambda = uniform_weights(1);
    const ScalarSolution seed = solve(network, lambda);
    info.extremes = 1;
    enumerate_optimal_flows(network, lambda, seed, nullptr,
                            [&](const Flow& flow) {
                              return sink(SupportedFlow{
                                  flow, outcome(network, flow), lambda});
                            });
    return info;
  }

  if (network.d() == 2) {
    const ExtremeList extremes = extreme_supported_points(network);
    info.extremes = extremes.size();
    info.facets = extremes.size() > 1 ? extremes.size() - 1 : 1;
    if (extremes.size() == 1) {
      const WeightVector lambda = canonical_weights(uniform_weights(2));
      const ScalarSolution seed = solve(network, lambda);
      enumerate_optimal_flows(network, lambda, seed, nullptr,
                              [&](const Flow& flow) {
                                return sink(SupportedFlow{
                                    flow, outcome(network, flow), lambda});
                              });
      return info;
    }
    const auto tasks = bi_sweep_tasks(extremes);
    if (options.jobs > 1 && tasks.size() > 1) {
      // Facet sweeps are independent; collect in parallel, emit in facet
      // order. Byte-identical to the sequential sweep.
      std::vector<std::future<std::vector<Flow>>> futures;
      for (const auto& task : tasks) {
        futures.push_back(std::async(std::launch::async, [&network, &task]() {
          std::vector<Flow> flows;
          const ScalarSolution seed = solve(network, task.lambda);
          FlowPredicate keep;
          if (task.drop_anchor_c1) {
            keep = [&network, &task](const Flow& flow) {
              Rational c1(0);
              for (int a = 0; a < network.m(); ++a) {
                if (flow.values[a] != 0) {
                  c1 += network.arcs[a].cost[0] *
                        make_rational(flow.values[a]);
                }
              }
              return c1 != task.anchor[0];
            };
          }
          enumerate_optimal_flows(network, task.lambda, seed, keep,
                                  [&flows](const Flow& flow) {
                                    flows.push_back(flow);
                                    return true;
                                  });
          return flows;
        }));
      }
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        const std::vector<Flow> flows = futures[i].get();
        for (const Flow& flow : flows) {
          if (!sink(SupportedFlow{flow, outcome(network, flow),
                                  tasks[i].lambda})) {
            return info;
          }
        }
      }
      return info;
    }
    all_supported_flows_bi(network, sink);
    return info;
  }

  const UpperImage ui = compute_upper_image(network);
  info.extremes = ui.vertices.size();
  info.facets = ui.facets.size();
  SupportedFlowEnumerator enumerator(network, ui);
  enumerator.run(sink, options.jobs);
  return info;
}

struct CommandContext {
  std::ostream& out;
  std::ostream& err;
  bool csv = false;
  bool timing = false;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  RecordWriter writer() { return RecordWriter{out, csv}; }

  void append_timing(std::vector<Field>& fields) const {
    if (timing) {
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      fields.emplace_back("time_ms", std::to_string(elapsed.count()));
    }
  }
};

int command_validate(CommandContext& context, const std::string& path) {
  Network network;
  network = load_instance(path);
  const ValidationReport report = validate(network);
  RecordWriter writer = context.writer();
  for (const auto& violation : report.violations) {
    writer.record({{"kind", "violation"}, {"message", violation}});
  }
  std::vector<Field> summary = {
      {"kind", "summary"},
      {"command", "validate"},
      {"digest", instance_digest(network)},
      {"status", report.ok() ? std::string("ok") : std::string("invalid")},
      {"violations", std::to_string(report.violations.size())},
  };
  context.append_timing(summary);
  writer.summary(summary);
  return report.ok() ? kExitOk : kExitSemantic;
}

int command_solve(CommandContext& context, const std::string& path,
                  const std::string& lambda_text,
                  const std::string& lex_text) {
  const Network network = load_validated(path);
  RecordWriter writer = context.writer();
  const char sep = writer.list_separator();

  ScalarSolution solution;
  std::vector<Field> fields = {{"kind", "solution"}};
  if (!lambda_text.empty()) {
    const WeightVector weights = parse_lambda(lambda_text, network.d());
    solution = solve(network, weights);
    fields.emplace_back("lambda", format_weights(weights, sep));
    fields.emplace_back("objective",
                        rational_to_string(solution.objective_value));
  } else {
    const std::vector<int> order = parse_order(lex_text, network.d());
    solution = solve_lexicographic(network, order);
    std::string order_text;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i) order_text.push_back(sep);
      order_text += std::to_string(order[i] + 1);
    }
    fields.emplace_back("lex", order_text);
  }
  fields.emplace_back("outcome",
                      format_outcome(outcome(network, solution.flow), sep));
  fields.emplace_back("flow", format_flow(solution.flow, sep));
  writer.record(fields);

  std::vector<Field> summary = {{"kind", "summary"},
                                {"command", "solve"},
                                {"digest", instance_digest(network)}};
  context.append_timing(summary);
  writer.summary(summary);
  return kExitOk;
}

int command_extreme(CommandContext& context, const std::string& path,
                    bool with_flows) {
  const Network network = load_validated(path);
  if (network.d() < 2) {
    throw std::domain_error("extreme requires at least two objectives");
  }
  RecordWriter writer = context.writer();
  const char sep = writer.list_separator();

  std::size_t facet_count = 0;
  std::vector<std::pair<OutcomeVector, Flow>> vertices;
  if (network.d() == 2) {
    for (const auto& point : extreme_supported_points(network)) {
      vertices.emplace_back(point.y, point.flow);
    }
    facet_count = vertices.size() > 1 ? vertices.size() - 1 : 1;
  } else {
    const UpperImage ui = compute_upper_image(network);
    for (const auto& vertex : ui.vertices) {
      vertices.emplace_back(vertex.y, vertex.flow);
    }
    facet_count = ui.facets.size();
  }

  int index = 1;
  for (const auto& [y, flow] : vertices) {
    std::vector<Field> fields = {{"kind", "extreme"},
                                 {"index", std::to_string(index++)},
                                 {"outcome", format_outcome(y, sep)}};
    if (with_flows) fields.emplace_back("flow", format_flow(flow, sep));
    writer.record(fields);
  }
  std::vector<Field> summary = {{"kind", "summary"},
                                {"command", "extreme"},
                                {"digest", instance_digest(network)},
                                {"extremes", std::to_string(vertices.size())},
                                {"facets", std::to_string(facet_count)}};
  context.append_timing(summary);
  writer.summary(summary);
  return kExitOk;
}

int command_supported(CommandContext& context, const std::string& path,
                      const SupportedOptions& options) {
  const Network network = load_validated(path);
  RecordWriter writer = context.writer();
  const char sep = writer.list_separator();

  const SupportedRun info =
      run_supported(network, options, [&](const SupportedFlow& record) {
        writer.record({{"kind", "supported"},
                       {"outcome", format_outcome(record.y, sep)},
                       {"flow", format_flow(record.flow, sep)},
                       {"lambda", format_weights(record.witness, sep)}});
      });

  std::vector<Field> summary = {
      {"kind", "summary"},
      {"command", "supported"},
      {"digest", instance_digest(network)},
      {"extremes", std::to_string(info.extremes)},
      {"facets", std::to_string(info.facets)},
      {"supported", std::to_string(info.emitted)},
      {"truncated", info.truncated ? "1" : "0"},
  };
  context.append_timing(summary);
  writer.summary(summary);
  return kExitOk;
}

int command_classify(CommandContext& context, const std::string& path,
                     std::uint64_t cap) {
  const Network network = load_validated(path);
  const Classification classification = classify(network, cap);
  RecordWriter writer = context.writer();
  const char sep = writer.list_separator();

  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& entry : classification.outcomes) {
    std::vector<Field> fields = {
        {"kind", "class"},
        {"label", to_string(entry.label)},
        {"outcome", format_outcome(entry.y, sep)},
        {"flows", std::to_string(entry.flow_ids.size())},
    };
    if (entry.witness) {
      fields.emplace_back("lambda", format_weights(*entry.witness, sep));
    }
    if (entry.dominated_by) {
      fields.emplace_back("dominated_by",
                          format_outcome(*entry.dominated_by, sep));
    }
    writer.record(fields);
    counts[static_cast<int>(entry.label)] += entry.flow_ids.size();
  }

  std::vector<Field> summary = {
      {"kind", "summary"},
      {"command", "classify"},
      {"digest", instance_digest(network)},
      {"flows", std::to_string(classification.flows.size())},
      {"supported", std::to_string(counts[0])},
      {"weakly_only", std::to_string(counts[1])},
      {"unsupported", std::to_string(counts[2])},
      {"dominated", std::to_string(counts[3])},
  };
  context.append_timing(summary);
  writer.summary(summary);
  return kExitOk;
}

std::uint64_t default_oracle_cap() {
  if (const char* env = std::getenv("MOFLOW_ORACLE_CAP")) {
    try {
      const long long value = std::stoll(env);
      if (value > 0) return static_cast<std::uint64_t>(value);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return kDefaultOracleCap;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact enumeration toolkit for multi-objective integer "
               "minimum-cost flows"};
  app.require_subcommand(1);
  bool csv = false;
  bool timing = false;
  app.add_flag("--timing", timing,
               "append wall time to summary records (non-deterministic)");
  std::string format = "records";
  app.add_option("--format", format, "output format: records or csv")
      ->check(CLI::IsMember({"records", "csv"}));

  auto* cmd_validate = app.add_subcommand(
      "validate", "parse an instance and check its invariants");
  std::string validate_path;
  cmd_validate->add_option("path", validate_path, "instance file ('-' for stdin)")
      ->required();

  auto* cmd_solve =
      app.add_subcommand("solve", "solve one weighted-sum or lexicographic "
                                  "minimum-cost flow problem");
  std::string solve_path, solve_lambda, solve_lex;
  cmd_solve->add_option("path", solve_path, "instance file")->required();
  auto* lambda_opt = cmd_solve->add_option(
      "--lambda", solve_lambda, "comma-separated weights (int or p/q)");
  auto* lex_opt = cmd_solve->add_option(
      "--lex", solve_lex, "comma-separated objective order (1-based)");
  lambda_opt->excludes(lex_opt);

  auto* cmd_extreme = app.add_subcommand(
      "extreme", "enumerate the extreme supported outcome vectors");
  std::string extreme_path;
  bool extreme_flows = false;
  cmd_extreme->add_option("path", extreme_path, "instance file")->required();
  cmd_extreme->add_flag("--flows", extreme_flows,
                        "include one preimage flow per vertex");

  auto* cmd_supported = app.add_subcommand(
      "supported", "enumerate all supported efficient flows");
  std::string supported_path;
  SupportedOptions supported_options;
  cmd_supported->add_option("path", supported_path, "instance file")
      ->required();
  cmd_supported->add_option("--limit", supported_options.limit,
                            "emit at most this many flows");
  cmd_supported->add_flag("--check", supported_options.check,
                          "re-verify every emitted flow and witness");
  cmd_supported
      ->add_option("--jobs", supported_options.jobs,
                   "parallel facet sweeps (same output as --jobs 1)")
      ->check(CLI::Range(1, 64));

  auto* cmd_classify = app.add_subcommand(
      "classify", "brute-force oracle classification of all outcomes");
  std::string classify_path;
  std::uint64_t classify_cap = 0;
  cmd_classify->add_option("path", classify_path, "instance file")->required();
  cmd_classify->add_option(
      "--cap", classify_cap,
      "maximum number of feasible flows the oracle may enumerate");

  auto* cmd_gen =
      app.add_subcommand("gen", "generate a named instance on stdout");
  cmd_gen->require_subcommand(1);
  auto* gen_fig2 =
      cmd_gen->add_subcommand("fig2", "bundled tri-objective example");
  auto* gen_star = cmd_gen->add_subcommand(
      "star", "source-sink star with equal costs and C(2n-1,n) optima");
  int star_n = 2;
  int star_d = 2;
  gen_star->add_option("--n", star_n, "number of middle nodes")
      ->check(CLI::Range(1, 1000));
  gen_star->add_option("--d", star_d, "number of objectives")
      ->check(CLI::Range(1, 16));
  auto* gen_random = cmd_gen->add_subcommand("random", "seeded random instance");
  RandomSpec random_spec;
  gen_random->add_option("--n", random_spec.nodes, "nodes")
      ->check(CLI::Range(1, 1000));
  gen_random->add_option("--m", random_spec.arcs, "arcs");
  gen_random->add_option("--d", random_spec.objectives, "objectives")
      ->check(CLI::Range(1, 16));
  gen_random->add_option("--maxcost", random_spec.max_cost, "cost range 0..maxcost");
  gen_random->add_option("--maxcap", random_spec.max_capacity,
                         "capacity range 0..maxcap");
  gen_random->add_option("--seed", random_spec.seed, "RNG seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CommandContext context{out, err, csv, timing};
  context.csv = format == "csv";

  try {
    if (cmd_validate->parsed()) return command_validate(context, validate_path);
    if (cmd_solve->parsed()) {
      if (solve_lambda.empty() && solve_lex.empty()) {
        err << "error: solve needs --lambda or --lex\n";
        return kExitUsage;
      }
      return command_solve(context, solve_path, solve_lambda, solve_lex);
    }
    if (cmd_extreme->parsed()) {
      return command_extreme(context, extreme_path, extreme_flows);
    }
    if (cmd_supported->parsed()) {
      return command_supported(context, supported_path, supported_options);
    }
    if (cmd_classify->parsed()) {
      const std::uint64_t cap =
          classify_cap > 0 ? classify_cap : default_oracle_cap();
      return command_classify(context, classify_path, cap);
    }
    if (cmd_gen->parsed()) {
      if (gen_fig2->parsed()) {
        write_instance(fig2_instance(), out, {"fig2"});
        return kExitOk;
      }
      if (gen_star->parsed()) {
        std::ostringstream name;
        name << "star n=" << star_n << " d=" << star_d;
        write_instance(star_instance(star_n, star_d), out, {name.str()});
        return kExitOk;
      }
      if (gen_random->parsed()) {
        std::ostringstream name;
        name << "random n=" << random_spec.nodes << " m=" << random_spec.arcs
             << " d=" << random_spec.objectives
             << " maxcost=" << random_spec.max_cost
             << " maxcap=" << random_spec.max_capacity
             << " seed=" << random_spec.seed;
        write_instance(random_instance(random_spec), out, {name.str()});
        return kExitOk;
      }
    }
    err << "error: no command\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace moflow::cli
