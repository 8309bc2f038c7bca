// Copyright 2026 The seqsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: play | opt | spoa | verify | gen.
//
// Exit codes: 0 success, 1 a checked bound or property was violated (a
// finding, not a crash), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqsched/seqsched.hpp"

namespace {

using namespace seqsched;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct ModelArgs {
  std::string name;
  std::optional<int> k;
};

RationalityModel resolve_model(const ModelArgs& args) {
  if (args.name == "perfect") {
    if (args.k) throw InvalidSpec("--k is only meaningful with --model lookahead");
    return RationalityModel::perfect();
  }
  if (args.name == "lookahead") {
    if (!args.k) throw InvalidSpec("--model lookahead requires --k");
    return RationalityModel::lookahead(*args.k);
  }
  if (args.name == "simple-minded") {
    if (args.k) throw InvalidSpec("--k is only meaningful with --model lookahead");
    return RationalityModel::simple_minded();
  }
  if (args.name == "greedy") {
    if (args.k) throw InvalidSpec("--k is only meaningful with --model lookahead");
    return RationalityModel::greedy();
  }
  throw InvalidSpec("unknown model \"" + args.name +
                    "\"; expected perfect, lookahead, simple-minded or greedy");
}

void add_model_options(CLI::App* cmd, ModelArgs& args) {
  cmd->add_option("--model", args.name, "perfect | lookahead | simple-minded | greedy")
      ->required();
  cmd->add_option("--k", args.k, "lookahead depth (with --model lookahead)");
}

// output sink: --output PATH or stdout
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(path + ": cannot open file for writing");
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string sigma_str(const std::vector<int>& sigma) {
  std::string s;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    if (j > 0) s += ' ';
    s += std::to_string(sigma[j] + 1);
  }
  return s;
}

void print_trace(std::ostream& out, const Schedule& schedule) {
  for (const auto& record : schedule.trace) {
    out << "  job " << record.job + 1 << " -> machine " << record.chosen + 1
        << "  anticipated " << record.anticipated_cost.str() << "  [";
    for (std::size_t a = 0; a < record.alternatives.size(); ++a) {
      if (a > 0) out << ", ";
      out << record.alternatives[a].first + 1 << ": " << record.alternatives[a].second.str();
    }
    out << "]\n";
  }
}

int cmd_play(const std::string& path, const ModelArgs& model_args, const std::string& format,
             const std::string& output) {
  const RationalityModel model = resolve_model(model_args);
  const Instance inst = Instance::load(path);
  const Schedule schedule = play(inst, model);
  const LoadVector final_loads = loads_after(inst, schedule);
  Sink sink(output);
  auto& out = sink.out();
  if (format == "csv") {
    out << "job,machine,cost_c,cost_eps\n";
    for (const auto& record : schedule.trace) {
      out << record.job + 1 << ',' << record.chosen + 1 << ','
          << record.anticipated_cost.c.str() << ',' << record.anticipated_cost.e.str() << '\n';
    }
    return kExitOk;
  }
  out << "instance: " << (inst.name().empty() ? path : inst.name()) << " (machines="
      << inst.machines() << ", jobs=" << inst.jobs() << ")\n";
  out << "model: " << model.str() << '\n';
  out << "sigma: " << sigma_str(schedule.sigma) << '\n';
  print_trace(out, schedule);
  out << "final loads:";
  for (const auto& load : final_loads) out << ' ' << load.str();
  out << '\n';
  out << "makespan: " << makespan(final_loads).str() << '\n';
  return kExitOk;
}

int cmd_opt(const std::string& path, const std::string& output) {
  const Instance inst = Instance::load(path);
  const OptResult result = opt(inst);
  const auto [avg, maxmin] = opt_lower_bounds(inst);
  Sink sink(output);
  auto& out = sink.out();
  out << "instance: " << (inst.name().empty() ? path : inst.name()) << " (machines="
      << inst.machines() << ", jobs=" << inst.jobs() << ")\n";
  out << "opt makespan: " << result.makespan.str() << '\n';
  out << "witness: " << sigma_str(result.schedule.sigma) << '\n';
  out << "nodes explored: " << result.nodes_explored << '\n';
  out << "lower bounds: avg " << avg.str() << ", max-min " << maxmin.str() << '\n';
  return kExitOk;
}

int cmd_spoa(const std::vector<std::string>& paths, const ModelArgs& model_args,
             const std::string& format, const std::string& output, int jobs) {
  const RationalityModel model = resolve_model(model_args);
  std::vector<Instance> instances;
  instances.reserve(paths.size());
  for (const auto& path : paths) instances.push_back(Instance::load(path));

  std::vector<std::optional<SpoaReport>> reports(instances.size());
  std::vector<std::string> errors(instances.size());
  parallel_for_index(static_cast<int>(instances.size()), jobs, [&](int idx) {
    const auto i = static_cast<std::size_t>(idx);
    try {
      SpoaReport r = spoa(instances[i], model);
      if (r.instance.empty()) r.instance = paths[i];
      reports[i] = std::move(r);
    } catch (const Error& ex) {
      errors[i] = ex.what();
    }
  });

  Sink sink(output);
  auto& out = sink.out();
  bool any_error = false;
  bool any_violation = false;
  if (format == "csv") out << spoa_csv_header() << '\n';
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (!reports[i]) {
      any_error = true;
      std::cerr << "error: " << paths[i] << ": " << errors[i] << '\n';
      continue;
    }
    const SpoaReport& r = *reports[i];
    if (!r.bound_satisfied) any_violation = true;
    if (format == "csv") {
      out << spoa_csv_row(r) << '\n';
    } else {
      out << r.instance << ": model " << r.model.str() << ", equilibrium "
          << r.equilibrium_makespan.str() << ", opt " << r.opt_makespan.str() << ", ratio "
          << r.ratio_limit.str();
      if (r.bound) {
        out << ", bound " << r.bound->str() << ", " << (r.bound_satisfied ? "ok" : "VIOLATED");
      }
      out << '\n';
    }
  }
  if (any_error) return kExitUsage;
  return any_violation ? kExitViolation : kExitOk;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed, int jobs) {
  SuiteOptions opts;
  opts.trials = trials;
  opts.seed = seed;
  opts.jobs = jobs;
  const SuiteResult result = run_suite(suite, opts);
  std::cout << "suite: " << result.name << '\n';
  std::cout << "seed: " << result.seed << '\n';
  std::cout << "trials: " << result.trials << '\n';
  std::cout << "passed: " << result.passed << '\n';
  std::cout << "failed: " << result.failed << '\n';
  for (const auto& message : result.failure_messages) std::cout << "failure: " << message << '\n';
  if (result.first_counterexample) {
    std::cout << "first counterexample:\n" << *result.first_counterexample << '\n';
  }
  std::cout << "result: " << (result.ok() ? "PASS" : "FAIL") << '\n';
  return result.ok() ? kExitOk : kExitViolation;
}

int cmd_gen(const std::string& family, std::optional<int> m, std::optional<int> n,
            std::optional<std::uint64_t> seed, const std::string& output) {
  GeneratorSpec spec;
  if (family == "table1") {
    spec.family = Family::Table1;
  } else if (family == "table4") {
    spec.family = Family::Table4;
  } else if (family == "table5") {
    spec.family = Family::Table5;
  } else if (family == "simple-minded") {
    spec.family = Family::SimpleMindedFamily;
    if (!m) throw InvalidSpec("--family simple-minded requires --m");
    spec.machines = *m;
  } else if (family == "random") {
    spec.family = Family::Random;
    if (!m) throw InvalidSpec("--family random requires --m");
    if (!n) throw InvalidSpec("--family random requires --n");
    if (!seed) throw InvalidSpec("--family random requires --seed");
    spec.machines = *m;
    spec.jobs = *n;
    spec.seed = *seed;
  } else {
    throw InvalidSpec("unknown family \"" + family +
                      "\"; expected table1, table4, table5, simple-minded or random");
  }
  const Instance inst = gen(spec);
  if (output.empty()) {
    std::cout << inst.to_json().dump(2) << '\n';
  } else {
    inst.save(output);
    std::cout << "wrote " << output << " (" << inst.name() << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequential scheduling games on unrelated machines: play, exact optima,"
               " price-of-anarchy reports and property verification"};
  app.require_subcommand(1);

  // play
  auto* play_cmd = app.add_subcommand("play", "play one instance and print the trace");
  std::string play_instance;
  ModelArgs play_model;
  std::string play_format = "human";
  std::string play_output;
  play_cmd->add_option("--instance", play_instance, "instance file")->required();
  add_model_options(play_cmd, play_model);
  play_cmd->add_option("--format", play_format)->check(CLI::IsMember({"human", "csv"}));
  play_cmd->add_option("--output,-o", play_output, "write to file instead of stdout");

  // opt
  auto* opt_cmd = app.add_subcommand("opt", "exact optimal makespan by branch and bound");
  std::string opt_instance;
  std::string opt_output;
  opt_cmd->add_option("--instance", opt_instance, "instance file")->required();
  opt_cmd->add_option("--output,-o", opt_output, "write to file instead of stdout");

  // spoa
  auto* spoa_cmd = app.add_subcommand("spoa", "equilibrium/optimum ratio reports");
  std::vector<std::string> spoa_instances;
  ModelArgs spoa_model;
  std::string spoa_format = "human";
  std::string spoa_output;
  int spoa_jobs = 1;
  spoa_cmd->add_option("--instance", spoa_instances, "instance file (repeatable)")
      ->required()
      ->take_all();
  add_model_options(spoa_cmd, spoa_model);
  spoa_cmd->add_option("--format", spoa_format)->check(CLI::IsMember({"human", "csv"}));
  spoa_cmd->add_option("--output,-o", spoa_output, "write to file instead of stdout");
  spoa_cmd->add_option("--jobs", spoa_jobs, "worker threads across instances")
      ->check(CLI::PositiveNumber);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a named property suite");
  std::string verify_suite;
  int verify_trials = 100;
  std::uint64_t verify_seed = 0;
  int verify_jobs = 1;
  verify_cmd
      ->add_option("--suite", verify_suite,
                   "lemma1 | claim1 | simpleminded-monotone | theorem-bounds |"
                   " model-coincidence | opt-oracle")
      ->required();
  verify_cmd->add_option("--trials", verify_trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_seed, "ensemble seed")->required();
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads across trials")
      ->check(CLI::PositiveNumber);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  std::string gen_family;
  std::optional<int> gen_m;
  std::optional<int> gen_n;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_output;
  gen_cmd
      ->add_option("--family", gen_family,
                   "table1 | table4 | table5 | simple-minded | random")
      ->required();
  gen_cmd->add_option("--m", gen_m, "machine count (simple-minded, random)");
  gen_cmd->add_option("--n", gen_n, "job count (random)");
  gen_cmd->add_option("--seed", gen_seed, "seed (random)");
  gen_cmd->add_option("--output,-o", gen_output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (play_cmd->parsed()) return cmd_play(play_instance, play_model, play_format, play_output);
    if (opt_cmd->parsed()) return cmd_opt(opt_instance, opt_output);
    if (spoa_cmd->parsed()) {
      return cmd_spoa(spoa_instances, spoa_model, spoa_format, spoa_output, spoa_jobs);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_suite, verify_trials, verify_seed, verify_jobs);
    }
    if (gen_cmd->parsed()) return cmd_gen(gen_family, gen_m, gen_n, gen_seed, gen_output);
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
