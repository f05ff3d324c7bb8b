// Copyright 2026 The IRLS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

#include "CLI11.hpp"
#include "irls/errors.h"
#include "irls/instance_io.h"
#include "irls/instances.h"
#include "irls/meta.h"

namespace irls::cli {
namespace {

// Flag or input problems that should exit with kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal form that reads back to the same double.
std::string Real(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return ec == std::errc() ? std::string(buffer, ptr) : std::string("nan");
}

std::string Cell(const std::optional<double>& value) {
  return value && std::isfinite(*value) ? Real(*value) : std::string();
}

Norm ParseNorm(const std::string& name) {
  return name == "l1" ? Norm::kL1 : Norm::kLinf;
}

StepMode ParseStep(const std::string& name) {
  return name == "long" ? StepMode::kLong : StepMode::kShort;
}

void CheckEpsFlag(double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw UsageError("--eps must lie in (0, 0.5]");
  }
}

RegressionInstance LoadInstance(const std::string& path) {
  try {
    return ReadInstance(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const SpanError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// Everything needed to run one solver call and report it.
struct Job {
  Norm norm = Norm::kLinf;
  bool optimize = true;
  StepMode step = StepMode::kShort;
  bool phases = false;
  double eps = 0.1;
  std::optional<double> target;
  const RegressionInstance* instance = nullptr;
  std::optional<std::uint64_t> seed;
};

struct JobResult {
  RunRecord record;
  IterationTrace trace;
};

JobResult RunJob(const Job& job) {
  const Matrix& a = job.instance->a;
  const Vector& b = job.instance->b;
  JobResult result;
  RunRecord& record = result.record;
  record.solver = NormName(job.norm);
  record.mode = job.optimize ? "optimize" : "decide";
  record.step = StepModeName(job.step);
  record.n = static_cast<long>(a.rows());
  record.m = static_cast<long>(a.cols());
  record.eps = job.eps;
  record.seed = job.seed;

  const auto start = std::chrono::steady_clock::now();
  if (job.optimize) {
    OptimizeOptions options;
    options.step_mode = job.step;
    options.phased = job.phases;
    OptimizeResult solved = Optimize(a, b, job.eps, job.norm, options);
    record.outcome = "optimal";
    record.objective = solved.value;
    record.certificate = solved.lower_bound;
    result.trace = std::move(solved.trace);
  } else {
    DecisionResult solved;
    if (job.phases) {
      PhaseOptions options;
      options.step_mode = job.step;
      solved = PhasedDecide(a, b, job.norm, job.eps, *job.target, options);
    } else {
      DecideOptions options;
      options.step_mode = job.step;
      solved = Decide(a, b, job.norm, job.eps, *job.target, options);
    }
    record.target = job.target;
    if (solved.feasible()) {
      record.outcome = "feasible";
      record.objective = ObjectiveValue(solved.outcome);
    } else {
      record.outcome = "infeasible";
      record.certificate = CertifiedLowerBound(solved.outcome);
    }
    result.trace = std::move(solved.trace);
  }
  record.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  record.iterations = result.trace.iterations();
  return result;
}

unsigned WorkerCount(std::size_t jobs) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("IRLS_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) workers = std::min(workers, static_cast<unsigned>(cap));
  }
  return static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(jobs, 1)));
}

// Runs every job, in parallel where allowed, and returns the results in
// job order. The first failure is rethrown after all workers stop.
std::vector<JobResult> RunAll(const std::vector<Job>& jobs) {
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = RunJob(jobs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  std::vector<std::thread> threads;
  const unsigned count = WorkerCount(jobs.size());
  for (unsigned t = 1; t < count; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& thread : threads) thread.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  return out;
}

// ---------------------------------------------------------------- solve

struct SolveFlags {
  std::string norm = "linf";
  std::string mode = "decide";
  double eps = 0.1;
  std::optional<double> target;
  std::string step = "short";
  bool phases = false;
  std::string instance;
  std::string trace;
  bool csv_header = false;
};

void AddSolve(CLI::App& app, SolveFlags& flags) {
  CLI::App* cmd = app.add_subcommand("solve", "Solve a single instance file");
  cmd->add_option("--norm", flags.norm, "Objective norm")
      ->check(CLI::IsMember({"linf", "l1"}));
  cmd->add_option("--mode", flags.mode, "decide against --target, or optimize")
      ->check(CLI::IsMember({"decide", "optimize"}));
  cmd->add_option("--eps", flags.eps, "Accuracy in (0, 0.5]")->required();
  cmd->add_option("--target", flags.target, "Target value M (decide mode)");
  cmd->add_option("--step", flags.step, "Weight update rule")
      ->check(CLI::IsMember({"short", "long"}));
  cmd->add_flag("--phases", flags.phases, "Warm-start from coarser accuracies");
  cmd->add_option("--instance", flags.instance, "Instance file")->required();
  cmd->add_option("--trace", flags.trace, "Write per-iteration CSV here");
  cmd->add_flag("--csv-header", flags.csv_header,
                "Print the CSV header before the record");
}

int RunSolve(const SolveFlags& flags, std::ostream& out) {
  CheckEpsFlag(flags.eps);
  const bool optimize = flags.mode == "optimize";
  if (!optimize) {
    if (!flags.target) throw UsageError("decide mode requires --target");
    if (!(*flags.target > 0.0) || !std::isfinite(*flags.target)) {
      throw UsageError("--target must be positive and finite");
    }
  }
  const RegressionInstance instance = LoadInstance(flags.instance);
  std::ofstream trace_out;
  if (!flags.trace.empty()) trace_out = OpenOutput(flags.trace);

  Job job;
  job.norm = ParseNorm(flags.norm);
  job.optimize = optimize;
  job.step = ParseStep(flags.step);
  job.phases = flags.phases;
  job.eps = flags.eps;
  job.target = flags.target;
  job.instance = &instance;
  const JobResult result = RunJob(job);

  if (flags.csv_header) out << CsvHeader() << '\n';
  out << FormatRecord(result.record) << '\n';
  if (trace_out.is_open()) WriteTraceCsv(trace_out, result.trace);
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchFlags {
  std::string suite = "eps";
  std::string norm = "linf";
  std::string step = "short";
  std::string mode = "optimize";
  long n = 150;
  long m = 200;
  long sparsity = 15;
  std::uint64_t seed = 1;
  std::string out;
  std::optional<int> max_k;
  double eps = 0.01;
  std::optional<double> target;
  bool phases = false;
};

void AddBench(CLI::App& app, BenchFlags& flags) {
  CLI::App* cmd = app.add_subcommand("bench", "Run a benchmark grid");
  cmd->add_option("--suite", flags.suite,
                  "eps: ε = 2^-k, k = 1..12; m: m = base·k, k = 1..30")
      ->check(CLI::IsMember({"eps", "m"}));
  cmd->add_option("--norm", flags.norm)->check(CLI::IsMember({"linf", "l1"}));
  cmd->add_option("--step", flags.step)
      ->check(CLI::IsMember({"short", "long", "both"}));
  cmd->add_option("--mode", flags.mode)
      ->check(CLI::IsMember({"decide", "optimize"}));
  cmd->add_option("--n", flags.n)->check(CLI::PositiveNumber);
  cmd->add_option("--m", flags.m, "Columns (base column count for --suite m)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--sparsity", flags.sparsity)->check(CLI::PositiveNumber);
  cmd->add_option("--seed", flags.seed);
  cmd->add_option("--out", flags.out, "CSV output file")->required();
  cmd->add_option("--max-k", flags.max_k, "Truncate the grid to k <= max-k")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--eps", flags.eps, "Fixed accuracy for --suite m");
  cmd->add_option("--target", flags.target, "Target value M (decide mode)");
  cmd->add_flag("--phases", flags.phases);
}

int RunBench(const BenchFlags& flags, std::ostream& out) {
  const bool eps_suite = flags.suite == "eps";
  const bool optimize = flags.mode == "optimize";
  if (!eps_suite) CheckEpsFlag(flags.eps);
  if (!optimize && !flags.target) {
    throw UsageError("decide mode requires --target");
  }
  if (flags.sparsity > flags.m) {
    throw UsageError("--sparsity cannot exceed --m");
  }
  const int grid_size =
      std::min(flags.max_k.value_or(eps_suite ? 12 : 30), eps_suite ? 12 : 30);
  std::ofstream csv = OpenOutput(flags.out);

  std::vector<StepMode> steps;
  if (flags.step != "long") steps.push_back(StepMode::kShort);
  if (flags.step != "short") steps.push_back(StepMode::kLong);

  // Instances are generated up front so the grid order fixes the data.
  std::vector<RegressionInstance> instances;
  std::vector<double> accuracies;
  for (int k = 1; k <= grid_size; ++k) {
    if (eps_suite) {
      accuracies.push_back(std::ldexp(1.0, -k));
      if (instances.empty()) {
        instances.push_back(RandomOrthogonalInstance(flags.n, flags.m,
                                                     flags.sparsity, flags.seed));
      }
    } else {
      accuracies.push_back(flags.eps);
      instances.push_back(RandomOrthogonalInstance(flags.n, flags.m * k,
                                                   flags.sparsity, flags.seed));
    }
  }

  std::vector<Job> jobs;
  for (int k = 0; k < grid_size; ++k) {
    for (StepMode step : steps) {
      Job job;
      job.norm = ParseNorm(flags.norm);
      job.optimize = optimize;
      job.step = step;
      job.phases = flags.phases;
      job.eps = accuracies[k];
      job.target = flags.target;
      job.instance = &instances[eps_suite ? 0 : k];
      job.seed = flags.seed;
      jobs.push_back(job);
    }
  }

  const std::vector<JobResult> results = RunAll(jobs);
  csv << CsvHeader() << '\n';
  out << "step   n      m        eps          iterations  wall_ms     outcome\n";
  for (const JobResult& result : results) {
    const RunRecord& r = result.record;
    csv << FormatRecord(r) << '\n';
    char line[160];
    std::snprintf(line, sizeof(line), "%-6s %-6ld %-8ld %-12.6g %-11ld %-11.1f %s\n",
                  r.step.c_str(), r.n, r.m, r.eps, r.iterations, r.wall_ms,
                  r.outcome.c_str());
    out << line;
  }
  if (!csv) throw UsageError("failed writing " + flags.out);
  return kExitOk;
}

// ---------------------------------------------------------------- gen

struct GenFlags {
  long n = 0;
  long m = 0;
  long sparsity = 1;
  std::uint64_t seed = 1;
  std::string out;
  std::string graph;
  long n_vertices = 0;
  std::string edges;
  std::string demand;
};

void AddGen(CLI::App& app, GenFlags& flags) {
  CLI::App* cmd = app.add_subcommand(
      "gen", "Write a random instance or a graph incidence instance");
  cmd->add_option("--n", flags.n, "Rows")->check(CLI::PositiveNumber);
  cmd->add_option("--m", flags.m, "Columns")->check(CLI::PositiveNumber);
  cmd->add_option("--sparsity", flags.sparsity, "Nonzeros in the planted x")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", flags.seed);
  cmd->add_option("--out", flags.out, "Instance file to write")->required();
  cmd->add_option("--graph", flags.graph,
                  "path: the path 1→2→…→n; edges: read --edges")
      ->check(CLI::IsMember({"path", "edges"}));
  cmd->add_option("--n-vertices", flags.n_vertices)->check(CLI::PositiveNumber);
  cmd->add_option("--edges", flags.edges,
                  "One directed edge per line: 'u v' with 1-based vertices");
  cmd->add_option("--demand", flags.demand,
                  "n-vertices reals; default routes one unit from the first "
                  "vertex to the last");
}

std::vector<std::string> ReadLines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

DirectedGraph ReadEdges(const std::string& path, long n_vertices) {
  DirectedGraph graph;
  graph.n_vertices = n_vertices;
  const std::vector<std::string> lines = ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    long u = 0;
    long v = 0;
    if (!(row >> u)) continue;  // blank line
    std::string rest;
    if (!(row >> v) || (row >> rest)) {
      throw UsageError(path + ": line " + std::to_string(i + 1) +
                       ": expected 'u v'");
    }
    graph.edges.emplace_back(u - 1, v - 1);
  }
  return graph;
}

Vector ReadDemand(const std::string& path, long n_vertices) {
  std::vector<double> values;
  for (const std::string& line : ReadLines(path)) {
    std::istringstream row(line);
    for (std::string token; row >> token;) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw UsageError(path + ": cannot parse '" + token + "'");
      }
    }
  }
  if (static_cast<long>(values.size()) != n_vertices) {
    throw UsageError(path + ": expected " + std::to_string(n_vertices) +
                     " demand values");
  }
  return Eigen::Map<Vector>(values.data(), n_vertices);
}

int RunGen(const GenFlags& flags) {
  RegressionInstance instance;
  if (!flags.graph.empty()) {
    if (flags.n_vertices < 2) throw UsageError("--n-vertices must be >= 2");
    DirectedGraph graph;
    if (flags.graph == "path") {
      graph = PathGraph(flags.n_vertices);
    } else {
      if (flags.edges.empty()) throw UsageError("--graph edges needs --edges");
      graph = ReadEdges(flags.edges, flags.n_vertices);
    }
    try {
      instance.a = IncidenceMatrix(graph);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
    if (flags.demand.empty()) {
      instance.b = Vector::Zero(flags.n_vertices);
      instance.b[0] = 1.0;
      instance.b[flags.n_vertices - 1] = -1.0;
    } else {
      instance.b = ReadDemand(flags.demand, flags.n_vertices);
    }
    try {
      CheckInColumnSpan(instance.a, instance.b);
    } catch (const SpanError& e) {
      throw UsageError(std::string("demand cannot be routed: ") + e.what());
    }
  } else {
    if (flags.n < 1 || flags.m < 1) {
      throw UsageError("gen needs --n and --m (or --graph)");
    }
    if (flags.sparsity > flags.m) {
      throw UsageError("--sparsity cannot exceed --m");
    }
    if (flags.n > flags.m) throw UsageError("--n cannot exceed --m");
    instance = RandomOrthogonalInstance(flags.n, flags.m, flags.sparsity,
                                        flags.seed);
  }
  try {
    WriteInstance(flags.out, instance);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

}  // namespace

const std::string& CsvHeader() {
  static const std::string header =
      "solver,mode,step,n,m,eps,target,iterations,wall_ms,outcome,objective,"
      "certificate,seed";
  return header;
}

std::string FormatRecord(const RunRecord& record) {
  std::ostringstream line;
  char wall[32];
  std::snprintf(wall, sizeof(wall), "%.3f", record.wall_ms);
  line << record.solver << ',' << record.mode << ',' << record.step << ','
       << record.n << ',' << record.m << ',' << Real(record.eps) << ','
       << Cell(record.target) << ',' << record.iterations << ',' << wall << ','
       << record.outcome << ',' << Cell(record.objective) << ','
       << Cell(record.certificate) << ',';
  if (record.seed) line << *record.seed;
  return line.str();
}

void WriteTraceCsv(std::ostream& out, const IterationTrace& trace) {
  out << "call,iteration,weight_l1,energy,invariant_ratio,"
         "invariant_ratio_by_difference,num_increased,max_alpha,averaged,"
         "step_doublings\n";
  for (const IterationRecord& r : trace.records) {
    out << r.call << ',' << r.iteration << ',' << Real(r.weight_l1) << ','
        << Real(r.energy) << ',' << Cell(r.invariant_ratio) << ','
        << Cell(r.invariant_ratio_by_difference) << ',' << r.num_increased
        << ',' << Real(r.max_alpha) << ',' << (r.averaged ? 1 : 0) << ','
        << r.step_doublings << '\n';
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Iteratively reweighted least squares for min-norm regression",
               "irls"};
  app.require_subcommand(1);
  SolveFlags solve;
  BenchFlags bench;
  GenFlags gen;
  AddSolve(app, solve);
  AddBench(app, bench);
  AddGen(app, gen);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("solve")) return RunSolve(solve, out);
    if (app.got_subcommand("bench")) return RunBench(bench, out);
    return RunGen(gen);
  } catch (const UsageError& e) {
    err << "irls: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "irls: solver error: " << e.what() << '\n';
    return kExitSolver;
  }
}

}  // namespace irls::cli
