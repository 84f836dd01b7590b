#include "mgb/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mgb/buchberger.hpp"
#include "mgb/errors.hpp"
#include "mgb/scheduler.hpp"
#include "mgb/verify.hpp"

namespace mgb {

namespace fs = std::filesystem;

ProblemSpec with_order(ProblemSpec spec, OrderKind kind) {
  spec.order = MonomialOrder(kind, spec.order.ranking());
  const PolyRing ring = spec.ring();
  for (Polynomial& g : spec.generators) {
    std::vector<Term> terms;
    terms.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      terms.push_back({g.coeff(i), Monomial(g.monomial(i))});
    }
    g = ring.from_terms(std::move(terms));
  }
  return spec;
}

std::vector<std::size_t> parse_worker_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
      throw InputError("invalid worker range '" + text +
                       "' (expected N or A..B with 1 <= A <= B)");
    }
    return value;
  };
  std::size_t lo = 0, hi = 0;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    lo = number(std::string_view(text).substr(0, dots));
    hi = number(std::string_view(text).substr(dots + 2));
  } else {
    lo = hi = number(text);
  }
  if (lo > hi) {
    throw InputError("invalid worker range '" + text + "' (start exceeds end)");
  }
  std::vector<std::size_t> out;
  for (std::size_t w = lo; w <= hi; ++w) out.push_back(w);
  return out;
}

ComputeRun run_compute(const ProblemSpec& spec, const std::string& name,
                       std::size_t workers, const EngineOptions& options,
                       const std::optional<fs::path>& resume) {
  if (workers == 0) throw InputError("--workers must be at least 1");
  const PolyRing ring = spec.ring();
  EngineResult result;
  if (resume) {
    EngineState state = load_checkpoint(*resume, ring, spec.grading);
    result = workers == 1
                 ? continue_serial(ring, std::move(state), options)
                 : continue_master(ring, std::move(state), workers, options);
  } else {
    result = workers == 1 ? buchberger_serial(ring, spec.grading,
                                              spec.generators, options)
                          : run_master(ring, spec.grading, spec.generators,
                                       workers, options);
  }
  BasisStore reduced(spec.grading);
  if (result.completed) reduced = interreduce(ring, result.state.store);
  RunReport report = make_report(name, result, options, reduced.size());
  return {std::move(result), std::move(reduced), std::move(report)};
}

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.flush();
  if (!out) throw InputError("cannot write " + path.string());
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw InputError("cannot create output directory " + dir.string());
  }
}

/// Problem from a file path or a builtin name; exactly one must be given.
std::pair<ProblemSpec, std::string> load_problem(const std::string& file,
                                                 const std::string& builtin) {
  if (file.empty() == builtin.empty()) {
    throw InputError("give either a problem file or --builtin NAME");
  }
  if (!builtin.empty()) return {builtin_problem(builtin), builtin};
  try {
    return {parse_problem(read_text_file(file)), file};
  } catch (const InputError& e) {
    throw InputError(file + ": " + e.what());
  }
}

std::string round_table(const RunReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(5) << "round" << std::right << std::setw(8)
      << "degrees";
  for (const char* name : {"span_ms", "reduce_max", "reduce_min", "reduce_mean",
                           "genpairs_max", "genpairs_min", "genpairs_mean"}) {
    out << std::setw(15) << name;
  }
  out << '\n' << std::fixed << std::setprecision(3);
  for (const auto& r : report.rounds) {
    out << std::setw(5) << r.round << std::setw(8) << r.degrees;
    for (auto t : {r.span, r.reduce.max, r.reduce.min, r.reduce.mean,
                   r.genpairs.max, r.genpairs.min, r.genpairs.mean}) {
      out << ' ' << std::setw(14) << to_ms(t);
    }
    out << '\n';
  }
  return out.str();
}

struct ComputeArgs {
  std::string file;
  std::string builtin;
  std::size_t workers = 1;
  std::string strategy = "min-occupied";
  std::string order;
  std::string criteria = "product";
  std::string checkpoint;
  std::string resume;
  std::size_t stop_after = 0;
  std::string out_dir = "mgb-out";
};

int cmd_compute(const ComputeArgs& args, std::ostream& out) {
  auto [spec, name] = load_problem(args.file, args.builtin);
  if (!args.order.empty()) spec = with_order(std::move(spec), parse_order_kind(args.order));

  EngineOptions options;
  options.criteria = parse_criteria(args.criteria);
  options.strategy = parse_strategy(args.strategy);
  if (!args.checkpoint.empty()) options.checkpoint = fs::path(args.checkpoint);
  if (args.stop_after > 0) options.stop_after_rounds = args.stop_after;
  std::optional<fs::path> resume;
  if (!args.resume.empty()) resume = fs::path(args.resume);

  const fs::path dir(args.out_dir);
  ensure_dir(dir);
  ComputeRun run = run_compute(spec, name, args.workers, options, resume);

  write_file(dir / "basis.txt",
             print_basis_file(spec, run.result.state.store.polynomials()));
  if (run.result.completed) {
    write_file(dir / "basis.reduced.txt",
               print_basis_file(spec, run.reduced.polynomials()));
  } else {
    fs::remove(dir / "basis.reduced.txt");
  }
  std::ostringstream csv;
  csv << degree_csv_header() << '\n';
  write_degree_rows(csv, run.report);
  write_file(dir / "report.csv", csv.str());
  std::ostringstream rounds;
  rounds << round_csv_header() << '\n';
  write_round_rows(rounds, run.report);
  write_file(dir / "rounds.csv", rounds.str());

  std::string summary = summary_text(run.report);
  if (!run.result.completed) {
    summary += "status:           stopped after round " +
               std::to_string(run.result.state.round) +
               " (incomplete; no reduced basis written)\n";
  }
  summary += "\n" + round_table(run.report);
  write_file(dir / "summary.txt", summary);
  out << summary;
  return kExitOk;
}

int cmd_verify(const std::string& basis_path, const std::string& problem_path,
               const std::string& builtin, std::ostream& out) {
  BasisFile basis;
  try {
    basis = parse_basis_file(read_text_file(basis_path));
  } catch (const InputError& e) {
    throw InputError(basis_path + ": " + e.what());
  }
  auto [spec, name] = load_problem(problem_path, builtin);
  if (!same_ring(basis.ring, spec)) {
    throw InputError("basis and problem describe different rings");
  }
  const Certificate cert = certify_groebner(spec.ring(), spec.grading,
                                            basis.elements, spec.generators);
  if (!cert.ok) {
    out << "FAIL: " << cert.failed_item << " has nonzero normal form\n"
        << "counterexample: " << format_polynomial(*cert.remainder, spec.field, spec.variables)
        << '\n';
    return kExitNotGroebner;
  }
  out << "OK: " << cert.pairs_checked << " S-pairs and "
      << cert.generators_checked << " generators reduce to zero ("
      << basis.elements.size() << " basis elements)\n";
  return kExitOk;
}

struct BenchArgs {
  std::string family;
  std::string workers = "1..7";
  std::string strategy = "min-occupied";
  std::string criteria = "product";
  std::string out_dir = "mgb-bench";
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  const ProblemSpec spec = builtin_problem(args.family);
  const std::vector<std::size_t> counts = parse_worker_range(args.workers);
  EngineOptions options;
  options.criteria = parse_criteria(args.criteria);
  options.strategy = parse_strategy(args.strategy);

  const fs::path dir(args.out_dir);
  ensure_dir(dir);
  std::ostringstream degrees, rounds, summary;
  degrees << degree_csv_header() << '\n';
  rounds << round_csv_header() << '\n';
  summary << summary_csv_header() << '\n';

  std::optional<std::string> reference;
  std::vector<RunReport> reports;
  for (std::size_t w : counts) {
    ComputeRun run = run_compute(spec, args.family, w, options);
    std::string reduced = print_basis_file(spec, run.reduced.polynomials());
    if (!reference) {
      reference = reduced;
      write_file(dir / "basis.reduced.txt", reduced);
    } else if (reduced != *reference) {
      throw InvariantViolation("reduced basis with " + std::to_string(w) +
                               " workers differs from the first run");
    }
    write_degree_rows(degrees, run.report);
    write_round_rows(rounds, run.report);
    write_summary_row(summary, run.report);
    reports.push_back(std::move(run.report));
  }
  write_file(dir / "bench.csv", degrees.str());
  write_file(dir / "rounds.csv", rounds.str());
  write_file(dir / "summary.csv", summary.str());

  out << "problem " << args.family << ", strategy "
      << to_string(options.strategy) << ", criteria "
      << to_string(options.criteria) << '\n';
  out << "workers  engine    wallclock_ms  rounds  reduce_total_ms  "
         "genpairs_total_ms  busy_max_ms  busy_min_ms  busy_mean_ms  basis\n";
  out << std::fixed << std::setprecision(3);
  bool nonincreasing = true;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const RunReport& r = reports[k];
    if (k > 0 && r.wallclock > reports[k - 1].wallclock) nonincreasing = false;
    out << std::setw(7) << r.workers << "  " << std::left << std::setw(8)
        << r.engine << std::right << std::setw(14) << to_ms(r.wallclock)
        << std::setw(8) << r.rounds.size() << std::setw(17)
        << to_ms(r.reduce.total) << std::setw(19) << to_ms(r.genpairs.total)
        << std::setw(13) << to_ms(r.worker_busy_summary.max) << std::setw(13)
        << to_ms(r.worker_busy_summary.min) << std::setw(14)
        << to_ms(r.worker_busy_summary.mean) << std::setw(7) << r.reduced_size
        << '\n';
  }
  out << "reduced bases identical across " << reports.size() << " runs\n";
  out << "wallclock trend: "
      << (nonincreasing ? "nonincreasing"
                        : "not monotone (machine-dependent, not asserted)")
      << '\n';
  out << "data: " << (dir / "bench.csv").string() << ", "
      << (dir / "rounds.csv").string() << ", " << (dir / "summary.csv").string()
      << '\n';
  return kExitOk;
}

int cmd_example(const std::string& name, const std::string& path,
                std::ostream& out) {
  const std::string text = print_problem(builtin_problem(name));
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Multigraded Groebner bases with an antichain-parallel "
               "Buchberger algorithm",
               "mgb"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute a Groebner basis");
  c->add_option("problem", compute.file, "Problem file");
  c->add_option("--builtin", compute.builtin,
                "Builtin problem commuting:N. commuting:4 is expensive "
                "(hours even with --criteria product+chain; 563 elements)");
  c->add_option("--workers", compute.workers,
                "1 runs the serial engine, N >= 2 the master with N workers")
      ->check(CLI::Range(1, 4096))
      ->capture_default_str();
  c->add_option("--strategy", compute.strategy, "Antichain strategy")
      ->check(CLI::IsMember({"min-occupied", "total-degree"}))
      ->capture_default_str();
  c->add_option("--order", compute.order,
                "Override the monomial order (keeps the variable ranking)")
      ->check(CLI::IsMember({"lex", "degrevlex", "grlex"}));
  c->add_option("--criteria", compute.criteria, "Pair elimination criteria")
      ->check(CLI::IsMember({"none", "product", "product+chain"}))
      ->capture_default_str();
  c->add_option("--checkpoint", compute.checkpoint,
                "Write a checkpoint here after every round");
  c->add_option("--resume", compute.resume, "Continue from a checkpoint");
  c->add_option("--stop-after", compute.stop_after,
                "Stop after this many rounds in total (0 = run to completion)");
  c->add_option("--out", compute.out_dir, "Output directory")
      ->capture_default_str();

  std::string verify_basis, verify_problem, verify_builtin;
  auto* v = app.add_subcommand(
      "verify", "Check that a basis file is a Groebner basis of a problem");
  v->add_option("basis", verify_basis, "Basis file")->required();
  v->add_option("problem", verify_problem, "Problem file");
  v->add_option("--builtin", verify_builtin, "Builtin problem instead of a file");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run a builtin problem over a range of "
                                        "worker counts");
  b->add_option("family", bench.family, "Builtin problem, e.g. commuting:3")
      ->required();
  b->add_option("--workers", bench.workers, "N or A..B")->capture_default_str();
  b->add_option("--strategy", bench.strategy, "Antichain strategy")
      ->check(CLI::IsMember({"min-occupied", "total-degree"}))
      ->capture_default_str();
  b->add_option("--criteria", bench.criteria, "Pair elimination criteria")
      ->check(CLI::IsMember({"none", "product", "product+chain"}))
      ->capture_default_str();
  b->add_option("--out", bench.out_dir, "Output directory")->capture_default_str();

  std::string example_name, example_out;
  auto* e = app.add_subcommand("example", "Print a builtin problem as a problem file");
  e->add_option("name", example_name, "Builtin problem, e.g. commuting:2")
      ->required();
  e->add_option("--out", example_out, "Write to this file instead of stdout");

  std::vector<std::string> storage{"mgb"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*c) return cmd_compute(compute, out);
    if (*v) return cmd_verify(verify_basis, verify_problem, verify_builtin, out);
    if (*b) return cmd_bench(bench, out);
    if (*e) return cmd_example(example_name, example_out, out);
  } catch (const InputError& error) {
    err << "error: " << error.what() << '\n';
    return kExitInput;
  } catch (const InvariantViolation& error) {
    err << "internal error: invariant violated: " << error.what() << '\n';
    return kExitInternal;
  } catch (const WorkerFailure& error) {
    err << "internal error: worker failed: " << error.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& error) {
    err << "internal error: " << error.what() << '\n';
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace mgb
