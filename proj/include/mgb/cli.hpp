#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mgb/basis.hpp"
#include "mgb/engine.hpp"
#include "mgb/ideals.hpp"
#include "mgb/report.hpp"

namespace mgb {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kExitNotGroebner = 3;

struct ComputeRun {
  EngineResult result;
  /// Empty unless the run completed.
  BasisStore reduced;
  RunReport report;
};

/// One engine run: serial for workers == 1, master/worker otherwise.
/// `resume` continues from a checkpoint instead of the generators.
ComputeRun run_compute(const ProblemSpec& spec, const std::string& name,
                       std::size_t workers, const EngineOptions& options,
                       const std::optional<std::filesystem::path>& resume = {});

/// Same problem under another order kind (keeping the variable ranking);
/// generators are re-sorted.
ProblemSpec with_order(ProblemSpec spec, OrderKind kind);

/// "N" or "A..B" with 1 <= A <= B. Throws InputError.
std::vector<std::size_t> parse_worker_range(const std::string& text);

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mgb
