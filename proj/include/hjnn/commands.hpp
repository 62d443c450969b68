#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hjnn/config.hpp"

namespace hjnn {

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitVerifyFailed = 2, kExitIo = 3 };

/// Prints `value=<v> argmin=<i> gap=<g>` (1-based argmin). t = 0 on arch1
/// evaluates the initial data.
int cmd_eval(const std::filesystem::path& config, const std::string& x, double t, std::ostream& out,
             std::ostream& err);

/// One CSV per slice time at `<prefix>_t<t>.csv`, plus `<prefix>_t<t>.pgm` with `render`.
int cmd_slice(const std::filesystem::path& config, const std::filesystem::path& slice, const std::string& prefix,
              bool render, std::ostream& out, std::ostream& err);

/// Writes `<report>.txt` and `<report>.kv`; exit 0 iff every tolerance passes.
/// `report` defaults to the config path with its extension replaced by `.verify`.
int cmd_verify(const std::filesystem::path& config, std::size_t samples, std::uint64_t seed, bool residual_only,
               const std::optional<std::filesystem::path>& report, std::ostream& out, std::ostream& err);

/// Bench CSV on `out`, and to `csv_path` when given.
int cmd_bench(const std::string& architecture, const std::vector<std::size_t>& dims, std::size_t m,
              std::size_t reps, const std::optional<std::filesystem::path>& csv_path, std::ostream& out,
              std::ostream& err);

}  // namespace hjnn
