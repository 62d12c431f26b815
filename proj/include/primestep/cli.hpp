#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "primestep/checked.hpp"

// Command implementations behind tools/primestep. Each returns the process
// exit code and writes only to the streams it is given.
namespace primestep::cli {

enum class Format { Text, Json, Csv };
enum class Arithmetic { Checked64, BigNum };

enum ExitCode : int { kOk = 0, kUsage = 1, kOverflow = 2, kVerifyFail = 3, kIoError = 4 };

struct RunConfig {
  std::uint32_t max_step = 1;
  std::optional<Int> limit;  // overrides max_step with the smallest covering step
  Arithmetic arithmetic = Arithmetic::Checked64;
  Format format = Format::Text;
  bool verify = false;
  Int seed_n = 1;
};

/// Smallest s with floor((limit+1)/6) <= r-_s and floor((limit-1)/6) <= r+_s.
std::uint32_t step_for_limit(Int limit);

/// The step a config resolves to.
std::uint32_t resolve_step(const RunConfig& config);

int cmd_primes(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_step(std::uint32_t s, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table1(const RunConfig& config, std::ostream& out);
/// inject_fault flips one gamma of the final state before comparing (test mode).
int cmd_verify(std::uint32_t s_max, const RunConfig& config, std::ostream& out, std::ostream& err,
               bool inject_fault = false);
int cmd_bench(std::uint32_t s_max, std::ostream& out, std::ostream& err);
/// Writes to `path` when given, else to `out`.
int cmd_dump(const RunConfig& config, bool all_rows, const std::optional<std::string>& path, std::ostream& out,
             std::ostream& err);

}  // namespace primestep::cli
