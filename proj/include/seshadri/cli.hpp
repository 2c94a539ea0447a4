#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "seshadri/bounds.hpp"
#include "seshadri/exact_math.hpp"

namespace seshadri::cli {

enum class OutputFormat { text, csv, json };

struct RunConfig {
  OutputFormat format = OutputFormat::text;
  int decimals = 4;
  std::int64_t scan_cap = kDefaultScanCap;
  unsigned parallelism = 0;  ///< 0: one thread per hardware thread
  bool full_precision = false;

  DecimalStyle style() const { return full_precision ? DecimalStyle::full : DecimalStyle::compact; }
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiscrepancy = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seshadri::cli
