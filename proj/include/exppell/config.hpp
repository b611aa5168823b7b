#ifndef EXPPELL_CONFIG_HPP
#define EXPPELL_CONFIG_HPP

#include <string>

#include "exppell/checker.hpp"

namespace exppell {

/// Tool-wide knobs. Precedence: config file, overridden by flags,
/// overridden by EXPPELL_* environment variables.
struct Config {
  int degree = 4;               // bounded-search degree cap d
  int height = 10;              // bounded-search coefficient cap H
  int samples = 4096;           // circle samples
  double tolerance = 1e-6;      // relative tolerance for numeric checks
  long pell_index_cap = 10000;  // |n| cap for pell_pair
  long long budget = 1000000;   // bounded-search candidate cap

  Bounds bounds() const { return {degree, height, budget}; }

  /// Throws Error(DomainError) when a field is out of range (all fields
  /// positive; tolerance in (0, 1e-3]).
  void validate() const;
};

/// key=value lines; '#' starts a comment. Unknown keys are rejected.
Config load_config_file(const std::string& path, Config base = {});

/// Applies EXPPELL_DEGREE, EXPPELL_HEIGHT, EXPPELL_SAMPLES, EXPPELL_TOL,
/// EXPPELL_PELL_INDEX_CAP, EXPPELL_BUDGET when present.
Config apply_env(Config base);

}  // namespace exppell

#endif
