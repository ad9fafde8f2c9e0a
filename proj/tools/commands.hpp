#pragma once

#include <iosfwd>

#include "config.hpp"

namespace sppcli {

enum Exit : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct Flags {
  bool printed_gamma_labels = false;
  bool textbook_squeeze = false;
  bool compare = false;
};

// Each command writes its document only after every row has been computed.
// Bad inputs throw ConfigError; library failures on a whole run throw
// std::runtime_error; failed rows are written and reported through the exit code.
int run_dispersion(const Config& cfg, const Flags& flags, std::ostream& log);
int run_gain_sweep(const Config& cfg, const Flags& flags, std::ostream& log);
int run_field(const Config& cfg, const Flags& flags, std::ostream& log);
int run_verify(const Config& cfg, const Flags& flags, std::ostream& log);

}  // namespace sppcli
