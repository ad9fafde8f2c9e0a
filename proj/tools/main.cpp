#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "output.hpp"

int main(int argc, char** argv) {
  using namespace sppcli;

  CLI::App app{"Surface plasmon modes of a metal film between gain or loss dielectrics"};
  app.set_version_flag("--version", "spp 0.1.0");
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string config_path;
  std::string out_path;
  double tolerance = 0.0;
  Flags flags;
  bool dump = false;
  app.add_option("-c,--config", config_path, "INI config; omitted keys take their defaults")
      ->check(CLI::ExistingFile);
  app.add_option("-o,--out", out_path, "output path, overriding the section's out key");
  app.add_option("--tolerance", tolerance, "solver tolerance, overriding [solver] tolerance")
      ->check(CLI::PositiveNumber);
  app.add_flag("--printed-gamma-labels", flags.printed_gamma_labels,
               "swap the two gamma' noise weights (verify is expected to fail the CCR check)");
  app.add_flag("--textbook-squeeze", flags.textbook_squeeze,
               "use mu alpha - nu alpha* for the squeezed-state mean");
  app.add_flag("--dump-config", dump, "print the effective config and exit");

  auto* dispersion = app.add_subcommand("dispersion", "k(omega) for each parity over an omega grid");
  auto* gain = app.add_subcommand("gain-sweep", "k versus dielectric gain/loss at fixed omega");
  auto* field = app.add_subcommand("field", "mean magnetic field of a coherent or squeezed state");
  field->add_flag("--compare", flags.compare, "write <H>_a - <H>_b with state b from [compare]");
  auto* verify = app.add_subcommand("verify", "self-consistency checks; exit 1 if any fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Config cfg = config_path.empty() ? Config::defaults() : Config::load(config_path);
    if (app.count("--tolerance")) cfg.set("solver", "tolerance", num(tolerance));
    const char* section = dispersion->parsed() ? "dispersion"
                          : gain->parsed()     ? "gain_sweep"
                          : field->parsed()    ? "field"
                          : verify->parsed()   ? "verify"
                                               : nullptr;
    if (!out_path.empty()) {
      if (!section) throw ConfigError("--out needs a subcommand");
      cfg.set(section, "out", out_path);
    }
    if (dump) {
      cfg.dump(std::cout);
      return kExitOk;
    }
    if (!section) {
      std::cerr << app.help();
      return kExitUsage;
    }
    if (dispersion->parsed()) return run_dispersion(cfg, flags, std::cerr);
    if (gain->parsed()) return run_gain_sweep(cfg, flags, std::cerr);
    if (field->parsed()) return run_field(cfg, flags, std::cerr);
    return run_verify(cfg, flags, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
