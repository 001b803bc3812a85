#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "galinv/cli/run.hpp"
#include "galinv/io/json.hpp"

int main(int argc, char** argv) {
  using namespace galinv;
  CLI::App app{"Galilei-invariant wave equations: derivation and checks"};
  std::string command, mass = "1", format = "json", output_dir;
  RunConfig config;
  app.add_option("command", command, "derive | power | planewave | couple | prop-suite")->required();
  app.add_option("--ncomp", config.ncomp, "spinor components (1, 2 or 4)");
  app.add_option("--order", config.order, "operator order for derive");
  app.add_flag("--forbid-mixed", config.forbid_mixed, "exclude mixed time-space derivatives");
  app.add_option("--mass", mass, "positive rational mass, e.g. 3/2");
  app.add_option("--N", config.N, "power of the first-order operator");
  app.add_option("--output-dir", output_dir, "write the report here instead of stdout")->envname("GALINV_OUTPUT_DIR");
  app.add_option("--format", format, "json | latex | text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  RunResult result;
  try {
    config.command = parse_command(command);
    config.format = parse_format(format);
    config.mass = parse_mass(mass);
    if (!output_dir.empty()) config.output_dir = output_dir;
    result = run(config);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  if (config.output_dir) {
    const auto path = *config.output_dir / (command_name(config.command) + "." + extension(config.format));
    try {
      io::write_atomic(path, result.report);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitConfig;
    }
    std::cout << result.summary << "\nwrote " << path.string() << "\n";
  } else {
    std::cout << result.report;
    if (config.command == Command::PropSuite) std::cerr << result.summary << "\n";
  }
  return result.status;
}
