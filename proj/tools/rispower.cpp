// rispower — RIS power consumption estimator.
//
// Subcommands: estimate, simulate, sweep, compare, catalog (list | show).
// Reports are rendered fully before anything is written, so error paths
// never emit partial data. Exit codes: 0 success, 2 validation, 3 I/O.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rispower/rispower.hpp"

namespace {

struct GlobalOptions {
  std::string format = "table";
  std::string output_path;
};

rispower::RisDescriptor load_source(const std::string& builtin_key,
                                    const std::string& descriptor_path,
                                    const std::string& board_override) {
  if (builtin_key.empty() == descriptor_path.empty())
    throw rispower::DomainError("exactly one of --builtin or --descriptor is required");
  rispower::RisDescriptor d = builtin_key.empty()
                                  ? rispower::load_descriptor(descriptor_path)
                                  : rispower::builtin(builtin_key).descriptor;
  if (!board_override.empty())
    d.control_board.rated_power = rispower::parse_power(board_override);
  return d;
}

void emit(const std::string& rendered, const GlobalOptions& global) {
  if (global.output_path.empty()) {
    std::cout << rendered;
    return;
  }
  std::ofstream out(global.output_path, std::ios::binary);
  if (!out) throw rispower::IoError("cannot open output file: " + global.output_path);
  out << rendered;
  out.flush();
  if (!out) throw rispower::IoError("cannot write output file: " + global.output_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconfigurable intelligent surface power consumption model"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--output", global.output_path, "Write the report to a file instead of stdout");

  std::string builtin_key;
  std::string descriptor_path;
  std::string board_override;
  std::string states_path;
  std::string param_name;
  std::vector<std::uint64_t> values;
  std::vector<std::string> compare_builtins;
  std::vector<std::string> compare_paths;
  std::string show_key;

  const auto add_source_options = [&](CLI::App* cmd) {
    cmd->add_option("--builtin", builtin_key, "Key of a built-in catalog descriptor");
    cmd->add_option("--descriptor", descriptor_path, "Path to a descriptor file");
    cmd->add_option("--control-board-power", board_override,
                    "Override the control board power, e.g. \"1.5 W\"");
  };

  CLI::App* estimate = app.add_subcommand("estimate", "Static power breakdown of one surface");
  add_source_options(estimate);

  CLI::App* simulate =
      app.add_subcommand("simulate", "Energy of a coding-state sequence on one surface");
  add_source_options(simulate);
  simulate->add_option("--states", states_path, "Path to a coding state sequence file")
      ->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Static breakdown across one varied parameter");
  add_source_options(sweep);
  sweep->add_option("--param", param_name, "Parameter to vary")->required();
  sweep->add_option("--values", values, "Comma-separated parameter values")
      ->required()
      ->delimiter(',');

  CLI::App* compare = app.add_subcommand("compare", "Rank several surfaces by worst-case power");
  compare->add_option("--builtin", compare_builtins, "Key of a built-in catalog descriptor");
  compare->add_option("--descriptor", compare_paths, "Path to a descriptor file");
  compare->add_option("--control-board-power", board_override,
                      "Override the control board power of every compared surface");

  CLI::App* catalog = app.add_subcommand("catalog", "Built-in descriptor catalog");
  catalog->require_subcommand(1);
  catalog->fallthrough();
  CLI::App* catalog_list = catalog->add_subcommand("list", "List built-in descriptors");
  CLI::App* catalog_show = catalog->add_subcommand("show", "Show one built-in descriptor");
  catalog_show->add_option("key", show_key, "Catalog key")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const rispower::OutputFormat format = *rispower::output_format_from_string(global.format);

  try {
    if (estimate->parsed()) {
      const rispower::RisDescriptor d =
          load_source(builtin_key, descriptor_path, board_override);
      rispower::require_valid(d);
      emit(rispower::render_estimate(rispower::make_estimate_report(d), format), global);
    } else if (simulate->parsed()) {
      const rispower::RisDescriptor d =
          load_source(builtin_key, descriptor_path, board_override);
      rispower::require_valid(d);
      const rispower::CodingSequence sequence = rispower::load_states(states_path, d);
      emit(rispower::render_simulate(rispower::make_simulation_report(d, sequence), format),
           global);
    } else if (sweep->parsed()) {
      const rispower::RisDescriptor d =
          load_source(builtin_key, descriptor_path, board_override);
      rispower::require_valid(d);
      const auto parameter = rispower::sweep_parameter_from_string(param_name);
      if (!parameter)
        throw rispower::DomainError(
            "unknown sweep parameter '" + param_name +
            "' (known: cell_count, group_size, signals_per_circuit, bit_resolution, "
            "per_circuit_power)");
      emit(rispower::render_sweep(d.name, rispower::sweep(d, *parameter, values), format),
           global);
    } else if (compare->parsed()) {
      if (compare_builtins.empty() && compare_paths.empty())
        throw rispower::DomainError("compare needs at least one --builtin or --descriptor");
      std::vector<rispower::RisDescriptor> descriptors;
      for (const std::string& key : compare_builtins)
        descriptors.push_back(rispower::builtin(key).descriptor);
      for (const std::string& path : compare_paths)
        descriptors.push_back(rispower::load_descriptor(path));
      if (!board_override.empty()) {
        const rispower::PowerMicrowatts power = rispower::parse_power(board_override);
        for (rispower::RisDescriptor& d : descriptors) d.control_board.rated_power = power;
      }
      emit(rispower::render_compare(rispower::compare(descriptors), format), global);
    } else if (catalog->parsed()) {
      if (catalog_list->parsed()) {
        emit(rispower::render_catalog_list(format), global);
      } else if (catalog_show->parsed()) {
        emit(rispower::render_catalog_show(rispower::builtin(show_key), format), global);
      }
    }
  } catch (const rispower::IoError& e) {
    std::cerr << "rispower: " << e.what() << '\n';
    return 3;
  } catch (const rispower::Error& e) {
    std::cerr << "rispower: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
