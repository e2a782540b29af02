// Rendering of estimation, simulation, sweep, comparison and catalog
// reports. JSON output is schema-stable with a fixed key order and
// integer microwatt fields suffixed "_uw" next to a display string;
// CSV has a fixed header row; the table format is for humans only.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rispower/analysis.hpp"
#include "rispower/catalog.hpp"
#include "rispower/descriptor.hpp"
#include "rispower/dynamic_power.hpp"
#include "rispower/serialization.hpp"
#include "rispower/static_power.hpp"

namespace rispower {

enum class OutputFormat { json, csv, table };

inline std::optional<OutputFormat> output_format_from_string(std::string_view s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "table") return OutputFormat::table;
  return std::nullopt;
}

namespace detail {

inline std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

inline std::string table_rows(std::span<const std::pair<std::string, std::string>> rows) {
  std::size_t width = 0;
  for (const auto& [label, value] : rows) width = std::max(width, label.size());
  std::string out;
  for (const auto& [label, value] : rows) {
    out += label;
    out.append(width - label.size() + 2, ' ');
    out += value;
    out += '\n';
  }
  return out;
}

inline void append_power_fields(ordered_json& j, std::string_view key, PowerMicrowatts p) {
  j[std::string(key) + "_uw"] = p.value;
  j[std::string(key)] = display_power(p);
}

}  // namespace detail

/// Identity and static breakdown of one descriptor, ready to render.
struct EstimateReport {
  std::string name;
  RisTechnology technology = RisTechnology::pin_diode;
  std::uint64_t cell_count = 0;
  std::uint64_t component_count = 0;
  std::uint64_t group_size = 0;
  std::uint32_t signals_per_circuit = 0;
  StaticBreakdown breakdown;
};

inline EstimateReport make_estimate_report(const RisDescriptor& d) {
  EstimateReport r;
  r.name = d.name;
  r.technology = d.technology;
  r.cell_count = d.cells.total();
  r.component_count = component_count(d);
  r.group_size = group_size(d);
  r.signals_per_circuit = d.drive_circuit.signals_per_circuit;
  r.breakdown = static_power_breakdown(d);
  return r;
}

inline ordered_json estimate_to_json(const EstimateReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["technology"] = std::string(to_string(r.technology));
  j["cell_count"] = r.cell_count;
  j["component_count"] = r.component_count;
  j["group_size"] = r.group_size;
  j["signals_per_circuit"] = r.signals_per_circuit;
  j["drive_circuit_count"] = r.breakdown.drive_circuit_count;
  detail::append_power_fields(j, "control_board", r.breakdown.control_board_power);
  detail::append_power_fields(j, "per_circuit", r.breakdown.per_circuit_power);
  detail::append_power_fields(j, "total_drive", r.breakdown.total_drive_power);
  detail::append_power_fields(j, "static_total", r.breakdown.static_total);
  return j;
}

inline constexpr std::string_view estimate_csv_header =
    "name,technology,cell_count,component_count,group_size,signals_per_circuit,"
    "drive_circuit_count,control_board_uw,per_circuit_uw,total_drive_uw,static_total_uw";

inline std::string render_estimate(const EstimateReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return estimate_to_json(r).dump(2) + "\n";
    case OutputFormat::csv: {
      std::string out(estimate_csv_header);
      out += '\n';
      out += detail::csv_field(r.name);
      out += ',';
      out += to_string(r.technology);
      out += ',' + std::to_string(r.cell_count);
      out += ',' + std::to_string(r.component_count);
      out += ',' + std::to_string(r.group_size);
      out += ',' + std::to_string(r.signals_per_circuit);
      out += ',' + std::to_string(r.breakdown.drive_circuit_count);
      out += ',' + std::to_string(r.breakdown.control_board_power.value);
      out += ',' + std::to_string(r.breakdown.per_circuit_power.value);
      out += ',' + std::to_string(r.breakdown.total_drive_power.value);
      out += ',' + std::to_string(r.breakdown.static_total.value);
      out += '\n';
      return out;
    }
    case OutputFormat::table: {
      const std::vector<std::pair<std::string, std::string>> rows = {
          {"name", r.name},
          {"technology", std::string(to_string(r.technology))},
          {"cells", std::to_string(r.cell_count)},
          {"components", std::to_string(r.component_count)},
          {"group size", std::to_string(r.group_size)},
          {"signals per circuit", std::to_string(r.signals_per_circuit)},
          {"drive circuits", std::to_string(r.breakdown.drive_circuit_count)},
          {"control board", display_power(r.breakdown.control_board_power)},
          {"per drive circuit", display_power(r.breakdown.per_circuit_power)},
          {"total drive circuits", display_power(r.breakdown.total_drive_power)},
          {"static total", display_power(r.breakdown.static_total)},
      };
      return detail::table_rows(rows);
    }
  }
  return {};
}

/// Aggregate of one simulated coding sequence.
struct SimulationReport {
  std::string name;
  std::uint64_t segment_count = 0;
  SequenceEnergy result{{}, {}, DurationMicroseconds(1)};
};

inline SimulationReport make_simulation_report(const RisDescriptor& d,
                                               const CodingSequence& sequence) {
  return {d.name, sequence.segments.size(), sequence_energy(d, sequence)};
}

inline constexpr std::string_view simulate_csv_header =
    "name,segments,duration_us,energy_pj,mean_power_uw";

inline std::string render_simulate(const SimulationReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      ordered_json j;
      j["name"] = r.name;
      j["segments"] = r.segment_count;
      j["duration_us"] = r.result.duration.value();
      j["energy_pj"] = r.result.energy.value;
      j["mean_power_uw"] = r.result.mean_power.value;
      j["mean_power"] = display_power(r.result.mean_power);
      return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::string out(simulate_csv_header);
      out += '\n';
      out += detail::csv_field(r.name);
      out += ',' + std::to_string(r.segment_count);
      out += ',' + std::to_string(r.result.duration.value());
      out += ',' + std::to_string(r.result.energy.value);
      out += ',' + std::to_string(r.result.mean_power.value);
      out += '\n';
      return out;
    }
    case OutputFormat::table: {
      const std::vector<std::pair<std::string, std::string>> rows = {
          {"name", r.name},
          {"segments", std::to_string(r.segment_count)},
          {"duration", std::to_string(r.result.duration.value()) + " us"},
          {"energy", std::to_string(r.result.energy.value) + " pJ"},
          {"mean power", display_power(r.result.mean_power)},
      };
      return detail::table_rows(rows);
    }
  }
  return {};
}

inline constexpr std::string_view sweep_csv_header =
    "value,drive_circuit_count,control_board_uw,per_circuit_uw,total_drive_uw,"
    "static_total_uw,error";

inline std::string render_sweep(const std::string& name, const SweepResult& result,
                                OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      ordered_json j;
      j["name"] = name;
      j["parameter"] = std::string(to_string(result.parameter));
      ordered_json rows = ordered_json::array();
      for (const SweepRow& row : result.rows) {
        ordered_json r;
        r["value"] = row.value;
        if (row.breakdown) {
          r["drive_circuit_count"] = row.breakdown->drive_circuit_count;
          detail::append_power_fields(r, "control_board", row.breakdown->control_board_power);
          detail::append_power_fields(r, "per_circuit", row.breakdown->per_circuit_power);
          detail::append_power_fields(r, "total_drive", row.breakdown->total_drive_power);
          detail::append_power_fields(r, "static_total", row.breakdown->static_total);
        } else {
          r["error"] = row.error;
        }
        rows.push_back(std::move(r));
      }
      j["rows"] = std::move(rows);
      return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::string out(sweep_csv_header);
      out += '\n';
      for (const SweepRow& row : result.rows) {
        out += std::to_string(row.value);
        if (row.breakdown) {
          out += ',' + std::to_string(row.breakdown->drive_circuit_count);
          out += ',' + std::to_string(row.breakdown->control_board_power.value);
          out += ',' + std::to_string(row.breakdown->per_circuit_power.value);
          out += ',' + std::to_string(row.breakdown->total_drive_power.value);
          out += ',' + std::to_string(row.breakdown->static_total.value);
          out += ',';
        } else {
          out += ",,,,,," + detail::csv_field(row.error);
        }
        out += '\n';
      }
      return out;
    }
    case OutputFormat::table: {
      std::string out = "sweep of " + std::string(to_string(result.parameter)) + " on " +
                        name + "\n";
      for (const SweepRow& row : result.rows) {
        out += "  " + std::to_string(row.value) + ": ";
        if (row.breakdown) {
          out += std::to_string(row.breakdown->drive_circuit_count) + " drive circuits, " +
                 display_power(row.breakdown->total_drive_power) + " drive, " +
                 display_power(row.breakdown->static_total) + " static total";
        } else {
          out += "error: " + row.error;
        }
        out += '\n';
      }
      return out;
    }
  }
  return {};
}

inline constexpr std::string_view compare_csv_header =
    "name,technology,component_count,drive_circuit_count,static_total_uw,"
    "worst_case_dynamic_uw,worst_case_total_uw";

inline std::string render_compare(std::span<const ComparisonRow> rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      ordered_json j;
      ordered_json out_rows = ordered_json::array();
      for (const ComparisonRow& row : rows) {
        ordered_json r;
        r["name"] = row.name;
        r["technology"] = std::string(to_string(row.technology));
        r["component_count"] = row.component_count;
        r["drive_circuit_count"] = row.drive_circuit_count;
        detail::append_power_fields(r, "static_total", row.static_total);
        detail::append_power_fields(r, "worst_case_dynamic", row.worst_case_dynamic);
        detail::append_power_fields(r, "worst_case_total", row.worst_case_total);
        out_rows.push_back(std::move(r));
      }
      j["rows"] = std::move(out_rows);
      return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::string out(compare_csv_header);
      out += '\n';
      for (const ComparisonRow& row : rows) {
        out += detail::csv_field(row.name);
        out += ',';
        out += to_string(row.technology);
        out += ',' + std::to_string(row.component_count);
        out += ',' + std::to_string(row.drive_circuit_count);
        out += ',' + std::to_string(row.static_total.value);
        out += ',' + std::to_string(row.worst_case_dynamic.value);
        out += ',' + std::to_string(row.worst_case_total.value);
        out += '\n';
      }
      return out;
    }
    case OutputFormat::table: {
      std::string out;
      for (const ComparisonRow& row : rows) {
        out += row.name;
        out += " (" + std::string(to_string(row.technology)) + "): ";
        out += std::to_string(row.component_count) + " components, " +
               std::to_string(row.drive_circuit_count) + " drive circuits, static " +
               display_power(row.static_total) + ", worst dynamic " +
               display_power(row.worst_case_dynamic) + ", worst total " +
               display_power(row.worst_case_total) + "\n";
      }
      return out;
    }
  }
  return {};
}

inline constexpr std::string_view catalog_csv_header = "key,technology,rows,cols";

inline std::string render_catalog_list(OutputFormat format) {
  const auto& entries = builtin_catalog();
  switch (format) {
    case OutputFormat::json: {
      ordered_json j;
      ordered_json list = ordered_json::array();
      for (const CatalogEntry& entry : entries) {
        ordered_json e;
        e["key"] = entry.key;
        e["technology"] = std::string(to_string(entry.descriptor.technology));
        e["rows"] = entry.descriptor.cells.rows;
        e["cols"] = entry.descriptor.cells.cols;
        list.push_back(std::move(e));
      }
      j["entries"] = std::move(list);
      return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::string out(catalog_csv_header);
      out += '\n';
      for (const CatalogEntry& entry : entries) {
        out += detail::csv_field(entry.key);
        out += ',';
        out += to_string(entry.descriptor.technology);
        out += ',' + std::to_string(entry.descriptor.cells.rows);
        out += ',' + std::to_string(entry.descriptor.cells.cols);
        out += '\n';
      }
      return out;
    }
    case OutputFormat::table: {
      std::vector<std::pair<std::string, std::string>> rows;
      for (const CatalogEntry& entry : entries)
        rows.emplace_back(entry.key,
                          std::string(to_string(entry.descriptor.technology)) + ", " +
                              std::to_string(entry.descriptor.cells.rows) + "x" +
                              std::to_string(entry.descriptor.cells.cols) + " cells");
      return detail::table_rows(rows);
    }
  }
  return {};
}

inline std::string render_catalog_show(const CatalogEntry& entry, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      ordered_json j;
      j["key"] = entry.key;
      j["provenance"] = entry.provenance_notes;
      j["descriptor"] = descriptor_to_json(entry.descriptor);
      return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      // Flattened field,value pairs; pointer-style paths name the fields.
      std::string out = "field,value\n";
      out += "key," + detail::csv_field(entry.key) + '\n';
      const ordered_json flat = descriptor_to_json(entry.descriptor).flatten();
      for (const auto& [path, value] : flat.items()) {
        out += detail::csv_field("descriptor" + path);
        out += ',';
        out += detail::csv_field(value.is_string() ? value.get<std::string>() : value.dump());
        out += '\n';
      }
      out += "provenance," + detail::csv_field(entry.provenance_notes) + '\n';
      return out;
    }
    case OutputFormat::table:
      return entry.key + "\n\n" + descriptor_to_json(entry.descriptor).dump(2) + "\n\n" +
             entry.provenance_notes + "\n";
  }
  return {};
}

}  // namespace rispower
