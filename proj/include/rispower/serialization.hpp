// Descriptor and coding-state files. Both are UTF-8 JSON; power fields
// are unit-suffixed strings ("4.8 W", "66 uW") so files stay readable
// and exact. Descriptor files carry schema_version 1; save followed by
// load reproduces the descriptor field for field.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rispower/descriptor.hpp"
#include "rispower/dynamic_power.hpp"
#include "rispower/errors.hpp"
#include "rispower/quantities.hpp"

namespace rispower {

using ordered_json = nlohmann::ordered_json;

inline constexpr int descriptor_schema_version = 1;

namespace detail {

inline std::string join_path(std::string_view parent, std::string_view key) {
  if (parent.empty()) return std::string(key);
  std::string p(parent);
  p += '.';
  p += key;
  return p;
}

inline void expect_object(const ordered_json& j, std::string_view path) {
  if (!j.is_object()) throw SchemaError(std::string(path), "expected an object");
}

inline void reject_unknown_keys(const ordered_json& j, std::string_view path,
                                std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::string_view a : allowed)
      if (key == a) { known = true; break; }
    if (!known) throw SchemaError(join_path(path, key), "unknown key");
  }
}

inline const ordered_json& require_key(const ordered_json& j, std::string_view path,
                                       std::string_view key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(join_path(path, key), "missing required key");
  return *it;
}

inline std::uint64_t get_uint(const ordered_json& j, std::string_view path) {
  // In-memory documents may carry non-negative values as signed integers;
  // accept those too, reject negatives, floats and non-numbers.
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw SchemaError(std::string(path), "expected a non-negative integer");
}

inline std::uint32_t get_uint32(const ordered_json& j, std::string_view path) {
  const std::uint64_t v = get_uint(j, path);
  if (v > 0xffffffffULL)
    throw SchemaError(std::string(path), "value does not fit in 32 bits");
  return static_cast<std::uint32_t>(v);
}

inline std::string get_string(const ordered_json& j, std::string_view path) {
  if (!j.is_string()) throw SchemaError(std::string(path), "expected a string");
  return j.get<std::string>();
}

inline PowerMicrowatts get_power(const ordered_json& j, std::string_view path) {
  if (!j.is_string())
    throw SchemaError(std::string(path), "expected a power string such as \"4.8 W\"");
  try {
    return parse_power(j.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(std::string(path), e.what());
  }
}

}  // namespace detail

inline ordered_json descriptor_to_json(const RisDescriptor& d) {
  ordered_json j;
  j["schema_version"] = descriptor_schema_version;
  j["name"] = d.name;
  j["technology"] = std::string(to_string(d.technology));
  j["frequency_hz"] = d.operating_frequency_hz;
  j["cells"] = {{"rows", d.cells.rows}, {"cols", d.cells.cols}};

  if (d.bits.is_uniform())
    j["bits"] = {{"uniform", d.bits.uniform_bits()}};
  else
    j["bits"] = {{"per_cell", d.bits.per_cell_bits()}};

  ordered_json grouping;
  grouping["scheme"] = std::string(to_string(d.grouping.kind));
  if (d.grouping.kind == GroupingScheme::Kind::subarray) {
    grouping["r"] = d.grouping.subarray_rows;
    grouping["c"] = d.grouping.subarray_cols;
  } else if (d.grouping.kind == GroupingScheme::Kind::explicit_group) {
    grouping["n_g"] = d.grouping.explicit_size;
  }
  j["grouping"] = std::move(grouping);

  j["drive_circuit"] = {{"name", d.drive_circuit.name},
                        {"signals_per_circuit", d.drive_circuit.signals_per_circuit},
                        {"rated_power", display_power(d.drive_circuit.rated_power)}};

  ordered_json board;
  board["name"] = d.control_board.name;
  if (d.control_board.rated_power)
    board["rated_power"] = display_power(*d.control_board.rated_power);
  else
    board["rated_power"] = nullptr;  // explicitly unknown, must be supplied later
  j["control_board"] = std::move(board);

  ordered_json dynamic;
  if (const auto* pin = std::get_if<PinDiodeDynamics>(&d.dynamic)) {
    dynamic["on_power_per_diode"] = display_power(pin->on_power_per_diode);
    dynamic["off_power_per_diode"] = display_power(pin->off_power_per_diode);
    dynamic["polarization_count"] = pin->polarization_count;
  } else if (const auto* rf = std::get_if<RfSwitchDynamics>(&d.dynamic)) {
    dynamic["active_power_per_cell"] = display_power(rf->active_power_per_cell);
  } else {
    dynamic = ordered_json::object();
  }
  j["dynamic"] = std::move(dynamic);

  return j;
}

/// Rebuilds a descriptor from its JSON form. Structural problems raise
/// SchemaError naming the offending field; semantic invariants are left
/// to validate().
inline RisDescriptor descriptor_from_json(const ordered_json& j) {
  using detail::expect_object;
  using detail::get_power;
  using detail::get_string;
  using detail::get_uint;
  using detail::get_uint32;
  using detail::join_path;
  using detail::reject_unknown_keys;
  using detail::require_key;

  expect_object(j, "");
  reject_unknown_keys(j, "",
                      {"schema_version", "name", "technology", "frequency_hz", "cells",
                       "bits", "grouping", "drive_circuit", "control_board", "dynamic"});

  const auto& version = require_key(j, "", "schema_version");
  if (get_uint(version, "schema_version") !=
      static_cast<std::uint64_t>(descriptor_schema_version))
    throw SchemaError("schema_version",
                      "unknown schema version (this reader understands version " +
                          std::to_string(descriptor_schema_version) + ")");

  RisDescriptor d;
  d.name = get_string(require_key(j, "", "name"), "name");

  const std::string tech = get_string(require_key(j, "", "technology"), "technology");
  const auto technology = technology_from_string(tech);
  if (!technology)
    throw SchemaError("technology", "unknown technology '" + tech +
                                        "' (expected pin_diode, varactor_diode or rf_switch)");
  d.technology = *technology;

  if (auto it = j.find("frequency_hz"); it != j.end())
    d.operating_frequency_hz = get_uint(*it, "frequency_hz");

  const auto& cells = require_key(j, "", "cells");
  expect_object(cells, "cells");
  reject_unknown_keys(cells, "cells", {"rows", "cols"});
  d.cells.rows = get_uint32(require_key(cells, "cells", "rows"), "cells.rows");
  d.cells.cols = get_uint32(require_key(cells, "cells", "cols"), "cells.cols");

  const auto& bits = require_key(j, "", "bits");
  expect_object(bits, "bits");
  reject_unknown_keys(bits, "bits", {"uniform", "per_cell"});
  const bool has_uniform = bits.contains("uniform");
  const bool has_per_cell = bits.contains("per_cell");
  if (has_uniform == has_per_cell)
    throw SchemaError("bits", "exactly one of 'uniform' or 'per_cell' is required");
  if (has_uniform) {
    d.bits = BitResolution::uniform(get_uint32(bits["uniform"], "bits.uniform"));
  } else {
    const auto& list = bits["per_cell"];
    if (!list.is_array()) throw SchemaError("bits.per_cell", "expected an array");
    std::vector<std::uint32_t> values;
    values.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i)
      values.push_back(get_uint32(list[i], "bits.per_cell[" + std::to_string(i) + "]"));
    d.bits = BitResolution::per_cell(std::move(values));
  }

  const auto& grouping = require_key(j, "", "grouping");
  expect_object(grouping, "grouping");
  reject_unknown_keys(grouping, "grouping", {"scheme", "n_g", "r", "c"});
  const std::string scheme = get_string(require_key(grouping, "grouping", "scheme"),
                                        "grouping.scheme");
  if (scheme == "unit") {
    d.grouping = GroupingScheme::unit();
  } else if (scheme == "row") {
    d.grouping = GroupingScheme::row();
  } else if (scheme == "column") {
    d.grouping = GroupingScheme::column();
  } else if (scheme == "subarray") {
    d.grouping = GroupingScheme::subarray(
        get_uint32(require_key(grouping, "grouping", "r"), "grouping.r"),
        get_uint32(require_key(grouping, "grouping", "c"), "grouping.c"));
  } else if (scheme == "explicit") {
    d.grouping = GroupingScheme::explicit_group(
        get_uint(require_key(grouping, "grouping", "n_g"), "grouping.n_g"));
  } else {
    throw SchemaError("grouping.scheme",
                      "unknown scheme '" + scheme +
                          "' (expected unit, row, column, subarray or explicit)");
  }

  const auto& drive = require_key(j, "", "drive_circuit");
  expect_object(drive, "drive_circuit");
  reject_unknown_keys(drive, "drive_circuit", {"name", "signals_per_circuit", "rated_power"});
  d.drive_circuit.name = get_string(require_key(drive, "drive_circuit", "name"),
                                    "drive_circuit.name");
  d.drive_circuit.signals_per_circuit =
      get_uint32(require_key(drive, "drive_circuit", "signals_per_circuit"),
                 "drive_circuit.signals_per_circuit");
  d.drive_circuit.rated_power = get_power(require_key(drive, "drive_circuit", "rated_power"),
                                          "drive_circuit.rated_power");

  const auto& board = require_key(j, "", "control_board");
  expect_object(board, "control_board");
  reject_unknown_keys(board, "control_board", {"name", "rated_power"});
  d.control_board.name = get_string(require_key(board, "control_board", "name"),
                                    "control_board.name");
  const auto& board_power = require_key(board, "control_board", "rated_power");
  if (board_power.is_null())
    d.control_board.rated_power = std::nullopt;
  else
    d.control_board.rated_power = get_power(board_power, "control_board.rated_power");

  const auto& dynamic = require_key(j, "", "dynamic");
  expect_object(dynamic, "dynamic");
  switch (d.technology) {
    case RisTechnology::pin_diode: {
      reject_unknown_keys(dynamic, "dynamic",
                          {"on_power_per_diode", "off_power_per_diode", "polarization_count"});
      PinDiodeDynamics pin;
      pin.on_power_per_diode = get_power(
          require_key(dynamic, "dynamic", "on_power_per_diode"), "dynamic.on_power_per_diode");
      if (auto it = dynamic.find("off_power_per_diode"); it != dynamic.end())
        pin.off_power_per_diode = get_power(*it, "dynamic.off_power_per_diode");
      pin.polarization_count = get_uint32(
          require_key(dynamic, "dynamic", "polarization_count"), "dynamic.polarization_count");
      d.dynamic = pin;
      break;
    }
    case RisTechnology::varactor_diode:
      reject_unknown_keys(dynamic, "dynamic", {});
      d.dynamic = VaractorDynamics{};
      break;
    case RisTechnology::rf_switch: {
      reject_unknown_keys(dynamic, "dynamic", {"active_power_per_cell"});
      RfSwitchDynamics rf;
      rf.active_power_per_cell =
          get_power(require_key(dynamic, "dynamic", "active_power_per_cell"),
                    "dynamic.active_power_per_cell");
      d.dynamic = rf;
      break;
    }
  }

  return d;
}

namespace detail {

inline ordered_json parse_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("", "invalid JSON in '" + path.string() + "': " + e.what());
  }
  return j;
}

}  // namespace detail

inline void save_descriptor(const RisDescriptor& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << descriptor_to_json(d).dump(2) << '\n';
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

inline RisDescriptor load_descriptor(const std::filesystem::path& path) {
  return descriptor_from_json(detail::parse_json_file(path));
}

/// Rebuilds a coding sequence from `{"segments": [{"dwell_us": ..,
/// "cells": [..]}, ..]}` and checks each state against `d`, reporting the
/// offending segment and cell index on mismatch.
inline CodingSequence states_from_json(const ordered_json& j, const RisDescriptor& d) {
  detail::expect_object(j, "");
  detail::reject_unknown_keys(j, "", {"segments"});
  const auto& segments = detail::require_key(j, "", "segments");
  if (!segments.is_array()) throw SchemaError("segments", "expected an array");
  if (segments.empty()) throw SchemaError("segments", "at least one segment is required");

  CodingSequence sequence;
  sequence.segments.reserve(segments.size());
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const std::string path = "segments[" + std::to_string(s) + "]";
    const auto& segment = segments[s];
    detail::expect_object(segment, path);
    detail::reject_unknown_keys(segment, path, {"dwell_us", "cells"});

    const std::uint64_t dwell =
        detail::get_uint(detail::require_key(segment, path, "dwell_us"), path + ".dwell_us");
    if (dwell == 0) throw SchemaError(path + ".dwell_us", "dwell must be at least 1 us");

    const auto& cells = detail::require_key(segment, path, "cells");
    if (!cells.is_array()) throw SchemaError(path + ".cells", "expected an array");
    CodingState state;
    state.cells.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
      state.cells.push_back(
          detail::get_uint(cells[i], path + ".cells[" + std::to_string(i) + "]"));

    for (const ValidationIssue& issue : validate_state(d, state))
      throw SchemaError(path + "." + issue.field, issue.message);

    sequence.segments.push_back({std::move(state), DurationMicroseconds(dwell)});
  }
  return sequence;
}

inline CodingSequence load_states(const std::filesystem::path& path, const RisDescriptor& d) {
  return states_from_json(detail::parse_json_file(path), d);
}

}  // namespace rispower
