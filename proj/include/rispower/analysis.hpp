// Design-space exploration: single-parameter sweeps, worst-case dynamic
// power, and cross-technology comparison tables.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rispower/descriptor.hpp"
#include "rispower/dynamic_power.hpp"
#include "rispower/static_power.hpp"

namespace rispower {

enum class SweepParameter {
  cell_count,
  group_size,
  signals_per_circuit,
  bit_resolution,
  per_circuit_power,
};

inline std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::cell_count: return "cell_count";
    case SweepParameter::group_size: return "group_size";
    case SweepParameter::signals_per_circuit: return "signals_per_circuit";
    case SweepParameter::bit_resolution: return "bit_resolution";
    case SweepParameter::per_circuit_power: return "per_circuit_power";
  }
  return "cell_count";
}

inline std::optional<SweepParameter> sweep_parameter_from_string(std::string_view s) {
  if (s == "cell_count") return SweepParameter::cell_count;
  if (s == "group_size") return SweepParameter::group_size;
  if (s == "signals_per_circuit") return SweepParameter::signals_per_circuit;
  if (s == "bit_resolution") return SweepParameter::bit_resolution;
  if (s == "per_circuit_power") return SweepParameter::per_circuit_power;
  return std::nullopt;
}

/// One swept point: either a breakdown or the reason this value is
/// unusable with the base descriptor.
struct SweepRow {
  std::uint64_t value = 0;
  std::optional<StaticBreakdown> breakdown;
  std::string error;
};

struct SweepResult {
  SweepParameter parameter = SweepParameter::cell_count;
  std::vector<SweepRow> rows;  // ascending by value
};

namespace detail {

/// Applies one sweep substitution. Throws DomainError when the value
/// cannot be spliced into the base descriptor at all.
inline RisDescriptor substitute(const RisDescriptor& base, SweepParameter parameter,
                                std::uint64_t value) {
  RisDescriptor d = base;
  switch (parameter) {
    case SweepParameter::cell_count: {
      // Scale by adjusting rows only, keeping the column count.
      if (base.cells.cols == 0) throw DomainError("base array has no columns");
      if (value % base.cells.cols != 0)
        throw DomainError("cell count " + std::to_string(value) +
                          " is not a multiple of the column count " +
                          std::to_string(base.cells.cols));
      if (!base.bits.is_uniform())
        throw DomainError("cannot resize an array with per-cell bit resolutions");
      const std::uint64_t rows = value / base.cells.cols;
      if (rows > 0xffffffffULL) throw DomainError("row count does not fit in 32 bits");
      d.cells.rows = static_cast<std::uint32_t>(rows);
      break;
    }
    case SweepParameter::group_size:
      d.grouping = GroupingScheme::explicit_group(value);
      break;
    case SweepParameter::signals_per_circuit:
      if (value > 0xffffffffULL)
        throw DomainError("signals per circuit does not fit in 32 bits");
      d.drive_circuit.signals_per_circuit = static_cast<std::uint32_t>(value);
      break;
    case SweepParameter::bit_resolution:
      if (value > 0xffffffffULL) throw DomainError("bit resolution does not fit in 32 bits");
      d.bits = BitResolution::uniform(static_cast<std::uint32_t>(value));
      break;
    case SweepParameter::per_circuit_power:
      d.drive_circuit.rated_power = PowerMicrowatts{value};
      break;
  }
  return d;
}

}  // namespace detail

/// Evaluates the static breakdown at each value of one swept parameter.
/// Values are sorted ascending; a value that yields an invalid descriptor
/// produces an error row instead of aborting the sweep. Counts are in
/// plain units, per_circuit_power in microwatts.
inline SweepResult sweep(const RisDescriptor& base, SweepParameter parameter,
                         std::span<const std::uint64_t> values) {
  if (values.empty()) throw DomainError("sweep needs at least one value");

  std::vector<std::uint64_t> ordered(values.begin(), values.end());
  std::sort(ordered.begin(), ordered.end());

  SweepResult result;
  result.parameter = parameter;
  result.rows.reserve(ordered.size());
  for (std::uint64_t value : ordered) {
    SweepRow row;
    row.value = value;
    try {
      const RisDescriptor d = detail::substitute(base, parameter, value);
      require_valid(d);
      row.breakdown = static_power_breakdown(d);
    } catch (const Error& e) {
      row.error = e.what();
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

/// Largest dynamic power over all valid coding states: every component
/// conducting at its higher draw. PIN arrays peak with every diode at
/// max(P_on, P_off) per polarization (all-ones when P_on dominates);
/// varactor arrays never draw; RF-switch arrays are state-independent.
inline PowerMicrowatts worst_case_dynamic(const RisDescriptor& d) {
  if (std::holds_alternative<VaractorDynamics>(d.dynamic)) return {};
  if (const auto* rf = std::get_if<RfSwitchDynamics>(&d.dynamic))
    return rf->active_power_per_cell * d.cells.total();

  const auto& pin = std::get<PinDiodeDynamics>(d.dynamic);
  const PowerMicrowatts per_diode =
      std::max(pin.on_power_per_diode, pin.off_power_per_diode);
  std::uint64_t total_bits = 0;
  const std::uint64_t n = d.cells.total();
  if (d.bits.is_uniform()) {
    total_bits = detail::checked_mul(d.bits.uniform_bits(), n);
  } else {
    for (std::uint32_t b : d.bits.per_cell_bits())
      total_bits = detail::checked_add(total_bits, b);
  }
  return per_diode * detail::checked_mul(total_bits, pin.polarization_count);
}

/// One comparison line; worst_case_total = static_total + worst_case_dynamic.
struct ComparisonRow {
  std::string name;
  RisTechnology technology = RisTechnology::pin_diode;
  std::uint64_t component_count = 0;
  std::uint64_t drive_circuit_count = 0;
  PowerMicrowatts static_total;
  PowerMicrowatts worst_case_dynamic;
  PowerMicrowatts worst_case_total;

  bool operator==(const ComparisonRow&) const = default;
};

/// Side-by-side summary, sorted by worst-case total ascending with ties
/// broken by name. Every descriptor must be valid and carry a
/// control-board power.
inline std::vector<ComparisonRow> compare(std::span<const RisDescriptor> descriptors) {
  if (descriptors.empty()) throw DomainError("compare needs at least one descriptor");

  std::vector<ComparisonRow> rows;
  rows.reserve(descriptors.size());
  for (const RisDescriptor& d : descriptors) {
    auto issues = validate(d);
    if (!issues.empty()) {
      for (ValidationIssue& issue : issues)
        issue.field = "descriptor '" + d.name + "' " + issue.field;
      throw ValidationError(std::move(issues));
    }
    ComparisonRow row;
    row.name = d.name;
    row.technology = d.technology;
    row.component_count = component_count(d);
    const StaticBreakdown breakdown = static_power_breakdown(d);
    row.drive_circuit_count = breakdown.drive_circuit_count;
    row.static_total = breakdown.static_total;
    row.worst_case_dynamic = worst_case_dynamic(d);
    row.worst_case_total = row.static_total + row.worst_case_dynamic;
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    if (a.worst_case_total != b.worst_case_total)
      return a.worst_case_total < b.worst_case_total;
    return a.name < b.name;
  });
  return rows;
}

}  // namespace rispower
