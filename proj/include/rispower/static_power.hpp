// Static power: the coding-state-independent draw of the control board
// plus the bank of drive circuits needed to bias every adjustable
// component.

#pragma once

#include <cstdint>

#include "rispower/descriptor.hpp"
#include "rispower/quantities.hpp"

namespace rispower {

/// Static power broken into its contributions.
/// total_drive_power = drive_circuit_count * per_circuit_power and
/// static_total = control_board_power + total_drive_power, both exact.
struct StaticBreakdown {
  PowerMicrowatts control_board_power;
  std::uint64_t drive_circuit_count = 0;
  PowerMicrowatts per_circuit_power;
  PowerMicrowatts total_drive_power;
  PowerMicrowatts static_total;

  bool operator==(const StaticBreakdown&) const = default;
};

/// Fewest drive circuits covering `component_count` components when each
/// circuit emits `signals_per_circuit` signals and each signal feeds a
/// group of `group_size` cells: ceil(N_c / (N_g * N_s)), in integer
/// arithmetic throughout.
inline std::uint64_t drive_circuit_count(std::uint64_t component_count,
                                         std::uint64_t group_size,
                                         std::uint64_t signals_per_circuit) {
  if (group_size == 0 || signals_per_circuit == 0)
    throw DomainError("group size and signals per circuit must be at least 1");
  const std::uint64_t per_circuit = detail::checked_mul(group_size, signals_per_circuit);
  return component_count / per_circuit + (component_count % per_circuit != 0 ? 1 : 0);
}

inline std::uint64_t drive_circuit_count(const RisDescriptor& d) {
  return drive_circuit_count(component_count(d), group_size(d),
                             d.drive_circuit.signals_per_circuit);
}

/// Rated draw of the whole drive-circuit bank.
inline PowerMicrowatts total_drive_circuit_power(const RisDescriptor& d) {
  return d.drive_circuit.rated_power * drive_circuit_count(d);
}

/// Full static breakdown. The control-board power must be present; a
/// descriptor that omits it has to be given one before estimating.
inline StaticBreakdown static_power_breakdown(const RisDescriptor& d) {
  if (!d.control_board.rated_power)
    throw ValidationError(std::vector<ValidationIssue>{
        {"control_board.rated_power", "control board power required"}});

  StaticBreakdown b;
  b.control_board_power = *d.control_board.rated_power;
  b.drive_circuit_count = drive_circuit_count(d);
  b.per_circuit_power = d.drive_circuit.rated_power;
  b.total_drive_power = b.per_circuit_power * b.drive_circuit_count;
  b.static_total = b.control_board_power + b.total_drive_power;
  return b;
}

}  // namespace rispower
