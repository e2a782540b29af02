// Coding-state-dependent power and energy integration over timed
// coding sequences.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rispower/descriptor.hpp"
#include "rispower/quantities.hpp"
#include "rispower/static_power.hpp"

namespace rispower {

/// Discrete configuration of every cell at an instant, row-major.
/// Cell i must hold a value below 2^{B_i}; cells sharing a control signal
/// must hold equal values.
struct CodingState {
  std::vector<std::uint64_t> cells;

  bool operator==(const CodingState&) const = default;
};

/// One state held for a dwell time.
struct CodingSegment {
  CodingState state;
  DurationMicroseconds dwell;
};

/// Ordered, non-empty run of segments.
struct CodingSequence {
  std::vector<CodingSegment> segments;
};

/// Every cell set to the same value.
inline CodingState uniform_state(const RisDescriptor& d, std::uint64_t value) {
  return {std::vector<std::uint64_t>(d.cells.total(), value)};
}

/// Every bit of every cell set: per-cell value 2^{B_i} - 1.
inline CodingState all_ones_state(const RisDescriptor& d) {
  const std::uint64_t n = d.cells.total();
  CodingState s;
  s.cells.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i)
    s.cells.push_back((std::uint64_t{1} << d.bits.bit_at(i)) - 1);
  return s;
}

/// Checks a state against a validated descriptor: length, per-cell range,
/// and equality inside each control group. Returns all violations.
inline std::vector<ValidationIssue> validate_state(const RisDescriptor& d,
                                                   const CodingState& state) {
  std::vector<ValidationIssue> issues;
  const std::uint64_t n = d.cells.total();
  if (state.cells.size() != n) {
    issues.push_back({"cells", "expected " + std::to_string(n) + " cell states, got " +
                                   std::to_string(state.cells.size())});
    return issues;
  }

  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint32_t bits = d.bits.bit_at(i);  // validate() caps this at 63
    const std::uint64_t limit = std::uint64_t{1} << bits;
    if (state.cells[i] >= limit) {
      issues.push_back({"cells[" + std::to_string(i) + "]",
                        "state " + std::to_string(state.cells[i]) + " exceeds the " +
                            std::to_string(bits) + "-bit range"});
    }
  }

  std::unordered_map<std::uint64_t, std::uint64_t> first_in_group;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t g = group_index(d.grouping, d.cells, i);
    auto [it, inserted] = first_in_group.try_emplace(g, i);
    if (!inserted && state.cells[it->second] != state.cells[i]) {
      issues.push_back({"cells[" + std::to_string(i) + "]",
                        "state differs from cell " + std::to_string(it->second) +
                            " in the same control group"});
    }
  }
  return issues;
}

inline void require_valid_state(const RisDescriptor& d, const CodingState& state) {
  auto issues = validate_state(d, state);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

/// Default state-to-conduction mapping for PIN cells: each set bit forward-
/// biases one diode per polarization. Swap in another callable to model
/// components whose conduction does not track bits one-for-one.
struct PopcountConduction {
  std::uint32_t operator()(std::uint64_t state_value, std::uint32_t /*bit_width*/) const {
    return static_cast<std::uint32_t>(std::popcount(state_value));
  }
};

/// Power drawn by the adjustable components themselves in `state`.
///   pin_diode      sum over cells of N_pol * (on * P_on + (B_i - on) * P_off)
///                  with on = conduction(s_i, B_i)
///   varactor_diode 0 (bias current negligible)
///   rf_switch      cell count * active power per cell, state-independent
template <class ConductionPolicy = PopcountConduction>
PowerMicrowatts dynamic_power(const RisDescriptor& d, const CodingState& state,
                              ConductionPolicy conduction = {}) {
  require_valid_state(d, state);

  if (std::holds_alternative<VaractorDynamics>(d.dynamic)) return {};

  if (const auto* rf = std::get_if<RfSwitchDynamics>(&d.dynamic))
    return rf->active_power_per_cell * d.cells.total();

  const auto& pin = std::get<PinDiodeDynamics>(d.dynamic);
  PowerMicrowatts total;
  for (std::uint64_t i = 0; i < state.cells.size(); ++i) {
    const std::uint32_t bits = d.bits.bit_at(i);
    const std::uint32_t on = conduction(state.cells[i], bits);
    if (on > bits)
      throw DomainError("conduction policy reported more conducting components than bits");
    PowerMicrowatts cell = pin.on_power_per_diode * on;
    cell += pin.off_power_per_diode * (bits - on);
    total += cell * pin.polarization_count;
  }
  return total;
}

/// Total power split per contribution; total = static + dynamic exactly.
struct PowerBreakdown {
  StaticBreakdown static_part;
  PowerMicrowatts dynamic;
  PowerMicrowatts total;

  bool operator==(const PowerBreakdown&) const = default;
};

inline PowerBreakdown total_power(const RisDescriptor& d, const CodingState& state) {
  PowerBreakdown b;
  b.static_part = static_power_breakdown(d);
  b.dynamic = dynamic_power(d, state);
  b.total = b.static_part.static_total + b.dynamic;
  return b;
}

/// Energy of a coding sequence plus its mean power and span.
/// mean_power is floored to whole microwatts (error below 1 uW).
struct SequenceEnergy {
  EnergyPicojoules energy;
  PowerMicrowatts mean_power;
  DurationMicroseconds duration;
};

inline SequenceEnergy sequence_energy(const RisDescriptor& d, const CodingSequence& seq) {
  if (seq.segments.empty()) throw DomainError("coding sequence must not be empty");

  const StaticBreakdown static_part = static_power_breakdown(d);
  EnergyPicojoules total_energy;
  std::uint64_t total_us = 0;
  for (const CodingSegment& segment : seq.segments) {
    const PowerMicrowatts p = static_part.static_total + dynamic_power(d, segment.state);
    total_energy += energy(p, segment.dwell);
    total_us = detail::checked_add(total_us, segment.dwell.value());
  }

  const DurationMicroseconds duration(total_us);
  return {total_energy, PowerMicrowatts{total_energy.value / total_us}, duration};
}

}  // namespace rispower
