// Shared random generators for the test binaries. Deliberately framework
// free so both the Catch2 suites and the acceptance runner can use them.
// Every generator takes an explicit engine; seeds are fixed at call sites
// so failures reproduce.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rispower/rispower.hpp"

namespace test_support {

using Rng = std::mt19937_64;

inline std::uint64_t pick(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

inline rispower::GroupingScheme random_grouping(Rng& rng, const rispower::CellArray& cells) {
  using rispower::GroupingScheme;
  switch (pick(rng, 0, 4)) {
    case 0: return GroupingScheme::unit();
    case 1: return GroupingScheme::row();
    case 2: return GroupingScheme::column();
    case 3: {
      const auto rs = divisors_of(cells.rows);
      const auto cs = divisors_of(cells.cols);
      return GroupingScheme::subarray(
          static_cast<std::uint32_t>(rs[pick(rng, 0, rs.size() - 1)]),
          static_cast<std::uint32_t>(cs[pick(rng, 0, cs.size() - 1)]));
    }
    default: {
      const auto ds = divisors_of(cells.total());
      return GroupingScheme::explicit_group(ds[pick(rng, 0, ds.size() - 1)]);
    }
  }
}

/// A descriptor that passes validation with default options: control board
/// power always present, per-cell bit resolutions kept group-homogeneous.
inline rispower::RisDescriptor random_valid_descriptor(Rng& rng) {
  using namespace rispower;
  static int counter = 0;
  RisDescriptor d;
  d.name = "gen-" + std::to_string(++counter);
  switch (pick(rng, 0, 2)) {
    case 0: d.technology = RisTechnology::pin_diode; break;
    case 1: d.technology = RisTechnology::varactor_diode; break;
    default: d.technology = RisTechnology::rf_switch; break;
  }
  d.operating_frequency_hz = pick(rng, 0, 30'000'000'000);
  d.cells = {static_cast<std::uint32_t>(pick(rng, 1, 8)),
             static_cast<std::uint32_t>(pick(rng, 1, 8))};
  d.grouping = random_grouping(rng, d.cells);

  if (pick(rng, 0, 1) == 0) {
    d.bits = BitResolution::uniform(static_cast<std::uint32_t>(pick(rng, 1, 4)));
  } else {
    // Assign bits per group so homogeneity holds under any grouping.
    const std::uint64_t n = d.cells.total();
    std::vector<std::uint32_t> group_bits(n);
    for (auto& b : group_bits) b = static_cast<std::uint32_t>(pick(rng, 1, 4));
    std::vector<std::uint32_t> per_cell(n);
    for (std::uint64_t i = 0; i < n; ++i)
      per_cell[i] = group_bits[group_index(d.grouping, d.cells, i)];
    d.bits = BitResolution::per_cell(std::move(per_cell));
  }

  d.drive_circuit = {"gen-drive", static_cast<std::uint32_t>(pick(rng, 1, 100)),
                     PowerMicrowatts{pick(rng, 0, 1'000'000)}};
  d.control_board = {"gen-board", PowerMicrowatts{pick(rng, 0, 10'000'000)}};
  switch (d.technology) {
    case RisTechnology::pin_diode:
      d.dynamic = PinDiodeDynamics{PowerMicrowatts{pick(rng, 0, 1'000'000)},
                                   PowerMicrowatts{pick(rng, 0, 1'000'000)},
                                   static_cast<std::uint32_t>(pick(rng, 1, 2))};
      break;
    case RisTechnology::varactor_diode:
      d.dynamic = VaractorDynamics{};
      break;
    case RisTechnology::rf_switch:
      d.dynamic = RfSwitchDynamics{PowerMicrowatts{pick(rng, 0, 1'000'000)}};
      break;
  }
  require_valid(d);
  return d;
}

/// A coding state that satisfies validate_state: per-cell values within
/// range and equal across each control group.
inline rispower::CodingState random_state(Rng& rng, const rispower::RisDescriptor& d) {
  const std::uint64_t n = d.cells.total();
  std::vector<std::uint64_t> group_value(n, ~std::uint64_t{0});
  rispower::CodingState state;
  state.cells.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t g = rispower::group_index(d.grouping, d.cells, i);
    if (group_value[g] == ~std::uint64_t{0}) {
      const std::uint64_t levels = std::uint64_t{1} << d.bits.bit_at(i);
      group_value[g] = pick(rng, 0, levels - 1);
    }
    state.cells[i] = group_value[g];
  }
  rispower::require_valid_state(d, state);
  return state;
}

inline rispower::CodingSequence random_sequence(Rng& rng, const rispower::RisDescriptor& d,
                                                std::size_t max_segments = 5) {
  rispower::CodingSequence seq;
  const std::size_t count = pick(rng, 1, max_segments);
  for (std::size_t i = 0; i < count; ++i)
    seq.segments.push_back(
        {random_state(rng, d), rispower::DurationMicroseconds(pick(rng, 1, 1'000'000))});
  return seq;
}

}  // namespace test_support
