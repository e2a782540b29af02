// RIS hardware descriptor: technology, cell array, bit resolution,
// control grouping, drive circuits and control board, plus validation
// and component counting.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "rispower/errors.hpp"
#include "rispower/quantities.hpp"

namespace rispower {

enum class RisTechnology { pin_diode, varactor_diode, rf_switch };

inline std::string_view to_string(RisTechnology t) {
  switch (t) {
    case RisTechnology::pin_diode: return "pin_diode";
    case RisTechnology::varactor_diode: return "varactor_diode";
    case RisTechnology::rf_switch: return "rf_switch";
  }
  return "pin_diode";
}

inline std::optional<RisTechnology> technology_from_string(std::string_view s) {
  if (s == "pin_diode") return RisTechnology::pin_diode;
  if (s == "varactor_diode") return RisTechnology::varactor_diode;
  if (s == "rf_switch") return RisTechnology::rf_switch;
  return std::nullopt;
}

/// Unit-cell grid. Cells are indexed row-major: index = row * cols + col.
struct CellArray {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;

  std::uint64_t total() const noexcept {
    return static_cast<std::uint64_t>(rows) * cols;
  }

  friend constexpr auto operator<=>(CellArray, CellArray) = default;
};

/// Bit resolution per cell: a single value applied everywhere, or one
/// entry per cell (row-major). A B-bit cell has 2^B coding states.
class BitResolution {
public:
  BitResolution() : bits_(std::uint32_t{1}) {}

  static BitResolution uniform(std::uint32_t bits) {
    BitResolution r;
    r.bits_ = bits;
    return r;
  }

  static BitResolution per_cell(std::vector<std::uint32_t> bits) {
    BitResolution r;
    r.bits_ = std::move(bits);
    return r;
  }

  bool is_uniform() const noexcept {
    return std::holds_alternative<std::uint32_t>(bits_);
  }
  std::uint32_t uniform_bits() const { return std::get<std::uint32_t>(bits_); }
  const std::vector<std::uint32_t>& per_cell_bits() const {
    return std::get<std::vector<std::uint32_t>>(bits_);
  }

  std::uint32_t bit_at(std::uint64_t cell_index) const {
    if (is_uniform()) return uniform_bits();
    return per_cell_bits().at(cell_index);
  }

  bool operator==(const BitResolution&) const = default;

private:
  std::variant<std::uint32_t, std::vector<std::uint32_t>> bits_;
};

/// How cells share control signals. `group_size` resolves to the number of
/// cells per control signal (N_g); `group_index` says which signal a cell
/// hangs off. Explicit grouping slices the row-major cell order into
/// consecutive blocks.
struct GroupingScheme {
  enum class Kind { unit, row, column, subarray, explicit_group };

  Kind kind = Kind::unit;
  std::uint32_t subarray_rows = 1;  // kind == subarray
  std::uint32_t subarray_cols = 1;  // kind == subarray
  std::uint64_t explicit_size = 1;  // kind == explicit_group

  static GroupingScheme unit() { return {}; }
  static GroupingScheme row() { return {Kind::row}; }
  static GroupingScheme column() { return {Kind::column}; }
  static GroupingScheme subarray(std::uint32_t r, std::uint32_t c) {
    return {Kind::subarray, r, c};
  }
  static GroupingScheme explicit_group(std::uint64_t n_g) {
    return {Kind::explicit_group, 1, 1, n_g};
  }

  friend constexpr auto operator<=>(const GroupingScheme&, const GroupingScheme&) = default;
};

inline std::string_view to_string(GroupingScheme::Kind k) {
  switch (k) {
    case GroupingScheme::Kind::unit: return "unit";
    case GroupingScheme::Kind::row: return "row";
    case GroupingScheme::Kind::column: return "column";
    case GroupingScheme::Kind::subarray: return "subarray";
    case GroupingScheme::Kind::explicit_group: return "explicit";
  }
  return "unit";
}

/// Resolved cells-per-signal for a scheme on a given array. May be zero
/// for row/column schemes on an empty array; validation rejects that.
inline std::uint64_t resolved_group_size(const GroupingScheme& g, const CellArray& cells) {
  switch (g.kind) {
    case GroupingScheme::Kind::unit: return 1;
    case GroupingScheme::Kind::row: return cells.cols;
    case GroupingScheme::Kind::column: return cells.rows;
    case GroupingScheme::Kind::subarray:
      return static_cast<std::uint64_t>(g.subarray_rows) * g.subarray_cols;
    case GroupingScheme::Kind::explicit_group: return g.explicit_size;
  }
  return 1;
}

/// Control-signal group of a row-major cell index. Requires a non-empty
/// array and a scheme whose divisibility constraints hold.
inline std::uint64_t group_index(const GroupingScheme& g, const CellArray& cells,
                                 std::uint64_t cell_index) {
  const std::uint64_t row = cell_index / cells.cols;
  const std::uint64_t col = cell_index % cells.cols;
  switch (g.kind) {
    case GroupingScheme::Kind::unit: return cell_index;
    case GroupingScheme::Kind::row: return row;
    case GroupingScheme::Kind::column: return col;
    case GroupingScheme::Kind::subarray: {
      const std::uint64_t blocks_per_row = cells.cols / g.subarray_cols;
      return (row / g.subarray_rows) * blocks_per_row + col / g.subarray_cols;
    }
    case GroupingScheme::Kind::explicit_group: return cell_index / g.explicit_size;
  }
  return cell_index;
}

/// One drive circuit: converts control-board signals into bias signals for
/// up to `signals_per_circuit` (N_s) outputs at a constant rated draw.
struct DriveCircuitSpec {
  std::string name;
  std::uint32_t signals_per_circuit = 1;
  PowerMicrowatts rated_power;

  bool operator==(const DriveCircuitSpec&) const = default;
};

/// Master control board. The rated power must be supplied explicitly;
/// the library never invents one, so it stays absent until known.
struct ControlBoardSpec {
  std::string name;
  std::optional<PowerMicrowatts> rated_power;

  bool operator==(const ControlBoardSpec&) const = default;
};

/// Per-diode conduction figures for PIN-diode cells. A cell with B bits
/// carries B diodes per polarization; a set bit forward-biases its diode.
struct PinDiodeDynamics {
  PowerMicrowatts on_power_per_diode;
  PowerMicrowatts off_power_per_diode;  // reverse-bias leakage, usually 0
  std::uint32_t polarization_count = 1;

  bool operator==(const PinDiodeDynamics&) const = default;
};

/// Varactor bias current is negligible: coding-state power is identically zero.
struct VaractorDynamics {
  bool operator==(const VaractorDynamics&) const = default;
};

/// RF CMOS switches draw a constant per-cell current regardless of state.
struct RfSwitchDynamics {
  PowerMicrowatts active_power_per_cell;

  bool operator==(const RfSwitchDynamics&) const = default;
};

using DynamicSpec = std::variant<PinDiodeDynamics, VaractorDynamics, RfSwitchDynamics>;

/// Full hardware description of one RIS.
struct RisDescriptor {
  std::string name;
  RisTechnology technology = RisTechnology::pin_diode;
  std::uint64_t operating_frequency_hz = 0;  // descriptive only
  CellArray cells;
  BitResolution bits;
  GroupingScheme grouping;
  DriveCircuitSpec drive_circuit;
  ControlBoardSpec control_board;
  DynamicSpec dynamic = PinDiodeDynamics{};

  bool operator==(const RisDescriptor&) const = default;
};

struct ValidateOptions {
  /// Accept N = 0 arrays (they yield zero components and zero drive
  /// circuits). Off by default; useful as a boundary case in tests.
  bool allow_empty = false;
  /// Demand control_board.rated_power. Drive-side arithmetic works without
  /// it, so callers that only need N_drive may relax this.
  bool require_control_board_power = true;
};

// Implementation limit: coding states are stored in 64-bit words.
inline constexpr std::uint32_t max_bits_per_cell = 63;

/// Checks every descriptor invariant and returns all violations found.
/// An empty result means the descriptor is valid under `options`.
inline std::vector<ValidationIssue> validate(const RisDescriptor& d,
                                             ValidateOptions options = {}) {
  std::vector<ValidationIssue> issues;
  const std::uint64_t n = d.cells.total();

  if (n == 0 && !options.allow_empty)
    issues.push_back({"cells", "cell count must be positive"});

  bool bits_usable = true;
  if (d.bits.is_uniform()) {
    if (d.bits.uniform_bits() == 0) {
      issues.push_back({"bits.uniform", "bit resolution must be at least 1"});
      bits_usable = false;
    } else if (d.bits.uniform_bits() > max_bits_per_cell) {
      issues.push_back({"bits.uniform", "bit resolution exceeds " +
                                            std::to_string(max_bits_per_cell) + " bits"});
      bits_usable = false;
    }
  } else {
    const auto& per_cell = d.bits.per_cell_bits();
    if (per_cell.size() != n) {
      issues.push_back({"bits.per_cell",
                        "expected " + std::to_string(n) + " entries, got " +
                            std::to_string(per_cell.size())});
      bits_usable = false;
    }
    for (std::size_t i = 0; i < per_cell.size(); ++i) {
      if (per_cell[i] == 0) {
        issues.push_back({"bits.per_cell[" + std::to_string(i) + "]",
                          "bit resolution must be at least 1"});
        bits_usable = false;
      } else if (per_cell[i] > max_bits_per_cell) {
        issues.push_back({"bits.per_cell[" + std::to_string(i) + "]",
                          "bit resolution exceeds " + std::to_string(max_bits_per_cell) +
                              " bits"});
        bits_usable = false;
      }
    }
  }

  bool grouping_usable = true;
  switch (d.grouping.kind) {
    case GroupingScheme::Kind::unit:
      break;
    case GroupingScheme::Kind::row:
    case GroupingScheme::Kind::column:
      if (resolved_group_size(d.grouping, d.cells) == 0) {
        issues.push_back({"grouping", "group size must be positive"});
        grouping_usable = false;
      }
      break;
    case GroupingScheme::Kind::subarray: {
      const auto r = d.grouping.subarray_rows;
      const auto c = d.grouping.subarray_cols;
      if (r == 0 || c == 0) {
        issues.push_back({"grouping", "sub-array dimensions must be positive"});
        grouping_usable = false;
      } else if (d.cells.rows % r != 0 || d.cells.cols % c != 0) {
        issues.push_back({"grouping", "sub-array " + std::to_string(r) + "x" +
                                          std::to_string(c) + " must tile the " +
                                          std::to_string(d.cells.rows) + "x" +
                                          std::to_string(d.cells.cols) + " array"});
        grouping_usable = false;
      }
      break;
    }
    case GroupingScheme::Kind::explicit_group:
      if (d.grouping.explicit_size == 0) {
        issues.push_back({"grouping.n_g", "group size must be positive"});
        grouping_usable = false;
      } else if (n % d.grouping.explicit_size != 0) {
        issues.push_back({"grouping.n_g", "group size must divide cell count (" +
                                              std::to_string(d.grouping.explicit_size) +
                                              " does not divide " + std::to_string(n) + ")"});
        grouping_usable = false;
      }
      break;
  }

  // Cells sharing one control signal must share one bit resolution.
  if (!d.bits.is_uniform() && bits_usable && grouping_usable && n > 0) {
    const auto& per_cell = d.bits.per_cell_bits();
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint32_t>> first_in_group;
    for (std::uint64_t i = 0; i < n; ++i) {
      const std::uint64_t g = group_index(d.grouping, d.cells, i);
      auto [it, inserted] = first_in_group.try_emplace(g, i, per_cell[i]);
      if (!inserted && it->second.second != per_cell[i]) {
        issues.push_back({"bits.per_cell[" + std::to_string(i) + "]",
                          "cell has " + std::to_string(per_cell[i]) +
                              " bits but cell " + std::to_string(it->second.first) +
                              " in the same control group has " +
                              std::to_string(it->second.second)});
      }
    }
  }

  if (d.drive_circuit.signals_per_circuit == 0)
    issues.push_back({"drive_circuit.signals_per_circuit", "must be at least 1"});

  if (options.require_control_board_power && !d.control_board.rated_power)
    issues.push_back({"control_board.rated_power", "control board power required"});

  const bool dynamic_matches =
      (d.technology == RisTechnology::pin_diode &&
       std::holds_alternative<PinDiodeDynamics>(d.dynamic)) ||
      (d.technology == RisTechnology::varactor_diode &&
       std::holds_alternative<VaractorDynamics>(d.dynamic)) ||
      (d.technology == RisTechnology::rf_switch &&
       std::holds_alternative<RfSwitchDynamics>(d.dynamic));
  if (!dynamic_matches) {
    issues.push_back({"dynamic", "dynamic parameters do not match technology '" +
                                     std::string(to_string(d.technology)) + "'"});
  } else if (const auto* pin = std::get_if<PinDiodeDynamics>(&d.dynamic)) {
    if (pin->polarization_count == 0)
      issues.push_back({"dynamic.polarization_count", "must be at least 1"});
  }

  return issues;
}

/// Throws ValidationError carrying every violation when `d` is invalid.
inline void require_valid(const RisDescriptor& d, ValidateOptions options = {}) {
  auto issues = validate(d, options);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

/// Number of adjustable components to drive (N_c): the per-cell bit sum
/// for PIN-diode and RF-switch arrays, the plain cell count for varactor
/// arrays (one biased varactor per cell however many states it codes).
inline std::uint64_t component_count(const RisDescriptor& d) {
  const std::uint64_t n = d.cells.total();
  if (d.technology == RisTechnology::varactor_diode) return n;
  if (d.bits.is_uniform()) return detail::checked_mul(d.bits.uniform_bits(), n);
  std::uint64_t sum = 0;
  for (std::uint32_t b : d.bits.per_cell_bits()) sum = detail::checked_add(sum, b);
  return sum;
}

/// Resolved cells-per-signal (N_g) for a validated descriptor. Empty
/// arrays group trivially: 1 for unit control, the declared size for
/// explicit control.
inline std::uint64_t group_size(const RisDescriptor& d) {
  return resolved_group_size(d.grouping, d.cells);
}

}  // namespace rispower
