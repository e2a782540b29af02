#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "rispower/catalog.hpp"

using namespace rispower;
using namespace rispower::literals;

TEST_CASE("the catalog carries exactly three measured devices", "[catalog]") {
  CHECK(builtin_keys() == std::vector<std::string>{"pin-16x16", "varactor-8x16",
                                                   "rfswitch-8x8"});
  for (const CatalogEntry& entry : builtin_catalog()) {
    CHECK(entry.key == entry.descriptor.name);
    CHECK_FALSE(entry.provenance_notes.empty());
    // Everything but the varactor board power is fully specified.
    CHECK(validate(entry.descriptor, {.require_control_board_power = false}).empty());
  }
}

TEST_CASE("pin-16x16 entry", "[catalog]") {
  const RisDescriptor& d = builtin("pin-16x16").descriptor;
  CHECK(d.technology == RisTechnology::pin_diode);
  CHECK(d.operating_frequency_hz == 3'500'000'000);
  CHECK(d.cells == CellArray{16, 16});
  CHECK(d.bits == BitResolution::uniform(1));
  CHECK(d.grouping == GroupingScheme::unit());
  CHECK(d.drive_circuit.name == "SN74LV595A");
  CHECK(d.drive_circuit.signals_per_circuit == 8);
  CHECK(d.drive_circuit.rated_power == 66_uW);
  CHECK(d.control_board.name == "XC7K70T");
  CHECK(d.control_board.rated_power == 4'800'000_uW);
  const auto& pin = std::get<PinDiodeDynamics>(d.dynamic);
  CHECK(pin.on_power_per_diode == 12'600_uW);
  CHECK(pin.off_power_per_diode == 0_uW);
  CHECK(pin.polarization_count == 1);
  CHECK(validate(d).empty());
}

TEST_CASE("varactor-8x16 entry", "[catalog]") {
  const RisDescriptor& d = builtin("varactor-8x16").descriptor;
  CHECK(d.technology == RisTechnology::varactor_diode);
  CHECK(d.operating_frequency_hz == 3'200'000'000);
  CHECK(d.cells == CellArray{16, 8});
  CHECK(d.cells.total() == 128);
  CHECK(d.bits == BitResolution::uniform(3));  // eight coding states
  CHECK(d.grouping == GroupingScheme::explicit_group(32));
  CHECK(group_size(d) == 32);
  CHECK(d.drive_circuit.signals_per_circuit == 1);
  CHECK(d.drive_circuit.rated_power == 430_mW);
  // The board of this unit was never characterized: callers must supply one.
  CHECK_FALSE(d.control_board.rated_power.has_value());
  CHECK(std::holds_alternative<VaractorDynamics>(d.dynamic));
}

TEST_CASE("rfswitch-8x8 entry", "[catalog]") {
  const RisDescriptor& d = builtin("rfswitch-8x8").descriptor;
  CHECK(d.technology == RisTechnology::rf_switch);
  CHECK(d.cells == CellArray{8, 8});
  CHECK(d.bits == BitResolution::uniform(1));
  CHECK(d.grouping == GroupingScheme::unit());
  CHECK(d.drive_circuit.name == "XC3S400AN");
  CHECK(d.drive_circuit.signals_per_circuit == 75);
  CHECK(d.drive_circuit.rated_power == 240_mW);
  CHECK(d.control_board.rated_power == 4'800'000_uW);
  CHECK(std::get<RfSwitchDynamics>(d.dynamic).active_power_per_cell == 495_uW);
  CHECK(validate(d).empty());
}

TEST_CASE("lookups", "[catalog]") {
  CHECK(find_builtin("pin-16x16") != nullptr);
  CHECK(find_builtin("no-such-surface") == nullptr);
  CHECK(&builtin("pin-16x16") == find_builtin("pin-16x16"));
  try {
    builtin("no-such-surface");
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    const std::string what = e.what();
    CHECK(what.find("no-such-surface") != std::string::npos);
    CHECK(what.find("pin-16x16") != std::string::npos);  // lists the known keys
  }
}
