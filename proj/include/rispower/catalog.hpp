// Built-in catalog of three measured RIS devices, one per drive
// technology. Numeric fields come from bench measurements and part
// datasheets; the notes say where each number originates.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rispower/descriptor.hpp"
#include "rispower/quantities.hpp"

namespace rispower {

struct CatalogEntry {
  std::string key;
  RisDescriptor descriptor;
  std::string provenance_notes;
};

namespace detail {

inline std::vector<CatalogEntry> make_builtin_catalog() {
  std::vector<CatalogEntry> entries;

  {
    // 16x16 phase-programmable reflectarray, 1-bit cells, one PIN diode
    // per cell, addressed individually. Four 8x8 sub-panels; one 8-bit
    // shift register drives each 8-cell column of a sub-panel.
    RisDescriptor d;
    d.name = "pin-16x16";
    d.technology = RisTechnology::pin_diode;
    d.operating_frequency_hz = 3'500'000'000;
    d.cells = {16, 16};
    d.bits = BitResolution::uniform(1);
    d.grouping = GroupingScheme::unit();
    d.drive_circuit = {"SN74LV595A", 8, 66_uW};
    d.control_board = {"XC7K70T", 4'800'000_uW};
    d.dynamic = PinDiodeDynamics{12'600_uW, 0_uW, 1};
    entries.push_back(
        {d.name, d,
         "Bench-measured 16x16 PIN-diode reflectarray (four 8x8 sub-panels), "
         "f = 3.5 GHz, 1-bit cells addressed individually. Control board: "
         "XC7K70T at 24 V draws 0.2 A, hence 4.8 W. Drive: SN74LV595A 8-bit "
         "shift registers, one per 8-cell column of a sub-panel (32 in "
         "total); at Vcc = 3.3 V the measured Icc is 20 uA, hence 0.066 mW "
         "per register and 2.112 mW for the bank. Forward-biased diode draw "
         "measured at 12.6 mW per cell."});
  }

  {
    // 16x8 column-controlled varactor array. Two columns (32 cells) share
    // one analog bias channel; each channel is a DAC3484 output buffered
    // by an AD8021 op-amp. Eight coding states spanning 0 to -20 V of
    // reverse bias (the bias table is documentation, not model input).
    RisDescriptor d;
    d.name = "varactor-8x16";
    d.technology = RisTechnology::varactor_diode;
    d.operating_frequency_hz = 3'200'000'000;
    d.cells = {16, 8};
    d.bits = BitResolution::uniform(3);
    d.grouping = GroupingScheme::explicit_group(32);
    d.drive_circuit = {"DAC3484 + AD8021", 1, 430'000_uW};
    d.control_board = {"unspecified", std::nullopt};
    d.dynamic = VaractorDynamics{};
    entries.push_back(
        {d.name, d,
         "Bench-measured varactor array of 8 columns with 16 cells each, "
         "f = 3.2 GHz, column-controlled with 2 columns (32 cells) per bias "
         "channel. Eight coding states over 0 to -20 V reverse bias. Drive "
         "per channel: DAC3484 (about 250 mW per generated signal) plus "
         "AD8021 op-amp at +/-12 V drawing 7.5 mA (180 mW), 430 mW per "
         "channel and 1720 mW for the 4 channels. The control board of this "
         "unit was not characterized, so no rated power is stored; supply "
         "one explicitly (entry-level boards such as a ZYNQ7100 run about "
         "1.5 W, an XC7K70T 4.8 W). Varactor bias current is negligible, so "
         "coding-state power is zero."});
  }

  {
    // 8x8 RF-CMOS-switch array, cells addressed individually. A single
    // XC3S400AN serves as the switch driver.
    RisDescriptor d;
    d.name = "rfswitch-8x8";
    d.technology = RisTechnology::rf_switch;
    d.operating_frequency_hz = 0;
    d.cells = {8, 8};
    d.bits = BitResolution::uniform(1);
    d.grouping = GroupingScheme::unit();
    d.drive_circuit = {"XC3S400AN", 75, 240'000_uW};
    d.control_board = {"XC7K70T", 4'800'000_uW};
    d.dynamic = RfSwitchDynamics{495_uW};
    entries.push_back(
        {d.name, d,
         "Bench-measured 8x8 RF-CMOS-switch array, cells addressed "
         "individually. Control board: XC7K70T (4.8 W, as for the PIN "
         "unit). Drive: one XC3S400AN at 12 V drawing 20 mA (240 mW), good "
         "for about 75 switch-control signals. Per-cell switch draw about "
         "3.3 V x 150 uA = 495 uW, independent of the coding state."});
  }

  return entries;
}

}  // namespace detail

/// All built-in entries, in a fixed order.
inline const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = detail::make_builtin_catalog();
  return catalog;
}

/// Entry for `key`, or nullptr when unknown.
inline const CatalogEntry* find_builtin(std::string_view key) {
  for (const CatalogEntry& entry : builtin_catalog())
    if (entry.key == key) return &entry;
  return nullptr;
}

/// Entry for `key`; throws DomainError on an unknown key.
inline const CatalogEntry& builtin(std::string_view key) {
  if (const CatalogEntry* entry = find_builtin(key)) return *entry;
  std::string known;
  for (const CatalogEntry& entry : builtin_catalog()) {
    if (!known.empty()) known += ", ";
    known += entry.key;
  }
  throw DomainError("unknown catalog key '" + std::string(key) + "' (known: " + known + ")");
}

inline std::vector<std::string> builtin_keys() {
  std::vector<std::string> keys;
  for (const CatalogEntry& entry : builtin_catalog()) keys.push_back(entry.key);
  return keys;
}

}  // namespace rispower
