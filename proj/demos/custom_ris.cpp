// Builds a 10x10 2-bit PIN-diode surface in code and walks through the
// library: static breakdown, dynamic power of a few coding states, and
// the energy of a short switching sequence.

#include <iostream>

#include "rispower/rispower.hpp"

using namespace rispower;
using namespace rispower::literals;

int main() {
  RisDescriptor d;
  d.name = "lab-prototype-10x10";
  d.technology = RisTechnology::pin_diode;
  d.operating_frequency_hz = 5'800'000'000;
  d.cells = {10, 10};
  d.bits = BitResolution::uniform(2);
  d.grouping = GroupingScheme::unit();
  d.drive_circuit = {"shift-register bank", 16, 120_uW};
  d.control_board = {"dev FPGA board", 2'500'000_uW};
  d.dynamic = PinDiodeDynamics{9'000_uW, 20_uW, 1};
  require_valid(d);

  std::cout << render_estimate(make_estimate_report(d), OutputFormat::table) << '\n';

  const CodingState quiet = uniform_state(d, 0);
  const CodingState busy = all_ones_state(d);
  std::cout << "all diodes off: " << display_power(dynamic_power(d, quiet)) << " dynamic\n";
  std::cout << "all diodes on:  " << display_power(dynamic_power(d, busy)) << " dynamic\n";
  std::cout << "worst case:     " << display_power(worst_case_dynamic(d)) << " dynamic\n\n";

  // Hold the quiet state for 900 ms out of every second, the busy one
  // for the remaining 100 ms.
  CodingSequence sequence;
  sequence.segments.push_back({quiet, DurationMicroseconds(900'000)});
  sequence.segments.push_back({busy, DurationMicroseconds(100'000)});
  const SequenceEnergy energy = sequence_energy(d, sequence);
  std::cout << "1 s duty-cycled: " << energy.energy.value << " pJ, mean "
            << display_power(energy.mean_power) << '\n';
  return 0;
}
