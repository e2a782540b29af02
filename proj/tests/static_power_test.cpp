#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <limits>

#include "rispower/catalog.hpp"
#include "rispower/static_power.hpp"

using namespace rispower;
using namespace rispower::literals;

TEST_CASE("drive circuit count is the ceiling of N_c / (N_g * N_s)", "[static]") {
  CHECK(drive_circuit_count(256, 1, 8) == 32);
  CHECK(drive_circuit_count(128, 32, 1) == 4);
  CHECK(drive_circuit_count(64, 1, 75) == 1);
  CHECK(drive_circuit_count(1, 1, 1) == 1);
  CHECK(drive_circuit_count(0, 4, 4) == 0);
  CHECK(drive_circuit_count(65, 1, 8) == 9);  // one extra signal forces a ninth circuit
}

TEST_CASE("zero divisors are rejected", "[static]") {
  CHECK_THROWS_AS(drive_circuit_count(16, 0, 8), DomainError);
  CHECK_THROWS_AS(drive_circuit_count(16, 1, 0), DomainError);
}

TEST_CASE("count never overflows silently", "[static]") {
  constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
  CHECK(drive_circuit_count(top, 1, 1) == top);
  CHECK(drive_circuit_count(top, 2, 1) == top / 2 + 1);
  CHECK(drive_circuit_count(top, top, 1) == 1);
  // The signals-per-bank product itself is overflow checked.
  CHECK_THROWS_AS(drive_circuit_count(top, top, top), OverflowError);
}

TEST_CASE("count matches a brute-force minimal k on a small grid", "[static]") {
  for (std::uint64_t n_c = 0; n_c <= 200; ++n_c) {
    for (std::uint64_t n_g : {1, 2, 4, 8}) {
      for (std::uint64_t n_s : {1, 8, 16, 75}) {
        std::uint64_t k = 0;
        while (k * n_g * n_s < n_c) ++k;
        REQUIRE(drive_circuit_count(n_c, n_g, n_s) == k);
      }
    }
  }
}

TEST_CASE("static breakdown of a PIN-diode surface", "[static]") {
  const StaticBreakdown b = static_power_breakdown(builtin("pin-16x16").descriptor);
  CHECK(b.control_board_power.value == 4'800'000);
  CHECK(b.drive_circuit_count == 32);
  CHECK(b.per_circuit_power.value == 66);
  CHECK(b.total_drive_power.value == 2112);
  CHECK(b.static_total.value == 4'802'112);
}

TEST_CASE("static breakdown of an RF-switch surface", "[static]") {
  const StaticBreakdown b = static_power_breakdown(builtin("rfswitch-8x8").descriptor);
  CHECK(b.drive_circuit_count == 1);
  CHECK(b.total_drive_power.value == 240'000);
  CHECK(b.static_total.value == 5'040'000);
}

TEST_CASE("a missing control board power fails loudly", "[static]") {
  RisDescriptor d = builtin("varactor-8x16").descriptor;
  CHECK(total_drive_circuit_power(d).value == 1'720'000);  // drive side still works
  try {
    static_power_breakdown(d);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.issues().size() == 1);
    CHECK(e.issues()[0].field == "control_board.rated_power");
  }

  d.control_board.rated_power = 1'500'000_uW;
  const StaticBreakdown b = static_power_breakdown(d);
  CHECK(b.drive_circuit_count == 4);
  CHECK(b.per_circuit_power.value == 430'000);
  CHECK(b.total_drive_power.value == 1'720'000);
  CHECK(b.static_total.value == 3'220'000);
}

TEST_CASE("breakdown totals are consistent", "[static]") {
  const StaticBreakdown b = static_power_breakdown(builtin("pin-16x16").descriptor);
  CHECK(b.static_total == b.control_board_power + b.total_drive_power);
  CHECK(b.total_drive_power == b.per_circuit_power * b.drive_circuit_count);
}
