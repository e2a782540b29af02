#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "rispower/catalog.hpp"
#include "rispower/report.hpp"

using namespace rispower;
using namespace rispower::literals;

TEST_CASE("output format names", "[report]") {
  CHECK(output_format_from_string("json") == OutputFormat::json);
  CHECK(output_format_from_string("csv") == OutputFormat::csv);
  CHECK(output_format_from_string("table") == OutputFormat::table);
  CHECK_FALSE(output_format_from_string("yaml").has_value());
}

TEST_CASE("estimate JSON report", "[report]") {
  const EstimateReport r = make_estimate_report(builtin("pin-16x16").descriptor);
  const std::string text = render_estimate(r, OutputFormat::json);
  const ordered_json j = ordered_json::parse(text);
  CHECK(j["name"] == "pin-16x16");
  CHECK(j["technology"] == "pin_diode");
  CHECK(j["cell_count"] == 256);
  CHECK(j["component_count"] == 256);
  CHECK(j["group_size"] == 1);
  CHECK(j["signals_per_circuit"] == 8);
  CHECK(j["drive_circuit_count"] == 32);
  CHECK(j["control_board_uw"] == 4'800'000);
  CHECK(j["control_board"] == "4.8 W");
  CHECK(j["per_circuit_uw"] == 66);
  CHECK(j["total_drive_uw"] == 2112);
  CHECK(j["total_drive"] == "2.112 mW");
  CHECK(j["static_total_uw"] == 4'802'112);
  CHECK(j["static_total"] == "4.802112 W");

  // Rendering is deterministic and ends in exactly one newline.
  CHECK(text == render_estimate(r, OutputFormat::json));
  REQUIRE_FALSE(text.empty());
  CHECK(text.back() == '\n');
  CHECK(text.find("\"name\"") < text.find("\"technology\""));
  CHECK(text.find("\"technology\"") < text.find("\"static_total_uw\""));
}

TEST_CASE("estimate CSV report", "[report]") {
  const EstimateReport r = make_estimate_report(builtin("rfswitch-8x8").descriptor);
  const std::string text = render_estimate(r, OutputFormat::csv);
  CHECK(text ==
        "name,technology,cell_count,component_count,group_size,signals_per_circuit,"
        "drive_circuit_count,control_board_uw,per_circuit_uw,total_drive_uw,static_total_uw\n"
        "rfswitch-8x8,rf_switch,64,64,1,75,1,4800000,240000,240000,5040000\n");
}

TEST_CASE("estimate table report", "[report]") {
  const EstimateReport r = make_estimate_report(builtin("pin-16x16").descriptor);
  const std::string text = render_estimate(r, OutputFormat::table);
  CHECK(text.find("pin-16x16") != std::string::npos);
  CHECK(text.find("4.802112 W") != std::string::npos);
  CHECK(text.find("2.112 mW") != std::string::npos);
}

TEST_CASE("CSV fields with separators are quoted", "[report]") {
  RisDescriptor d = builtin("pin-16x16").descriptor;
  d.name = "panel, rev \"B\"";
  const std::string text = render_estimate(make_estimate_report(d), OutputFormat::csv);
  CHECK(text.find("\"panel, rev \"\"B\"\"\"") != std::string::npos);
}

TEST_CASE("simulation reports", "[report]") {
  const RisDescriptor& d = builtin("pin-16x16").descriptor;
  CodingSequence seq;
  seq.segments.push_back({all_ones_state(d), DurationMicroseconds(1'000'000)});
  const SimulationReport r = make_simulation_report(d, seq);

  const ordered_json j = ordered_json::parse(render_simulate(r, OutputFormat::json));
  CHECK(j["name"] == "pin-16x16");
  CHECK(j["segments"] == 1);
  CHECK(j["duration_us"] == 1'000'000);
  CHECK(j["energy_pj"] == 8'027'712'000'000ULL);
  CHECK(j["mean_power_uw"] == 8'027'712);
  CHECK(j["mean_power"] == "8.027712 W");

  const std::string csv = render_simulate(r, OutputFormat::csv);
  CHECK(csv ==
        "name,segments,duration_us,energy_pj,mean_power_uw\n"
        "pin-16x16,1,1000000,8027712000000,8027712\n");

  CHECK(render_simulate(r, OutputFormat::table).find("8027712000000 pJ") !=
        std::string::npos);
}

TEST_CASE("sweep reports carry rows and errors", "[report]") {
  const std::vector<std::uint64_t> values{100, 256};
  const SweepResult result =
      sweep(builtin("pin-16x16").descriptor, SweepParameter::cell_count, values);
  const ordered_json j =
      ordered_json::parse(render_sweep("pin-16x16", result, OutputFormat::json));
  CHECK(j["name"] == "pin-16x16");
  CHECK(j["parameter"] == "cell_count");
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["value"] == 100);
  CHECK(j["rows"][0].contains("error"));
  CHECK_FALSE(j["rows"][0].contains("static_total_uw"));
  CHECK(j["rows"][1]["value"] == 256);
  CHECK(j["rows"][1]["static_total_uw"] == 4'802'112);

  const std::string csv = render_sweep("pin-16x16", result, OutputFormat::csv);
  CHECK(csv.find("value,drive_circuit_count,") == 0);
  CHECK(csv.find("\n256,32,4800000,66,2112,4802112,\n") != std::string::npos);

  const std::string table = render_sweep("pin-16x16", result, OutputFormat::table);
  CHECK(table.find("error") != std::string::npos);
}

TEST_CASE("comparison reports", "[report]") {
  const std::vector<RisDescriptor> descriptors{builtin("pin-16x16").descriptor,
                                               builtin("rfswitch-8x8").descriptor};
  const std::vector<ComparisonRow> rows = compare(descriptors);

  const ordered_json j = ordered_json::parse(render_compare(rows, OutputFormat::json));
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["name"] == "rfswitch-8x8");
  CHECK(j["rows"][0]["worst_case_total_uw"] == 5'071'680);
  CHECK(j["rows"][1]["name"] == "pin-16x16");
  CHECK(j["rows"][1]["worst_case_total_uw"] == 8'027'712);

  const std::string csv = render_compare(rows, OutputFormat::csv);
  CHECK(csv ==
        "name,technology,component_count,drive_circuit_count,static_total_uw,"
        "worst_case_dynamic_uw,worst_case_total_uw\n"
        "rfswitch-8x8,rf_switch,64,1,5040000,31680,5071680\n"
        "pin-16x16,pin_diode,256,32,4802112,3225600,8027712\n");
}

TEST_CASE("catalog reports", "[report]") {
  const ordered_json list =
      ordered_json::parse(render_catalog_list(OutputFormat::json));
  REQUIRE(list["entries"].size() == 3);
  CHECK(list["entries"][0]["key"] == "pin-16x16");
  CHECK(list["entries"][1]["key"] == "varactor-8x16");
  CHECK(list["entries"][2]["key"] == "rfswitch-8x8");

  const std::string csv = render_catalog_list(OutputFormat::csv);
  CHECK(csv ==
        "key,technology,rows,cols\n"
        "pin-16x16,pin_diode,16,16\n"
        "varactor-8x16,varactor_diode,16,8\n"
        "rfswitch-8x8,rf_switch,8,8\n");

  const ordered_json shown = ordered_json::parse(
      render_catalog_show(builtin("varactor-8x16"), OutputFormat::json));
  CHECK(shown["key"] == "varactor-8x16");
  CHECK(shown["descriptor"]["control_board"]["rated_power"].is_null());
  CHECK(shown["provenance"].get<std::string>().find("AD8021") != std::string::npos);

  const std::string shown_csv =
      render_catalog_show(builtin("pin-16x16"), OutputFormat::csv);
  CHECK(shown_csv.find("field,value\n") == 0);
  CHECK(shown_csv.find("descriptor/cells/rows,16") != std::string::npos);

  const std::string shown_table =
      render_catalog_show(builtin("pin-16x16"), OutputFormat::table);
  CHECK(shown_table.find("SN74LV595A") != std::string::npos);
}
