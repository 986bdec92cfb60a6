#include <doctest.h>

#include <filesystem>

#include "hrnflow/packet_sim.hpp"

using namespace hrnflow;
using nlohmann::json;

namespace {

json toy_document() {
    return json::parse(R"({
      "network": {"m": 3, "cycle_lengths": [3, 4, 3]},
      "subprograms": [
        {"capacities": [2, 3, 2], "ell": 2, "initial": {"fixed": 3}, "iterations": 1, "capacity_mode": "ignore"},
        {"capacities": [3, 5, 5, 0], "ell": 0, "initial": {"fixed": 0}, "iterations": 1},
        {"capacities": [3, 3, 3], "ell": 1, "initial": {"fixed": 1}, "iterations": 1}
      ],
      "desired_outputs": [1, 2, 3],
      "policy": {"capacity_mode": "cap"},
      "seed": 1
    })");
}

std::string schema_path(const json& doc) {
    try {
        load_scenario(doc);
    } catch (const SchemaError& e) {
        return e.path();
    }
    return "<none>";
}

} // namespace

TEST_CASE("scenario loading") {
    const Scenario s = load_scenario(toy_document());
    CHECK(s.m == 3);
    CHECK(s.subprograms[0].ell == 2);
    CHECK(s.subprograms[1].ell == 0);
    CHECK(s.subprograms[2].ell == 1);
    CHECK(s.desired_outputs == std::vector<Dim>{1, 2, 3});
    CHECK(s.capacity_mode_for(1) == CapacityMode::Ignore);
    CHECK(s.capacity_mode_for(2) == CapacityMode::Cap);
    CHECK(load_scenario(json::parse(scenario_to_json(s).dump())).subprograms == s.subprograms);
}

TEST_CASE("scenario schema errors name the field") {
    json doc = toy_document();
    doc.erase("desired_outputs");
    CHECK(schema_path(doc) == "/desired_outputs");

    doc = toy_document();
    doc["network"]["m"] = 2;
    doc["network"]["cycle_lengths"] = {3, 4};
    CHECK(schema_path(doc) == "/subprograms");

    doc = toy_document();
    doc["subprograms"][1]["capacities"] = {1, 2};
    CHECK(schema_path(doc) == "/subprograms/1/capacities");

    doc = toy_document();
    doc["subprograms"][2]["ell"] = -1;
    CHECK(schema_path(doc) == "/subprograms/2/ell");

    doc = toy_document();
    doc["policy"]["speed"] = 3;
    CHECK(schema_path(doc) == "/policy/speed");

    doc = toy_document();
    doc["subprograms"][2]["initial"] = {{"fixed", 9}};
    CHECK(schema_path(doc) == "/subprograms/2/initial");

    CHECK_THROWS_AS(load_scenario(std::string_view("{not json")), SchemaError);
}

TEST_CASE("toy scenario pipeline") {
    const InstanceReport r = run_instance(load_scenario(toy_document()));
    CHECK(r.thetas() == std::vector<Dim>{7, 0, 3});
    CHECK(r.subprograms[0].classification.kind == FlowKind::Able);
    CHECK(r.subprograms[1].classification.kind == FlowKind::Faulty);
    CHECK(r.subprograms[2].classification.kind == FlowKind::Sufficient);
    CHECK(r.deficits == std::vector<ErrorEvent>{{2, 2}});
    CHECK(r.surpluses == std::vector<ErrorEvent>{{1, 6}});
    ErrorDiagram expected;
    expected.add(2, ExtendedInt::infinity(), 2);
    CHECK(r.diagram == expected);
    CHECK(r.stitching.mismatches.size() == 2);
    CHECK(rederive_diagram(r) == expected);
}

TEST_CASE("all-sufficient scenario has an empty diagram") {
    json doc = toy_document();
    doc["desired_outputs"] = {7, 0, 3};
    const InstanceReport r = run_instance(load_scenario(doc));
    CHECK(r.diagram.empty());
}

TEST_CASE("strict stitching turns mismatches into errors") {
    json doc = toy_document();
    doc["policy"]["strict_stitching"] = true;
    CHECK_THROWS_AS(run_instance(load_scenario(doc)), DomainError);
}

TEST_CASE("seeded draws are deterministic") {
    json doc = toy_document();
    doc["subprograms"][2]["initial"] = {{"uniform", {{"lo", 0}, {"hi", 3}}}};
    doc["seed"] = 99;
    const Scenario s = load_scenario(doc);
    CHECK(report_to_text(run_instance(s)) == report_to_text(run_instance(s)));
    CHECK(instance_seed(99, 0) != instance_seed(99, 1));

    const auto serial = run_batch(s, 8, 1);
    const auto parallel = run_batch(s, 8, 4);
    REQUIRE(serial.size() == 8);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(report_to_text(serial[i]) == report_to_text(parallel[i]));
        CHECK(serial[i].instance == i);
    }
    const auto other = run_instance(s, std::uint64_t{100});
    CHECK(other.seed == 100);
}

TEST_CASE("report round trip and tamper detection") {
    const InstanceReport r = run_instance(load_scenario(toy_document()));
    const auto doc = report_to_json(r);
    CHECK(doc["format"] == "hrnflow-report");
    const InstanceReport back = report_from_json(json::parse(doc.dump()));
    CHECK(report_to_text(back) == report_to_text(r));

    json tampered = json::parse(doc.dump());
    tampered["diagram"]["points"][0]["multiplicity"] = 3;
    CHECK_THROWS_AS(rederive_diagram(report_from_json(tampered)), DomainError);
}

TEST_CASE("comparisons") {
    const InstanceReport r = run_instance(load_scenario(toy_document()));
    const Comparison same = compare_instances(r, r);
    CHECK(same.distance == Distance::from_half_units(0));
    CHECK(same.warnings.empty());

    ErrorDiagram a;
    a.add(2, 5);
    ErrorDiagram b;
    b.add(2, 7);
    CHECK(compare_diagrams(a, b, 1).distance == Distance::from_half_units(4));

    ErrorDiagram c;
    c.add(2, ExtendedInt::infinity());
    const Comparison mismatch = compare_diagrams(a, c, 1);
    CHECK(mismatch.distance.is_infinite());
    CHECK(mismatch.verdict.find("inf") != std::string::npos);
}

TEST_CASE("report bundle") {
    const auto dir = std::filesystem::temp_directory_path() / "hrnflow-test-bundle";
    std::filesystem::remove_all(dir);
    write_report_bundle(run_instance(load_scenario(toy_document())), dir);
    for (const char* name : {"report.json", "flows.csv", "cone_table.csv", "diagram.json", "diagram.csv"}) {
        CHECK(std::filesystem::exists(dir / name));
    }
    CHECK(read_text_file(dir / "diagram.csv") == "birth,death,multiplicity\n2,inf,2\n");
    CHECK(read_text_file(dir / "flows.csv").starts_with("subprogram,vertex,pass,dim\n1,1,1,3\n"));
    CHECK_THROWS_AS(read_text_file(dir / "missing.json"), IoError);
    std::filesystem::remove_all(dir);
}
