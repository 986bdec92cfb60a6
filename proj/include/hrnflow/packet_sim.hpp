#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hrnflow/cosheaf.hpp"
#include "hrnflow/dataflow.hpp"
#include "hrnflow/hrn.hpp"
#include "hrnflow/persistence.hpp"

namespace hrnflow {

// Initial dimension of a subprogram's first vertex: either fixed, or drawn
// uniformly from [lo, hi] for each instance.
struct InitialSpec {
    bool uniform = false;
    Dim fixed = 0;
    Dim lo = 0;
    Dim hi = 0;

    bool operator==(const InitialSpec&) const = default;
};

struct SubprogramSpec {
    std::vector<Dim> capacities;
    Dim ell = 0;
    InitialSpec initial;
    std::size_t iterations = 1;
    // Overrides the scenario-wide capacity mode for this subprogram only.
    std::optional<CapacityMode> capacity_mode;

    bool operator==(const SubprogramSpec&) const = default;
};

struct ScenarioPolicy {
    FlowPolicy flow;
    MatchPolicy match;
    KernelMode kernel_mode = KernelMode::Absolute;
};

struct Scenario {
    std::size_t m = 0;
    std::vector<std::size_t> cycle_lengths;
    std::vector<SubprogramSpec> subprograms;
    std::vector<Dim> desired_outputs;
    ScenarioPolicy policy;
    std::uint64_t seed = 0;
    std::int64_t noise_threshold = 1;

    CapacityMode capacity_mode_for(std::size_t index) const;
};

Scenario load_scenario(const nlohmann::json& doc);
Scenario load_scenario(std::string_view text);
Scenario load_scenario_file(const std::filesystem::path& path);
nlohmann::ordered_json scenario_to_json(const Scenario& s);

// Name of the pseudo-random generator recorded in every report header.
inline constexpr std::string_view kGeneratorName = "mt19937_64(splitmix64(seed + instance * 0x9e3779b97f4a7c15))";

std::uint64_t instance_seed(std::uint64_t seed, std::size_t instance_index);

struct SubprogramResult {
    DataFlow flow;
    CapacityMode capacity_mode = CapacityMode::Cap;
    Classification classification;
};

struct InstanceReport {
    std::uint64_t seed = 0;
    std::size_t instance = 0;
    std::size_t m = 0;
    std::vector<std::size_t> cycle_lengths;
    ScenarioPolicy policy;
    std::int64_t noise_threshold = 1;
    std::vector<SubprogramResult> subprograms;
    StitchingReport stitching;
    MarginProfile profile;
    std::vector<ConeRow> cones;
    std::vector<ErrorEvent> deficits;
    std::vector<ErrorEvent> surpluses;
    ErrorDiagram diagram;
    DiagramStatistics statistics;

    std::vector<Dim> thetas() const;
};

// Deficit events (ErrorSheaf) and surplus events (FixSheaf) read from the
// cone-kernel table under the given kernel mode; zero entries are dropped.
std::pair<std::vector<ErrorEvent>, std::vector<ErrorEvent>> events_from_cones(
    const std::vector<ConeRow>& cones, KernelMode mode);

InstanceReport run_instance(const Scenario& s, std::optional<std::uint64_t> seed_override = std::nullopt,
                            std::size_t instance_index = 0);

// Independent instances 0..count-1, run on up to `threads` workers. Results
// do not depend on the thread count.
std::vector<InstanceReport> run_batch(const Scenario& s, std::size_t count, std::size_t threads = 1);

struct Comparison {
    Distance distance;
    DiagramStatistics first;
    DiagramStatistics second;
    std::string verdict;
    std::vector<std::string> warnings;
};

Comparison compare_diagrams(const ErrorDiagram& a, const ErrorDiagram& b, std::int64_t noise_threshold);
Comparison compare_instances(const InstanceReport& a, const InstanceReport& b);

nlohmann::ordered_json report_to_json(const InstanceReport& r);
InstanceReport report_from_json(const nlohmann::json& doc);
std::string report_to_text(const InstanceReport& r);

// Recomputes cone table, events and diagram from the report's margin
// profile and policy. Throws DomainError if any stored table disagrees.
ErrorDiagram rederive_diagram(const InstanceReport& r);

// report.json, flows.csv, cone_table.csv, diagram.json, diagram.csv
void write_report_bundle(const InstanceReport& r, const std::filesystem::path& dir);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace hrnflow
