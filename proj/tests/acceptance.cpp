// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hrnflow/checks.hpp"
#include "hrnflow/packet_sim.hpp"

namespace fs = std::filesystem;
using namespace hrnflow;

namespace {

// Tolerances. Numeric comparisons are exact throughout.
constexpr double kExampleBudgetSeconds = 1.0;
constexpr double kDetectionBudgetSeconds = 30.0;
constexpr double kBottleneckBudgetSeconds = 60.0;
constexpr std::size_t kAbsorptionScenarios = 100;
constexpr std::size_t kBottleneckPairs = 1000;
constexpr std::size_t kPseudometricTriples = 1000;
constexpr std::size_t kPersistenceDiagrams = 500;
constexpr std::uint64_t kSeed = 20261016;

struct Outcome {
    bool passed = true;
    std::string detail;
};

Outcome from_checks(std::initializer_list<checks::CheckResult> results) {
    Outcome out;
    for (const auto& r : results) {
        out.passed = out.passed && r.passed;
        out.detail += (out.detail.empty() ? "" : "; ") + r.name + ": " + r.detail;
    }
    return out;
}

Outcome within(Outcome o, double seconds, double budget) {
    std::ostringstream note;
    note << " [" << seconds << " s, budget " << budget << " s]";
    o.detail += note.str();
    if (seconds >= budget) {
        o.passed = false;
    }
    return o;
}

Outcome example_reproduction() {
    const auto start = std::chrono::steady_clock::now();
    const Scenario s = load_scenario_file(fs::path(HRNFLOW_SCENARIO_DIR) / "toy_three_cycles.json");
    const InstanceReport r = run_instance(s);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::vector<Dim> thetas = r.thetas();
    const std::vector<FlowKind> want{FlowKind::Able, FlowKind::Faulty, FlowKind::Sufficient};
    Outcome o;
    o.detail = "theta = (";
    for (std::size_t n = 0; n < thetas.size(); ++n) {
        o.detail += (n ? ", " : "") + std::to_string(thetas[n]);
    }
    o.detail += "), kinds = (";
    for (std::size_t n = 0; n < r.subprograms.size(); ++n) {
        o.detail += (n ? ", " : "") + std::string(to_string(r.subprograms[n].classification.kind));
    }
    o.detail += ")";
    o.passed = thetas == std::vector<Dim>{7, 0, 3} && r.subprograms.size() == 3;
    for (std::size_t n = 0; o.passed && n < 3; ++n) {
        o.passed = r.subprograms[n].classification.kind == want[n];
    }
    return within(o, seconds, kExampleBudgetSeconds);
}

Outcome zero_absorption() {
    return from_checks({checks::check_zero_absorption(kAbsorptionScenarios, kSeed)});
}

Outcome cone_detection() {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = from_checks({checks::check_cone_detection_absolute(), checks::check_cone_detection_incremental()});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return within(o, seconds, kDetectionBudgetSeconds);
}

Outcome p_interval_oracle() {
    return from_checks({checks::check_p_interval_oracle()});
}

Outcome bottleneck() {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = from_checks({checks::check_bottleneck_oracle(kBottleneckPairs, kSeed + 1),
                             checks::check_bottleneck_pseudometric(kPseudometricTriples, kSeed + 2)});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return within(o, seconds, kBottleneckBudgetSeconds);
}

Outcome persistent_monotonicity() {
    return from_checks({checks::check_persistent_dim(kPersistenceDiagrams, kSeed + 3)});
}

Outcome determinism() {
    const fs::path root = fs::temp_directory_path() / ("hrnflow-acceptance-" + std::to_string(kSeed));
    fs::remove_all(root);
    fs::create_directories(root);
    const std::vector<std::string> scenarios{"toy_three_cycles.json", "random_packets.json"};
    Outcome o;
    std::size_t files = 0;
    for (const auto& name : scenarios) {
        const fs::path scenario = fs::path(HRNFLOW_SCENARIO_DIR) / name;
        for (const char* run : {"a", "b"}) {
            const std::string cmd = std::string("\"") + HRNFLOW_CLI + "\" simulate \"" + scenario.string() +
                                    "\" --seed 42 --out \"" + (root / (name + run)).string() + "\" > /dev/null";
            if (std::system(cmd.c_str()) != 0) {
                return {false, "simulate failed: " + cmd};
            }
        }
        for (const auto& entry : fs::directory_iterator(root / (name + "a"))) {
            const fs::path twin = root / (name + "b") / entry.path().filename();
            ++files;
            if (!fs::exists(twin) || read_text_file(entry.path()) != read_text_file(twin)) {
                o.passed = false;
                o.detail += "differs: " + name + "/" + entry.path().filename().string() + "; ";
            }
        }
    }
    if (o.passed) {
        o.detail = std::to_string(files) + " bundle files byte-identical across two runs";
    }
    fs::remove_all(root);
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 example reproduction", example_reproduction},
        {"2 zero-capacity absorption", zero_absorption},
        {"3 cone kernel detection", cone_detection},
        {"4 p-interval oracle", p_interval_oracle},
        {"5 bottleneck correctness", bottleneck},
        {"6 persistent dimension monotonicity", persistent_monotonicity},
        {"7 determinism", determinism},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << name << "  " << o.detail << '\n';
    }
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << '\n';
    return all ? 0 : 1;
}
