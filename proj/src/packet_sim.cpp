#include "hrnflow/packet_sim.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <limits>
#include <random>
#include <sstream>

namespace hrnflow {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string join(const std::string& base, std::string_view field) {
    return base + "/" + std::string(field);
}

std::string join(const std::string& base, std::size_t index) {
    return base + "/" + std::to_string(index);
}

const json& require(const json& obj, const std::string& path, std::string_view field) {
    if (!obj.is_object()) {
        throw SchemaError(path, "expected an object");
    }
    auto it = obj.find(std::string(field));
    if (it == obj.end()) {
        throw SchemaError(join(path, field), "missing required field");
    }
    return *it;
}

std::uint64_t natural(const json& value, const std::string& path) {
    if (value.is_number_unsigned()) {
        return value.get<std::uint64_t>();
    }
    if (value.is_number_integer()) {
        if (value.get<std::int64_t>() >= 0) {
            return static_cast<std::uint64_t>(value.get<std::int64_t>());
        }
        throw SchemaError(path, "must be nonnegative, got " + value.dump());
    }
    throw SchemaError(path, "expected a nonnegative integer, got " + value.dump());
}

std::vector<std::uint64_t> natural_list(const json& value, const std::string& path) {
    if (!value.is_array()) {
        throw SchemaError(path, "expected an array");
    }
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(natural(value[i], join(path, i)));
    }
    return out;
}

bool boolean(const json& value, const std::string& path) {
    if (!value.is_boolean()) {
        throw SchemaError(path, "expected true or false");
    }
    return value.get<bool>();
}

std::string text(const json& value, const std::string& path) {
    if (!value.is_string()) {
        throw SchemaError(path, "expected a string");
    }
    return value.get<std::string>();
}

CapacityMode capacity_mode_field(const json& value, const std::string& path) {
    auto mode = parse_capacity_mode(text(value, path));
    if (!mode) {
        throw SchemaError(path, "expected one of cap, reject, ignore");
    }
    return *mode;
}

void check_length(std::size_t got, std::size_t m, const std::string& path) {
    if (got != m) {
        throw SchemaError(path, "length mismatch: has " + std::to_string(got) +
                                    " entries but network.m = " + std::to_string(m));
    }
}

InitialSpec parse_initial(const json& value, const std::string& path) {
    if (!value.is_object()) {
        throw SchemaError(path, "expected {\"fixed\": n} or {\"uniform\": {\"lo\": a, \"hi\": b}}");
    }
    const bool has_fixed = value.contains("fixed");
    const bool has_uniform = value.contains("uniform");
    if (has_fixed == has_uniform) {
        throw SchemaError(path, "exactly one of \"fixed\" or \"uniform\" is required");
    }
    InitialSpec spec;
    if (has_fixed) {
        spec.fixed = natural(value["fixed"], join(path, "fixed"));
        return spec;
    }
    const std::string upath = join(path, "uniform");
    const json& u = value["uniform"];
    spec.uniform = true;
    spec.lo = natural(require(u, upath, "lo"), join(upath, "lo"));
    spec.hi = natural(require(u, upath, "hi"), join(upath, "hi"));
    if (spec.lo > spec.hi) {
        throw SchemaError(upath, "lo must not exceed hi");
    }
    if (spec.hi == std::numeric_limits<Dim>::max()) {
        throw SchemaError(join(upath, "hi"), "value too large");
    }
    return spec;
}

ordered_json initial_to_json(const InitialSpec& spec) {
    if (spec.uniform) {
        return ordered_json{{"uniform", ordered_json{{"lo", spec.lo}, {"hi", spec.hi}}}};
    }
    return ordered_json{{"fixed", spec.fixed}};
}

ordered_json policy_to_json(const ScenarioPolicy& p) {
    return ordered_json{{"capacity_mode", to_string(p.flow.capacity_mode)},
                        {"beta_adds", p.flow.beta_adds},
                        {"strict_stitching", p.flow.strict_stitching},
                        {"magnitude_rule", to_string(p.match.magnitude_rule)},
                        {"require_subsequent", p.match.require_subsequent},
                        {"kernel_mode", to_string(p.kernel_mode)}};
}

ScenarioPolicy parse_policy(const json& doc, const std::string& path) {
    ScenarioPolicy policy;
    if (!doc.is_object()) {
        throw SchemaError(path, "expected an object");
    }
    for (const auto& [key, value] : doc.items()) {
        const std::string field = join(path, key);
        if (key == "capacity_mode") {
            policy.flow.capacity_mode = capacity_mode_field(value, field);
        } else if (key == "beta_adds") {
            policy.flow.beta_adds = boolean(value, field);
        } else if (key == "strict_stitching") {
            policy.flow.strict_stitching = boolean(value, field);
        } else if (key == "magnitude_rule") {
            auto rule = parse_magnitude_rule(text(value, field));
            if (!rule) {
                throw SchemaError(field, "expected exact or partial");
            }
            policy.match.magnitude_rule = *rule;
        } else if (key == "require_subsequent") {
            policy.match.require_subsequent = boolean(value, field);
        } else if (key == "kernel_mode") {
            auto mode = parse_kernel_mode(text(value, field));
            if (!mode) {
                throw SchemaError(field, "expected absolute or incremental");
            }
            policy.kernel_mode = *mode;
        } else {
            throw SchemaError(field, "unknown policy field");
        }
    }
    return policy;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform draw in [lo, hi] by rejection, independent of the standard
// library's distribution implementation.
Dim draw_uniform(std::mt19937_64& rng, Dim lo, Dim hi) {
    const std::uint64_t span = hi - lo + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return lo + x % span;
}

} // namespace

CapacityMode Scenario::capacity_mode_for(std::size_t index) const {
    const auto& override_mode = subprograms.at(index - 1).capacity_mode;
    return override_mode ? *override_mode : policy.flow.capacity_mode;
}

Scenario load_scenario(const json& doc) {
    if (!doc.is_object()) {
        throw SchemaError("", "scenario must be a JSON object");
    }
    Scenario s;
    const json& network = require(doc, "", "network");
    s.m = natural(require(network, "/network", "m"), "/network/m");
    if (s.m == 0) {
        throw SchemaError("/network/m", "must be at least 1");
    }
    const auto lengths = natural_list(require(network, "/network", "cycle_lengths"), "/network/cycle_lengths");
    check_length(lengths.size(), s.m, "/network/cycle_lengths");
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (lengths[i] < 3) {
            throw SchemaError(join("/network/cycle_lengths", i), "a directed cycle needs at least 3 vertices");
        }
        s.cycle_lengths.push_back(static_cast<std::size_t>(lengths[i]));
    }

    if (auto it = doc.find("policy"); it != doc.end()) {
        s.policy = parse_policy(*it, "/policy");
    }

    const json& subprograms = require(doc, "", "subprograms");
    if (!subprograms.is_array()) {
        throw SchemaError("/subprograms", "expected an array");
    }
    check_length(subprograms.size(), s.m, "/subprograms");
    for (std::size_t i = 0; i < subprograms.size(); ++i) {
        const std::string path = join("/subprograms", i);
        const json& entry = subprograms[i];
        SubprogramSpec spec;
        spec.capacities = natural_list(require(entry, path, "capacities"), join(path, "capacities"));
        if (spec.capacities.size() != s.cycle_lengths[i]) {
            throw SchemaError(join(path, "capacities"),
                              "length mismatch: has " + std::to_string(spec.capacities.size()) +
                                  " entries but cycle " + std::to_string(i + 1) + " has " +
                                  std::to_string(s.cycle_lengths[i]) + " vertices");
        }
        spec.ell = natural(require(entry, path, "ell"), join(path, "ell"));
        spec.initial = parse_initial(require(entry, path, "initial"), join(path, "initial"));
        spec.iterations = static_cast<std::size_t>(natural(require(entry, path, "iterations"), join(path, "iterations")));
        if (spec.iterations == 0) {
            throw SchemaError(join(path, "iterations"), "must be at least 1");
        }
        if (auto it = entry.find("capacity_mode"); it != entry.end()) {
            spec.capacity_mode = capacity_mode_field(*it, join(path, "capacity_mode"));
        }
        const CapacityMode mode = spec.capacity_mode.value_or(s.policy.flow.capacity_mode);
        const Dim largest_initial = spec.initial.uniform ? spec.initial.hi : spec.initial.fixed;
        if (mode != CapacityMode::Ignore && largest_initial > spec.capacities.front()) {
            throw SchemaError(join(path, "initial"), "initial dimension " + std::to_string(largest_initial) +
                                                         " exceeds the first capacity " +
                                                         std::to_string(spec.capacities.front()));
        }
        s.subprograms.push_back(std::move(spec));
    }

    s.desired_outputs = natural_list(require(doc, "", "desired_outputs"), "/desired_outputs");
    check_length(s.desired_outputs.size(), s.m, "/desired_outputs");

    if (auto it = doc.find("seed"); it != doc.end()) {
        s.seed = natural(*it, "/seed");
    }
    if (auto it = doc.find("noise_threshold"); it != doc.end()) {
        s.noise_threshold = static_cast<std::int64_t>(natural(*it, "/noise_threshold"));
    }
    return s;
}

Scenario load_scenario(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("not valid JSON: ") + e.what());
    }
    return load_scenario(doc);
}

Scenario load_scenario_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    return load_scenario(std::string_view(text));
}

ordered_json scenario_to_json(const Scenario& s) {
    ordered_json subprograms = ordered_json::array();
    for (const auto& sp : s.subprograms) {
        ordered_json entry{{"capacities", sp.capacities},
                           {"ell", sp.ell},
                           {"initial", initial_to_json(sp.initial)},
                           {"iterations", sp.iterations}};
        if (sp.capacity_mode) {
            entry["capacity_mode"] = to_string(*sp.capacity_mode);
        }
        subprograms.push_back(std::move(entry));
    }
    return ordered_json{{"network", ordered_json{{"m", s.m}, {"cycle_lengths", s.cycle_lengths}}},
                        {"subprograms", std::move(subprograms)},
                        {"desired_outputs", s.desired_outputs},
                        {"policy", policy_to_json(s.policy)},
                        {"seed", s.seed},
                        {"noise_threshold", s.noise_threshold}};
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t instance_index) {
    return splitmix64(seed + static_cast<std::uint64_t>(instance_index) * 0x9e3779b97f4a7c15ULL);
}

std::vector<Dim> InstanceReport::thetas() const {
    std::vector<Dim> out;
    for (const auto& sp : subprograms) {
        out.push_back(sp.classification.theta);
    }
    return out;
}

std::pair<std::vector<ErrorEvent>, std::vector<ErrorEvent>> events_from_cones(
    const std::vector<ConeRow>& cones, KernelMode mode) {
    std::vector<ErrorEvent> deficits;
    std::vector<ErrorEvent> surpluses;
    for (const auto& row : cones) {
        if (Dim d = row.cone(SheafKind::Error, mode); d > 0) {
            deficits.push_back({row.k, d});
        }
        if (Dim s = row.cone(SheafKind::Fix, mode); s > 0) {
            surpluses.push_back({row.k, s});
        }
    }
    return {std::move(deficits), std::move(surpluses)};
}

InstanceReport run_instance(const Scenario& s, std::optional<std::uint64_t> seed_override,
                            std::size_t instance_index) {
    const Hrn network = build_hrn(s.m, s.cycle_lengths);
    InstanceReport report;
    report.seed = seed_override.value_or(s.seed);
    report.instance = instance_index;
    report.m = s.m;
    report.cycle_lengths = s.cycle_lengths;
    report.policy = s.policy;
    report.noise_threshold = s.noise_threshold;

    std::mt19937_64 rng(instance_seed(report.seed, instance_index));
    std::vector<DataFlow> flows;
    std::vector<Classification> classes;
    for (std::size_t n = 1; n <= s.m; ++n) {
        const SubprogramSpec& spec = s.subprograms[n - 1];
        const Subprogram sp = subprogram(network, n);
        if (sp.vertex_count() != spec.capacities.size()) {
            throw DomainError("subprogram " + std::to_string(n) + " has " +
                              std::to_string(sp.vertex_count()) + " vertices but " +
                              std::to_string(spec.capacities.size()) + " capacities");
        }
        QuiverRep rep{n, spec.capacities, spec.ell,
                      spec.initial.uniform ? draw_uniform(rng, spec.initial.lo, spec.initial.hi)
                                           : spec.initial.fixed};
        FlowPolicy flow_policy = s.policy.flow;
        flow_policy.capacity_mode = s.capacity_mode_for(n);
        DataFlow flow = simulate_flow(rep, spec.iterations, flow_policy);
        Classification c = classify(flow, s.desired_outputs[n - 1]);
        report.subprograms.push_back({flow, flow_policy.capacity_mode, c});
        flows.push_back(std::move(flow));
        classes.push_back(c);
    }

    report.stitching = check_stitching(flows);
    if (s.policy.flow.strict_stitching && !report.stitching.ok()) {
        const auto& first = report.stitching.mismatches.front();
        throw DomainError("stitching violated between subprograms " + std::to_string(first.boundary) +
                          " and " + std::to_string(first.boundary + 1) + ": final dimension " +
                          std::to_string(first.final_dim) + " but next initial dimension " +
                          std::to_string(first.next_initial));
    }

    report.profile = margin_profile(classes);
    report.cones = cone_table(report.profile);
    std::tie(report.deficits, report.surpluses) = events_from_cones(report.cones, s.policy.kernel_mode);
    report.diagram = generate_p_intervals(report.deficits, report.surpluses, s.policy.match);
    report.statistics = diagram_statistics(report.diagram, s.noise_threshold);
    return report;
}

std::vector<InstanceReport> run_batch(const Scenario& s, std::size_t count, std::size_t threads) {
    threads = std::max<std::size_t>(threads, 1);
    std::vector<InstanceReport> out(count);
    for (std::size_t start = 0; start < count; start += threads) {
        std::vector<std::future<InstanceReport>> pending;
        const std::size_t stop = std::min(count, start + threads);
        for (std::size_t i = start; i < stop; ++i) {
            pending.push_back(std::async(std::launch::async, [&s, i] { return run_instance(s, std::nullopt, i); }));
        }
        for (std::size_t i = start; i < stop; ++i) {
            out[i] = pending[i - start].get();
        }
    }
    return out;
}

Comparison compare_diagrams(const ErrorDiagram& a, const ErrorDiagram& b, std::int64_t noise_threshold) {
    Comparison c{bottleneck_distance(a, b), diagram_statistics(a, noise_threshold),
                 diagram_statistics(b, noise_threshold), "", {}};
    if (c.distance.is_infinite()) {
        c.verdict = "distance inf: the instances leave different numbers of errors unresolved (" +
                    std::to_string(a.infinite_multiplicity()) + " vs " +
                    std::to_string(b.infinite_multiplicity()) + " points at infinity)";
    } else if (c.distance.half_units() == 0) {
        c.verdict = "distance 0: the instances have identical error persistence";
    } else {
        c.verdict = "distance " + c.distance.to_string() +
                    ": error lifetimes differ; lower distance means more similar data flow";
    }
    return c;
}

Comparison compare_instances(const InstanceReport& a, const InstanceReport& b) {
    Comparison c = compare_diagrams(a.diagram, b.diagram, a.noise_threshold);
    c.second = diagram_statistics(b.diagram, b.noise_threshold);
    if (a.m != b.m || a.cycle_lengths != b.cycle_lengths) {
        c.warnings.push_back("instances come from differently shaped networks");
    }
    return c;
}

ordered_json report_to_json(const InstanceReport& r) {
    ordered_json subprograms = ordered_json::array();
    for (std::size_t i = 0; i < r.subprograms.size(); ++i) {
        const auto& sp = r.subprograms[i];
        const auto& rep = sp.flow.rep();
        subprograms.push_back(ordered_json{{"index", i + 1},
                                           {"capacity_mode", to_string(sp.capacity_mode)},
                                           {"capacities", rep.capacities},
                                           {"ell", rep.increment},
                                           {"initial_dim", rep.initial_dim},
                                           {"iterations", sp.flow.iterations()},
                                           {"dims", sp.flow.grid()},
                                           {"theta", sp.classification.theta},
                                           {"delta", sp.classification.delta},
                                           {"classification", to_string(sp.classification.kind)},
                                           {"margin", sp.classification.margin}});
    }
    ordered_json stitching = ordered_json::array();
    for (const auto& mm : r.stitching.mismatches) {
        stitching.push_back(ordered_json{{"boundary", mm.boundary},
                                         {"final_dim", mm.final_dim},
                                         {"next_initial", mm.next_initial}});
    }
    ordered_json profile = ordered_json::array();
    for (const auto& e : r.profile.entries()) {
        profile.push_back(ordered_json{{"deficit", e.deficit}, {"surplus", e.surplus}});
    }
    ordered_json cones = ordered_json::array();
    for (const auto& row : r.cones) {
        cones.push_back(ordered_json{{"k", row.k},
                                     {"chain_error", row.chain_error},
                                     {"chain_fix", row.chain_fix},
                                     {"phi_rank_error", row.phi_rank_error},
                                     {"phi_rank_fix", row.phi_rank_fix},
                                     {"cone_error_absolute", row.cone_error_absolute},
                                     {"cone_error_incremental", row.cone_error_incremental},
                                     {"cone_fix_absolute", row.cone_fix_absolute},
                                     {"cone_fix_incremental", row.cone_fix_incremental}});
    }
    auto events = [](const std::vector<ErrorEvent>& list) {
        ordered_json out = ordered_json::array();
        for (const auto& e : list) {
            out.push_back(ordered_json{{"index", e.index}, {"magnitude", e.magnitude}});
        }
        return out;
    };
    return ordered_json{
        {"format", "hrnflow-report"},
        {"version", 1},
        {"generator", kGeneratorName},
        {"seed", r.seed},
        {"instance", r.instance},
        {"network", ordered_json{{"m", r.m}, {"cycle_lengths", r.cycle_lengths}}},
        {"policy", policy_to_json(r.policy)},
        {"noise_threshold", r.noise_threshold},
        {"subprograms", std::move(subprograms)},
        {"stitching_mismatches", std::move(stitching)},
        {"margin_profile", std::move(profile)},
        {"cone_table", std::move(cones)},
        {"deficit_events", events(r.deficits)},
        {"surplus_events", events(r.surpluses)},
        {"diagram", ordered_json::parse(diagram_to_json(r.diagram).dump())},
        {"statistics", ordered_json::parse(statistics_to_json(r.statistics).dump())}};
}

InstanceReport report_from_json(const json& doc) {
    try {
        if (!doc.is_object() || doc.value("format", "") != "hrnflow-report") {
            throw SchemaError("/format", "expected \"hrnflow-report\"");
        }
        InstanceReport r;
        r.seed = doc.at("seed").get<std::uint64_t>();
        r.instance = doc.at("instance").get<std::size_t>();
        r.m = doc.at("network").at("m").get<std::size_t>();
        r.cycle_lengths = doc.at("network").at("cycle_lengths").get<std::vector<std::size_t>>();
        r.policy = parse_policy(doc.at("policy"), "/policy");
        r.noise_threshold = doc.at("noise_threshold").get<std::int64_t>();

        std::vector<Classification> classes;
        for (const auto& sp : doc.at("subprograms")) {
            QuiverRep rep{sp.at("index").get<std::size_t>(), sp.at("capacities").get<std::vector<Dim>>(),
                          sp.at("ell").get<Dim>(), sp.at("initial_dim").get<Dim>()};
            auto grid = sp.at("dims").get<std::vector<std::vector<Dim>>>();
            const auto iterations = sp.at("iterations").get<std::size_t>();
            if (grid.size() != rep.capacities.size()) {
                throw SchemaError("/subprograms", "grid rows do not match capacities");
            }
            for (const auto& row : grid) {
                if (row.size() != iterations) {
                    throw SchemaError("/subprograms", "grid columns do not match iterations");
                }
            }
            auto mode = parse_capacity_mode(sp.at("capacity_mode").get<std::string>());
            if (!mode) {
                throw SchemaError("/subprograms", "bad capacity_mode");
            }
            DataFlow flow(rep, iterations, std::move(grid));
            const Classification c = classify(flow, sp.at("delta").get<Dim>());
            r.subprograms.push_back({std::move(flow), *mode, c});
            classes.push_back(c);
        }
        for (const auto& mm : doc.at("stitching_mismatches")) {
            r.stitching.mismatches.push_back({mm.at("boundary").get<std::size_t>(), mm.at("final_dim").get<Dim>(),
                                              mm.at("next_initial").get<Dim>()});
        }
        std::vector<MarginEntry> entries;
        for (const auto& e : doc.at("margin_profile")) {
            entries.push_back({e.at("deficit").get<Dim>(), e.at("surplus").get<Dim>()});
        }
        r.profile = MarginProfile(std::move(entries));
        for (const auto& row : doc.at("cone_table")) {
            r.cones.push_back({row.at("k").get<std::size_t>(), row.at("chain_error").get<Dim>(),
                               row.at("chain_fix").get<Dim>(), row.at("phi_rank_error").get<Dim>(),
                               row.at("phi_rank_fix").get<Dim>(), row.at("cone_error_absolute").get<Dim>(),
                               row.at("cone_error_incremental").get<Dim>(),
                               row.at("cone_fix_absolute").get<Dim>(),
                               row.at("cone_fix_incremental").get<Dim>()});
        }
        for (const auto& e : doc.at("deficit_events")) {
            r.deficits.push_back({e.at("index").get<std::size_t>(), e.at("magnitude").get<Dim>()});
        }
        for (const auto& e : doc.at("surplus_events")) {
            r.surpluses.push_back({e.at("index").get<std::size_t>(), e.at("magnitude").get<Dim>()});
        }
        r.diagram = diagram_from_json(doc.at("diagram"));
        r.statistics = diagram_statistics(r.diagram, r.noise_threshold);
        return r;
    } catch (const json::exception& e) {
        throw SchemaError("/", std::string("corrupt report: ") + e.what());
    }
}

std::string report_to_text(const InstanceReport& r) {
    return report_to_json(r).dump(2) + "\n";
}

ErrorDiagram rederive_diagram(const InstanceReport& r) {
    std::vector<Classification> classes;
    for (std::size_t n = 0; n < r.subprograms.size(); ++n) {
        const auto& sp = r.subprograms[n];
        const Classification expected = classify(sp.flow, sp.classification.delta);
        if (expected.theta != sp.classification.theta || expected.kind != sp.classification.kind ||
            expected.margin != sp.classification.margin) {
            throw DomainError("report classification of subprogram " + std::to_string(n + 1) +
                              " does not match its flow");
        }
        classes.push_back(sp.classification);
    }
    if (!classes.empty() && margin_profile(classes) != r.profile) {
        throw DomainError("report margin profile does not match its flows");
    }
    const auto cones = cone_table(r.profile);
    if (cones != r.cones) {
        throw DomainError("report cone table does not match its margin profile");
    }
    auto [deficits, surpluses] = events_from_cones(cones, r.policy.kernel_mode);
    if (deficits != r.deficits || surpluses != r.surpluses) {
        throw DomainError("report events do not match its cone table");
    }
    ErrorDiagram diagram = generate_p_intervals(deficits, surpluses, r.policy.match);
    if (!(diagram == r.diagram)) {
        throw DomainError("report diagram does not match the diagram derived from its events");
    }
    return diagram;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

void write_report_bundle(const InstanceReport& r, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create " + dir.string() + ": " + ec.message());
    }
    write_text_file(dir / "report.json", report_to_text(r));

    std::ostringstream flows;
    flows << "subprogram,vertex,pass,dim\n";
    for (std::size_t n = 0; n < r.subprograms.size(); ++n) {
        const auto& grid = r.subprograms[n].flow.grid();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (std::size_t q = 0; q < grid[i].size(); ++q) {
                flows << n + 1 << ',' << i + 1 << ',' << q + 1 << ',' << grid[i][q] << '\n';
            }
        }
    }
    write_text_file(dir / "flows.csv", flows.str());
    write_text_file(dir / "cone_table.csv", cone_table_to_csv(r.cones));
    write_text_file(dir / "diagram.json", diagram_to_text(r.diagram));
    write_text_file(dir / "diagram.csv", diagram_to_csv(r.diagram));
}

} // namespace hrnflow
