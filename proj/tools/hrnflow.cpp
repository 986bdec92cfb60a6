#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hrnflow/checks.hpp"
#include "hrnflow/error.hpp"
#include "hrnflow/hrn.hpp"
#include "hrnflow/packet_sim.hpp"
#include "hrnflow/persistence.hpp"
#include "hrnflow/render.hpp"

namespace fs = std::filesystem;
using namespace hrnflow;

namespace {

enum Exit : int { kOk = 0, kDomain = 1, kUsage = 2, kIo = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string second;
    std::string out;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::string capacity_mode;
    std::string kernel_mode;
};

// A loaded input file, sniffed by content rather than extension.
struct Document {
    enum class Kind { Scenario, Report, Diagram, Graph } kind;
    nlohmann::json json;
    std::optional<ErrorDiagram> csv_diagram;
};

std::string_view kind_name(Document::Kind k) {
    switch (k) {
    case Document::Kind::Scenario: return "scenario";
    case Document::Kind::Report: return "report";
    case Document::Kind::Diagram: return "diagram";
    case Document::Kind::Graph: return "graph";
    }
    return "?";
}

// A bundle directory stands for its report.json.
fs::path resolve(const fs::path& path) {
    if (fs::is_directory(path)) {
        return path / "report.json";
    }
    return path;
}

Document load_document(const fs::path& path) {
    const std::string text = read_text_file(resolve(path));
    if (text.starts_with("birth,death,multiplicity")) {
        return {Document::Kind::Diagram, {}, diagram_from_csv(text)};
    }
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw SchemaError("", path.string() + " is neither JSON nor a diagram CSV");
    }
    if (!doc.is_object()) {
        throw SchemaError("", "expected a JSON object");
    }
    const std::string format = doc.contains("format") && doc["format"].is_string() ? doc["format"].get<std::string>() : "";
    if (format == "hrnflow-report") {
        return {Document::Kind::Report, std::move(doc), {}};
    }
    if (format == "error-diagram") {
        return {Document::Kind::Diagram, std::move(doc), {}};
    }
    if (format == "hrn-graph") {
        return {Document::Kind::Graph, std::move(doc), {}};
    }
    if (!format.empty()) {
        throw SchemaError("/format", "unknown format \"" + format + "\"");
    }
    return {Document::Kind::Scenario, std::move(doc), {}};
}

ErrorDiagram diagram_of(const Document& d) {
    switch (d.kind) {
    case Document::Kind::Diagram:
        return d.csv_diagram ? *d.csv_diagram : diagram_from_json(d.json);
    case Document::Kind::Report:
        return report_from_json(d.json).diagram;
    default:
        throw UsageError("expected a diagram or report, got a " + std::string(kind_name(d.kind)));
    }
}

// Applies --policy.* overrides to the raw scenario before it is validated.
// A capacity mode given on the command line replaces per-subprogram modes.
Scenario scenario_with_overrides(nlohmann::json doc, const Options& opt) {
    if (!doc.is_object()) {
        throw SchemaError("", "expected a JSON object");
    }
    if (!opt.capacity_mode.empty()) {
        doc["policy"]["capacity_mode"] = opt.capacity_mode;
        if (doc.contains("subprograms") && doc["subprograms"].is_array()) {
            for (auto& sp : doc["subprograms"]) {
                if (sp.is_object()) {
                    sp.erase("capacity_mode");
                }
            }
        }
    }
    if (!opt.kernel_mode.empty()) {
        doc["policy"]["kernel_mode"] = opt.kernel_mode;
    }
    if (opt.seed) {
        doc["seed"] = *opt.seed;
    }
    return load_scenario(doc);
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty() || opt.out == "-") {
        std::cout << text;
    } else {
        write_text_file(opt.out, text);
    }
}

int cmd_validate(const Options& opt) {
    const Document doc = load_document(opt.input);
    if (doc.kind == Document::Kind::Graph) {
        const ValidationReport report = validate(import_graph(doc.json));
        if (!report.ok()) {
            std::cerr << report.to_string();
            return kDomain;
        }
        std::cout << "ok: valid HRN graph\n";
        return kOk;
    }
    if (doc.kind != Document::Kind::Scenario) {
        throw UsageError("validate expects a scenario or graph, got a " + std::string(kind_name(doc.kind)));
    }
    const Scenario s = scenario_with_overrides(doc.json, opt);
    const Hrn h = build_hrn(s.m, s.cycle_lengths);
    const ValidationReport report = validate(h);
    if (!report.ok()) {
        std::cerr << report.to_string();
        return kDomain;
    }
    std::cout << "ok: scenario with m = " << s.m << ", " << h.vertices().size() << " vertices, "
              << h.edges().size() << " edges\n";
    return kOk;
}

int cmd_simulate(const Options& opt) {
    const Document doc = load_document(opt.input);
    if (doc.kind != Document::Kind::Scenario) {
        throw UsageError("simulate expects a scenario, got a " + std::string(kind_name(doc.kind)));
    }
    const Scenario s = scenario_with_overrides(doc.json, opt);
    const InstanceReport report = run_instance(s);
    const fs::path dir = opt.out.empty() ? fs::path("hrnflow-report") : fs::path(opt.out);
    write_report_bundle(report, dir);

    std::cout << "seed " << report.seed << '\n';
    for (std::size_t n = 0; n < report.subprograms.size(); ++n) {
        const auto& c = report.subprograms[n].classification;
        std::cout << 'H' << n + 1 << ": theta = " << c.theta << ", delta = " << c.delta << ", "
                  << to_string(c.kind) << " (margin " << c.margin << ")\n";
    }
    for (const auto& m : report.stitching.mismatches) {
        std::cout << "warning: stitching boundary " << m.boundary << ": " << m.final_dim << " -> "
                  << m.next_initial << '\n';
    }
    std::cout << "diagram: " << report.diagram.distinct_points() << " points, total multiplicity "
              << report.diagram.total_multiplicity() << '\n';
    std::cout << "wrote " << dir.string() << '\n';
    return kOk;
}

int cmd_diagram(const Options& opt) {
    const Document doc = load_document(opt.input);
    if (doc.kind != Document::Kind::Report) {
        throw UsageError("diagram expects a report, got a " + std::string(kind_name(doc.kind)));
    }
    const ErrorDiagram diagram = rederive_diagram(report_from_json(doc.json));
    const std::string format = opt.format.empty() ? "json" : opt.format;
    if (format == "json") {
        emit(opt, diagram_to_text(diagram));
    } else if (format == "csv") {
        emit(opt, diagram_to_csv(diagram));
    } else {
        throw UsageError("diagram --format must be json or csv");
    }
    return kOk;
}

int cmd_compare(const Options& opt) {
    const Document a = load_document(opt.input);
    const Document b = load_document(opt.second);
    Comparison c;
    if (a.kind == Document::Kind::Report && b.kind == Document::Kind::Report) {
        c = compare_instances(report_from_json(a.json), report_from_json(b.json));
    } else {
        c = compare_diagrams(diagram_of(a), diagram_of(b), 1);
    }
    for (const auto& w : c.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    std::cout << c.distance.to_string() << '\n' << c.verdict << '\n';
    return kOk;
}

int cmd_render(const Options& opt) {
    const Document doc = load_document(opt.input);
    const std::string format = opt.format.empty() ? "ascii" : opt.format;
    if (doc.kind == Document::Kind::Graph || doc.kind == Document::Kind::Scenario) {
        Hrn h = doc.kind == Document::Kind::Graph ? import_graph(doc.json) : [&] {
            const Scenario s = load_scenario(doc.json);
            return build_hrn(s.m, s.cycle_lengths);
        }();
        const ValidationReport report = validate(h);
        if (!report.ok()) {
            std::cerr << report.to_string();
            return kDomain;
        }
        if (format == "ascii") {
            emit(opt, render_graph_ascii(h));
        } else if (format == "svg") {
            emit(opt, render_graph_svg(h));
        } else if (format == "dot") {
            emit(opt, to_dot(h));
        } else {
            throw UsageError("render --format must be ascii, svg or dot");
        }
        return kOk;
    }
    const ErrorDiagram diagram = diagram_of(doc);
    if (format == "ascii") {
        emit(opt, render_diagram_ascii(diagram));
    } else if (format == "svg") {
        emit(opt, render_diagram_svg(diagram));
    } else {
        throw UsageError("render --format must be ascii or svg for diagrams");
    }
    return kOk;
}

int cmd_check(const Options& opt) {
    const auto results = opt.seed ? checks::run_all(*opt.seed) : checks::run_all();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(90) << r.name << ' ' << r.detail
                  << '\n';
    }
    std::cout << (all ? "all checks passed\n" : "some checks failed\n");
    return all ? kOk : kDomain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Data flow, error detection and error persistence on hierarchical recurrent networks"};
    app.require_subcommand(1, 1);
    Options opt;

    auto* validate_cmd = app.add_subcommand("validate", "Check a scenario or HRN graph file");
    validate_cmd->add_option("scenario", opt.input, "Scenario or hrn-graph JSON")->required();

    auto* simulate_cmd = app.add_subcommand("simulate", "Run a scenario and write a report bundle");
    simulate_cmd->add_option("scenario", opt.input, "Scenario JSON")->required();
    simulate_cmd->add_option("--out", opt.out, "Bundle directory (default ./hrnflow-report)");

    auto* diagram_cmd = app.add_subcommand("diagram", "Re-derive the error diagram from a report");
    diagram_cmd->add_option("report", opt.input, "report.json or bundle directory")->required();
    diagram_cmd->add_option("--format", opt.format, "json (default) or csv");
    diagram_cmd->add_option("--out", opt.out, "Output file (default stdout)");

    auto* compare_cmd = app.add_subcommand("compare", "Bottleneck distance between two diagrams or reports");
    compare_cmd->add_option("first", opt.input, "Diagram (JSON or CSV), report or bundle")->required();
    compare_cmd->add_option("second", opt.second, "Diagram (JSON or CSV), report or bundle")->required();

    auto* render_cmd = app.add_subcommand("render", "Render a diagram or HRN graph");
    render_cmd->add_option("input", opt.input, "Diagram, report, hrn-graph or scenario")->required();
    render_cmd->add_option("--format", opt.format, "ascii (default), svg, or dot for graphs");
    render_cmd->add_option("--out", opt.out, "Output file (default stdout)");

    auto* check_cmd = app.add_subcommand("check", "Run the embedded property and oracle suite");

    for (auto* cmd : {validate_cmd, simulate_cmd}) {
        cmd->add_option("--seed", opt.seed, "Override the scenario seed");
        cmd->add_option("--policy.capacity-mode", opt.capacity_mode, "cap, reject or ignore")
            ->check(CLI::IsMember({"cap", "reject", "ignore"}));
        cmd->add_option("--policy.kernel-mode", opt.kernel_mode, "absolute or incremental")
            ->check(CLI::IsMember({"absolute", "incremental"}));
    }
    check_cmd->add_option("--seed", opt.seed, "Seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*validate_cmd) return cmd_validate(opt);
        if (*simulate_cmd) return cmd_simulate(opt);
        if (*diagram_cmd) return cmd_diagram(opt);
        if (*compare_cmd) return cmd_compare(opt);
        if (*render_cmd) return cmd_render(opt);
        if (*check_cmd) return cmd_check(opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kIo;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kDomain;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed document: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}
