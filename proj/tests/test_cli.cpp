#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "hrnflow/packet_sim.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string("\"") + HRNFLOW_CLI + "\" " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string scenario(const char* name) {
    return "\"" + (fs::path(HRNFLOW_SCENARIO_DIR) / name).string() + "\"";
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("hrnflow-cli-" + std::to_string(::getpid()))) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return "\"" + (path / name).string() + "\""; }
};

void write(const fs::path& p, const std::string& text) { hrnflow::write_text_file(p, text); }

} // namespace

TEST_CASE("validate exit codes") {
    TempDir tmp;
    CHECK(cli("validate " + scenario("toy_three_cycles.json")).status == 0);
    write(tmp.path / "bad.json", R"({"network": {"m": 2, "cycle_lengths": [3]}})");
    const Run bad = cli("validate " + (tmp / "bad.json"));
    CHECK(bad.status == 1);
    CHECK(bad.out.find("/network/cycle_lengths") != std::string::npos);
    CHECK(cli("validate " + (tmp / "absent.json")).status == 3);
    CHECK(cli("validate").status == 2);
    CHECK(cli("").status == 2);
    CHECK(cli("validate " + scenario("toy_three_cycles.json") + " --policy.capacity-mode sideways").status == 2);
}

TEST_CASE("simulate, diagram and compare") {
    TempDir tmp;
    const Run sim = cli("simulate " + scenario("toy_three_cycles.json") + " --out " + (tmp / "toy"));
    REQUIRE(sim.status == 0);
    CHECK(sim.out.find("H1: theta = 7") != std::string::npos);
    CHECK(sim.out.find("H2: theta = 0") != std::string::npos);
    CHECK(sim.out.find("H3: theta = 3") != std::string::npos);

    const Run diagram = cli("diagram " + (tmp / "toy"));
    CHECK(diagram.status == 0);
    CHECK(diagram.out == hrnflow::read_text_file(tmp.path / "toy" / "diagram.json"));
    CHECK(cli("diagram " + (tmp / "toy/report.json") + " --format csv").out == "birth,death,multiplicity\n2,inf,2\n");

    REQUIRE(cli("simulate " + scenario("all_sufficient.json") + " --out " + (tmp / "ok")).status == 0);
    CHECK(cli("diagram " + (tmp / "ok") + " --format csv").out == "birth,death,multiplicity\n");

    std::string report = hrnflow::read_text_file(tmp.path / "toy" / "report.json");
    const auto pos = report.find("\"multiplicity\": 2");
    REQUIRE(pos != std::string::npos);
    report.replace(pos, 17, "\"multiplicity\": 5");
    write(tmp.path / "tampered.json", report);
    const Run tampered = cli("diagram " + (tmp / "tampered.json"));
    CHECK(tampered.status == 1);
    CHECK(tampered.out.find("does not match") != std::string::npos);

    write(tmp.path / "a.csv", "birth,death,multiplicity\n1,3,1\n");
    write(tmp.path / "b.csv", "birth,death,multiplicity\n1,5,1\n");
    CHECK(cli("compare " + (tmp / "a.csv") + " " + (tmp / "a.csv")).out.starts_with("0\n"));
    CHECK(cli("compare " + (tmp / "a.csv") + " " + (tmp / "b.csv")).out.starts_with("2\n"));
    const Run inf = cli("compare " + (tmp / "a.csv") + " " + (tmp / "toy/diagram.json"));
    CHECK(inf.status == 0);
    CHECK(inf.out.starts_with("inf\n"));
    CHECK(cli("compare " + (tmp / "toy") + " " + (tmp / "toy")).out.starts_with("0\n"));
}

TEST_CASE("simulate policy overrides and failures") {
    TempDir tmp;
    const Run reject = cli("simulate " + scenario("reject_overflow.json") + " --out " + (tmp / "r"));
    CHECK(reject.status == 1);
    CHECK(reject.out.find("vertex 1") != std::string::npos);

    const Run capped = cli("simulate " + scenario("reject_overflow.json") + " --policy.capacity-mode cap --out " +
                           (tmp / "c"));
    CHECK(capped.status == 0);

    // Forcing cap on the first subprogram makes its initial dimension illegal.
    const Run forced = cli("simulate " + scenario("toy_three_cycles.json") + " --policy.capacity-mode cap --out " +
                           (tmp / "f"));
    CHECK(forced.status == 1);

    const Run seeded = cli("simulate " + scenario("random_packets.json") + " --seed 5 --out " + (tmp / "s"));
    CHECK(seeded.status == 0);
    CHECK(seeded.out.starts_with("seed 5\n"));
}

TEST_CASE("render") {
    TempDir tmp;
    write(tmp.path / "p.csv", "birth,death,multiplicity\n2,3,2\n");
    const Run ascii = cli("render " + (tmp / "p.csv"));
    CHECK(ascii.status == 0);
    CHECK(ascii.out.find("     3 |     2  .\n") != std::string::npos);
    CHECK(cli("render " + (tmp / "p.csv") + " --format svg").out.find("<svg") == 0);
    CHECK(cli("render " + (tmp / "p.csv") + " --format dot").status == 2);
    CHECK(cli("render " + (tmp / "p.csv") + " --format svg --out " + (tmp / "p.svg")).status == 0);
    CHECK(fs::exists(tmp.path / "p.svg"));
    CHECK(cli("render " + scenario("toy_three_cycles.json") + " --format dot").out.starts_with("digraph"));
}

TEST_CASE("check") {
    const Run r = cli("check");
    CHECK(r.status == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}
